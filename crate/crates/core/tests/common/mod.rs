#![allow(dead_code)]

use fourcycle::region::g;
use fourcycle::{Complex, CycleMatrix4};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut ChaCha8Rng) -> CycleMatrix4 {
    CycleMatrix4::new(std::array::from_fn(|_| rng.random::<f64>())).unwrap()
}

/// Strictly admissible point: b > 0, 0 < a < 1, a + b < 1, G > 0.
pub fn random_admissible(rng: &mut ChaCha8Rng) -> Complex {
    loop {
        let a: f64 = rng.random();
        let b: f64 = rng.random();
        if a > 0.0 && b > 0.0 && a + b < 1.0 - 1e-6 && g(a, b) > 1e-6 {
            return Complex::new(a, b);
        }
    }
}

/// Coefficients (highest degree first) of det(zI - A) by Leibniz expansion
/// over the 24 permutations, with every entry a polynomial of degree <= 1.
pub fn dense_char_poly(m: &[[f64; 4]; 4]) -> [f64; 5] {
    fn perms(prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == 4 {
            out.push(prefix.clone());
            return;
        }
        for k in 0..4 {
            if !prefix.contains(&k) {
                prefix.push(k);
                perms(prefix, out);
                prefix.pop();
            }
        }
    }
    fn sign(p: &[usize]) -> f64 {
        let mut inv = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 { 1.0 } else { -1.0 }
    }
    let mut all = Vec::new();
    perms(&mut Vec::new(), &mut all);
    // ascending coefficients
    let mut total = [0.0; 5];
    for p in all {
        let mut prod = vec![sign(&p)];
        for (i, &j) in p.iter().enumerate() {
            let entry = if i == j { vec![-m[i][j], 1.0] } else { vec![-m[i][j]] };
            let mut next = vec![0.0; prod.len() + entry.len() - 1];
            for (x, px) in prod.iter().enumerate() {
                for (y, ey) in entry.iter().enumerate() {
                    next[x + y] += px * ey;
                }
            }
            prod = next;
        }
        for (d, c) in prod.iter().enumerate() {
            total[d] += c;
        }
    }
    [total[4], total[3], total[2], total[1], total[0]]
}
