//! Exact polynomials in two variables `a`, `b` over arbitrary-precision integers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    A,
    B,
}

/// Sparse map from exponent pairs `(i, j)` of `a^i b^j` to nonzero integers.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term((i, j), c.into());
        p
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::A => Self::monomial(1, 1, 0),
            Var::B => Self::monomial(1, 0, 1),
        }
    }

    pub fn a() -> Self {
        Self::var(Var::A)
    }

    pub fn b() -> Self {
        Self::var(Var::B)
    }

    fn add_term(&mut self, exp: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = BigInt::from(c);
        let mut out = Self::zero();
        for (&e, v) in &self.terms {
            out.add_term(e, v * &c);
        }
        out
    }

    /// Replaces `v` by `replacement` everywhere.
    pub fn substitute(&self, v: Var, replacement: &BivarPoly) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            let (kept, power) = match v {
                Var::A => (Self::monomial(c.clone(), 0, j), i),
                Var::B => (Self::monomial(c.clone(), i, 0), j),
            };
            out = &out + &(&kept * &replacement.pow(power));
        }
        out
    }

    pub fn eval_rational(&self, a: &BigRational, b: &BigRational) -> BigRational {
        let mut total = BigRational::zero();
        for (&(i, j), c) in &self.terms {
            total += BigRational::from_integer(c.clone()) * rpow(a, i) * rpow(b, j);
        }
        total
    }

    pub fn eval_f64(&self, a: f64, b: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(i, j), c)| {
                let c: f64 = c.to_string().parse().expect("integer coefficient");
                c * a.powi(i as i32) * b.powi(j as i32)
            })
            .sum()
    }
}

fn rpow(x: &BigRational, e: u32) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * x)
}

impl Add for &BivarPoly {
    type Output = BivarPoly;

    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;

    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;

    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;

    fn neg(self) -> BivarPoly {
        BivarPoly::zero().sub(self)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BivarPoly {
            type Output = BivarPoly;

            fn $m(self, rhs: BivarPoly) -> BivarPoly {
                (&self).$m(&rhs)
            }
        }

        impl $tr<&BivarPoly> for BivarPoly {
            type Output = BivarPoly;

            fn $m(self, rhs: &BivarPoly) -> BivarPoly {
                (&self).$m(rhs)
            }
        }

        impl $tr<BivarPoly> for &BivarPoly {
            type Output = BivarPoly;

            fn $m(self, rhs: BivarPoly) -> BivarPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BivarPoly {
    type Output = BivarPoly;

    fn neg(self) -> BivarPoly {
        -&self
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.0 + k.1, k.0)));
        for (n, key) in keys.into_iter().enumerate() {
            let c = &self.terms[key];
            let (i, j) = *key;
            let sign = if c.is_negative() { "-" } else { "+" };
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            let mut factors = Vec::new();
            if !mag.is_one() || (i == 0 && j == 0) {
                factors.push(mag.to_string());
            }
            for (name, e) in [("a", i), ("b", j)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
