//! Complex scalars, principal arguments, tolerance policy and the quartic
//! root finder shared by the rest of the crate.

use std::cmp::Ordering;
use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};

pub use num_complex::Complex64 as Complex;

/// Rejects NaN or infinite components.
pub fn ensure_finite(w: Complex, what: &'static str) -> Result<()> {
    if w.re.is_finite() && w.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite(what))
    }
}

/// Principal argument in `(-π, π]`.
///
/// Negative zero imaginary parts are treated as zero, so the negative real
/// axis always maps to `π`.
pub fn principal_arg(w: Complex) -> Result<f64> {
    ensure_finite(w, "principal_arg")?;
    if w.re == 0.0 && w.im == 0.0 {
        return Err(Error::ZeroArgument);
    }
    let im = if w.im == 0.0 { 0.0 } else { w.im };
    let theta = im.atan2(w.re);
    // atan2 never returns exactly -π once the sign of zero is normalized,
    // but keep the half-open interval explicit.
    Ok(if theta <= -PI { theta + TAU } else { theta })
}

/// Numerical tolerances used across the toolkit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    eigen_residual: f64,
    boundary_band: f64,
    bisection_eps: f64,
    max_iter: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            eigen_residual: 1e-8,
            boundary_band: 1e-9,
            bisection_eps: 1e-12,
            max_iter: 200,
        }
    }
}

impl Tolerance {
    pub fn new(
        eigen_residual: f64,
        boundary_band: f64,
        bisection_eps: f64,
        max_iter: usize,
    ) -> Result<Self> {
        for (v, name) in [
            (eigen_residual, "eigen_residual must be positive"),
            (boundary_band, "boundary_band must be positive"),
            (bisection_eps, "bisection_eps must be positive"),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidTolerance(name));
            }
        }
        if max_iter == 0 {
            return Err(Error::InvalidTolerance("max_iter must be at least 1"));
        }
        Ok(Self {
            eigen_residual,
            boundary_band,
            bisection_eps,
            max_iter,
        })
    }

    pub fn with_eigen_residual(self, eigen_residual: f64) -> Result<Self> {
        Self::new(eigen_residual, self.boundary_band, self.bisection_eps, self.max_iter)
    }

    pub fn with_boundary_band(self, boundary_band: f64) -> Result<Self> {
        Self::new(self.eigen_residual, boundary_band, self.bisection_eps, self.max_iter)
    }

    pub fn eigen_residual(&self) -> f64 {
        self.eigen_residual
    }

    pub fn boundary_band(&self) -> f64 {
        self.boundary_band
    }

    pub fn bisection_eps(&self) -> f64 {
        self.bisection_eps
    }

    pub fn max_iter(&self) -> usize {
        self.max_iter
    }
}

/// Horner evaluation of `c[0] z^4 + c[1] z^3 + ... + c[4]`.
pub fn eval_quartic(coeffs: &[f64; 5], z: Complex) -> Complex {
    coeffs
        .iter()
        .fold(Complex::new(0.0, 0.0), |acc, &c| acc * z + c)
}

fn eval_with_derivative(coeffs: &[f64; 5], z: Complex) -> (Complex, Complex) {
    let mut p = Complex::new(0.0, 0.0);
    let mut dp = Complex::new(0.0, 0.0);
    for &c in coeffs {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Lexicographic order on `(re, im)`.
pub fn cmp_lex(a: &Complex, b: &Complex) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

/// All four roots of `c4 z^4 + c3 z^3 + c2 z^2 + c1 z + c0`, with multiplicity.
///
/// Weierstrass (Durand–Kerner) iteration from fixed initial guesses on the
/// circle of radius `1 + max |c_i / c4|`, one Newton polishing pass, then
/// real-axis snapping within `boundary_band` and exact conjugate pairing.
/// Output is sorted by `(re, im)`.
pub fn solve_quartic(c4: f64, c3: f64, c2: f64, c1: f64, c0: f64, tol: &Tolerance) -> Result<[Complex; 4]> {
    let coeffs = [c4, c3, c2, c1, c0];
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::NonFinite("quartic coefficient"));
    }
    if c4 == 0.0 {
        return Err(Error::DegenerateLeadingCoefficient);
    }
    let monic = [1.0, c3 / c4, c2 / c4, c1 / c4, c0 / c4];
    let radius = 1.0 + monic[1..].iter().fold(0.0_f64, |m, c| m.max(c.abs()));

    let mut roots: [Complex; 4] =
        std::array::from_fn(|k| Complex::from_polar(radius, 0.4 + k as f64 * PI / 2.0));

    let mut converged = false;
    for _ in 0..tol.max_iter() {
        let mut max_step = 0.0_f64;
        for k in 0..4 {
            let zk = roots[k];
            let denom = (0..4)
                .filter(|&j| j != k)
                .fold(Complex::new(1.0, 0.0), |acc, j| acc * (zk - roots[j]));
            if denom.norm() == 0.0 {
                // coincident iterates; nudge off the collision
                roots[k] = zk + Complex::new(1e-10, 1e-10) * radius;
                max_step = f64::INFINITY;
                continue;
            }
            let step = eval_quartic(&monic, zk) / denom;
            roots[k] = zk - step;
            max_step = max_step.max(step.norm() / zk.norm().max(1.0));
        }
        if max_step <= 1e-15 {
            converged = true;
            break;
        }
    }

    for r in roots.iter_mut() {
        let (p, dp) = eval_with_derivative(&monic, *r);
        if dp.norm() > 0.0 {
            let candidate = *r - p / dp;
            if eval_quartic(&monic, candidate).norm() <= p.norm() {
                *r = candidate;
            }
        }
    }

    let scale = coeffs.iter().map(|c| c.abs()).sum::<f64>().max(1.0);
    let limit = tol.eigen_residual() * scale;
    let within = roots
        .iter()
        .all(|r| eval_quartic(&coeffs, *r).norm() <= limit);
    if !converged && !within {
        return Err(Error::NoConvergence(tol.max_iter()));
    }

    let band = tol.boundary_band();
    for r in roots.iter_mut() {
        if r.im.abs() < band {
            r.im = 0.0;
        }
    }
    pair_conjugates(&mut roots)?;
    roots.sort_by(cmp_lex);
    Ok(roots)
}

/// Forces nonreal roots into exact conjugate pairs.
fn pair_conjugates(roots: &mut [Complex; 4]) -> Result<()> {
    let upper: Vec<usize> = (0..4).filter(|&i| roots[i].im > 0.0).collect();
    let mut lower: Vec<usize> = (0..4).filter(|&i| roots[i].im < 0.0).collect();
    if upper.len() != lower.len() {
        return Err(Error::NoConvergence(0));
    }
    for &u in &upper {
        let target = roots[u].conj();
        let (pos, _) = lower
            .iter()
            .enumerate()
            .min_by(|(_, &p), (_, &q)| {
                (roots[p] - target)
                    .norm()
                    .total_cmp(&(roots[q] - target).norm())
            })
            .expect("lower half has as many roots as upper half");
        let l = lower.swap_remove(pos);
        let merged = Complex::new(
            0.5 * (roots[u].re + roots[l].re),
            0.5 * (roots[u].im - roots[l].im),
        );
        roots[u] = merged;
        roots[l] = merged.conj();
    }
    Ok(())
}
