//! Membership in the spectral region and traces of its boundary pieces.
//!
//! Nonreal eigenvalues `a + ib` satisfy `0 <= a < 1`, `a + |b| <= 1` and
//! `G(a, |b|) >= 0`; real eigenvalues fill `[-1, 1]`. The right boundary
//! (CR) is the segment `1 - x + ix`, the left boundary (CL) is the branch of
//! `G = 0` from `i` to `0` traced by the matrices `(alpha, 0, 0, 0)`.

use serde::Serialize;

use crate::cycle::CycleMatrix4;
use crate::error::{Error, Result};
use crate::scalar::{Complex, Tolerance};

/// `(b^2 + a^2 + a)^2 + 2a^2 - b^2`
pub fn g(a: f64, b: f64) -> f64 {
    let q = b * b + a * a + a;
    q * q + 2.0 * a * a - b * b
}

/// `4a^3 - 3a^2 - 4ab^2 + b^2`
pub fn n(a: f64, b: f64) -> f64 {
    4.0 * a * a * a - 3.0 * a * a - 4.0 * a * b * b + b * b
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RegionStatus {
    InsideNonreal,
    InsideRealInterval,
    BoundaryCR,
    BoundaryCL,
    BoundaryRealEndpoint,
    Outside,
}

impl RegionStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            RegionStatus::InsideNonreal => "InsideNonreal",
            RegionStatus::InsideRealInterval => "InsideRealInterval",
            RegionStatus::BoundaryCR => "BoundaryCR",
            RegionStatus::BoundaryCL => "BoundaryCL",
            RegionStatus::BoundaryRealEndpoint => "BoundaryRealEndpoint",
            RegionStatus::Outside => "Outside",
        }
    }

    pub fn is_outside(&self) -> bool {
        matches!(self, RegionStatus::Outside)
    }
}

/// Constraint values `a`, `1 - a - |b|` and `G(a, |b|)` at the classified point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Binding {
    pub a: f64,
    pub right: f64,
    pub g: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegionVerdict {
    pub status: RegionStatus,
    pub binding: Binding,
}

/// Classifies `lam` against the region, using `boundary_band` as an absolute
/// band on the constraint values.
pub fn membership(lam: Complex, tol: &Tolerance) -> RegionVerdict {
    let band = tol.boundary_band();
    let a = lam.re;
    let b = lam.im.abs();
    let binding = Binding {
        a,
        right: 1.0 - a - b,
        g: g(a, b),
    };
    let status = if !(a.is_finite() && b.is_finite()) {
        RegionStatus::Outside
    } else if b < band {
        let dist = 1.0 - a.abs();
        if dist.abs() <= band {
            RegionStatus::BoundaryRealEndpoint
        } else if dist > 0.0 {
            RegionStatus::InsideRealInterval
        } else {
            RegionStatus::Outside
        }
    } else if a < -band || a >= 1.0 || binding.right < -band || binding.g < -band {
        RegionStatus::Outside
    } else if binding.right.abs() <= band {
        RegionStatus::BoundaryCR
    } else if binding.g.abs() <= band {
        RegionStatus::BoundaryCL
    } else {
        RegionStatus::InsideNonreal
    };
    RegionVerdict { status, binding }
}

/// `n` points `1 - x + ix`, `x` uniform on `[0, 1]`.
pub fn trace_cr(n: usize) -> Vec<Complex> {
    assert!(n >= 2, "trace needs at least two points");
    (0..n)
        .map(|j| {
            let x = j as f64 / (n - 1) as f64;
            Complex::new(1.0 - x, x)
        })
        .collect()
}

/// A point of the left boundary together with its generating parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClPoint {
    pub alpha: f64,
    pub lam: Complex,
}

/// The upper-half-plane nonreal eigenvalue of `(alpha, 0, 0, 0)`.
pub fn left_boundary_point(alpha: f64, tol: &Tolerance) -> Result<Complex> {
    let spectrum = CycleMatrix4::left_boundary(alpha)?.spectrum(tol)?;
    let mut upper: Vec<Complex> = spectrum.iter().copied().filter(|z| z.im > 0.0).collect();
    upper.sort_by(|p, q| q.im.total_cmp(&p.im));
    match upper.as_slice() {
        [] => Err(Error::SpectrumFailure(format!(
            "no nonreal eigenvalue for alpha = {alpha}"
        ))),
        [only] => Ok(*only),
        [first, second, ..] => {
            if (first.im - second.im).abs() <= tol.boundary_band() {
                Err(Error::SpectrumFailure(format!(
                    "two upper eigenvalues tie for alpha = {alpha}"
                )))
            } else {
                Ok(*first)
            }
        }
    }
}

/// `n` points of the left boundary for `alpha` uniform on `[0, 1 - 1/n]`.
pub fn trace_cl(n: usize, tol: &Tolerance) -> Result<Vec<ClPoint>> {
    assert!(n >= 2, "trace needs at least two points");
    let top = 1.0 - 1.0 / n as f64;
    (0..n)
        .map(|j| {
            let alpha = top * j as f64 / (n - 1) as f64;
            left_boundary_point(alpha, tol).map(|lam| ClPoint { alpha, lam })
        })
        .collect()
}
