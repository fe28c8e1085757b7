//! Explicit realizing matrices for every point of the region.
//!
//! Real points and the right segment use equal self-loops, the left curve
//! uses `(alpha, 0, 0, 0)` with `alpha = (mu^4 - 1) / (mu^3 - 1)`, and an
//! interior point `lam` is reached by following the ray from `1` through
//! `lam` to the left curve at `mu` and shrinking that boundary matrix toward
//! the identity: `(1 - l) I + l A` has eigenvalue `(1 - l) + l mu = lam`.

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::criterion::solve_criterion;
use crate::cycle::CycleMatrix4;
use crate::error::{Error, Result};
use crate::region::{self, membership, RegionStatus};
use crate::scalar::{ensure_finite, Complex, Tolerance};

/// Largest admissible `|Im alpha|` when inverting the left-curve map.
const CURVE_IMAG_TOL: f64 = 1e-8;
/// Target `|G|` at the ray/curve intersection.
const RAY_G_TOL: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    RealInterval,
    BoundaryCR,
    BoundaryCL,
    InteriorShrink,
    CriterionSolver,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::RealInterval => "RealInterval",
            Method::BoundaryCR => "BoundaryCR",
            Method::BoundaryCL => "BoundaryCL",
            Method::InteriorShrink => "InteriorShrink",
            Method::CriterionSolver => "CriterionSolver",
        }
    }
}

/// A matrix whose spectrum contains `lam`, plus how it was built.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Realization {
    pub matrix: CycleMatrix4,
    pub lam: Complex,
    pub method: Method,
    pub mu: Option<Complex>,
    pub shrink_l: Option<f64>,
    pub residual: f64,
}

impl Serialize for Realization {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("alpha", &self.matrix.alpha())?;
        map.serialize_entry("method", self.method.as_str())?;
        if let Some(mu) = self.mu {
            map.serialize_entry("mu", &[mu.re, mu.im])?;
        }
        if let Some(l) = self.shrink_l {
            map.serialize_entry("l", &l)?;
        }
        map.serialize_entry("residual", &self.residual)?;
        map.end()
    }
}

/// Recovers the left-curve parameter from a point `mu` of the curve.
pub fn alpha_l_of_mu(mu: Complex) -> Result<f64> {
    ensure_finite(mu, "mu")?;
    if mu.im <= 0.0 {
        return Err(Error::NotOnCurve(f64::NAN));
    }
    let mu3 = mu * mu * mu;
    let ratio = (mu3 * mu - 1.0) / (mu3 - 1.0);
    if ratio.im.abs() > CURVE_IMAG_TOL {
        return Err(Error::NotOnCurve(ratio.im.abs()));
    }
    // clears -0.0 and rounding just below zero near mu = i
    let alpha = if ratio.re < 0.0 && ratio.re > -1e-12 { 0.0 } else { ratio.re + 0.0 };
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    Ok(alpha)
}

/// Intersects the ray `1 + s (lam - 1)`, `s >= 1`, with the curve `G = 0`.
///
/// Returns `(mu, s)`. The bracket is `[1, s0]` where `s0 = 1 / (1 - a)` puts
/// the ray on the imaginary axis; there `G(0, b') = b'^2 (b'^2 - 1) < 0`.
pub fn ray_hit_cl(lam: Complex, tol: &Tolerance) -> Result<(Complex, f64)> {
    ensure_finite(lam, "lambda")?;
    let (a, b) = (lam.re, lam.im);
    let g_lam = region::g(a, b);
    if !(b > 0.0 && a > 0.0 && a < 1.0 && a + b < 1.0 && g_lam > 0.0) {
        return Err(Error::NotInterior(format!(
            "a = {a}, b = {b}, a + b = {}, G = {g_lam:e}",
            a + b
        )));
    }
    let dir = lam - 1.0;
    let at = |s: f64| Complex::new(1.0, 0.0) + dir * s;
    let h = |s: f64| {
        let p = at(s);
        region::g(p.re, p.im)
    };

    let mut hi = 1.0 / (1.0 - a);
    if h(hi) >= 0.0 {
        hi *= 1.0 + 1e-6;
        if h(hi) >= 0.0 {
            return Err(Error::BracketFailure(format!(
                "G stays nonnegative up to s = {hi}"
            )));
        }
    }
    let mut lo = 1.0;
    let (mut best_s, mut best_h) = (hi, h(hi).abs());
    for _ in 0..tol.max_iter() {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let value = h(mid);
        if value.abs() < best_h {
            best_s = mid;
            best_h = value.abs();
        }
        if best_h <= RAY_G_TOL {
            break;
        }
        if value > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((at(best_s), best_s))
}

fn finish(
    matrix: CycleMatrix4,
    lam: Complex,
    method: Method,
    mu: Option<Complex>,
    shrink_l: Option<f64>,
    tol: &Tolerance,
) -> Result<Realization> {
    let residual = matrix.eigen_residual(lam);
    if residual.is_nan() || residual >= tol.eigen_residual() {
        return Err(Error::ResidualTooLarge {
            residual,
            limit: tol.eigen_residual(),
        });
    }
    Ok(Realization {
        matrix,
        lam,
        method,
        mu,
        shrink_l,
        residual,
    })
}

/// Builds a 4-cycle matrix having `lam` as an eigenvalue.
pub fn realize(lam: Complex, tol: &Tolerance) -> Result<Realization> {
    ensure_finite(lam, "lambda")?;
    let verdict = membership(lam, tol);
    let upper = if lam.im < 0.0 { lam.conj() } else { lam };
    match verdict.status {
        RegionStatus::Outside => Err(Error::OutsideRegion),
        RegionStatus::InsideRealInterval | RegionStatus::BoundaryRealEndpoint => {
            // x = (1 - r) / 2 and alpha = 1 - x; r = 1 is an eigenvalue of
            // every member, so the permutation matrix stands in for alpha = 1.
            let alpha = (1.0 + lam.re) / 2.0;
            let alpha = if alpha >= 1.0 { 0.0 } else { alpha.max(0.0) };
            finish(CycleMatrix4::uniform(alpha)?, lam, Method::RealInterval, None, None, tol)
        }
        RegionStatus::BoundaryCR => {
            let alpha = (1.0 - upper.im).max(0.0);
            finish(CycleMatrix4::uniform(alpha)?, lam, Method::BoundaryCR, None, None, tol)
        }
        RegionStatus::BoundaryCL => {
            let alpha = alpha_l_of_mu(upper)?;
            finish(
                CycleMatrix4::left_boundary(alpha)?,
                lam,
                Method::BoundaryCL,
                Some(upper),
                None,
                tol,
            )
        }
        RegionStatus::InsideNonreal => {
            let (mu, s) = ray_hit_cl(upper, tol)?;
            let base = CycleMatrix4::left_boundary(alpha_l_of_mu(mu)?)?;
            let l = 1.0 / s;
            finish(base.shrink(l)?, lam, Method::InteriorShrink, Some(mu), Some(l), tol)
        }
    }
}

/// Builds a realizing matrix straight from the argument criterion.
pub fn realize_via_criterion(lam: Complex, tol: &Tolerance) -> Result<Realization> {
    ensure_finite(lam, "lambda")?;
    if membership(lam, tol).status.is_outside() {
        return Err(Error::OutsideRegion);
    }
    let upper = if lam.im < 0.0 { lam.conj() } else { lam };
    let t = solve_criterion(upper, tol)?;
    let matrix = CycleMatrix4::new(t.map(|tk| 1.0 - tk))?;
    finish(matrix, lam, Method::CriterionSolver, None, None, tol)
}
