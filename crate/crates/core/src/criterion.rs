//! Argument parametrization of the characteristic equation.
//!
//! With `z = lam - 1 = x + iy` (`y > 0`) and `t_k = 1 - alpha_k`, the
//! equation `prod (z + t_k) = prod t_k` is equivalent to finding angles
//! `u_k = Arg(z + t_k)` in `[m, M)` with `sum u_k = 2π` and
//! `sum F(u_k) = 0`, where `m = Arg(lam)`, `M = Arg(lam - 1)` and
//! `F(u) = log|z + t(u)| - log t(u)`. `F` is strictly convex, so `Ψ = sum F`
//! is bounded below by `4 F(π/2)` on the feasible set `P`, and is either
//! unbounded above (`3m + M <= 2π`) or maximized at `(U, m, m, m)` with
//! `U = 2π - 3m`.

use std::f64::consts::{FRAC_PI_2, TAU};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::region;
use crate::scalar::{ensure_finite, principal_arg, Complex, Tolerance};

/// Slack below `m` accepted for angles produced by floating-point sums.
const ANGLE_SLACK: f64 = 1e-12;
/// Allowed drift of `sum u_k` from `2π`.
const HYPERPLANE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Regime {
    /// `3m + M <= 2π`: `Ψ` is unbounded above on `P`.
    Unbounded,
    /// `3m + M > 2π`: `Ψ` attains its maximum at a permutation of `(U, m, m, m)`.
    Tight,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriterionContext {
    lam: Complex,
    x: f64,
    y: f64,
    m: f64,
    big_m: f64,
    regime: Regime,
    u_max: Option<f64>,
}

impl CriterionContext {
    /// Builds the context for `lam` in the open upper half-plane with `re < 1`.
    pub fn new(lam: Complex) -> Result<Self> {
        ensure_finite(lam, "criterion point")?;
        if lam.im == 0.0 {
            return Err(Error::NonrealRequired);
        }
        if lam.im < 0.0 {
            return Err(Error::LowerHalfPlane);
        }
        if lam.re >= 1.0 {
            return Err(Error::FeasibilityViolation(format!(
                "Re(lambda) = {} is not below 1",
                lam.re
            )));
        }
        let m = principal_arg(lam)?;
        let big_m = principal_arg(lam - 1.0)?;
        let (regime, u_max) = if 3.0 * m + big_m > TAU {
            (Regime::Tight, Some(TAU - 3.0 * m))
        } else {
            (Regime::Unbounded, None)
        };
        Ok(Self {
            lam,
            x: lam.re - 1.0,
            y: lam.im,
            m,
            big_m,
            regime,
            u_max,
        })
    }

    pub fn lam(&self) -> Complex {
        self.lam
    }

    pub fn z(&self) -> Complex {
        Complex::new(self.x, self.y)
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    /// `Arg(lam)`, the angle at `t = 1`.
    pub fn m(&self) -> f64 {
        self.m
    }

    /// `Arg(lam - 1)`, the limit angle as `t -> 0`.
    pub fn big_m(&self) -> f64 {
        self.big_m
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    /// `U = 2π - 3m`, present in the tight regime only.
    pub fn u_max(&self) -> Option<f64> {
        self.u_max
    }

    fn check_angle(&self, u: f64) -> Result<()> {
        if u.is_finite() && u >= self.m - ANGLE_SLACK && u < self.big_m {
            Ok(())
        } else {
            Err(Error::ArgumentOutOfRange {
                value: u,
                lo: self.m,
                hi: self.big_m,
            })
        }
    }

    // y cot u - x, written as |z| sin(M - u) / sin u so that it keeps full
    // relative precision as u approaches M.
    fn t_raw(&self, u: f64) -> f64 {
        self.t_from_gap(u, self.big_m - u)
    }

    fn f_raw(&self, u: f64) -> f64 {
        (self.y / u.sin()).ln() - self.t_raw(u).ln()
    }

    /// `t(u) = y cot u - x` on `[m, M)`.
    pub fn t_of_u(&self, u: f64) -> Result<f64> {
        self.check_angle(u)?;
        Ok(self.t_raw(u))
    }

    /// `u(t) = Arg(z + t)` on `(0, 1]`.
    pub fn u_of_t(&self, t: f64) -> Result<f64> {
        if !(t.is_finite() && t > 0.0 && t <= 1.0) {
            return Err(Error::ArgumentOutOfRange {
                value: t,
                lo: 0.0,
                hi: 1.0,
            });
        }
        Ok(self.y.atan2(self.x + t))
    }

    /// `F(u) = log(y csc u) - log(y cot u - x)`.
    pub fn f(&self, u: f64) -> Result<f64> {
        self.check_angle(u)?;
        Ok(self.f_raw(u))
    }

    /// `F(u) = log|z + t(u)| - log t(u)`, evaluated through the modulus.
    pub fn f_by_modulus(&self, u: f64) -> Result<f64> {
        let t = self.t_of_u(u)?;
        Ok((self.z() + t).norm().ln() - t.ln())
    }

    /// `F''(u) = (x^2 + y^2) / ((y cot u - x)^2 sin^2 u)`.
    pub fn f_second_derivative(&self, u: f64) -> Result<f64> {
        let t = self.t_of_u(u)?;
        let s = u.sin();
        Ok((self.x * self.x + self.y * self.y) / (t * t * s * s))
    }

    fn psi_raw(&self, u: &[f64; 4]) -> f64 {
        u.iter().map(|&v| self.f_raw(v)).sum()
    }

    /// `Ψ(u) = sum F(u_k)` on the feasible set `P`.
    pub fn psi(&self, u: [f64; 4]) -> Result<f64> {
        for &v in &u {
            self.check_angle(v)
                .map_err(|_| Error::InfeasiblePoint(format!("angle {v} outside [m, M)")))?;
        }
        let drift = u.iter().sum::<f64>() - TAU;
        if drift.abs() > HYPERPLANE_TOL {
            return Err(Error::InfeasiblePoint(format!(
                "angles sum to 2π{drift:+e}"
            )));
        }
        Ok(self.psi_raw(&u))
    }

    /// `sup_P Ψ`: `+inf` in the unbounded regime, `3F(m) + F(U)` otherwise.
    pub fn max_psi(&self) -> f64 {
        match self.u_max {
            None => f64::INFINITY,
            Some(u) => 3.0 * self.f_raw(self.m) + self.f_raw(u),
        }
    }

    /// `log(|lam|^6 / N(a, b))`, the closed form of the tight-regime maximum.
    pub fn max_psi_closed_form(&self) -> Option<f64> {
        self.u_max?;
        let r2 = self.lam.norm_sqr();
        Some((r2 * r2 * r2 / region::n(self.lam.re, self.lam.im)).ln())
    }

    // t from an angle and its precomputed distance to M; |z| stands in for
    // y / sin M, which loses precision when M is close to π
    fn t_from_gap(&self, u: f64, gap: f64) -> f64 {
        (self.x.hypot(self.y) * gap.sin() / u.sin()).min(1.0)
    }

    fn path_psi(&self, p: &PathPoint) -> f64 {
        (0..4)
            .map(|k| (self.y / p.u[k].sin()).ln() - self.t_from_gap(p.u[k], p.gap[k]).ln())
            .sum()
    }

    fn path_t(&self, p: &PathPoint) -> [f64; 4] {
        std::array::from_fn(|k| self.t_from_gap(p.u[k], p.gap[k]))
    }

    /// Edge weights `t_1..t_4` in `(0, 1]` with `prod (z + t_k) = prod t_k`.
    ///
    /// Bisects `Ψ` along the segment from the barycenter `(π/2, ..., π/2)`,
    /// where `Ψ = 4 log(b / (1 - a)) < 0`, to a point `w` with `Ψ(w) >= 0`:
    /// `(U, m, m, m)` in the tight regime, and a point with three equal
    /// angles and the fourth pushed toward `M` in the unbounded regime.
    ///
    /// The segment is parametrized from the `w` end and every coordinate
    /// carries its distance to `M`, so angles close to `M` keep full relative
    /// precision in `t`. The coordinate farthest from `M` is eliminated
    /// through `sum u_k = 2π`. Bisection stops once `|Ψ| <= bisection_eps`
    /// or the bracket cannot be split.
    pub fn solve(&self, tol: &Tolerance) -> Result<[f64; 4]> {
        let a = self.lam.re;
        let b = self.lam.im;
        if a < 0.0 {
            return Err(Error::FeasibilityViolation(format!(
                "Re(lambda) = {a} is negative, so 4m > 2π"
            )));
        }
        let anchor = 4.0 * (b / (1.0 - a)).ln();
        if anchor.abs() <= tol.boundary_band() {
            // on the right segment: the barycenter already solves Ψ = 0
            return Ok([1.0 - a; 4]);
        }
        if anchor > 0.0 {
            return Err(Error::NotRealizable(format!("a + b = {} exceeds 1", a + b)));
        }

        let target = match self.u_max {
            Some(u) => {
                let gap_u = 3.0 * self.m + self.big_m - TAU;
                let gap_m = self.big_m - self.m;
                let target = Target {
                    w: [u, self.m, self.m, self.m],
                    gap: [gap_u, gap_m, gap_m, gap_m],
                    eliminated: 1,
                };
                let top = self.path_psi(&target.at(0.0, self.big_m));
                if top < -tol.boundary_band() {
                    return Err(Error::NotRealizable(format!(
                        "max Ψ = {top:e} < 0 (G = {:e})",
                        region::g(a, b)
                    )));
                }
                if top <= 0.0 {
                    return Ok(self.path_t(&target.at(0.0, self.big_m)));
                }
                target
            }
            None => self.unbounded_target(tol)?,
        };

        // sigma = 0 is w (Ψ >= 0), sigma = 1 is the barycenter (Ψ < 0)
        let (mut pos, mut neg) = (0.0_f64, 1.0_f64);
        let mut psi_pos = self.path_psi(&target.at(pos, self.big_m));
        let mut psi_neg = anchor;
        for _ in 0..tol.max_iter() {
            if psi_pos.abs().min(psi_neg.abs()) <= tol.bisection_eps() {
                break;
            }
            let mid = 0.5 * (pos + neg);
            if mid <= pos || mid >= neg {
                break;
            }
            let point = target.at(mid, self.big_m);
            let value = self.path_psi(&point);
            if value == 0.0 {
                return Ok(self.path_t(&point));
            }
            if value < 0.0 {
                neg = mid;
                psi_neg = value;
            } else {
                pos = mid;
                psi_pos = value;
            }
        }
        let sigma = if psi_pos.abs() <= psi_neg.abs() { pos } else { neg };
        Ok(self.path_t(&target.at(sigma, self.big_m)))
    }

    // Three equal angles and a fourth driven toward M. The fourth angle is
    // generated from a shrinking t, with its distance to M taken as
    // Arg(z conj(z + t)) so that it stays resolved far below ulp(M).
    fn unbounded_target(&self, tol: &Tolerance) -> Result<Target> {
        let lo = self.m.max(TAU - 3.0 * self.big_m).max(FRAC_PI_2);
        let r2 = self.x * self.x + self.y * self.y;
        let mut t = self.t_raw(lo);
        for _ in 0..tol.max_iter() {
            t *= 0.5;
            if t == 0.0 {
                break;
            }
            let gap = (self.y * t).atan2(r2 + self.x * t);
            let u4 = self.big_m - gap;
            let rest = (TAU - u4) / 3.0;
            let target = Target {
                w: [rest, rest, rest, u4],
                gap: [self.big_m - rest, self.big_m - rest, self.big_m - rest, gap],
                eliminated: 0,
            };
            if self.path_psi(&target.at(0.0, self.big_m)) > 0.0 {
                return Ok(target);
            }
        }
        Err(Error::NoConvergence(tol.max_iter()))
    }
}

/// End point of the bisection segment, with each coordinate's distance to `M`.
struct Target {
    w: [f64; 4],
    gap: [f64; 4],
    eliminated: usize,
}

struct PathPoint {
    u: [f64; 4],
    gap: [f64; 4],
}

impl Target {
    /// `w + sigma (π/2 - w)`, with the eliminated coordinate closing the sum.
    fn at(&self, sigma: f64, big_m: f64) -> PathPoint {
        let mut u = [0.0; 4];
        let mut gap = [0.0; 4];
        for k in (0..4).filter(|&k| k != self.eliminated) {
            let pull = FRAC_PI_2 - self.w[k];
            u[k] = self.w[k] + sigma * pull;
            gap[k] = self.gap[k] - sigma * pull;
        }
        let e = self.eliminated;
        u[e] = TAU - (0..4).filter(|&k| k != e).map(|k| u[k]).sum::<f64>();
        gap[e] = big_m - u[e];
        PathPoint { u, gap }
    }
}

/// Parameters `t_1..t_4` realizing `lam` (upper half-plane) via the criterion.
pub fn solve_criterion(lam: Complex, tol: &Tolerance) -> Result<[f64; 4]> {
    CriterionContext::new(lam)?.solve(tol)
}
