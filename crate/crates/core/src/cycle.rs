//! The four-parameter 4-cycle row-stochastic matrix.
//!
//! Row `k` holds the self-loop weight `alpha[k]` on the diagonal and
//! `1 - alpha[k]` on the edge to the next vertex of the cycle:
//!
//! ```text
//! | a1  1-a1  0     0    |
//! | 0   a2    1-a2  0    |
//! | 0   0     a3    1-a3 |
//! | 1-a4 0    0     a4   |
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{solve_quartic, Complex, Tolerance};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawCycleMatrix")]
pub struct CycleMatrix4 {
    alpha: [f64; 4],
}

#[derive(Deserialize)]
struct RawCycleMatrix {
    alpha: [f64; 4],
}

impl TryFrom<RawCycleMatrix> for CycleMatrix4 {
    type Error = Error;

    fn try_from(raw: RawCycleMatrix) -> Result<Self> {
        Self::new(raw.alpha)
    }
}

impl CycleMatrix4 {
    /// Validates `0 <= alpha[k] < 1` for every `k`.
    pub fn new(alpha: [f64; 4]) -> Result<Self> {
        for (index, &value) in alpha.iter().enumerate() {
            if !(value.is_finite() && (0.0..1.0).contains(&value)) {
                return Err(Error::ParameterOutOfRange {
                    index: index + 1,
                    value,
                });
            }
        }
        Ok(Self { alpha })
    }

    /// All four self-loops equal to `alpha`.
    pub fn uniform(alpha: f64) -> Result<Self> {
        Self::new([alpha; 4])
    }

    /// The left-boundary family `(alpha, 0, 0, 0)`.
    pub fn left_boundary(alpha: f64) -> Result<Self> {
        Self::new([alpha, 0.0, 0.0, 0.0])
    }

    pub fn alpha(&self) -> [f64; 4] {
        self.alpha
    }

    /// Edge weights `t_k = 1 - alpha_k`, all in `(0, 1]`.
    pub fn t(&self) -> [f64; 4] {
        self.alpha.map(|a| 1.0 - a)
    }

    pub fn dense(&self) -> [[f64; 4]; 4] {
        let mut m = [[0.0; 4]; 4];
        for k in 0..4 {
            m[k][k] = self.alpha[k];
            m[k][(k + 1) % 4] = 1.0 - self.alpha[k];
        }
        m
    }

    /// Coefficients `[c4, c3, c2, c1, c0]` of
    /// `prod (z - alpha_k) - prod (1 - alpha_k)`.
    pub fn char_poly(&self) -> [f64; 5] {
        let [a1, a2, a3, a4] = self.alpha;
        let e1 = a1 + a2 + a3 + a4;
        let e2 = a1 * a2 + a1 * a3 + a1 * a4 + a2 * a3 + a2 * a4 + a3 * a4;
        let e3 = a1 * a2 * a3 + a1 * a2 * a4 + a1 * a3 * a4 + a2 * a3 * a4;
        let e4 = a1 * a2 * a3 * a4;
        let tprod: f64 = self.t().iter().product();
        [1.0, -e1, e2, -e3, e4 - tprod]
    }

    /// Eigenvalues sorted by `(re, im)`.
    pub fn spectrum(&self, tol: &Tolerance) -> Result<[Complex; 4]> {
        let [c4, c3, c2, c1, c0] = self.char_poly();
        solve_quartic(c4, c3, c2, c1, c0, tol).map_err(|e| Error::SpectrumFailure(e.to_string()))
    }

    /// `|prod (lam - alpha_k) - prod (1 - alpha_k)|`, the defect of `lam` in
    /// the multiplicative form of the characteristic equation.
    pub fn eigen_residual(&self, lam: Complex) -> f64 {
        let lhs = self
            .alpha
            .iter()
            .fold(Complex::new(1.0, 0.0), |acc, &a| acc * (lam - a));
        let rhs: f64 = self.t().iter().product();
        (lhs - rhs).norm()
    }

    /// `(1 - l) I + l A`, which maps every eigenvalue `s` to `(1 - l) + l s`.
    pub fn shrink(&self, l: f64) -> Result<Self> {
        if !(l.is_finite() && l > 0.0 && l <= 1.0) {
            return Err(Error::ShrinkOutOfRange(l));
        }
        Self::new(self.alpha.map(|a| (1.0 - l) + l * a))
    }
}
