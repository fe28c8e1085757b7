//! The algebraic steps behind the boundary curve, checked as exact
//! zero-polynomial identities in `Z[a, b]`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::poly::{BivarPoly, Var};

fn a() -> BivarPoly {
    BivarPoly::a()
}

fn b() -> BivarPoly {
    BivarPoly::b()
}

fn k(c: i64) -> BivarPoly {
    BivarPoly::constant(c)
}

/// `G(a, b) = (b^2 + a^2 + a)^2 + 2a^2 - b^2`
pub fn g_poly() -> BivarPoly {
    (b().pow(2) + a().pow(2) + a()).pow(2) + a().pow(2).scale(2) - b().pow(2)
}

/// `N(a, b) = 4a^3 - 3a^2 - 4ab^2 + b^2`
pub fn n_poly() -> BivarPoly {
    a().pow(3).scale(4) - a().pow(2).scale(3) - (a() * b().pow(2)).scale(4) + b().pow(2)
}

/// `|lam|^2 = a^2 + b^2`
fn modulus_sq() -> BivarPoly {
    a().pow(2) + b().pow(2)
}

/// An identity `lhs_k = rhs_k` for every side pair.
#[derive(Debug, Clone, PartialEq)]
pub struct Identity {
    pub id: &'static str,
    pub description: &'static str,
    pub sides: Vec<(BivarPoly, BivarPoly)>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum IdentityStatus {
    ZeroPolynomial,
    Failed(BivarPoly),
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub id: &'static str,
    pub description: &'static str,
    pub status: IdentityStatus,
}

impl Identity {
    /// `lhs - rhs` for each side pair.
    pub fn residuals(&self) -> Vec<BivarPoly> {
        self.sides.iter().map(|(l, r)| l - r).collect()
    }

    /// Reports the first nonzero residual, if any.
    pub fn verify(&self) -> IdentityReport {
        let status = self
            .residuals()
            .into_iter()
            .find(|r| !r.is_zero())
            .map_or(IdentityStatus::ZeroPolynomial, IdentityStatus::Failed);
        IdentityReport {
            id: self.id,
            description: self.description,
            status,
        }
    }

    /// Copy with `delta` added to the right-hand side of pair `k`.
    pub fn perturbed(&self, k: usize, delta: &BivarPoly) -> Identity {
        let mut out = self.clone();
        out.sides[k].1 = &out.sides[k].1 + delta;
        out
    }
}

/// I1: `G` as a quadratic in `s = b^2`.
pub fn quadratic_in_s(g: &BivarPoly) -> Identity {
    // written in (a, s) with s held in the b slot, then s := b^2
    let s = b();
    let in_s = s.pow(2)
        + &s * &(a().pow(2).scale(2) + a().scale(2) - k(1))
        + (a().pow(2) + a()).pow(2)
        + a().pow(2).scale(2);
    Identity {
        id: "I1",
        description: "G(a,b) = s^2 + s(2a^2+2a-1) + (a^2+a)^2 + 2a^2 with s = b^2",
        sides: vec![(g.clone(), in_s.substitute(Var::B, &b().pow(2)))],
    }
}

/// I2: discriminant of the quadratic in `s`.
pub fn discriminant() -> Identity {
    let lin = a().pow(2).scale(2) + a().scale(2) - k(1);
    let cst = (a().pow(2) + a()).pow(2) + a().pow(2).scale(2);
    Identity {
        id: "I2",
        description: "discriminant (2a^2+2a-1)^2 - 4((a^2+a)^2+2a^2) = -(2a+1)(6a-1)",
        sides: vec![(
            lin.pow(2) - cst.scale(4),
            -((a().scale(2) + k(1)) * (a().scale(6) - k(1))),
        )],
    }
}

/// I3: squared form of `s_-(a) > 3a^2`.
pub fn lower_root_vs_three_a_sq() -> Identity {
    let lhs = (k(1) - a().scale(2) - a().pow(2).scale(8)).pow(2)
        - (a().scale(2) + k(1)) * (k(1) - a().scale(6));
    Identity {
        id: "I3",
        description: "(1-2a-8a^2)^2 - (2a+1)(1-6a) = 32a^3 + 64a^4",
        sides: vec![(lhs, a().pow(3).scale(32) + a().pow(4).scale(64))],
    }
}

/// I4: squared form of `s_-(a) > s_0(a)`.
pub fn lower_root_vs_n_root() -> Identity {
    let lhs = (k(1) - a().scale(6) + a().pow(3).scale(16)).pow(2)
        - (k(1) - a().scale(4)).pow(2) * (a().scale(2) + k(1)) * (k(1) - a().scale(6));
    Identity {
        id: "I4",
        description: "(1-6a+16a^3)^2 - (1-4a)^2(2a+1)(1-6a) = 256a^6",
        sides: vec![(lhs, a().pow(6).scale(256))],
    }
}

/// I5: `|lam|^6 - N = |lam - 1|^2 G`.
pub fn factorization(g: &BivarPoly, n: &BivarPoly) -> Identity {
    let dist_sq = (a() - k(1)).pow(2) + b().pow(2);
    Identity {
        id: "I5",
        description: "(a^2+b^2)^3 - N(a,b) = ((a-1)^2+b^2) G(a,b)",
        sides: vec![(modulus_sq().pow(3) - n, dist_sq * g)],
    }
}

/// Complex number with polynomial real and imaginary parts.
#[derive(Clone)]
struct ComplexPoly {
    re: BivarPoly,
    im: BivarPoly,
}

impl ComplexPoly {
    fn lambda() -> Self {
        Self { re: a(), im: b() }
    }

    fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    fn mul(&self, o: &Self) -> Self {
        Self {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn pow(&self, e: u32) -> Self {
        (0..e).fold(
            Self {
                re: BivarPoly::one(),
                im: BivarPoly::zero(),
            },
            |acc, _| acc.mul(self),
        )
    }

    fn minus_one(&self) -> Self {
        Self {
            re: &self.re - &k(1),
            im: self.im.clone(),
        }
    }
}

/// I6: imaginary part of `(lam^4 - 1)(conj(lam)^3 - 1)`.
pub fn imaginary_part(n: &BivarPoly) -> Identity {
    let lam = ComplexPoly::lambda();
    let prod = lam.pow(4).minus_one().mul(&lam.conj().pow(3).minus_one());
    Identity {
        id: "I6",
        description: "Im((lam^4-1)(conj(lam)^3-1)) = b(|lam|^6 - N(a,b))",
        sides: vec![(prod.im, b() * (modulus_sq().pow(3) - n))],
    }
}

/// I7: two forms of `tan 3m` agree (cross-multiplied).
pub fn triple_angle_tangent() -> Identity {
    let lhs = (a().pow(2) * b()).scale(3) - b().pow(3);
    let lhs_den = b().pow(2).scale(3) - a().pow(2);
    let rhs = b() * (b().pow(2) - a().pow(2).scale(3));
    let rhs_den = a().pow(2) - b().pow(2).scale(3);
    Identity {
        id: "I7",
        description: "(3a^2b-b^3)/(a(a^2-3b^2)) = b(b^2-3a^2)/(a(3b^2-a^2))",
        sides: vec![(lhs * lhs_den, rhs * rhs_den)],
    }
}

/// I8: `|lam|^3 sin 3m` and `|lam|^3 cos 3m` as polynomials.
pub fn triple_angle_sin_cos() -> Identity {
    let r2 = modulus_sq();
    Identity {
        id: "I8",
        description: "3b|lam|^2 - 4b^3 = b(3a^2-b^2) and 4a^3 - 3a|lam|^2 = a(a^2-3b^2)",
        sides: vec![
            (
                (b() * &r2).scale(3) - b().pow(3).scale(4),
                b() * (a().pow(2).scale(3) - b().pow(2)),
            ),
            (
                a().pow(3).scale(4) - (a() * &r2).scale(3),
                a() * (a().pow(2) - b().pow(2).scale(3)),
            ),
        ],
    }
}

/// All eight identities built from the canonical `G` and `N`.
pub fn identity_suite() -> Vec<Identity> {
    let g = g_poly();
    let n = n_poly();
    vec![
        quadratic_in_s(&g),
        discriminant(),
        lower_root_vs_three_a_sq(),
        lower_root_vs_n_root(),
        factorization(&g, &n),
        imaginary_part(&n),
        triple_angle_tangent(),
        triple_angle_sin_cos(),
    ]
}

pub fn verify_identity_suite() -> Vec<IdentityReport> {
    identity_suite().iter().map(Identity::verify).collect()
}

/// Exact sign checks of the two root comparisons at a rational `a` in `(0, 1/6)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootOrderCheck {
    pub a: BigRational,
    /// `s_-(a) > 3a^2`
    pub above_three_a_sq: bool,
    /// `s_-(a) > s_0(a)`
    pub above_n_root: bool,
}

/// Evaluates both comparisons through their squared forms, checking that the
/// un-squared sides are positive first.
pub fn root_order_check(a_val: &BigRational) -> RootOrderCheck {
    let zero = BigRational::zero();
    let at = |p: &BivarPoly| p.eval_rational(a_val, &zero);
    let disc = (a().scale(2) + k(1)) * (k(1) - a().scale(6));
    let step3_base = k(1) - a().scale(2) - a().pow(2).scale(8);
    let step5_base = k(1) - a().scale(6) + a().pow(3).scale(16);
    let step5_scale = (k(1) - a().scale(4)).pow(2);

    let d = at(&disc);
    let above_three_a_sq = d > zero && at(&step3_base) > zero && at(&step3_base.pow(2)) > d;
    let above_n_root = d > zero
        && at(&(k(1) - a().scale(4))) > zero
        && at(&step5_base) > zero
        && at(&step5_base.pow(2)) > at(&step5_scale) * &d;
    RootOrderCheck {
        a: a_val.clone(),
        above_three_a_sq,
        above_n_root,
    }
}

/// Root-order checks at `a = 1/100, ..., 16/100`.
pub fn root_order_checks() -> Vec<RootOrderCheck> {
    (1..=16)
        .map(|num| root_order_check(&BigRational::new(BigInt::from(num), BigInt::from(100))))
        .collect()
}
