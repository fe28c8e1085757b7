//! Exact verification of the polynomial identities used by the region proof.

mod poly;
mod suite;

pub use poly::{BivarPoly, Var};
pub use suite::{
    g_poly, identity_suite, n_poly, root_order_check, root_order_checks, verify_identity_suite,
    Identity, IdentityReport, IdentityStatus, RootOrderCheck,
};
pub use suite::{
    discriminant, factorization, imaginary_part, lower_root_vs_n_root, lower_root_vs_three_a_sq,
    quadratic_in_s, triple_angle_sin_cos, triple_angle_tangent,
};
