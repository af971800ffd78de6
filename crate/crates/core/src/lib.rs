//! Exact-arithmetic q-Clifford analysis on homogeneous polynomials.
//!
//! The crate builds up, over exact rationals only:
//! - q-numbers, q-factorials and multi-indices ([`qcore`]),
//! - the real Clifford algebra Cl(0,n+1) with bitmask blades ([`clifford`]),
//! - sparse Clifford-valued polynomials with the q-deformed operators:
//!   q-partial derivatives, the 1/q-antiderivative in `x0`, Dirac operators
//!   and Laplacians ([`qpoly`]),
//! - the Fischer inner product, Fischer decompositions and an exact
//!   q-Poisson solver ([`fischer`]),
//! - the conjugate (1/q,q)-harmonic construction: for a (1/q,q)-harmonic
//!   `U_k` it produces `V_k` such that `F = U_k + ē_0 V_k` is
//!   (1/q,q)-monogenic ([`conjugate`]),
//! - a complex q-analytic polynomial toolkit ([`qcomplex`]).
//!
//! Every identity in the library is checkable by exact rational equality;
//! there is no floating point anywhere.

pub mod clifford;
pub mod conjugate;
pub mod error;
pub mod fischer;
pub mod linalg;
pub mod qcomplex;
pub mod qcore;
pub mod qpoly;

pub use clifford::{blade_mul, Blade, CliffordElement};
pub use conjugate::{
    check_harmonic_full, check_monogenic_full, conjugate_real, construct_conjugate,
    verify_theorem2, ConjugateRealResult, ConjugateResult, HarmonicCheck, MonogenicCheck,
    Theorem2Report,
};
pub use error::{Error, Result};
pub use fischer::{
    check_adjointness, decompose_harmonic, decompose_monogenic, fischer_ip,
    fischer_ip_differential, kernel_basis, monomial_basis, radius_sq_quotient, solve_q_poisson,
    AdjointnessReport, FischerBasis, KernelOperator, ValueSpace,
};
pub use qcomplex::{ck_extend, dbar_q, q_binomial_z, zq_split, ComplexQPolynomial};
pub use qcore::{
    parse_rational, q_binomial_coeff, q_factorial, q_int, q_multiindex_factorial, MultiIndex,
    QContext, Rational,
};
pub use qpoly::{CliffordPolynomial, Deformation, HomogeneousPolynomial};
