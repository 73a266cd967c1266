//! Exact scalar fields and polynomial rings.
//!
//! Everything is exact: Gaussian rationals, multivariate polynomials and
//! rational functions over them, radical extension towers, and prime fields
//! for the modular rank backend.

mod extension;
mod gaussian;
mod membership;
mod poly;
mod primefield;
mod ratfunc;
mod traits;

pub use extension::{adjoin_fourth_root, adjoin_root, ExtensionElement, Tower};
pub use gaussian::{format_scalar, parse_scalar, rat, Gaussian, Rational};
pub use membership::{ideal_slice_membership, CertificateTerm, Membership};
pub use poly::{var_names, Monomial, MultiPoly, VarNames};
pub use primefield::{Fp, PrimeField, DEFAULT_PRIME};
pub use ratfunc::RationalFunction;
pub use traits::{ExactDiv, Field, GaussianAlgebra, Scalar};
