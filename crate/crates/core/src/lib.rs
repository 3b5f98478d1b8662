//! Exact computation of the polynomial sequence `P_n(x)` (OEIS A174531).
//!
//! The sequence is defined by `P_1 = P_2 = 1` and a two-branch recursion that
//! involves exact division by a linear polynomial. Every coefficient turns out
//! to be an integer, and `deg P_n = floor((n-1)/2)`.
//!
//! The crate builds the sequence along several independent routes and checks
//! them against each other:
//!
//! * [`pseq`]: the defining recursion (the reference oracle),
//! * [`explicit`]: closed-form values `P_n(k)` at integer points,
//! * [`identities`]: bisection, shift and homogeneous recursions plus the
//!   identities of the kernel `T_n(k)`,
//! * [`coeffs`]: power-basis and binomial-basis coefficient formulas,
//! * [`conjectures`]: executable checks of seven conjectured properties.
//!
//! All arithmetic is exact. The polynomial kernel in [`exact`] is generic over
//! the coefficient ring; the aliases below fix the types used everywhere else.

pub mod check;
pub mod coeffs;
pub mod conjectures;
pub mod error;
pub mod exact;
pub mod explicit;
pub mod export;
pub mod identities;
pub mod pseq;
pub mod suite;

pub use error::{Error, Result};
pub use exact::{Polynomial, Scalar};
pub use pseq::PSequence;

/// Arbitrary-precision signed integer.
pub type ExactInt = num_bigint::BigInt;
/// Exact rational in lowest terms with positive denominator.
pub type ExactRat = num_rational::BigRational;
/// Dense polynomial with rational coefficients.
pub type Poly = Polynomial<ExactRat>;
/// Dense polynomial with integer coefficients.
pub type IntPoly = Polynomial<ExactInt>;
