//! Exact arithmetic kernel: dense univariate polynomials over an exact
//! coefficient ring, combinatorial numbers, discrete summation and
//! interpolation.

mod combinat;
mod poly;
mod summation;

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Zero};

pub use combinat::{
    binomial, binomial_basis_poly, double_factorial, factorial, falling_factorial, falling_factorial_poly,
    shifted_product, stirling2, Stirling2Table,
};
pub use poly::Polynomial;
pub(crate) use summation::solve_degree_preserving;
pub use summation::{forward_differences, indefinite_sum, lagrange_interpolate, PowerSums};

/// Coefficient ring for [`Polynomial`].
///
/// Any exact commutative ring with a conversion from machine integers
/// qualifies: `BigInt`, `BigRational`, `Ratio<i64>`, `i64`. Division is only
/// used where the ring is a field or the quotient is known to be exact.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive {
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("scalar type cannot represent a machine integer")
    }
}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Num + Neg<Output = T> + FromPrimitive {}

/// `num / den` as a reduced rational.
pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Lift an integer into the rationals.
pub fn rat(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

/// The integer value of `r`, if it has denominator one.
pub fn to_int(r: &BigRational) -> Option<BigInt> {
    r.is_integer().then(|| r.numer().clone())
}

/// `2^e` for `e >= 0`.
pub fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

/// `2^e` as a rational, negative exponents allowed.
pub fn pow2_rat(e: i64) -> BigRational {
    if e >= 0 {
        rat(pow2(e as u64))
    } else {
        BigRational::new(BigInt::one(), pow2(e.unsigned_abs()))
    }
}

impl Polynomial<BigRational> {
    /// Integer coefficients, or `None` if any coefficient has a denominator.
    pub fn to_integer(&self) -> Option<Polynomial<BigInt>> {
        self.coeffs()
            .iter()
            .map(to_int)
            .collect::<Option<Vec<_>>>()
            .map(Polynomial::from_coeffs)
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

impl Polynomial<BigInt> {
    pub fn to_rational(&self) -> Polynomial<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Greatest common divisor of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        self.coeffs().iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }
}
