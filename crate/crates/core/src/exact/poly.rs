use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::Scalar;
use crate::error::{Error, Result};

/// Dense univariate polynomial, `coeffs[i]` multiplying `x^i`.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![T::zero(), T::one()])
    }

    /// `slope * x + intercept`
    pub fn linear(slope: T, intercept: T) -> Self {
        Self::from_coeffs(vec![intercept, slope])
    }

    /// `x + c` for a machine integer `c`.
    pub fn x_plus(c: i64) -> Self {
        Self::linear(T::one(), T::from_int(c))
    }

    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Build from coefficients listed highest power first.
    pub fn from_descending(mut coeffs: Vec<T>) -> Self {
        coeffs.reverse();
        Self::from_coeffs(coeffs)
    }

    pub fn from_ints(ascending: &[i64]) -> Self {
        Self::from_coeffs(ascending.iter().map(|&c| T::from_int(c)).collect())
    }

    /// Ascending coefficients.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficients highest power first.
    pub fn descending(&self) -> Vec<T> {
        self.coeffs.iter().rev().cloned().collect()
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> Polynomial<U> {
        Polynomial::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, factor: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.clone() * factor.clone()).collect())
    }

    /// Divide every coefficient by `d`. Only meaningful over a field or when
    /// `d` divides every coefficient.
    pub fn div_scalar(&self, d: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.clone() / d.clone()).collect())
    }

    /// The polynomial `q(x) = p(x + delta)`.
    pub fn shift(&self, delta: &T) -> Self {
        if delta.is_zero() || self.coeffs.len() < 2 {
            return self.clone();
        }
        let mut a = self.coeffs.clone();
        let d = a.len() - 1;
        for i in 0..d {
            for j in (i..d).rev() {
                let carry = a[j + 1].clone() * delta.clone();
                a[j] = a[j].clone() + carry;
            }
        }
        Self::from_coeffs(a)
    }

    /// `p(x + delta)` for a machine-integer shift.
    pub fn shift_int(&self, delta: i64) -> Self {
        self.shift(&T::from_int(delta))
    }

    /// The quotient `q` with `self = q * den`, or `NonZeroRemainder` if no
    /// such polynomial exists over the coefficient ring.
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        let dd = den.degree().ok_or(Error::DivisionByZero)?;
        let Some(dn) = self.degree() else {
            return Ok(Self::zero());
        };
        if dn < dd {
            return Err(Error::NonZeroRemainder);
        }
        let lead = den.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); dn - dd + 1];
        for i in (0..=dn - dd).rev() {
            let top = rem[i + dd].clone();
            if top.is_zero() {
                continue;
            }
            let q = top.clone() / lead.clone();
            if q.clone() * lead.clone() != top {
                return Err(Error::NonZeroRemainder);
            }
            for (j, dc) in den.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - q.clone() * dc.clone();
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonZeroRemainder);
        }
        Ok(Self::from_coeffs(quot))
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        self.map(|c| -c.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, rhs: Self) -> Polynomial<T> {
                (&self).$m(&rhs)
            }
        }
        impl<T: Scalar> $tr<&Polynomial<T>> for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, rhs: &Polynomial<T>) -> Polynomial<T> {
                (&self).$m(rhs)
            }
        }
        impl<T: Scalar> $tr<Polynomial<T>> for &Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, rhs: Polynomial<T>) -> Polynomial<T> {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Neg for Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        -&self
    }
}

impl<T: Scalar> std::iter::Sum for Polynomial<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}

impl<T: Scalar> std::iter::Product for Polynomial<T> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| acc * p)
    }
}

/// Descending-power rendering, e.g. `6x^5+200x^4+2842x^3+21040x^2+79832x+122880`.
/// Non-integer rational coefficients are parenthesised: `(1/2)x^2`.
impl<T: Scalar + Signed + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(usize, &T)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        write_terms(f, &terms, |f, power| match power {
            0 => Ok(()),
            1 => write!(f, "x"),
            p => write!(f, "x^{p}"),
        })
    }
}

/// Shared term renderer for power and binomial bases. `var` writes the basis
/// element for a given index; index 0 is the constant 1.
pub(crate) fn write_terms<T: Scalar + Signed + fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    terms: &[(usize, &T)],
    var: impl Fn(&mut fmt::Formatter<'_>, usize) -> fmt::Result,
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (pos, (idx, c)) in terms.iter().enumerate() {
        let mag = c.abs();
        if c.is_negative() {
            write!(f, "-")?;
        } else if pos > 0 {
            write!(f, "+")?;
        }
        if *idx == 0 {
            write!(f, "{mag}")?;
            continue;
        }
        if !mag.is_one() {
            let s = mag.to_string();
            if s.contains('/') {
                write!(f, "({s})")?;
            } else {
                write!(f, "{s}")?;
            }
        }
        var(f, *idx)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use crate::{IntPoly, Poly};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn additive_identity() {
        assert_eq!(&p(&[4, 3]) + &Poly::zero(), p(&[4, 3]));
    }

    #[test]
    fn schoolbook_product() {
        assert_eq!(&p(&[4, 3]) * &p(&[4, 2]), p(&[16, 20, 6]));
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
    }

    #[test]
    fn degree_of_product_adds() {
        let a = p(&[1, 2, 3]);
        let b = p(&[0, 0, 0, 5]);
        assert_eq!((&a * &b).degree(), Some(5));
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!((&a * &Poly::zero()).degree(), None);
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let q = p(&[1, 2, 0, 0]);
        assert_eq!(q.degree(), Some(1));
        assert_eq!(&q - &q, Poly::zero());
    }

    #[test]
    fn horner_evaluation() {
        assert_eq!(p(&[4, 3]).eval(&rat(2)), rat(10));
        assert_eq!(p(&[7, 5, 3]).eval(&rat(0)), rat(7));
        // 4x^3+52x^2+240x+384 at -4
        assert_eq!(p(&[384, 240, 52, 4]).eval(&rat(-4)), rat(0));
        assert_eq!(p(&[4, 3]).eval(&ratio(-4, 3)), rat(0));
    }

    #[test]
    fn taylor_shift() {
        assert_eq!(p(&[4, 3]).shift_int(1), p(&[7, 3]));
        assert_eq!(p(&[4, 3]).shift_int(0), p(&[4, 3]));
        assert_eq!(p(&[0, 0, 1]).shift_int(1), p(&[1, 2, 1]));
        assert_eq!(
            p(&[0, 0, 1]).shift(&ratio(1, 2)),
            p(&[0, 0, 4]).div_scalar(&rat(4)).shift(&ratio(1, 2))
        );
    }

    #[test]
    fn exact_division() {
        assert_eq!(p(&[16, 20, 6]).exact_div(&p(&[4, 2])).unwrap(), p(&[4, 3]));
        assert_eq!(p(&[4, 3]).exact_div(&Poly::one()).unwrap(), p(&[4, 3]));
        assert_eq!(p(&[1, 0, 1]).exact_div(&p(&[1, 1])), Err(Error::NonZeroRemainder));
        assert_eq!(p(&[1, 1]).exact_div(&Poly::zero()), Err(Error::DivisionByZero));
        assert_eq!(Poly::zero().exact_div(&p(&[1, 1])).unwrap(), Poly::zero());
        assert_eq!(p(&[1]).exact_div(&p(&[1, 1])), Err(Error::NonZeroRemainder));
    }

    #[test]
    fn integer_exact_division_rejects_fractional_quotient() {
        // (x+1) / (2x+2) = 1/2 is not in Z[x]
        let num = IntPoly::from_ints(&[1, 1]);
        let den = IntPoly::from_ints(&[2, 2]);
        assert_eq!(num.exact_div(&den), Err(Error::NonZeroRemainder));
        let num = IntPoly::from_ints(&[16, 20, 6]);
        let den = IntPoly::from_ints(&[4, 2]);
        assert_eq!(num.exact_div(&den).unwrap(), IntPoly::from_ints(&[4, 3]));
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[4, 3]).to_string(), "3x+4");
        assert_eq!(p(&[1]).to_string(), "1");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[-1, 0, -1]).to_string(), "-x^2-1");
        assert_eq!(Poly::from_coeffs(vec![rat(0), ratio(1, 2)]).to_string(), "(1/2)x");
        assert_eq!(
            IntPoly::from_ints(&[122880, 79832, 21040, 2842, 200, 6]).to_string(),
            "6x^5+200x^4+2842x^3+21040x^2+79832x+122880"
        );
    }
}
