use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Polynomial, Scalar};
use crate::error::{Error, Result};

/// Binomial coefficient with `C(n, k) = 0` for `k < 0`, `C(n, 0) = 1`, and the
/// generalized form `n(n-1)...(n-k+1)/k!` for negative `n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        // C(n, k) = (-1)^k C(k - n - 1, k)
        let v = binomial(k - n - 1, k);
        return if k % 2 == 0 { v } else { -v };
    }
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

pub fn factorial(n: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::Domain(format!("factorial of {n}")));
    }
    Ok((2..=n).fold(BigInt::one(), |acc, v| acc * v))
}

/// `n!!`, with `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> Result<BigInt> {
    if n < -1 {
        return Err(Error::Domain(format!("double factorial of {n}")));
    }
    let mut acc = BigInt::one();
    let mut v = n;
    while v > 1 {
        acc *= v;
        v -= 2;
    }
    Ok(acc)
}

/// `(x)_k = x(x-1)...(x-k+1)`; the empty product for `k = 0`.
pub fn falling_factorial<T: Scalar>(x: &T, k: usize) -> T {
    (0..k).fold(T::one(), |acc, j| acc * (x.clone() - T::from_int(j as i64)))
}

/// `(x)_k` as a polynomial in `x`.
pub fn falling_factorial_poly<T: Scalar>(k: usize) -> Polynomial<T> {
    (0..k).map(|j| Polynomial::x_plus(-(j as i64))).product()
}

/// `(x + start)(x + start + 1)...(x + start + count - 1)`; one when `count = 0`.
pub fn shifted_product<T: Scalar>(start: i64, count: usize) -> Polynomial<T> {
    (0..count as i64).map(|j| Polynomial::x_plus(start + j)).product()
}

/// `C(x, i)` as a rational polynomial in `x`.
pub fn binomial_basis_poly(i: usize) -> Polynomial<BigRational> {
    let fact = factorial(i as i64).expect("nonnegative");
    falling_factorial_poly::<BigRational>(i).div_scalar(&BigRational::from_integer(fact))
}

/// Stirling number of the second kind `S(n, m)`.
pub fn stirling2(n: usize, m: usize) -> BigInt {
    if m > n {
        return BigInt::zero();
    }
    // row-by-row over n, keeping columns 0..=m
    let mut row = vec![BigInt::zero(); m + 1];
    row[0] = BigInt::one();
    for _ in 0..n {
        for j in (1..=m).rev() {
            row[j] = &row[j] * j + &row[j - 1];
        }
        row[0] = BigInt::zero();
    }
    row[m].clone()
}

/// Precomputed triangle of `S(n, m)` for `0 <= m <= n <= max_n`.
#[derive(Clone, Debug)]
pub struct Stirling2Table {
    rows: Vec<Vec<BigInt>>,
}

impl Stirling2Table {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = vec![BigInt::zero(); n + 1];
            for (m, slot) in row.iter_mut().enumerate().skip(1) {
                let stay = prev.get(m).map(|s| s * m).unwrap_or_default();
                *slot = stay + &prev[m - 1];
            }
            rows.push(row);
        }
        Self { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `S(n, m)`; zero outside the triangle. Panics if `n` exceeds the table.
    pub fn get(&self, n: usize, m: usize) -> BigInt {
        self.rows[n].get(m).cloned().unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use crate::Poly;

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(-3, 2), BigInt::from(6));
        assert_eq!(binomial(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0).unwrap(), BigInt::from(1));
        assert_eq!(factorial(6).unwrap(), BigInt::from(720));
        assert!(factorial(-1).is_err());
        assert_eq!(double_factorial(7).unwrap(), BigInt::from(105));
        assert_eq!(double_factorial(8).unwrap(), BigInt::from(384));
        assert_eq!(double_factorial(0).unwrap(), BigInt::from(1));
        assert_eq!(double_factorial(-1).unwrap(), BigInt::from(1));
        assert!(double_factorial(-2).is_err());
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(5, 3), BigInt::from(25));
        assert_eq!(stirling2(0, 0), BigInt::from(1));
        assert_eq!(stirling2(4, 0), BigInt::zero());
        assert_eq!(stirling2(3, 4), BigInt::zero());
        assert_eq!(stirling2(10, 4), BigInt::from(34105));
    }

    #[test]
    fn stirling_recurrence_and_table() {
        let t = Stirling2Table::new(30);
        for n in 1..=30usize {
            for m in 1..=n {
                assert_eq!(t.get(n, m), t.get(n - 1, m) * m + t.get(n - 1, m - 1));
                assert_eq!(t.get(n, m), stirling2(n, m));
            }
        }
    }

    #[test]
    fn falling_factorial_matches_factorial_ratio() {
        for x in 0..=20i64 {
            for k in 0..=x {
                let ratio = factorial(x).unwrap() / factorial(x - k).unwrap();
                assert_eq!(falling_factorial(&BigInt::from(x), k as usize), ratio);
            }
        }
        assert_eq!(falling_factorial(&ratio(1, 2), 2), ratio(-1, 4));
        assert_eq!(falling_factorial(&rat(9), 0), rat(1));
    }

    #[test]
    fn product_polynomials() {
        assert_eq!(shifted_product::<BigRational>(1, 3), Poly::from_ints(&[6, 11, 6, 1]));
        assert_eq!(shifted_product::<BigRational>(4, 0), Poly::one());
        assert_eq!(falling_factorial_poly::<BigRational>(2), Poly::from_ints(&[0, -1, 1]));
        let c2 = binomial_basis_poly(2);
        assert_eq!(c2.eval(&rat(5)), rat(10));
    }
}
