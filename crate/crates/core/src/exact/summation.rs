use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{binomial, rat, Polynomial, Scalar};
use crate::error::{Error, Result};
use crate::{IntPoly, Poly};

/// Faulhaber power-sum polynomials `S_p(n) = 1^p + 2^p + ... + n^p`, built
/// from `(n+1)^(p+1) - 1 = sum_{j<=p} C(p+1, j) S_j(n)` and cached.
#[derive(Clone, Debug, Default)]
pub struct PowerSums {
    sums: Vec<Poly>,
    /// `S_p = num / den` with `num` integral.
    scaled: Vec<(IntPoly, BigInt)>,
}

impl PowerSums {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, p: usize) -> &Poly {
        while self.sums.len() <= p {
            let q = self.sums.len();
            let top = Poly::monomial(rat(1), q + 1).shift_int(1) - Poly::one();
            let lower: Poly = self
                .sums
                .iter()
                .enumerate()
                .map(|(j, s)| s.scale(&rat(binomial(q as i64 + 1, j as i64))))
                .sum();
            let s = (top - lower).div_scalar(&rat(q as i64 + 1));
            self.sums.push(s);
        }
        &self.sums[p]
    }

    /// The polynomial `S(n) = g(1) + ... + g(n)`, so `S(0) = 0` and
    /// `S(n) - S(n-1) = g(n)`.
    ///
    /// Accumulates over the integers on a common denominator and reduces once.
    pub fn indefinite_sum(&mut self, g: &Poly) -> Poly {
        let Some(d) = g.degree() else {
            return Poly::zero();
        };
        self.get(d);
        while self.scaled.len() <= d {
            let s = &self.sums[self.scaled.len()];
            let den = s.denominator_lcm();
            let num = s
                .scale(&BigRational::from_integer(den.clone()))
                .to_integer()
                .expect("cleared");
            self.scaled.push((num, den));
        }
        let terms: Vec<_> = g
            .coeffs()
            .iter()
            .zip(&self.scaled)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, (num, s_den))| (c.numer(), num, c.denom() * s_den))
            .collect();
        let den = terms.iter().fold(BigInt::one(), |acc, (_, _, d)| acc.lcm(d));
        let mut acc = IntPoly::zero();
        for (c, num, d) in terms {
            acc = acc + num.scale(&(c * (&den / d)));
        }
        acc.to_rational().div_scalar(&BigRational::from_integer(den))
    }
}

/// One-shot [`PowerSums::indefinite_sum`].
pub fn indefinite_sum(g: &Poly) -> Poly {
    PowerSums::new().indefinite_sum(g)
}

/// The unique polynomial of degree `< points.len()` through `points`
/// (computed in Newton divided-difference form).
pub fn lagrange_interpolate<T: Scalar>(points: &[(T, T)]) -> Result<Polynomial<T>> {
    let n = points.len();
    if n == 0 {
        return Ok(Polynomial::zero());
    }
    for i in 0..n {
        for j in 0..i {
            if points[i].0 == points[j].0 {
                return Err(Error::Domain("repeated interpolation node".into()));
            }
        }
    }
    let xs: Vec<T> = points.iter().map(|p| p.0.clone()).collect();
    let mut dd: Vec<T> = points.iter().map(|p| p.1.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (dd[i].clone() - dd[i - 1].clone()) / (xs[i].clone() - xs[i - level].clone());
        }
    }
    let mut poly = Polynomial::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        poly = &poly * &Polynomial::linear(T::one(), -xs[i].clone()) + Polynomial::constant(dd[i].clone());
    }
    Ok(poly)
}

/// Forward differences at the origin: `out[i] = Δ^i f(0)` for the samples
/// `values[j] = f(j)`.
pub fn forward_differences<T: Scalar>(values: &[T]) -> Vec<T> {
    let mut row = values.to_vec();
    let mut out = Vec::with_capacity(values.len());
    while !row.is_empty() {
        out.push(row[0].clone());
        row = row.windows(2).map(|w| w[1].clone() - w[0].clone()).collect();
    }
    out
}

/// Solve `op(P) = rhs` for a linear operator that maps each monomial `x^d`
/// to a polynomial of exactly degree `d` (upper-triangular with nonzero
/// diagonal in the power basis). `images[d]` must hold `op(x^d)`.
///
/// Over a ring that is not a field every pivot division must be exact;
/// otherwise the solution does not exist in that ring and `NonZeroRemainder`
/// is returned.
pub(crate) fn solve_degree_preserving<T: Scalar>(
    images: &[Polynomial<T>],
    rhs: &Polynomial<T>,
) -> Result<Polynomial<T>> {
    let Some(top) = rhs.degree() else {
        return Ok(Polynomial::zero());
    };
    if top >= images.len() {
        return Err(Error::Domain("operator images do not reach rhs degree".into()));
    }
    let mut residual = rhs.clone();
    let mut sol = vec![T::zero(); top + 1];
    for d in (0..=top).rev() {
        let img = &images[d];
        if img.degree() != Some(d) {
            return Err(Error::Domain(format!("operator is singular at degree {d}")));
        }
        let pivot = img.coeff(d);
        let target = residual.coeff(d);
        let c = target.clone() / pivot.clone();
        if c.clone() * pivot != target {
            return Err(Error::NonZeroRemainder);
        }
        residual = residual - img.scale(&c);
        sol[d] = c;
    }
    if !residual.is_zero() {
        return Err(Error::NonZeroRemainder);
    }
    Ok(Polynomial::from_coeffs(sol))
}
