use num_bigint::BigInt;
use num_traits::One;

use super::reference;
use crate::check::{Checker, IdentityCheck};
use crate::error::Result;
use crate::exact::{lagrange_interpolate, rat, stirling2, PowerSums};
use crate::Poly;

/// `Q_k(n) = S(n+k, n)` as a polynomial in `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly {
    pub k: usize,
    pub poly: Poly,
}

/// `Q_0 = 1`, `Q_k(n) = sum_{i=1..n} i Q_{k-1}(i)`, summed symbolically.
pub fn q_poly(k: usize) -> QPoly {
    let mut sums = PowerSums::new();
    let mut poly = Poly::one();
    for _ in 0..k {
        poly = sums.indefinite_sum(&(&Poly::x() * &poly));
    }
    QPoly { k, poly }
}

/// `Q_k` interpolated through `S(j+k, j)`, `j = 0..=2k`.
pub fn q_poly_interpolated(k: usize) -> Result<QPoly> {
    let points: Vec<_> = (0..=2 * k).map(|j| (rat(j as i64), rat(stirling2(j + k, j)))).collect();
    Ok(QPoly {
        k,
        poly: lagrange_interpolate(&points)?,
    })
}

fn primes_up_to(n: u64) -> impl Iterator<Item = u64> {
    (2..=n).filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0))
}

/// `prod_p p^(sum_{j>=0} floor(k / ((p-1) p^j)))`; only primes `p <= k+1` contribute.
pub fn q_denominator(k: u64) -> BigInt {
    let mut out = BigInt::one();
    for p in primes_up_to(k + 1) {
        let mut exponent = 0;
        let mut step = p - 1;
        while step <= k {
            exponent += k / step;
            step *= p;
        }
        out *= BigInt::from(p).pow(exponent as u32);
    }
    out
}

/// Symbolic and interpolated `Q_k` agree, `Q_k(j) = S(j+k, j)` for `j <= 2k+3`,
/// the coefficient denominators match [`q_denominator`], and the first five
/// agree with the known closed forms.
pub fn check_q_polys(k_max: usize) -> Vec<IdentityCheck> {
    let mut routes = Checker::new("12.11", "symbolic Q_k equals the interpolant of S(j+k, j)");
    let mut values = Checker::new("12.9", "Q_k(j) = S(j+k, j) for 0 <= j <= 2k+3");
    let mut degree = Checker::new("Q.degree", "deg Q_k = 2k and Q_k(0) = 0 for k >= 1");
    let mut denom = Checker::new("Q.denominator", "lcm of coefficient denominators of Q_k");
    let mut listed = Checker::new("Q.listed", "Q_0..Q_4 equal their known closed forms");
    for k in 0..=k_max {
        let q = q_poly(k);
        let n = k as i64;
        match q_poly_interpolated(k) {
            Ok(alt) => routes.case(n, None, &q.poly, &alt.poly),
            Err(e) => routes.holds(n, None, false, || e.to_string()),
        };
        for j in 0..=2 * k + 3 {
            values.case(
                n,
                Some(j as i64),
                &q.poly.eval(&rat(j as i64)),
                &rat(stirling2(j + k, j)),
            );
        }
        let ok = q.poly.degree() == Some(2 * k) && (k == 0 || q.poly.coeff(0) == rat(0));
        degree.holds(n, None, ok, || format!("Q_{k} = {}", q.poly));
        denom.case(n, None, &q.poly.denominator_lcm(), &q_denominator(k as u64));
        if let Some(known) = reference::q(k) {
            listed.case(n, None, &q.poly, &known);
        }
    }
    vec![
        routes.finish(),
        values.finish(),
        degree.finish(),
        denom.finish(),
        listed.finish(),
    ]
}
