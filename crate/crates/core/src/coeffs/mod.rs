//! Coefficients of `P_n` in the power basis (`a_i(n)`, highest degree first)
//! and in the binomial basis `{C(x, i)}` (`b_i(n)`), their closed forms,
//! recursions and polynomial fits in `n`, and the Stirling polynomials `Q_k`.

mod binomial;
mod fit;
pub mod reference;
mod stirling;

pub use binomial::{check_b_formulas, to_binomial, to_binomial_int, BinomPoly};
pub use fit::{check_fits, fit_coeff_poly, Basis};
pub use stirling::{check_q_polys, q_denominator, q_poly, q_poly_interpolated, QPoly};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::check::{Checker, IdentityCheck};
use crate::error::Result;
use crate::exact::{binomial as c, rat, ratio, shifted_product};
use crate::identities::Parity;
use crate::pseq::expected_degree;
use crate::{IntPoly, PSequence};

/// Power-basis and binomial-basis coefficients of `P_1..P_N`, both stored
/// highest order first so that index `i` is `a_i(n)` / `b_i(n)`.
#[derive(Clone, Debug)]
pub struct CoeffTable {
    a: Vec<Vec<BigInt>>,
    b: Vec<Vec<BigInt>>,
}

impl CoeffTable {
    pub fn new(seq: &PSequence) -> Result<Self> {
        let mut a = Vec::with_capacity(seq.max_n());
        let mut b = Vec::with_capacity(seq.max_n());
        for (n, p) in seq.iter() {
            a.push(p.descending());
            b.push(to_binomial_int(p, expected_degree(n))?.into_coeffs());
        }
        Ok(Self { a, b })
    }

    pub fn max_n(&self) -> usize {
        self.a.len()
    }

    /// `a_i(n)`; zero when `i` lies outside `0..=m` or `n` outside the table.
    pub fn a(&self, n: i64, i: i64) -> BigInt {
        lookup(&self.a, n, i)
    }

    /// `b_i(n)`; zero outside the table as for [`CoeffTable::a`].
    pub fn b(&self, n: i64, i: i64) -> BigInt {
        lookup(&self.b, n, i)
    }

    pub fn a_row(&self, n: i64) -> &[BigInt] {
        &self.a[(n - 1) as usize]
    }

    pub fn b_row(&self, n: i64) -> &[BigInt] {
        &self.b[(n - 1) as usize]
    }
}

fn lookup(rows: &[Vec<BigInt>], n: i64, i: i64) -> BigInt {
    if n < 1 || i < 0 {
        return BigInt::zero();
    }
    rows.get((n - 1) as usize)
        .and_then(|r| r.get(i as usize))
        .cloned()
        .unwrap_or_default()
}

fn m_of(n: i64) -> i64 {
    expected_degree(n) as i64
}

/// The product whose coefficients drive the parity recursions:
/// `(4x+3n-4) x(x+1)...(x+m-1)`, with `m = floor((n-1)/2)`. Entry `i` is the
/// coefficient of `x^(m-i)` for `0 <= i <= m`.
fn driving_row(n: i64) -> Vec<BigInt> {
    let m = m_of(n) as usize;
    let p = &IntPoly::linear(4.into(), (3 * n - 4).into()) * &shifted_product(0, m);
    (0..=m).map(|i| p.coeff(m - i)).collect()
}

/// `r_i(n)` (even `n`) or `s_i(n)` (odd `n`) for `0 <= i <= m`.
fn driving_coefficients(n: i64) -> Vec<BigRational> {
    let row = driving_row(n).into_iter().map(rat);
    if n % 2 == 0 {
        row.map(|v| v * ratio(1, 2)).collect()
    } else {
        row.collect()
    }
}

fn driving_at(n: i64, i: i64) -> BigRational {
    if i < 0 || i > m_of(n) {
        return rat(0);
    }
    rat(driving_row(n).swap_remove(i as usize))
}

/// `r_i(n) = (1/2) Coef[x^(m-i)] (4x+3n-4) x(x+1)...(x+(n-4)/2)` for even `n`.
pub fn r_coef(n: i64, i: i64) -> BigRational {
    driving_at(n, i) * ratio(1, 2)
}

/// `s_i(n) = Coef[x^(m-i)] (4x+3n-4) x(x+1)...(x+(n-3)/2)` for odd `n`.
pub fn s_coef(n: i64, i: i64) -> BigRational {
    driving_at(n, i)
}

/// Closed forms for `a_0`, `a_1` and the homogeneous coefficient recursions.
pub fn check_a_formulas(table: &CoeffTable) -> Vec<IdentityCheck> {
    let n_max = table.max_n() as i64;
    let mut lead = Checker::new("9.2", "a_0(n) = n (odd), n/2 (even)");
    let mut second = Checker::new("9.3", "a_1(n) = n(n-1)(7n-5)/24 (odd), n(n-2)(7n-4)/48 (even)");
    let mut odd = Checker::new(
        "9.11",
        "(m-i)a_i(n) = n a_i(n-1) + sum_{j<i} (-1)^(i-j+1) C(m-j, m-i-1) a_j(n), odd n >= 3",
    );
    let mut even = Checker::new(
        "9.12",
        "(n-2i-1)a_i(n) = (n/2)a_i(n-1) + 2 sum_{j<i} (-1)^(i-j) (m C(m-j, m-i) - C(m-j, m-i-1)) a_j(n), even n >= 4",
    );
    for n in 1..=n_max {
        let a0 = if n % 2 == 1 { rat(n) } else { ratio(n, 2) };
        lead.case(n, None, &rat(table.a(n, 0)), &a0);
        if n >= 3 {
            let a1 = if n % 2 == 1 {
                ratio(n * (n - 1) * (7 * n - 5), 24)
            } else {
                ratio(n * (n - 2) * (7 * n - 4), 48)
            };
            second.case(n, None, &rat(table.a(n, 1)), &a1);
        }
        let m = m_of(n);
        for i in 0..=m {
            if n % 2 == 1 && n >= 3 {
                let (l, r) = odd_recursion_sides(table, n, i);
                odd.case(n, Some(i), &l, &r);
            } else if n % 2 == 0 && n >= 4 {
                let (l, r) = even_recursion_sides(table, n, i, 1);
                even.case(n, Some(i), &l, &r);
            }
        }
    }
    vec![lead.finish(), second.finish(), odd.finish(), even.finish()]
}

fn odd_recursion_sides(t: &CoeffTable, n: i64, i: i64) -> (BigInt, BigInt) {
    let m = m_of(n);
    let mut rhs = t.a(n - 1, i) * n;
    for j in 0..i {
        let term = c(m - j, m - i - 1) * t.a(n, j);
        rhs += if (i - j + 1) % 2 == 0 { term } else { -term };
    }
    (t.a(n, i) * (m - i), rhs)
}

/// `sign = 1` gives the recursion with `(-1)^(i-j)`; `sign = -1` flips every
/// summand.
fn even_recursion_sides(t: &CoeffTable, n: i64, i: i64, sign: i64) -> (BigInt, BigInt) {
    let m = m_of(n);
    let mut sum = BigInt::zero();
    for j in 0..i {
        let term = (c(m - j, m - i) * m - c(m - j, m - i - 1)) * t.a(n, j);
        sum += if (i - j) % 2 == 0 { term } else { -term };
    }
    let lhs = t.a(n, i) * (n - 2 * i - 1) * 2;
    let rhs = t.a(n - 1, i) * n + sum * 4 * sign;
    (lhs, rhs)
}

/// The coefficient recursions obtained from the bisection relations, checked
/// as exact equalities: for even `n >= 4`
/// `2(a_{i+1}(n) - a_{i+1}(n-2)) = 2(2n-3)a_i(n-2) - (n-1)a_i(n) + 2(n-1)(n-2)a_{i-1}(n-2) + r_i(n)`,
/// and for odd `n >= 3` the same with `(n-2)a_i(n)` and `s_i(n)`.
pub fn check_bisection_coefficients(table: &CoeffTable) -> Vec<IdentityCheck> {
    let mut even = Checker::new("9.7", "even-n coefficient recursion driven by r_i(n)");
    let mut odd = Checker::new("9.9", "odd-n coefficient recursion driven by s_i(n)");
    for n in 3..=table.max_n() as i64 {
        let drive = driving_coefficients(n);
        for i in 0..=m_of(n) {
            let (lhs, rhs) = bisection_coefficient_sides(table, n, i, &drive[i as usize]);
            match Parity::of(n) {
                Parity::Even if n >= 4 => even.case(n, Some(i), &lhs, &rhs),
                Parity::Odd => odd.case(n, Some(i), &lhs, &rhs),
                _ => true,
            };
        }
    }
    vec![even.finish(), odd.finish()]
}

fn bisection_coefficient_sides(t: &CoeffTable, n: i64, i: i64, drive: &BigRational) -> (BigRational, BigRational) {
    let lhs = rat((t.a(n, i + 1) - t.a(n - 2, i + 1)) * 2);
    let own = if n % 2 == 0 { n - 1 } else { n - 2 };
    let prev_lower = if i >= 1 { t.a(n - 2, i - 1) } else { BigInt::zero() };
    let rhs = rat(t.a(n - 2, i) * (2 * (2 * n - 3)) - t.a(n, i) * own + prev_lower * (2 * (n - 1) * (n - 2))) + drive;
    (lhs, rhs)
}

/// `a_i(n) = r_i(n)` (even `n`) or `s_i(n)` (odd `n`) modulo 2.
pub fn check_parity_congruence(table: &CoeffTable) -> IdentityCheck {
    let mut chk = Checker::new("9.10", "a_i(n) = r_i(n) (even n) or s_i(n) (odd n) mod 2");
    for n in 3..=table.max_n() as i64 {
        for (i, drive) in driving_coefficients(n).into_iter().enumerate() {
            let i = i as i64;
            let Some(drive) = crate::exact::to_int(&drive) else {
                chk.holds(n, Some(i), false, || {
                    format!("driving coefficient {drive} is not an integer")
                });
                continue;
            };
            let a = table.a(n, i);
            let ok = (&a - &drive) % 2 == BigInt::zero();
            chk.holds(n, Some(i), ok, || {
                format!("a_{i}({n}) = {a}, driving coefficient {drive}")
            });
        }
    }
    chk.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pseq::p_sequence;

    fn table(n: usize) -> CoeffTable {
        CoeffTable::new(&p_sequence(n).unwrap()).unwrap()
    }

    #[test]
    fn table_lookup() {
        let t = table(12);
        assert_eq!(t.a(7, 0), BigInt::from(7));
        assert_eq!(t.a(7, 1), BigInt::from(77));
        assert_eq!(t.a(12, 1), BigInt::from(200));
        assert_eq!(t.a(7, 4), BigInt::zero());
        assert_eq!(t.b(7, 0), BigInt::from(42));
        assert_eq!(t.b(7, 1), BigInt::from(196));
        assert_eq!(t.b(12, 5), BigInt::from(122880));
    }

    #[test]
    fn a_formulas_hold() {
        let t = table(40);
        for r in check_a_formulas(&t) {
            assert!(r.passed(), "{r:?}");
        }
        for r in check_bisection_coefficients(&t) {
            assert!(r.passed(), "{r:?}");
        }
        assert!(check_parity_congruence(&t).passed());
    }

    #[test]
    fn odd_recursion_worked_case() {
        let t = table(5);
        assert_eq!(odd_recursion_sides(&t, 5, 0), (BigInt::from(10), BigInt::from(10)));
    }

    #[test]
    fn flipped_sign_in_even_recursion_fails() {
        let t = table(4);
        let (l, r) = even_recursion_sides(&t, 4, 1, -1);
        assert_ne!(l, r);
        let (l, r) = even_recursion_sides(&t, 4, 1, 1);
        assert_eq!(l, r);
    }

    #[test]
    fn driving_coefficients() {
        // n = 6: (4x+14) x (x+1) = 4x^3 + 18x^2 + 14x, m = 2
        assert_eq!(r_coef(6, 0), rat(9));
        assert_eq!(r_coef(6, 1), rat(7));
        assert_eq!(r_coef(6, 2), rat(0));
        // n = 3: (4x+5) x, m = 1
        assert_eq!(s_coef(3, 0), rat(5));
        assert_eq!(s_coef(3, 1), rat(0));
    }
}
