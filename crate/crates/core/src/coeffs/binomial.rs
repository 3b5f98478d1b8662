use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::CoeffTable;
use crate::check::{Checker, IdentityCheck};
use crate::error::{Error, Result};
use crate::exact::{binomial as c, forward_differences, rat, to_int, Stirling2Table};
use crate::explicit::p_explicit;
use crate::pseq::expected_degree;
use crate::{IntPoly, PSequence, Poly};

/// `b_0 C(x, m) + b_1 C(x, m-1) + ... + b_m`, coefficients highest order first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinomPoly {
    b: Vec<BigInt>,
}

impl BinomPoly {
    /// `b[i]` multiplies `C(x, m-i)` with `m = b.len() - 1`. Panics on an empty vector.
    pub fn from_coeffs(b: Vec<BigInt>) -> Self {
        assert!(!b.is_empty(), "binomial-basis vector needs at least one entry");
        Self { b }
    }

    pub fn m(&self) -> usize {
        self.b.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.b
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.b
    }

    /// Expand `C(x, i) = (x)_i / i!` back into the power basis.
    ///
    /// Sums `(m!/i!) b (x)_i` over the integers and divides by `m!` once.
    pub fn to_power(&self) -> Poly {
        let m = self.m();
        let mut falling = vec![IntPoly::one()];
        for i in 0..m {
            let next = &falling[i] * &IntPoly::x_plus(-(i as i64));
            falling.push(next);
        }
        let mut cofactor = BigInt::one();
        let mut sum = IntPoly::zero();
        for i in (0..=m).rev() {
            sum = sum + falling[i].scale(&(&self.b[m - i] * &cofactor));
            cofactor *= i.max(1);
        }
        sum.to_rational().div_scalar(&rat(cofactor))
    }

    pub fn eval(&self, x: i64) -> BigInt {
        let m = self.m() as i64;
        self.b.iter().enumerate().map(|(i, b)| b * c(x, m - i as i64)).sum()
    }
}

impl fmt::Display for BinomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.m();
        let mut first = true;
        for (i, b) in self.b.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let deg = m - i;
            if b.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            let mag = b.abs();
            if deg == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                write!(f, "C(x,{deg})")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Binomial-basis coefficients of `p` relative to `C(x, m)`, from the forward
/// differences `b_i = Δ^(m-i) p(0)`. `p` must have degree at most `m` and
/// take integer values at `0..=m`.
pub fn to_binomial(p: &Poly, m: usize) -> Result<BinomPoly> {
    if let Some(ints) = p.to_integer() {
        return to_binomial_int(&ints, m);
    }
    check_order(p.degree(), m)?;
    let values: Vec<_> = (0..=m as i64).map(|k| p.eval(&rat(k))).collect();
    let mut b = forward_differences(&values)
        .iter()
        .map(|d| to_int(d).ok_or_else(|| Error::NotIntegral(format!("forward difference {d} of {p}"))))
        .collect::<Result<Vec<_>>>()?;
    b.reverse();
    Ok(BinomPoly { b })
}

/// [`to_binomial`] for integer coefficients, where every difference is integral.
pub fn to_binomial_int(p: &IntPoly, m: usize) -> Result<BinomPoly> {
    check_order(p.degree(), m)?;
    let values: Vec<_> = (0..=m as i64).map(|k| p.eval(&k.into())).collect();
    let mut b = forward_differences(&values);
    b.reverse();
    Ok(BinomPoly { b })
}

fn check_order(degree: Option<usize>, m: usize) -> Result<()> {
    match degree {
        Some(d) if d > m => Err(Error::Domain(format!("degree {d} exceeds binomial-basis order {m}"))),
        _ => Ok(()),
    }
}

/// `Δ^l x^e` at `x = 0` for `l, e <= max`, indexed `[l][e]`, from the
/// difference table of `0^e, 1^e, ..., e^e`.
fn power_differences(max: usize) -> Vec<Vec<BigInt>> {
    let mut out = vec![vec![BigInt::zero(); max + 1]; max + 1];
    for e in 0..=max {
        let values: Vec<BigInt> = (0..=e).map(|k| BigInt::from(k).pow(e as u32)).collect();
        for (row, d) in out.iter_mut().zip(forward_differences(&values)) {
            row[e] = d;
        }
    }
    out
}

fn factorials(max: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for i in 1..=max {
        let next = &out[i - 1] * i;
        out.push(next);
    }
    out
}

/// Closed forms and recursions for the binomial-basis coefficients.
pub fn check_b_formulas(seq: &PSequence, table: &CoeffTable) -> Vec<IdentityCheck> {
    let n_max = seq.max_n().min(table.max_n()) as i64;
    let m_max = expected_degree(n_max.max(1));
    let stirling = Stirling2Table::new(m_max);
    let deltas = power_differences(m_max);
    let fact = factorials(n_max.max(1) as usize);
    let mut round = Checker::new("11.3", "expanding the binomial-basis form reproduces P_n");
    let mut explicit = Checker::new(
        "12.2",
        "b_i(n) = sum_k (-1)^(m-i-k) C(m-i, k) P_n(k), P_n(k) in closed form",
    );
    let mut differences = Checker::new("12.4", "b_i(n) = sum_{j<=i} a_j(n) Δ^(m-i) x^(m-j) at 0");
    let mut stir = Checker::new("12.12", "b_i(n) = (m-i)! sum_{j<=i} a_j(n) S(m-j, m-i)");
    let mut b0 = Checker::new("12.5", "b_0(n) = n((n-1)/2)! (odd), (n/2)! (even)");
    let mut b1 = Checker::new("12.6", "b_1(n) = n(5n-7)((n-1)/2)!/6 (odd), (5n-8)(n/2)!/6 (even)");
    let mut odd_rec = Checker::new(
        "12.13",
        "b_i(n) = n(b_i(n-1) + b_{i-1}(n-1)), odd n >= 3, 1 <= i <= m-1",
    );
    let mut even_rec = Checker::new(
        "12.14",
        "2b_i(n) = b_i(n-1) + b_{i-1}(n-1) + m! C(m, i), even n >= 4, 1 <= i <= m-1",
    );
    let mut divides = Checker::new("12.div", "n divides b_j(n) for odd n, 0 <= j <= m-1");

    for n in 1..=n_max {
        let m = expected_degree(n) as i64;
        let row = BinomPoly::from_coeffs(table.b_row(n).to_vec());
        round.case(n, None, &row.to_power(), &seq.rational(n));

        let values: Vec<_> = (0..=m).map(|k| p_explicit(n, k)).collect();
        for i in 0..=m {
            let b = table.b(n, i);
            let mut via_values = BigInt::zero();
            let mut failed = None;
            for (k, v) in values[..=(m - i) as usize].iter().enumerate() {
                match v {
                    Ok(v) => {
                        let term = c(m - i, k as i64) * v;
                        via_values += if (m - i - k as i64) % 2 == 0 { term } else { -term };
                    }
                    Err(e) => failed = Some(e.to_string()),
                }
            }
            match failed {
                Some(e) => explicit.holds(n, Some(i), false, || e),
                None => explicit.case(n, Some(i), &b, &via_values),
            };

            let l = (m - i) as usize;
            let diff: BigInt = (0..=i).map(|j| table.a(n, j) * &deltas[l][(m - j) as usize]).sum();
            differences.case(n, Some(i), &b, &diff);

            let st: BigInt = (0..=i)
                .map(|j| table.a(n, j) * stirling.get((m - j) as usize, l))
                .sum::<BigInt>()
                * &fact[l];
            stir.case(n, Some(i), &b, &st);
        }

        let half = &fact[(n / 2) as usize];
        let expected_b0 = if n % 2 == 1 { half * n } else { half.clone() };
        b0.case(n, None, &table.b(n, 0), &expected_b0);
        if m >= 1 {
            let expected_b1 = if n % 2 == 1 {
                rat(half * (n * (5 * n - 7))) / rat(6)
            } else {
                rat(half * (5 * n - 8)) / rat(6)
            };
            b1.case(n, None, &rat(table.b(n, 1)), &expected_b1);
        }

        if n % 2 == 1 {
            for j in 0..m {
                let b = table.b(n, j);
                divides.holds(n, Some(j), (&b % n).is_zero(), || format!("b_{j}({n}) = {b}"));
            }
            if n >= 3 {
                for i in 1..m {
                    let rhs = (table.b(n - 1, i) + table.b(n - 1, i - 1)) * n;
                    odd_rec.case(n, Some(i), &table.b(n, i), &rhs);
                }
            }
        } else if n >= 4 {
            for i in 1..m {
                let lhs = table.b(n, i) * 2;
                let rhs = table.b(n - 1, i) + table.b(n - 1, i - 1) + &fact[m as usize] * c(m, i);
                even_rec.case(n, Some(i), &lhs, &rhs);
            }
        }
    }
    vec![
        round.finish(),
        explicit.finish(),
        differences.finish(),
        stir.finish(),
        b0.finish(),
        b1.finish(),
        odd_rec.finish(),
        even_rec.finish(),
        divides.finish(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pseq::p_sequence;

    fn bp(v: &[i64]) -> BinomPoly {
        BinomPoly::from_coeffs(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn expansions() {
        let s = p_sequence(7).unwrap();
        assert_eq!(to_binomial(&s.rational(5), 2).unwrap(), bp(&[10, 30, 32]));
        assert_eq!(to_binomial(&s.rational(7), 3).unwrap(), bp(&[42, 196, 378, 384]));
        assert_eq!(to_binomial(&Poly::one(), 0).unwrap(), bp(&[1]));
        assert!(to_binomial(&s.rational(7), 2).is_err());
        let half = Poly::from_coeffs(vec![rat(0), crate::exact::ratio(1, 2)]);
        assert!(matches!(to_binomial(&half, 1), Err(Error::NotIntegral(_))));
    }

    #[test]
    fn round_trip_and_eval() {
        let b = bp(&[10, 30, 32]);
        assert_eq!(b.to_power(), Poly::from_ints(&[32, 25, 5]));
        assert_eq!(b.eval(2), BigInt::from(102));
    }

    #[test]
    fn display() {
        assert_eq!(bp(&[10, 30, 32]).to_string(), "10C(x,2)+30C(x,1)+32");
        assert_eq!(bp(&[1, 0, -3]).to_string(), "C(x,2)-3");
        assert_eq!(bp(&[0]).to_string(), "0");
        assert_eq!(bp(&[1]).to_string(), "1");
    }

    #[test]
    fn power_differences_match_stirling() {
        let d = power_differences(9);
        let f = factorials(9);
        for (l, row) in d.iter().enumerate() {
            for (e, v) in row.iter().enumerate() {
                let expected = crate::exact::stirling2(e, l) * &f[l];
                assert_eq!(v, &expected, "l={l} e={e}");
            }
        }
    }

    #[test]
    fn formulas_hold() {
        let s = p_sequence(30).unwrap();
        let t = CoeffTable::new(&s).unwrap();
        for r in check_b_formulas(&s, &t) {
            assert!(r.passed(), "{r:?}");
        }
    }
}
