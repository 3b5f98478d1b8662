//! Independent generators of the sequence. Each produces a [`PSequence`] that
//! must coincide with the defining recursion.

use num_bigint::BigInt;

use crate::check::{Checker, IdentityCheck};
use crate::coeffs::BinomPoly;
use crate::error::{Error, Result};
use crate::exact::{forward_differences, rat, shifted_product, solve_degree_preserving, PowerSums};
use crate::explicit::{p_at_zero, p_explicit};
use crate::pseq::{expected_degree, p_sequence};
use crate::{IntPoly, PSequence, Poly};

fn lin(slope: i64, c: i64) -> IntPoly {
    IntPoly::linear(slope.into(), c.into())
}

fn prod(start: i64, count: i64) -> IntPoly {
    shifted_product(start, count.max(0) as usize)
}

fn initial(max_n: usize) -> Vec<IntPoly> {
    vec![IntPoly::one(); max_n.min(2)]
}

/// Bisection route: `P_n` from `P_{n-2}` by exact division by `2x+n-2` (odd
/// `n`) or `2x+n-1` (even `n`). `P_1..P_4` are taken from the base recursion.
pub fn p_via_bisection(max_n: usize) -> Result<PSequence> {
    if max_n < 4 {
        return Err(Error::Domain(format!("bisection route needs N >= 4, got {max_n}")));
    }
    let mut polys = p_sequence(4)?.into_polys();
    for n in 5..=max_n as i64 {
        let prev = &polys[(n - 3) as usize];
        let quadratic = &lin(1, n - 1) * &lin(2, 2 * n - 4);
        let p = if n % 2 == 1 {
            let rhs = &quadratic * prev + &lin(4, 3 * n - 4) * &prod(0, (n - 1) / 2);
            rhs.exact_div(&lin(2, n - 2))
        } else {
            // doubled to keep the half-integral tail in Z[x]
            let rhs = (&quadratic * prev).scale(&BigInt::from(2)) + &lin(4, 3 * n - 4) * &prod(0, (n - 2) / 2);
            rhs.exact_div(&lin(4, 2 * n - 2))
        };
        polys.push(p.map_err(|e| e.at(n))?);
    }
    PSequence::from_integer(polys)
}

/// Shift route: `P_n = 2(x+n-1)P_{n-1} + x(x+1)...(x+(n-3)/2)` for odd `n` and
/// `P_n = (x+n-1)P_{n-2}(x+1) + (x+1)...(x+n/2-1)` for even `n`. Division free.
pub fn p_via_shift(max_n: usize) -> Result<PSequence> {
    if max_n == 0 {
        return Err(Error::Domain("sequence length must be at least 1".into()));
    }
    let mut polys = initial(max_n);
    for n in 3..=max_n as i64 {
        let p = if n % 2 == 1 {
            &lin(2, 2 * n - 2) * &polys[(n - 2) as usize] + prod(0, (n - 1) / 2)
        } else {
            &lin(1, n - 1) * &polys[(n - 3) as usize].shift_int(1) + prod(1, n / 2 - 1)
        };
        polys.push(p);
    }
    PSequence::from_integer(polys)
}

/// Homogeneous route. Odd `n`: `P_n(x) = P_n(0) + n sum_{i=1..x} P_{n-1}(i)`,
/// with the constant `4^m m!`. Even `n`: the unique polynomial solution of
/// `(2x+n-1)P(x) - (2x+n-2)P(x-1) = (n/2)P_{n-1}(x)`; the operator maps `x^d`
/// to a polynomial of degree `d` with leading coefficient `2d+1`.
pub fn p_via_homogeneous(max_n: usize) -> Result<PSequence> {
    if max_n == 0 {
        return Err(Error::Domain("sequence length must be at least 1".into()));
    }
    let mut sums = PowerSums::new();
    // (x-1)^d
    let mut back = vec![IntPoly::one()];
    let mut polys = initial(max_n);
    for n in 3..=max_n as i64 {
        let prev = &polys[(n - 2) as usize];
        let p = if n % 2 == 1 {
            let sum = sums.indefinite_sum(&prev.to_rational()).scale(&rat(n)) + Poly::constant(rat(p_at_zero(n)));
            sum.to_integer()
                .ok_or_else(|| Error::NotIntegral(format!("P_{n} = {sum}")).at(n))?
        } else {
            let m = expected_degree(n);
            while back.len() <= m {
                let next = &back[back.len() - 1] * &IntPoly::x_plus(-1);
                back.push(next);
            }
            let images: Vec<IntPoly> = (0..=m)
                .map(|d| &lin(2, n - 1) * &IntPoly::monomial(1.into(), d) - &lin(2, n - 2) * &back[d])
                .collect();
            solve_degree_preserving(&images, &prev.scale(&BigInt::from(n / 2))).map_err(|e| e.at(n))?
        };
        polys.push(p);
    }
    PSequence::from_integer(polys)
}

/// Explicit route: the closed-form values `P_n(0), ..., P_n(m)` turned into a
/// polynomial through Newton's forward-difference formula.
pub fn p_via_explicit(max_n: usize) -> Result<PSequence> {
    if max_n == 0 {
        return Err(Error::Domain("sequence length must be at least 1".into()));
    }
    let mut polys = Vec::with_capacity(max_n);
    for n in 1..=max_n as i64 {
        let m = expected_degree(n) as i64;
        let values = (0..=m)
            .map(|k| p_explicit(n, k))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| e.at(n))?;
        let mut b = forward_differences(&values);
        b.reverse();
        polys.push(BinomPoly::from_coeffs(b).to_power());
    }
    PSequence::from_rational(polys)
}

/// Compare every route against the base recursion for `1 <= n <= max_n`.
pub fn check_routes(max_n: usize) -> Result<Vec<IdentityCheck>> {
    let base = p_sequence(max_n)?;
    let mut routes: Vec<(&str, &str, PSequence)> = vec![
        (
            "route.explicit",
            "closed-form values at 0..m through forward differences",
            p_via_explicit(max_n)?,
        ),
        (
            "route.shift",
            "division-free parity-alternating relations",
            p_via_shift(max_n)?,
        ),
        (
            "route.homogeneous",
            "homogeneous difference relations",
            p_via_homogeneous(max_n)?,
        ),
    ];
    if max_n >= 4 {
        routes.insert(
            1,
            (
                "route.bisection",
                "bisection within each parity class",
                p_via_bisection(max_n)?,
            ),
        );
    }
    Ok(routes
        .into_iter()
        .map(|(id, description, seq)| {
            let mut chk = Checker::new(id, description);
            for (n, p) in base.iter() {
                chk.case(n, None, seq.get(n), p);
            }
            chk.finish()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IntPoly;

    fn ip(desc: &[i64]) -> IntPoly {
        IntPoly::from_ints(&desc.iter().rev().copied().collect::<Vec<_>>())
    }

    #[test]
    fn bisection_first_steps() {
        let s = p_via_bisection(7).unwrap();
        assert_eq!(s.get(5), &ip(&[5, 25, 32]));
        assert_eq!(s.get(6), &ip(&[3, 19, 32]));
        assert_eq!(s.get(7), &ip(&[7, 77, 294, 384]));
        assert!(p_via_bisection(3).is_err());
    }

    #[test]
    fn shift_first_steps() {
        let s = p_via_shift(9).unwrap();
        assert_eq!(s.get(3), &ip(&[3, 4]));
        assert_eq!(s.get(4), &ip(&[2, 4]));
        assert_eq!(s.get(9), &ip(&[9, 174, 1323, 4614, 6144]));
    }

    #[test]
    fn all_routes_agree() {
        for r in check_routes(30).unwrap() {
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.cases, 30);
        }
        assert_eq!(check_routes(2).unwrap().len(), 3);
    }
}
