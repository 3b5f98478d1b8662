use num_rational::BigRational;

use super::{reference, CoeffTable};
use crate::check::{Checker, IdentityCheck};
use crate::error::{Error, Result};
use crate::exact::{factorial, lagrange_interpolate, rat};
use crate::identities::Parity;
use crate::pseq::expected_degree;
use crate::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    /// `a_i(n)`.
    Power,
    /// `b_i(n) / (m-i)!`.
    Binomial,
}

/// Holdout points beyond the interpolation nodes that must also fit.
const MIN_HOLDOUT: usize = 3;

fn sample(table: &CoeffTable, n: i64, i: usize, basis: Basis) -> BigRational {
    let m = expected_degree(n);
    if i > m {
        return rat(0);
    }
    match basis {
        Basis::Power => rat(table.a(n, i as i64)),
        Basis::Binomial => {
            let f = factorial((m - i) as i64).expect("nonnegative");
            rat(table.b(n, i as i64)) / rat(f)
        }
    }
}

/// The polynomial in `n` of degree `2i+1` through the `i`-th coefficient over
/// `n` of one parity (taking the coefficient as zero when `i > m`).
///
/// The first `2i+2` admissible `n` are the interpolation nodes; every further
/// admissible `n` in the table, at least three of them, must lie on the fit.
pub fn fit_coeff_poly(table: &CoeffTable, i: usize, parity: Parity, basis: Basis) -> Result<Poly> {
    let first = match parity {
        Parity::Odd => 1,
        Parity::Even => 2,
    };
    let ns: Vec<i64> = (first..=table.max_n() as i64).step_by(2).collect();
    let nodes = 2 * i + 2;
    if ns.len() < nodes + MIN_HOLDOUT {
        return Err(Error::InsufficientSamples {
            needed: nodes + MIN_HOLDOUT,
            available: ns.len(),
        });
    }
    let points: Vec<_> = ns[..nodes]
        .iter()
        .map(|&n| (rat(n), sample(table, n, i, basis)))
        .collect();
    let fit = lagrange_interpolate(&points)?;
    for &n in &ns[nodes..] {
        if fit.eval(&rat(n)) != sample(table, n, i, basis) {
            return Err(Error::HoldoutResidual { n });
        }
    }
    Ok(fit)
}

type Listed = fn(usize) -> Option<Poly>;

/// Fits for `i <= 3` against the listed `U_i`, `V_i`, `Y_i`, `Z_i`.
pub fn check_fits(table: &CoeffTable) -> Vec<IdentityCheck> {
    let families: [(&str, Parity, Basis, Listed); 4] = [
        ("U", Parity::Odd, Basis::Power, reference::u),
        ("V", Parity::Even, Basis::Power, reference::v),
        ("Y", Parity::Odd, Basis::Binomial, reference::y),
        ("Z", Parity::Even, Basis::Binomial, reference::z),
    ];
    let n = table.max_n() as i64;
    families
        .iter()
        .map(|&(name, parity, basis, known)| {
            let mut chk = Checker::new(
                format!("fit.{name}"),
                format!("interpolated {name}_i(n) matches the listed polynomial, i <= 3"),
            );
            for i in 0..=3 {
                let want = known(i).expect("listed for i <= 3");
                match fit_coeff_poly(table, i, parity, basis) {
                    Ok(fit) => chk.case(n, Some(i as i64), &fit, &want),
                    Err(e) => chk.holds(n, Some(i as i64), false, || e.to_string()),
                };
            }
            chk.finish()
        })
        .collect()
}
