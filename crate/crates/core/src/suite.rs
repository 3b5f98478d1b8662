//! The full list of checks, in a fixed order.

use crate::check::IdentityCheck;
use crate::coeffs::{
    check_a_formulas, check_b_formulas, check_bisection_coefficients, check_fits, check_q_polys, CoeffTable,
};
use crate::error::Result;
use crate::identities;
use crate::pseq::{check_degrees, check_recursion};
use crate::PSequence;

/// Largest `k` for the Stirling polynomial checks.
pub const Q_K_MAX: usize = 8;

/// Identity, coefficient and Stirling checks for `P_1..P_{n_max}` with
/// kernel arguments `k <= k_max`.
pub fn identity_checks(n_max: usize, k_max: i64) -> Result<Vec<IdentityCheck>> {
    let seq = PSequence::generate(n_max)?;
    let table = CoeffTable::new(&seq)?;
    let mut out = vec![check_recursion(&seq), check_degrees(&seq)];
    out.extend(identities::run_all(&seq, &table, n_max as i64, k_max)?);
    out.extend(check_a_formulas(&table));
    out.extend(check_bisection_coefficients(&table));
    out.extend(check_b_formulas(&seq, &table));
    out.extend(check_fits(&table));
    out.extend(check_q_polys(Q_K_MAX));
    Ok(out)
}
