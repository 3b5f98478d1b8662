//! Identities of the kernel `T_n(k)`, relations between neighbouring `P_n`,
//! congruences, and alternative generators of the sequence.

mod congruences;
mod kernel;
mod relations;
mod routes;

pub use congruences::{check_halving_identity, check_prime_divisibility, check_value_congruences};
pub use kernel::check_t_identities;
pub use relations::{check_p_relations, Parity, Relation, RELATIONS};
pub use routes::{check_routes, p_via_bisection, p_via_explicit, p_via_homogeneous, p_via_shift};

use crate::check::{Checker, IdentityCheck};
use crate::coeffs::{check_parity_congruence, CoeffTable};
use crate::error::Result;
use crate::exact::rat;
use crate::explicit::{p_explicit, p_via_r, r_at_one, r_closed, r_closed_factorial, r_polys, t_nk};
use crate::PSequence;

/// Congruences: value congruences for odd `n`, the coefficient parity
/// congruence, and prime divisibility of the kernel.
pub fn check_congruences(seq: &PSequence, table: &CoeffTable, k_max: i64) -> Vec<IdentityCheck> {
    let mut out = check_value_congruences(seq, k_max);
    out.push(check_parity_congruence(table));
    out
}

/// Prime divisibility of the kernel and the closing halving identity.
pub fn check_modp(n_max: i64, k_max: i64) -> Vec<IdentityCheck> {
    vec![check_prime_divisibility(n_max), check_halving_identity(k_max)]
}

/// Closed-form evaluation against the sequence, and the `R_k` machinery.
pub fn check_explicit(seq: &PSequence, k_max: i64) -> Vec<IdentityCheck> {
    let n_max = seq.max_n() as i64;
    let rs = r_polys(k_max.max(1));
    let mut values = Checker::new("1.6", "closed-form P_n(k) equals P_n evaluated at k");
    let mut via_r = Checker::new("2.1", "P_n(k) = c_n(k)(2^(n+k-1) - R_k(n)/(2k-2)!!)");
    for n in 1..=n_max {
        let p = seq.get(n);
        for k in 0..=k_max {
            let direct = rat(p.eval(&k.into()));
            match p_explicit(n, k) {
                Ok(v) => values.case(n, Some(k), &rat(v), &direct),
                Err(e) => values.holds(n, Some(k), false, || e.to_string()),
            };
            if k >= 1 {
                match p_via_r(n, k, &rs[(k - 1) as usize]) {
                    Ok(v) => via_r.case(n, Some(k), &v, &direct),
                    Err(e) => via_r.holds(n, Some(k), false, || e.to_string()),
                };
            }
        }
    }
    let mut closed = Checker::new("4.4", "R_k(n) closed form equals the recursion, both written forms");
    let mut anchor = Checker::new("2.7", "R_k(1) = (k-1)!(2^(2k-1) - C(2k-1, k))");
    let mut positive = Checker::new("1.8", "T_n(k) > 0");
    for r in &rs {
        let k = r.k;
        anchor.case(1, Some(k), &r.poly.eval(&1.into()), &r_at_one(k));
        for n in 1..=n_max {
            let v = r.poly.eval(&n.into());
            closed.case(n, Some(k), &v, &r_closed(k, n));
            closed.case(n, Some(k), &v, &r_closed_factorial(k, n));
            let t = t_nk(n, k).unwrap_or_default();
            positive.holds(n, Some(k), t > 0.into(), || format!("T_{n}({k}) = {t}"));
        }
    }
    vec![
        values.finish(),
        via_r.finish(),
        closed.finish(),
        anchor.finish(),
        positive.finish(),
    ]
}

/// Everything in this module over the given grid.
pub fn run_all(seq: &PSequence, table: &CoeffTable, n_max: i64, k_max: i64) -> Result<Vec<IdentityCheck>> {
    let mut out = check_explicit(seq, k_max);
    out.extend(check_t_identities(n_max, k_max));
    out.extend(check_p_relations(seq));
    out.extend(check_routes(seq.max_n())?);
    out.extend(check_congruences(seq, table, k_max));
    out.extend(check_modp(n_max, k_max));
    Ok(out)
}
