//! Executable checks of seven conjectured properties of `P_n`:
//!
//! 1. the content of `P_n` is `n / rad(n)`;
//! 2. `P_n(0) = 4^m m!`, `m = floor((n-1)/2)`;
//! 3. `P_n(1) = (2^n - 1)((n-1)/2)!` for odd `n`, `(2^n - 1)(n/2)!/(n+1)` for even `n`;
//! 4. `P_n` has a rational root iff `n = 3` (root `-4/3`) or `4 | n` (root `-n/2`);
//! 5. the coefficients strictly increase from the leading one to the constant;
//! 6. for even `n`, `a_i(n) <= a_i(n-1)`, with equality only for the constant,
//!    and the ratios `a_i(n-1)/a_i(n)` decrease to 1;
//! 7. `n` divides every non-constant coefficient iff `n` is prime.
//!
//! Conjectures 2 and 3 are theorems; a failure there means the sequence itself
//! was generated incorrectly.

pub mod roots;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{ratio, to_int};
use crate::explicit::{p_at_one, p_at_zero};
use crate::PSequence;
use roots::{rational_roots, RootOutcome, RootSearch};

/// Default cap on candidate fractions tried for conjecture 4.
pub const DEFAULT_DIVISOR_CAP: u64 = 1_000_000;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Product of the distinct primes dividing `n`; `rad(1) = 1`.
pub fn rad(n: u64) -> BigInt {
    assert!(n >= 1, "rad is defined for n >= 1");
    let mut out = BigInt::one();
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            out *= p;
            while rest.is_multiple_of(p) {
                rest /= p;
            }
        }
        p += 1;
    }
    if rest > 1 {
        out *= rest;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Refuted,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub conjecture: u8,
    /// Inclusive range of `n` covered; `None` if nothing applied.
    pub n_range: Option<(i64, i64)>,
    pub status: Verdict,
    pub details: String,
    /// First `n` at which the conjecture failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<i64>,
}

impl ConjectureReport {
    fn single(conjecture: u8, n: i64, status: Verdict, details: String) -> Self {
        Self {
            conjecture,
            n_range: Some((n, n)),
            status,
            counterexample: (status == Verdict::Refuted).then_some(n),
            details,
        }
    }

    fn verdict(conjecture: u8, n: i64, ok: bool, details: String) -> Self {
        let status = if ok { Verdict::Verified } else { Verdict::Refuted };
        Self::single(conjecture, n, status, details)
    }
}

/// Whether conjecture `c` says anything about `P_n`.
pub fn applies(c: u8, n: i64) -> bool {
    match c {
        1..=5 => n >= 1,
        6 => n >= 2 && n % 2 == 0,
        // at n = 1 the divisibility side is vacuous while 1 is not prime
        7 => n >= 2,
        _ => false,
    }
}

fn descending(seq: &PSequence, n: i64) -> Vec<BigInt> {
    seq.get(n).descending()
}

fn join(v: &[BigInt]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}

pub fn check_c1(seq: &PSequence, n: i64) -> ConjectureReport {
    let content = seq.get(n).content();
    let expected = BigInt::from(n) / rad(n as u64);
    ConjectureReport::verdict(
        1,
        n,
        content == expected,
        format!("content {content}, n/rad(n) = {expected}"),
    )
}

pub fn check_c2(seq: &PSequence, n: i64) -> ConjectureReport {
    let c = seq.get(n).coeff(0);
    let expected = p_at_zero(n);
    ConjectureReport::verdict(2, n, c == expected, format!("P_n(0) = {c}, expected {expected}"))
}

pub fn check_c3(seq: &PSequence, n: i64) -> ConjectureReport {
    let v = seq.get(n).eval(&BigInt::one());
    let expected = p_at_one(n);
    ConjectureReport::verdict(3, n, v == expected, format!("P_n(1) = {v}, expected {expected}"))
}

fn expected_roots(n: i64) -> Vec<BigRational> {
    if n == 3 {
        vec![ratio(-4, 3)]
    } else if n % 4 == 0 {
        vec![ratio(-n / 2, 1)]
    } else {
        Vec::new()
    }
}

fn show_roots(r: &[BigRational]) -> String {
    if r.is_empty() {
        "none".into()
    } else {
        r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
    }
}

/// Rational roots only: real irrational roots are outside what is checked.
pub fn check_c4(seq: &PSequence, n: i64, divisor_cap: u64) -> ConjectureReport {
    let limits = RootSearch {
        candidate_cap: divisor_cap,
        ..RootSearch::default()
    };
    let expected = expected_roots(n);
    match rational_roots(seq.get(n), limits) {
        RootOutcome::Complete { roots, candidates } => ConjectureReport::verdict(
            4,
            n,
            roots == expected,
            format!(
                "rational roots: {}; expected: {}; {candidates} candidates evaluated",
                show_roots(&roots),
                show_roots(&expected)
            ),
        ),
        RootOutcome::Capped { reason } => ConjectureReport::single(
            4,
            n,
            Verdict::Inconclusive,
            format!("root search stopped: {reason} (cap {divisor_cap})"),
        ),
    }
}

pub fn check_c5(seq: &PSequence, n: i64) -> ConjectureReport {
    let a = descending(seq, n);
    let bad = a.windows(2).position(|w| w[0] >= w[1]);
    let details = match bad {
        None => format!("{} coefficients strictly increasing", a.len()),
        Some(i) => format!("a_{i} = {} >= a_{} = {}", a[i], i + 1, a[i + 1]),
    };
    ConjectureReport::verdict(5, n, bad.is_none(), details)
}

/// Strict decrease of the ratios is required; a tie between consecutive
/// ratios is reported in the details but does not refute.
pub fn check_c6(seq: &PSequence, n: i64) -> ConjectureReport {
    let cur = descending(seq, n);
    let prev = descending(seq, n - 1);
    if cur.len() != prev.len() {
        return ConjectureReport::verdict(6, n, false, "degrees of P_n and P_(n-1) differ".into());
    }
    let m = cur.len() - 1;
    for i in 0..=m {
        let ok = if i < m { cur[i] < prev[i] } else { cur[i] == prev[i] };
        if !ok {
            return ConjectureReport::verdict(6, n, false, format!("a_{i}(n) = {}, a_{i}(n-1) = {}", cur[i], prev[i]));
        }
    }
    let ratios: Vec<BigRational> = (0..=m)
        .map(|i| BigRational::new(prev[i].clone(), cur[i].clone()))
        .collect();
    let mut ties = Vec::new();
    for (i, w) in ratios.windows(2).enumerate() {
        if w[0] < w[1] {
            return ConjectureReport::verdict(
                6,
                n,
                false,
                format!("ratio {} at i={i} below ratio {} at i={}", w[0], w[1], i + 1),
            );
        }
        if w[0] == w[1] {
            ties.push(i);
        }
    }
    let last_is_one = to_int(&ratios[m]).is_some_and(|v| v.is_one());
    let mut details = format!("ratios from {} down to {}", ratios[0], ratios[m]);
    if !ties.is_empty() {
        details.push_str(&format!("; equal consecutive ratios at i = {ties:?}"));
    }
    ConjectureReport::verdict(6, n, last_is_one, details)
}

pub fn check_c7(seq: &PSequence, n: i64) -> ConjectureReport {
    let a = descending(seq, n);
    let non_constant = &a[..a.len() - 1];
    let divisible = non_constant.iter().all(|c| (c % n).is_zero());
    let prime = is_prime(n as u64);
    ConjectureReport::verdict(
        7,
        n,
        divisible == prime,
        format!(
            "n | non-constant coefficients: {divisible}; n prime: {prime}; coefficients {}",
            join(non_constant)
        ),
    )
}

/// Conjecture `c` at a single `n`; `None` if it does not apply.
pub fn check_one(c: u8, seq: &PSequence, n: i64, divisor_cap: u64) -> Option<ConjectureReport> {
    if !applies(c, n) {
        return None;
    }
    Some(match c {
        1 => check_c1(seq, n),
        2 => check_c2(seq, n),
        3 => check_c3(seq, n),
        4 => check_c4(seq, n, divisor_cap),
        5 => check_c5(seq, n),
        6 => check_c6(seq, n),
        7 => check_c7(seq, n),
        _ => unreachable!(),
    })
}

/// Fold per-`n` reports of one conjecture into a single report.
pub fn aggregate(c: u8, reports: &[ConjectureReport]) -> ConjectureReport {
    let lo = reports.iter().filter_map(|r| r.n_range.map(|x| x.0)).min();
    let hi = reports.iter().filter_map(|r| r.n_range.map(|x| x.1)).max();
    let refuted: Vec<_> = reports.iter().filter(|r| r.status == Verdict::Refuted).collect();
    let inconclusive = reports.iter().filter(|r| r.status == Verdict::Inconclusive).count();
    let status = if !refuted.is_empty() {
        Verdict::Refuted
    } else if inconclusive > 0 {
        Verdict::Inconclusive
    } else {
        Verdict::Verified
    };
    let mut details = format!(
        "{} values of n: {} verified, {} refuted, {} inconclusive",
        reports.len(),
        reports.len() - refuted.len() - inconclusive,
        refuted.len(),
        inconclusive
    );
    if let Some(first) = refuted.first() {
        details.push_str(&format!("; first failure: {}", first.details));
    }
    ConjectureReport {
        conjecture: c,
        n_range: lo.zip(hi),
        status,
        details,
        counterexample: refuted.first().and_then(|r| r.counterexample),
    }
}

/// Per-`n` reports for conjecture `c` over `1..=seq.max_n()`.
pub fn check_range(c: u8, seq: &PSequence, divisor_cap: u64) -> Vec<ConjectureReport> {
    (1..=seq.max_n() as i64)
        .filter_map(|n| check_one(c, seq, n, divisor_cap))
        .collect()
}

/// All seven conjectures over the whole sequence, one aggregated report each.
pub fn run_all(seq: &PSequence, divisor_cap: u64) -> Vec<ConjectureReport> {
    (1..=7)
        .map(|c| aggregate(c, &check_range(c, seq, divisor_cap)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pseq::p_sequence;

    #[test]
    fn radicals_and_primes() {
        assert_eq!(rad(12), BigInt::from(6));
        assert_eq!(rad(7), BigInt::from(7));
        assert_eq!(rad(1), BigInt::from(1));
        assert_eq!(rad(72), BigInt::from(6));
        assert!(is_prime(2) && is_prime(157));
        assert!(!is_prime(1) && !is_prime(0) && !is_prime(161));
    }

    #[test]
    fn worked_cases() {
        let s = p_sequence(12).unwrap();
        for n in [7, 9, 12] {
            assert_eq!(check_c1(&s, n).status, Verdict::Verified);
        }
        assert_eq!(check_c2(&s, 10).status, Verdict::Verified);
        assert_eq!(check_c3(&s, 11).status, Verdict::Verified);
        for n in [3, 5, 8] {
            assert_eq!(check_c4(&s, n, DEFAULT_DIVISOR_CAP).status, Verdict::Verified, "n={n}");
        }
        assert!(check_c4(&s, 8, DEFAULT_DIVISOR_CAP).details.contains("-4"));
        assert_eq!(check_c5(&s, 12).status, Verdict::Verified);
        assert_eq!(check_c6(&s, 12).status, Verdict::Verified);
        assert_eq!(check_c6(&s, 6).status, Verdict::Verified);
        for n in [7, 9, 11] {
            assert_eq!(check_c7(&s, n).status, Verdict::Verified);
        }
    }

    #[test]
    fn refutation_is_reported() {
        let mut polys = p_sequence(5).unwrap().into_polys();
        polys[4] = crate::IntPoly::from_ints(&[32, 20, 5]);
        let bad = PSequence::from_integer(polys).unwrap();
        let r = check_c3(&bad, 5);
        assert_eq!(r.status, Verdict::Refuted);
        assert_eq!(r.counterexample, Some(5));
        let agg = aggregate(3, &check_range(3, &bad, DEFAULT_DIVISOR_CAP));
        assert_eq!(agg.status, Verdict::Refuted);
        assert_eq!(agg.counterexample, Some(5));
        assert_eq!(agg.n_range, Some((1, 5)));
    }

    #[test]
    fn candidate_cap_is_inconclusive() {
        // P_3 = 3x+4: the root interval needs the candidate -4/3
        let s = p_sequence(3).unwrap();
        assert_eq!(check_c4(&s, 3, 0).status, Verdict::Inconclusive);
        assert_eq!(check_c4(&s, 3, 1).status, Verdict::Verified);
    }

    #[test]
    fn run_all_small() {
        let s = p_sequence(40).unwrap();
        for r in run_all(&s, DEFAULT_DIVISOR_CAP) {
            assert_eq!(r.status, Verdict::Verified, "{r:?}");
        }
        let one = p_sequence(1).unwrap();
        let reports = run_all(&one, DEFAULT_DIVISOR_CAP);
        assert_eq!(reports[5].n_range, None);
        assert!(reports.iter().all(|r| r.status == Verdict::Verified));
    }
}
