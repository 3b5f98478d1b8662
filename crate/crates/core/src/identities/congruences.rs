//! Congruences of the sequence values and of the kernel `T_n(k)`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::check::{Checker, IdentityCheck};
use crate::conjectures::is_prime;
use crate::exact::{binomial as c, pow2_rat, rat};
use crate::explicit::t_kernel;
use crate::pseq::expected_degree;
use crate::PSequence;

/// For odd `n >= 3`: `n | P_n(k) - P_n(0)` for `0 <= k <= max(m+2, k_max)`, and
/// the partial sums `P_{n-1}(1) + ... + P_{n-1}(k) = (P_n(k) - P_n(0))/n`.
pub fn check_value_congruences(seq: &PSequence, k_max: i64) -> Vec<IdentityCheck> {
    let mut cong = Checker::new("8.13", "P_n(k) = P_n(0) mod n, odd n");
    let mut partial = Checker::new("8.14", "sum_{i=1..k} P_{n-1}(i) = (P_n(k) - P_n(0))/n, odd n");
    for n in (3..=seq.max_n() as i64).step_by(2) {
        let p = seq.get(n);
        let prev = seq.get(n - 1);
        let at_zero = p.eval(&BigInt::zero());
        let top = k_max.max(expected_degree(n) as i64 + 2);
        let mut running = BigInt::zero();
        for k in 0..=top {
            let v = p.eval(&BigInt::from(k));
            let diff = &v - &at_zero;
            cong.holds(n, Some(k), (&diff % n).is_zero(), || {
                format!("P_{n}({k}) - P_{n}(0) = {diff}")
            });
            if k >= 1 {
                running += prev.eval(&BigInt::from(k));
                partial.case(n, Some(k), &rat(running.clone()), &(rat(diff) / rat(n)));
            }
        }
    }
    vec![cong.finish(), partial.finish()]
}

/// Largest admissible `r` in `p = n + 2k - 1 - 2r`: `(k-2)/2` for even `k`,
/// `(k-1)/2` for odd `k`.
fn r_bound(k: i64) -> i64 {
    if k % 2 == 0 {
        (k - 2) / 2
    } else {
        (k - 1) / 2
    }
}

/// `T_n(k) = 0 mod p` for every prime `p = n + 2k - 1 - 2r`, `n <= n_max`,
/// `2 <= k <= floor((n-1)/2)`. Odd `n` make every candidate even, so only even
/// `n` contribute primes.
pub fn check_prime_divisibility(n_max: i64) -> IdentityCheck {
    let mut chk = Checker::new("10.6", "p | T_n(k) for primes p = n+2k-1-2r, 2 <= k <= (n-1)/2");
    for n in 4..=n_max {
        for k in 2..=(n - 1) / 2 {
            for r in 0..=r_bound(k) {
                let p = n + 2 * k - 1 - 2 * r;
                if !is_prime(p as u64) {
                    continue;
                }
                let t = t_kernel(n, k);
                chk.holds(n, Some(k), (&t % p).is_zero(), || format!("T_{n}({k}) = {t}, p = {p}"));
            }
        }
    }
    chk.finish()
}

/// `sum_{j<k} C(k+j-1, j) 2^-j = 2^(2k-2r-2) sum_{j<k} (-1)^j C(k-2r-1, j) 2^-j`
/// for `1 <= k <= k_max`, `0 <= r <= (k-1)/2`.
pub fn check_halving_identity(k_max: i64) -> IdentityCheck {
    let mut chk = Checker::new(
        "10.8",
        "sum C(k+j-1, j) 2^-j = 2^(2k-2r-2) sum (-1)^j C(k-2r-1, j) 2^-j",
    );
    for k in 1..=k_max {
        let lhs = (0..k).fold(rat(0), |acc, j| acc + rat(c(k + j - 1, j)) * pow2_rat(-j));
        for r in 0..=(k - 1) / 2 {
            let sum = (0..k).fold(rat(0), |acc, j| {
                let term = rat(c(k - 2 * r - 1, j)) * pow2_rat(-j);
                if j % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            });
            chk.case(k, Some(r), &lhs, &(pow2_rat(2 * k - 2 * r - 2) * sum));
        }
    }
    chk.finish()
}
