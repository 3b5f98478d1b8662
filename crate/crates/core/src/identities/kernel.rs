//! Identities of the kernel `T_n(k)`, checked exhaustively over a grid.
//!
//! `T_0 = T_{-1} = 0` (empty sums) wherever a shifted index leaves the domain.

use std::fmt::Display;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::check::{Checker, IdentityCheck};
use crate::exact::{binomial, rat, ratio};
use crate::explicit::{t_kernel as t, t_nk_reindexed};

fn c(n: i64, k: i64) -> BigInt {
    binomial(n, k)
}

/// Run every kernel identity for `n <= n_max`, `k <= k_max`.
pub fn check_t_identities(n_max: i64, k_max: i64) -> Vec<IdentityCheck> {
    vec![
        check_reindexing(n_max, k_max),
        check_power_sum_identity(n_max, k_max),
        check_doubling(n_max, k_max),
        check_two_step_doubling(n_max, k_max),
        check_parity_step(n_max, k_max),
        check_k_step(n_max, k_max),
        check_mixed_step(n_max, k_max),
        check_diagonal_step(n_max, k_max),
    ]
}

fn grid<T: PartialEq + Display>(
    id: &str,
    description: &str,
    n_lo: i64,
    n_max: i64,
    k_lo: i64,
    k_max: i64,
    mut sides: impl FnMut(i64, i64) -> (T, T),
) -> IdentityCheck {
    let mut chk = Checker::new(id, description);
    for n in n_lo..=n_max {
        for k in k_lo..=k_max {
            let (lhs, rhs) = sides(n, k);
            chk.case(n, Some(k), &lhs, &rhs);
        }
    }
    chk.finish()
}

/// Both summation orders of `T_n(k)` agree.
pub fn check_reindexing(n_max: i64, k_max: i64) -> IdentityCheck {
    grid(
        "5.1",
        "T_n(k) = sum_j 2^(n-j) C(2k+j-2, k-1)",
        1,
        n_max,
        1,
        k_max,
        |n, k| (t(n, k), t_nk_reindexed(n, k)),
    )
}

/// `4 sum 2^-i C(2k+i-2, k-1) - sum 2^-i C(2k+i, k) = n/(k 2^n) C(2k+n-1, k-1)`, from `n = 0`.
pub fn check_power_sum_identity(n_max: i64, k_max: i64) -> IdentityCheck {
    grid(
        "4.6",
        "4 sum 2^-i C(2k+i-2,k-1) - sum 2^-i C(2k+i,k) = n/(k 2^n) C(2k+n-1,k-1)",
        0,
        n_max,
        1,
        k_max,
        // both sides times k 2^n, summed by Horner's rule in 2
        |n, k| {
            let mut a = c(2 * k - 1, k - 1);
            let mut b = c(2 * k + 1, k);
            let mut sum = BigInt::zero();
            for i in 1..=n {
                sum = (sum << 1) + &a * 4 - &b;
                a = a * (2 * k + i - 1) / (k + i);
                b = b * (2 * k + i + 1) / (k + i + 1);
            }
            (sum * k, c(2 * k + n - 1, k - 1) * n)
        },
    )
}

pub fn check_doubling(n_max: i64, k_max: i64) -> IdentityCheck {
    grid(
        "6.1",
        "T_n(k) - 2T_{n-1}(k) = C(n+2k-2, k-1)",
        1,
        n_max,
        1,
        k_max,
        |n, k| (t(n, k) - t(n - 1, k) * 2, c(n + 2 * k - 2, k - 1)),
    )
}

pub fn check_two_step_doubling(n_max: i64, k_max: i64) -> IdentityCheck {
    grid(
        "6.2",
        "T_n(k) - 4T_{n-2}(k) = C(n+2k-2, k-1) + 2C(n+2k-3, k-1)",
        2,
        n_max,
        2,
        k_max,
        |n, k| {
            (
                t(n, k) - t(n - 2, k) * 4,
                c(n + 2 * k - 2, k - 1) + c(n + 2 * k - 3, k - 1) * 2,
            )
        },
    )
}

pub fn check_parity_step(n_max: i64, k_max: i64) -> IdentityCheck {
    grid(
        "7.1",
        "T_n(k) - T_{n-2}(k+1) = C(n+2k-1, k)",
        2,
        n_max,
        1,
        k_max,
        |n, k| (t(n, k) - t(n - 2, k + 1), c(n + 2 * k - 1, k)),
    )
}

pub fn check_k_step(n_max: i64, k_max: i64) -> IdentityCheck {
    grid(
        "8.2",
        "T_n(k+1) = 4T_n(k) - (n/k) C(n+2k-1, k-1)",
        1,
        n_max,
        1,
        k_max,
        |n, k| {
            (
                rat(t(n, k + 1)),
                rat(t(n, k) * 4) - ratio(n, k) * rat(c(n + 2 * k - 1, k - 1)),
            )
        },
    )
}

pub fn check_mixed_step(n_max: i64, k_max: i64) -> IdentityCheck {
    grid(
        "8.4",
        "(n+k-1)(T_n(k) - 4T_n(k-1)) = n(T_{n-1}(k) - 2T_n(k-1))",
        2,
        n_max,
        2,
        k_max,
        |n, k| {
            (
                (t(n, k) - t(n, k - 1) * 4) * (n + k - 1),
                (t(n - 1, k) - t(n, k - 1) * 2) * n,
            )
        },
    )
}

pub fn check_diagonal_step(n_max: i64, k_max: i64) -> IdentityCheck {
    grid(
        "8.9",
        "2T_n(k) - T_{n-1}(k+1) = C(n+2k-1, k)",
        1,
        n_max,
        1,
        k_max,
        |n, k| (t(n, k) * 2 - t(n - 1, k + 1), c(n + 2 * k - 1, k)),
    )
}
