//! Known closed forms of the low-order coefficient polynomials in `n`.
//!
//! `U_i`, `V_i`: power-basis coefficients `a_i(n)` for odd and even `n`.
//! `Y_i`, `Z_i`: `b_i(n) / (m-i)!` for odd and even `n`.
//! `Q_k(n) = S(n+k, n)`.

use crate::exact::{rat, ratio};
use crate::Poly;

/// `scale * prod(factors)`, each factor given by ascending integer coefficients.
fn product(num: i64, den: i64, factors: &[&[i64]]) -> Poly {
    factors
        .iter()
        .map(|f| Poly::from_ints(f))
        .product::<Poly>()
        .scale(&ratio(num, den))
}

const N: &[i64] = &[0, 1];

fn n_minus(c: i64) -> [i64; 2] {
    [-c, 1]
}

pub fn u(i: usize) -> Option<Poly> {
    Some(match i {
        0 => product(1, 1, &[N]),
        1 => product(1, 24, &[&n_minus(1), N, &[-5, 7]]),
        2 => product(1, 640, &[&n_minus(3), &n_minus(1), N, &[7, -44, 29]]),
        3 => product(
            1,
            322560,
            &[&n_minus(5), &n_minus(3), &n_minus(1), N, &[223, 1587, -3775, 1581]],
        ),
        _ => return None,
    })
}

pub fn v(i: usize) -> Option<Poly> {
    Some(match i {
        0 => product(1, 2, &[N]),
        1 => product(1, 48, &[&n_minus(2), N, &[-4, 7]]),
        2 => product(1, 3840, &[&n_minus(4), &n_minus(2), N, &[16, -98, 87]]),
        3 => product(
            1,
            645120,
            &[&n_minus(6), &n_minus(4), &n_minus(2), N, &[64, 936, -2686, 1581]],
        ),
        _ => return None,
    })
}

pub fn y(i: usize) -> Option<Poly> {
    Some(match i {
        0 => product(1, 1, &[N]),
        1 => product(1, 12, &[&n_minus(1), N, &[-7, 5]]),
        2 => product(1, 480, &[&n_minus(3), &n_minus(1), N, &[149, -168, 43]]),
        3 => product(
            1,
            13440,
            &[&n_minus(5), &n_minus(3), &n_minus(1), N, &[-2161, 3063, -1319, 177]],
        ),
        _ => return None,
    })
}

pub fn z(i: usize) -> Option<Poly> {
    Some(match i {
        0 => product(1, 2, &[N]),
        1 => product(1, 24, &[&n_minus(2), N, &[-8, 5]]),
        2 => product(1, 960, &[&n_minus(4), &n_minus(2), N, &[184, -182, 43]]),
        3 => product(
            1,
            26880,
            &[&n_minus(6), &n_minus(4), &n_minus(2), N, &[-8, 3], &[352, -306, 59]],
        ),
        _ => return None,
    })
}

pub fn q(k: usize) -> Option<Poly> {
    Some(match k {
        0 => Poly::constant(rat(1)),
        1 => product(1, 2, &[N, &[1, 1]]),
        2 => product(1, 24, &[N, &[1, 1], &[2, 1], &[1, 3]]),
        3 => product(1, 48, &[N, N, &[1, 1], &[1, 1], &[2, 1], &[3, 1]]),
        4 => product(1, 5760, &[N, &[1, 1], &[2, 1], &[3, 1], &[4, 1], &[-2, 5, 30, 15]]),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees() {
        for i in 0..4 {
            for p in [u(i), v(i), y(i), z(i)] {
                assert_eq!(p.unwrap().degree(), Some(2 * i + 1));
            }
        }
        for k in 0..5 {
            assert_eq!(q(k).unwrap().degree(), Some(2 * k));
        }
        assert!(u(4).is_none() && q(5).is_none());
    }

    #[test]
    fn spot_values() {
        assert_eq!(u(1).unwrap().eval(&rat(7)), rat(77));
        assert_eq!(v(1).unwrap().eval(&rat(12)), rat(200));
        assert_eq!(q(2).unwrap().eval(&rat(3)), rat(25));
    }
}
