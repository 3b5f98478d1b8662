//! Closed-form values of `P_n(k)` at integer points.
//!
//! Everything here is built on the integer kernel
//! `T_n(k) = sum_{i=1..n} 2^(i-1) C(n+2k-i-1, k-1)`, the rational prefactor
//! `c_n(k)`, and the integer polynomials `R_k(n)` of degree `k-1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, double_factorial, factorial, falling_factorial_poly, pow2, pow2_rat, rat, ratio, to_int};
use crate::IntPoly;

/// `T_n(k)` read literally, for any integers: empty sum for `n <= 0`, and zero
/// for `k <= 0` because every binomial then has a negative lower index.
pub fn t_kernel(n: i64, k: i64) -> BigInt {
    if n <= 0 || k <= 0 {
        return BigInt::zero();
    }
    // term i carries C(top, k-1) with top = n+2k-i-1, stepped down from i = 1
    let mut c = binomial(n + 2 * k - 2, k - 1);
    let mut sum = BigInt::zero();
    for i in 1..=n {
        sum += &c << (i - 1);
        let top = n + 2 * k - i - 1;
        c = c * (top - k + 1) / top;
    }
    sum
}

/// `T_n(k)` for `n, k >= 1`.
pub fn t_nk(n: i64, k: i64) -> Result<BigInt> {
    if n < 1 || k < 1 {
        return Err(Error::Domain(format!("T_n(k) needs n, k >= 1, got n={n}, k={k}")));
    }
    Ok(t_kernel(n, k))
}

/// `T_n(k)` summed in the opposite direction, `sum_j 2^(n-j) C(2k+j-2, k-1)`,
/// by Horner's rule in `2`.
pub fn t_nk_reindexed(n: i64, k: i64) -> BigInt {
    if n <= 0 || k <= 0 {
        return BigInt::zero();
    }
    let mut c = binomial(2 * k - 1, k - 1);
    let mut acc = BigInt::zero();
    for j in 1..=n {
        acc = (acc << 1) + &c;
        let top = 2 * k + j - 1;
        c = c * top / (top - k + 1);
    }
    acc
}

fn fact(n: i64) -> BigInt {
    factorial(n).expect("factorial argument is nonnegative")
}

/// The rational prefactor `c_n(k)`:
/// `((n-1)/2)! prod_{i=1}^{k-1} (n+i)/(n+2i)` for odd `n`,
/// `(1/2)(n/2-1)! prod_{i=0}^{k-1} (n+i)/(n+2i+1)` for even `n`.
pub fn c_nk(n: i64, k: i64) -> Result<BigRational> {
    if n < 1 || k < 1 {
        return Err(Error::Domain(format!("c_n(k) needs n, k >= 1, got n={n}, k={k}")));
    }
    let odd = n % 2 == 1;
    let (mut num, mut den, factors) = if odd {
        (fact((n - 1) / 2), BigInt::one(), 1..k)
    } else {
        (fact(n / 2 - 1), BigInt::from(2), 0..k)
    };
    for i in factors {
        num *= n + i;
        den *= if odd { n + 2 * i } else { n + 2 * i + 1 };
    }
    Ok(BigRational::new(num, den))
}

/// The three algebraically equivalent closed forms of `P_n(k)`, unreduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitForms {
    /// Ratio-of-binomials form.
    pub binomial_form: BigRational,
    /// `2^-(floor(n/2)+k-1) (n+k-1)! / (2 floor(n/2) + 2k - 1)!! * T_n(k)`.
    pub double_factorial_form: BigRational,
    /// `2^-(k-1) c_n(k) T_n(k)`.
    pub prefactor_form: BigRational,
}

pub fn explicit_forms(n: i64, k: i64) -> Result<ExplicitForms> {
    let t = rat(t_nk(n, k)?);
    let binomial_form = if n % 2 == 1 {
        let h = (n - 1) / 2;
        ratio(binomial(h + k - 1, k - 1), binomial(n + 2 * k - 2, k - 1)) * rat(fact(h)) * &t
    } else {
        let h = n / 2;
        ratio(binomial(h + k - 1, k), binomial(n + 2 * k - 1, k)) * rat(fact(h - 1)) * &t
    };
    let half = n / 2;
    let df = double_factorial(2 * half + 2 * k - 1)?;
    let double_factorial_form = pow2_rat(-(half + k - 1)) * ratio(fact(n + k - 1), df) * &t;
    let prefactor_form = pow2_rat(-(k - 1)) * c_nk(n, k)? * &t;
    Ok(ExplicitForms {
        binomial_form,
        double_factorial_form,
        prefactor_form,
    })
}

/// `P_n(k)` from the closed forms, for `n >= 1`, `k >= 0`. All forms must
/// agree and the value must be an integer; `k = 0` uses [`p_at_zero`].
pub fn p_explicit(n: i64, k: i64) -> Result<BigInt> {
    if n < 1 || k < 0 {
        return Err(Error::Domain(format!("P_n(k) needs n >= 1, k >= 0, got n={n}, k={k}")));
    }
    if k == 0 {
        return Ok(p_at_zero(n));
    }
    let forms = explicit_forms(n, k)?;
    if forms.binomial_form != forms.double_factorial_form || forms.binomial_form != forms.prefactor_form {
        return Err(Error::FormMismatch {
            n,
            k,
            detail: format!("{forms:?}"),
        });
    }
    to_int(&forms.binomial_form).ok_or_else(|| Error::NotIntegral(format!("P_{n}({k}) = {}", forms.binomial_form)))
}

/// `R_k(n)` as an integer polynomial in `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RPoly {
    pub k: i64,
    pub poly: IntPoly,
}

/// `R_1, ..., R_{k_max}` from `R_1 = 1` and
/// `R_{k+1}(n) = 4k (R_k(n+1) - R_k(n)) + (4k+n) (n+2k-1)_{k-1}`.
pub fn r_polys(k_max: i64) -> Vec<RPoly> {
    let mut out = Vec::new();
    let mut current = IntPoly::one();
    for k in 1..=k_max {
        out.push(RPoly {
            k,
            poly: current.clone(),
        });
        let four_k = BigInt::from(4 * k);
        let diff = (&current.shift_int(1) - &current).scale(&four_k);
        let falling = falling_factorial_poly::<BigInt>((k - 1) as usize).shift_int(2 * k - 1);
        let linear = IntPoly::linear(BigInt::one(), four_k);
        current = diff + &linear * &falling;
    }
    out
}

/// `R_k(n)` by the recursion over `k`.
pub fn r_poly_rec(k: i64) -> Result<RPoly> {
    if k < 1 {
        return Err(Error::Domain(format!("R_k needs k >= 1, got {k}")));
    }
    Ok(r_polys(k).pop().expect("k >= 1"))
}

/// `R_k(n) = (k-1)! (2^n 4^(k-1) - sum_{i=1}^n 2^(n-i) C(2k+i-2, k-1))`,
/// the closed form with the powers of two cleared.
pub fn r_closed(k: i64, n: i64) -> BigInt {
    let lead = pow2((n + 2 * k - 2) as u64);
    let mut c = binomial(2 * k - 1, k - 1);
    let mut tail = BigInt::zero();
    for i in 1..=n {
        tail += &c << (n - i);
        c = c * (2 * k + i - 1) / (k + i);
    }
    fact(k - 1) * (lead - tail)
}

/// The same closed form written with factorial quotients,
/// `2^n (k-1)! 4^(k-1) - sum 2^(n-i) (2k+i-2)!/(k+i-1)!`.
pub fn r_closed_factorial(k: i64, n: i64) -> BigInt {
    let lead = pow2((n + 2 * k - 2) as u64) * fact(k - 1);
    // (2k+i-2)!/(k+i-1)!, advanced one factor at a time
    let mut quotient = fact(2 * k - 1) / fact(k);
    let mut tail = BigInt::zero();
    for i in 1..=n {
        tail += &quotient << (n - i);
        quotient = quotient * (2 * k + i - 1) / (k + i);
    }
    lead - tail
}

/// `R_k(1) = (k-1)! (2^(2k-1) - C(2k-1, k))`.
pub fn r_at_one(k: i64) -> BigInt {
    fact(k - 1) * (pow2((2 * k - 1) as u64) - binomial(2 * k - 1, k))
}

/// `P_n(k) = c_n(k) (2^(n+k-1) - R_k(n) / (2k-2)!!)` for `n, k >= 1`.
pub fn p_via_r(n: i64, k: i64, r: &RPoly) -> Result<BigRational> {
    debug_assert_eq!(r.k, k);
    let r_val = r.poly.eval(&BigInt::from(n));
    let df = double_factorial(2 * k - 2)?;
    Ok(c_nk(n, k)? * (rat(pow2((n + k - 1) as u64)) - ratio(r_val, df)))
}

/// `P_n(0) = 4^m m!` with `m = floor((n-1)/2)`.
pub fn p_at_zero(n: i64) -> BigInt {
    let m = (n - 1) / 2;
    pow2(2 * m as u64) * fact(m)
}

/// `P_1(0), ..., P_N(0)` from the first-order recursion
/// `P_{n+1}(0) = P_n(0)/2 + 2^(n-2) ((n-1)/2)!` for odd `n` and
/// `P_{n+1}(0) = n P_n(0) + 2^(n-1) (n/2)!` for even `n`, with `P_1(0) = P_2(0) = 1`.
pub fn p_at_zero_by_recursion(max_n: i64) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    if max_n >= 2 {
        out.push(BigInt::one());
    }
    for n in 2..max_n {
        let prev = &out[(n - 1) as usize];
        let next = if n % 2 == 1 {
            let h = (n - 1) / 2;
            let v = rat(prev.clone()) / rat(2) + pow2_rat(n - 2) * rat(fact(h));
            to_int(&v).expect("integral")
        } else {
            prev.clone() * n + pow2((n - 1) as u64) * fact(n / 2)
        };
        out.push(next);
    }
    out
}

/// `P_n(1)`: `(2^n - 1)((n-1)/2)!` for odd `n`, `(2^n - 1)(n/2)!/(n+1)` for even `n`.
pub fn p_at_one(n: i64) -> BigInt {
    let mersenne = pow2(n as u64) - 1;
    if n % 2 == 1 {
        mersenne * fact((n - 1) / 2)
    } else {
        mersenne * fact(n / 2) / (n + 1)
    }
}

/// `P_n(1) = c_n(1) (2^n - 1)`.
pub fn p_at_one_via_prefactor(n: i64) -> Result<BigRational> {
    Ok(c_nk(n, 1)? * rat(pow2(n as u64) - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn kernel_values() {
        assert_eq!(t_nk(1, 1).unwrap(), bi(1));
        assert_eq!(t_nk(2, 1).unwrap(), bi(3));
        assert_eq!(t_nk(3, 2).unwrap(), bi(25));
        assert!(t_nk(0, 1).is_err());
        assert!(t_nk(1, 0).is_err());
        assert_eq!(t_kernel(0, 3), bi(0));
        assert_eq!(t_kernel(4, 0), bi(0));
    }

    #[test]
    fn kernel_matches_termwise_sum() {
        for n in 1..=25 {
            for k in 1..=15 {
                let direct: BigInt = (1..=n)
                    .map(|i| pow2((i - 1) as u64) * binomial(n + 2 * k - i - 1, k - 1))
                    .sum();
                assert_eq!(t_kernel(n, k), direct, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn kernel_reindexing_agrees() {
        for n in 1..=30 {
            for k in 1..=20 {
                assert_eq!(t_kernel(n, k), t_nk_reindexed(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn prefactor_values() {
        assert_eq!(c_nk(3, 1).unwrap(), rat(1));
        assert_eq!(c_nk(3, 2).unwrap(), ratio(4, 5));
        assert_eq!(c_nk(4, 1).unwrap(), ratio(2, 5));
        assert!(c_nk(0, 1).is_err());
    }

    #[test]
    fn explicit_values() {
        assert_eq!(p_explicit(3, 2).unwrap(), bi(10));
        assert_eq!(p_explicit(2, 1).unwrap(), bi(1));
        assert_eq!(p_explicit(12, 1).unwrap(), bi(226800));
        assert_eq!(p_explicit(12, 0).unwrap(), bi(122880));
        let f = explicit_forms(3, 2).unwrap();
        assert_eq!(f.prefactor_form, rat(10));
        assert!(p_explicit(0, 1).is_err());
        assert!(p_explicit(3, -1).is_err());
    }

    #[test]
    fn r_polynomials() {
        let rs = r_polys(6);
        assert_eq!(rs[0].poly, IntPoly::one());
        assert_eq!(rs[1].poly, IntPoly::from_ints(&[4, 1]));
        assert_eq!(rs[2].poly, IntPoly::from_ints(&[32, 11, 1]));
        assert_eq!(rs[5].poly, IntPoly::from_ints(&[122880, 55864, 10510, 1015, 50, 1]));
        assert_eq!(r_poly_rec(2).unwrap().poly, IntPoly::from_ints(&[4, 1]));
        assert!(r_poly_rec(0).is_err());
    }

    #[test]
    fn r_closed_forms() {
        assert_eq!(r_closed(2, 1), bi(5));
        assert_eq!(r_closed(3, 2), bi(58));
        for n in 1..10 {
            assert_eq!(r_closed(1, n), bi(1));
        }
        for k in 1..8 {
            for n in 1..8 {
                assert_eq!(r_closed(k, n), r_closed_factorial(k, n));
            }
            assert_eq!(r_closed(k, 1), r_at_one(k));
        }
    }

    #[test]
    fn values_at_zero_and_one() {
        assert_eq!(p_at_zero(5), bi(32));
        assert_eq!(p_at_zero(12), bi(122880));
        assert_eq!(p_at_zero(1), bi(1));
        assert_eq!(p_at_one(6), bi(54));
        assert_eq!(p_at_one(11), bi(245640));
        let rec = p_at_zero_by_recursion(40);
        for (i, v) in rec.iter().enumerate() {
            assert_eq!(v, &p_at_zero(i as i64 + 1), "n={}", i + 1);
        }
        for n in 1..30 {
            assert_eq!(p_at_one_via_prefactor(n).unwrap(), rat(p_at_one(n)));
        }
    }
}
