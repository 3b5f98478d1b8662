//! The defining recursion.
//!
//! `P_1 = P_2 = 1`, and for `n >= 2`
//!
//! ```text
//! odd n:   4(2x+n) P_{n+1}(x) = 2(x+n) P_n(x) + (2x+n) P_n(x+1) + (4x+n) l_n(x)
//! even n:  4 P_{n+1}(x)       = 4(x+n) P_n(x) + 2(2x+n+1) P_n(x+1) + (4x+n) l_{n-1}(x)
//! ```
//!
//! with `l_n(x) = (x+1)(x+2)...(x+(n-1)/2)`. This module is the reference
//! oracle; it never takes a shortcut through any closed form.

use crate::check::{Checker, IdentityCheck};
use crate::error::{Error, Result};
use crate::exact::{rat, shifted_product};
use crate::{IntPoly, Poly};

/// `deg P_n = floor((n-1)/2)`.
pub fn expected_degree(n: i64) -> usize {
    ((n - 1) / 2) as usize
}

/// `l_n(x)` for odd `n >= 1`; the empty product `1` at `n = 1`.
pub fn l_poly(n: i64) -> Result<Poly> {
    if n < 1 || n % 2 == 0 {
        return Err(Error::Domain(format!("l_n needs odd n >= 1, got {n}")));
    }
    Ok(shifted_product(1, ((n - 1) / 2) as usize))
}

/// Compute `P_{n+1}` from `P_n` for `n >= 2`.
pub fn p_step(n: i64, p_n: &Poly) -> Result<Poly> {
    if n < 2 {
        return Err(Error::Domain(format!("recursion step needs n >= 2, got {n}")));
    }
    let x = |slope: i64, c: i64| Poly::linear(rat(slope), rat(c));
    let shifted = p_n.shift_int(1);
    if n % 2 == 1 {
        let rhs = &x(2, 2 * n) * p_n + &x(2, n) * &shifted + &x(4, n) * &l_poly(n)?;
        rhs.exact_div(&x(8, 4 * n))
    } else {
        let rhs = &x(4, 4 * n) * p_n + &x(4, 2 * n + 2) * &shifted + &x(4, n) * &l_poly(n - 1)?;
        rhs.exact_div(&Poly::constant(rat(4)))
    }
}

/// [`p_step`] carried out over the integers. Fails whenever the quotient is
/// not an integer polynomial; the caller then reruns the rational step for
/// the precise error.
fn p_step_int(n: i64, p_n: &IntPoly) -> Result<IntPoly> {
    let x = |slope: i64, c: i64| IntPoly::linear(slope.into(), c.into());
    let shifted = p_n.shift_int(1);
    if n % 2 == 1 {
        let l = shifted_product(1, ((n - 1) / 2) as usize);
        let rhs = &x(2, 2 * n) * p_n + &x(2, n) * &shifted + &x(4, n) * &l;
        rhs.exact_div(&x(8, 4 * n))
    } else {
        let l = shifted_product(1, ((n - 2) / 2) as usize);
        let rhs = &x(4, 4 * n) * p_n + &x(4, 2 * n + 2) * &shifted + &x(4, n) * &l;
        rhs.exact_div(&IntPoly::constant(4.into()))
    }
}

/// `P_1, ..., P_N`, each validated integral and of degree `floor((n-1)/2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PSequence {
    polys: Vec<IntPoly>,
}

impl PSequence {
    /// Run the defining recursion up to `max_n`.
    pub fn generate(max_n: usize) -> Result<Self> {
        if max_n == 0 {
            return Err(Error::Domain("sequence length must be at least 1".into()));
        }
        let mut polys = vec![IntPoly::one()];
        if max_n >= 2 {
            polys.push(IntPoly::one());
        }
        for n in 2..max_n as i64 {
            let current = &polys[(n - 1) as usize];
            let next = match p_step_int(n, current) {
                Ok(p) => p,
                Err(_) => {
                    let p = p_step(n, &current.to_rational()).map_err(|e| e.at(n + 1))?;
                    validate(n + 1, &p)?
                }
            };
            check_degree(n + 1, &next)?;
            polys.push(next);
        }
        Ok(Self { polys })
    }

    /// Wrap polynomials produced by another route, `polys[0] = P_1`.
    pub fn from_rational(polys: Vec<Poly>) -> Result<Self> {
        let polys = polys
            .iter()
            .enumerate()
            .map(|(i, p)| validate(i as i64 + 1, p))
            .collect::<Result<Vec<_>>>()?;
        Self::from_integer(polys)
    }

    pub fn from_integer(polys: Vec<IntPoly>) -> Result<Self> {
        if polys.is_empty() {
            return Err(Error::Domain("empty sequence".into()));
        }
        for (i, p) in polys.iter().enumerate() {
            check_degree(i as i64 + 1, p)?;
        }
        Ok(Self { polys })
    }

    pub fn max_n(&self) -> usize {
        self.polys.len()
    }

    /// `P_n`; panics outside `1..=max_n`.
    pub fn get(&self, n: i64) -> &IntPoly {
        self.try_get(n)
            .unwrap_or_else(|| panic!("P_{n} outside 1..={}", self.polys.len()))
    }

    pub fn try_get(&self, n: i64) -> Option<&IntPoly> {
        usize::try_from(n - 1).ok().and_then(|i| self.polys.get(i))
    }

    pub fn rational(&self, n: i64) -> Poly {
        self.get(n).to_rational()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &IntPoly)> {
        self.polys.iter().enumerate().map(|(i, p)| (i as i64 + 1, p))
    }

    /// The first `n` polynomials.
    pub fn truncated(&self, n: usize) -> Self {
        Self {
            polys: self.polys[..n.min(self.polys.len())].to_vec(),
        }
    }

    pub fn into_polys(self) -> Vec<IntPoly> {
        self.polys
    }
}

/// Every `P_{n+1}` satisfies the defining relation with `P_n`, multiplied
/// out over the integers (no division), for `2 <= n < max_n`.
pub fn check_recursion(seq: &PSequence) -> IdentityCheck {
    let mut chk = Checker::new(
        "P.recursion",
        "integer P_(n+1) satisfies the defining relation with P_n",
    );
    let x = |slope: i64, c: i64| IntPoly::linear(slope.into(), c.into());
    for n in 2..seq.max_n() as i64 {
        let p = seq.get(n);
        let next = seq.get(n + 1);
        let shifted = p.shift_int(1);
        let (lhs, rhs) = if n % 2 == 1 {
            let l = shifted_product(1, ((n - 1) / 2) as usize);
            (
                &x(8, 4 * n) * next,
                &x(2, 2 * n) * p + &x(2, n) * &shifted + &x(4, n) * &l,
            )
        } else {
            let l = shifted_product(1, ((n - 2) / 2) as usize);
            (
                next.scale(&4.into()),
                &x(4, 4 * n) * p + &x(4, 2 * n + 2) * &shifted + &x(4, n) * &l,
            )
        };
        chk.case(n + 1, None, &lhs, &rhs);
    }
    chk.finish()
}

/// `deg P_n = floor((n-1)/2)` for every stored `n`.
pub fn check_degrees(seq: &PSequence) -> IdentityCheck {
    let mut chk = Checker::new("P.degree", "deg P_n = floor((n-1)/2)");
    for (n, p) in seq.iter() {
        let found = p.degree().map_or(-1, |d| d as i64);
        chk.case(n, None, &found, &(expected_degree(n) as i64));
    }
    chk.finish()
}

/// Shorthand for [`PSequence::generate`].
pub fn p_sequence(max_n: usize) -> Result<PSequence> {
    PSequence::generate(max_n)
}

fn validate(n: i64, p: &Poly) -> Result<IntPoly> {
    let ints = p
        .to_integer()
        .ok_or_else(|| Error::NotIntegral(format!("P_{n} = {p}")).at(n))?;
    check_degree(n, &ints)?;
    Ok(ints)
}

fn check_degree(n: i64, p: &IntPoly) -> Result<()> {
    let expected = expected_degree(n);
    if p.degree() != Some(expected) {
        return Err(Error::Degree {
            n,
            expected,
            found: p.degree(),
        });
    }
    Ok(())
}
