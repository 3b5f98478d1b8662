//! Polynomial relations between neighbouring members of the sequence, each
//! checked as an identity in `Z[x]` (coefficient vectors compared exactly).

use num_bigint::BigInt;

use crate::check::{Checker, IdentityCheck};
use crate::exact::shifted_product;
use crate::{IntPoly, PSequence};

/// `(x+start)(x+start+1)...(x+start+count-1)`.
fn prod(start: i64, count: i64) -> IntPoly {
    shifted_product(start, count.max(0) as usize)
}

fn lin(slope: i64, c: i64) -> IntPoly {
    IntPoly::linear(slope.into(), c.into())
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn pn(s: &PSequence, n: i64) -> IntPoly {
    s.get(n).clone()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(n: i64) -> Self {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A relation `lhs(n) = rhs(n)` valid for every `n >= n_min` of one parity.
#[derive(Clone, Copy)]
pub struct Relation {
    pub id: &'static str,
    pub description: &'static str,
    pub parity: Parity,
    pub n_min: i64,
    sides: fn(&PSequence, i64) -> (IntPoly, IntPoly),
}

impl Relation {
    pub fn sides(&self, seq: &PSequence, n: i64) -> (IntPoly, IntPoly) {
        (self.sides)(seq, n)
    }

    /// Check over every applicable `n <= seq.max_n()`.
    pub fn check(&self, seq: &PSequence) -> IdentityCheck {
        let mut chk = Checker::new(self.id, self.description);
        for n in self.n_min..=seq.max_n() as i64 {
            if Parity::of(n) == self.parity {
                let (lhs, rhs) = self.sides(seq, n);
                chk.case(n, None, &lhs, &rhs);
            }
        }
        chk.finish()
    }
}

pub const RELATIONS: &[Relation] = &[
    Relation {
        id: "6.3",
        description: "(2x+n-2)P_n = 2(x+n-1)(x+n-2)P_{n-2} + (4x+3n-4) x(x+1)...(x+(n-3)/2), odd n",
        parity: Parity::Odd,
        n_min: 3,
        sides: |s, n| {
            let lhs = &lin(2, n - 2) * &pn(s, n);
            let rhs = (&lin(1, n - 1) * &lin(2, 2 * n - 4)) * pn(s, n - 2) + &lin(4, 3 * n - 4) * &prod(0, (n - 1) / 2);
            (lhs, rhs)
        },
    },
    Relation {
        id: "6.4",
        description: "(2x+n-1)P_n = 2(x+n-1)(x+n-2)P_{n-2} + (1/2)(4x+3n-4) x(x+1)...(x+(n-4)/2), even n",
        parity: Parity::Even,
        n_min: 4,
        // both sides doubled to stay in Z[x]
        sides: |s, n| {
            let lhs = (&lin(2, n - 1) * &pn(s, n)).scale(&int(2));
            let rhs =
                (&lin(2, 2 * n - 2) * &lin(2, 2 * n - 4)) * pn(s, n - 2) + &lin(4, 3 * n - 4) * &prod(0, (n - 2) / 2);
            (lhs, rhs)
        },
    },
    Relation {
        id: "7.3",
        description: "P_n = (x+n-1)P_{n-2}(x+1) + (x+1)...(x+n/2-1), even n",
        parity: Parity::Even,
        n_min: 4,
        sides: |s, n| {
            let rhs = &lin(1, n - 1) * &pn(s, n - 2).shift_int(1) + prod(1, n / 2 - 1);
            (pn(s, n), rhs)
        },
    },
    Relation {
        id: "7.4",
        description: "P_n = 2(x+n-1)P_{n-1} + x(x+1)...(x+(n-3)/2), odd n",
        parity: Parity::Odd,
        n_min: 3,
        sides: |s, n| {
            let rhs = &lin(2, 2 * n - 2) * &pn(s, n - 1) + prod(0, (n - 1) / 2);
            (pn(s, n), rhs)
        },
    },
    Relation {
        id: "8.1",
        description: "(2x+n-1)P_n = (x+n-1)P_{n-1} + x(x+1)...(x+n/2-1), even n",
        parity: Parity::Even,
        n_min: 4,
        sides: |s, n| {
            let lhs = &lin(2, n - 1) * &pn(s, n);
            let rhs = &lin(1, n - 1) * &pn(s, n - 1) + prod(0, n / 2);
            (lhs, rhs)
        },
    },
    Relation {
        id: "8.3",
        description: "(2x+n)P_n(x+1) = 2(x+n)P_n - n (x+1)...(x+(n-1)/2), odd n",
        parity: Parity::Odd,
        n_min: 3,
        sides: |s, n| {
            let p = pn(s, n);
            let lhs = &lin(2, n) * &p.shift_int(1);
            let rhs = &lin(2, 2 * n) * &p - prod(1, (n - 1) / 2).scale(&int(n));
            (lhs, rhs)
        },
    },
    Relation {
        id: "8.3",
        description: "(2x+n+1)P_n(x+1) = 2(x+n)P_n - (n/2)(x+1)...(x+n/2-1), even n",
        parity: Parity::Even,
        n_min: 4,
        sides: |s, n| {
            let p = pn(s, n);
            let lhs = &lin(2, n + 1) * &p.shift_int(1);
            let rhs = &lin(2, 2 * n) * &p - prod(1, n / 2 - 1).scale(&int(n / 2));
            (lhs, rhs)
        },
    },
    Relation {
        id: "8.7",
        description: "P_n(x) = P_n(x-1) + n P_{n-1}(x), odd n",
        parity: Parity::Odd,
        n_min: 3,
        sides: |s, n| {
            let p = pn(s, n);
            let rhs = p.shift_int(-1) + pn(s, n - 1).scale(&int(n));
            (p, rhs)
        },
    },
    Relation {
        id: "8.8",
        description: "(2x+n-1)P_n(x) = (2x+n-2)P_n(x-1) + (n/2)P_{n-1}(x), even n",
        parity: Parity::Even,
        n_min: 4,
        sides: |s, n| {
            let p = pn(s, n);
            let lhs = &lin(2, n - 1) * &p;
            let rhs = &lin(2, n - 2) * &p.shift_int(-1) + pn(s, n - 1).scale(&int(n / 2));
            (lhs, rhs)
        },
    },
    Relation {
        id: "8.11",
        description: "2P_n = P_{n-1}(x+1) + (x+1)...(x+n/2-1), even n",
        parity: Parity::Even,
        n_min: 4,
        sides: |s, n| {
            let lhs = pn(s, n).scale(&int(2));
            let rhs = pn(s, n - 1).shift_int(1) + prod(1, n / 2 - 1);
            (lhs, rhs)
        },
    },
    Relation {
        id: "8.12",
        description: "P_n = (2x+n)P_{n-1}(x+1) + (x+1)...(x+(n-1)/2), odd n",
        parity: Parity::Odd,
        n_min: 3,
        sides: |s, n| {
            let rhs = &lin(2, n) * &pn(s, n - 1).shift_int(1) + prod(1, (n - 1) / 2);
            (pn(s, n), rhs)
        },
    },
];

/// All relations in [`RELATIONS`] over the whole sequence.
pub fn check_p_relations(seq: &PSequence) -> Vec<IdentityCheck> {
    RELATIONS.iter().map(|r| r.check(seq)).collect()
}
