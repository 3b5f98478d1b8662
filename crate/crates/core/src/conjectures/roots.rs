//! Exact rational roots of integer polynomials.
//!
//! Real roots are isolated by Descartes' rule of signs with bisection, every
//! isolating interval is refined until it can hold at most one fraction whose
//! denominator divides the leading coefficient, and those few candidates are
//! evaluated exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::IntPoly;

/// Limits on the search.
#[derive(Clone, Copy, Debug)]
pub struct RootSearch {
    /// Maximum number of candidate fractions evaluated.
    pub candidate_cap: u64,
    /// Maximum bisection depth.
    pub max_depth: u32,
}

impl Default for RootSearch {
    fn default() -> Self {
        Self {
            candidate_cap: 1_000_000,
            max_depth: 4096,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootOutcome {
    /// All rational roots, ascending, with the number of candidates evaluated.
    Complete { roots: Vec<BigRational>, candidates: u64 },
    /// The search hit a limit.
    Capped { reason: String },
}

fn sign_variations(coeffs: &[BigInt]) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for c in coeffs {
        let s = if c.is_positive() {
            1
        } else if c.is_negative() {
            -1
        } else {
            continue;
        };
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// `g(x + 1)`, in place on ascending coefficients.
fn taylor_shift_one(a: &mut [BigInt]) {
    let d = a.len();
    for i in 0..d.saturating_sub(1) {
        for j in (i..d - 1).rev() {
            let (lo, hi) = a.split_at_mut(j + 1);
            lo[j] += &hi[0];
        }
    }
}

fn shift_one(g: &IntPoly) -> IntPoly {
    let mut a = g.coeffs().to_vec();
    taylor_shift_one(&mut a);
    IntPoly::from_coeffs(a)
}

/// Upper bound on the number of roots of `g` in `(0, 1)`.
fn descartes_bound(g: &IntPoly) -> usize {
    let mut rev = g.coeffs().to_vec();
    rev.reverse();
    taylor_shift_one(&mut rev);
    sign_variations(&rev)
}

/// `2^d g(x/2)`, with any common power of two removed.
fn halve(g: &IntPoly, d: usize) -> IntPoly {
    let mut a: Vec<BigInt> = g.coeffs().iter().enumerate().map(|(i, c)| c << (d - i)).collect();
    let twos = a.iter().filter_map(|c| c.trailing_zeros()).min().unwrap_or(0);
    if twos > 0 {
        for c in &mut a {
            *c >>= twos;
        }
    }
    IntPoly::from_coeffs(a)
}

fn value_at_one(g: &IntPoly) -> BigInt {
    g.coeffs().iter().sum()
}

/// `g(x) = f(s * x)` for an integer `s`.
fn stretch(f: &IntPoly, s: &BigInt) -> IntPoly {
    let mut pow = BigInt::one();
    let mut out = Vec::with_capacity(f.coeffs().len());
    for c in f.coeffs() {
        out.push(c * &pow);
        pow *= s;
    }
    IntPoly::from_coeffs(out)
}

/// A power of two strictly larger than every root modulus, from Fujiwara's
/// bound `|z| <= 2 max_i |a_(d-i) / a_d|^(1/i)`.
fn root_bound(f: &IntPoly) -> BigInt {
    let d = f.degree().expect("nonzero");
    let lead = f.leading().expect("nonzero").abs();
    let mut e = 0u64;
    for i in 1..=d {
        let a = f.coeff(d - i).abs();
        while (&lead << (e * i as u64)) < a {
            e += 1;
        }
    }
    BigInt::one() << (e + 2)
}

/// Open interval `(lo, hi)` holding exactly one root, or an exact root.
enum Piece {
    Interval(BigRational, BigRational),
    Exact(BigRational),
}

struct Isolator {
    d: usize,
    scale: BigInt,
    sign: i64,
    target_width: BigRational,
    max_depth: u32,
    out: Vec<Piece>,
}

impl Isolator {
    /// Map `c/2^k + x/2^k`, `x` in `[0, 1]`, back to the original variable.
    fn point(&self, c: &BigInt, k: u32, x: i64) -> BigRational {
        let v = BigRational::new(c + x, BigInt::one() << k) * BigRational::from_integer(self.scale.clone());
        if self.sign < 0 {
            -v
        } else {
            v
        }
    }

    fn push_interval(&mut self, c: &BigInt, k: u32) {
        let a = self.point(c, k, 0);
        let b = self.point(c, k, 1);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.out.push(Piece::Interval(lo, hi));
    }

    fn width(&self, k: u32) -> BigRational {
        BigRational::new(self.scale.clone(), BigInt::one() << k)
    }

    /// Roots of `g` in `(0, 1)`, where `g` is the image of the subinterval `c` at depth `k`.
    fn run(&mut self, g: IntPoly, c: BigInt, k: u32) -> Result<(), String> {
        let mut stack = vec![(g, c, k)];
        while let Some((g, c, k)) = stack.pop() {
            if k > self.max_depth {
                return Err(format!("bisection depth exceeded {}", self.max_depth));
            }
            match descartes_bound(&g) {
                0 => {}
                1 => self.refine(g, c, k)?,
                _ => {
                    let left = halve(&g, self.d);
                    if value_at_one(&left).is_zero() {
                        self.out.push(Piece::Exact(self.point(&(&c * 2 + 1), k + 1, 0)));
                    }
                    let right = shift_one(&left);
                    stack.push((right, &c * 2 + 1, k + 1));
                    stack.push((left, &c * 2, k + 1));
                }
            }
        }
        Ok(())
    }

    /// Narrow an interval with exactly one root until it is shorter than the target width.
    fn refine(&mut self, mut g: IntPoly, mut c: BigInt, mut k: u32) -> Result<(), String> {
        // sign of g just right of 0 (g(0) itself may vanish at a recorded midpoint root)
        let start_sign = g
            .coeffs()
            .iter()
            .find(|c| !c.is_zero())
            .map(|c| c.signum())
            .unwrap_or_default();
        while self.width(k) >= self.target_width {
            if k > self.max_depth {
                return Err(format!("bisection depth exceeded {}", self.max_depth));
            }
            let left = halve(&g, self.d);
            let mid = value_at_one(&left);
            if mid.is_zero() {
                self.out.push(Piece::Exact(self.point(&(&c * 2 + 1), k + 1, 0)));
                return Ok(());
            }
            if mid.signum() != start_sign {
                g = left;
                c = &c * 2;
            } else {
                g = shift_one(&left);
                c = &c * 2 + 1;
            }
            k += 1;
        }
        self.push_interval(&c, k);
        Ok(())
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let e = &n / &d;
            if e != d {
                out.push(e);
            }
        }
        d += 1u32;
    }
    out.sort();
    out
}

/// `q^deg f(p/q)`, an integer.
fn eval_homogeneous(f: &IntPoly, p: &BigInt, q: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    let mut qpow = BigInt::one();
    for c in f.coeffs().iter().rev() {
        acc = acc * p + c * &qpow;
        qpow *= q;
    }
    acc
}

/// All rational roots of `f` (repeated roots reported once).
pub fn rational_roots(f: &IntPoly, limits: RootSearch) -> RootOutcome {
    let Some(d) = f.degree() else {
        return RootOutcome::Capped {
            reason: "zero polynomial".into(),
        };
    };
    let content = f.content();
    let prim = f.map(|c| c / &content);
    // strip the factor x^z first so that zero is handled exactly
    let z = prim.coeffs().iter().take_while(|c| c.is_zero()).count();
    let core = IntPoly::from_coeffs(prim.coeffs()[z..].to_vec());
    let mut roots = Vec::new();
    if z > 0 {
        roots.push(BigRational::zero());
    }
    let d_core = d - z;
    if d_core == 0 {
        return RootOutcome::Complete { roots, candidates: 0 };
    }
    let lead = core.leading().expect("nonzero").abs();
    let constant = core.coeff(0);
    let bound = root_bound(&core);
    let target_width = BigRational::new(BigInt::one(), &lead * &lead);
    let mut pieces = Vec::new();
    for sign in [1i64, -1] {
        let mut iso = Isolator {
            d: d_core,
            scale: bound.clone(),
            sign,
            target_width: target_width.clone(),
            max_depth: limits.max_depth,
            out: Vec::new(),
        };
        let g = stretch(&core, &(&bound * sign));
        if let Err(reason) = iso.run(g, BigInt::zero(), 0) {
            return RootOutcome::Capped { reason };
        }
        pieces.extend(iso.out);
    }
    let denominators = divisors(&lead);
    let mut candidates = 0u64;
    for piece in pieces {
        match piece {
            Piece::Exact(r) => {
                if !roots.contains(&r) {
                    roots.push(r);
                }
            }
            Piece::Interval(lo, hi) => {
                for q in &denominators {
                    let qr = BigRational::from_integer(q.clone());
                    let p: BigInt = (&lo * &qr).floor().to_integer() + 1;
                    if BigRational::new(p.clone(), q.clone()) >= hi {
                        continue;
                    }
                    if !(&constant % &p).is_zero() || !p.gcd(q).is_one() {
                        continue;
                    }
                    candidates += 1;
                    if candidates > limits.candidate_cap {
                        return RootOutcome::Capped {
                            reason: format!("more than {} candidates", limits.candidate_cap),
                        };
                    }
                    if eval_homogeneous(&core, &p, q).is_zero() {
                        roots.push(BigRational::new(p, q.clone()));
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    RootOutcome::Complete { roots, candidates }
}

/// Number of distinct real roots of a squarefree integer polynomial.
pub fn count_real_roots(f: &IntPoly, limits: RootSearch) -> Option<usize> {
    let d = f.degree()?;
    let z = f.coeffs().iter().take_while(|c| c.is_zero()).count();
    let core = IntPoly::from_coeffs(f.coeffs()[z..].to_vec());
    let bound = root_bound(&core);
    let mut total = usize::from(z > 0);
    if d == z {
        return Some(total);
    }
    for sign in [1i64, -1] {
        let mut iso = Isolator {
            d: d - z,
            scale: bound.clone(),
            sign,
            target_width: BigRational::from_integer(bound.clone() * 2),
            max_depth: limits.max_depth,
            out: Vec::new(),
        };
        iso.run(stretch(&core, &(&bound * sign)), BigInt::zero(), 0).ok()?;
        total += iso.out.len();
    }
    Some(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn roots(asc: &[i64]) -> Vec<BigRational> {
        match rational_roots(&IntPoly::from_ints(asc), RootSearch::default()) {
            RootOutcome::Complete { roots, .. } => roots,
            RootOutcome::Capped { reason } => panic!("{reason}"),
        }
    }

    #[test]
    fn linear_and_quadratic() {
        assert_eq!(roots(&[4, 3]), vec![ratio(-4, 3)]);
        assert_eq!(roots(&[-1, 0, 1]), vec![ratio(-1, 1), ratio(1, 1)]);
        assert_eq!(roots(&[1, 0, 1]), vec![]);
        assert_eq!(roots(&[-2, 0, 1]), vec![]);
        assert_eq!(roots(&[0, 0, 3]), vec![ratio(0, 1)]);
    }

    #[test]
    fn midpoint_and_close_roots() {
        // (x - 1/2)(x - 3/4)(x + 5)
        // = 8x^3 + 30x^2 - 47x + 15
        assert_eq!(roots(&[15, -47, 30, 8]), vec![ratio(-5, 1), ratio(1, 2), ratio(3, 4)]);
        // 100x^2 - 1: roots ±1/10
        assert_eq!(roots(&[-1, 0, 100]), vec![ratio(-1, 10), ratio(1, 10)]);
    }

    #[test]
    fn listed_polynomial_roots() {
        // P_8 = 4x^3 + 52x^2 + 240x + 384 has the root -4
        assert_eq!(roots(&[384, 240, 52, 4]), vec![ratio(-4, 1)]);
        // P_5 = 5x^2 + 25x + 32 has none
        assert_eq!(roots(&[32, 25, 5]), vec![]);
    }

    #[test]
    fn roots_near_the_bound() {
        assert_eq!(roots(&[-1000, 1]), vec![ratio(1000, 1)]);
        assert_eq!(roots(&[1024, 1]), vec![ratio(-1024, 1)]);
        // (x + 4096)(3x - 1)
        assert_eq!(roots(&[-4096, 12287, 3]), vec![ratio(-4096, 1), ratio(1, 3)]);
        let f = IntPoly::from_ints(&[-1000, 1]);
        assert!(root_bound(&f) > BigInt::from(1000));
    }

    #[test]
    fn depth_cap() {
        let lim = RootSearch {
            candidate_cap: 10,
            max_depth: 0,
        };
        assert!(matches!(
            rational_roots(&IntPoly::from_ints(&[-1, 0, 100]), lim),
            RootOutcome::Capped { .. }
        ));
    }

    #[test]
    fn real_root_count() {
        let lim = RootSearch::default();
        assert_eq!(count_real_roots(&IntPoly::from_ints(&[-2, 0, 1]), lim), Some(2));
        assert_eq!(count_real_roots(&IntPoly::from_ints(&[1, 0, 1]), lim), Some(0));
        assert_eq!(count_real_roots(&IntPoly::from_ints(&[0, -1, 0, 1]), lim), Some(3));
    }

    #[test]
    fn homogeneous_evaluation() {
        let f = IntPoly::from_ints(&[4, 3]);
        assert_eq!(
            eval_homogeneous(&f, &BigInt::from(-4), &BigInt::from(3)),
            BigInt::zero()
        );
        let g = IntPoly::from_ints(&[1, 2, 3]);
        // 9 * g(2/3) = 9 + 12 + 12
        assert_eq!(
            eval_homogeneous(&g, &BigInt::from(2), &BigInt::from(3)),
            BigInt::from(33)
        );
    }
}
