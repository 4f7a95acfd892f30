//! Linear Diophantine machinery for `a·x + b·z = 1`: extended gcd, the
//! one-parameter solution family, minimal pairs, and the shifted-product
//! equation `(a·k − z0)(a·l + b) = target` that decides whether some member
//! of the family has `z | x − 1` or `z | x + 1`.
//!
//! Everything here is generic over the integer type so the same code runs on
//! `BigInt` (the decision engine) and on machine integers (bulk scans).

use num_integer::Integer;
use num_traits::Signed;

use crate::error::{Error, Result};

/// Base solution of `a·x + b·z = g` with `g = gcd(|a|, |b|)`.
///
/// When `g = 1` every solution of `a·x + b·z = 1` is `(x0 + k·b, z0 − k·a)`
/// for exactly one integer `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutFamily<T> {
    pub a: T,
    pub b: T,
    pub g: T,
    pub x0: T,
    pub z0: T,
}

impl<T: Integer + Signed + Clone> BezoutFamily<T> {
    pub fn is_coprime(&self) -> bool {
        self.g.is_one()
    }

    /// The `k`-th member `(x0 + k·b/g, z0 − k·a/g)`.
    pub fn member(&self, k: &T) -> (T, T) {
        if self.g.is_zero() {
            return (self.x0.clone(), self.z0.clone());
        }
        let bs = self.b.clone() / self.g.clone();
        let as_ = self.a.clone() / self.g.clone();
        (
            self.x0.clone() + k.clone() * bs,
            self.z0.clone() - k.clone() * as_,
        )
    }

    /// Parameter `k` of a solution `(x, z)`, if it belongs to the family.
    pub fn index_of(&self, x: &T, z: &T) -> Option<T> {
        if self.g.is_zero() {
            return (x.is_zero() && z.is_zero()).then(T::zero);
        }
        if self.a.clone() * x.clone() + self.b.clone() * z.clone() != self.g {
            return None;
        }
        let bs = self.b.clone() / self.g.clone();
        let as_ = self.a.clone() / self.g.clone();
        let k = if !bs.is_zero() {
            (x.clone() - self.x0.clone()) / bs
        } else {
            (self.z0.clone() - z.clone()) / as_
        };
        (self.member(&k) == (x.clone(), z.clone())).then_some(k)
    }
}

/// Extended Euclid. The returned gcd is nonnegative and `(0, 0)` maps to
/// `g = 0, (x0, z0) = (0, 0)`.
pub fn ext_gcd<T: Integer + Signed + Clone>(a: T, b: T) -> BezoutFamily<T> {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (T::one(), T::zero());
    let (mut t0, mut t1) = (T::zero(), T::one());
    while !r1.is_zero() {
        let q = r0.div_floor(&r1);
        let r2 = r0 - q.clone() * r1.clone();
        let s2 = s0 - q.clone() * s1.clone();
        let t2 = t0 - q * t1.clone();
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.is_negative() {
        r0 = -r0;
        s0 = -s0;
        t0 = -t0;
    }
    if r0.is_zero() {
        s0 = T::zero();
        t0 = T::zero();
    }
    BezoutFamily { a, b, g: r0, x0: s0, z0: t0 }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MinimalPair<T> {
    pub x: T,
    pub z: T,
}

fn require_coprime_positive<T: Integer + Signed + Clone>(a: &T, b: &T) -> Result<BezoutFamily<T>>
where
    T: std::fmt::Display,
{
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "expected positive integers, got ({a}, {b})"
        )));
    }
    let fam = ext_gcd(a.clone(), b.clone());
    if !fam.is_coprime() {
        return Err(Error::NotCoprime {
            a: a.to_string().parse().expect("integer display"),
            b: b.to_string().parse().expect("integer display"),
        });
    }
    Ok(fam)
}

/// Solutions of `a·x + b·z = 1` with `|x| < b` and `|z| < a`.
///
/// For `a, b ≥ 2` there are exactly two, one with `x > 0 > z` and one with
/// `x < 0 < z`; they are returned in that order. If `a = 1` or `b = 1` the
/// strict bounds admit fewer than two solutions, so the non-strict bounds
/// `|x| ≤ b`, `|z| ≤ a` are used instead. This yields two adjacent family
/// members in every degenerate case.
pub fn minimal_pairs<T>(a: T, b: T) -> Result<Vec<MinimalPair<T>>>
where
    T: Integer + Signed + Clone + std::fmt::Display,
{
    let fam = require_coprime_positive(&a, &b)?;
    let strict = a > T::one() && b > T::one();
    let within = |v: &T, bound: &T| if strict { v.abs() < *bound } else { v.abs() <= *bound };

    // Members with x in [-b, b]: k ranges over at most three values.
    let lo = (-b.clone() - fam.x0.clone()).div_ceil(&b);
    let hi = (b.clone() - fam.x0.clone()).div_floor(&b);
    let mut pairs = Vec::new();
    let mut k = lo;
    while k <= hi {
        let (x, z) = fam.member(&k);
        if within(&x, &b) && within(&z, &a) {
            pairs.push(MinimalPair { x, z });
        }
        k = k + T::one();
    }
    pairs.sort_by(|p, q| q.x.cmp(&p.x));
    Ok(pairs)
}

/// Solution set of `(a·k − z0)(a·l + b) = target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShiftedProduct<T> {
    /// All solutions, sorted lexicographically.
    Finite(Vec<(T, T)>),
    /// `target = 0`: the union of the line `k = k_fixed` (any `l`) and the
    /// line `l = l_fixed` (any `k`); either may be absent.
    ZeroTarget { k_fixed: Option<T>, l_fixed: Option<T> },
}

impl<T> ShiftedProduct<T> {
    pub fn is_empty(&self) -> bool {
        match self {
            ShiftedProduct::Finite(v) => v.is_empty(),
            ShiftedProduct::ZeroTarget { k_fixed, l_fixed } => k_fixed.is_none() && l_fixed.is_none(),
        }
    }
}

/// Positive divisors of `|n|` in increasing order; empty for `n = 0`.
pub fn positive_divisors<T: Integer + Signed + Clone>(n: &T) -> Vec<T> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = T::one();
    while d.clone() * d.clone() <= n {
        if (n.clone() % d.clone()).is_zero() {
            let co = n.clone() / d.clone();
            if co != d {
                large.push(co);
            }
            small.push(d.clone());
        }
        d = d + T::one();
    }
    small.extend(large.into_iter().rev());
    small
}

/// All integer `(k, l)` with `(a·k − z0)(a·l + b) = target`.
///
/// Factor pairs `(d1, d2)` of `target` (both signs) give a solution exactly
/// when `d1 ≡ −z0` and `d2 ≡ b (mod a)`.
///
/// # Panics
///
/// Panics if `a < 1`.
pub fn solve_shifted_product<T: Integer + Signed + Clone>(
    a: &T,
    z0: &T,
    b: &T,
    target: &T,
) -> ShiftedProduct<T> {
    assert!(a.is_positive(), "solve_shifted_product requires a >= 1");
    if target.is_zero() {
        let k_fixed = (z0.clone() % a.clone()).is_zero().then(|| z0.clone() / a.clone());
        let l_fixed = (b.clone() % a.clone())
            .is_zero()
            .then(|| -(b.clone() / a.clone()));
        return ShiftedProduct::ZeroTarget { k_fixed, l_fixed };
    }
    let mut out = Vec::new();
    for d in positive_divisors(target) {
        for d1 in [d.clone(), -d.clone()] {
            let d2 = target.clone() / d1.clone();
            let kn = d1 + z0.clone();
            let ln = d2 - b.clone();
            if (kn.clone() % a.clone()).is_zero() && (ln.clone() % a.clone()).is_zero() {
                out.push((kn / a.clone(), ln / a.clone()));
            }
        }
    }
    out.sort();
    ShiftedProduct::Finite(out)
}

/// Outcome of the divisibility search across the whole solution family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityReport<T> {
    pub family: BezoutFamily<T>,
    /// Solutions of `(a·k − z0)(a·l + b) = a − 1` (members with `z | x − 1`).
    pub minus: ShiftedProduct<T>,
    /// Solutions of `(a·k − z0)(a·l + b) = −(a + 1)` (members with `z | x + 1`).
    pub plus: ShiftedProduct<T>,
    /// A family member `(x, z)` realising the divisibility, if any.
    pub solution: Option<(T, T)>,
}

impl<T> DivisibilityReport<T> {
    pub fn holds(&self) -> bool {
        self.solution.is_some()
    }
}

/// Searches the family of `a·x + b·z = 1` for a member with `z | x − 1` or
/// `z | x + 1`.
pub fn divisibility_search<T>(a: T, b: T) -> Result<DivisibilityReport<T>>
where
    T: Integer + Signed + Clone + std::fmt::Display,
{
    let family = require_coprime_positive(&a, &b)?;
    let minus = solve_shifted_product(&a, &family.z0, &b, &(a.clone() - T::one()));
    let plus = solve_shifted_product(&a, &family.z0, &b, &-(a.clone() + T::one()));

    let solution = if a.is_one() {
        // a = 1: the member with z = 0 is x = 1, and z = ±1 members exist too;
        // pick the one with z = 1 so that the divisibility is non-vacuous.
        let k = family.index_of(&(T::one() - b.clone()), &T::one());
        k.map(|k| family.member(&k))
    } else {
        let first = |sp: &ShiftedProduct<T>| match sp {
            ShiftedProduct::Finite(v) => v.first().map(|(k, _)| family.member(k)),
            ShiftedProduct::ZeroTarget { .. } => None,
        };
        first(&minus).or_else(|| first(&plus))
    };
    Ok(DivisibilityReport { family, minus, plus, solution })
}

/// True iff some solution of `a·x + b·z = 1` has `z | x − 1` or `z | x + 1`.
pub fn divisibility_isr1<T>(a: T, b: T) -> Result<bool>
where
    T: Integer + Signed + Clone + std::fmt::Display,
{
    divisibility_search(a, b).map(|r| r.holds())
}
