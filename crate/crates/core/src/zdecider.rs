//! Decision engine for idempotent stable range one over `M₂(ℤ)`.
//!
//! A determinant-zero matrix with content one is conjugated to the form
//! `[a b; 0 0]`, normalized to `a, b ≥ 0`, and run through the Euclidean
//! reduction to a terminal pair `a ≥ 2b`. There the clean criterion
//! `a ≡ ±1 (mod b)` decides, and an explicit idempotent witness is built and
//! carried back through every recorded step to the original matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::json;
use crate::mat2::{rank1_factor, unimodular_from_primitive, Mat2};

/// A nontrivial idempotent `E` with `Tr(A·E) = sign`, together with the
/// unitizer `Y = adj(E)`, for which `A + Y(XA − I₂)` is a unit for every `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub e: Mat2,
    pub y: Mat2,
    pub sign: i8,
}

impl Witness {
    pub fn new(e: Mat2, sign: i8) -> Self {
        let y = e.adjugate();
        Witness { e, y, sign }
    }

    /// Checks the structural invariants and `Tr(A·E) = sign`.
    pub fn check(&self, a: &Mat2) -> Result<()> {
        let fail = |msg: String| Err(Error::VerificationFailed(msg));
        if self.sign != 1 && self.sign != -1 {
            return fail(format!("sign {} is not ±1", self.sign));
        }
        if !self.e.is_nontrivial_idempotent() || !self.e.is_idempotent() {
            return fail(format!("E = {} is not a nontrivial idempotent", self.e));
        }
        if self.y != self.e.adjugate() {
            return fail(format!("Y = {} is not adj(E)", self.y));
        }
        if !self.y.is_idempotent() {
            return fail(format!("Y = {} is not idempotent", self.y));
        }
        let tr = (a * &self.e).trace();
        if tr != BigInt::from(self.sign) {
            return fail(format!("Tr(A·E) = {tr}, expected {}", self.sign));
        }
        Ok(())
    }
}

/// One invertible rewriting of the matrix under study.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionStep {
    /// `A ↦ T⁻¹·A·T`.
    Conjugate(Mat2),
    /// `[a b; 0 0] ↦ [a b−q·a; 0 0]`, which is conjugation by `[1 −q; 0 1]`.
    Shift(BigInt),
    /// `[a b; 0 0] ↦ [a −b; 0 0]`, conjugation by `diag(1, −1)`.
    FlipSecondEntry,
    /// `A ↦ −A`. Not a similarity: it keeps `E` and flips the sign of `Tr(A·E)`.
    Negate,
}

impl ReductionStep {
    pub fn apply(&self, a: &Mat2) -> Mat2 {
        match self {
            ReductionStep::Conjugate(t) => a.conjugate(t).expect("reduction uses unimodular matrices"),
            ReductionStep::Shift(q) => a.conjugate(&shift_matrix(q)).expect("unimodular"),
            ReductionStep::FlipSecondEntry => a.conjugate(&Mat2::diag(1, -1)).expect("unimodular"),
            ReductionStep::Negate => -a,
        }
    }
}

fn shift_matrix(q: &BigInt) -> Mat2 {
    Mat2 { a11: BigInt::one(), a12: -q, a21: BigInt::zero(), a22: BigInt::one() }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclideanOutcome {
    pub accepted: bool,
    pub steps: Vec<ReductionStep>,
    pub terminal: (BigInt, BigInt),
}

/// Reduces a coprime pair `(a, b)`, `a ≥ 1`, `b ≥ 0`, to a terminal pair with
/// `b = 0` or `a ≥ 2b`, and applies the clean criterion there.
///
/// While `a ≤ b` the second entry becomes `b mod a`; while `b < a < 2b` it
/// becomes `a − b`. `a` itself never changes.
pub fn euclidean_criterion(a: &BigInt, b: &BigInt) -> Result<EuclideanOutcome> {
    if !a.is_positive() || b.is_negative() {
        return Err(Error::InvalidArgument(format!("expected a ≥ 1, b ≥ 0, got ({a}, {b})")));
    }
    if !a.gcd(b).is_one() {
        return Err(Error::NotCoprime { a: a.clone(), b: b.clone() });
    }
    let mut b = b.clone();
    let mut steps = Vec::new();
    let two_b = |b: &BigInt| b * 2u32;
    loop {
        if b.is_zero() {
            break;
        }
        if *a <= b {
            let q = &b / a;
            b -= &q * a;
            steps.push(ReductionStep::Shift(q));
        } else if *a < two_b(&b) {
            steps.push(ReductionStep::Shift(BigInt::one()));
            steps.push(ReductionStep::FlipSecondEntry);
            b = a - &b;
        } else {
            break;
        }
    }
    let accepted = if b.is_zero() {
        a.is_one()
    } else {
        let r = a.mod_floor(&b);
        r.is_one() || r == &b - 1u32
    };
    Ok(EuclideanOutcome { accepted, steps, terminal: (a.clone(), b) })
}

/// Witness `E = [1 0; z 0]` for `[a b; 0 0]` when `a + b·z = sign`.
pub fn construct_witness_terminal(a: &BigInt, b: &BigInt, sign: i8) -> Result<Witness> {
    let s = BigInt::from(sign);
    let fails = || Error::CriterionFails { a: a.clone(), b: b.clone(), sign };
    if sign != 1 && sign != -1 {
        return Err(Error::InvalidArgument(format!("sign {sign} is not ±1")));
    }
    let z = if b.is_zero() {
        if *a != s {
            return Err(fails());
        }
        BigInt::zero()
    } else {
        let (z, r) = (&s - a).div_rem(b);
        if !r.is_zero() {
            return Err(fails());
        }
        z
    };
    Ok(Witness::new(Mat2 { a11: BigInt::one(), a12: BigInt::zero(), a21: z, a22: BigInt::zero() }, sign))
}

/// Witness for `[a b; 0 0]` from a Bézout solution `a·x + b·z = 1` whose `z`
/// divides `x − 1` (sign +1) or `x + 1` (sign −1).
pub fn construct_witness_from_solution(a: &BigInt, b: &BigInt, x: &BigInt, z: &BigInt) -> Result<Witness> {
    if a * x + b * z != BigInt::one() {
        return Err(Error::InvalidArgument(format!("({x}, {z}) does not solve {a}·x + {b}·z = 1")));
    }
    if z.is_zero() {
        return Err(Error::DivisibilityFails { x: x.clone(), z: z.clone() });
    }
    let (k, r) = (x - 1u32).div_rem(z);
    if r.is_zero() {
        let e = Mat2 { a11: x.clone(), a12: -(&k * x), a21: z.clone(), a22: -(&k * z) };
        return Ok(Witness::new(e, 1));
    }
    let (k, r) = (x + 1u32).div_rem(z);
    if r.is_zero() {
        let e = Mat2 { a11: -x, a12: &k * x, a21: -z, a22: &k * z };
        return Ok(Witness::new(e, -1));
    }
    Err(Error::DivisibilityFails { x: x.clone(), z: z.clone() })
}

/// Carries a witness for `[a b; 0 0]` to one for `[a b−q·a; 0 0]`.
///
/// With `E = [x y; z 1−x]` the result is
/// `[x+qz  y+q(1−2x)−q²z; z  1−(x+qz)]`; the `−q²z` term is what keeps
/// `x'(1−x') = y'z`.
pub fn shift_witness(w: &Witness, q: &BigInt) -> Witness {
    let (x, y, z) = (&w.e.a11, &w.e.a12, &w.e.a21);
    let x1 = x + q * z;
    let y1 = y + q * (BigInt::one() - x * 2u32) - q * q * z;
    let e = Mat2 { a22: BigInt::one() - &x1, a11: x1, a12: y1, a21: z.clone() };
    Witness::new(e, w.sign)
}

fn undo_step(w: &Witness, step: &ReductionStep) -> Result<Witness> {
    let conj_back = |t: &Mat2| -> Result<Witness> {
        let t_inv = t.inverse_unimodular()?;
        Ok(Witness::new(&(t * &w.e) * &t_inv, w.sign))
    };
    match step {
        ReductionStep::Conjugate(t) => conj_back(t),
        ReductionStep::Shift(q) => Ok(shift_witness(w, &-q)),
        ReductionStep::FlipSecondEntry => conj_back(&Mat2::diag(1, -1)),
        ReductionStep::Negate => Ok(Witness::new(w.e.clone(), -w.sign)),
    }
}

/// Carries a witness for the reduced matrix back to `original`, where
/// `steps` is the forward trace from `original` to the reduced matrix.
///
/// The witness is checked against the reduced matrix before, and against
/// `original` after, the transport.
pub fn transport_witness(original: &Mat2, steps: &[ReductionStep], w: &Witness) -> Result<Witness> {
    let mut chain = Vec::with_capacity(steps.len() + 1);
    chain.push(original.clone());
    for s in steps {
        let next = s.apply(chain.last().expect("nonempty"));
        chain.push(next);
    }
    w.check(chain.last().expect("nonempty"))?;
    let mut w = w.clone();
    for (step, before) in steps.iter().zip(&chain).rev() {
        w = undo_step(&w, step)?;
        w.check(before)?;
    }
    Ok(w)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// `A = 0₂`: the unitizer `I₂` works for every `X`.
    Zero,
    Witness(Witness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotIsr1Reason {
    ContentNotOne(BigInt),
    /// The clean criterion fails at this terminal pair `(a, b)`, `a ≥ 2b`.
    CleanCriterionFails { a: BigInt, b: BigInt },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Unit,
    Isr1(Certificate),
    NotSr1 { det: BigInt },
    NotIsr1(NotIsr1Reason),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Unit,
    Isr1,
    NotSr1,
    NotIsr1,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Unit => "unit",
            Status::Isr1 => "isr1",
            Status::NotSr1 => "not_sr1",
            Status::NotIsr1 => "not_isr1",
        }
    }
}

impl Decision {
    pub fn status(&self) -> Status {
        match self {
            Decision::Unit => Status::Unit,
            Decision::Isr1(_) => Status::Isr1,
            Decision::NotSr1 { .. } => Status::NotSr1,
            Decision::NotIsr1(_) => Status::NotIsr1,
        }
    }

    /// Units and isr1 matrices both have idempotent stable range one.
    pub fn has_isr1(&self) -> bool {
        matches!(self, Decision::Unit | Decision::Isr1(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Decision::Isr1(Certificate::Witness(w)) => Some(w),
            _ => None,
        }
    }
}

/// `[a b; 0 0]` form of a determinant-zero, content-one matrix with
/// `a, b ≥ 0`, and the steps leading there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub steps: Vec<ReductionStep>,
    pub a: BigInt,
    pub b: BigInt,
}

pub fn reduce_to_row_form(m: &Mat2) -> Result<Reduction> {
    let f = rank1_factor(m)?;
    let u = unimodular_from_primitive(&f.u)?;
    let t = u.inverse_unimodular()?;
    let mut steps = vec![ReductionStep::Conjugate(t.clone())];
    let reduced = m.conjugate(&t)?;
    debug_assert!(reduced.a21.is_zero() && reduced.a22.is_zero());
    let (mut a, mut b) = (reduced.a11, reduced.a12);
    if a.is_negative() {
        steps.push(ReductionStep::Negate);
        a = -a;
        b = -b;
    }
    if b.is_negative() {
        steps.push(ReductionStep::FlipSecondEntry);
        b = -b;
    }
    Ok(Reduction { steps, a, b })
}

pub fn decide_isr1(m: &Mat2) -> Decision {
    let det = m.det();
    if det.abs().is_one() {
        return Decision::Unit;
    }
    if !det.is_zero() {
        return Decision::NotSr1 { det };
    }
    if m.is_zero() {
        return Decision::Isr1(Certificate::Zero);
    }
    let c = m.content();
    if !c.is_one() {
        return Decision::NotIsr1(NotIsr1Reason::ContentNotOne(c));
    }
    let red = reduce_to_row_form(m).expect("nonzero determinant-zero matrix");
    let mut steps = red.steps;
    let terminal_witness = if red.a.is_zero() {
        // Content one forces the reduced form E₁₂; Tr(E₁₂·E) is E's (2,1) entry.
        debug_assert!(red.b.is_one());
        Witness::new(Mat2::new(1, 0, 1, 0), 1)
    } else {
        let outcome = euclidean_criterion(&red.a, &red.b).expect("content one implies coprime");
        steps.extend(outcome.steps);
        let (ta, tb) = outcome.terminal;
        if !outcome.accepted {
            return Decision::NotIsr1(NotIsr1Reason::CleanCriterionFails { a: ta, b: tb });
        }
        let sign = if tb.is_zero() || (&ta - 1u32).mod_floor(&tb).is_zero() { 1 } else { -1 };
        construct_witness_terminal(&ta, &tb, sign).expect("accepted terminal pair")
    };
    let w = transport_witness(m, &steps, &terminal_witness).expect("transport preserves witnesses");
    verify_witness(m, &w, &[Mat2::zero(), Mat2::identity()]).expect("witness verifies");
    Decision::Isr1(Certificate::Witness(w))
}

/// Verifies every witness invariant for `a`, then checks that
/// `det(A + Y(XA − I₂)) = −sign` for each sample `X`.
pub fn verify_witness(a: &Mat2, w: &Witness, x_samples: &[Mat2]) -> Result<()> {
    if !a.det().is_zero() {
        return Err(Error::VerificationFailed(format!("det(A) = {} is not 0", a.det())));
    }
    w.check(a)?;
    let expected = BigInt::from(-w.sign);
    let id = Mat2::identity();
    for x in x_samples {
        let d = (a + &(&w.y * &(&(x * a) - &id))).det();
        if d != expected {
            return Err(Error::VerificationFailed(format!(
                "det(A + Y(XA − I)) = {d} for X = {x}, expected {expected}"
            )));
        }
    }
    Ok(())
}

/// `A = idempotent + unit`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CleanDecomposition {
    pub idempotent: Mat2,
    pub unit: Mat2,
}

/// Clean decomposition `A = Y + (A − Y)` from the unitizer `Y`; the unit part
/// has determinant `−Tr(A·E)`.
pub fn clean_decompose(a: &Mat2) -> Result<CleanDecomposition> {
    let decision = decide_isr1(a);
    let w = decision.witness().ok_or_else(|| {
        Error::NotApplicable(format!("{a} has no nontrivial witness (status {})", decision.status().as_str()))
    })?;
    let unit = a - &w.y;
    if unit.det() != BigInt::from(-w.sign) || !w.y.is_idempotent() {
        return Err(Error::VerificationFailed(format!("{} + {} is not a clean decomposition", w.y, unit)));
    }
    Ok(CleanDecomposition { idempotent: w.y.clone(), unit })
}

/// JSON form of a decision.
#[derive(Debug, Clone, Serialize)]
pub struct DecisionRecord {
    pub input: [[serde_json::Number; 2]; 2],
    pub status: Status,
    pub det: serde_json::Number,
    pub content: serde_json::Number,
    #[serde(rename = "witness_E")]
    pub witness_e: Option<[[serde_json::Number; 2]; 2]>,
    #[serde(rename = "unitizer_Y")]
    pub unitizer_y: Option<[[serde_json::Number; 2]; 2]>,
    pub sign: Option<i8>,
    pub reason: Option<String>,
    pub terminal_pair: Option<[serde_json::Number; 2]>,
}

impl DecisionRecord {
    pub fn new(input: &Mat2, d: &Decision) -> Self {
        let mut rec = DecisionRecord {
            input: json::mat(input),
            status: d.status(),
            det: json::num(&input.det()),
            content: json::num(&input.content()),
            witness_e: None,
            unitizer_y: None,
            sign: None,
            reason: None,
            terminal_pair: None,
        };
        match d {
            // e = 0 for units, e = 1 for zero.
            Decision::Unit => rec.unitizer_y = Some(json::mat(&Mat2::zero())),
            Decision::Isr1(Certificate::Zero) => rec.unitizer_y = Some(json::mat(&Mat2::identity())),
            Decision::Isr1(Certificate::Witness(w)) => {
                rec.witness_e = Some(json::mat(&w.e));
                rec.unitizer_y = Some(json::mat(&w.y));
                rec.sign = Some(w.sign);
            }
            Decision::NotSr1 { .. } => rec.reason = Some("determinant_not_in_{-1,0,1}".into()),
            Decision::NotIsr1(NotIsr1Reason::ContentNotOne(_)) => rec.reason = Some("content_not_one".into()),
            Decision::NotIsr1(NotIsr1Reason::CleanCriterionFails { a, b }) => {
                rec.reason = Some("clean_criterion".into());
                rec.terminal_pair = Some([json::num(a), json::num(b)]);
            }
        }
        rec
    }
}
