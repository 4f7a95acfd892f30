//! Brute-force evaluation of the ring-theoretic definitions over `M₂(ℤ/n)`.
//!
//! Everything here is plain enumeration: a matrix ring of order `n⁴` is small
//! enough for `n ≤ 4` to classify every element, and for `n ≤ 12` to sweep all
//! `X` for a handful of chosen elements.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest modulus for which every element is classified.
pub const FULL_MAX_MODULUS: u32 = 4;
/// Largest modulus for single-matrix checks.
pub const TARGETED_MAX_MODULUS: u32 = 12;

/// 2×2 matrix over `ℤ/n`, entries row-major in `[0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModMat {
    pub n: u32,
    pub e: [u32; 4],
}

impl ModMat {
    pub fn new(n: u32, a11: i64, a12: i64, a21: i64, a22: i64) -> Self {
        let r = |v: i64| v.rem_euclid(n as i64) as u32;
        ModMat { n, e: [r(a11), r(a12), r(a21), r(a22)] }
    }

    pub fn zero(n: u32) -> Self {
        ModMat { n, e: [0; 4] }
    }

    pub fn identity(n: u32) -> Self {
        ModMat { n, e: [1 % n, 0, 0, 1 % n] }
    }

    /// The `i`-th matrix in lexicographic order of `(a11, a12, a21, a22)`.
    pub fn from_index(n: u32, mut i: u32) -> Self {
        let mut e = [0; 4];
        for slot in e.iter_mut().rev() {
            *slot = i % n;
            i /= n;
        }
        ModMat { n, e }
    }

    pub fn index(&self) -> u32 {
        self.e.iter().fold(0, |acc, &v| acc * self.n + v)
    }

    fn md(&self, v: u32) -> u32 {
        v % self.n
    }

    pub fn mul(&self, o: &ModMat) -> ModMat {
        let [a, b, c, d] = self.e;
        let [p, q, r, s] = o.e;
        ModMat {
            n: self.n,
            e: [
                self.md(a * p + b * r),
                self.md(a * q + b * s),
                self.md(c * p + d * r),
                self.md(c * q + d * s),
            ],
        }
    }

    pub fn add(&self, o: &ModMat) -> ModMat {
        let mut e = self.e;
        for (x, y) in e.iter_mut().zip(o.e) {
            *x = self.md(*x + y);
        }
        ModMat { n: self.n, e }
    }

    pub fn neg(&self) -> ModMat {
        let mut e = self.e;
        for x in e.iter_mut() {
            *x = self.md(self.n - *x);
        }
        ModMat { n: self.n, e }
    }

    pub fn sub(&self, o: &ModMat) -> ModMat {
        self.add(&o.neg())
    }

    pub fn det(&self) -> u32 {
        let [a, b, c, d] = self.e;
        self.md(a * d + self.n * self.n - self.md(b * c))
    }

    pub fn trace(&self) -> u32 {
        self.md(self.e[0] + self.e[3])
    }

    pub fn adjugate(&self) -> ModMat {
        let [a, b, c, d] = self.e;
        ModMat { n: self.n, e: [d, self.md(self.n - b), self.md(self.n - c), a] }
    }

    pub fn scale(&self, k: u32) -> ModMat {
        let mut e = self.e;
        for x in e.iter_mut() {
            *x = self.md(*x * k);
        }
        ModMat { n: self.n, e }
    }

    pub fn is_unit(&self) -> bool {
        is_unit_residue(self.det(), self.n)
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self) == *self
    }
}

impl fmt::Display for ModMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.e;
        write!(f, "{a},{b};{c},{d}")
    }
}

impl Serialize for ModMat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let [a, b, c, d] = self.e;
        [[a, b], [c, d]].serialize(s)
    }
}

pub fn is_unit_residue(v: u32, n: u32) -> bool {
    v.gcd(&n) == 1
}

fn check_modulus(n: u32, max: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("modulus must be at least 2, got {n}")));
    }
    if n > max {
        return Err(Error::ModulusTooLarge { n, max });
    }
    Ok(())
}

pub fn all_matrices(n: u32) -> impl Iterator<Item = ModMat> {
    (0..n.pow(4)).map(move |i| ModMat::from_index(n, i))
}

/// All idempotents of `M₂(ℤ/n)` in lexicographic order.
pub fn enumerate_idempotents(n: u32) -> Result<Vec<ModMat>> {
    check_modulus(n, TARGETED_MAX_MODULUS)?;
    Ok(all_matrices(n).filter(ModMat::is_idempotent).collect())
}

/// The two readings of the defining expression: `A + E(XA − I)` (C1) and
/// `A + E(I − XA)` (C2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    C1,
    C2,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::C1, Convention::C2];

    /// `XA − I` for C1, `I − XA` for C2.
    fn factor(self, xa: &ModMat) -> ModMat {
        let id = ModMat::identity(xa.n);
        match self {
            Convention::C1 => xa.sub(&id),
            Convention::C2 => id.sub(xa),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::C1 => "c1",
            Convention::C2 => "c2",
        })
    }
}

/// `M₂(ℤ/n)` with its idempotents precomputed.
#[derive(Debug, Clone)]
pub struct ModRing {
    pub n: u32,
    pub idempotents: Vec<ModMat>,
}

impl ModRing {
    pub fn new(n: u32) -> Result<Self> {
        Ok(ModRing { n, idempotents: enumerate_idempotents(n)? })
    }

    pub fn elements(&self) -> impl Iterator<Item = ModMat> {
        all_matrices(self.n)
    }

    /// First `X` (lexicographic) for which no multiplier from `pool` makes
    /// `build(X, R)` a unit.
    fn forall_exists(
        &self,
        pool: &[ModMat],
        build: impl Fn(&ModMat, &ModMat) -> ModMat,
    ) -> Option<ModMat> {
        self.elements().find(|x| !pool.iter().any(|r| build(x, r).is_unit()))
    }

    /// `None` if `A` has left isr1; otherwise the first failing `X`.
    pub fn left_isr1_counterexample(&self, a: &ModMat, conv: Convention) -> Option<ModMat> {
        self.forall_exists(&self.idempotents, |x, e| a.add(&e.mul(&conv.factor(&x.mul(a)))))
    }

    pub fn right_isr1_counterexample(&self, a: &ModMat, conv: Convention) -> Option<ModMat> {
        self.forall_exists(&self.idempotents, |x, e| a.add(&conv.factor(&a.mul(x)).mul(e)))
    }

    /// True if no idempotent `E` makes `A + E(XA − I)` (resp. C2) a unit.
    pub fn left_isr1_fails_at(&self, a: &ModMat, x: &ModMat, conv: Convention) -> bool {
        let f = conv.factor(&x.mul(a));
        !self.idempotents.iter().any(|e| a.add(&e.mul(&f)).is_unit())
    }

    pub fn is_left_isr1_def(&self, a: &ModMat, conv: Convention) -> bool {
        self.left_isr1_counterexample(a, conv).is_none()
    }

    pub fn is_right_isr1_def(&self, a: &ModMat, conv: Convention) -> bool {
        self.right_isr1_counterexample(a, conv).is_none()
    }

    /// Same quantifiers as isr1 with the multiplier ranging over the whole ring.
    pub fn sr1_counterexample(&self, a: &ModMat) -> Option<ModMat> {
        let all: Vec<ModMat> = self.elements().collect();
        self.forall_exists(&all, |x, r| a.add(&r.mul(&Convention::C1.factor(&x.mul(a)))))
    }

    pub fn is_sr1_def(&self, a: &ModMat) -> bool {
        self.sr1_counterexample(a).is_none()
    }

    /// An idempotent `E` with `A − E` a unit.
    pub fn clean_idempotent(&self, a: &ModMat) -> Option<ModMat> {
        self.idempotents.iter().copied().find(|e| a.sub(e).is_unit())
    }

    pub fn is_clean(&self, a: &ModMat) -> bool {
        self.clean_idempotent(a).is_some()
    }

    pub fn is_strongly_clean(&self, a: &ModMat) -> bool {
        self.idempotents.iter().any(|e| a.sub(e).is_unit() && a.mul(e) == e.mul(a))
    }

    pub fn thm1_sr1_counterexample(&self, a: &ModMat) -> Option<ModMat> {
        let all: Vec<ModMat> = self.elements().collect();
        self.elements()
            .find(|x| !all.iter().any(|y| is_unit_residue(thm1_expression(a, x, y), self.n)))
    }

    pub fn thm1_isr1_counterexample(&self, a: &ModMat) -> Option<ModMat> {
        self.elements().find(|x| {
            !self.idempotents.iter().any(|y| is_unit_residue(thm1_expression(a, x, y), self.n))
        })
    }

    pub fn thm1_sr1_predicate(&self, a: &ModMat) -> bool {
        self.thm1_sr1_counterexample(a).is_none()
    }

    pub fn thm1_isr1_predicate(&self, a: &ModMat) -> bool {
        self.thm1_isr1_counterexample(a).is_none()
    }
}

/// `det Y·(det X·det A − Tr(XA) + 1) + det((Tr(XY) + 1)·A) − Tr(A·adj Y)`
/// reduced mod `n`.
pub fn thm1_expression(a: &ModMat, x: &ModMat, y: &ModMat) -> u32 {
    let n = a.n;
    let first = y.det() * ((x.det() * a.det() + 2 * n - x.mul(a).trace() + 1) % n) % n;
    let middle = a.scale((x.mul(y).trace() + 1) % n).det();
    let last = a.mul(&y.adjugate()).trace();
    (first + middle + n - last) % n
}

/// Middle term of [`thm1_expression`] in closed form, `(Tr(XY) + 1)²·det A`.
pub fn thm1_middle_closed_form(a: &ModMat, x: &ModMat, y: &ModMat) -> u32 {
    let n = a.n;
    let t = (x.mul(y).trace() + 1) % n;
    t * t % n * a.det() % n
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub matrix: ModMat,
    /// Failing `X` or other witnessing matrix, when the claim has one.
    pub certificate: Option<ModMat>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub holds: bool,
    /// Comparisons between readings whose equivalence is not settled; a
    /// divergence here is reported, not treated as a failure.
    pub open_question: bool,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConventionCounts {
    pub convention: Convention,
    pub left_isr1: usize,
    pub right_isr1: usize,
    pub thm1_isr1: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub elements: usize,
    pub units: usize,
    pub idempotents: usize,
    pub clean: usize,
    pub strongly_clean: usize,
    pub sr1: usize,
    pub thm1_sr1: usize,
    pub by_convention: Vec<ConventionCounts>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsrVerdict {
    pub convention: Convention,
    pub left_isr1: bool,
    pub left_failing_x: Option<ModMat>,
    pub right_isr1: bool,
    pub right_failing_x: Option<ModMat>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixClassification {
    pub matrix: ModMat,
    pub unit: bool,
    pub idempotent: bool,
    pub clean: bool,
    pub clean_idempotent: Option<ModMat>,
    pub strongly_clean: bool,
    pub sr1: bool,
    pub isr1: Vec<IsrVerdict>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleMode {
    Full,
    Targeted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub n: u32,
    pub mode: OracleMode,
    pub conventions: Vec<Convention>,
    pub counts: Option<Counts>,
    pub matrices: Vec<MatrixClassification>,
    pub claims: Vec<ClaimResult>,
}

impl OracleReport {
    /// Claims that fail and are not flagged as open comparisons.
    pub fn unexpected_violations(&self) -> impl Iterator<Item = &ClaimResult> {
        self.claims.iter().filter(|c| !c.holds && !c.open_question)
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.id == id)
    }
}

fn claim(id: impl Into<String>, open_question: bool, violations: Vec<Violation>) -> ClaimResult {
    ClaimResult { id: id.into(), holds: violations.is_empty(), open_question, violations }
}

fn classify(ring: &ModRing, a: &ModMat, conventions: &[Convention]) -> MatrixClassification {
    let clean_idempotent = ring.clean_idempotent(a);
    MatrixClassification {
        matrix: *a,
        unit: a.is_unit(),
        idempotent: a.is_idempotent(),
        clean: clean_idempotent.is_some(),
        clean_idempotent,
        strongly_clean: ring.is_strongly_clean(a),
        sr1: ring.is_sr1_def(a),
        isr1: conventions
            .iter()
            .map(|&conv| {
                let lx = ring.left_isr1_counterexample(a, conv);
                let rx = ring.right_isr1_counterexample(a, conv);
                IsrVerdict {
                    convention: conv,
                    left_isr1: lx.is_none(),
                    left_failing_x: lx,
                    right_isr1: rx.is_none(),
                    right_failing_x: rx,
                }
            })
            .collect(),
    }
}

fn per_matrix_claims(rows: &[MatrixClassification], conventions: &[Convention], zero: ModMat) -> Vec<ClaimResult> {
    let mut claims = Vec::new();
    for &conv in conventions {
        let verdicts = rows.iter().map(|r| (r, r.isr1.iter().find(|v| v.convention == conv).expect("conv")));
        let mut sym = Vec::new();
        let mut base = Vec::new();
        let mut clean = Vec::new();
        for (r, v) in verdicts {
            if v.left_isr1 != v.right_isr1 {
                sym.push(Violation {
                    matrix: r.matrix,
                    certificate: v.left_failing_x.or(v.right_failing_x),
                    note: format!("left {} right {}", v.left_isr1, v.right_isr1),
                });
            }
            if (r.unit || r.matrix == zero) && !v.left_isr1 {
                base.push(Violation {
                    matrix: r.matrix,
                    certificate: v.left_failing_x,
                    note: "unit or zero without left isr1".into(),
                });
            }
            if v.left_isr1 && !r.clean {
                clean.push(Violation { matrix: r.matrix, certificate: None, note: "left isr1 but not clean".into() });
            }
        }
        claims.push(claim(format!("left_right_symmetry_{conv}"), false, sym));
        claims.push(claim(format!("units_and_zero_in_isr1_{conv}"), false, base));
        claims.push(claim(format!("isr1_in_clean_{conv}"), false, clean));
    }
    claims
}

/// Classifies every element of `M₂(ℤ/n)` and checks the claim list.
pub fn oracle_full(n: u32, conventions: &[Convention]) -> Result<OracleReport> {
    check_modulus(n, FULL_MAX_MODULUS)?;
    let conventions = normalize(conventions);
    let ring = ModRing::new(n)?;
    let zero = ModMat::zero(n);
    let rows: Vec<MatrixClassification> = ring.elements().map(|a| classify(&ring, &a, &conventions)).collect();
    let mut claims = per_matrix_claims(&rows, &conventions, zero);

    let mut sr1_div = Vec::new();
    let mut thm1_sr1 = 0;
    for r in &rows {
        let t = ring.thm1_sr1_counterexample(&r.matrix);
        thm1_sr1 += usize::from(t.is_none());
        if t.is_none() != r.sr1 {
            sr1_div.push(Violation {
                matrix: r.matrix,
                certificate: t.or_else(|| ring.sr1_counterexample(&r.matrix)),
                note: format!("definition {} expression {}", r.sr1, t.is_none()),
            });
        }
    }
    claims.push(claim("sr1_definition_matches_expression", true, sr1_div));

    let mut thm1_isr1 = 0;
    let mut isr1_div = Vec::new();
    let mut by_convention = Vec::new();
    let thm1: Vec<Option<ModMat>> = rows.iter().map(|r| ring.thm1_isr1_counterexample(&r.matrix)).collect();
    thm1_isr1 += thm1.iter().filter(|t| t.is_none()).count();
    for &conv in &conventions {
        let mut div = Vec::new();
        let (mut left, mut right) = (0, 0);
        for (r, t) in rows.iter().zip(&thm1) {
            let v = r.isr1.iter().find(|v| v.convention == conv).expect("conv");
            left += usize::from(v.left_isr1);
            right += usize::from(v.right_isr1);
            if v.left_isr1 != t.is_none() {
                div.push(Violation {
                    matrix: r.matrix,
                    certificate: t.or(v.left_failing_x),
                    note: format!("definition {} expression {}", v.left_isr1, t.is_none()),
                });
            }
        }
        by_convention.push(ConventionCounts { convention: conv, left_isr1: left, right_isr1: right, thm1_isr1 });
        isr1_div.push(claim(format!("isr1_definition_matches_expression_{conv}"), true, div));
    }
    claims.extend(isr1_div);

    if conventions.len() == 2 {
        let div = rows
            .iter()
            .filter(|r| r.isr1[0].left_isr1 != r.isr1[1].left_isr1)
            .map(|r| Violation {
                matrix: r.matrix,
                certificate: r.isr1[0].left_failing_x.or(r.isr1[1].left_failing_x),
                note: format!("c1 {} c2 {}", r.isr1[0].left_isr1, r.isr1[1].left_isr1),
            })
            .collect();
        claims.push(claim("c1_matches_c2", true, div));
    }

    let counts = Counts {
        elements: rows.len(),
        units: rows.iter().filter(|r| r.unit).count(),
        idempotents: ring.idempotents.len(),
        clean: rows.iter().filter(|r| r.clean).count(),
        strongly_clean: rows.iter().filter(|r| r.strongly_clean).count(),
        sr1: rows.iter().filter(|r| r.sr1).count(),
        thm1_sr1,
        by_convention,
    };
    Ok(OracleReport { n, mode: OracleMode::Full, conventions, counts: Some(counts), matrices: Vec::new(), claims })
}

/// Classifies only the given matrices (reduced mod `n`).
pub fn oracle_targeted(n: u32, matrices: &[ModMat], conventions: &[Convention]) -> Result<OracleReport> {
    check_modulus(n, TARGETED_MAX_MODULUS)?;
    if let Some(bad) = matrices.iter().find(|m| m.n != n) {
        return Err(Error::InvalidArgument(format!("matrix {bad} is over ℤ/{}, not ℤ/{n}", bad.n)));
    }
    let conventions = normalize(conventions);
    let ring = ModRing::new(n)?;
    let rows: Vec<MatrixClassification> = matrices.iter().map(|a| classify(&ring, a, &conventions)).collect();
    let claims = per_matrix_claims(&rows, &conventions, ModMat::zero(n));
    Ok(OracleReport { n, mode: OracleMode::Targeted, conventions, counts: None, matrices: rows, claims })
}

fn normalize(conventions: &[Convention]) -> Vec<Convention> {
    let mut v = if conventions.is_empty() { vec![Convention::C1] } else { conventions.to_vec() };
    v.sort();
    v.dedup();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn idempotent_counts() {
        assert_eq!(enumerate_idempotents(2).unwrap().len(), 8);
        assert_eq!(enumerate_idempotents(3).unwrap().len(), 14);
        for n in 2..=6 {
            let idem = enumerate_idempotents(n).unwrap();
            assert!(idem.contains(&ModMat::zero(n)) && idem.contains(&ModMat::identity(n)));
        }
        assert!(matches!(enumerate_idempotents(13), Err(Error::ModulusTooLarge { .. })));
        assert!(enumerate_idempotents(1).is_err());
    }

    #[test]
    fn index_roundtrip() {
        for i in 0..81 {
            assert_eq!(ModMat::from_index(3, i).index(), i);
        }
        assert_eq!(ModMat::from_index(3, 1).e, [0, 0, 0, 1]);
    }

    #[test]
    fn arithmetic() {
        let a = ModMat::new(5, 1, 2, 3, 4);
        assert_eq!(a.det(), 3); // 4 - 6 = -2
        assert_eq!(a.trace(), 0);
        assert_eq!(a.mul(&a.adjugate()), ModMat::identity(5).scale(a.det()));
        assert!(a.is_unit());
        assert!(!ModMat::new(6, 2, 0, 0, 1).is_unit());
    }

    #[test]
    fn definitional_basics() {
        for n in [2, 3, 5] {
            let ring = ModRing::new(n).unwrap();
            for conv in Convention::ALL {
                assert!(ring.is_left_isr1_def(&ModMat::identity(n), conv));
                assert!(ring.is_left_isr1_def(&ModMat::zero(n), conv));
                assert!(ring.is_right_isr1_def(&ModMat::identity(n), conv));
            }
            assert!(ring.is_clean(&ModMat::zero(n)));
            assert!(ring.is_clean(&ModMat::identity(n)));
        }
    }

    #[test]
    fn thm1_expression_values() {
        let n = 7;
        let (z, i) = (ModMat::zero(n), ModMat::identity(n));
        assert_eq!(thm1_expression(&z, &z, &z), 0);
        assert_eq!(thm1_expression(&i, &z, &z), 1);
        assert_eq!(thm1_expression(&i, &z, &i), 0);
    }

    #[test]
    fn thm1_predicates_small() {
        let r2 = ModRing::new(2).unwrap();
        assert!(r2.thm1_sr1_predicate(&ModMat::identity(2)));
        assert!(r2.thm1_isr1_predicate(&ModMat::identity(2)));
        let r3 = ModRing::new(3).unwrap();
        assert!(r3.thm1_sr1_predicate(&ModMat::zero(3)));
        assert!(r3.thm1_isr1_predicate(&ModMat::zero(3)));
    }

    #[test]
    fn middle_term_identity_exhaustive_mod_3() {
        let all: Vec<ModMat> = all_matrices(3).collect();
        for a in all.iter().step_by(7) {
            for x in all.iter().step_by(5) {
                for y in &all {
                    let t = (x.mul(y).trace() + 1) % 3;
                    assert_eq!(a.scale(t).det(), thm1_middle_closed_form(a, x, y));
                }
            }
        }
    }

    #[test]
    fn twice_e11_mod_12() {
        let ring = ModRing::new(12).unwrap();
        let a = ModMat::new(12, 2, 0, 0, 0);
        assert!(ring.is_clean(&a));
        assert!(ring.is_strongly_clean(&a));
        // Idempotents of trace other than 1 rescue every X here.
        let x = ModMat::new(12, 1, 0, 0, 0);
        assert!(!ring.left_isr1_fails_at(&a, &x, Convention::C1));
        let e = ModMat::new(12, 5, 4, 4, 5);
        assert!(e.is_idempotent());
        assert!(a.add(&e.mul(&x.mul(&a).sub(&ModMat::identity(12)))).is_unit());
        for c in Convention::ALL {
            assert!(ring.is_left_isr1_def(&a, c));
            assert!(ring.is_right_isr1_def(&a, c));
        }
    }

    #[test]
    fn report_rejects_bad_moduli() {
        assert!(matches!(oracle_full(5, &[]), Err(Error::ModulusTooLarge { n: 5, max: 4 })));
        assert!(matches!(oracle_targeted(13, &[], &[]), Err(Error::ModulusTooLarge { .. })));
        assert!(oracle_targeted(4, &[ModMat::zero(3)], &[]).is_err());
    }

    #[test]
    fn full_report_mod_2() {
        let r = oracle_full(2, &Convention::ALL).unwrap();
        assert_eq!(r.unexpected_violations().count(), 0, "{:#?}", r.claims);
        let c = r.counts.unwrap();
        assert_eq!(c.elements, 16);
        assert_eq!(c.units, 6);
        assert_eq!(c.idempotents, 8);
    }
}
