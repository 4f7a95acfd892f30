//! Exact 2×2 integer matrices.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::bezout::ext_gcd;
use crate::error::{Error, Result};

/// Row-major 2×2 matrix over ℤ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    pub a11: BigInt,
    pub a12: BigInt,
    pub a21: BigInt,
    pub a22: BigInt,
}

impl Mat2 {
    pub fn new<T: Into<BigInt>>(a11: T, a12: T, a21: T, a22: T) -> Self {
        Mat2 { a11: a11.into(), a12: a12.into(), a21: a21.into(), a22: a22.into() }
    }

    pub fn from_rows(rows: [[BigInt; 2]; 2]) -> Self {
        let [[a11, a12], [a21, a22]] = rows;
        Mat2 { a11, a12, a21, a22 }
    }

    pub fn rows(&self) -> [[&BigInt; 2]; 2] {
        [[&self.a11, &self.a12], [&self.a21, &self.a22]]
    }

    pub fn zero() -> Self {
        Mat2::new(0, 0, 0, 0)
    }

    pub fn identity() -> Self {
        Mat2::new(1, 0, 0, 1)
    }

    pub fn e11() -> Self {
        Mat2::new(1, 0, 0, 0)
    }

    pub fn e12() -> Self {
        Mat2::new(0, 1, 0, 0)
    }

    pub fn e21() -> Self {
        Mat2::new(0, 0, 1, 0)
    }

    pub fn e22() -> Self {
        Mat2::new(0, 0, 0, 1)
    }

    pub fn diag<T: Into<BigInt>>(d1: T, d2: T) -> Self {
        Mat2::new(d1.into(), BigInt::zero(), BigInt::zero(), d2.into())
    }

    /// `E₁₂ + E₂₁`, the coordinate swap.
    pub fn swap() -> Self {
        Mat2::new(0, 1, 1, 0)
    }

    pub fn scale(&self, c: &BigInt) -> Mat2 {
        Mat2 {
            a11: c * &self.a11,
            a12: c * &self.a12,
            a21: c * &self.a21,
            a22: c * &self.a22,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a11.is_zero() && self.a12.is_zero() && self.a21.is_zero() && self.a22.is_zero()
    }

    pub fn det(&self) -> BigInt {
        &self.a11 * &self.a22 - &self.a12 * &self.a21
    }

    pub fn trace(&self) -> BigInt {
        &self.a11 + &self.a22
    }

    pub fn adjugate(&self) -> Mat2 {
        Mat2 {
            a11: self.a22.clone(),
            a12: -&self.a12,
            a21: -&self.a21,
            a22: self.a11.clone(),
        }
    }

    pub fn transpose(&self) -> Mat2 {
        Mat2 {
            a11: self.a11.clone(),
            a12: self.a21.clone(),
            a21: self.a12.clone(),
            a22: self.a22.clone(),
        }
    }

    /// gcd of the four entries; 0 for the zero matrix.
    pub fn content(&self) -> BigInt {
        self.a11.gcd(&self.a12).gcd(&self.a21).gcd(&self.a22)
    }

    pub fn is_idempotent(&self) -> bool {
        &(self * self) == self
    }

    pub fn is_nilpotent(&self) -> bool {
        self.trace().is_zero() && self.det().is_zero()
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    /// Idempotent other than `0₂` and `I₂`.
    pub fn is_nontrivial_idempotent(&self) -> bool {
        self.trace().is_one() && self.det().is_zero()
    }

    /// Inverse of a unimodular matrix.
    pub fn inverse_unimodular(&self) -> Result<Mat2> {
        let det = self.det();
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular { det });
        }
        Ok(self.adjugate().scale(&det))
    }

    /// `T⁻¹·self·T`.
    pub fn conjugate(&self, t: &Mat2) -> Result<Mat2> {
        let t_inv = t.inverse_unimodular()?;
        Ok(&(&t_inv * self) * t)
    }

    pub fn column_mul(&self, u: &[BigInt; 2]) -> [BigInt; 2] {
        [
            &self.a11 * &u[0] + &self.a12 * &u[1],
            &self.a21 * &u[0] + &self.a22 * &u[1],
        ]
    }
}

/// `A = A.conjugate(T)` for `T` unimodular; see [`Mat2::conjugate`].
pub fn conjugate(a: &Mat2, t: &Mat2) -> Result<Mat2> {
    a.conjugate(t)
}

impl<'a> Mul<&'a Mat2> for &'a Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &'a Mat2) -> Mat2 {
        Mat2 {
            a11: &self.a11 * &rhs.a11 + &self.a12 * &rhs.a21,
            a12: &self.a11 * &rhs.a12 + &self.a12 * &rhs.a22,
            a21: &self.a21 * &rhs.a11 + &self.a22 * &rhs.a21,
            a22: &self.a21 * &rhs.a12 + &self.a22 * &rhs.a22,
        }
    }
}

impl<'a> Add<&'a Mat2> for &'a Mat2 {
    type Output = Mat2;
    fn add(self, rhs: &'a Mat2) -> Mat2 {
        Mat2 {
            a11: &self.a11 + &rhs.a11,
            a12: &self.a12 + &rhs.a12,
            a21: &self.a21 + &rhs.a21,
            a22: &self.a22 + &rhs.a22,
        }
    }
}

impl<'a> Sub<&'a Mat2> for &'a Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: &'a Mat2) -> Mat2 {
        Mat2 {
            a11: &self.a11 - &rhs.a11,
            a12: &self.a12 - &rhs.a12,
            a21: &self.a21 - &rhs.a21,
            a22: &self.a22 - &rhs.a22,
        }
    }
}

impl Neg for &Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        Mat2 { a11: -&self.a11, a12: -&self.a12, a21: -&self.a21, a22: -&self.a22 }
    }
}

impl fmt::Display for Mat2 {
    /// Shell-friendly form `a11,a12;a21,a22`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{},{}", self.a11, self.a12, self.a21, self.a22)
    }
}

impl FromStr for Mat2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mat2> {
        let bad = || Error::Parse(format!("expected \"a11,a12;a21,a22\", got {s:?}"));
        let rows: Vec<&str> = s.split(';').collect();
        if rows.len() != 2 {
            return Err(bad());
        }
        let mut entries = Vec::with_capacity(4);
        for row in rows {
            let cells: Vec<&str> = row.split(',').collect();
            if cells.len() != 2 {
                return Err(bad());
            }
            for cell in cells {
                let cell = cell.trim();
                let digits = cell.strip_prefix('-').unwrap_or(cell);
                if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
                    return Err(bad());
                }
                entries.push(cell.parse::<BigInt>().map_err(|_| bad())?);
            }
        }
        let mut it = entries.into_iter();
        let mut next = || it.next().expect("four entries");
        Ok(Mat2 { a11: next(), a12: next(), a21: next(), a22: next() })
    }
}

/// `A = c·u·vᵀ` with `u`, `v` primitive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rank1Factorization {
    pub c: BigInt,
    pub u: [BigInt; 2],
    pub v: [BigInt; 2],
}

impl Rank1Factorization {
    pub fn product(&self) -> Mat2 {
        let [u1, u2] = &self.u;
        let [v1, v2] = &self.v;
        Mat2 { a11: u1 * v1, a12: u1 * v2, a21: u2 * v1, a22: u2 * v2 }.scale(&self.c)
    }
}

/// Factor a nonzero determinant-zero matrix as `c·u·vᵀ`.
///
/// Normalized so that `c > 0` and the first nonzero entry of `v` is positive,
/// which makes the factorization unique.
pub fn rank1_factor(a: &Mat2) -> Result<Rank1Factorization> {
    if a.is_zero() || !a.det().is_zero() {
        return Err(Error::NotRankOne);
    }
    let c = a.content();
    let p = Mat2 {
        a11: &a.a11 / &c,
        a12: &a.a12 / &c,
        a21: &a.a21 / &c,
        a22: &a.a22 / &c,
    };
    // Every nonzero column is a multiple of u.
    let col = if !p.a11.is_zero() || !p.a21.is_zero() {
        [p.a11.clone(), p.a21.clone()]
    } else {
        [p.a12.clone(), p.a22.clone()]
    };
    let g = col[0].gcd(&col[1]);
    let mut u = [&col[0] / &g, &col[1] / &g];
    let (row, ui) = if !u[0].is_zero() { ([&p.a11, &p.a12], &u[0]) } else { ([&p.a21, &p.a22], &u[1]) };
    let mut v = [row[0] / ui, row[1] / ui];
    let lead = if !v[0].is_zero() { &v[0] } else { &v[1] };
    if lead.is_negative() {
        u = [-&u[0], -&u[1]];
        v = [-&v[0], -&v[1]];
    }
    let f = Rank1Factorization { c, u, v };
    debug_assert_eq!(&f.product(), a);
    Ok(f)
}

/// Unimodular `U` with `U·u = (1, 0)ᵀ` for primitive `u`.
pub fn unimodular_from_primitive(u: &[BigInt; 2]) -> Result<Mat2> {
    let fam = ext_gcd(u[0].clone(), u[1].clone());
    if !fam.g.is_one() {
        return Err(Error::NotPrimitive(u[0].clone(), u[1].clone()));
    }
    Ok(Mat2 {
        a11: fam.x0,
        a12: fam.z0,
        a21: -&u[1],
        a22: u[0].clone(),
    })
}

/// A nilpotent matrix is similar to exactly one `m·E₁₂` with `m ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotentClass {
    pub m: BigInt,
    /// Unimodular `C` with `C⁻¹·T·C = m·E₁₂`; absent for `T = 0₂`.
    pub certificate: Option<Mat2>,
}

pub fn nilpotent_class(t: &Mat2) -> Result<NilpotentClass> {
    if !t.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    if t.is_zero() {
        return Ok(NilpotentClass { m: BigInt::zero(), certificate: None });
    }
    let f = rank1_factor(t)?;
    let u = unimodular_from_primitive(&f.u)?;
    let mut cert = u.inverse_unimodular()?;
    // U·T·U⁻¹ = c·e₁·(vᵀU⁻¹) and vᵀu = 0, so it is ±c·E₁₂.
    let reduced = t.conjugate(&cert)?;
    if reduced.a12.is_negative() {
        cert = &cert * &Mat2::diag(1, -1);
    }
    debug_assert_eq!(t.conjugate(&cert)?, Mat2::e12().scale(&f.c));
    Ok(NilpotentClass { m: f.c, certificate: Some(cert) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
        Mat2::new(a, b, c, d)
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn scalar_invariants() {
        assert_eq!(m(0, 1, 0, 0).adjugate(), m(0, -1, 0, 0));
        assert_eq!(m(5, 12, 0, 0).det(), big(0));
        assert_eq!(m(5, 12, 0, 0).trace(), big(5));
        assert_eq!(m(-4, -10, 2, 5).adjugate(), m(5, 10, -2, -4));
        let a = m(3, -7, 2, 11);
        assert_eq!(a.adjugate().adjugate(), a);
        assert_eq!(&a * &a.adjugate(), Mat2::identity().scale(&a.det()));
    }

    #[test]
    fn content_examples() {
        assert_eq!(m(4, 2, 0, 0).content(), big(2));
        assert_eq!(m(2, 1, 0, 0).content(), big(1));
        assert_eq!(Mat2::zero().content(), big(0));
        assert_eq!(m(-6, 0, 9, -3).content(), big(3));
    }

    #[test]
    fn predicates() {
        assert!(m(5, 10, -2, -4).is_idempotent());
        assert!(m(3, 9, -1, -3).is_nilpotent());
        let i = Mat2::identity();
        assert!(i.is_idempotent() && !i.is_nilpotent() && i.is_unimodular());
        assert!(!m(2, 0, 0, 1).is_unimodular());
        assert!(m(5, 10, -2, -4).is_nontrivial_idempotent());
        assert!(!i.is_nontrivial_idempotent());
    }

    #[test]
    fn conjugate_examples() {
        let a = m(7, 4, 0, 0);
        assert_eq!(a.conjugate(&Mat2::swap()).unwrap(), m(0, 0, 4, 7));
        assert_eq!(a.conjugate(&Mat2::diag(1, -1)).unwrap(), m(7, -4, 0, 0));
        assert_eq!(a.conjugate(&Mat2::identity()).unwrap(), a);
        assert!(matches!(a.conjugate(&m(2, 0, 0, 1)), Err(Error::NotUnimodular { .. })));
    }

    #[test]
    fn unimodular_completion() {
        for (u1, u2) in [(1, 0), (1, -2), (3, 5), (0, 1), (0, -1), (-7, 4)] {
            let u = [big(u1), big(u2)];
            let t = unimodular_from_primitive(&u).unwrap();
            assert_eq!(t.column_mul(&u), [big(1), big(0)], "({u1},{u2})");
            assert!(t.is_unimodular());
        }
        assert_eq!(unimodular_from_primitive(&[big(1), big(0)]).unwrap(), Mat2::identity());
        assert!(matches!(
            unimodular_from_primitive(&[big(2), big(4)]),
            Err(Error::NotPrimitive(..))
        ));
    }

    #[test]
    fn rank1_examples() {
        let f = rank1_factor(&m(5, 12, 0, 0)).unwrap();
        assert_eq!((f.c, f.u, f.v), (big(1), [big(1), big(0)], [big(5), big(12)]));
        let f = rank1_factor(&m(6, 3, -12, -6)).unwrap();
        assert_eq!((f.c, f.u, f.v), (big(3), [big(1), big(-2)], [big(2), big(1)]));
        let f = rank1_factor(&m(4, 2, 0, 0)).unwrap();
        assert_eq!((f.c, f.u, f.v), (big(2), [big(1), big(0)], [big(2), big(1)]));
        let f = rank1_factor(&m(0, -3, 0, 6)).unwrap();
        assert_eq!(f.product(), m(0, -3, 0, 6));
        assert_eq!(rank1_factor(&Mat2::zero()), Err(Error::NotRankOne));
        assert_eq!(rank1_factor(&Mat2::identity()), Err(Error::NotRankOne));
    }

    #[test]
    fn nilpotent_examples() {
        assert_eq!(nilpotent_class(&m(6, 3, -12, -6)).unwrap().m, big(3));
        assert_eq!(nilpotent_class(&m(3, 9, -1, -3)).unwrap().m, big(1));
        assert_eq!(nilpotent_class(&m(0, 2, 0, 0)).unwrap().m, big(2));
        assert_eq!(nilpotent_class(&Mat2::zero()).unwrap(), NilpotentClass { m: big(0), certificate: None });
        assert_eq!(nilpotent_class(&Mat2::identity()), Err(Error::NotNilpotent));
    }

    /// Class from the gcd-divisibility argument: for `T = [x y; z −x]` with
    /// `d = gcd(x, y)`, `y = d·y1`, the class is `|d / y1|`.
    fn nilpotent_class_by_divisibility(t: &Mat2) -> BigInt {
        let (x, y, z) = (&t.a11, &t.a12, &t.a21);
        if y.is_zero() {
            return z.abs();
        }
        let d = x.gcd(y);
        let y1 = y / &d;
        (&d / &y1).abs()
    }

    #[test]
    fn nilpotent_certificate_matches_divisibility_argument() {
        let r = 30i64;
        for x in -r..=r {
            for y in -r..=r {
                if y == 0 && x != 0 {
                    continue;
                }
                if y == 0 {
                    for z in -r..=r {
                        let t = m(0, 0, z, 0);
                        assert_eq!(nilpotent_class(&t).unwrap().m, nilpotent_class_by_divisibility(&t));
                    }
                    continue;
                }
                if (x * x) % y != 0 {
                    continue;
                }
                let z = -(x * x) / y;
                if z.abs() > r {
                    continue;
                }
                let t = m(x, y, z, -x);
                let class = nilpotent_class(&t).unwrap();
                assert_eq!(class.m, nilpotent_class_by_divisibility(&t), "{t}");
                let cert = class.certificate.unwrap();
                assert!(cert.is_unimodular());
                assert_eq!(t.conjugate(&cert).unwrap(), Mat2::e12().scale(&class.m));
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let a: Mat2 = "5,12;0,0".parse().unwrap();
        assert_eq!(a, m(5, 12, 0, 0));
        let b: Mat2 = " -4 , -10 ; 2, 5 ".parse().unwrap();
        assert_eq!(b, m(-4, -10, 2, 5));
        assert_eq!(b.to_string(), "-4,-10;2,5");
        let huge: Mat2 = "123456789012345678901234567890,0;0,1".parse().unwrap();
        assert_eq!(huge.to_string().parse::<Mat2>().unwrap(), huge);
        for bad in ["", "1,2,3,4", "1,2;3", "1,2;3,x", "1,+2;3,4", "1,2;3,4;5,6", "1,--2;3,4", "1,;3,4"] {
            assert!(bad.parse::<Mat2>().is_err(), "{bad:?}");
        }
    }
}
