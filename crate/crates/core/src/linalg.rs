//! Exact 3×3 matrices over ℚ(ζ₈) and row reduction of coordinate matrices.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{FieldElement, Sign};

/// A 3×3 matrix over [`FieldElement`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Matrix3 {
    e: [[FieldElement; 3]; 3],
}

impl Matrix3 {
    pub fn from_rows(e: [[FieldElement; 3]; 3]) -> Self {
        Matrix3 { e }
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> FieldElement) -> Self {
        Matrix3 {
            e: std::array::from_fn(|r| std::array::from_fn(|c| f(r, c))),
        }
    }

    /// Integer entries, row-major.
    pub fn from_ints(rows: [[i64; 3]; 3]) -> Self {
        Self::from_fn(|r, c| FieldElement::from_int(rows[r][c]))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::from_fn(|r, c| if r == c { FieldElement::one() } else { FieldElement::zero() })
    }

    pub fn diag(d: [FieldElement; 3]) -> Self {
        let [a, b, c] = d;
        let mut m = Self::zero();
        m.e[0][0] = a;
        m.e[1][1] = b;
        m.e[2][2] = c;
        m
    }

    /// Elementary matrix `E_{r,c}` (1-based indices, as in the usual notation).
    pub fn unit(r: usize, c: usize) -> Self {
        let mut m = Self::zero();
        m.e[r - 1][c - 1] = FieldElement::one();
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldElement {
        &self.e[r][c]
    }

    pub fn rows(&self) -> &[[FieldElement; 3]; 3] {
        &self.e
    }

    pub fn entries(&self) -> impl Iterator<Item = &FieldElement> {
        self.e.iter().flatten()
    }

    pub fn is_zero(&self) -> bool {
        self.entries().all(FieldElement::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn scale(&self, s: &FieldElement) -> Self {
        Self::from_fn(|r, c| &self.e[r][c] * s)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|r, c| self.e[c][r].clone())
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        Self::from_fn(|r, c| self.e[r][c].conjugate())
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(|r, c| self.e[c][r].conjugate())
    }

    pub fn trace(&self) -> FieldElement {
        &(&self.e[0][0] + &self.e[1][1]) + &self.e[2][2]
    }

    fn minor(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> FieldElement {
        &(&self.e[r0][c0] * &self.e[r1][c1]) - &(&self.e[r0][c1] * &self.e[r1][c0])
    }

    pub fn det(&self) -> FieldElement {
        let e = &self.e;
        let t0 = &e[0][0] * &self.minor(1, 2, 1, 2);
        let t1 = &e[0][1] * &self.minor(1, 2, 0, 2);
        let t2 = &e[0][2] * &self.minor(1, 2, 0, 1);
        &(&t0 - &t1) + &t2
    }

    fn cofactor(&self, r: usize, c: usize) -> FieldElement {
        let rows: Vec<usize> = (0..3).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..3).filter(|&j| j != c).collect();
        let m = self.minor(rows[0], rows[1], cols[0], cols[1]);
        if (r + c).is_multiple_of(2) {
            m
        } else {
            -m
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let d = self.det();
        if d.is_zero() {
            return Err(Error::Singular);
        }
        let inv_d = d.invert()?;
        // adjugate = transpose of the cofactor matrix
        Ok(Self::from_fn(|r, c| &self.cofactor(c, r) * &inv_d))
    }

    /// Coefficients `(p2, p1, p0)` of `det(tI − A) = t³ + p2·t² + p1·t + p0`.
    pub fn charpoly(&self) -> (FieldElement, FieldElement, FieldElement) {
        let p2 = -self.trace();
        let p1 = &(&self.minor(0, 1, 0, 1) + &self.minor(0, 2, 0, 2)) + &self.minor(1, 2, 1, 2);
        let p0 = -self.det();
        (p2, p1, p0)
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &Matrix3) -> Result<Self> {
        Ok(&(g * self) * &g.inverse()?)
    }

    pub fn commutator(&self, other: &Matrix3) -> Self {
        &(self * other) - &(other * self)
    }
}

impl Mul for &Matrix3 {
    type Output = Matrix3;
    fn mul(self, rhs: &Matrix3) -> Matrix3 {
        Matrix3::from_fn(|r, c| {
            let mut acc = FieldElement::zero();
            for k in 0..3 {
                let (a, b) = (&self.e[r][k], &rhs.e[k][c]);
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
            }
            acc
        })
    }
}

impl Add for &Matrix3 {
    type Output = Matrix3;
    fn add(self, rhs: &Matrix3) -> Matrix3 {
        Matrix3::from_fn(|r, c| &self.e[r][c] + &rhs.e[r][c])
    }
}

impl Sub for &Matrix3 {
    type Output = Matrix3;
    fn sub(self, rhs: &Matrix3) -> Matrix3 {
        Matrix3::from_fn(|r, c| &self.e[r][c] - &rhs.e[r][c])
    }
}

impl Neg for &Matrix3 {
    type Output = Matrix3;
    fn neg(self) -> Matrix3 {
        Matrix3::from_fn(|r, c| -&self.e[r][c])
    }
}

macro_rules! owned_matrix_op {
    ($tr:ident, $m:ident) => {
        impl $tr for Matrix3 {
            type Output = Matrix3;
            fn $m(self, rhs: Matrix3) -> Matrix3 {
                $tr::$m(&self, &rhs)
            }
        }
    };
}
owned_matrix_op!(Mul, mul);
owned_matrix_op!(Add, add);
owned_matrix_op!(Sub, sub);

impl fmt::Display for Matrix3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .e
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl Serialize for Matrix3 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let flat: Vec<&FieldElement> = self.entries().collect();
        flat.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix3 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let flat = <Vec<FieldElement>>::deserialize(d)?;
        if flat.len() != 9 {
            return Err(serde::de::Error::invalid_length(flat.len(), &"9 entries"));
        }
        Ok(Matrix3::from_fn(|r, c| flat[3 * r + c].clone()))
    }
}

/// Whether a span is taken over ℝ (inside ℚ(√2)) or over ℂ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalarDomain {
    Real,
    Complex,
}

/// Rows of coordinate vectors together with the scalars allowed in row operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordMatrix {
    pub rows: Vec<Vec<FieldElement>>,
    pub domain: ScalarDomain,
}

impl CoordMatrix {
    pub fn new(rows: Vec<Vec<FieldElement>>, domain: ScalarDomain) -> Self {
        CoordMatrix { rows, domain }
    }

    /// Canonical reduced row-echelon form.
    ///
    /// Over the real domain every complex coordinate `c` is split into the pair
    /// `(re c, im c)` first, so the result has twice as many columns.
    pub fn rref(&self) -> (CoordMatrix, usize) {
        let rows: Vec<Vec<FieldElement>> = match self.domain {
            ScalarDomain::Complex => self.rows.clone(),
            ScalarDomain::Real => self.rows.iter().map(|r| realify(r)).collect(),
        };
        let reduced = rref_rows(rows);
        let rank = reduced.len();
        (CoordMatrix::new(reduced, self.domain), rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }
}

/// Split each coordinate into its real and imaginary parts.
pub fn realify(row: &[FieldElement]) -> Vec<FieldElement> {
    row.iter().flat_map(|c| [c.re(), c.im()]).collect()
}

/// Reduced row-echelon form with zero rows dropped; first nonzero entry pivots.
pub fn rref_rows(mut rows: Vec<Vec<FieldElement>>) -> Vec<Vec<FieldElement>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = rows[pivot_row][col].invert().expect("pivot is nonzero");
        for x in rows[pivot_row].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot) {
                if !p.is_zero() {
                    *x -= &(&factor * p);
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    rows
}

/// Coefficients `c` with `Σ c_i · basis_i = target`, if the target is in the span.
///
/// Scalars are whatever the coordinates admit; callers pass realified rows to
/// force real coefficients.
pub fn solve_in_span(basis: &[Vec<FieldElement>], target: &[FieldElement]) -> Option<Vec<FieldElement>> {
    let k = basis.len();
    // Augmented system: one equation per coordinate, columns = basis vectors + rhs.
    let eqs: Vec<Vec<FieldElement>> = (0..target.len())
        .map(|j| {
            let mut row: Vec<FieldElement> = basis.iter().map(|b| b[j].clone()).collect();
            row.push(target[j].clone());
            row
        })
        .collect();
    let reduced = rref_rows(eqs);
    let mut sol = vec![FieldElement::zero(); k];
    for row in &reduced {
        let lead = row.iter().position(|x| !x.is_zero())?;
        if lead == k {
            return None;
        }
        sol[lead] = row[k].clone();
    }
    Some(sol)
}

/// Signature `(p, n, z)` of a Hermitian (or real symmetric) matrix over ℚ(ζ₈).
///
/// Diagonalizes by congruence; the diagonal entries that appear are real, and
/// their signs are decided exactly.
pub fn hermitian_signature(m: &[Vec<FieldElement>]) -> Result<(usize, usize, usize)> {
    let n = m.len();
    for r in 0..n {
        for c in 0..n {
            if m[r][c] != m[c][r].conjugate() {
                return Err(Error::NotReal(format!("form is not Hermitian at ({r},{c})")));
            }
        }
    }
    let mut a: Vec<Vec<FieldElement>> = m.to_vec();
    let (mut pos, mut neg) = (0, 0);
    while !a.is_empty() {
        let size = a.len();
        let pivot = (0..size).find(|&k| !a[k][k].is_zero());
        let pivot = match pivot {
            Some(k) => k,
            None => {
                let Some((r, c)) = (0..size)
                    .flat_map(|r| (0..size).map(move |c| (r, c)))
                    .find(|&(r, c)| !a[r][c].is_zero())
                else {
                    break;
                };
                // Replace e_r by e_r + t·e_c; the new diagonal 2·Re(t·a_rc) is nonzero
                // for t = 1 or t = i because a_rc ≠ 0.
                let t = if !a[r][c].re().is_zero() {
                    FieldElement::one()
                } else {
                    FieldElement::i()
                };
                let tc = t.conjugate();
                for k in 0..size {
                    let v = &a[c][k] * &tc;
                    a[r][k] += &v;
                }
                for k in 0..size {
                    let v = &a[k][c] * &t;
                    a[k][r] += &v;
                }
                r
            }
        };
        let d = a[pivot][pivot].clone();
        match d.real_sign()? {
            Sign::Positive => pos += 1,
            Sign::Negative => neg += 1,
            Sign::Zero => unreachable!("pivot is nonzero"),
        }
        let inv = d.invert()?;
        let rest: Vec<usize> = (0..size).filter(|&k| k != pivot).collect();
        let next: Vec<Vec<FieldElement>> = rest
            .iter()
            .map(|&r| {
                rest.iter()
                    .map(|&c| &a[r][c] - &(&(&a[r][pivot] * &inv) * &a[pivot][c]))
                    .collect()
            })
            .collect();
        a = next;
    }
    Ok((pos, neg, n - pos - neg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use proptest::prelude::*;

    fn n_mat() -> Matrix3 {
        Matrix3::from_ints([[1, 0, 0], [0, 1, 0], [0, 0, -1]])
    }

    #[test]
    fn basic_products() {
        let a = Matrix3::from_ints([[1, 2, 3], [0, -1, 4], [5, 6, 0]]);
        assert_eq!(&Matrix3::identity() * &a, a);
        assert!((&n_mat() * &n_mat()).is_identity());
    }

    #[test]
    fn determinant_and_inverse() {
        assert!(Matrix3::identity().det().is_one());
        let d = Matrix3::diag([FieldElement::from_int(2), FieldElement::i(), FieldElement::sqrt2()]);
        let inv = d.inverse().unwrap();
        assert_eq!(
            inv,
            Matrix3::diag([
                FieldElement::ratio(1, 2),
                -FieldElement::i(),
                FieldElement::sqrt2().scale(&Rational::new(1, 2)),
            ])
        );
        let signed_perm = Matrix3::from_ints([[0, 1, 0], [-1, 0, 0], [0, 0, 1]]);
        assert_eq!(signed_perm.inverse().unwrap(), signed_perm.transpose());
        let singular = Matrix3::from_ints([[1, 2, 3], [2, 4, 6], [0, 0, 1]]);
        assert_eq!(singular.inverse(), Err(Error::Singular));
    }

    #[test]
    fn charpoly_of_diagonal() {
        let i = FieldElement::i();
        let a1 = Matrix3::diag([i.clone(), -&i, FieldElement::zero()]);
        let (p2, p1, p0) = a1.charpoly();
        assert!(p2.is_zero() && p1.is_one() && p0.is_zero());
        let (p2, p1, p0) = Matrix3::zero().charpoly();
        assert!(p2.is_zero() && p1.is_zero() && p0.is_zero());
    }

    #[test]
    fn rref_domains() {
        let v: Vec<FieldElement> = [1, 2, 0].iter().map(|&x| FieldElement::from_int(x)).collect();
        let r2v: Vec<FieldElement> = v.iter().map(|x| x * &FieldElement::sqrt2()).collect();
        let iv: Vec<FieldElement> = v.iter().map(|x| x * &FieldElement::i()).collect();
        let (basis, rank) = CoordMatrix::new(vec![v.clone()], ScalarDomain::Complex).rref();
        assert_eq!(rank, 1);
        assert!(basis.rows[0][0].is_one());
        assert_eq!(CoordMatrix::new(vec![v.clone(), r2v], ScalarDomain::Real).rank(), 1);
        assert_eq!(CoordMatrix::new(vec![v.clone(), iv.clone()], ScalarDomain::Real).rank(), 2);
        assert_eq!(CoordMatrix::new(vec![v, iv], ScalarDomain::Complex).rank(), 1);
    }

    #[test]
    fn signature_of_standard_forms() {
        let to_rows = |m: &Matrix3| -> Vec<Vec<FieldElement>> { m.rows().iter().map(|r| r.to_vec()).collect() };
        assert_eq!(hermitian_signature(&to_rows(&n_mat())).unwrap(), (2, 1, 0));
        // off-diagonal-only form [[0, i], [-i, 0]] has signature (1,1)
        let i = FieldElement::i();
        let h = vec![vec![FieldElement::zero(), i.clone()], vec![-&i, FieldElement::zero()]];
        assert_eq!(hermitian_signature(&h).unwrap(), (1, 1, 0));
        let h = vec![vec![FieldElement::zero(), FieldElement::one()], vec![FieldElement::one(), FieldElement::zero()]];
        assert_eq!(hermitian_signature(&h).unwrap(), (1, 1, 0));
        let not_herm = vec![vec![FieldElement::zero(), i.clone()], vec![i, FieldElement::zero()]];
        assert!(hermitian_signature(&not_herm).is_err());
    }

    fn arb_small() -> impl Strategy<Value = FieldElement> {
        (-3i64..4, -2i64..3, -2i64..3, 1i64..3).prop_map(|(a, b, c, d)| {
            FieldElement::from_coeffs([
                Rational::new(a, d),
                Rational::from_int(b),
                Rational::from_int(c),
                Rational::zero(),
            ])
        })
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix3> {
        proptest::collection::vec(arb_small(), 9).prop_map(|v| Matrix3::from_fn(|r, c| v[3 * r + c].clone()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn det_is_multiplicative(a in arb_matrix(), b in arb_matrix()) {
            prop_assert_eq!((&a * &b).det(), &a.det() * &b.det());
        }

        #[test]
        fn dagger_reverses_products(a in arb_matrix(), b in arb_matrix()) {
            prop_assert_eq!((&a * &b).dagger(), &b.dagger() * &a.dagger());
        }

        #[test]
        fn inverse_is_two_sided(a in arb_matrix()) {
            if let Ok(inv) = a.inverse() {
                prop_assert!((&a * &inv).is_identity());
                prop_assert!((&inv * &a).is_identity());
            }
        }

        #[test]
        fn charpoly_of_diagonal_is_elementary_symmetric(x in arb_small(), y in arb_small(), z in arb_small()) {
            let (p2, p1, p0) = Matrix3::diag([x.clone(), y.clone(), z.clone()]).charpoly();
            prop_assert_eq!(p2, -(&(&x + &y) + &z));
            prop_assert_eq!(p1, &(&(&x * &y) + &(&x * &z)) + &(&y * &z));
            prop_assert_eq!(p0, -(&(&x * &y) * &z));
        }

        #[test]
        fn rref_is_idempotent_and_order_independent(rows in proptest::collection::vec(proptest::collection::vec(arb_small(), 4), 1..4)) {
            let m = CoordMatrix::new(rows.clone(), ScalarDomain::Complex);
            let (r1, _) = m.rref();
            let (r2, _) = r1.rref();
            prop_assert_eq!(&r1, &r2);
            let mut rev = rows;
            rev.reverse();
            let (r3, _) = CoordMatrix::new(rev, ScalarDomain::Complex).rref();
            prop_assert_eq!(r1, r3);
        }
    }
}
