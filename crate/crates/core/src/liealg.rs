//! sl₃(ℂ) and its real form su(2,1): fixed bases, bracket, the conjugations τ
//! on the group and on the algebra, and spans of subalgebras.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg::{realify, rref_rows, solve_in_span, CoordMatrix, Matrix3, ScalarDomain};

/// A traceless 3×3 matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Matrix3", into = "Matrix3")]
pub struct AlgElement(Matrix3);

impl TryFrom<Matrix3> for AlgElement {
    type Error = Error;
    fn try_from(m: Matrix3) -> Result<Self> {
        AlgElement::new(m)
    }
}

impl From<AlgElement> for Matrix3 {
    fn from(x: AlgElement) -> Matrix3 {
        x.0
    }
}

impl AlgElement {
    pub fn new(m: Matrix3) -> Result<Self> {
        let t = m.trace();
        if !t.is_zero() {
            return Err(Error::NotTraceless(t.to_string()));
        }
        Ok(AlgElement(m))
    }

    pub fn zero() -> Self {
        AlgElement(Matrix3::zero())
    }

    pub fn matrix(&self) -> &Matrix3 {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn scale(&self, s: &FieldElement) -> Self {
        AlgElement(self.0.scale(s))
    }

    /// Linear combination `Σ cᵢ·xᵢ`.
    pub fn combination(coeffs: &[FieldElement], basis: &[AlgElement]) -> Self {
        let mut acc = Matrix3::zero();
        for (c, x) in coeffs.iter().zip(basis) {
            if !c.is_zero() {
                acc = &acc + &x.0.scale(c);
            }
        }
        AlgElement(acc)
    }

    pub fn from_a_coords(c: &[FieldElement]) -> Self {
        Self::combination(c, a_basis())
    }

    pub fn from_chevalley_coords(c: &[FieldElement]) -> Self {
        Self::combination(c, chevalley_basis())
    }

    /// Coordinates with respect to `a₁, …, a₈`.
    pub fn a_coords(&self) -> Vec<FieldElement> {
        let x = |r: usize, c: usize| self.0.get(r - 1, c - 1);
        let i = FieldElement::i();
        let half = FieldElement::ratio(1, 2);
        let minus_half_i = -(&half * &i); // 1/(2i)
        vec![
            -(&i * x(1, 1)),
            &i * x(3, 3),
            &half * &(x(1, 2) - x(2, 1)),
            &minus_half_i * &(x(1, 2) + x(2, 1)),
            &half * &(x(1, 3) + x(3, 1)),
            &minus_half_i * &(x(1, 3) - x(3, 1)),
            &half * &(x(2, 3) + x(3, 2)),
            &minus_half_i * &(x(2, 3) - x(3, 2)),
        ]
    }

    /// Coordinates in the order `H_α, H_β, X_α, X_β, X_{α+β}, Y_α, Y_β, Y_{α+β}`.
    pub fn chevalley_coords(&self) -> Vec<FieldElement> {
        let x = |r: usize, c: usize| self.0.get(r - 1, c - 1).clone();
        vec![
            x(1, 1),
            -x(3, 3),
            x(1, 2),
            x(2, 3),
            -x(1, 3),
            x(2, 1),
            x(3, 2),
            -x(3, 1),
        ]
    }
}

impl Add for &AlgElement {
    type Output = AlgElement;
    fn add(self, rhs: &AlgElement) -> AlgElement {
        AlgElement(&self.0 + &rhs.0)
    }
}

impl Sub for &AlgElement {
    type Output = AlgElement;
    fn sub(self, rhs: &AlgElement) -> AlgElement {
        AlgElement(&self.0 - &rhs.0)
    }
}

impl Neg for &AlgElement {
    type Output = AlgElement;
    fn neg(self) -> AlgElement {
        AlgElement(-&self.0)
    }
}

/// The Hermitian form `N = diag(1, 1, −1)`.
pub fn n_matrix() -> &'static Matrix3 {
    static N: OnceLock<Matrix3> = OnceLock::new();
    N.get_or_init(|| Matrix3::from_ints([[1, 0, 0], [0, 1, 0], [0, 0, -1]]))
}

/// `a₁, …, a₈`, a basis of su(2,1).
pub fn a_basis() -> &'static [AlgElement; 8] {
    static A: OnceLock<[AlgElement; 8]> = OnceLock::new();
    A.get_or_init(|| {
        let i = FieldElement::i();
        let e = Matrix3::unit;
        let m = |x: Matrix3| AlgElement::new(x).expect("a-basis is traceless");
        [
            m(&e(1, 1).scale(&i) - &e(2, 2).scale(&i)),
            m(&e(2, 2).scale(&i) - &e(3, 3).scale(&i)),
            m(&e(1, 2) - &e(2, 1)),
            m((&e(1, 2) + &e(2, 1)).scale(&i)),
            m(&e(1, 3) + &e(3, 1)),
            m((&e(1, 3) - &e(3, 1)).scale(&i)),
            m(&e(2, 3) + &e(3, 2)),
            m((&e(2, 3) - &e(3, 2)).scale(&i)),
        ]
    })
}

/// `H_α, H_β, X_α, X_β, X_{α+β}, Y_α, Y_β, Y_{α+β}` with `X_{α+β} = −E₁₃`, `Y_{α+β} = −E₃₁`.
pub fn chevalley_basis() -> &'static [AlgElement; 8] {
    static C: OnceLock<[AlgElement; 8]> = OnceLock::new();
    C.get_or_init(|| {
        let e = Matrix3::unit;
        let m = |x: Matrix3| AlgElement::new(x).expect("Chevalley basis is traceless");
        [
            m(&e(1, 1) - &e(2, 2)),
            m(&e(2, 2) - &e(3, 3)),
            m(e(1, 2)),
            m(e(2, 3)),
            m(-&e(1, 3)),
            m(e(2, 1)),
            m(e(3, 2)),
            m(-&e(3, 1)),
        ]
    })
}

/// Names of the Chevalley basis elements, in coordinate order.
pub const CHEVALLEY_NAMES: [&str; 8] = ["H_a", "H_b", "X_a", "X_b", "X_ab", "Y_a", "Y_b", "Y_ab"];

pub fn bracket(x: &AlgElement, y: &AlgElement) -> AlgElement {
    AlgElement(x.0.commutator(&y.0))
}

/// `τ(x) = −N·x̄ᵀ·N`.
pub fn tau_alg(x: &AlgElement) -> AlgElement {
    let n = n_matrix();
    AlgElement(-&(&(n * &x.0.dagger()) * n))
}

/// `τ(g) = N·ḡ⁻ᵀ·N`.
pub fn tau_grp(g: &Matrix3) -> Result<Matrix3> {
    let n = n_matrix();
    Ok(&(n * &g.dagger().inverse()?) * n)
}

pub fn in_su21_algebra(x: &AlgElement) -> bool {
    tau_alg(x) == *x
}

pub fn in_su21_group(g: &Matrix3) -> bool {
    let n = n_matrix();
    g.det().is_one() && &(&g.dagger() * n) * g == *n
}

/// A span of traceless matrices over ℝ or ℂ, with its canonical reduced form.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(from = "SubalgebraData", into = "SubalgebraData")]
pub struct Subalgebra {
    label: String,
    domain: ScalarDomain,
    span: Vec<AlgElement>,
    parameters: BTreeMap<String, FieldElement>,
    canonical: CoordMatrix,
}

#[derive(Clone, Serialize, Deserialize)]
struct SubalgebraData {
    label: String,
    scalar_domain: ScalarDomain,
    span: Vec<AlgElement>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    parameters: BTreeMap<String, FieldElement>,
}

impl From<SubalgebraData> for Subalgebra {
    fn from(d: SubalgebraData) -> Self {
        Subalgebra::new(d.label, d.scalar_domain, d.span).with_parameters(d.parameters)
    }
}

impl From<Subalgebra> for SubalgebraData {
    fn from(u: Subalgebra) -> Self {
        SubalgebraData {
            label: u.label,
            scalar_domain: u.domain,
            span: u.span,
            parameters: u.parameters,
        }
    }
}

impl PartialEq for Subalgebra {
    fn eq(&self, other: &Self) -> bool {
        self.label == other.label
            && self.domain == other.domain
            && self.span == other.span
            && self.parameters == other.parameters
    }
}

impl Eq for Subalgebra {}

fn coordinates(x: &AlgElement, domain: ScalarDomain) -> Vec<FieldElement> {
    match domain {
        ScalarDomain::Complex => x.chevalley_coords(),
        ScalarDomain::Real => x.a_coords(),
    }
}

impl Subalgebra {
    pub fn new(label: impl Into<String>, domain: ScalarDomain, span: Vec<AlgElement>) -> Self {
        let rows = span.iter().map(|x| coordinates(x, domain)).collect();
        let (canonical, _) = CoordMatrix::new(rows, domain).rref();
        Subalgebra {
            label: label.into(),
            domain,
            span,
            parameters: BTreeMap::new(),
            canonical,
        }
    }

    pub fn with_parameters(mut self, parameters: BTreeMap<String, FieldElement>) -> Self {
        self.parameters = parameters;
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn domain(&self) -> ScalarDomain {
        self.domain
    }

    pub fn span(&self) -> &[AlgElement] {
        &self.span
    }

    pub fn parameters(&self) -> &BTreeMap<String, FieldElement> {
        &self.parameters
    }

    pub fn canonical(&self) -> &CoordMatrix {
        &self.canonical
    }

    pub fn dim(&self) -> usize {
        self.canonical.rows.len()
    }

    /// A basis read back from the canonical form.
    pub fn basis(&self) -> Vec<AlgElement> {
        self.canonical
            .rows
            .iter()
            .map(|row| match self.domain {
                ScalarDomain::Complex => AlgElement::from_chevalley_coords(row),
                ScalarDomain::Real => AlgElement::from_a_coords(&unrealify(row)),
            })
            .collect()
    }

    /// The same matrices spanned over ℂ.
    pub fn complexify(&self) -> Subalgebra {
        Subalgebra::new(self.label.clone(), ScalarDomain::Complex, self.span.clone())
            .with_parameters(self.parameters.clone())
    }

    /// Whether `x` lies in the span over the declared scalars.
    pub fn contains(&self, x: &AlgElement) -> bool {
        let basis = &self.canonical.rows;
        let target = match self.domain {
            ScalarDomain::Complex => x.chevalley_coords(),
            ScalarDomain::Real => realify(&x.a_coords()),
        };
        solve_in_span(basis, &target).is_some()
    }

    /// Coordinates of `x` with respect to [`Subalgebra::basis`], if `x` is in the span.
    pub fn coordinates_of(&self, x: &AlgElement) -> Option<Vec<FieldElement>> {
        let target = match self.domain {
            ScalarDomain::Complex => x.chevalley_coords(),
            ScalarDomain::Real => realify(&x.a_coords()),
        };
        solve_in_span(&self.canonical.rows, &target)
    }
}

/// Inverse of [`realify`]: pairs `(re, im)` back to `re + i·im`.
fn unrealify(row: &[FieldElement]) -> Vec<FieldElement> {
    let i = FieldElement::i();
    row.chunks(2).map(|p| &p[0] + &(&p[1] * &i)).collect()
}

/// `g·u·g⁻¹`, keeping label, domain and parameters.
pub fn conjugate_subalgebra(g: &Matrix3, u: &Subalgebra) -> Result<Subalgebra> {
    let inv = g.inverse()?;
    let span = u
        .span
        .iter()
        .map(|x| AlgElement(&(g * &x.0) * &inv))
        .collect();
    Ok(Subalgebra::new(u.label.clone(), u.domain, span).with_parameters(u.parameters.clone()))
}

pub fn span_equal(u: &Subalgebra, v: &Subalgebra) -> Result<bool> {
    if u.domain != v.domain {
        return Err(Error::DomainMismatch);
    }
    Ok(u.canonical == v.canonical)
}

/// Whether every bracket of basis elements stays in the span; offending index pairs otherwise.
pub fn is_closed(u: &Subalgebra) -> (bool, Vec<(usize, usize)>) {
    let basis = u.basis();
    let mut violations = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if !u.contains(&bracket(&basis[i], &basis[j])) {
                violations.push((i, j));
            }
        }
    }
    (violations.is_empty(), violations)
}

/// `τ(u)` as a span over the same scalars.
pub fn tau_subalgebra(u: &Subalgebra) -> Subalgebra {
    let span = u.span.iter().map(tau_alg).collect();
    Subalgebra::new(format!("tau({})", u.label), u.domain, span).with_parameters(u.parameters.clone())
}

/// Whether τ maps the span onto itself.
pub fn is_real_span(u: &Subalgebra) -> bool {
    tau_subalgebra(u).canonical == u.canonical
}

/// A basis inside su(2,1) for the τ-fixed part of the span: the real span of
/// `x + τ(x)` and `i(x − τ(x))` over the basis, reduced over ℝ.
pub fn real_basis(u: &Subalgebra) -> Subalgebra {
    let i = FieldElement::i();
    let mut rows = Vec::new();
    for x in u.basis() {
        let t = tau_alg(&x);
        rows.push(realify(&(&x + &t).a_coords()));
        rows.push(realify(&(&x - &t).scale(&i).a_coords()));
    }
    let span = rref_rows(rows)
        .iter()
        .map(|row| AlgElement::from_a_coords(&unrealify(row)))
        .collect();
    Subalgebra::new(u.label.clone(), ScalarDomain::Real, span).with_parameters(u.parameters.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn a(k: usize) -> &'static AlgElement {
        &a_basis()[k - 1]
    }

    fn ch(name: &str) -> &'static AlgElement {
        let k = CHEVALLEY_NAMES.iter().position(|n| *n == name).unwrap();
        &chevalley_basis()[k]
    }

    fn fe(n: i64) -> FieldElement {
        FieldElement::from_int(n)
    }

    fn lin(terms: &[(FieldElement, usize)]) -> AlgElement {
        let mut c = vec![FieldElement::zero(); 8];
        for (v, k) in terms {
            c[k - 1] = &c[k - 1] + v;
        }
        AlgElement::from_a_coords(&c)
    }

    fn real(label: &str, xs: Vec<AlgElement>) -> Subalgebra {
        Subalgebra::new(label, ScalarDomain::Real, xs)
    }

    fn cplx(label: &str, xs: Vec<AlgElement>) -> Subalgebra {
        Subalgebra::new(label, ScalarDomain::Complex, xs)
    }

    #[test]
    fn bases_are_su21_and_sl3() {
        for x in a_basis() {
            assert!(in_su21_algebra(x));
            assert!(x.matrix().trace().is_zero());
        }
        let rows: Vec<_> = a_basis().iter().map(|x| x.chevalley_coords()).collect();
        assert_eq!(CoordMatrix::new(rows, ScalarDomain::Complex).rank(), 8);
        let rows: Vec<_> = chevalley_basis().iter().map(|x| x.a_coords()).collect();
        assert_eq!(CoordMatrix::new(rows, ScalarDomain::Complex).rank(), 8);
    }

    #[test]
    fn coordinates_round_trip() {
        for (k, x) in a_basis().iter().enumerate() {
            let c = x.a_coords();
            for (j, v) in c.iter().enumerate() {
                assert_eq!(v.is_one(), j == k);
                assert!(v.is_zero() || j == k);
            }
        }
        for (k, x) in chevalley_basis().iter().enumerate() {
            let c = x.chevalley_coords();
            for (j, v) in c.iter().enumerate() {
                assert_eq!(v.is_one(), j == k, "{k} {j}");
            }
        }
    }

    #[test]
    fn brackets() {
        assert!(bracket(a(1), a(1)).is_zero());
        assert_eq!(bracket(a(1), a(3)), a(4).scale(&fe(2)));
        assert_eq!(bracket(ch("X_a"), ch("X_b")), -ch("X_ab"));
    }

    #[test]
    fn jacobi_and_tau_automorphism() {
        let b = a_basis();
        for x in b {
            for y in b {
                assert_eq!(tau_alg(&bracket(x, y)), bracket(&tau_alg(x), &tau_alg(y)));
                assert_eq!(bracket(x, y), -&bracket(y, x));
                for z in b {
                    let s = &(&bracket(x, &bracket(y, z)) + &bracket(y, &bracket(z, x))) + &bracket(z, &bracket(x, y));
                    assert!(s.is_zero());
                }
            }
        }
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau_alg(ch("X_a")), -ch("Y_a"));
        let h = ch("H_a") + &ch("H_b").scale(&fe(2));
        assert_eq!(tau_alg(&h), -&h);
        assert!(!in_su21_algebra(ch("X_a")));
        assert!(!in_su21_algebra(&a(1).scale(&FieldElement::i())));
        let x = &ch("X_a").scale(&FieldElement::i()) + ch("Y_b");
        assert_eq!(tau_alg(&tau_alg(&x)), x);
        assert_eq!(tau_alg(&x.scale(&FieldElement::i())), tau_alg(&x).scale(&-FieldElement::i()));
    }

    #[test]
    fn tau_group_examples() {
        assert!(tau_grp(&Matrix3::identity()).unwrap().is_identity());
        let d = Matrix3::from_ints([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]);
        assert_eq!(tau_grp(&d).unwrap(), d);
        let g0 = Matrix3::from_ints([[0, 0, 1], [0, 1, 0], [-1, 0, 0]]);
        assert_eq!(tau_grp(&g0).unwrap(), g0.inverse().unwrap());
        assert!(in_su21_group(&Matrix3::identity()));
        let d = Matrix3::diag([fe(2), fe(1), FieldElement::ratio(1, 2)]);
        assert!(!in_su21_group(&d));
        let r = FieldElement::sqrt2().scale(&Rational::new(1, 2));
        let c = Matrix3::from_rows([
            [r.clone(), -&r, fe(0)],
            [-&r, -&r, fe(0)],
            [fe(0), fe(0), fe(-1)],
        ]);
        assert!(in_su21_group(&c));
    }

    #[test]
    fn tau_compatibility_with_conjugation() {
        let g = Matrix3::from_rows([
            [FieldElement::i(), fe(1), fe(0)],
            [fe(0), fe(1), FieldElement::sqrt2()],
            [fe(2), fe(0), fe(1)],
        ]);
        let tg = tau_grp(&g).unwrap();
        assert_eq!(tau_grp(&tg).unwrap(), g);
        for x in a_basis() {
            let lhs = tau_alg(&AlgElement::new(x.matrix().conjugate_by(&g).unwrap()).unwrap());
            let rhs = tau_alg(x).matrix().conjugate_by(&tg).unwrap();
            assert_eq!(*lhs.matrix(), rhs);
        }
    }

    #[test]
    fn conjugation_examples() {
        let u = cplx("u", vec![ch("X_a").clone()]);
        assert!(span_equal(&conjugate_subalgebra(&Matrix3::identity(), &u).unwrap(), &u).unwrap());
        let half = FieldElement::ratio(1, 2);
        let r = FieldElement::sqrt2().scale(&Rational::new(1, 2));
        let g = Matrix3::from_rows([
            [-&half, half.clone(), r.clone()],
            [-&half, half.clone(), -&r],
            [-&r, -&r, fe(0)],
        ]);
        let i = FieldElement::i();
        let q = FieldElement::ratio(1, 4);
        let qr2 = &q * &FieldElement::sqrt2();
        let x = lin(&[
            (&q * &i, 1),
            (&half * &i, 2),
            (&q * &i, 4),
            (-(&qr2 * &i), 6),
            (-(&qr2 * &i), 8),
        ]);
        assert_eq!(AlgElement::new(ch("X_a").matrix().conjugate_by(&g).unwrap()).unwrap(), x);
        assert!(span_equal(&conjugate_subalgebra(&g, &u).unwrap(), &cplx("x", vec![x])).unwrap());
    }

    #[test]
    fn spans_and_closure() {
        assert!(span_equal(&real("a", vec![a(1).clone()]), &real("b", vec![a(1).scale(&fe(-2))])).unwrap());
        assert!(!span_equal(&real("a", vec![a(1).clone()]), &real("b", vec![a(2).clone()])).unwrap());
        assert!(span_equal(&real("a", vec![a(1).clone()]), &cplx("b", vec![a(1).clone()])).is_err());
        let x = ch("X_a");
        let t = tau_alg(x);
        let i = FieldElement::i();
        let parts = vec![x + &t, (x - &t).scale(&i)];
        assert!(span_equal(&cplx("p", vec![x.clone(), t.clone()]), &cplx("q", parts.clone())).unwrap());
        // the τ-fixed part of ⟨x, τ(x)⟩ is the real span of the two parts
        let fixed = real_basis(&cplx("p", vec![x.clone(), t.clone()]));
        assert!(span_equal(&fixed, &real("q", parts)).unwrap());
        assert!(!span_equal(&real("p", vec![x.clone(), t.clone()]), &fixed).unwrap());

        assert!(is_closed(&real("u23", vec![a(1).clone(), a(2).clone()])).0);
        let (ok, v) = is_closed(&real("bad", vec![a(1).clone(), a(3).clone()]));
        assert!(!ok);
        assert_eq!(v, vec![(0, 1)]);
        assert!(is_closed(&real("all", a_basis().to_vec())).0);
    }

    #[test]
    fn realness() {
        assert!(!is_real_span(&cplx("xa", vec![ch("X_a").clone()])));
        let u = cplx(
            "sl2",
            vec![ch("X_ab").clone(), ch("Y_ab").clone(), ch("H_a") + ch("H_b")],
        );
        assert!(is_real_span(&u));
        let rb = real_basis(&u);
        assert_eq!(rb.dim(), 3);
        let expected = real("u35", vec![a(1) + a(2), a(5).clone(), a(6).clone()]);
        assert!(span_equal(&rb, &expected).unwrap());
        let lam = FieldElement::ratio(7, 3);
        assert!(is_real_span(&real("u15", vec![a(1) + &a(2).scale(&lam)])));
    }

    #[test]
    fn serde_round_trip() {
        let u = real("u_2_3", vec![a(1).clone(), a(2).clone()]);
        let s = serde_json::to_string(&u).unwrap();
        let back: Subalgebra = serde_json::from_str(&s).unwrap();
        assert_eq!(back, u);
        assert_eq!(back.canonical(), u.canonical());
    }
}
