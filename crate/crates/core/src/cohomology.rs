//! Cocycles, coboundaries and first cohomology of the small tori that occur as
//! reductive parts of stabilizers, plus the two-class decision for SL₃(ℂ).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldElement, Sign};
use crate::liealg::{conjugate_subalgebra, n_matrix, span_equal, tau_grp, Subalgebra};
use crate::linalg::{hermitian_signature, Matrix3};

/// How the conjugation acts on the parameters of a torus `χ(t)` or `χ(s, t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TorusSigmaType {
    /// `σχ(t) = χ(t̄)`
    Fix,
    /// `σχ(t) = χ(t̄⁻¹)`
    Inv,
    /// `σχ(s, t) = χ(t̄⁻¹, s̄⁻¹)`
    SwapInv,
    /// `σχ(s, t) = χ(s̄, t̄)`
    Componentwise,
    /// `σχ(s, t) = χ(s̄⁻¹, t̄⁻¹)`
    ComponentwiseInv,
}

impl TorusSigmaType {
    pub fn arity(self) -> usize {
        match self {
            TorusSigmaType::Fix | TorusSigmaType::Inv => 1,
            _ => 2,
        }
    }

    pub fn apply(self, p: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if p.len() != self.arity() {
            return Err(Error::SingularSample(format!("{self:?} expects {} parameters", self.arity())));
        }
        let bar = FieldElement::conjugate;
        let bar_inv = |x: &FieldElement| x.conjugate().invert();
        Ok(match self {
            TorusSigmaType::Fix => vec![bar(&p[0])],
            TorusSigmaType::Inv => vec![bar_inv(&p[0])?],
            TorusSigmaType::SwapInv => vec![bar_inv(&p[1])?, bar_inv(&p[0])?],
            TorusSigmaType::Componentwise => vec![bar(&p[0]), bar(&p[1])],
            TorusSigmaType::ComponentwiseInv => vec![bar_inv(&p[0])?, bar_inv(&p[1])?],
        })
    }

    /// The one-dimensional factors, when the action is a product of them.
    fn factors(self) -> Option<[TorusSigmaType; 2]> {
        match self {
            TorusSigmaType::Componentwise => Some([TorusSigmaType::Fix; 2]),
            TorusSigmaType::ComponentwiseInv => Some([TorusSigmaType::Inv; 2]),
            _ => None,
        }
    }
}

/// A class in `H¹(T, σ)`, named by its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TorusClass {
    Trivial,
    /// Signs of the representative `χ(±1, …)`.
    Nontrivial(Vec<i8>),
}

impl TorusClass {
    pub fn is_trivial(&self) -> bool {
        matches!(self, TorusClass::Trivial)
    }
}

/// Whether `z · σ(z) = 1` componentwise.
pub fn is_torus_cocycle(z: &[FieldElement], sigma: TorusSigmaType) -> Result<bool> {
    if z.iter().any(FieldElement::is_zero) {
        return Err(Error::SingularSample("torus parameter is zero".into()));
    }
    let s = sigma.apply(z)?;
    Ok(z.iter().zip(&s).all(|(a, b)| (a * b).is_one()))
}

/// The class of the cocycle `χ(z)`.
pub fn torus_class(z: &[FieldElement], sigma: TorusSigmaType) -> Result<TorusClass> {
    if !is_torus_cocycle(z, sigma)? {
        let shown: Vec<String> = z.iter().map(ToString::to_string).collect();
        return Err(Error::NotACocycle(format!("({}) under {sigma:?}", shown.join(", "))));
    }
    match sigma {
        TorusSigmaType::Fix | TorusSigmaType::SwapInv | TorusSigmaType::Componentwise => Ok(TorusClass::Trivial),
        TorusSigmaType::Inv | TorusSigmaType::ComponentwiseInv => {
            // z = h⁻¹σ(h) = (h h̄)⁻¹ forces z > 0
            let mut signs = Vec::with_capacity(z.len());
            for x in z {
                signs.push(match x.real_sign()? {
                    Sign::Positive => 1,
                    _ => -1,
                });
            }
            if signs.iter().all(|&s| s == 1) {
                Ok(TorusClass::Trivial)
            } else {
                Ok(TorusClass::Nontrivial(signs))
            }
        }
    }
}

/// An explicit `h` with `z = h⁻¹σ(h)`, when one exists with entries in ℚ(ζ₈).
pub fn torus_coboundary_witness(z: &[FieldElement], sigma: TorusSigmaType) -> Result<Option<Vec<FieldElement>>> {
    if !torus_class(z, sigma)?.is_trivial() {
        return Ok(None);
    }
    if let Some(fs) = sigma.factors() {
        let mut h = Vec::new();
        for (x, f) in z.iter().zip(fs) {
            match torus_coboundary_witness(std::slice::from_ref(x), f)? {
                Some(w) => h.extend(w),
                None => return Ok(None),
            }
        }
        return Ok(Some(h));
    }
    Ok(match sigma {
        TorusSigmaType::Fix => {
            let h = &FieldElement::one() + &z[0].conjugate();
            Some(vec![if h.is_zero() { FieldElement::i() } else { h }])
        }
        TorusSigmaType::Inv => z[0].invert()?.sqrt_real().map(|h| vec![h]),
        TorusSigmaType::SwapInv => Some(vec![FieldElement::one(), z[0].conjugate().invert()?]),
        _ => unreachable!("product actions handled above"),
    })
}

/// Whether `h⁻¹σ(h) = z` componentwise.
pub fn check_torus_coboundary(h: &[FieldElement], z: &[FieldElement], sigma: TorusSigmaType) -> Result<bool> {
    let s = sigma.apply(h)?;
    for ((hi, si), zi) in h.iter().zip(&s).zip(z) {
        if (si / hi)? != *zi {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The two classes of `H¹(SL₃(ℂ), τ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sl3Class {
    Trivial,
    Nontrivial,
}

/// `g · τ(g) = I`.
pub fn is_cocycle(g: &Matrix3) -> Result<bool> {
    let d = g.det();
    if !d.is_one() {
        return Err(Error::NotInSl3(d.to_string()));
    }
    Ok((g * &tau_grp(g)?).is_identity())
}

/// `g⁻¹ · τ(g) = c`.
pub fn check_coboundary(g: &Matrix3, c: &Matrix3) -> bool {
    match (g.inverse(), tau_grp(g)) {
        (Ok(inv), Ok(t)) => &inv * &t == *c,
        _ => false,
    }
}

/// Class of a cocycle in `H¹(SL₃(ℂ), τ)`.
///
/// `c·N` is Hermitian, and replacing `c` by `g⁻¹cτ(g)` replaces `c·N` by
/// `g⁻¹(cN)g⁻†`, so its signature is an invariant of the class. The identity
/// gives `N` with signature (2,1); `diag(−1,−1,1)` gives signature (0,3).
pub fn sl3_class(c: &Matrix3) -> Result<Sl3Class> {
    if !is_cocycle(c).map_err(|e| Error::NotACocycle(e.to_string()))? {
        return Err(Error::NotACocycle(c.to_string()));
    }
    let h = c * n_matrix();
    let rows: Vec<Vec<FieldElement>> = h.rows().iter().map(|r| r.to_vec()).collect();
    match hermitian_signature(&rows)? {
        (2, 1, 0) => Ok(Sl3Class::Trivial),
        (0, 3, 0) => Ok(Sl3Class::Nontrivial),
        sig => Err(Error::NotACocycle(format!("unexpected signature {sig:?} of c·N"))),
    }
}

/// Whether `g` stabilizes the span of `u`.
pub fn check_stabilizer_membership(g: &Matrix3, u: &Subalgebra) -> Result<bool> {
    span_equal(&conjugate_subalgebra(g, u)?, u)
}

/// A term `coeff · p₁^e₁ · p₂^e₂`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Term {
    pub coeff: FieldElement,
    pub exps: [i32; 2],
}

/// A Laurent polynomial in at most two parameters, kept in normal form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Laurent(Vec<Term>);

impl Laurent {
    pub fn new(terms: Vec<Term>) -> Self {
        let mut acc: BTreeMap<[i32; 2], FieldElement> = BTreeMap::new();
        for t in terms {
            *acc.entry(t.exps).or_default() += &t.coeff;
        }
        Laurent(
            acc.into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(exps, coeff)| Term { coeff, exps })
                .collect(),
        )
    }

    pub fn monomial(coeff: FieldElement, exps: [i32; 2]) -> Self {
        Self::new(vec![Term { coeff, exps }])
    }

    pub fn terms(&self) -> &[Term] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn eval(&self, p: &[FieldElement]) -> Result<FieldElement> {
        let mut acc = FieldElement::zero();
        for t in &self.0 {
            let mut v = t.coeff.clone();
            for (k, &e) in t.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let base = p
                    .get(k)
                    .ok_or_else(|| Error::SingularSample(format!("missing parameter {}", k + 1)))?;
                let base = if e < 0 { base.invert()? } else { base.clone() };
                v = &v * &base.pow(e.unsigned_abs());
            }
            acc += &v;
        }
        Ok(acc)
    }
}

/// A 3×3 matrix of Laurent polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentMatrix(pub [[Laurent; 3]; 3]);

impl LaurentMatrix {
    pub fn eval(&self, p: &[FieldElement]) -> Result<Matrix3> {
        let mut flat = Vec::with_capacity(9);
        for e in self.0.iter().flatten() {
            flat.push(e.eval(p)?);
        }
        Ok(Matrix3::from_fn(|r, c| flat[3 * r + c].clone()))
    }

    /// `M · diag(x^{m₁}, x^{m₂}, x^{m₃}) · M⁻¹` as Laurent polynomials.
    pub fn conjugated_torus(m: &Matrix3, torus: &[[i32; 2]; 3]) -> Result<Self> {
        let inv = m.inverse()?;
        let mut out = LaurentMatrix::default();
        for r in 0..3 {
            for c in 0..3 {
                let terms = (0..3)
                    .map(|k| Term {
                        coeff: m.get(r, k) * inv.get(k, c),
                        exps: torus[k],
                    })
                    .collect();
                out.0[r][c] = Laurent::new(terms);
            }
        }
        Ok(out)
    }

    /// Entries where two matrices differ.
    pub fn mismatches(&self, other: &LaurentMatrix) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for r in 0..3 {
            for c in 0..3 {
                if self.0[r][c] != other.0[r][c] {
                    v.push((r, c));
                }
            }
        }
        v
    }
}

/// How a family is defined: a fixed matrix conjugating a diagonal torus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDefinition {
    pub conjugator: String,
    pub matrix: Matrix3,
    /// Exponents of the parameters on each diagonal entry.
    pub torus: [[i32; 2]; 3],
}

/// A torus inside a stabilizer, parametrized by one or two nonzero scalars.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParametrizedFamily {
    pub id: String,
    pub params: Vec<String>,
    pub constraint: Option<String>,
    pub printed: LaurentMatrix,
    pub definition: FamilyDefinition,
    pub claimed: TorusSigmaType,
    /// Set when the printed display is wrong; the family is then evaluated from its definition.
    pub erratum: Option<String>,
    pub paper_anchor: String,
}

impl ParametrizedFamily {
    pub fn arity(&self) -> usize {
        self.params.len()
    }

    pub fn definition_matrix(&self) -> Result<LaurentMatrix> {
        LaurentMatrix::conjugated_torus(&self.definition.matrix, &self.definition.torus)
    }

    /// Entries where the printed display disagrees with the definition.
    pub fn printed_mismatches(&self) -> Result<Vec<(usize, usize)>> {
        Ok(self.printed.mismatches(&self.definition_matrix()?))
    }

    fn check_params(&self, p: &[FieldElement]) -> Result<()> {
        if p.len() != self.arity() || p.iter().any(FieldElement::is_zero) {
            let shown: Vec<String> = p.iter().map(ToString::to_string).collect();
            return Err(Error::SingularSample(format!("{}({})", self.id, shown.join(", "))));
        }
        Ok(())
    }

    pub fn matrix(&self, p: &[FieldElement]) -> Result<Matrix3> {
        self.check_params(p)?;
        if self.erratum.is_some() {
            self.definition_matrix()?.eval(p)
        } else {
            self.printed.eval(p)
        }
    }

    pub fn printed_matrix(&self, p: &[FieldElement]) -> Result<Matrix3> {
        self.check_params(p)?;
        self.printed.eval(p)
    }
}

/// `τ(fam(p)) = fam(claimed(p))` at every sample.
pub fn check_family_tau_action(fam: &ParametrizedFamily, samples: &[Vec<FieldElement>]) -> Result<bool> {
    check_tau_action_with(fam, samples, fam.claimed, false)
}

/// The τ-action check against an arbitrary rule, on the evaluated or the printed display.
pub fn check_tau_action_with(
    fam: &ParametrizedFamily,
    samples: &[Vec<FieldElement>],
    sigma: TorusSigmaType,
    printed: bool,
) -> Result<bool> {
    let eval = |p: &[FieldElement]| if printed { fam.printed_matrix(p) } else { fam.matrix(p) };
    for p in samples {
        let lhs = tau_grp(&eval(p)?)?;
        let rhs = eval(&sigma.apply(p)?)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `fam(p)·fam(q) = fam(pq)` for each pair.
pub fn check_family_multiplicative(
    fam: &ParametrizedFamily,
    pairs: &[(Vec<FieldElement>, Vec<FieldElement>)],
    printed: bool,
) -> Result<bool> {
    let eval = |p: &[FieldElement]| if printed { fam.printed_matrix(p) } else { fam.matrix(p) };
    for (p, q) in pairs {
        let pq: Vec<FieldElement> = p.iter().zip(q).map(|(a, b)| a * b).collect();
        if &eval(p)? * &eval(q)? != eval(&pq)? {
            return Ok(false);
        }
    }
    Ok(true)
}
