//! The embedded classification data: complex representatives, real
//! representatives, witness matrices, stabilizer tori, equivalences and the
//! assertions that have no finite certificate.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::cohomology::{FamilyDefinition, Laurent, LaurentMatrix, ParametrizedFamily, Term, TorusSigmaType};
use crate::error::{Error, Result};
use crate::field::{FieldElement, Rational, Sign};
use crate::liealg::{AlgElement, CHEVALLEY_NAMES};
use crate::linalg::{Matrix3, ScalarDomain};
use crate::liealg::Subalgebra;

pub const SCHEMA_VERSION: u32 = 1;

/// Name of the identity in the witness registry.
pub const IDENTITY: &str = "identity";

/// `constant + slope · x` for the single parameter `x` of a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Affine {
    pub constant: FieldElement,
    pub slope: FieldElement,
}

impl Affine {
    pub fn constant(c: FieldElement) -> Self {
        Affine { constant: c, slope: FieldElement::zero() }
    }

    pub fn linear(constant: FieldElement, slope: FieldElement) -> Self {
        Affine { constant, slope }
    }

    pub fn is_constant(&self) -> bool {
        self.slope.is_zero()
    }

    pub fn eval(&self, x: Option<&FieldElement>) -> FieldElement {
        match x {
            Some(x) if !self.slope.is_zero() => &self.constant + &(&self.slope * x),
            _ => self.constant.clone(),
        }
    }
}

fn eval_rows(rows: &[Vec<Affine>], x: Option<&FieldElement>) -> Vec<Vec<FieldElement>> {
    rows.iter().map(|r| r.iter().map(|c| c.eval(x)).collect()).collect()
}

/// Allowed values of a real parameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterRange {
    pub name: String,
    pub excluded: Vec<FieldElement>,
    /// Open interval, when the parameter is bounded.
    pub interval: Option<(FieldElement, FieldElement)>,
    /// A normalization of the range that is recorded but not enforced.
    pub annotation: Option<String>,
}

impl ParameterRange {
    pub fn check(&self, x: &FieldElement) -> Result<()> {
        let out = |reason: &str| Error::OutOfRange {
            name: self.name.clone(),
            value: x.to_string(),
            reason: reason.to_string(),
        };
        if !x.is_real() {
            return Err(out("parameter must be real"));
        }
        if self.excluded.contains(x) {
            return Err(out("excluded value"));
        }
        if let Some((lo, hi)) = &self.interval {
            let above = (x - lo).real_sign()? == Sign::Positive;
            let below = (hi - x).real_sign()? == Sign::Positive;
            if !(above && below) {
                return Err(out(&format!("outside ({lo}, {hi})")));
            }
        }
        Ok(())
    }

    pub fn contains(&self, x: &FieldElement) -> bool {
        self.check(x).is_ok()
    }
}

/// A row of Tables 1 to 6, or one of the redundant families that reduce to one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealFamily {
    pub label: String,
    pub table: u8,
    /// False for families shown to be conjugate to a listed one.
    pub listed: bool,
    pub dim: usize,
    pub parameter: Option<ParameterRange>,
    /// Basis vectors in a-coordinates.
    pub basis: Vec<Vec<Affine>>,
    /// The row as printed, when it differs from `basis`.
    pub printed_erratum: Option<Vec<Vec<Affine>>>,
    pub paper_anchor: String,
}

impl RealFamily {
    pub fn is_parametrized(&self) -> bool {
        self.parameter.is_some()
    }

    fn build(&self, rows: &[Vec<Affine>], x: Option<&FieldElement>) -> Subalgebra {
        let span = eval_rows(rows, x).iter().map(|c| AlgElement::from_a_coords(c)).collect();
        let mut params = BTreeMap::new();
        if let (Some(p), Some(x)) = (&self.parameter, x) {
            params.insert(p.name.clone(), x.clone());
        }
        Subalgebra::new(self.label.clone(), ScalarDomain::Real, span).with_parameters(params)
    }

    /// The printed row, for families carrying an erratum.
    pub fn printed_subalgebra(&self) -> Option<Subalgebra> {
        self.printed_erratum.as_ref().map(|rows| self.build(rows, None))
    }
}

/// Substitutes the bindings into a real family, checking its printed range.
pub fn instantiate(family: &RealFamily, bindings: &BTreeMap<String, FieldElement>) -> Result<Subalgebra> {
    for name in bindings.keys() {
        if family.parameter.as_ref().map(|p| &p.name) != Some(name) {
            return Err(Error::OutOfRange {
                name: name.clone(),
                value: bindings[name].to_string(),
                reason: format!("{} has no such parameter", family.label),
            });
        }
    }
    match &family.parameter {
        None => Ok(family.build(&family.basis, None)),
        Some(p) => {
            let x = bindings.get(&p.name).ok_or_else(|| Error::OutOfRange {
                name: p.name.clone(),
                value: "unbound".into(),
                reason: format!("{} needs a value for {}", family.label, p.name),
            })?;
            p.check(x)?;
            Ok(family.build(&family.basis, Some(x)))
        }
    }
}

/// `instantiate` with the family's single parameter, if any.
pub fn instantiate_at(family: &RealFamily, x: Option<&FieldElement>) -> Result<Subalgebra> {
    let mut b = BTreeMap::new();
    if let (Some(p), Some(x)) = (&family.parameter, x) {
        b.insert(p.name.clone(), x.clone());
    }
    instantiate(family, &b)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexParameter {
    pub name: String,
    pub excluded: Vec<FieldElement>,
    /// Values at which closure is checked when no real point is sought.
    pub closure_samples: Vec<FieldElement>,
}

/// A row of Tables 7 to 12 in Chevalley coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexRep {
    pub printed: String,
    pub parameter: Option<ComplexParameter>,
    pub span: Vec<Vec<Affine>>,
}

impl ComplexRep {
    pub fn at(&self, label: &str, a: Option<&FieldElement>) -> Subalgebra {
        let span = eval_rows(&self.span, a)
            .iter()
            .map(|c| AlgElement::from_chevalley_coords(c))
            .collect();
        let mut params = BTreeMap::new();
        if let (Some(p), Some(a)) = (&self.parameter, a) {
            params.insert(p.name.clone(), a.clone());
        }
        Subalgebra::new(label, ScalarDomain::Complex, span).with_parameters(params)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Disposition {
    HasRealPoints,
    NoRealPoints,
    NoTransporter,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitCount {
    Count(u32),
    Family,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessRole {
    TransporterG0,
    CocycleH,
    CoboundarySolution,
    EquivalenceConjugator,
    ComponentRep,
    SearchGenerator,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub matrix: Matrix3,
    pub roles: Vec<WitnessRole>,
    pub paper_anchor: String,
}

/// How the complex parameter of a case depends on the real parameter μ of a route.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParameterMap {
    None,
    Identity,
    /// `a = ((μ² − 1) − 2μi)/(μ² + 1)`, the unit circle minus ±1.
    UnitCircle,
    /// `a = ½ − μi`
    HalfLine,
    /// `a = (2 + 2μi)/(1 + μ²)`, the circle `x² − 2x + y² = 0`.
    ShiftedCircle,
    /// `a = −½ + μi`
    NegHalfLine,
    Fixed(FieldElement),
}

impl ParameterMap {
    pub fn takes_sample(&self) -> bool {
        !matches!(self, ParameterMap::None | ParameterMap::Fixed(_))
    }

    pub fn eval(&self, mu: Option<&FieldElement>) -> Option<FieldElement> {
        let i = FieldElement::i();
        let one = FieldElement::one();
        let half = FieldElement::ratio(1, 2);
        match (self, mu) {
            (ParameterMap::None, _) => None,
            (ParameterMap::Fixed(v), _) => Some(v.clone()),
            (_, None) => None,
            (ParameterMap::Identity, Some(m)) => Some(m.clone()),
            (ParameterMap::UnitCircle, Some(m)) => {
                let m2 = m * m;
                let num = &(&m2 - &one) - &(&(m * &i) * &FieldElement::from_int(2));
                (&num / &(&m2 + &one)).ok()
            }
            (ParameterMap::HalfLine, Some(m)) => Some(&half - &(m * &i)),
            (ParameterMap::ShiftedCircle, Some(m)) => {
                let two = FieldElement::from_int(2);
                let num = &two + &(&(&two * m) * &i);
                (&num / &(&one + &(m * m))).ok()
            }
            (ParameterMap::NegHalfLine, Some(m)) => Some(&(m * &i) - &half),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TargetParameter {
    None,
    Same,
    Fixed(FieldElement),
}

/// One pass of the three-step procedure: transporter `g0`, cocycle `h`,
/// coboundary solution `g`, and the real family that `g·u` must equal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Route {
    pub name: String,
    /// Real family used as the starting subalgebra instead of the complex representative.
    pub base: Option<String>,
    pub parameter_map: ParameterMap,
    /// Values of μ where the route does not apply.
    pub excluded: Vec<FieldElement>,
    pub g0: String,
    pub h: String,
    pub g: String,
    pub target: String,
    pub target_parameter: TargetParameter,
}

/// A stabilizer torus together with where it is owned and what it stabilizes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub family: ParametrizedFamily,
    /// Entries (0-based) where the printed display is known to be wrong.
    pub erratum_entries: Vec<(usize, usize)>,
    pub stabilizes: Vec<String>,
}

/// Möbius map `λ ↦ (pλ + q)/(rλ + s)` on the parameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamTransform(pub [i64; 4]);

impl ParamTransform {
    pub fn identity() -> Self {
        ParamTransform([1, 0, 0, 1])
    }

    pub fn apply(&self, x: &FieldElement) -> Option<FieldElement> {
        let [p, q, r, s] = self.0.map(FieldElement::from_int);
        (&(&(&p * x) + &q) / &(&(&r * x) + &s)).ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Conjugator {
    /// A matrix printed with the claim.
    Printed(String),
    /// A word in the search pool found by bounded search, multiplied left to right.
    Derived(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Equivalence {
    pub source: String,
    pub target: String,
    pub transform: ParamTransform,
    pub conjugator: Conjugator,
    pub paper_anchor: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Separation {
    /// The cocycle relating the two real points has a nontrivial torus class.
    TorusClass { a: String, b: String, z: Vec<FieldElement>, sigma: TorusSigmaType },
    /// Fingerprints differ.
    Fingerprint { a: String, b: String },
    /// Pairwise empty eigenvalue-scaling match between one-dimensional families.
    ScalingMatch { labels: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    /// The stated Jordan diagonal of the second generator of a `u_2_6`-type family.
    JordanDiagonal { family: String },
    /// Conjugate members force `η = ±λ`.
    EtaCondition { family: String },
}

/// A statement recorded without a finite certificate. Listed cocycles are
/// still checked for validity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assertion {
    pub name: String,
    pub statement: String,
    pub cocycles: Vec<(String, Matrix3)>,
    pub paper_anchor: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub id: String,
    pub table: u8,
    pub real_table: u8,
    pub complex_rep: ComplexRep,
    pub real_reps: Vec<String>,
    pub redundant_reps: Vec<String>,
    pub disposition: Disposition,
    pub expected_real_orbit_count: OrbitCount,
    pub routes: Vec<Route>,
    pub families: Vec<FamilyRecord>,
    pub equivalences: Vec<Equivalence>,
    pub separations: Vec<Separation>,
    pub claims: Vec<Claim>,
    pub assertions: Vec<Assertion>,
    /// Cocycles whose class in `H¹(SL₃(ℂ), τ)` is stated to be nontrivial.
    pub nontrivial_cocycles: Vec<String>,
    pub paper_anchor: String,
}

impl CaseRecord {
    pub fn complex_at(&self, a: Option<&FieldElement>) -> Subalgebra {
        self.complex_rep.at(&self.id, a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub schema_version: u32,
    pub witnesses: BTreeMap<String, WitnessRecord>,
    /// Generators for the equivalence search, in enumeration order.
    pub search_pool: Vec<String>,
    pub real_families: Vec<RealFamily>,
    pub cases: Vec<CaseRecord>,
}

impl Catalog {
    pub fn case(&self, id: &str) -> Result<&CaseRecord> {
        self.cases.iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownCase(id.into()))
    }

    pub fn family(&self, label: &str) -> Result<&RealFamily> {
        self.real_families
            .iter()
            .find(|f| f.label == label)
            .ok_or_else(|| Error::UnknownCase(label.into()))
    }

    pub fn witness(&self, name: &str) -> Result<&Matrix3> {
        self.witnesses
            .get(name)
            .map(|w| &w.matrix)
            .ok_or_else(|| Error::UnknownCase(format!("witness {name}")))
    }

    pub fn word(&self, names: &[String]) -> Result<Matrix3> {
        let mut m = Matrix3::identity();
        for n in names {
            m = &m * self.witness(n)?;
        }
        Ok(m)
    }

    /// The case id for a case id or a real family label.
    pub fn resolve(&self, key: &str) -> Result<&CaseRecord> {
        self.case(key).or_else(|_| {
            self.cases
                .iter()
                .find(|c| c.real_reps.iter().chain(&c.redundant_reps).any(|l| l == key))
                .ok_or_else(|| Error::UnknownCase(key.into()))
        })
    }

    pub fn listed_families(&self) -> impl Iterator<Item = &RealFamily> {
        self.real_families.iter().filter(|f| f.listed)
    }

    pub fn all_families(&self) -> impl Iterator<Item = (&CaseRecord, &FamilyRecord)> {
        self.cases.iter().flat_map(|c| c.families.iter().map(move |f| (c, f)))
    }
}

pub fn export_json(catalog: &Catalog) -> Result<String> {
    let mut s = serde_json::to_string_pretty(catalog)?;
    s.push('\n');
    Ok(s)
}

pub fn export_json_to(catalog: &Catalog, path: &Path) -> Result<()> {
    std::fs::write(path, export_json(catalog)?)?;
    Ok(())
}

pub fn from_json(s: &str) -> Result<Catalog> {
    let c: Catalog = serde_json::from_str(s)?;
    if c.schema_version != SCHEMA_VERSION {
        return Err(Error::Parse(format!(
            "schema version {} (expected {SCHEMA_VERSION})",
            c.schema_version
        )));
    }
    Ok(c)
}

pub fn load_catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(build)
}

// ---------------------------------------------------------------------------
// Data

fn fe(n: i64) -> FieldElement {
    FieldElement::from_int(n)
}

fn q(n: i64, d: i64) -> FieldElement {
    FieldElement::ratio(n, d)
}

fn r2() -> FieldElement {
    FieldElement::sqrt2()
}

fn r2q(n: i64, d: i64) -> FieldElement {
    r2().scale(&Rational::new(n, d))
}

/// `(x + y·i)` with rational parts.
fn cx(x: FieldElement, y: FieldElement) -> FieldElement {
    &x + &(&y * &FieldElement::i())
}

fn k(c: FieldElement) -> Affine {
    Affine::constant(c)
}

fn lin(c0: FieldElement, c1: FieldElement) -> Affine {
    Affine::linear(c0, c1)
}

/// Sparse a-coordinate vector, 1-based indices.
fn av(terms: &[(usize, Affine)]) -> Vec<Affine> {
    let mut v = vec![k(FieldElement::zero()); 8];
    for (i, c) in terms {
        v[i - 1] = c.clone();
    }
    v
}

fn avi(terms: &[(usize, i64)]) -> Vec<Affine> {
    av(&terms.iter().map(|&(i, c)| (i, k(fe(c)))).collect::<Vec<_>>())
}

/// Sparse Chevalley vector by basis name.
fn chv(terms: &[(&str, Affine)]) -> Vec<Affine> {
    let mut v = vec![k(FieldElement::zero()); 8];
    for (name, c) in terms {
        let i = CHEVALLEY_NAMES.iter().position(|n| n == name).expect("Chevalley name");
        v[i] = c.clone();
    }
    v
}

fn chi(terms: &[(&str, i64)]) -> Vec<Affine> {
    chv(&terms.iter().map(|&(n, c)| (n, k(fe(c)))).collect::<Vec<_>>())
}

fn m(rows: [[FieldElement; 3]; 3]) -> Matrix3 {
    Matrix3::from_rows(rows)
}

fn diag(a: i64, b: i64, c: i64) -> Matrix3 {
    Matrix3::diag([fe(a), fe(b), fe(c)])
}

fn witnesses() -> BTreeMap<String, WitnessRecord> {
    use WitnessRole::*;
    let z = FieldElement::zero;
    let h = || q(1, 2);
    let nh = || q(-1, 2);
    let s = || r2q(1, 2);
    let ns = || r2q(-1, 2);
    let i = FieldElement::i;
    let entries: Vec<(&str, Matrix3, Vec<WitnessRole>, &str)> = vec![
        (IDENTITY, Matrix3::identity(), vec![TransporterG0, CocycleH, CoboundarySolution], "trivial witness"),
        (
            "rot12",
            Matrix3::from_ints([[0, 1, 0], [-1, 0, 0], [0, 0, 1]]),
            vec![TransporterG0, SearchGenerator],
            "Table 7, ⟨X_α⟩: transporter",
        ),
        (
            "h_xa",
            Matrix3::from_ints([[0, -1, 0], [-1, 0, 0], [0, 0, -1]]),
            vec![TransporterG0, CocycleH],
            "Table 7, ⟨X_α⟩: cocycle",
        ),
        (
            "g_xa",
            m([[nh(), h(), s()], [nh(), h(), ns()], [ns(), ns(), z()]]),
            vec![CoboundarySolution],
            "Table 7, ⟨X_α⟩: coboundary solution",
        ),
        (
            "swap13",
            Matrix3::from_ints([[0, 0, 1], [0, 1, 0], [-1, 0, 0]]),
            vec![TransporterG0, CocycleH, SearchGenerator],
            "Table 7, ⟨X_α + X_β⟩: transporter and cocycle",
        ),
        (
            "h_cyc",
            m([
                [cx(h(), nh()), z(), cx(nh(), h())],
                [z(), i(), z()],
                [cx(h(), nh()), z(), cx(h(), nh())],
            ]),
            vec![CoboundarySolution],
            "Table 7, ⟨X_α + X_β⟩: coboundary solution",
        ),
        (
            "g1",
            m([[z(), s(), s()], [z(), s(), ns()], [fe(-1), z(), z()]]),
            vec![CoboundarySolution, SearchGenerator],
            "Table 7, ⟨H_α + aH_β⟩: solution for T(−1,1)",
        ),
        (
            "g2",
            m([[s(), z(), ns()], [ns(), z(), ns()], [z(), fe(1), z()]]),
            vec![CoboundarySolution, SearchGenerator],
            "Table 7, ⟨H_α + aH_β⟩: solution for T(1,−1)",
        ),
        (
            "swap12",
            Matrix3::from_ints([[0, 1, 0], [1, 0, 0], [0, 0, -1]]),
            vec![TransporterG0, CocycleH, ComponentRep, EquivalenceConjugator, SearchGenerator],
            "Table 7, ⟨H_α⟩: component representative u",
        ),
        (
            "g3",
            m([[nh(), nh(), ns()], [h(), h(), ns()], [s(), ns(), z()]]),
            vec![CoboundarySolution, SearchGenerator],
            "Table 7, ⟨H_α⟩: solution for u",
        ),
        (
            "g0_half",
            m([[fe(1), z(), z()], [z(), z(), i()], [z(), i(), z()]]),
            vec![TransporterG0, CocycleH, SearchGenerator],
            "Table 7, ⟨H_α + aH_β⟩ with a = ½ + iy: transporter",
        ),
        (
            "g_half",
            m([
                [i(), z(), z()],
                [z(), cx(h(), nh()), cx(nh(), nh())],
                [z(), cx(nh(), nh()), cx(h(), nh())],
            ]),
            vec![CoboundarySolution],
            "Table 7, ⟨H_α + aH_β⟩ with a = ½ + iy: coboundary solution",
        ),
        (
            "c_v4",
            m([[s(), ns(), z()], [ns(), ns(), z()], [z(), z(), fe(-1)]]),
            vec![EquivalenceConjugator, SearchGenerator],
            "Table 1: conjugator from v_4 to u_1_7",
        ),
        (
            "swap13_neg",
            Matrix3::from_ints([[0, 0, -1], [0, 1, 0], [1, 0, 0]]),
            vec![TransporterG0, CocycleH, SearchGenerator],
            "Table 8, ⟨X_α + X_β, X_α+β⟩: transporter and cocycle",
        ),
        (
            "h_cyc2",
            m([
                [cx(h(), h()), z(), cx(h(), h())],
                [z(), -i(), z()],
                [cx(nh(), nh()), z(), cx(h(), h())],
            ]),
            vec![CoboundarySolution],
            "Table 8, ⟨X_α + X_β, X_α+β⟩: coboundary solution",
        ),
        ("d_pnn", diag(1, -1, -1), vec![TransporterG0, CocycleH, SearchGenerator], "T(1,−1)"),
        ("d_npn", diag(-1, 1, -1), vec![CocycleH, SearchGenerator], "T(−1,1)"),
        ("d_nnp", diag(-1, -1, 1), vec![CocycleH, SearchGenerator], "T(−1,−1)"),
    ];
    entries
        .into_iter()
        .map(|(n, matrix, roles, anchor)| {
            (n.to_string(), WitnessRecord { matrix, roles, paper_anchor: anchor.to_string() })
        })
        .collect()
}

fn search_pool() -> Vec<String> {
    [
        "rot12", "swap13", "g1", "g2", "swap12", "g3", "g0_half", "c_v4", "swap13_neg", "d_pnn", "d_npn", "d_nnp",
    ]
    .map(String::from)
    .to_vec()
}

fn range(excluded: Vec<FieldElement>, interval: Option<(FieldElement, FieldElement)>, annotation: Option<&str>) -> ParameterRange {
    ParameterRange {
        name: "lambda".into(),
        excluded,
        interval,
        annotation: annotation.map(String::from),
    }
}

fn family(label: &str, table: u8, basis: Vec<Vec<Affine>>, parameter: Option<ParameterRange>) -> RealFamily {
    RealFamily {
        label: label.into(),
        table,
        listed: !label.starts_with('v'),
        dim: basis.len(),
        parameter,
        basis,
        printed_erratum: None,
        paper_anchor: format!("Table {table}, {label}"),
    }
}

fn real_families() -> Vec<RealFamily> {
    let z = || k(FieldElement::zero());
    let c = |x: i64| k(fe(x));
    let l = |c0: i64, c1: i64| lin(fe(c0), fe(c1));
    let s = |n: i64| k(r2q(n, 1));
    let mut u24 = family("u_2_4", 2, vec![avi(&[(5, 1), (7, -1)]), avi(&[(1, 1), (2, 2), (4, 3)])], None);
    u24.printed_erratum = Some(vec![avi(&[(6, 1), (7, -1)]), avi(&[(1, 1), (2, 2), (4, 3)])]);
    vec![
        family("u_1_1", 1, vec![av(&[(1, c(-1)), (2, c(-2)), (4, c(-1)), (6, s(1)), (8, s(1))])], None),
        family("u_1_2", 1, vec![avi(&[(3, 1), (4, 1), (7, 1), (8, -1)])], None),
        family("u_1_3", 1, vec![av(&[(1, c(3)), (2, c(6)), (4, c(-5)), (6, s(-1)), (8, s(-1))])], None),
        family("u_1_4", 1, vec![av(&[(1, c(1)), (2, c(2)), (4, c(7)), (6, s(-1)), (8, s(1))])], None),
        family(
            "u_1_5",
            1,
            vec![av(&[(1, c(1)), (2, l(0, 1))])],
            Some(range(vec![], None, Some("[0, 2]"))),
        ),
        family("u_1_6", 1, vec![avi(&[(5, 1), (7, -1)])], None),
        family(
            "u_1_7",
            1,
            vec![av(&[(1, c(1)), (2, c(-1)), (5, l(0, 1))])],
            Some(range(vec![fe(0)], None, Some("(0, ∞)"))),
        ),
        family(
            "v_1",
            1,
            vec![av(&[(1, c(1)), (2, c(2)), (4, l(1, -2))])],
            Some(range(vec![fe(-1), fe(1), fe(2)], None, None)),
        ),
        family(
            "v_2",
            1,
            vec![av(&[(1, l(1, -1)), (2, l(2, -2)), (4, l(-1, -1))])],
            Some(range(vec![fe(0), q(1, 2)], None, None)),
        ),
        family(
            "v_3",
            1,
            vec![av(&[(1, c(1)), (2, k(q(1, 2))), (8, l(0, 1))])],
            Some(range(vec![fe(0)], None, None)),
        ),
        family(
            "v_4",
            1,
            vec![av(&[
                (1, c(1)),
                (2, c(2)),
                (4, c(3)),
                (5, lin(FieldElement::zero(), r2())),
                (7, lin(FieldElement::zero(), -r2())),
            ])],
            Some(range(vec![fe(0)], Some((fe(-1), fe(1))), None)),
        ),
        family("u_2_1", 2, vec![avi(&[(3, 1), (4, 1), (7, -1), (8, 1)]), avi(&[(1, 1), (2, 1), (6, 1)])], None),
        family(
            "u_2_2",
            2,
            vec![
                av(&[(1, c(1)), (2, c(2)), (4, c(-1)), (6, s(1)), (8, s(-1))]),
                avi(&[(1, 1), (2, 2), (4, 3)]),
            ],
            None,
        ),
        family("u_2_3", 2, vec![avi(&[(1, 1)]), avi(&[(2, 1)])], None),
        u24,
        family("u_2_5", 2, vec![avi(&[(3, 1), (4, 1), (7, -1), (8, 1)]), avi(&[(5, 1)])], None),
        family(
            "u_2_6",
            2,
            vec![
                av(&[(1, c(1)), (2, c(2)), (4, c(-1)), (6, s(1)), (8, s(-1))]),
                av(&[(1, l(0, 2)), (2, l(0, 4)), (4, l(0, 6)), (5, s(-1)), (7, s(1)), (3, z())]),
            ],
            Some(range(vec![], None, None)),
        ),
        family(
            "u_3_1",
            3,
            vec![avi(&[(4, 1), (8, -1)]), avi(&[(3, 1), (7, 1)]), avi(&[(1, 1), (2, 1), (6, -1)])],
            None,
        ),
        family(
            "u_3_2",
            3,
            vec![avi(&[(3, 1), (4, 1), (7, 1), (8, -1)]), avi(&[(1, 1), (2, 1), (6, -1)]), avi(&[(5, 1)])],
            None,
        ),
        family(
            "u_3_3",
            3,
            vec![
                av(&[(4, c(4)), (6, s(-1)), (8, s(1))]),
                avi(&[(5, 1), (7, -1)]),
                avi(&[(1, 1), (2, 2), (4, 3)]),
            ],
            None,
        ),
        family("u_3_4", 4, vec![avi(&[(4, 1)]), avi(&[(6, 1)]), avi(&[(7, 1)])], None),
        family("u_3_5", 4, vec![avi(&[(1, 1), (2, 1)]), avi(&[(5, 1)]), avi(&[(6, 1)])], None),
        family("u_3_6", 4, vec![avi(&[(1, 1)]), avi(&[(3, 1)]), avi(&[(4, 1)])], None),
        family(
            "u_4_1",
            5,
            vec![
                avi(&[(1, 1), (2, 1), (6, 1)]),
                avi(&[(5, 1)]),
                avi(&[(3, 1), (7, -1)]),
                avi(&[(4, 1), (8, 1)]),
            ],
            None,
        ),
        family(
            "u_4_2",
            5,
            vec![
                avi(&[(1, 1), (2, -1)]),
                avi(&[(1, 1), (2, 1), (6, 1)]),
                avi(&[(3, 1), (7, -1)]),
                avi(&[(4, 1), (8, 1)]),
            ],
            None,
        ),
        family(
            "u_5_1",
            5,
            vec![
                avi(&[(1, 1), (2, -1)]),
                avi(&[(1, 1), (2, 1), (6, 1)]),
                avi(&[(5, 1)]),
                avi(&[(3, 1), (7, -1)]),
                avi(&[(4, 1), (8, 1)]),
            ],
            None,
        ),
        family("u_4_3", 6, vec![avi(&[(1, 1)]), avi(&[(2, 1)]), avi(&[(5, 1)]), avi(&[(6, 1)])], None),
        family("u_4_4", 6, vec![avi(&[(1, 1)]), avi(&[(2, 1)]), avi(&[(3, 1)]), avi(&[(4, 1)])], None),
    ]
}

// Stabilizer tori ------------------------------------------------------------

type Mono = (FieldElement, [i32; 2]);

fn lp(terms: &[Mono]) -> Laurent {
    Laurent::new(terms.iter().map(|(c, e)| Term { coeff: c.clone(), exps: *e }).collect())
}

fn zero_l() -> Laurent {
    Laurent::default()
}

fn one_l() -> Laurent {
    lp(&[(fe(1), [0, 0])])
}

#[allow(clippy::too_many_arguments)]
fn torus_family(
    id: &str,
    params: &[&str],
    constraint: Option<&str>,
    printed: [[Laurent; 3]; 3],
    conjugator: &str,
    conj: &BTreeMap<String, WitnessRecord>,
    torus: [[i32; 2]; 3],
    claimed: TorusSigmaType,
    erratum: Option<(&str, Vec<(usize, usize)>)>,
    stabilizes: &[&str],
    anchor: &str,
) -> FamilyRecord {
    let (note, entries) = match erratum {
        Some((n, e)) => (Some(n.to_string()), e),
        None => (None, Vec::new()),
    };
    FamilyRecord {
        family: ParametrizedFamily {
            id: id.into(),
            params: params.iter().map(|s| s.to_string()).collect(),
            constraint: constraint.map(String::from),
            printed: LaurentMatrix(printed),
            definition: FamilyDefinition {
                conjugator: conjugator.into(),
                matrix: conj[conjugator].matrix.clone(),
                torus,
            },
            claimed,
            erratum: note,
            paper_anchor: anchor.into(),
        },
        erratum_entries: entries,
        stabilizes: stabilizes.iter().map(|s| s.to_string()).collect(),
    }
}

const A: [i32; 2] = [1, 0];
const AI: [i32; 2] = [-1, 0];
const B: [i32; 2] = [0, 1];
const BI: [i32; 2] = [0, -1];
const ABI: [i32; 2] = [-1, -1];
const C0: [i32; 2] = [0, 0];

/// `x·(p + q)/2`-style helpers for the symmetric torus displays.
fn half_sum(x: [i32; 2], y: [i32; 2], sx: i64, sy: i64, d: i64) -> Laurent {
    lp(&[(q(sx, d), x), (q(sy, d), y)])
}

fn families(w: &BTreeMap<String, WitnessRecord>) -> BTreeMap<&'static str, FamilyRecord> {
    use TorusSigmaType::*;
    let mut out = BTreeMap::new();
    // S(a, b) with c = (ab)⁻¹, conjugated by g_xa
    let s11 = {
        let d = lp(&[(q(1, 4), A), (q(1, 4), B), (q(1, 2), ABI)]);
        let o = lp(&[(q(1, 4), A), (q(1, 4), B), (q(-1, 2), ABI)]);
        let e = lp(&[(r2q(1, 4), A), (r2q(-1, 4), B)]);
        let t = lp(&[(q(1, 2), A), (q(1, 2), B)]);
        [[d.clone(), o.clone(), e.clone()], [o, d, e.clone()], [e.clone(), e, t]]
    };
    out.insert(
        "S_u_1_1",
        torus_family(
            "S_u_1_1", &["a", "b"], Some("c = (ab)^-1"), s11, "g_xa", w,
            [A, B, ABI], SwapInv, None, &["u_1_1"], "Table 1, u_1_1: stabilizer torus",
        ),
    );
    let s12 = {
        let d = half_sum(A, AI, 1, 1, 2);
        let o = half_sum(A, AI, 1, -1, 2);
        [[d.clone(), zero_l(), o.clone()], [zero_l(), one_l(), zero_l()], [o, zero_l(), d]]
    };
    out.insert(
        "S_u_1_2",
        torus_family(
            "S_u_1_2", &["t"], None, s12, "h_cyc", w,
            [A, C0, AI], Fix, None, &["u_1_2", "u_3_2"], "Table 1, u_1_2: stabilizer torus",
        ),
    );
    let s13 = {
        let d = half_sum(A, [-2, 0], 1, 1, 2);
        let o = half_sum(A, [-2, 0], 1, -1, 2);
        [[d.clone(), o.clone(), zero_l()], [o, d, zero_l()], [zero_l(), zero_l(), lp(&[(fe(1), A)])]]
    };
    out.insert(
        "S_u_1_3",
        torus_family(
            "S_u_1_3", &["t"], None, s13, "g_xa", w,
            [A, A, [-2, 0]], Inv, None, &["u_1_3"], "Table 1, u_1_3: stabilizer torus",
        ),
    );
    // T(a, c) with b = (ac)⁻¹
    let t17 = {
        let d = half_sum(A, B, 1, 1, 2);
        let o = half_sum(A, B, 1, -1, 2);
        [[d.clone(), zero_l(), o.clone()], [zero_l(), lp(&[(fe(1), ABI)]), zero_l()], [o, zero_l(), d]]
    };
    out.insert(
        "T_u_1_7",
        torus_family(
            "T_u_1_7", &["a", "c"], Some("b = (ac)^-1"), t17, "h_cyc", w,
            [A, ABI, B], SwapInv, None, &["u_1_7", "u_3_1"], "Table 1, u_1_7: stabilizer torus",
        ),
    );
    // T(b, c) with a = (bc)⁻¹
    let tv3 = {
        let i = FieldElement::i();
        let d = half_sum(A, B, 1, 1, 2);
        let up = lp(&[(&i * &q(1, 2), A), (&i * &q(-1, 2), B)]);
        let dn = lp(&[(&i * &q(-1, 2), A), (&i * &q(1, 2), B)]);
        [
            [lp(&[(fe(1), ABI)]), zero_l(), zero_l()],
            [zero_l(), d.clone(), up],
            [zero_l(), dn, d],
        ]
    };
    out.insert(
        "T_v_3",
        torus_family(
            "T_v_3", &["b", "c"], Some("a = (bc)^-1"), tv3, "g_half", w,
            [ABI, A, B], SwapInv, None, &["v_3"], "Table 1, v_3: stabilizer torus",
        ),
    );
    // T(a, b) with c = (ab)⁻¹, conjugated by g3; printed with two wrong entries
    let tv4 = {
        let d = lp(&[(q(1, 4), A), (q(1, 4), B), (q(1, 2), ABI)]);
        let o = lp(&[(q(-1, 4), A), (q(-1, 4), B), (q(1, 2), ABI)]);
        let o_printed = lp(&[(q(1, 4), A), (q(-1, 4), B), (q(1, 2), ABI)]);
        let e = lp(&[(r2q(-1, 4), A), (r2q(1, 4), B)]);
        let f = lp(&[(r2q(1, 4), A), (r2q(-1, 4), B)]);
        let t_printed = lp(&[(q(1, 4), A), (q(1, 4), B)]);
        [[d.clone(), o, e.clone()], [o_printed, d, f.clone()], [e, f, t_printed]]
    };
    out.insert(
        "T_v_4",
        torus_family(
            "T_v_4", &["a", "b"], Some("c = (ab)^-1"), tv4, "g3", w,
            [A, B, ABI], SwapInv,
            Some((
                "printed (2,1) entry (a−b+2c)/4 should be (−a−b+2c)/4; printed (3,3) entry (a+b)/4 should be (a+b)/2",
                vec![(1, 0), (2, 2)],
            )),
            &["v_4"], "Table 1, v_4: stabilizer torus",
        ),
    );
    let s21 = {
        let d = half_sum(A, AI, 1, 1, 2);
        let o = half_sum(A, AI, -1, 1, 2);
        [[d.clone(), zero_l(), o.clone()], [zero_l(), one_l(), zero_l()], [o, zero_l(), d]]
    };
    out.insert(
        "S_u_2_1",
        torus_family(
            "S_u_2_1", &["a"], None, s21, "h_cyc2", w,
            [A, C0, AI], Fix, None, &["u_2_1", "u_2_5"], "Table 2, u_2_1: stabilizer torus",
        ),
    );
    let s22 = {
        let d = lp(&[(q(1, 4), A), (q(1, 4), B), (q(1, 2), ABI)]);
        let o = lp(&[(q(-1, 4), A), (q(-1, 4), B), (q(1, 2), ABI)]);
        let e = lp(&[(r2q(-1, 4), A), (r2q(1, 4), B)]);
        let f = lp(&[(r2q(1, 4), A), (r2q(-1, 4), B)]);
        let t = lp(&[(q(1, 2), A), (q(1, 2), B)]);
        [[d.clone(), o.clone(), e.clone()], [o, d, f.clone()], [e, f, t]]
    };
    out.insert(
        "S_u_2_2",
        torus_family(
            "S_u_2_2", &["a", "b"], Some("c = (ab)^-1"), s22, "g3", w,
            [A, B, ABI], SwapInv, None, &["u_2_2", "u_2_6", "u_3_3"], "Table 2, u_2_2: stabilizer torus",
        ),
    );
    let s41 = {
        let d = half_sum(A, B, 1, 1, 2);
        let o = half_sum(A, B, -1, 1, 2);
        [[d.clone(), zero_l(), o.clone()], [zero_l(), lp(&[(fe(1), ABI)]), zero_l()], [o, zero_l(), d]]
    };
    out.insert(
        "S_u_4_1",
        torus_family(
            "S_u_4_1", &["a", "c"], Some("b = (ac)^-1"), s41, "h_cyc2", w,
            [A, ABI, B], SwapInv, None, &["u_4_1", "u_4_2", "u_5_1"], "Table 5, u_4_1: stabilizer torus",
        ),
    );
    let _ = BI;
    out
}

// Cases ----------------------------------------------------------------------

fn route(name: &str, map: ParameterMap, g0: &str, h: &str, g: &str, target: &str, tp: TargetParameter) -> Route {
    Route {
        name: name.into(),
        base: None,
        parameter_map: map,
        excluded: Vec::new(),
        g0: g0.into(),
        h: h.into(),
        g: g.into(),
        target: target.into(),
        target_parameter: tp,
    }
}

fn simple(g0: &str, h: &str, g: &str, target: &str) -> Route {
    route("main", ParameterMap::None, g0, h, g, target, TargetParameter::None)
}

fn real_table_of(table: u8, idx: usize) -> u8 {
    match table {
        7 => 1,
        8 => 2,
        9 => 4,
        10 => 3,
        11 => 5,
        12 if idx == 1 => 6,
        _ => 6,
    }
}

struct CaseBuilder(CaseRecord);

impl CaseBuilder {
    fn new(table: u8, idx: usize, printed: &str, span: Vec<Vec<Affine>>) -> Self {
        let id = format!("c{table:02}_{idx:02}");
        CaseBuilder(CaseRecord {
            paper_anchor: format!("Table {table}, row {idx}"),
            id,
            table,
            real_table: real_table_of(table, idx),
            complex_rep: ComplexRep { printed: printed.into(), parameter: None, span },
            real_reps: Vec::new(),
            redundant_reps: Vec::new(),
            disposition: Disposition::NoTransporter,
            expected_real_orbit_count: OrbitCount::Count(0),
            routes: Vec::new(),
            families: Vec::new(),
            equivalences: Vec::new(),
            separations: Vec::new(),
            claims: Vec::new(),
            assertions: Vec::new(),
            nontrivial_cocycles: Vec::new(),
        })
    }

    fn param(mut self, excluded: Vec<FieldElement>) -> Self {
        self.0.complex_rep.parameter = Some(ComplexParameter {
            name: "a".into(),
            excluded,
            closure_samples: vec![fe(3), q(-2, 3), cx(fe(2), fe(1))],
        });
        self
    }

    fn reps(mut self, reps: &[&str], routes: Vec<Route>) -> Self {
        self.0.real_reps = reps.iter().map(|s| s.to_string()).collect();
        self.0.disposition = Disposition::HasRealPoints;
        self.0.expected_real_orbit_count = OrbitCount::Count(reps.len() as u32);
        self.0.routes = routes;
        self
    }

    fn fams(mut self, fams: &BTreeMap<&'static str, FamilyRecord>, ids: &[&str]) -> Self {
        self.0.families = ids.iter().map(|i| fams[i].clone()).collect();
        self
    }

    fn discarded(mut self) -> Self {
        self.0.assertions.push(Assertion {
            name: "no_transporter".into(),
            statement: "no g in SL(3,C) maps the subalgebra to its image under tau; recorded, not recomputed".into(),
            cocycles: Vec::new(),
            paper_anchor: self.0.paper_anchor.clone(),
        });
        self
    }

    fn done(self) -> CaseRecord {
        self.0
    }
}

fn cases(w: &BTreeMap<String, WitnessRecord>) -> Vec<CaseRecord> {
    use TargetParameter as TP;
    let fams = families(w);
    let one = || k(fe(1));
    let a = |c0: i64, c1: i64| lin(fe(c0), fe(c1));

    // Table 7
    let c07_01 = CaseBuilder::new(7, 1, "⟨X_α + X_β⟩", vec![chi(&[("X_a", 1), ("X_b", 1)])])
        .reps(&["u_1_2"], vec![simple("swap13", "swap13", "h_cyc", "u_1_2")])
        .fams(&fams, &["S_u_1_2"])
        .done();
    let c07_02 = CaseBuilder::new(7, 2, "⟨X_α⟩", vec![chi(&[("X_a", 1)])])
        .reps(&["u_1_1"], vec![simple("rot12", "h_xa", "g_xa", "u_1_1")])
        .fams(&fams, &["S_u_1_1"])
        .done();
    let mut c07_03 = CaseBuilder::new(
        7,
        3,
        "⟨X_α + H_α + 2H_β⟩",
        vec![chi(&[("X_a", 1), ("H_a", 1), ("H_b", 2)])],
    )
    .reps(
        &["u_1_3", "u_1_4"],
        vec![simple("h_xa", "h_xa", "g_xa", "u_1_3"), {
            let mut r = route("second", ParameterMap::None, IDENTITY, "h_xa", "g_xa", "u_1_4", TP::None);
            r.base = Some("u_1_3".into());
            r
        }],
    )
    .fams(&fams, &["S_u_1_3"])
    .done();
    c07_03.separations.push(Separation::TorusClass {
        a: "u_1_3".into(),
        b: "u_1_4".into(),
        z: vec![fe(-1)],
        sigma: TorusSigmaType::Inv,
    });

    let generic = vec![fe(0), fe(1), fe(-1), q(1, 2), fe(2)];
    let mut c07_04 = CaseBuilder::new(7, 4, "⟨H_α + aH_β⟩", vec![chv(&[("H_a", one()), ("H_b", a(0, 1))])])
        .param(vec![])
        .reps(&["u_1_5", "u_1_6", "u_1_7"], {
            let mut rs = vec![
                route("generic_identity", ParameterMap::Identity, IDENTITY, IDENTITY, IDENTITY, "u_1_5", TP::Same),
                route("generic_g1", ParameterMap::Identity, IDENTITY, "d_npn", "g1", "v_1", TP::Same),
                route("generic_g2", ParameterMap::Identity, IDENTITY, "d_pnn", "g2", "v_2", TP::Same),
            ];
            for r in &mut rs {
                r.excluded = generic.clone();
            }
            let z = || ParameterMap::Fixed(fe(0));
            let t = || ParameterMap::Fixed(fe(2));
            rs.extend([
                route("zero_identity", z(), IDENTITY, IDENTITY, IDENTITY, "u_1_5", TP::Fixed(fe(0))),
                route("zero_g1", z(), IDENTITY, "d_npn", "g1", "v_1", TP::Fixed(fe(0))),
                route("zero_u", z(), IDENTITY, "swap12", "g3", "u_1_6", TP::None),
                route("two_identity", t(), IDENTITY, IDENTITY, IDENTITY, "u_1_5", TP::Fixed(fe(2))),
                route("two_g2", t(), IDENTITY, "d_pnn", "g2", "v_2", TP::Fixed(fe(2))),
                route("unit_circle", ParameterMap::UnitCircle, "swap13", "swap13", "h_cyc", "u_1_7", TP::Same),
                route("half_line", ParameterMap::HalfLine, "g0_half", "g0_half", "g_half", "v_3", TP::Same),
                route("shifted_circle", ParameterMap::ShiftedCircle, "swap12", "swap12", "g3", "v_4", TP::Same),
            ]);
            rs
        })
        .fams(&fams, &["T_u_1_7", "T_v_3", "T_v_4"])
        .done();
    c07_04.redundant_reps = ["v_1", "v_2", "v_3", "v_4"].map(String::from).to_vec();
    c07_04.expected_real_orbit_count = OrbitCount::Family;
    c07_04.nontrivial_cocycles = vec!["d_nnp".into()];
    let eq = |s: &str, t: &str, tr: [i64; 4], c: Conjugator, anchor: &str| Equivalence {
        source: s.into(),
        target: t.into(),
        transform: ParamTransform(tr),
        conjugator: c,
        paper_anchor: anchor.into(),
    };
    let word = |ws: &[&str]| Conjugator::Derived(ws.iter().map(|s| s.to_string()).collect());
    c07_04.equivalences = vec![
        eq("u_1_5", "v_1", [1, -1, 1, 0], word(&["rot12", "c_v4"]), "Table 1, v_1 reduces to u_1_5"),
        eq("u_1_5", "v_2", [0, -1, 1, -1], word(&["rot12", "c_v4"]), "Table 1, v_2 reduces to u_1_5"),
        eq("u_1_7", "v_3", [1, 0, 0, 2], word(&["swap13", "rot12", "g0_half"]), "Table 1, v_3 reduces to u_1_7"),
        eq("v_4", "u_1_7", [1, 0, 0, 1], Conjugator::Printed("c_v4".into()), "Table 1, v_4 reduces to u_1_7"),
        eq("u_1_5", "u_1_5", [1, 0, 1, -1], Conjugator::Printed("swap12".into()), "Table 1, u_1_5 conditions"),
        eq("u_1_7", "u_1_7", [-1, 0, 0, 1], Conjugator::Printed("d_pnn".into()), "Table 1, u_1_7 conditions"),
    ];
    c07_04.separations.push(Separation::ScalingMatch {
        labels: ["u_1_5", "u_1_6", "u_1_7"].map(String::from).to_vec(),
    });
    let t = |a: i64, b: i64| (format!("T({a},{b})"), diag(a, b, a * b));
    c07_04.assertions = vec![
        Assertion {
            name: "fiber_lambda0".into(),
            statement: "at a = 0 the fiber of j_* over [1] is {T(1,1), T(-1,1), T(-1,-1)}".into(),
            cocycles: vec![t(1, 1), t(-1, 1), t(-1, -1)],
            paper_anchor: "Table 7, ⟨H_α + aH_β⟩ at a = 0".into(),
        },
        Assertion {
            name: "gl2_classes".into(),
            statement: "at a = 2 the stabilizer is GL(2,C) with classes {T(1,1), T(1,-1), T(-1,-1)}".into(),
            cocycles: vec![t(1, 1), t(1, -1), t(-1, -1)],
            paper_anchor: "Table 7, ⟨H_α + aH_β⟩ at a = 2".into(),
        },
    ];

    // Table 8
    let c08_01 = CaseBuilder::new(8, 1, "⟨X_α + X_β, X_α+β⟩", vec![chi(&[("X_a", 1), ("X_b", 1)]), chi(&[("X_ab", 1)])])
        .reps(&["u_2_1"], vec![simple("swap13_neg", "swap13_neg", "h_cyc2", "u_2_1")])
        .fams(&fams, &["S_u_2_1"])
        .done();
    let c08_02 = CaseBuilder::new(8, 2, "⟨X_α, H_α + 2H_β⟩", vec![chi(&[("X_a", 1)]), chi(&[("H_a", 1), ("H_b", 2)])])
        .reps(&["u_2_2"], vec![simple("swap12", "swap12", "g3", "u_2_2")])
        .fams(&fams, &["S_u_2_2"])
        .done();
    let c08_03 = CaseBuilder::new(8, 3, "⟨X_α, X_α+β⟩", vec![chi(&[("X_a", 1)]), chi(&[("X_ab", 1)])])
        .discarded()
        .done();
    let c08_04 = CaseBuilder::new(8, 4, "⟨X_α, Y_β⟩", vec![chi(&[("X_a", 1)]), chi(&[("Y_b", 1)])])
        .discarded()
        .done();
    let mut c08_05 = CaseBuilder::new(8, 5, "⟨H_α, H_β⟩", vec![chi(&[("H_a", 1)]), chi(&[("H_b", 1)])])
        .reps(
            &["u_2_3", "u_2_4"],
            vec![
                route("identity", ParameterMap::None, IDENTITY, IDENTITY, IDENTITY, "u_2_3", TP::None),
                route("component", ParameterMap::None, IDENTITY, "swap12", "g3", "u_2_4", TP::None),
            ],
        )
        .done();
    c08_05.separations.push(Separation::Fingerprint { a: "u_2_3".into(), b: "u_2_4".into() });
    c08_05.nontrivial_cocycles = vec!["d_nnp".into()];
    let c08_06 = CaseBuilder::new(
        8,
        6,
        "⟨X_α + X_β, H_α + H_β⟩",
        vec![chi(&[("X_a", 1), ("X_b", 1)]), chi(&[("H_a", 1), ("H_b", 1)])],
    )
    .reps(&["u_2_5"], vec![simple("swap13_neg", "swap13_neg", "h_cyc2", "u_2_5")])
    .done();
    let c08_07 = CaseBuilder::new(
        8,
        7,
        "⟨X_α, −H_α + H_β + 3X_α+β⟩",
        vec![chi(&[("X_a", 1)]), chi(&[("H_a", -1), ("H_b", 1), ("X_ab", 3)])],
    )
    .discarded()
    .done();
    let c08_08 = CaseBuilder::new(
        8,
        8,
        "⟨X_α, −2H_α − H_β + 3Y_β⟩",
        vec![chi(&[("X_a", 1)]), chi(&[("H_a", -2), ("H_b", -1), ("Y_b", 3)])],
    )
    .discarded()
    .done();
    let mut c08_09 = CaseBuilder::new(
        8,
        9,
        "⟨X_α, aH_α + (2a + 1)H_β⟩",
        vec![chi(&[("X_a", 1)]), chv(&[("H_a", a(0, 1)), ("H_b", a(1, 2))])],
    )
    .param(vec![])
    .reps(
        &["u_2_6"],
        vec![route("neg_half_line", ParameterMap::NegHalfLine, "swap12", "swap12", "g3", "u_2_6", TP::Same)],
    )
    .done();
    c08_09.expected_real_orbit_count = OrbitCount::Family;
    c08_09.claims = vec![
        Claim::JordanDiagonal { family: "u_2_6".into() },
        Claim::EtaCondition { family: "u_2_6".into() },
    ];
    c08_09.assertions.push(Assertion {
        name: "u26_sign_separation".into(),
        statement: "u_2_6^λ and u_2_6^-λ are not conjugate for λ ≠ 0 (direct computation not given)".into(),
        cocycles: Vec::new(),
        paper_anchor: "Table 2, u_2_6 conditions".into(),
    });

    // Table 9
    let mut c09_01 = CaseBuilder::new(
        9,
        1,
        "⟨X_α+β, Y_α+β, H_α + H_β⟩",
        vec![chi(&[("X_ab", 1)]), chi(&[("Y_ab", 1)]), chi(&[("H_a", 1), ("H_b", 1)])],
    )
    .reps(
        &["u_3_5", "u_3_6"],
        vec![
            route("identity", ParameterMap::None, IDENTITY, IDENTITY, IDENTITY, "u_3_5", TP::None),
            route("twisted", ParameterMap::None, IDENTITY, "d_pnn", "g2", "u_3_6", TP::None),
        ],
    )
    .done();
    c09_01.separations.push(Separation::Fingerprint { a: "u_3_5".into(), b: "u_3_6".into() });
    c09_01.nontrivial_cocycles = vec!["d_nnp".into()];
    let mut c09_02 = CaseBuilder::new(
        9,
        2,
        "⟨X_α + X_β, 2Y_α + 2Y_β, 2H_α + 2H_β⟩",
        vec![
            chi(&[("X_a", 1), ("X_b", 1)]),
            chi(&[("Y_a", 2), ("Y_b", 2)]),
            chi(&[("H_a", 2), ("H_b", 2)]),
        ],
    )
    .reps(&["u_3_4"], vec![simple("d_pnn", "d_pnn", "g2", "u_3_4")])
    .done();
    c09_02.nontrivial_cocycles = vec!["d_nnp".into()];

    // Table 10
    let t10 = |idx: usize, printed: &str, span: Vec<Vec<Affine>>| CaseBuilder::new(10, idx, printed, span);
    let c10_01 = t10(1, "⟨X_α, X_α+β, 2H_α + H_β⟩", vec![chi(&[("X_a", 1)]), chi(&[("X_ab", 1)]), chi(&[("H_a", 2), ("H_b", 1)])])
        .discarded()
        .done();
    let c10_02 = t10(2, "⟨X_α, Y_β, H_α − H_β⟩", vec![chi(&[("X_a", 1)]), chi(&[("Y_b", 1)]), chi(&[("H_a", 1), ("H_b", -1)])])
        .discarded()
        .done();
    let c10_03 = t10(
        3,
        "⟨X_α, X_α+β, 2H_α + H_β + X_β⟩",
        vec![chi(&[("X_a", 1)]), chi(&[("X_ab", 1)]), chi(&[("H_a", 2), ("H_b", 1), ("X_b", 1)])],
    )
    .discarded()
    .done();
    let c10_04 = t10(
        4,
        "⟨Y_α, Y_α+β, 2H_α + H_β + X_β⟩",
        vec![chi(&[("Y_a", 1)]), chi(&[("Y_ab", 1)]), chi(&[("H_a", 2), ("H_b", 1), ("X_b", 1)])],
    )
    .discarded()
    .done();
    let c10_05 = t10(
        5,
        "⟨X_α + X_β, X_α+β, H_α + H_β⟩",
        vec![chi(&[("X_a", 1), ("X_b", 1)]), chi(&[("X_ab", 1)]), chi(&[("H_a", 1), ("H_b", 1)])],
    )
    .reps(&["u_3_2"], vec![simple("swap13", "swap13", "h_cyc", "u_3_2")])
    .done();
    let c10_06 = t10(6, "⟨X_α, H_α, H_β⟩", vec![chi(&[("X_a", 1)]), chi(&[("H_a", 1)]), chi(&[("H_b", 1)])])
        .reps(&["u_3_3"], vec![simple("swap12", "swap12", "g3", "u_3_3")])
        .done();
    let c10_07 = t10(
        7,
        "⟨X_α, X_α+β, (a − 1)H_α + aH_β⟩",
        vec![chi(&[("X_a", 1)]), chi(&[("X_ab", 1)]), chv(&[("H_a", a(-1, 1)), ("H_b", a(0, 1))])],
    )
    .param(vec![fe(1), fe(-1)])
    .discarded()
    .done();
    let c10_08 = t10(
        8,
        "⟨X_α, Y_β, H_α + aH_β⟩",
        vec![chi(&[("X_a", 1)]), chi(&[("Y_b", 1)]), chv(&[("H_a", one()), ("H_b", a(0, 1))])],
    )
    .param(vec![fe(1), fe(-1)])
    .discarded()
    .done();
    let c10_09 = t10(9, "⟨X_α, X_α+β, H_β⟩", vec![chi(&[("X_a", 1)]), chi(&[("X_ab", 1)]), chi(&[("H_b", 1)])])
        .discarded()
        .done();
    let c10_10 = t10(10, "⟨X_α, Y_β, H_α + H_β⟩", vec![chi(&[("X_a", 1)]), chi(&[("Y_b", 1)]), chi(&[("H_a", 1), ("H_b", 1)])])
        .discarded()
        .done();
    let c10_11 = t10(11, "⟨X_α, X_β, X_α+β⟩", vec![chi(&[("X_a", 1)]), chi(&[("X_b", 1)]), chi(&[("X_ab", 1)])])
        .reps(&["u_3_1"], vec![simple("swap13", "swap13", "h_cyc", "u_3_1")])
        .done();

    // Table 11
    let nil = || vec![chi(&[("X_a", 1)]), chi(&[("X_b", 1)]), chi(&[("X_ab", 1)])];
    let with = |mut v: Vec<Vec<Affine>>, extra: Vec<Vec<Affine>>| {
        v.extend(extra);
        v
    };
    let c11_01 = CaseBuilder::new(
        11,
        1,
        "⟨X_α, X_α+β, H_α, H_β⟩",
        vec![chi(&[("X_a", 1)]), chi(&[("X_ab", 1)]), chi(&[("H_a", 1)]), chi(&[("H_b", 1)])],
    )
    .discarded()
    .done();
    let c11_02 = CaseBuilder::new(
        11,
        2,
        "⟨X_α, Y_β, H_α, H_β⟩",
        vec![chi(&[("X_a", 1)]), chi(&[("Y_b", 1)]), chi(&[("H_a", 1)]), chi(&[("H_b", 1)])],
    )
    .discarded()
    .done();
    let c11_03 = CaseBuilder::new(11, 3, "⟨X_α, X_β, X_α+β, H_α + H_β⟩", with(nil(), vec![chi(&[("H_a", 1), ("H_b", 1)])]))
        .reps(&["u_4_1"], vec![simple("swap13_neg", "swap13_neg", "h_cyc2", "u_4_1")])
        .fams(&fams, &["S_u_4_1"])
        .done();
    let c11_04 = CaseBuilder::new(
        11,
        4,
        "⟨X_α, X_β, X_α+β, aH_α + H_β⟩",
        with(nil(), vec![chv(&[("H_a", a(0, 1)), ("H_b", one())])]),
    )
    .param(vec![fe(1), fe(-1)])
    .discarded()
    .done();
    let c11_05 = CaseBuilder::new(11, 5, "⟨X_α, X_β, X_α+β, H_α⟩", with(nil(), vec![chi(&[("H_a", 1)])]))
        .discarded()
        .done();
    let c11_06 = CaseBuilder::new(11, 6, "⟨X_α, X_β, X_α+β, H_α − H_β⟩", with(nil(), vec![chi(&[("H_a", 1), ("H_b", -1)])]))
        .reps(&["u_4_2"], vec![simple("swap13_neg", "swap13_neg", "h_cyc2", "u_4_2")])
        .done();
    let c11_07 = CaseBuilder::new(
        11,
        7,
        "⟨X_α, X_β, X_α+β, H_α, H_β⟩",
        with(nil(), vec![chi(&[("H_a", 1)]), chi(&[("H_b", 1)])]),
    )
    .reps(&["u_5_1"], vec![simple("swap13_neg", "swap13_neg", "h_cyc2", "u_5_1")])
    .done();

    // Table 12
    let sl2 = || vec![chi(&[("X_ab", 1)]), chi(&[("Y_ab", 1)]), chi(&[("H_a", 1), ("H_b", 1)])];
    let mut c12_01 = CaseBuilder::new(12, 1, "⟨X_α+β, Y_α+β, H_α + H_β⟩ ⊕ ⟨H_α − H_β⟩", with(sl2(), vec![chi(&[("H_a", 1), ("H_b", -1)])]))
        .reps(
            &["u_4_3", "u_4_4"],
            vec![
                route("identity", ParameterMap::None, IDENTITY, IDENTITY, IDENTITY, "u_4_3", TP::None),
                route("twisted", ParameterMap::None, IDENTITY, "d_pnn", "g2", "u_4_4", TP::None),
            ],
        )
        .done();
    c12_01.separations.push(Separation::Fingerprint { a: "u_4_3".into(), b: "u_4_4".into() });
    c12_01.nontrivial_cocycles = vec!["d_nnp".into()];
    let c12_02 = CaseBuilder::new(12, 2, "⟨X_α+β, Y_α+β, H_α + H_β⟩ ⋉ ⟨X_α, Y_β⟩", with(sl2(), vec![chi(&[("X_a", 1)]), chi(&[("Y_b", 1)])]))
        .discarded()
        .done();
    let c12_03 = CaseBuilder::new(12, 3, "⟨X_α+β, Y_α+β, H_α + H_β⟩ ⋉ ⟨X_β, Y_α⟩", with(sl2(), vec![chi(&[("X_b", 1)]), chi(&[("Y_a", 1)])]))
        .discarded()
        .done();
    let c12_04 = CaseBuilder::new(
        12,
        4,
        "⟨X_α+β, Y_α+β, H_α + H_β⟩ ⋉ ⟨X_α, Y_β, H_α − H_β⟩",
        with(sl2(), vec![chi(&[("X_a", 1)]), chi(&[("Y_b", 1)]), chi(&[("H_a", 1), ("H_b", -1)])]),
    )
    .discarded()
    .done();
    let c12_05 = CaseBuilder::new(
        12,
        5,
        "⟨X_α+β, Y_α+β, H_α + H_β⟩ ⋉ ⟨X_β, Y_α, H_α − H_β⟩",
        with(sl2(), vec![chi(&[("X_b", 1)]), chi(&[("Y_a", 1)]), chi(&[("H_a", 1), ("H_b", -1)])]),
    )
    .discarded()
    .done();

    let mut all = vec![
        c07_01, c07_02, c07_03, c07_04, c08_01, c08_02, c08_03, c08_04, c08_05, c08_06, c08_07, c08_08, c08_09,
        c09_01, c09_02, c10_01, c10_02, c10_03, c10_04, c10_05, c10_06, c10_07, c10_08, c10_09, c10_10, c10_11,
        c11_01, c11_02, c11_03, c11_04, c11_05, c11_06, c11_07, c12_01, c12_02, c12_03, c12_04, c12_05,
    ];
    all.sort_by(|x, y| x.id.cmp(&y.id));
    all
}

fn build() -> Catalog {
    let witnesses = witnesses();
    let cases = cases(&witnesses);
    Catalog {
        schema_version: SCHEMA_VERSION,
        search_pool: search_pool(),
        real_families: real_families(),
        cases,
        witnesses,
    }
}
