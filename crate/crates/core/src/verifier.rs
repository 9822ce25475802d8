//! Runs every catalogued claim through exact checks and assembles a
//! deterministic report. Also hosts the command-line interface.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::sync::OnceLock;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::catalog::{
    self, instantiate_at, CaseRecord, Catalog, Claim, Conjugator, Disposition, Equivalence, FamilyRecord,
    RealFamily, Route, Separation, TargetParameter,
};
use crate::cohomology::{
    check_coboundary, check_family_multiplicative, check_stabilizer_membership, check_tau_action_with, is_cocycle,
    sl3_class, torus_class, Sl3Class, TorusSigmaType,
};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::field::{FieldElement, Rational};
use crate::invariants::{
    ambient_centralizer_dim, eigenvalue_scaling_match, fingerprint, jordan_claim_check, pencil_independent_of_alpha, u26_jordan_compatible,
};
use crate::liealg::{
    a_basis, bracket, chevalley_basis, conjugate_subalgebra, in_su21_group, is_closed, is_real_span, real_basis,
    span_equal, tau_alg, tau_subalgebra, AlgElement, Subalgebra,
};
use crate::linalg::Matrix3;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Case id used for checks that are not tied to a single table row.
pub const GLOBAL_CASE: &str = "global";

/// Default real parameter samples, filtered by each family's range.
pub fn default_samples() -> Vec<FieldElement> {
    [(-3, 1), (-1, 2), (1, 3), (1, 1), (5, 2)].iter().map(|&(n, d)| FieldElement::ratio(n, d)).collect()
}

/// Extra samples used when filtering leaves fewer than five.
fn top_up_samples() -> Vec<FieldElement> {
    [(3, 4), (-2, 3), (1, 5), (-5, 4), (7, 3), (-7, 2), (2, 7)]
        .iter()
        .map(|&(n, d)| FieldElement::ratio(n, d))
        .collect()
}

const MIN_SAMPLES: usize = 5;

/// Sample points for the stabilizer tori.
pub fn torus_samples() -> Vec<FieldElement> {
    let i = FieldElement::i();
    vec![
        FieldElement::from_int(2),
        FieldElement::from_int(3),
        &FieldElement::one() + &i,
        FieldElement::sqrt2(),
        &FieldElement::from_int(2) + &i,
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Unverifiable,
}

impl Status {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
            Status::Unverifiable => "UNVERIFIABLE",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub case_id: String,
    pub check_name: String,
    pub status: Status,
    pub detail: String,
    pub paper_anchor: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub unverifiable: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub catalog_schema_version: u32,
    pub summary: Summary,
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn new(mut results: Vec<CheckResult>) -> Self {
        results.sort_by(|a, b| (&a.case_id, &a.check_name).cmp(&(&b.case_id, &b.check_name)));
        let mut summary = Summary::default();
        for r in &results {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
                Status::Unverifiable => summary.unverifiable += 1,
            }
        }
        Report { schema_version: REPORT_SCHEMA_VERSION, catalog_schema_version: catalog::SCHEMA_VERSION, summary, results }
    }

    pub fn ok(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.results {
            s.push_str(&format!("{:<12} {} {}", r.status.label(), r.case_id, r.check_name));
            if !r.detail.is_empty() {
                s.push_str(&format!("  ({})", r.detail));
            }
            s.push('\n');
        }
        let m = &self.summary;
        s.push_str(&format!(
            "pass {} fail {} skipped {} unverifiable {}\n",
            m.pass, m.fail, m.skipped, m.unverifiable
        ));
        s
    }

    pub fn find(&self, case_id: &str, prefix: &str) -> Vec<&CheckResult> {
        self.results.iter().filter(|r| r.case_id == case_id && r.check_name.starts_with(prefix)).collect()
    }
}

/// Parameter samples keyed by real family label.
pub type SampleBindings = BTreeMap<String, Vec<FieldElement>>;

/// Collects results for one case.
struct Out<'a> {
    case_id: &'a str,
    results: Vec<CheckResult>,
}

impl<'a> Out<'a> {
    fn new(case_id: &'a str) -> Self {
        Out { case_id, results: Vec::new() }
    }

    fn push(&mut self, name: impl Into<String>, status: Status, detail: impl Into<String>, anchor: &str) {
        self.results.push(CheckResult {
            case_id: self.case_id.to_string(),
            check_name: name.into(),
            status,
            detail: detail.into(),
            paper_anchor: anchor.to_string(),
        });
    }

    /// Records a boolean outcome; errors become failures with their message.
    fn check(&mut self, name: impl Into<String>, outcome: Result<bool>, detail: impl Into<String>, anchor: &str) -> bool {
        match outcome {
            Ok(ok) => {
                self.push(name, Status::from_bool(ok), detail, anchor);
                ok
            }
            Err(e) => {
                self.push(name, Status::Fail, format!("error: {e}"), anchor);
                false
            }
        }
    }
}

fn at(x: Option<&FieldElement>) -> String {
    x.map(|v| format!("@{v}")).unwrap_or_default()
}

fn format_element(x: &AlgElement) -> String {
    let mut out = String::new();
    for (k, c) in x.a_coords().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let s = c.to_string();
        let term = match s.as_str() {
            "1" => format!("a{}", k + 1),
            "-1" => format!("-a{}", k + 1),
            _ if c.is_real() => format!("{s}·a{}", k + 1),
            _ => format!("({s})·a{}", k + 1),
        };
        if out.is_empty() {
            out = term;
        } else if let Some(t) = term.strip_prefix('-') {
            out.push_str(&format!(" - {t}"));
        } else {
            out.push_str(&format!(" + {term}"));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// `⟨x₁, x₂, …⟩` in a-coordinates.
pub fn format_span(u: &Subalgebra) -> String {
    let parts: Vec<String> = u.basis().iter().map(format_element).collect();
    format!("⟨{}⟩", parts.join(", "))
}

/// Samples for a real family: overrides if given, else defaults filtered by range and topped up.
pub fn family_samples(family: &RealFamily, overrides: &SampleBindings) -> Vec<FieldElement> {
    if let Some(v) = overrides.get(&family.label) {
        return v.clone();
    }
    filtered_samples(family, &[])
}

fn filtered_samples(family: &RealFamily, excluded: &[FieldElement]) -> Vec<FieldElement> {
    let Some(range) = &family.parameter else { return Vec::new() };
    let ok = |x: &FieldElement| range.contains(x) && !excluded.contains(x);
    let mut out: Vec<FieldElement> = default_samples().into_iter().filter(|x| ok(x)).collect();
    for x in top_up_samples() {
        if out.len() >= MIN_SAMPLES {
            break;
        }
        if ok(&x) {
            out.push(x);
        }
    }
    out
}

fn route_samples(cat: &Catalog, route: &Route, overrides: &SampleBindings) -> Vec<Option<FieldElement>> {
    if !route.parameter_map.takes_sample() {
        return vec![None];
    }
    let Ok(target) = cat.family(&route.target) else { return vec![None] };
    let base = match overrides.get(&target.label) {
        Some(v) => v.iter().filter(|x| !route.excluded.contains(x)).cloned().collect(),
        None => filtered_samples(target, &route.excluded),
    };
    base.into_iter().map(Some).collect()
}

fn target_subalgebra(cat: &Catalog, route: &Route, mu: Option<&FieldElement>) -> Result<Subalgebra> {
    let fam = cat.family(&route.target)?;
    let x = match &route.target_parameter {
        TargetParameter::None => None,
        TargetParameter::Same => mu.cloned(),
        TargetParameter::Fixed(v) => Some(v.clone()),
    };
    instantiate_at(fam, x.as_ref())
}

fn route_checks(cat: &Catalog, case: &CaseRecord, route: &Route, mu: Option<&FieldElement>, out: &mut Out) {
    let suffix = format!("{}{}", route.name, at(mu));
    let anchor = &case.paper_anchor;
    let witnesses = (cat.witness(&route.g0), cat.witness(&route.h), cat.witness(&route.g));
    let (g0, h, g) = match witnesses {
        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
        _ => {
            out.push(format!("a_transporter/{suffix}"), Status::Fail, "unknown witness", anchor);
            return;
        }
    };
    let u = match &route.base {
        Some(label) => cat.family(label).and_then(|f| instantiate_at(f, None)).map(|s| s.complexify()),
        None => Ok(case.complex_at(route.parameter_map.eval(mu).as_ref())),
    };
    let u = match u {
        Ok(u) => u,
        Err(e) => {
            out.push(format!("a_transporter/{suffix}"), Status::Fail, format!("error: {e}"), anchor);
            return;
        }
    };
    let a = out.check(
        format!("a_transporter/{suffix}"),
        conjugate_subalgebra(g0, &u).and_then(|v| span_equal(&v, &tau_subalgebra(&u))),
        format!("{}·u = τ(u)", route.g0),
        anchor,
    );
    let b = out.check(format!("b_cocycle/{suffix}"), is_cocycle(h), format!("{}·τ({}) = 1", route.h, route.h), anchor);
    let c = out.check(
        format!("c_stabilizer_coset/{suffix}"),
        check_stabilizer_membership(&(h * g0), &u),
        format!("{}·{} stabilizes u", route.h, route.g0),
        anchor,
    );
    out.check(
        format!("d_coboundary/{suffix}"),
        Ok(check_coboundary(g, h)),
        format!("{}⁻¹·τ({}) = {}", route.g, route.g, route.h),
        anchor,
    );
    let real_point = (|| -> Result<(bool, String)> {
        let v = conjugate_subalgebra(g, &u)?;
        let stable = span_equal(&tau_subalgebra(&v), &v)?;
        let target = target_subalgebra(cat, route, mu)?;
        let equal = span_equal(&v, &target.complexify())?;
        let rb = real_basis(&v);
        let real_equal = rb.dim() == target.dim() && span_equal(&rb, &target)?;
        let detail = format!("{}·u = {} = {}", route.g, format_span(&rb), route.target);
        Ok((stable && equal && real_equal, detail))
    })();
    let d = match real_point {
        Ok((ok, detail)) => {
            out.push(format!("d_real_point/{suffix}"), Status::from_bool(ok), detail, anchor);
            ok
        }
        Err(e) => {
            out.push(format!("d_real_point/{suffix}"), Status::Fail, format!("error: {e}"), anchor);
            false
        }
    };
    out.push(
        format!("m_pipeline_soundness/{suffix}"),
        Status::from_bool(!(a && b && c) || d),
        "transporter, cocycle and coset checks imply a real point",
        anchor,
    );
}

fn real_rep_checks(cat: &Catalog, label: &str, overrides: &SampleBindings, out: &mut Out) {
    let fam = match cat.family(label) {
        Ok(f) => f,
        Err(e) => {
            out.push(format!("e_closure_realness/{label}"), Status::Fail, e.to_string(), "");
            return;
        }
    };
    let points: Vec<Option<FieldElement>> = if fam.is_parametrized() {
        family_samples(fam, overrides).into_iter().map(Some).collect()
    } else {
        vec![None]
    };
    for x in points {
        let name = format!("e_closure_realness/{label}{}", at(x.as_ref()));
        match instantiate_at(fam, x.as_ref()) {
            Ok(s) => {
                let closed = is_closed(&s).0;
                let real = is_real_span(&s.complexify());
                let dim = s.dim() == fam.dim;
                out.push(
                    name,
                    Status::from_bool(closed && real && dim),
                    format!("closed {closed}, real {real}, dim {}", s.dim()),
                    &fam.paper_anchor,
                );
            }
            Err(e) => out.push(name, Status::Fail, format!("error: {e}"), &fam.paper_anchor),
        }
    }
    if let Some(printed) = fam.printed_subalgebra() {
        let (closed, _) = is_closed(&printed);
        out.push(
            format!("l_erratum/{label}"),
            Status::from_bool(!closed),
            format!("printed row {} is not closed; corrected row used", format_span(&printed)),
            &fam.paper_anchor,
        );
    }
}

fn complex_closure_checks(case: &CaseRecord, out: &mut Out) {
    let points: Vec<Option<FieldElement>> = match &case.complex_rep.parameter {
        None => vec![None],
        Some(p) => p.closure_samples.iter().cloned().map(Some).collect(),
    };
    for a in points {
        let u = case.complex_at(a.as_ref());
        let closed = is_closed(&u).0;
        out.push(
            format!("e_closure_complex{}", at(a.as_ref())),
            Status::from_bool(closed && u.dim() == case.complex_rep.span.len()),
            case.complex_rep.printed.clone(),
            &case.paper_anchor,
        );
    }
}

fn negative_control(sigma: TorusSigmaType) -> TorusSigmaType {
    match sigma {
        TorusSigmaType::Fix => TorusSigmaType::Inv,
        TorusSigmaType::Inv => TorusSigmaType::Fix,
        TorusSigmaType::SwapInv | TorusSigmaType::Componentwise => TorusSigmaType::ComponentwiseInv,
        TorusSigmaType::ComponentwiseInv => TorusSigmaType::Componentwise,
    }
}

/// One-parameter families use `s_k`; two-parameter families `(s_k, s_{k+1})`.
pub fn family_points(arity: usize) -> Vec<Vec<FieldElement>> {
    let s = torus_samples();
    (0..s.len()).map(|k| (0..arity).map(|j| s[(k + j) % s.len()].clone()).collect()).collect()
}

fn family_checks(cat: &Catalog, overrides: &SampleBindings, rec: &FamilyRecord, out: &mut Out) {
    let fam = &rec.family;
    let anchor = fam.paper_anchor.as_str();
    let points = family_points(fam.arity());
    let id = &fam.id;
    out.check(
        format!("f_family_tau/{id}"),
        check_tau_action_with(fam, &points, fam.claimed, false),
        format!("τ(S(p)) = S({:?}(p)) at {} samples", fam.claimed, points.len()),
        anchor,
    );
    let control = negative_control(fam.claimed);
    out.check(
        format!("f_family_negative_control/{id}"),
        check_tau_action_with(fam, &points[..1], control, false).map(|ok| !ok),
        format!("rule {control:?} rejected"),
        anchor,
    );
    let pairs: Vec<_> = (0..points.len()).map(|k| (points[k].clone(), points[(k + 1) % points.len()].clone())).collect();
    out.check(
        format!("f_family_multiplicative/{id}"),
        check_family_multiplicative(fam, &pairs, false),
        "S(p)·S(q) = S(pq)",
        anchor,
    );
    match fam.printed_mismatches() {
        Ok(m) if m.is_empty() => {
            out.push(format!("f_family_printed/{id}"), Status::Pass, "printed display equals conjugated torus", anchor)
        }
        Ok(m) => {
            let ok = m == rec.erratum_entries;
            out.push(
                format!("f_family_printed/{id}"),
                Status::from_bool(ok),
                format!("printed display differs at {m:?}"),
                anchor,
            );
            if let Some(note) = &fam.erratum {
                out.push(format!("l_erratum/{id}"), Status::from_bool(ok), note.clone(), anchor);
            }
        }
        Err(e) => out.push(format!("f_family_printed/{id}"), Status::Fail, format!("error: {e}"), anchor),
    }
    for label in &rec.stabilizes {
        let outcome = (|| -> Result<bool> {
            let f = cat.family(label)?;
            let x = family_samples(f, overrides).into_iter().next();
            let u = instantiate_at(f, x.as_ref())?.complexify();
            for p in points.iter().take(2) {
                if !check_stabilizer_membership(&fam.matrix(p)?, &u)? {
                    return Ok(false);
                }
            }
            Ok(true)
        })();
        out.check(format!("g_stabilizer/{id}/{label}"), outcome, format!("{id} stabilizes {label}"), anchor);
    }
}

fn conjugator_matrix(cat: &Catalog, c: &Conjugator) -> Result<(Matrix3, String)> {
    match c {
        Conjugator::Printed(n) => Ok((cat.witness(n)?.clone(), n.clone())),
        Conjugator::Derived(w) => Ok((cat.word(w)?, w.join("·"))),
    }
}

/// Source samples whose image under the parameter map lies in the target range.
fn equivalence_samples(cat: &Catalog, eq: &Equivalence, overrides: &SampleBindings) -> Result<Vec<(FieldElement, FieldElement)>> {
    let src = cat.family(&eq.source)?;
    let dst = cat.family(&eq.target)?;
    let mut pool = family_samples(src, overrides);
    pool.extend(top_up_samples());
    let mut out = Vec::new();
    for x in pool {
        if out.len() >= MIN_SAMPLES {
            break;
        }
        if !src.parameter.as_ref().is_some_and(|r| r.contains(&x)) {
            continue;
        }
        if let Some(y) = eq.transform.apply(&x) {
            if dst.parameter.as_ref().is_some_and(|r| r.contains(&y)) && !out.iter().any(|(a, _)| a == &x) {
                out.push((x, y));
            }
        }
    }
    Ok(out)
}

fn equivalence_checks(cat: &Catalog, eq: &Equivalence, overrides: &SampleBindings, exec: Execution, out: &mut Out) {
    let tag = format!("{}->{}", eq.source, eq.target);
    let anchor = eq.paper_anchor.as_str();
    let (m, name) = match conjugator_matrix(cat, &eq.conjugator) {
        Ok(v) => v,
        Err(e) => {
            out.push(format!("h_equivalence/{tag}/in_su21"), Status::Fail, format!("error: {e}"), anchor);
            return;
        }
    };
    out.push(
        format!("h_equivalence/{tag}/in_su21"),
        Status::from_bool(in_su21_group(&m)),
        format!("{name} ∈ SU(2,1)"),
        anchor,
    );
    let samples = match equivalence_samples(cat, eq, overrides) {
        Ok(s) => s,
        Err(e) => {
            out.push(format!("h_equivalence/{tag}"), Status::Fail, format!("error: {e}"), anchor);
            return;
        }
    };
    let search_depth = match &eq.conjugator {
        Conjugator::Derived(w) => Some(w.len()),
        Conjugator::Printed(_) => None,
    };
    for (x, y) in samples {
        let pair = (|| -> Result<(Subalgebra, Subalgebra)> {
            Ok((instantiate_at(cat.family(&eq.source)?, Some(&x))?, instantiate_at(cat.family(&eq.target)?, Some(&y))?))
        })();
        let (src, dst) = match pair {
            Ok(p) => p,
            Err(e) => {
                out.push(format!("h_equivalence/{tag}@{x}"), Status::Fail, format!("error: {e}"), anchor);
                continue;
            }
        };
        out.check(
            format!("h_equivalence/{tag}@{x}"),
            conjugate_subalgebra(&m, &src).and_then(|v| span_equal(&v, &dst)),
            format!("{name}·{}^{x} = {}^{y}", eq.source, eq.target),
            anchor,
        );
        if let Some(depth) = search_depth {
            let found = ConjugatorSearch::shared().find_word(&src, &dst, depth, exec);
            let name = format!("h_equivalence_search/{tag}@{x}");
            match found {
                Some((word, g)) => {
                    let ok = in_su21_group(&g)
                        && conjugate_subalgebra(&g, &src).and_then(|v| span_equal(&v, &dst)).unwrap_or(false);
                    out.push(name, Status::from_bool(ok), format!("found {}", word.join("·")), anchor);
                }
                None => out.push(name, Status::Fail, format!("no word of length ≤ {depth}"), anchor),
            }
        }
    }
}

fn separation_checks(cat: &Catalog, case: &CaseRecord, sep: &Separation, overrides: &SampleBindings, out: &mut Out) {
    let anchor = case.paper_anchor.as_str();
    match sep {
        Separation::TorusClass { a, b, z, sigma } => {
            let outcome = torus_class(z, *sigma).map(|c| !c.is_trivial());
            let zs: Vec<String> = z.iter().map(ToString::to_string).collect();
            out.check(
                format!("k_separation/{a}~{b}"),
                outcome,
                format!("class of ({}) under {sigma:?} is nontrivial", zs.join(", ")),
                anchor,
            );
        }
        Separation::Fingerprint { a, b } => {
            let outcome = (|| -> Result<(bool, String)> {
                let fa = fingerprint(&instantiate_at(cat.family(a)?, None)?)?;
                let fb = fingerprint(&instantiate_at(cat.family(b)?, None)?)?;
                let detail = format!(
                    "Killing {:?} vs {:?}, trace form {:?} vs {:?}",
                    fa.killing_signature, fb.killing_signature, fa.trace_signature, fb.trace_signature
                );
                Ok((fa != fb, detail))
            })();
            match outcome {
                Ok((ok, d)) => out.push(format!("k_separation/{a}~{b}"), Status::from_bool(ok), d, anchor),
                Err(e) => out.push(format!("k_separation/{a}~{b}"), Status::Fail, format!("error: {e}"), anchor),
            }
        }
        Separation::ScalingMatch { labels } => {
            for (i, a) in labels.iter().enumerate() {
                for b in &labels[i + 1..] {
                    let outcome = (|| -> Result<bool> {
                        let xs = generator_samples(cat, a, overrides)?;
                        let ys = generator_samples(cat, b, overrides)?;
                        Ok(xs.iter().all(|x| ys.iter().all(|y| eigenvalue_scaling_match(x, y).is_empty())))
                    })();
                    out.check(
                        format!("k_separation/{a}~{b}"),
                        outcome,
                        "no nonzero real rescaling matches eigenvalues at any sample pair",
                        anchor,
                    );
                }
            }
        }
    }
}

/// The single generator of a one-dimensional family at each of its samples.
fn generator_samples(cat: &Catalog, label: &str, overrides: &SampleBindings) -> Result<Vec<AlgElement>> {
    let fam = cat.family(label)?;
    let points: Vec<Option<FieldElement>> = if fam.is_parametrized() {
        family_samples(fam, overrides).into_iter().map(Some).collect()
    } else {
        vec![None]
    };
    points.iter().map(|x| Ok(instantiate_at(fam, x.as_ref())?.basis()[0].clone())).collect()
}

fn claim_checks(cat: &Catalog, case: &CaseRecord, claim: &Claim, overrides: &SampleBindings, out: &mut Out) {
    let anchor = case.paper_anchor.as_str();
    match claim {
        Claim::JordanDiagonal { family } => {
            let Ok(fam) = cat.family(family) else { return };
            for l in family_samples(fam, overrides) {
                out.check(
                    format!("k_jordan_diagonal@{l}"),
                    jordan_claim_check(&l),
                    "charpoly roots are −2i(i+2λ), 2i(i−2λ), 8iλ",
                    anchor,
                );
            }
        }
        Claim::EtaCondition { family } => {
            let Ok(fam) = cat.family(family) else { return };
            let samples = family_samples(fam, overrides);
            let alphas: Vec<FieldElement> = default_samples();
            for l in &samples {
                let outcome = (|| -> Result<bool> {
                    let same = u26_jordan_compatible(l, l)? && u26_jordan_compatible(l, &-l)?;
                    let others = samples.iter().filter(|e| *e != l && *e != &-l);
                    let mut distinct = true;
                    for e in others {
                        distinct &= !u26_jordan_compatible(l, e)?;
                    }
                    Ok(same && distinct)
                })();
                out.check(format!("k_eta_condition@{l}"), outcome, "compatible exactly for η = ±λ", anchor);
                out.push(
                    format!("k_pencil_independence@{l}"),
                    Status::from_bool(pencil_independent_of_alpha(l, &FieldElement::one(), &alphas)),
                    "charpoly of αx + y_λ does not depend on α",
                    anchor,
                );
            }
        }
    }
}

/// Runs every check recorded for one case. `bindings` overrides the sample
/// lists of the real families involved.
pub fn verify_case(case: &CaseRecord, bindings: &SampleBindings) -> Vec<CheckResult> {
    verify_case_with(catalog::load_catalog(), case, bindings, Execution::Sequential)
}

pub fn verify_case_with(cat: &Catalog, case: &CaseRecord, bindings: &SampleBindings, exec: Execution) -> Vec<CheckResult> {
    let mut out = Out::new(&case.id);
    let anchor = case.paper_anchor.clone();
    complex_closure_checks(case, &mut out);
    if case.disposition == Disposition::NoTransporter {
        out.push("i_discarded", Status::Skipped, "disposition no_transporter; non-existence not recomputed", &anchor);
    }
    for route in &case.routes {
        for mu in route_samples(cat, route, bindings) {
            route_checks(cat, case, route, mu.as_ref(), &mut out);
        }
    }
    for label in case.real_reps.iter().chain(&case.redundant_reps) {
        real_rep_checks(cat, label, bindings, &mut out);
    }
    let distinct: std::collections::BTreeSet<&str> = case.routes.iter().map(|r| r.target.as_str()).collect();
    let listed = distinct.iter().filter(|l| case.real_reps.iter().any(|r| r == *l)).count();
    let orbit_detail = format!("{:?}, {} listed representatives reached", case.expected_real_orbit_count, listed);
    let orbit_ok = match case.expected_real_orbit_count {
        catalog::OrbitCount::Count(n) => n as usize == listed && listed == case.real_reps.len(),
        catalog::OrbitCount::Family => listed == case.real_reps.len(),
    };
    out.push("e_orbit_count", Status::from_bool(orbit_ok), orbit_detail, &anchor);
    for rec in &case.families {
        family_checks(cat, bindings, rec, &mut out);
    }
    for eq in &case.equivalences {
        equivalence_checks(cat, eq, bindings, exec, &mut out);
    }
    for sep in &case.separations {
        separation_checks(cat, case, sep, bindings, &mut out);
    }
    for claim in &case.claims {
        claim_checks(cat, case, claim, bindings, &mut out);
    }
    for name in &case.nontrivial_cocycles {
        let outcome = cat.witness(name).and_then(sl3_class).map(|c| c == Sl3Class::Nontrivial);
        out.check(format!("c_sl3_nontrivial/{name}"), outcome, "not a coboundary in SL(3,C)", &anchor);
    }
    for a in &case.assertions {
        let prefix = if a.cocycles.is_empty() { "z_assertion" } else { "j_assertion" };
        out.push(format!("{prefix}/{}", a.name), Status::Unverifiable, a.statement.clone(), &a.paper_anchor);
        for (label, m) in &a.cocycles {
            out.check(format!("j_cocycle/{}/{label}", a.name), is_cocycle(m), "listed representative is a cocycle", &a.paper_anchor);
        }
    }
    out.results
}

fn global_checks(cat: &Catalog, bindings: &SampleBindings) -> Vec<CheckResult> {
    let mut out = Out::new(GLOBAL_CASE);
    let a = a_basis();
    for (k, x) in a.iter().enumerate() {
        let ok = tau_alg(x) == *x && x.matrix().trace().is_zero();
        out.push(format!("a_basis_fidelity/a{}", k + 1), Status::from_bool(ok), "τ(a) = a, traceless", "basis a_1..a_8");
    }
    let e = Matrix3::unit;
    let printed_chevalley = [
        Matrix3::diag([FieldElement::one(), -FieldElement::one(), FieldElement::zero()]),
        Matrix3::diag([FieldElement::zero(), FieldElement::one(), -FieldElement::one()]),
        e(1, 2),
        e(2, 3),
        -&e(1, 3),
        e(2, 1),
        e(3, 2),
        -&e(3, 1),
    ];
    for (k, (x, m)) in chevalley_basis().iter().zip(&printed_chevalley).enumerate() {
        out.push(
            format!("a_basis_fidelity/{}", crate::liealg::CHEVALLEY_NAMES[k]),
            Status::from_bool(x.matrix() == m),
            "printed entries",
            "Chevalley basis",
        );
    }
    let mut jacobi_ok = 0;
    for x in a.iter() {
        for y in a.iter() {
            for z in a.iter() {
                let s = &(&bracket(x, &bracket(y, z)) + &bracket(y, &bracket(z, x))) + &bracket(z, &bracket(x, y));
                if s.is_zero() {
                    jacobi_ok += 1;
                }
            }
        }
    }
    out.push("a_jacobi", Status::from_bool(jacobi_ok == 512), format!("{jacobi_ok}/512 triples"), "basis a_1..a_8");

    let fe = FieldElement::from_int;
    let torus_cases: Vec<(&str, Vec<FieldElement>, TorusSigmaType, bool)> = vec![
        ("fix/1", vec![fe(1)], TorusSigmaType::Fix, true),
        ("fix/-1", vec![fe(-1)], TorusSigmaType::Fix, true),
        ("fix/i", vec![FieldElement::i()], TorusSigmaType::Fix, true),
        ("inv/1", vec![fe(1)], TorusSigmaType::Inv, true),
        ("inv/-1", vec![fe(-1)], TorusSigmaType::Inv, false),
        ("inv/3", vec![fe(3)], TorusSigmaType::Inv, true),
        ("swap_inv/(1,1)", vec![fe(1), fe(1)], TorusSigmaType::SwapInv, true),
        ("swap_inv/(-1,-1)", vec![fe(-1), fe(-1)], TorusSigmaType::SwapInv, true),
        ("swap_inv/(2,2)", vec![fe(2), fe(2)], TorusSigmaType::SwapInv, true),
        ("componentwise_inv/(-1,1)", vec![fe(-1), fe(1)], TorusSigmaType::ComponentwiseInv, false),
        ("componentwise_inv/(-1,-1)", vec![fe(-1), fe(-1)], TorusSigmaType::ComponentwiseInv, false),
    ];
    for (name, z, sigma, trivial) in torus_cases {
        let outcome = torus_class(&z, sigma).map(|c| c.is_trivial() == trivial);
        let expected = if trivial { "trivial" } else { "nontrivial" };
        out.check(format!("c_torus_lemma/{name}"), outcome, format!("class {expected}"), "one- and two-dimensional tori");
    }
    let mut seen = std::collections::BTreeSet::new();
    for case in &cat.cases {
        for r in &case.routes {
            if seen.insert(r.h.clone()) {
                let outcome = cat.witness(&r.h).and_then(sl3_class).map(|c| c == Sl3Class::Trivial);
                out.check(format!("c_sl3_consistency/{}", r.h), outcome, "coboundary has trivial class", &case.paper_anchor);
            }
        }
    }
    let outcome = cat.witness("d_nnp").and_then(sl3_class).map(|c| c == Sl3Class::Nontrivial);
    out.check("c_sl3_consistency/d_nnp", outcome, "diag(-1,-1,1) has nontrivial class", "H¹(SL(3,C), τ)");
    pairwise_separation(cat, bindings, &mut out);
    out.results
}

/// Fingerprints of listed families at their first sample, compared pairwise by dimension.
fn pairwise_separation(cat: &Catalog, bindings: &SampleBindings, out: &mut Out) {
    let reps: Vec<(&RealFamily, Option<Subalgebra>)> = cat
        .listed_families()
        .map(|f| {
            let x = family_samples(f, bindings).into_iter().next();
            (f, instantiate_at(f, x.as_ref()).ok())
        })
        .collect();
    for (i, (fa, sa)) in reps.iter().enumerate() {
        for (fb, sb) in &reps[i + 1..] {
            if fa.dim != fb.dim {
                continue;
            }
            let name = format!("k_separation_pairwise/{}~{}", fa.label, fb.label);
            let (Some(sa), Some(sb)) = (sa, sb) else {
                out.push(name, Status::Fail, "could not instantiate", "");
                continue;
            };
            let pa = fingerprint(sa);
            let pb = fingerprint(sb);
            match (pa, pb) {
                (Ok(pa), Ok(pb)) if pa != pb => out.push(name, Status::Pass, "fingerprints differ", ""),
                (Ok(_), Ok(_)) => {
                    let (ca, cb) = (ambient_centralizer_dim(sa), ambient_centralizer_dim(sb));
                    let by_scaling = fa.dim == 1 && eigenvalue_scaling_match(&sa.basis()[0], &sb.basis()[0]).is_empty();
                    if ca != cb {
                        out.push(name, Status::Pass, format!("centralizer dimensions {ca} vs {cb}"), "");
                    } else if by_scaling {
                        out.push(name, Status::Pass, "eigenvalue scaling match is empty", "");
                    } else if let Some(case) = catalogued_separation(cat, &fa.label, &fb.label) {
                        out.push(name, Status::Pass, format!("separated in {case}"), "");
                    } else {
                        out.push(name, Status::Skipped, "equal fingerprints; no certificate", "");
                    }
                }
                (Err(e), _) | (_, Err(e)) => out.push(name, Status::Fail, format!("error: {e}"), ""),
            }
        }
    }
}

fn catalogued_separation<'a>(cat: &'a Catalog, a: &str, b: &str) -> Option<&'a str> {
    cat.cases.iter().find_map(|c| {
        c.separations
            .iter()
            .any(|s| match s {
                Separation::TorusClass { a: x, b: y, .. } | Separation::Fingerprint { a: x, b: y } => {
                    (x == a && y == b) || (x == b && y == a)
                }
                Separation::ScalingMatch { labels } => labels.iter().any(|l| l == a) && labels.iter().any(|l| l == b),
            })
            .then_some(c.id.as_str())
    })
}

/// Verifies the whole catalog, including the catalog-wide checks.
pub fn verify_all(bindings: &SampleBindings) -> Report {
    verify_all_with(bindings, Execution::default())
}

pub fn verify_all_with(bindings: &SampleBindings, exec: Execution) -> Report {
    let cat = catalog::load_catalog();
    let ids: Vec<&CaseRecord> = cat.cases.iter().collect();
    verify_selection(cat, &ids, bindings, exec, true)
}

/// Verifies a subset of cases; `global` adds the catalog-wide checks.
pub fn verify_selection(
    cat: &Catalog,
    cases: &[&CaseRecord],
    bindings: &SampleBindings,
    exec: Execution,
    global: bool,
) -> Report {
    let mut jobs: Vec<Option<&CaseRecord>> = cases.iter().map(|c| Some(*c)).collect();
    if global {
        jobs.push(None);
    }
    let parts = exec.map(&jobs, |job| match job {
        Some(case) => verify_case_with(cat, case, bindings, Execution::Sequential),
        None => global_checks(cat, bindings),
    });
    Report::new(parts.into_iter().flatten().collect())
}

// Equivalence search ---------------------------------------------------------

/// Enumerates products of pool matrices by length, then lexicographically,
/// keeping those in SU(2,1).
pub struct ConjugatorSearch {
    pool: Vec<(String, Matrix3)>,
    /// `levels[d]` holds every word of length `d` with its product.
    levels: Vec<Vec<(Vec<usize>, Matrix3)>>,
}

pub const SEARCH_DEPTH: usize = 3;

impl ConjugatorSearch {
    pub fn new(cat: &Catalog, depth: usize) -> Result<Self> {
        let pool: Vec<(String, Matrix3)> =
            cat.search_pool.iter().map(|n| Ok((n.clone(), cat.witness(n)?.clone()))).collect::<Result<_>>()?;
        let mut levels = vec![vec![(Vec::new(), Matrix3::identity())]];
        for d in 1..=depth {
            let mut next = Vec::new();
            for (w, m) in &levels[d - 1] {
                for (k, (_, p)) in pool.iter().enumerate() {
                    let mut w2 = w.clone();
                    w2.push(k);
                    next.push((w2, m * p));
                }
            }
            levels.push(next);
        }
        Ok(ConjugatorSearch { pool, levels })
    }

    pub fn shared() -> &'static ConjugatorSearch {
        static S: OnceLock<ConjugatorSearch> = OnceLock::new();
        S.get_or_init(|| ConjugatorSearch::new(catalog::load_catalog(), SEARCH_DEPTH).expect("search pool resolves"))
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    /// First word (as pool names) whose product conjugates `src` onto `dst`.
    pub fn find_word(&self, src: &Subalgebra, dst: &Subalgebra, depth: usize, exec: Execution) -> Option<(Vec<String>, Matrix3)> {
        if src.dim() != dst.dim() {
            return None;
        }
        for level in self.levels.iter().take(depth.min(self.depth()) + 1) {
            let hit = exec.find_first(level, |(w, m)| {
                if !in_su21_group(m) {
                    return None;
                }
                let ok = conjugate_subalgebra(m, src).and_then(|v| span_equal(&v, dst)).unwrap_or(false);
                ok.then(|| (w.iter().map(|&k| self.pool[k].0.clone()).collect::<Vec<_>>(), m.clone()))
            });
            if hit.is_some() {
                return hit;
            }
        }
        None
    }
}

/// Bounded search for `g ∈ SU(2,1)` with `g·src·g⁻¹ = dst` among products of
/// at most `depth` pool matrices.
pub fn search_equivalence_witness(src: &Subalgebra, dst: &Subalgebra, depth: usize) -> Option<Matrix3> {
    let found = if depth <= SEARCH_DEPTH {
        ConjugatorSearch::shared().find_word(src, dst, depth, Execution::default())
    } else {
        ConjugatorSearch::new(catalog::load_catalog(), depth).ok()?.find_word(src, dst, depth, Execution::default())
    };
    found.map(|(_, m)| m)
}

// Command line ---------------------------------------------------------------

#[derive(Parser, Debug)]
#[command(name = "su21", about = "Exact verification of the real subalgebras of su(2,1)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify all cases, or the selected ones.
    Verify {
        /// Case id (c07_01) or real family label (u_1_2); repeatable.
        #[arg(long = "case")]
        cases: Vec<String>,
        /// Real table number.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
        table: Option<u8>,
        /// JSON object mapping family labels to lists of rational samples.
        #[arg(long)]
        samples: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Verify cases one at a time on the calling thread.
        #[arg(long)]
        sequential: bool,
    },
    /// List the catalogued cases.
    ListCases {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Write the catalog as JSON.
    ExportCatalog {
        #[arg(long)]
        out: PathBuf,
    },
}

/// Reads a samples file: `{"u_1_5": ["1/3", "-2"], …}`. Every value must lie
/// in the family's range.
pub fn parse_samples(cat: &Catalog, text: &str) -> Result<SampleBindings> {
    let raw: BTreeMap<String, Vec<String>> = serde_json::from_str(text)?;
    let mut out = SampleBindings::new();
    for (label, values) in raw {
        let fam = cat.family(&label)?;
        let range = fam
            .parameter
            .as_ref()
            .ok_or_else(|| Error::Parse(format!("{label} has no parameter")))?;
        let mut parsed = Vec::new();
        for v in values {
            let q: Rational = v.trim().parse()?;
            let x = FieldElement::from_rational(q);
            range.check(&x)?;
            parsed.push(x);
        }
        out.insert(label, parsed);
    }
    Ok(out)
}

#[derive(Serialize)]
struct CaseListing<'a> {
    id: &'a str,
    table: u8,
    real_table: u8,
    complex_rep: &'a str,
    disposition: Disposition,
    real_reps: &'a [String],
    redundant_reps: &'a [String],
}

fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let cat = catalog::load_catalog();
    match cli.command {
        Command::Verify { cases, table, samples, format, out, sequential } => {
            let bindings = match samples {
                Some(path) => parse_samples(cat, &std::fs::read_to_string(path)?)?,
                None => SampleBindings::new(),
            };
            let mut selected: Vec<&CaseRecord> = Vec::new();
            for key in &cases {
                let c = cat.resolve(key)?;
                if !selected.iter().any(|s| s.id == c.id) {
                    selected.push(c);
                }
            }
            if let Some(t) = table {
                for c in cat.cases.iter().filter(|c| c.real_table == t && !c.real_reps.is_empty()) {
                    if !selected.iter().any(|s| s.id == c.id) {
                        selected.push(c);
                    }
                }
            }
            let full = cases.is_empty() && table.is_none();
            if full {
                selected = cat.cases.iter().collect();
            }
            selected.sort_by(|a, b| a.id.cmp(&b.id));
            let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
            let report = verify_selection(cat, &selected, &bindings, exec, full);
            let text = match format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            match out {
                Some(p) => std::fs::write(p, &text)?,
                None => stdout.write_all(text.as_bytes())?,
            }
            if !report.ok() {
                writeln!(stderr, "{} check(s) failed", report.summary.fail)?;
            }
            Ok(if report.ok() { 0 } else { 1 })
        }
        Command::ListCases { format } => {
            let rows: Vec<CaseListing> = cat
                .cases
                .iter()
                .map(|c| CaseListing {
                    id: &c.id,
                    table: c.table,
                    real_table: c.real_table,
                    complex_rep: &c.complex_rep.printed,
                    disposition: c.disposition,
                    real_reps: &c.real_reps,
                    redundant_reps: &c.redundant_reps,
                })
                .collect();
            match format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&rows)?;
                    s.push('\n');
                    stdout.write_all(s.as_bytes())?;
                }
                Format::Text => {
                    for r in rows {
                        let mut reps = r.real_reps.join(" ");
                        if !r.redundant_reps.is_empty() {
                            reps.push_str(&format!(" (redundant: {})", r.redundant_reps.join(" ")));
                        }
                        writeln!(stdout, "{}  {}  {:?}  {}", r.id, r.complex_rep, r.disposition, reps)?;
                    }
                }
            }
            Ok(0)
        }
        Command::ExportCatalog { out } => {
            catalog::export_json_to(cat, &out)?;
            Ok(0)
        }
    }
}

/// Runs the command line with explicit output streams; returns the exit code.
pub fn cli_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(rendered.as_bytes());
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match run(cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

pub fn cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    cli_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::load_catalog;

    fn run_case(id: &str) -> Vec<CheckResult> {
        let cat = load_catalog();
        verify_case(cat.case(id).unwrap(), &SampleBindings::new())
    }

    fn failures(rs: &[CheckResult]) -> Vec<String> {
        rs.iter().filter(|r| r.status == Status::Fail).map(|r| format!("{} {} {}", r.check_name, r.case_id, r.detail)).collect()
    }

    #[test]
    fn x_alpha_case_passes_with_printed_real_point() {
        let rs = run_case("c07_02");
        assert!(failures(&rs).is_empty(), "{:?}", failures(&rs));
        let d = rs.iter().find(|r| r.check_name == "d_real_point/main").unwrap();
        assert_eq!(d.status, Status::Pass);
    }

    #[test]
    fn cartan_case_has_two_orbits() {
        let rs = run_case("c08_05");
        assert!(failures(&rs).is_empty(), "{:?}", failures(&rs));
        for route in ["identity", "component"] {
            let r = rs.iter().find(|r| r.check_name == format!("d_real_point/{route}")).unwrap();
            assert_eq!(r.status, Status::Pass);
        }
    }

    #[test]
    fn discarded_case_is_skipped() {
        let rs = run_case("c08_03");
        let r = rs.iter().find(|r| r.check_name == "i_discarded").unwrap();
        assert_eq!(r.status, Status::Skipped);
        assert!(failures(&rs).is_empty());
    }

    #[test]
    fn every_case_passes() {
        let cat = load_catalog();
        let mut bad = Vec::new();
        for c in &cat.cases {
            bad.extend(failures(&verify_case(c, &SampleBindings::new())));
        }
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn search_examples() {
        let cat = load_catalog();
        let u15 = cat.family("u_1_5").unwrap();
        let src = instantiate_at(u15, Some(&FieldElement::from_int(3))).unwrap();
        let dst = instantiate_at(u15, Some(&FieldElement::ratio(3, 2))).unwrap();
        let g = search_equivalence_witness(&src, &dst, 1).unwrap();
        assert!(span_equal(&conjugate_subalgebra(&g, &src).unwrap(), &dst).unwrap());
        assert_eq!(&g, cat.witness("rot12").unwrap());
        assert_eq!(search_equivalence_witness(&src, &src, 0), Some(Matrix3::identity()));
        let zero = instantiate_at(u15, Some(&FieldElement::zero())).unwrap();
        let u16 = instantiate_at(cat.family("u_1_6").unwrap(), None).unwrap();
        assert_eq!(search_equivalence_witness(&zero, &u16, 2), None);
    }

    #[test]
    fn sample_defaults_respect_ranges() {
        let cat = load_catalog();
        for f in cat.real_families.iter().filter(|f| f.is_parametrized()) {
            let s = family_samples(f, &SampleBindings::new());
            assert!(s.len() >= 5, "{}", f.label);
            assert!(s.iter().all(|x| f.parameter.as_ref().unwrap().contains(x)));
        }
    }

    #[test]
    fn samples_file_validation() {
        let cat = load_catalog();
        let b = parse_samples(cat, r#"{"u_1_7": ["2", "-1/3"]}"#).unwrap();
        assert_eq!(b["u_1_7"].len(), 2);
        assert!(parse_samples(cat, r#"{"u_1_7": ["0"]}"#).is_err());
        assert!(parse_samples(cat, r#"{"nope": ["1"]}"#).is_err());
        assert!(parse_samples(cat, r#"{"u_1_1": ["1"]}"#).is_err());
    }
}
