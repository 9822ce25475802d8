//! Acceptance suite. Prints one line per criterion and exits non-zero if any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use su21::catalog::{instantiate_at, load_catalog, Catalog, Disposition, ParameterMap};
use su21::cohomology::{check_coboundary, is_cocycle, sl3_class, Sl3Class};
use su21::invariants::fingerprint;
use su21::liealg::{a_basis, bracket, chevalley_basis, conjugate_subalgebra, span_equal, tau_alg, tau_subalgebra, Subalgebra};
use su21::verifier::{cli_with, family_points, verify_all_with, Report, SampleBindings, Status};
use su21::{Execution, FieldElement, Matrix3};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn all_pass(report: &Report, case: Option<&str>, prefix: &str) -> Result<usize, String> {
    let hits: Vec<_> = report
        .results
        .iter()
        .filter(|r| case.is_none_or(|c| r.case_id == c) && r.check_name.starts_with(prefix))
        .collect();
    ensure(!hits.is_empty(), format!("no checks named {prefix}*"))?;
    if let Some(bad) = hits.iter().find(|r| r.status != Status::Pass) {
        return Err(format!("{} {} is {:?}: {}", bad.case_id, bad.check_name, bad.status, bad.detail));
    }
    Ok(hits.len())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let a = a_basis();
    for (k, x) in a.iter().enumerate() {
        ensure(tau_alg(x) == *x, format!("τ(a{}) ≠ a{}", k + 1, k + 1))?;
        ensure(x.matrix().trace().is_zero(), format!("a{} not traceless", k + 1))?;
    }
    let e = Matrix3::unit;
    let one = FieldElement::one();
    let zero = FieldElement::zero();
    let printed = [
        Matrix3::diag([one.clone(), -&one, zero.clone()]),
        Matrix3::diag([zero, one.clone(), -&one]),
        e(1, 2),
        e(2, 3),
        -&e(1, 3),
        e(2, 1),
        e(3, 2),
        -&e(3, 1),
    ];
    for (k, (x, m)) in chevalley_basis().iter().zip(&printed).enumerate() {
        ensure(x.matrix() == m, format!("Chevalley element {k} differs from its printed entries"))?;
    }
    let mut triples = 0;
    for x in a.iter() {
        for y in a.iter() {
            for z in a.iter() {
                let s = &(&bracket(x, &bracket(y, z)) + &bracket(y, &bracket(z, x))) + &bracket(z, &bracket(x, y));
                ensure(s.is_zero(), "Jacobi identity fails")?;
                triples += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), format!("took {elapsed:?}"))?;
    Ok(format!("8 a-basis and 8 Chevalley matrices, {triples} Jacobi triples, {elapsed:.2?}"))
}

fn w<'a>(cat: &'a Catalog, name: &str) -> &'a Matrix3 {
    cat.witness(name).expect("witness")
}

fn criterion_2(report: &Report) -> Outcome {
    let cat = load_catalog();
    let complex = |id: &str, a: Option<FieldElement>| cat.case(id).expect("case").complex_at(a.as_ref());
    let mu = FieldElement::ratio(1, 3);
    let transporters: Vec<(&str, Subalgebra)> = vec![
        ("rot12", complex("c07_02", None)),
        ("swap13", complex("c07_01", None)),
        ("g0_half", complex("c07_04", ParameterMap::HalfLine.eval(Some(&mu)))),
        ("swap12", complex("c07_04", ParameterMap::ShiftedCircle.eval(Some(&mu)))),
        ("swap13_neg", complex("c08_01", None)),
        ("swap12", complex("c08_02", None)),
    ];
    for (g0, u) in &transporters {
        let ok = span_equal(&conjugate_subalgebra(w(cat, g0), u).map_err(|e| e.to_string())?, &tau_subalgebra(u))
            .map_err(|e| e.to_string())?;
        ensure(ok, format!("{g0}·u ≠ τ(u) for {}", u.label()))?;
    }
    for h in ["h_xa", "swap13", "swap12", "g0_half", "swap13_neg"] {
        ensure(is_cocycle(w(cat, h)).map_err(|e| e.to_string())?, format!("{h} is not a cocycle"))?;
    }
    let t = |a: i64, b: i64| Matrix3::diag([FieldElement::from_int(a), FieldElement::from_int(b), FieldElement::from_int(a * b)]);
    let pairs: Vec<(&str, Matrix3)> = vec![
        ("g_xa", w(cat, "h_xa").clone()),
        ("h_cyc", w(cat, "swap13").clone()),
        ("g3", w(cat, "swap12").clone()),
        ("g_half", w(cat, "g0_half").clone()),
        ("h_cyc2", w(cat, "swap13_neg").clone()),
        ("g1", t(-1, 1)),
        ("g2", t(1, -1)),
    ];
    for (g, h) in &pairs {
        ensure(check_coboundary(w(cat, g), h), format!("{g}⁻¹τ({g}) ≠ h"))?;
    }
    let mut n = 0;
    for prefix in ["a_transporter", "b_cocycle", "c_stabilizer_coset", "d_coboundary", "m_pipeline_soundness"] {
        n += all_pass(report, None, prefix)?;
    }
    Ok(format!(
        "{} transporters, 5 cocycles, {} coboundaries exact; {n} route checks pass",
        transporters.len(),
        pairs.len()
    ))
}

fn criterion_3(report: &Report) -> Outcome {
    let cat = load_catalog();
    let listed: Vec<_> = cat.listed_families().collect();
    ensure(listed.len() == 24, format!("{} listed families", listed.len()))?;
    for f in &listed {
        let checks = report.find(&cat.resolve(&f.label).map_err(|e| e.to_string())?.id, &format!("e_closure_realness/{}", f.label));
        let checks: Vec<_> = checks
            .into_iter()
            .filter(|r| {
                let rest = &r.check_name["e_closure_realness/".len() + f.label.len()..];
                rest.is_empty() || rest.starts_with('@')
            })
            .collect();
        ensure(checks.iter().all(|r| r.status == Status::Pass), format!("{} closure/realness", f.label))?;
        let need = if f.is_parametrized() { 5 } else { 1 };
        ensure(checks.len() >= need, format!("{} checked at {} points", f.label, checks.len()))?;
    }
    let real_points = all_pass(report, None, "d_real_point")?;
    let reached: BTreeSet<&str> = cat.cases.iter().flat_map(|c| c.routes.iter().map(|r| r.target.as_str())).collect();
    for f in &listed {
        ensure(reached.contains(f.label.as_str()), format!("{} has no real-point route", f.label))?;
    }
    let errata: Vec<&str> = cat.real_families.iter().filter(|f| f.printed_erratum.is_some()).map(|f| f.label.as_str()).collect();
    ensure(errata == ["u_2_4"], format!("erratum list {errata:?}"))?;
    all_pass(report, Some("c08_05"), "l_erratum/u_2_4")?;
    let u11 = instantiate_at(cat.family("u_1_1").map_err(|e| e.to_string())?, None).map_err(|e| e.to_string())?;
    let coords = u11.basis()[0].a_coords();
    ensure(coords[0] == FieldElement::one() && coords[1] == FieldElement::from_int(2), "u_1_1 row")?;
    Ok(format!("24 families closed, real, correct dimension; {real_points} real points match their rows; erratum u_2_4"))
}

fn criterion_4(report: &Report) -> Outcome {
    let cat = load_catalog();
    let fams: Vec<_> = cat.all_families().collect();
    ensure(fams.len() == 9, format!("{} families", fams.len()))?;
    for (case, rec) in &fams {
        let id = &rec.family.id;
        ensure(family_points(rec.family.arity()).len() >= 5, format!("{id} samples"))?;
        all_pass(report, Some(&case.id), &format!("f_family_tau/{id}"))?;
        all_pass(report, Some(&case.id), &format!("f_family_negative_control/{id}"))?;
        all_pass(report, Some(&case.id), &format!("f_family_printed/{id}"))?;
    }
    Ok("9 stabilizer tori match their τ-rule at 5 samples; 9 negative controls rejected".into())
}

fn criterion_5(report: &Report) -> Outcome {
    let jordan = all_pass(report, Some("c08_09"), "k_jordan_diagonal")?;
    ensure(jordan >= 5, format!("Jordan diagonal at {jordan} samples"))?;
    let eta = all_pass(report, Some("c08_09"), "k_eta_condition")?;
    all_pass(report, Some("c08_09"), "k_pencil_independence")?;
    for pair in ["u_1_5~u_1_6", "u_1_5~u_1_7", "u_1_6~u_1_7"] {
        all_pass(report, Some("c07_04"), &format!("k_separation/{pair}"))?;
    }
    Ok(format!("Jordan diagonal at {jordan} λ, η = ±λ at {eta} λ, u_1_5/u_1_6/u_1_7 scaling matches empty"))
}

fn criterion_6(report: &Report) -> Outcome {
    all_pass(report, Some("c07_04"), "h_equivalence/v_4->u_1_7/in_su21")?;
    let direct = all_pass(report, Some("c07_04"), "h_equivalence/v_4->u_1_7@")?;
    ensure(direct >= 3, format!("v_4 checked at {direct} samples"))?;
    let mut parts = vec![format!("v_4->u_1_7 at {direct}")];
    for tag in ["u_1_5->v_1", "u_1_5->v_2", "u_1_7->v_3"] {
        all_pass(report, Some("c07_04"), &format!("h_equivalence/{tag}/in_su21"))?;
        let n = all_pass(report, Some("c07_04"), &format!("h_equivalence/{tag}@"))?;
        let s = all_pass(report, Some("c07_04"), &format!("h_equivalence_search/{tag}@"))?;
        ensure(n >= 3 && s >= 3, format!("{tag}: {n} checks, {s} searches"))?;
        parts.push(format!("{tag} at {s}"));
    }
    Ok(parts.join(", "))
}

fn criterion_7(report: &Report) -> Outcome {
    let lemma = all_pass(report, Some("global"), "c_torus_lemma")?;
    let coboundaries = all_pass(report, Some("global"), "c_sl3_consistency")?;
    let cat = load_catalog();
    ensure(
        sl3_class(w(cat, "d_nnp")).map_err(|e| e.to_string())? == Sl3Class::Nontrivial,
        "diag(-1,-1,1) should be nontrivial",
    )?;
    all_pass(report, Some("c08_05"), "k_separation/u_2_3~u_2_4")?;
    all_pass(report, Some("c09_01"), "k_separation/u_3_5~u_3_6")?;
    let fp = |l: &str| fingerprint(&instantiate_at(cat.family(l).unwrap(), None).unwrap()).unwrap();
    let (k35, k36) = (fp("u_3_5").killing_signature, fp("u_3_6").killing_signature);
    ensure(k35 == (2, 1, 0) && k36 == (0, 3, 0), format!("Killing signatures {k35:?}, {k36:?}"))?;
    ensure(fp("u_2_3") != fp("u_2_4"), "u_2_3 and u_2_4 share a fingerprint")?;
    Ok(format!("{lemma} torus classes, {coboundaries} SL(3) classes; u_3_5 {k35:?} vs u_3_6 {k36:?}"))
}

fn criterion_8(report: &Report) -> Outcome {
    let cat = load_catalog();
    let got: BTreeSet<(String, String)> = report
        .results
        .iter()
        .filter(|r| r.status == Status::Unverifiable)
        .map(|r| (r.case_id.clone(), r.check_name.clone()))
        .collect();
    let mut expected: BTreeSet<(String, String)> = [
        ("c07_04", "j_assertion/fiber_lambda0"),
        ("c07_04", "j_assertion/gl2_classes"),
        ("c08_09", "z_assertion/u26_sign_separation"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    for c in cat.cases.iter().filter(|c| c.disposition == Disposition::NoTransporter) {
        expected.insert((c.id.clone(), "z_assertion/no_transporter".into()));
    }
    ensure(got == expected, format!("unverifiable set differs: {:?}", got.symmetric_difference(&expected).collect::<Vec<_>>()))?;
    all_pass(report, Some("c07_04"), "j_cocycle")?;
    Ok(format!("{} unverifiable items, exactly the catalogued assertions", got.len()))
}

fn criterion_9() -> Outcome {
    let run = || {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = cli_with(["su21", "verify", "--format", "json"], &mut out, &mut err);
        (code, out)
    };
    let start = Instant::now();
    let (c1, first) = run();
    let elapsed = start.elapsed();
    let (c2, second) = run();
    ensure(c1 == 0 && c2 == 0, format!("exit codes {c1}, {c2}"))?;
    ensure(first == second, "two JSON runs differ")?;
    let seq = verify_all_with(&SampleBindings::new(), Execution::Sequential);
    let par = verify_all_with(&SampleBindings::new(), Execution::Parallel);
    ensure(seq.to_json() == par.to_json(), "sequential and parallel reports differ")?;
    ensure(elapsed < Duration::from_secs(60), format!("full run took {elapsed:?}"))?;
    Ok(format!("byte-identical JSON ({} bytes), sequential = parallel, full run {elapsed:.2?}", first.len()))
}

fn main() {
    let report = verify_all_with(&SampleBindings::new(), Execution::default());
    let criteria: Vec<(&str, Outcome)> = vec![
        ("basis fidelity", criterion_1()),
        ("witness suite", criterion_2(&report)),
        ("table reproduction", criterion_3(&report)),
        ("stabilizer τ-actions", criterion_4(&report)),
        ("eigenvalue claims", criterion_5(&report)),
        ("equivalence reductions", criterion_6(&report)),
        ("cohomology consistency", criterion_7(&report)),
        ("unverifiable ledger", criterion_8(&report)),
        ("determinism", criterion_9()),
    ];
    let mut failed = 0;
    for (k, (name, outcome)) in criteria.iter().enumerate() {
        match outcome {
            Ok(d) => println!("criterion {}: PASS {name}: {d}", k + 1),
            Err(d) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {d}", k + 1);
            }
        }
    }
    if report.summary.fail > 0 {
        println!("report has {} failing checks", report.summary.fail);
        failed += 1;
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
