use criterion::{criterion_group, criterion_main, Criterion};

use su21::catalog::{instantiate_at, load_catalog};
use su21::verifier::{verify_all_with, ConjugatorSearch, SampleBindings};
use su21::{Execution, FieldElement};

fn full_run(c: &mut Criterion) {
    let bindings = SampleBindings::new();
    let mut g = c.benchmark_group("verify_all");
    g.sample_size(10);
    for (name, exec) in [("parallel", Execution::Parallel), ("sequential", Execution::Sequential)] {
        g.bench_function(name, |b| b.iter(|| verify_all_with(&bindings, exec)));
    }
    g.finish();
}

fn search(c: &mut Criterion) {
    let cat = load_catalog();
    let x = FieldElement::ratio(1, 3);
    let src = instantiate_at(cat.family("u_1_7").unwrap(), Some(&x)).unwrap();
    let dst = instantiate_at(cat.family("v_3").unwrap(), Some(&FieldElement::ratio(1, 6))).unwrap();
    let search = ConjugatorSearch::shared();
    let mut g = c.benchmark_group("search_depth_3");
    for (name, exec) in [("parallel", Execution::Parallel), ("sequential", Execution::Sequential)] {
        g.bench_function(name, |b| b.iter(|| search.find_word(&src, &dst, 3, exec).expect("witness")));
    }
    g.finish();
}

criterion_group!(benches, full_run, search);
criterion_main!(benches);
