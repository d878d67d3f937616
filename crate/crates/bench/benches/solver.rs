use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use mutviz::families::{cycle, f_k, h_k, j_graph, l_k};
use mutviz::realizability::enumerate_connected_graphs;
use mutviz::removal::edge_scan;
use mutviz::{all_four, max_visibility_set, SolverOptions, VisibilityKind};

fn solve(c: &mut Criterion) {
    let serial = SolverOptions::default();
    let parallel = SolverOptions::parallel();
    let mut group = c.benchmark_group("solve");
    for (name, g) in [
        ("C12", cycle(12).unwrap()),
        ("H5", h_k(5).unwrap()),
        ("F6", f_k(6).unwrap()),
    ] {
        for kind in VisibilityKind::ALL {
            group.bench_with_input(BenchmarkId::new(kind.short_name(), name), &g.graph, |b, g| {
                b.iter(|| max_visibility_set(black_box(g), kind, &serial).unwrap().value)
            });
        }
    }
    let f6 = f_k(6).unwrap().graph;
    group.bench_function("mu/F6/parallel", |b| {
        b.iter(|| max_visibility_set(black_box(&f6), VisibilityKind::Mutual, &parallel).unwrap().value)
    });
    let l2 = l_k(2).unwrap().graph;
    group.bench_function("mud/L2", |b| {
        b.iter(|| max_visibility_set(black_box(&l2), VisibilityKind::Dual, &serial).unwrap().value)
    });
    group.finish();
}

fn workloads(c: &mut Criterion) {
    let opts = SolverOptions::default();
    c.bench_function("census/6", |b| b.iter(|| enumerate_connected_graphs(black_box(6)).unwrap().len()));
    c.bench_function("all_four/census6", |b| {
        let census = enumerate_connected_graphs(6).unwrap();
        b.iter(|| census.iter().map(|g| all_four(g, &opts).unwrap().mutual.value).sum::<usize>())
    });
    let j = j_graph().graph;
    c.bench_function("edge_scan/J/mu", |b| {
        b.iter(|| edge_scan(black_box(&j), VisibilityKind::Mutual, &opts).unwrap().base_value)
    });
}

criterion_group!(benches, solve, workloads);
criterion_main!(benches);
