use criterion::{black_box, criterion_group, criterion_main, Criterion};
use kcon::bounds::BoundKind;
use kcon::connectivity::{has_k_plus_1_connected_subgraph, vertex_connectivity};
use kcon::constructions::mader_graph;
use kcon::graph::Graph;
use kcon::ledger::run_all_checks;
use kcon::search::{verify_forcing, SearchConfig};

fn petersen() -> Graph {
    let mut edges = vec![];
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edge_list(10, &edges).unwrap()
}

fn bench_connectivity(c: &mut Criterion) {
    let p = petersen();
    c.bench_function("kappa_petersen", |b| {
        b.iter(|| vertex_connectivity(black_box(&p)).unwrap())
    });
    let mg = mader_graph(18, 3).unwrap().graph;
    c.bench_function("kappa_mader_18_3", |b| {
        b.iter(|| vertex_connectivity(black_box(&mg)).unwrap())
    });
}

fn bench_decision(c: &mut Criterion) {
    let mg = mader_graph(14, 3).unwrap().graph;
    c.bench_function("decompose_mader_14_3", |b| {
        b.iter(|| has_k_plus_1_connected_subgraph(black_box(&mg), 3))
    });
}

fn bench_ledger(c: &mut Criterion) {
    c.bench_function("ledger_full_run", |b| b.iter(run_all_checks));
}

fn bench_forcing(c: &mut Criterion) {
    let config = SearchConfig::default();
    c.bench_function("verify_forcing_new_6_2", |b| {
        b.iter(|| verify_forcing(BoundKind::NewThm, 6, 2, black_box(&config)).unwrap())
    });
}

criterion_group!(benches, bench_connectivity, bench_decision, bench_ledger, bench_forcing);
criterion_main!(benches);
