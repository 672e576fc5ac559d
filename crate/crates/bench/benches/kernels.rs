use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kkec_core::connectivity::{is_minimally_kl_edge_connected, l_edge_connectivity};
use kkec_core::constructions::FamilySpec;
use kkec_core::enumeration::{canonical_form, enumerate_connected_by_order, extremal_search, SearchPoint};
use kkec_core::spectral::{adjacency_char_poly, largest_real_root, spectral_radius, DEFAULT_TOL};
use kkec_core::Graph;
use std::hint::black_box;

/// A fixed spread of connected graphs on `n` vertices.
fn sample(n: usize, count: usize) -> Vec<Graph> {
    let all = enumerate_connected_by_order(n).unwrap();
    let step = (all.len() / count).max(1);
    all.into_iter().step_by(step).take(count).collect()
}

fn spectral(c: &mut Criterion) {
    let gs = sample(8, 64);
    let big = FamilySpec::PendantBipartite { k: 5, n: 40 }.build().unwrap();
    c.bench_function("spectral_radius/n8x64", |b| {
        b.iter(|| gs.iter().map(|g| spectral_radius(g, DEFAULT_TOL).unwrap().rho).sum::<f64>())
    });
    c.bench_function("spectral_radius/pendant_bipartite_40", |b| {
        b.iter(|| spectral_radius(black_box(&big), DEFAULT_TOL).unwrap())
    });
    c.bench_function("char_poly_and_root/n8x64", |b| {
        b.iter(|| gs.iter().map(|g| largest_real_root(&adjacency_char_poly(g), 1e-12).unwrap()).sum::<f64>())
    });
}

fn connectivity(c: &mut Criterion) {
    let gs = sample(8, 64);
    let mut group = c.benchmark_group("l_edge_connectivity");
    for l in [2, 3, 4] {
        group.bench_with_input(BenchmarkId::from_parameter(l), &l, |b, &l| {
            b.iter(|| gs.iter().map(|g| l_edge_connectivity(g, l).unwrap()).sum::<usize>())
        });
    }
    group.finish();
    c.bench_function("is_minimally_kk/k3_n8x64", |b| {
        b.iter(|| gs.iter().filter(|g| is_minimally_kl_edge_connected(g, 3, 3).unwrap()).count())
    });
}

fn enumeration(c: &mut Criterion) {
    let gs = sample(10, 64);
    c.bench_function("canonical_form/n10x64", |b| b.iter(|| gs.iter().map(canonical_form).count()));
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for n in [6, 7] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| enumerate_connected_by_order(n).unwrap().len())
        });
    }
    group.finish();
    let seven = enumerate_connected_by_order(7).unwrap();
    let mut group = c.benchmark_group("extremal_search");
    group.sample_size(10);
    group.bench_function("k2_n7", |b| b.iter(|| extremal_search(&seven, 2, SearchPoint::Order { n: 7 }).unwrap()));
    group.finish();
}

criterion_group!(benches, spectral, connectivity, enumeration);
criterion_main!(benches);
