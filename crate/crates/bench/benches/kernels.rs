use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use liegrad_bench::{dense_matrix, scrambled};
use liegrad_core::catalog::SEMIDIRECT_NAMES;
use liegrad_core::structure::{homogeneous_levi, radical_gradedness};

fn rref(c: &mut Criterion) {
    let mut g = c.benchmark_group("rref");
    for n in [8, 12, 16] {
        let m = dense_matrix(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| black_box(m.rref())));
    }
    g.finish();
}

fn radical_and_levi(c: &mut Criterion) {
    let mut g = c.benchmark_group("structure");
    g.sample_size(20);
    for name in SEMIDIRECT_NAMES {
        let gr = scrambled(name, 1);
        g.bench_with_input(BenchmarkId::new("radical", name), &gr, |b, gr| {
            b.iter(|| radical_gradedness(black_box(gr)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("levi", name), &gr, |b, gr| {
            b.iter(|| homogeneous_levi(black_box(gr)).unwrap())
        });
    }
    g.finish();
}

fn chains(c: &mut Criterion) {
    let mut g = c.benchmark_group("chain_commutativity");
    let gr = scrambled("dihedral_sl2", 1);
    for len in [2, 3, 4] {
        g.bench_with_input(BenchmarkId::from_parameter(len), &len, |b, &len| {
            b.iter(|| gr.check_chain_commutativity(len).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, rref, radical_and_levi, chains);
criterion_main!(benches);
