use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ddperm::{permanent_definitional, permanent_ryser, permanent_tensor, permanent_tensor_slice_expansion};
use ddperm_bench::{matrix, tensor};

fn matrices(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_matrix");
    for n in [8, 12, 16, 20] {
        let a = matrix(n, 0.5);
        group.bench_with_input(BenchmarkId::new("ryser", n), &a, |b, a| b.iter(|| permanent_ryser(a).unwrap()));
    }
    for n in [6, 8] {
        let a = matrix(n, 0.5);
        group.bench_with_input(BenchmarkId::new("definitional", n), &a, |b, a| {
            b.iter(|| permanent_definitional(a).unwrap())
        });
    }
    group.finish();
}

fn tensors(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_tensor_d3");
    group.sample_size(10);
    for n in [3, 4, 5, 6] {
        let t = tensor(3, n, 0.5);
        group.bench_with_input(BenchmarkId::new("definitional", n), &t, |b, t| {
            b.iter(|| permanent_tensor(t).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("slice_expansion", n), &t, |b, t| {
            b.iter(|| permanent_tensor_slice_expansion(t, 1, 0).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, matrices, tensors);
criterion_main!(benches);
