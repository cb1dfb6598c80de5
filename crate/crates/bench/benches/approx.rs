use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ddperm::{approx_log_permanent, ApproxConfig};
use ddperm_bench::{matrix, tensor, APPROX_ORDERS, APPROX_SIZES};

fn matrix_orders(c: &mut Criterion) {
    let mut group = c.benchmark_group("approx_matrix");
    group.sample_size(10);
    for n in APPROX_SIZES {
        let a = matrix(n, 0.5);
        for m in APPROX_ORDERS {
            let cfg = ApproxConfig::new(None, 0.01).unwrap().with_order(m);
            group.bench_with_input(BenchmarkId::new(format!("n{n}"), m), &cfg, |b, cfg| {
                b.iter(|| approx_log_permanent(&a, cfg).unwrap())
            });
        }
    }
    group.finish();
}

fn tensor_orders(c: &mut Criterion) {
    let mut group = c.benchmark_group("approx_tensor_d3");
    group.sample_size(10);
    for n in [4, 6, 8] {
        let t = tensor(3, n, 0.5);
        for m in [2, 3, 4] {
            let cfg = ApproxConfig::new(None, 0.01).unwrap().with_order(m);
            group.bench_with_input(BenchmarkId::new(format!("n{n}"), m), &cfg, |b, cfg| {
                b.iter(|| approx_log_permanent(&t, cfg).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, matrix_orders, tensor_orders);
criterion_main!(benches);
