//! One worker thread against the default pool for the three parallel
//! workloads. Build with `--no-default-features` for the sequential path.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use luqikeng_core::kernel::{kernel_eval_batch, FbhPoint, KernelPoint};
use luqikeng_core::lukeng::{m0_table, theorem_suite, AnmIndex, Exact};
use luqikeng_core::par::with_jobs;
use num_complex::Complex64;

const POOLS: [(&str, Option<usize>); 2] = [("one_thread", Some(1)), ("default_pool", None)];

fn kernel_batch() -> Vec<KernelPoint> {
    let index = AnmIndex::new(4, 3).unwrap();
    (0..2000)
        .map(|i| {
            let s = f64::from(i) / 4000.0;
            let mut p = FbhPoint::origin(index);
            let mut q = FbhPoint::origin(index);
            p.z[0] = Complex64::new(s, -s);
            p.zeta[0] = Complex64::new(0.3, s);
            q.zeta[1] = Complex64::new(-0.2, 0.1);
            KernelPoint { index, mu: 1.0, p, q }
        })
        .collect()
}

fn sweeps(c: &mut Criterion) {
    let ns: Vec<u32> = (1..=15).collect();
    let batch = kernel_batch();
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    for (label, jobs) in POOLS {
        group.bench_with_input(BenchmarkId::new("m0_table_1_15", label), &jobs, |b, &jobs| {
            b.iter(|| with_jobs(jobs, || black_box(m0_table(&ns, None))))
        });
        group.bench_with_input(BenchmarkId::new("kernel_batch_2000", label), &jobs, |b, &jobs| {
            b.iter(|| with_jobs(jobs, || black_box(kernel_eval_batch(&batch))))
        });
        group.bench_with_input(BenchmarkId::new("theorem_suite_6x6", label), &jobs, |b, &jobs| {
            b.iter(|| with_jobs(jobs, || black_box(theorem_suite(&Exact, 6, 6))))
        });
    }
    group.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
