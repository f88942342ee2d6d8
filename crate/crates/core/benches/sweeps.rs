//! Compares sweep throughput between the sequential path (`jobs = 1`) and
//! the work-stealing pool (`jobs = 0`, all cores). Both paths produce
//! byte-identical CSV; this measures only the speed difference.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ipx_core::harness::sweep::{run_sweep, SweepConfig, SweepTarget};

fn bench_sweeps(c: &mut Criterion) {
    let targets = [
        SweepTarget::SchwarzDiscAbove,
        SweepTarget::BesselSegmentChain,
        SweepTarget::GrussFamilySegment,
    ];
    let mut group = c.benchmark_group("sweep-400-trials");
    group.sample_size(10);
    for target in targets {
        let mut config = SweepConfig::new(target);
        config.trials = 400;
        config.seed = 42;

        config.jobs = 1;
        let sequential = config.clone();
        group.bench_with_input(
            BenchmarkId::new("sequential", target.name()),
            &sequential,
            |b, cfg| b.iter(|| run_sweep(cfg).unwrap()),
        );

        #[cfg(feature = "parallel")]
        {
            config.jobs = 0;
            let parallel = config.clone();
            group.bench_with_input(
                BenchmarkId::new("all-cores", target.name()),
                &parallel,
                |b, cfg| b.iter(|| run_sweep(cfg).unwrap()),
            );
        }
    }
    group.finish();
}

criterion_group!(benches, bench_sweeps);
criterion_main!(benches);
