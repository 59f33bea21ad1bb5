use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dickson::identities::{run_all, Verifier, VerifyConfig};
use dickson::seq_eval::{SeqTarget, Strategy};
use dickson::{Exec, FamilyId};

fn execs() -> Vec<(&'static str, Exec)> {
    let mut v = vec![("sequential", Exec::Sequential)];
    if Exec::Parallel.is_parallel() {
        v.push(("parallel", Exec::Parallel));
    }
    v
}

fn family_traces(c: &mut Criterion) {
    let mut group = c.benchmark_group("family_traces");
    group.sample_size(10);
    for (name, exec) in execs() {
        for n_max in [16, 48] {
            group.bench_with_input(BenchmarkId::new(name, n_max), &n_max, |b, &n| {
                b.iter(|| black_box(Verifier::new(exec).verify_family_traces(n)))
            });
        }
    }
    group.finish();
}

fn all_verifiers(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_all");
    group.sample_size(10);
    for (name, exec) in execs() {
        let config = VerifyConfig {
            exec,
            ..VerifyConfig::default().with_n_max(12)
        };
        group.bench_function(name, |b| b.iter(|| black_box(run_all(&config).unwrap())));
    }
    group.finish();
}

fn sequence_strategies(c: &mut Criterion) {
    let mut group = c.benchmark_group("lucas");
    let target = SeqTarget::family(FamilyId::Lucas, 1.into(), 1.into());
    for n in [100u64, 1_000, 10_000] {
        for strategy in [Strategy::Recurrence, Strategy::MatrixPow] {
            group.bench_with_input(BenchmarkId::new(strategy.name(), n), &n, |b, &n| {
                b.iter(|| match strategy {
                    Strategy::Recurrence => black_box(target.recurrence_counted(n, &mut 0)),
                    Strategy::MatrixPow => black_box(target.matrix_pow_counted(n, &mut 0)),
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, family_traces, all_verifiers, sequence_strategies);
criterion_main!(benches);
