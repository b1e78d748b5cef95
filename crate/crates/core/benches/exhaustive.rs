use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use kstirling::enumerate::{enum_kary_trees_with_prefix, history_prefixes, insertion_capacities};
use kstirling::parallel::map_reduce;
use kstirling::series::brute_force_type_gf_with;
use kstirling::stats::class_distributions;
use kstirling::{perm_to_tree, tree_to_perm, Execution, ObjectClass};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn gessel_round_trip(n: usize, k: usize, exec: Execution) -> usize {
    let caps = insertion_capacities(ObjectClass::Kary, n, k).unwrap();
    map_reduce(
        &history_prefixes(&caps, 3),
        exec,
        || 0usize,
        |prefix| {
            enum_kary_trees_with_prefix(n, k, prefix)
                .unwrap()
                .filter(|t| perm_to_tree(&tree_to_perm(t)) == *t)
                .count()
        },
        |a, b| a + b,
    )
}

fn bench_gessel(c: &mut Criterion) {
    let mut g = c.benchmark_group("gessel_round_trip_k3_n5");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| gessel_round_trip(5, 3, exec))
        });
    }
    g.finish();
}

fn bench_type_gf(c: &mut Criterion) {
    let mut g = c.benchmark_group("brute_force_type_gf_k2_n5");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| brute_force_type_gf_with(5, 2, exec).unwrap())
        });
    }
    g.finish();
}

fn bench_equidistribution(c: &mut Criterion) {
    let mut g = c.benchmark_group("class_distributions_n5");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| class_distributions(5, exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, bench_gessel, bench_type_gf, bench_equidistribution);
criterion_main!(benches);
