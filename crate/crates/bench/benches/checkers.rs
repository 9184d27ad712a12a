use criterion::{black_box, criterion_group, criterion_main, Criterion};
use travel_bench::cycle;
use travel_core::{enumerate_systems, EnumerationOptions, DEFAULT_WITNESS_LIMIT};

fn bench_checkers(c: &mut Criterion) {
    let c6 = cycle(6);
    let items = enumerate_systems(&c6, EnumerationOptions::default()).items.unwrap();
    let system = items[items.len() / 2].clone();
    let table = system.associated_groupoid(&c6).unwrap();

    c.bench_function("t1+t2 on C6", |b| b.iter(|| black_box(&table).is_travel_groupoid()));
    c.bench_function("t4 on C6", |b| b.iter(|| black_box(&table).check_smooth(DEFAULT_WITNESS_LIMIT)));
    c.bench_function("t5 on C6", |b| b.iter(|| black_box(&table).check_semismooth(DEFAULT_WITNESS_LIMIT)));
    c.bench_function("R3 on C6", |b| b.iter(|| black_box(&system).check_r3(DEFAULT_WITNESS_LIMIT)));
    c.bench_function("R4 on C6", |b| b.iter(|| black_box(&system).check_r4(DEFAULT_WITNESS_LIMIT)));
    c.bench_function("R5 on C6", |b| b.iter(|| black_box(&system).check_r5(DEFAULT_WITNESS_LIMIT)));
    c.bench_function("P0-P2 on C6", |b| b.iter(|| black_box(&system).is_tpartition_system(&c6)));
}

criterion_group!(benches, bench_checkers);
criterion_main!(benches);
