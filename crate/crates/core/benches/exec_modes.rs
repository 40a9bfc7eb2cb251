use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pfister_core::bilforms::{common_slot_space, DiagonalForm};
use pfister_core::family::standard_family;
use pfister_core::fieldcore::{RatFunc, F2};
use pfister_core::verifier::{brute_isotropy_search, DEFAULT_CEILING};
use pfister_core::Exec;

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn common_slots(c: &mut Criterion) {
    let mut group = c.benchmark_group("common_slot_space");
    group.sample_size(10);
    for n in [2usize, 3] {
        let forms: Vec<_> = standard_family::<F2>(n)
            .unwrap()
            .into_iter()
            .map(|(_, p)| p)
            .collect();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &forms, |b, forms| {
                b.iter(|| common_slot_space(black_box(forms), exec).unwrap())
            });
        }
    }
    group.finish();
}

fn brute_oracle(c: &mut Criterion) {
    let x = |i| RatFunc::<F2>::var(2, i);
    let form = DiagonalForm::new(vec![RatFunc::one(2), x(0), x(1), x(0).mul(&x(1))]).unwrap();
    let mut group = c.benchmark_group("brute_isotropy_search");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| brute_isotropy_search(black_box(&form), 2, DEFAULT_CEILING, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, common_slots, brute_oracle);
criterion_main!(benches);
