use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use deligne_core::characters::{chr_l_explicit, chr_l_generic};
use deligne_core::dimensions::{dim_expr, nekrasov_okounkov_check};
use deligne_core::stable_ring::stable_tensor_at_rank;
use deligne_core::{Bipartition, Partition};

fn p(text: &str) -> Partition {
    text.parse().unwrap()
}

fn characters(c: &mut Criterion) {
    let mut group = c.benchmark_group("chr_L");
    let empty = Partition::empty();
    for order in [3, 5] {
        group.bench_with_input(BenchmarkId::new("explicit", order), &order, |b, &order| {
            b.iter(|| chr_l_explicit(&empty, &empty, 1, black_box(order)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("generic", order), &order, |b, &order| {
            b.iter(|| chr_l_generic(&empty, &empty, 1, black_box(order)).unwrap())
        });
    }
    group.finish();
}

fn tensor(c: &mut Criterion) {
    let a = Bipartition::new(p("2,1"), p("1"));
    let b = Bipartition::new(p("1"), p("2"));
    c.bench_function("tensor_at_rank_8", |bench| {
        bench.iter(|| stable_tensor_at_rank(black_box(&a), black_box(&b), 8).unwrap())
    });
}

fn dimensions(c: &mut Criterion) {
    c.bench_function("dim_expr_[(3,2,1),(2,2)]", |b| {
        let (l, m) = (p("3,2,1"), p("2,2"));
        b.iter(|| dim_expr(black_box(&l), black_box(&m)).unwrap())
    });
    c.bench_function("nekrasov_okounkov_8", |b| b.iter(|| nekrasov_okounkov_check(black_box(8))));
}

criterion_group!(benches, characters, tensor, dimensions);
criterion_main!(benches);
