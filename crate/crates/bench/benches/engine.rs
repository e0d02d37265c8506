use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};
use symindex_core::{analyze, ChevalleyTable, PaintedDiagram, RootSystem};

fn root_systems(c: &mut Criterion) {
    for ty in ["A6", "E6", "E8"] {
        c.bench_function(&format!("root_system/{ty}"), |b| {
            b.iter(|| RootSystem::from_type(black_box(ty).parse().unwrap()))
        });
    }
}

fn chevalley(c: &mut Criterion) {
    for ty in ["F4", "E6", "E7"] {
        let rs = RootSystem::from_type(ty.parse().unwrap());
        c.bench_function(&format!("chevalley/{ty}"), |b| b.iter(|| ChevalleyTable::build(black_box(&rs))));
    }
}

fn e6_sweep(c: &mut Criterion) {
    let rs = Arc::new(RootSystem::from_type("E6".parse().unwrap()));
    c.bench_function("analyze/E6 all paintings", |b| {
        b.iter(|| {
            for mask in 1u32..64 {
                let painted = (0..6usize).filter(|i| mask & (1 << i) != 0);
                let pd = PaintedDiagram::new(rs.clone(), painted).unwrap();
                black_box(analyze(pd).unwrap());
            }
        })
    });
}

criterion_group!(benches, root_systems, chevalley, e6_sweep);
criterion_main!(benches);
