use criterion::{black_box, criterion_group, criterion_main, Criterion};
use omega_core::homological::ext_dim;
use omega_core::homotopy::homotopy_table;
use omega_core::verifier::{verify_axioms, MorphismPool, VerifyCaps};

fn ext_table(c: &mut Criterion) {
    let ctx = omega_bench::ex310();
    let members = ctx.universe().members().to_vec();
    c.bench_function("ex310 ext tables", |b| {
        b.iter(|| {
            for m in &members {
                for n in &members {
                    black_box((ext_dim(m, n, 1), ext_dim(m, n, 2)));
                }
            }
        })
    });
}

fn classify(c: &mut Criterion) {
    let ctx = omega_bench::ex310();
    let pool = MorphismPool::build(&ctx);
    let morphisms: Vec<_> = pool.morphisms().cloned().collect();
    c.bench_function("ex310 classify pool", |b| {
        b.iter(|| {
            let fresh = ctx.fresh();
            for f in &morphisms {
                black_box(fresh.classify(f));
            }
        })
    });
}

fn verify(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    for (name, ctx) in [("kxx2", omega_bench::kxx2()), ("ka2_tilt", omega_bench::ka2_tilt())] {
        let pool = MorphismPool::build(&ctx);
        g.bench_function(name, |b| b.iter(|| black_box(verify_axioms(&pool, &ctx.fresh(), &VerifyCaps::default()))));
    }
    g.finish();
}

fn homotopy(c: &mut Criterion) {
    let ctx = omega_bench::kxx2();
    c.bench_function("kxx2 homotopy table", |b| b.iter(|| black_box(homotopy_table(&ctx))));
}

criterion_group!(benches, ext_table, classify, verify, homotopy);
criterion_main!(benches);
