use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;

use cyclohopf::adjoint::{solution_space, solve_adjoint};
use cyclohopf::braided_adjoint::{build_h_ad, standard_modules, verify_h_ad};
use cyclohopf::scalar::random_scalar;
use cyclohopf::{make_field, Matrix, TaftSetup};
use cyclohopf_bench::{relative, setup, shimizu};

fn field(c: &mut Criterion) {
    let f = make_field(12);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    let (a, b) = (random_scalar(&f, &mut rng), random_scalar(&f, &mut rng));
    c.bench_function("scalar mul q(zeta_12)", |bch| bch.iter(|| black_box(&a) * black_box(&b)));
    c.bench_function("scalar inverse q(zeta_12)", |bch| bch.iter(|| black_box(&a).inv()));
    let m = Matrix::from_fn(&f, 24, 24, |_, _| random_scalar(&f, &mut rng));
    c.bench_function("rank 24x24 q(zeta_12)", |bch| bch.iter(|| black_box(&m).rank()));
}

fn constructions(c: &mut Criterion) {
    let mut g = c.benchmark_group("taft");
    for n in [2, 3, 4] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |bch, &n| bch.iter(|| TaftSetup::new(n)));
    }
    g.finish();
}

fn solver(c: &mut Criterion) {
    let mut g = c.benchmark_group("solve");
    g.sample_size(10);
    for (n, d, xi) in [(2, 2, 0), (3, 1, 0), (3, 3, 0)] {
        let p = shimizu(n, d, xi);
        g.bench_function(format!("shimizu space n{n}-d{d}-xi{xi}"), |bch| bch.iter(|| solution_space(&p)));
        let q = relative(n, d, xi);
        g.bench_function(format!("relative algebra n{n}-d{d}-xi{xi}"), |bch| bch.iter(|| solve_adjoint(&q)));
    }
    g.finish();
}

fn braided(c: &mut Criterion) {
    let mut g = c.benchmark_group("braided-adjoint");
    g.sample_size(10);
    let s = setup(3);
    let (mods, tmods) = standard_modules(&s);
    let a = build_h_ad(s.clone());
    g.bench_function("verify n3", |bch| bch.iter(|| verify_h_ad(&a, &mods, &tmods)));
    g.finish();
}

criterion_group!(benches, field, constructions, solver, braided);
criterion_main!(benches);
