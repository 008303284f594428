//! Fixtures shared by the benchmarks in `benches/`.

use std::sync::Arc;

use cyclohopf::constructions::comodule_algebra_k;
use cyclohopf::scalar::rational_int;
use cyclohopf::{AdjointProblem, TaftSetup};

pub fn setup(n: usize) -> Arc<TaftSetup> {
    Arc::new(TaftSetup::new(n).expect("n >= 1"))
}

/// `{Ad1, Ad3}` over `K(d, xi)`.
pub fn shimizu(n: usize, d: usize, xi: i64) -> AdjointProblem {
    let s = setup(n);
    let k = comodule_algebra_k(&s, d, rational_int(xi)).expect("d divides n");
    AdjointProblem::shimizu(s, k.comod)
}

/// `{Ad1, Ad2, Ad3}` over `K(d, xi)`.
pub fn relative(n: usize, d: usize, xi: i64) -> AdjointProblem {
    let s = setup(n);
    let k = comodule_algebra_k(&s, d, rational_int(xi)).expect("d divides n");
    AdjointProblem::relative(s, k.comod)
}
