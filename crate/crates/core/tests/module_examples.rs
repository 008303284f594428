use std::sync::Arc;

use serde_json::json;

use cyclohopf::adjoint::{is_flip_commutative, solution_space, solve_adjoint, Ad2Form};
use cyclohopf::constructions::{comodule_algebra_k, regular_comodule_algebra};
use cyclohopf::json::{document, document_field, emit_json, field_json};
use cyclohopf::scalar::rational_int;
use cyclohopf::suites::{adjoint_case, grid_points};
use cyclohopf::{make_field, AdjointProblem, FinDimHopf, TaftSetup};

fn setup(n: usize) -> Arc<TaftSetup> {
    Arc::new(TaftSetup::new(n).unwrap())
}

#[test]
fn field_header_emission() {
    let f = make_field(2);
    assert_eq!(emit_json(&field_json(&f)), "{\"conductor\":2,\"cyclotomic_poly\":[\"1\",\"1\"]}\n");
    let doc = document(&f, "none", json!({ "x": 1 }));
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(document_field(&doc).unwrap(), f);
}

#[test]
fn taft_json_roundtrip_and_determinism() {
    for n in 1..=3 {
        let s = setup(n);
        let v = s.taft.to_json();
        let back = FinDimHopf::from_json(s.field(), &v).unwrap();
        assert_eq!(emit_json(&back.to_json()), emit_json(&v));
        assert_eq!(emit_json(&setup(n).taft.to_json()), emit_json(&v));
    }
}

#[test]
fn adjoint_n1_everything_trivial() {
    let s = setup(1);
    let k = comodule_algebra_k(&s, 1, rational_int(0)).unwrap();
    assert_eq!(solve_adjoint(&AdjointProblem::relative(s.clone(), k.comod)).unwrap().dim(), 1);
}

#[test]
fn literal_ad2_gives_wrong_dimensions() {
    for n in [2, 3] {
        let s = setup(n);
        let p = AdjointProblem::relative(s.clone(), regular_comodule_algebra(&s));
        let corrected = solution_space(&p).unwrap().dim();
        let literal = solution_space(&p.clone().with_ad2_form(Ad2Form::Literal)).unwrap().dim();
        assert_eq!(corrected, n);
        assert_ne!(literal, n, "n={n}");
    }
}

#[test]
fn flip_commutativity_observations() {
    // The Shimizu variant over K(n, 0) is not commutative for the plain flip, the relative one is.
    let s = setup(2);
    let k = comodule_algebra_k(&s, 2, rational_int(0)).unwrap();
    let sh = solve_adjoint(&AdjointProblem::shimizu(s.clone(), k.comod.clone())).unwrap();
    let rel = solve_adjoint(&AdjointProblem::relative(s.clone(), k.comod)).unwrap();
    assert!(!is_flip_commutative(&sh));
    assert!(is_flip_commutative(&rel));
}

#[test]
fn n3_grid_passes_every_claim() {
    let s = setup(3);
    for (d, xi) in grid_points(3) {
        let rep = adjoint_case(&s, d, xi).unwrap();
        assert!(rep.all_passed(), "d={d} xi={xi}: {:?}", rep.failures().map(|e| &e.claim_id).collect::<Vec<_>>());
    }
}

#[test]
fn chi0_mismatch_for_proper_divisor_at_n4() {
    // 1 < d < n: the relative dimension is 2n and neither chi_0 reading matches.
    let s = setup(4);
    let rep = adjoint_case(&s, 2, 0).unwrap();
    let failing: Vec<&str> = rep.failures().map(|e| e.claim_id.as_str()).collect();
    assert_eq!(failing, vec!["final-prop-chi0/n4-d2-xi0/dimension"]);
    let dim = rep.get("def-s-t/n4-d2-xi0/relative-dim").unwrap().detail.clone().unwrap();
    assert_eq!(dim["dim"], 8);
}
