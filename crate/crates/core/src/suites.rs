//! Named verification suites with claim ids keyed by anchor, shared by the command line and the
//! acceptance tests.

use std::sync::Arc;

use serde_json::json;

use crate::adjoint::{
    compare_generator_path, compare_pipelines, connectedness, monotonicity, solve_adjoint, verify_braided_commutative,
    verify_center_algebra, verify_kernel_membership, verify_relative_center, verify_yd, AdjointAlgebra, AdjointProblem,
};
use crate::braided_adjoint::{build_h_ad, example1_iso, pi_dinatural_check, standard_modules, verify_h_ad};
use crate::braiding::{check_rmatrix, ModuleRep};
use crate::constructions::{
    check_braided_hopf, check_projection, comodule_algebra_k, r_matrix_cn, regular_comodule_algebra,
    taft_presentation_check, ConstructionError, TaftSetup,
};
use crate::hopf::check_hopf;
use crate::report::VerificationReport;
use crate::scalar::{check_field_axioms, make_field, rational_int};
use crate::transport::{chi0_crosscheck, dinaturality_sample, phi_structure_transport};

pub fn case_label(n: usize, d: usize, xi: i64) -> String {
    format!("n{n}-d{d}-xi{xi}")
}

/// `(d, xi)` for every divisor `d` of `n` and `xi` in `{0, 1}`.
pub fn grid_points(n: usize) -> Vec<(usize, i64)> {
    (1..=n).filter(|d| n % d == 0).flat_map(|d| [(d, 0), (d, 1)]).collect()
}

pub fn field_suite(n: usize, seed: u64) -> VerificationReport {
    let mut rep = VerificationReport::new();
    rep.extend_prefixed(&format!("scalar-field/n{n}"), check_field_axioms(&make_field(n), seed, 100));
    rep
}

pub fn hopf_suite(n: usize) -> Result<VerificationReport, ConstructionError> {
    let s = TaftSetup::new(n)?;
    let mut rep = VerificationReport::new();
    rep.extend_prefixed(&format!("braided-line/n{n}"), check_braided_hopf(&s.line, &s.r));
    rep.extend_prefixed(&format!("bosonization/n{n}"), check_hopf(&s.taft));
    rep.extend_prefixed(&format!("taft-presentation/n{n}"), taft_presentation_check(&s.taft.algebra, &s.taft.coalgebra, n));
    rep.extend_prefixed(&format!("can-proj/n{n}"), check_projection(&s));
    Ok(rep)
}

pub fn rmatrix_suite(n: usize) -> VerificationReport {
    let mut rep = VerificationReport::new();
    rep.extend_prefixed(&format!("quasitriangular/n{n}"), check_rmatrix(&r_matrix_cn(n)));
    rep
}

/// Yetter-Drinfeld, algebra, braided commutativity and connectedness checks of one solution.
pub fn structure_checks(a: &AdjointAlgebra, prefix: &str) -> VerificationReport {
    let mut rep = VerificationReport::new();
    rep.extend_prefixed(&format!("{prefix}/solver"), verify_kernel_membership(a));
    rep.extend_prefixed(&format!("prop-yetter/{prefix}"), verify_yd(a));
    rep.extend_prefixed(&format!("cor-stt-iso/{prefix}"), verify_center_algebra(a));
    rep.extend_prefixed(&format!("cor-stt-iso/{prefix}"), verify_braided_commutative(a));
    let c = connectedness(a);
    rep.check_with_detail(format!("cor-def-relat-lag/{prefix}/connectedness"), || {
        let detail = json!({ "dim_invariants": c });
        if c == 1 {
            (None, detail)
        } else {
            (Some(detail.clone()), detail)
        }
    });
    if a.problem.has(crate::adjoint::Condition::Ad2) {
        let s = &a.problem.setup;
        for (name, v) in [("regular", ModuleRep::regular(&s.group.algebra)), ("trivial", ModuleRep::trivial(&s.group))] {
            let r = verify_relative_center(a, &v).expect("Ad2 is present");
            rep.extend_prefixed(&format!("eq-v-relative-center/{prefix}/{name}"), r);
        }
    }
    rep
}

/// Every claim attached to `K(d, xi)` at one grid point.
pub fn adjoint_case(s: &Arc<TaftSetup>, d: usize, xi: i64) -> Result<VerificationReport, ConstructionError> {
    let n = s.n;
    let case = case_label(n, d, xi);
    let k = comodule_algebra_k(s, d, rational_int(xi))?;
    let mut rep = VerificationReport::new();
    let shp = AdjointProblem::shimizu(s.clone(), k.comod.clone()).with_label(format!("shimizu {case}"));
    let relp = AdjointProblem::relative(s.clone(), k.comod.clone()).with_label(format!("relative {case}"));
    let sh = solve_adjoint(&shp).map_err(|e| ConstructionError::Check(format!("{e:?}")))?;
    let rel = solve_adjoint(&relp).map_err(|e| ConstructionError::Check(format!("{e:?}")))?;
    rep.check_with_detail(format!("prop-simizus-adj-taft/{case}/dim"), || {
        let detail = json!({ "dim": sh.dim(), "expected": n * n });
        if sh.dim() == n * n {
            (None, detail)
        } else {
            (Some(detail.clone()), detail)
        }
    });
    rep.extend_prefixed(&format!("prop-simizus-adj-taft/{case}/transport"), phi_structure_transport(&sh, &k));
    rep.extend(structure_checks(&sh, &format!("{case}/shimizu")));
    rep.check_with_detail(format!("def-s-t/{case}/relative-dim"), || (None, json!({ "dim": rel.dim() })));
    rep.extend(structure_checks(&rel, &format!("{case}/relative")));
    rep.check(format!("solver/{case}/monotonicity"), || monotonicity(&rel.basis, &sh.basis));
    rep.check(format!("solver/{case}/reduced-pipeline"), || compare_pipelines(&shp).unwrap_or_else(|e| Some(json!(format!("{e:?}")))));
    rep.check(format!("solver/{case}/generator-path"), || {
        compare_generator_path(&relp).unwrap_or_else(|e| Some(json!(format!("{e:?}"))))
    });
    rep.extend_prefixed(&format!("final-prop-chi0/{case}"), chi0_crosscheck(s, d, rational_int(xi))?);
    let m = ModuleRep::regular(&k.comod.algebra);
    for (name, v) in [("regular", ModuleRep::regular(&s.group.algebra)), ("trivial", ModuleRep::trivial(&s.group))] {
        rep.extend_prefixed(&format!("thm-relative-coend-hopf/{case}/{name}"), dinaturality_sample(&rel, &m, &v));
    }
    Ok(rep)
}

/// Relative adjoint algebra of the regular comodule algebra and its comparison with `H_ad`.
pub fn regular_case(s: &Arc<TaftSetup>) -> VerificationReport {
    let n = s.n;
    let prefix = format!("example-1/n{n}");
    let mut rep = VerificationReport::new();
    let p = AdjointProblem::relative(s.clone(), regular_comodule_algebra(s)).with_label(format!("regular n{n}"));
    match solve_adjoint(&p) {
        Ok(a) => {
            rep.check_with_detail(format!("{prefix}/relative-dim"), || {
                let detail = json!({ "dim": a.dim(), "expected": n });
                if a.dim() == n {
                    (None, detail)
                } else {
                    (Some(detail.clone()), detail)
                }
            });
            rep.extend(structure_checks(&a, &format!("regular-n{n}/relative")));
            rep.extend_prefixed(&format!("{prefix}/iso"), example1_iso(&a, &build_h_ad(s.clone())));
        }
        Err(e) => rep.fail(format!("{prefix}/solve"), json!(format!("{e:?}"))),
    }
    rep
}

pub fn adjoint_suite(n: usize) -> Result<VerificationReport, ConstructionError> {
    let s = Arc::new(TaftSetup::new(n)?);
    let mut rep = VerificationReport::new();
    for (d, xi) in grid_points(n) {
        rep.extend(adjoint_case(&s, d, xi)?);
    }
    rep.extend(regular_case(&s));
    Ok(rep)
}

/// Named Taft modules and their `kC_n` counterparts; unknown names are returned as errors.
pub fn named_modules(
    s: &TaftSetup,
    names: &[String],
) -> Result<(Vec<(String, ModuleRep)>, Vec<(String, ModuleRep)>), String> {
    let (taft, group) = standard_modules(s);
    let mut a = Vec::new();
    let mut b = Vec::new();
    for name in names {
        let i = taft.iter().position(|(n, _)| n == name).ok_or_else(|| format!("unknown module '{name}'"))?;
        a.push(taft[i].clone());
        b.push(group[i].clone());
    }
    Ok((a, b))
}

pub fn braided_adjoint_suite(n: usize, names: &[String]) -> Result<VerificationReport, String> {
    let s = Arc::new(TaftSetup::new(n).map_err(|e| format!("{e:?}"))?);
    let (mods, tmods) = named_modules(&s, names)?;
    let a = build_h_ad(s.clone());
    let mut rep = VerificationReport::new();
    rep.extend_prefixed(&format!("lemma-adj-braided/n{n}"), verify_h_ad(&a, &mods, &tmods));
    for (name, x) in &mods {
        rep.extend_prefixed(&format!("prop-pi-dinatural/n{n}/{name}"), pi_dinatural_check(&a, x, &tmods));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_for_four() {
        assert_eq!(grid_points(4), vec![(1, 0), (1, 1), (2, 0), (2, 1), (4, 0), (4, 1)]);
    }

    #[test]
    fn n2_suites_pass() {
        assert!(field_suite(2, 1).all_passed());
        assert!(hopf_suite(2).unwrap().all_passed());
        assert!(rmatrix_suite(2).all_passed());
        let rep = adjoint_suite(2).unwrap();
        assert!(rep.all_passed(), "{:?}", rep.failures().map(|e| &e.claim_id).collect::<Vec<_>>());
        let names = vec!["trivial".to_string(), "regular".to_string()];
        assert!(braided_adjoint_suite(2, &names).unwrap().all_passed());
    }

    #[test]
    fn claim_ids_unique() {
        let mut rep = adjoint_suite(2).unwrap();
        assert!(rep.finalize().is_empty());
    }

    #[test]
    fn unknown_module_name() {
        assert!(braided_adjoint_suite(2, &["bogus".to_string()]).is_err());
    }
}
