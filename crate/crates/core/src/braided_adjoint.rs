//! The braided adjoint algebra `H_ad` of the braided line, its half-braiding, the maps `pi_X`, and
//! the comparison with the relative adjoint algebra of the regular comodule algebra.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::adjoint::{act_on, alpha_apply, coact_on, multiply, unit_element, AdjointAlgebra};
use crate::braiding::{
    braiding, braiding_inverse, check_module, check_yd, eq_witness, flip, hom_space, invertible_witness, ComoduleRep,
    ModuleRep, YDModule,
};
use crate::constructions::TaftSetup;
use crate::hopf::{witness_if_nonzero, FinDimAlgebra};
use crate::linalg::{kron, sparse, vec_sub, zero_vec, Matrix, Vector};
use crate::report::VerificationReport;
use crate::scalar::{Field, Scalar};

/// Which braiding enters the half-braiding `gamma_X = (rho_X (x) id)(id (x) c)(Delta (x) id)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaConvention {
    /// `c = sigma_{H,X}`, giving `(h_1 # R^2) . x (x) R^1 . h_2`.
    SigmaHX,
    /// `c = sigma^{-1}_{X,H}`, giving `(h_1 # S(R^1)) . x (x) R^2 . h_2`.
    SigmaInverseXH,
}

impl GammaConvention {
    pub fn name(&self) -> &'static str {
        match self {
            GammaConvention::SigmaHX => "sigma_HX",
            GammaConvention::SigmaInverseXH => "sigma_inverse_XH",
        }
    }
}

#[derive(Clone, Debug)]
pub struct HAdjoint {
    pub setup: Arc<TaftSetup>,
    /// Same product as the braided line.
    pub carrier: FinDimAlgebra,
    /// `rho^ad: H (x) H -> H`.
    pub rho_ad: Matrix,
    /// Taft action `(x^a g^b) . y = rho^ad(x^a (x) g^b . y)` and coaction `h_1 # R^2 (x) R^1 . h_2`.
    pub yd: YDModule,
    pub convention: GammaConvention,
}

/// `rho^ad = m (m (x) id)(id (x) id (x) S)(id (x) sigma_{H,H})(Delta (x) id)`, composed as matrices.
pub fn rho_ad_matrix(s: &TaftSetup) -> Matrix {
    let line = &s.line;
    let f = s.field();
    let n = line.dim();
    let id = Matrix::identity(f, n);
    let m = line.algebra.mult_matrix();
    let delta = line.coalgebra.comult_matrix();
    let sigma = braiding(&s.r, &line.tmodule, &line.tmodule);
    let steps = [
        kron(&delta, &id),
        kron(&id, &sigma),
        kron(&Matrix::identity(f, n * n), &line.braided_antipode),
        kron(&m, &id),
        m,
    ];
    let mut out = Matrix::identity(f, n * n);
    for st in &steps {
        out = st.mul(&out);
    }
    out
}

/// `rho^ad(h (x) -)` as an `n x n` matrix.
fn rho_of(rho: &Matrix, n: usize, h: usize) -> Matrix {
    Matrix::from_fn(rho.field(), n, n, |r, c| rho.get(r, h * n + c).clone())
}

pub fn build_h_ad(setup: Arc<TaftSetup>) -> HAdjoint {
    build_h_ad_with(setup, GammaConvention::SigmaHX)
}

pub fn build_h_ad_with(setup: Arc<TaftSetup>, convention: GammaConvention) -> HAdjoint {
    let s = &setup;
    let f = s.field().clone();
    let n = s.n;
    let rho_ad = rho_ad_matrix(s);
    let mut action = Vec::with_capacity(n * n);
    for a in 0..n {
        let ra = rho_of(&rho_ad, n, a);
        for b in 0..n {
            debug_assert_eq!(action.len(), s.taft_index(a, b));
            action.push(ra.mul(&s.line.tmodule.action[b]));
        }
    }
    let module = ModuleRep::new(&f, n, action);
    let n2 = s.taft.dim();
    let mut co = Matrix::zeros(&f, n2 * n, n);
    for h in 0..n {
        for (h1, h2, c) in s.line.coalgebra.coproduct_terms(h) {
            for (i, j, rc) in s.r.terms() {
                let coef = c * &rc;
                let left = s.taft.mul(&s.inc_h.column(*h1), &s.iota.column(j));
                let right = s.line.tmodule.action[i].column(*h2);
                for (y, yc) in sparse(&left) {
                    for (o, oc) in sparse(&right) {
                        co.add_at(y * n + o, h, &(&coef * &(&yc * &oc)));
                    }
                }
            }
        }
    }
    let comodule = ComoduleRep::new(n2, n, co);
    HAdjoint { carrier: s.line.algebra.clone(), rho_ad, yd: YDModule { module, comodule }, convention, setup }
}

impl HAdjoint {
    pub fn dim(&self) -> usize {
        self.setup.n
    }

    pub fn field(&self) -> &Field {
        self.setup.field()
    }

    /// `gamma_X: H_ad (x) X -> X (x) H_ad`.
    pub fn gamma(&self, x: &ModuleRep) -> Matrix {
        gamma_with(self, x, self.convention)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.setup.n,
            "gamma_convention": self.convention.name(),
            "rho_ad": crate::json::matrix_json(&self.rho_ad),
            "coaction": crate::json::matrix_json(&self.yd.comodule.coaction),
        })
    }
}

pub fn gamma_with(a: &HAdjoint, x: &ModuleRep, conv: GammaConvention) -> Matrix {
    let s = &a.setup;
    let f = s.field();
    let n = s.n;
    let h = &s.line.tmodule;
    let xt = x.restrict(&s.iota);
    let c = match conv {
        GammaConvention::SigmaHX => braiding(&s.r, h, &xt),
        GammaConvention::SigmaInverseXH => braiding_inverse(&s.r, &xt, h),
    };
    // rho_X: H (x) X -> X, column h * dX + x
    let rho_x = Matrix::from_columns(
        f,
        x.dim,
        &(0..n * x.dim).map(|ix| x.act(&s.inc_h.column(ix / x.dim)).column(ix % x.dim)).collect::<Vec<_>>(),
    );
    let delta = s.line.coalgebra.comult_matrix();
    let first = kron(&delta, &Matrix::identity(f, x.dim));
    let second = kron(&Matrix::identity(f, n), &c);
    let third = kron(&rho_x, &Matrix::identity(f, n));
    third.mul(&second).mul(&first)
}

/// `sigma^{G(V)}_{H_ad}(v (x) a) = (1 # R^{-1}) . a (x) R^{-2} . v`, a map `V (x) H_ad -> H_ad (x) V`.
fn sigma_gv(a: &HAdjoint, v: &ModuleRep) -> Matrix {
    let s = &a.setup;
    let f = s.field();
    let (da, dv) = (a.dim(), v.dim);
    let mut sigma = Matrix::zeros(f, da * dv, dv * da);
    for (i, k, c) in s.r.inverse_terms() {
        let act_a = a.yd.module.act(&s.iota.column(i));
        sigma = sigma.add(&kron(&act_a, &v.action[k]).mul(&flip(f, dv, da)).scale(&c));
    }
    sigma
}

/// Module, Yetter-Drinfeld and half-braiding checks for `H_ad` against the given Taft modules and
/// `kC_n`-modules.
pub fn verify_h_ad(a: &HAdjoint, modules: &[(String, ModuleRep)], t_modules: &[(String, ModuleRep)]) -> VerificationReport {
    let s = &a.setup;
    let f = s.field().clone();
    let n = s.n;
    let taft = &s.taft;
    let rho = &a.rho_ad;
    let m = a.carrier.mult_matrix();
    let id = Matrix::identity(&f, n);
    let mut rep = VerificationReport::new();
    rep.check("rho-ad-associative", || eq_witness(&[], &rho.mul(&kron(&id, rho)), &rho.mul(&kron(&m, &id))));
    rep.check("rho-ad-unit", || eq_witness(&[], &rho_of(rho, n, 0), &id));
    rep.check("rho-ad-t-equivariant", || {
        let tm = &s.line.tmodule;
        for t in 0..n {
            let mut on_pair = Matrix::zeros(&f, n * n, n * n);
            for (t1, t2, c) in s.group.coalgebra.coproduct_terms(t) {
                on_pair = on_pair.add(&kron(&tm.action[*t1], &tm.action[*t2]).scale(c));
            }
            if let Some(w) = eq_witness(&[t], &tm.action[t].mul(rho), &rho.mul(&on_pair)) {
                return Some(w);
            }
        }
        None
    });
    rep.extend_prefixed("module", check_module(&a.yd.module, &taft.algebra));
    rep.extend_prefixed("yd", check_yd(&a.yd, taft));
    rep.check("product-module-morphism", || {
        let pair = a.yd.module.tensor(&a.yd.module, taft);
        for y in 0..taft.dim() {
            if let Some(w) = eq_witness(&[y], &a.yd.module.action[y].mul(&m), &m.mul(&pair.action[y])) {
                return Some(w);
            }
        }
        None
    });
    rep.check("gamma-trivial-is-flip", || {
        eq_witness(&[], &a.gamma(&ModuleRep::trivial(taft)), &flip(&f, n, 1))
    });
    let gammas: Vec<Matrix> = modules.iter().map(|(_, x)| a.gamma(x)).collect();
    for ((name, x), g) in modules.iter().zip(&gammas) {
        rep.check(format!("gamma-invertible/{name}"), || invertible_witness(g));
        rep.check(format!("gamma-morphism/{name}"), || {
            let left = a.yd.module.tensor(x, taft);
            let right = x.tensor(&a.yd.module, taft);
            for y in 0..taft.dim() {
                if let Some(w) = eq_witness(&[y], &g.mul(&left.action[y]), &right.action[y].mul(g)) {
                    return Some(w);
                }
            }
            None
        });
    }
    for (i, (nx, x)) in modules.iter().enumerate() {
        for (j, (ny, y)) in modules.iter().enumerate() {
            rep.check(format!("gamma-natural/{nx}->{ny}"), || {
                for (k, phi) in hom_space(x, y).iter().enumerate() {
                    let lhs = kron(phi, &id).mul(&gammas[i]);
                    let rhs = gammas[j].mul(&kron(&id, phi));
                    if let Some(w) = eq_witness(&[k], &lhs, &rhs) {
                        return Some(w);
                    }
                }
                None
            });
            rep.check(format!("half-braiding-multiplicative/{nx},{ny}"), || {
                let xy = x.tensor(y, taft);
                let lhs = a.gamma(&xy);
                let rhs = kron(&Matrix::identity(&f, x.dim), &gammas[j]).mul(&kron(&gammas[i], &Matrix::identity(&f, y.dim)));
                eq_witness(&[], &lhs, &rhs)
            });
        }
    }
    for (name, v) in t_modules {
        rep.check(format!("relative-center/{name}"), || {
            let gv = s.pi_module(v);
            let comp = a.gamma(&gv).mul(&sigma_gv(a, v));
            eq_witness(&[], &comp, &Matrix::identity(&f, v.dim * n))
        });
    }
    rep.check("braided-commutative", || {
        let g = a.gamma(&a.yd.module);
        eq_witness(&[], &m.mul(&g), &m)
    });
    rep
}

/// `pi_X(h) = sum_i h . x_i (x) x^i` as a `(dim X)^2 x n` matrix.
pub fn pi_matrix(s: &TaftSetup, x: &ModuleRep) -> Matrix {
    let cols: Vec<Vector> = (0..s.n).map(|h| x.act(&s.inc_h.column(h)).entries().to_vec()).collect();
    Matrix::from_columns(s.field(), x.dim * x.dim, &cols)
}

/// `pi_X` is a module map into `X (x) X*`, and the left dinaturality identity holds against each
/// `kC_n`-module `V`, using the standard dual of `X`.
pub fn pi_dinatural_check(a: &HAdjoint, x: &ModuleRep, t_modules: &[(String, ModuleRep)]) -> VerificationReport {
    let dual = crate::braiding::dual_module(x, &a.setup.taft).module;
    pi_dinatural_check_with_dual(a, x, &dual, t_modules)
}

pub fn pi_dinatural_check_with_dual(
    a: &HAdjoint,
    x: &ModuleRep,
    dual: &ModuleRep,
    t_modules: &[(String, ModuleRep)],
) -> VerificationReport {
    let s = &a.setup;
    let taft = &s.taft;
    let pi = pi_matrix(s, x);
    let mut rep = VerificationReport::new();
    rep.check("pi-module-morphism", || {
        let xx = x.tensor(dual, taft);
        for y in 0..taft.dim() {
            if let Some(w) = eq_witness(&[y], &pi.mul(&a.yd.module.action[y]), &xx.action[y].mul(&pi)) {
                return Some(w);
            }
        }
        None
    });
    for (name, v) in t_modules {
        rep.check(format!("dinaturality/{name}"), || dinaturality_residual(a, x, v));
    }
    rep
}

/// `S(ev_V |> id_M, id_M) pi_M = S(m, id_M) beta^V_{V |> M, M} pi_{V |> M}` evaluated at each `h`,
/// both sides in `M (x) (V* (x) V (x) M)*` as `(dV dM) x (dV dM)` matrices with rows `(p, r)`.
fn dinaturality_residual(a: &HAdjoint, m: &ModuleRep, v: &ModuleRep) -> Option<Value> {
    let s = &a.setup;
    let f = s.field();
    let t = &s.group;
    let (dv, dm) = (v.dim, m.dim);
    let vm = s.pi_module(v).tensor(m, &s.taft);
    // (R'^2 . phi)(t1 v) = phi(S(R'^2) t1 v), t2 on N, S(t3) on V (x) M
    let mut pieces = Vec::new();
    for (i2, j2, c2) in s.r.terms() {
        let sj2 = t.antipode.column(j2);
        for (t1, t2, t3, c3) in t.coalgebra.double_coproduct_terms(i2) {
            let p1 = v.act(&t.mul(&sj2, &t.basis(t1)));
            let p2 = m.act(&s.iota.column(t2));
            let p3 = vm.act(&s.iota.apply(&t.antipode.column(t3)));
            pieces.push((kron(&p1, &p2), p3, &c2 * &c3));
        }
    }
    for h in 0..s.n {
        let hx = s.inc_h.column(h);
        let lhs = kron(&Matrix::identity(f, dv), &m.act(&hx));
        let big_pi = vm.act(&hx);
        let mut rhs = Matrix::zeros(f, dv * dm, dv * dm);
        for (left, right, c) in &pieces {
            rhs = rhs.add(&left.mul(&big_pi).mul(right).scale(c));
        }
        if let Some(w) = eq_witness(&[h], &lhs, &rhs) {
            return Some(w);
        }
    }
    None
}

/// `phi(alpha) = (id (x) eps_T) alpha(1 (x) 1)` from the relative adjoint algebra of `K = H#T`
/// onto `H_ad`, checked against the product, unit, action and coaction.
pub fn example1_iso(adj: &AdjointAlgebra, a: &HAdjoint) -> VerificationReport {
    let p = &adj.problem;
    let s = &a.setup;
    let f = s.field().clone();
    let n = s.n;
    let taft = &s.taft;
    let one = taft.unit().to_vec();
    let phi = |alpha: &[Scalar]| -> Vector {
        let v = alpha_apply(p, alpha, &one, &one);
        let mut out = zero_vec(&f, n);
        for (ix, c) in sparse(&v) {
            out[ix / n] += &c;
        }
        out
    };
    let elems = adj.basis.vectors();
    let images: Vec<Vector> = elems.iter().map(|e| phi(e)).collect();
    let mut rep = VerificationReport::new();
    rep.check_with_detail("phi-bijective", || {
        let rank = Matrix::from_columns(&f, n, &images).rank();
        let detail = json!({ "adjoint_dim": adj.dim(), "h_ad_dim": n, "rank": rank });
        if rank == n && adj.dim() == n {
            (None, detail)
        } else {
            (Some(detail.clone()), detail)
        }
    });
    rep.check("phi-multiplicative", || {
        for (i, x) in elems.iter().enumerate() {
            for (j, y) in elems.iter().enumerate() {
                let lhs = phi(&multiply(p, x, y));
                let rhs = a.carrier.mul(&images[i], &images[j]);
                if let Some(w) = witness_if_nonzero(&[i, j], vec_sub(&lhs, &rhs)) {
                    return Some(w);
                }
            }
        }
        None
    });
    rep.check("phi-unit", || witness_if_nonzero(&[], vec_sub(&phi(&unit_element(p)), a.carrier.unit())));
    rep.check("phi-action", || {
        for y in 0..taft.dim() {
            for (i, x) in elems.iter().enumerate() {
                let lhs = phi(&act_on(p, y, x));
                let rhs = a.yd.module.action[y].apply(&images[i]);
                if let Some(w) = witness_if_nonzero(&[y, i], vec_sub(&lhs, &rhs)) {
                    return Some(w);
                }
            }
        }
        None
    });
    // x . h = (id (x) eps_T)(x_1 (h # 1) S(x_2))
    rep.check("action-formula", || {
        for y in 0..taft.dim() {
            for h in 0..n {
                let mut acc = zero_vec(&f, taft.dim());
                for (y1, y2, c) in taft.coalgebra.coproduct_terms(y) {
                    let prod = taft.mul(&taft.mul(&taft.basis(*y1), &s.inc_h.column(h)), &taft.antipode.column(*y2));
                    for (ix, v) in sparse(&prod) {
                        acc[ix].add_mul(c, &v);
                    }
                }
                let mut displayed = zero_vec(&f, n);
                for (ix, v) in sparse(&acc) {
                    displayed[ix / n] += &v;
                }
                let rhs = a.yd.module.action[y].column(h);
                if let Some(w) = witness_if_nonzero(&[y, h], vec_sub(&displayed, &rhs)) {
                    return Some(w);
                }
            }
        }
        None
    });
    rep.check("phi-coaction", || {
        for (i, x) in elems.iter().enumerate() {
            let mut lhs = Vec::with_capacity(taft.dim() * n);
            for comp in coact_on(p, x) {
                lhs.extend(phi(&comp));
            }
            let rhs = a.yd.comodule.coaction.apply(&images[i]);
            if let Some(w) = witness_if_nonzero(&[i], vec_sub(&lhs, &rhs)) {
                return Some(w);
            }
        }
        None
    });
    rep
}

/// The registered module list `{trivial, regular}` for Taft and `kC_n`.
pub fn standard_modules(s: &TaftSetup) -> (Vec<(String, ModuleRep)>, Vec<(String, ModuleRep)>) {
    let taft_mods = vec![("trivial".to_string(), s.trivial_module()), ("regular".to_string(), s.regular_module())];
    let t_mods = vec![
        ("trivial".to_string(), ModuleRep::trivial(&s.group)),
        ("regular".to_string(), ModuleRep::regular(&s.group.algebra)),
    ];
    (taft_mods, t_mods)
}

/// Perturbs the dual action of `x` by sending every generator through the plain transpose, which
/// ignores the antipode.
pub fn naive_dual(x: &ModuleRep) -> ModuleRep {
    let action = x.action.iter().map(|m| m.transpose()).collect();
    ModuleRep::new(x.field(), x.dim, action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjoint::{solve_adjoint, AdjointProblem};
    use crate::constructions::regular_comodule_algebra;

    fn setup(n: usize) -> Arc<TaftSetup> {
        Arc::new(TaftSetup::new(n).unwrap())
    }

    #[test]
    fn rho_ad_unit_and_x_on_one() {
        let s = setup(2);
        let a = build_h_ad(s.clone());
        let rho = &a.rho_ad;
        // rho^ad(x (x) 1) = x S(1) + 1 . 1 . S(x) = x - x = 0
        assert!(rho.column(2).iter().all(|c| c.is_zero()));
        assert!(rho_of(rho, 2, 0).is_identity());
    }

    #[test]
    fn h_ad_checks_n2_n3() {
        for n in [2, 3] {
            let s = setup(n);
            let a = build_h_ad(s.clone());
            let (mods, tmods) = standard_modules(&s);
            let rep = verify_h_ad(&a, &mods, &tmods);
            assert!(rep.all_passed(), "n={n}: {:?}", rep.failures().collect::<Vec<_>>());
            for (_, x) in &mods {
                let d = pi_dinatural_check(&a, x, &tmods);
                assert!(d.all_passed(), "n={n}: {:?}", d.failures().collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn inverse_flip_form_fails_at_n3() {
        let s = setup(3);
        let a = build_h_ad_with(s.clone(), GammaConvention::SigmaInverseXH);
        let (mods, tmods) = standard_modules(&s);
        assert!(!verify_h_ad(&a, &mods, &tmods).all_passed());
    }

    #[test]
    fn wrong_dual_breaks_pi() {
        let s = setup(2);
        let a = build_h_ad(s.clone());
        let x = s.regular_module();
        let (_, tmods) = standard_modules(&s);
        assert!(!pi_dinatural_check_with_dual(&a, &x, &naive_dual(&x), &tmods).all_passed());
    }

    #[test]
    fn example1_n2_n3() {
        for n in [2, 3] {
            let s = setup(n);
            let adj = solve_adjoint(&AdjointProblem::relative(s.clone(), regular_comodule_algebra(&s))).unwrap();
            let rep = example1_iso(&adj, &build_h_ad(s.clone()));
            assert!(rep.all_passed(), "n={n}: {:?}", rep.failures().collect::<Vec<_>>());
        }
    }
}
