//! R-matrices, braidings, modules, comodules and Yetter-Drinfeld modules.

use serde_json::Value;

use crate::hopf::{
    residual_witness, tensor_mul, tensor_unit, witness_if_nonzero, FinDimAlgebra, FinDimCoalgebra,
    FinDimHopf, HopfError,
};
use crate::linalg::{
    kernel_basis, kron, kron_vec, sparse, unit_vec, vec_sub, zero_vec, Matrix, RowReducer, Vector,
};
use crate::report::VerificationReport;
use crate::scalar::{Field, Scalar};

fn matrix_witness(indices: &[usize], a: &Matrix, b: &Matrix) -> Option<Value> {
    a.first_difference(b).map(|(r, c)| {
        let mut ix = indices.to_vec();
        ix.extend([r, c]);
        residual_witness(&ix, &vec_sub(a.entries(), b.entries()))
    })
}

/// Universal R-matrix `R = sum R^1 (x) R^2` of a Hopf algebra `T`.
#[derive(Clone, Debug, PartialEq)]
pub struct RMatrix {
    pub host: FinDimHopf,
    /// Coefficients over `e_i (x) e_j` at `i * dim + j`.
    pub element: Vector,
    pub inverse: Vector,
}

impl RMatrix {
    /// Inverts `element` inside `T (x) T` by solving a linear system.
    pub fn new(host: FinDimHopf, element: Vector) -> Result<RMatrix, HopfError> {
        let d = host.dim();
        assert_eq!(element.len(), d * d);
        let algs = [&host.algebra, &host.algebra];
        let cols: Vec<Vector> =
            (0..d * d).map(|j| tensor_mul(&algs, &element, &unit_vec(host.field(), d * d, j))).collect();
        let left = Matrix::from_columns(host.field(), d * d, &cols);
        let inverse = left
            .solve(&tensor_unit(&algs))
            .ok_or_else(|| HopfError::Invalid("R-matrix is not invertible".into()))?;
        Ok(RMatrix { host, element, inverse })
    }

    pub fn dim(&self) -> usize {
        self.host.dim()
    }

    pub fn field(&self) -> &Field {
        self.host.field()
    }

    /// Nonzero terms `(i, j, c)` of `R`.
    pub fn terms(&self) -> Vec<(usize, usize, Scalar)> {
        let d = self.dim();
        sparse(&self.element).into_iter().map(|(ix, c)| (ix / d, ix % d, c)).collect()
    }

    pub fn inverse_terms(&self) -> Vec<(usize, usize, Scalar)> {
        let d = self.dim();
        sparse(&self.inverse).into_iter().map(|(ix, c)| (ix / d, ix % d, c)).collect()
    }

    /// `R-bar = R_21^{-1}`.
    pub fn rbar(&self) -> RMatrix {
        let d = self.dim();
        let swap = |v: &Vector| -> Vector { (0..d * d).map(|ix| v[(ix % d) * d + ix / d].clone()).collect() };
        RMatrix { host: self.host.clone(), element: swap(&self.inverse), inverse: swap(&self.element) }
    }

    /// The trivial R-matrix `1 (x) 1`.
    pub fn trivial(host: FinDimHopf) -> RMatrix {
        let u = kron_vec(host.unit(), host.unit());
        RMatrix { host, element: u.clone(), inverse: u }
    }
}

pub fn check_rmatrix(r: &RMatrix) -> VerificationReport {
    let t = &r.host;
    let d = t.dim();
    let f = t.field();
    let a = &t.algebra;
    let mut rep = VerificationReport::new();
    let u = t.unit().to_vec();
    // R placed in legs (p, q) of a triple tensor
    let place = |v: &Vector, p: usize, q: usize| -> Vector {
        let mut out = zero_vec(f, d * d * d);
        for (ix, c) in sparse(v) {
            let (i, j) = (ix / d, ix % d);
            for (ux, uc) in sparse(&u) {
                let mut leg = [0usize; 3];
                leg[p] = i;
                leg[q] = j;
                leg[3 - p - q] = ux;
                out[(leg[0] * d + leg[1]) * d + leg[2]].add_mul(&c, &uc);
            }
        }
        out
    };
    let three = [a, a, a];
    let two = [a, a];
    rep.check("invertible", || {
        let p = tensor_mul(&two, &r.element, &r.inverse);
        let q = tensor_mul(&two, &r.inverse, &r.element);
        let one = tensor_unit(&two);
        witness_if_nonzero(&[0], vec_sub(&p, &one)).or_else(|| witness_if_nonzero(&[1], vec_sub(&q, &one)))
    });
    rep.check("coproduct-left", || {
        // (Delta (x) id)(R) = R13 R23
        let mut lhs = zero_vec(f, d * d * d);
        for (i, j, c) in r.terms() {
            for (a1, a2, x) in t.coalgebra.coproduct_terms(i) {
                lhs[(a1 * d + a2) * d + j].add_mul(&c, x);
            }
        }
        let rhs = tensor_mul(&three, &place(&r.element, 0, 2), &place(&r.element, 1, 2));
        witness_if_nonzero(&[], vec_sub(&lhs, &rhs))
    });
    rep.check("coproduct-right", || {
        // (id (x) Delta)(R) = R13 R12
        let mut lhs = zero_vec(f, d * d * d);
        for (i, j, c) in r.terms() {
            for (b1, b2, x) in t.coalgebra.coproduct_terms(j) {
                lhs[(i * d + b1) * d + b2].add_mul(&c, x);
            }
        }
        let rhs = tensor_mul(&three, &place(&r.element, 0, 2), &place(&r.element, 0, 1));
        witness_if_nonzero(&[], vec_sub(&lhs, &rhs))
    });
    rep.check("counit", || {
        let mut left = zero_vec(f, d);
        let mut right = zero_vec(f, d);
        for (i, j, c) in r.terms() {
            left[j].add_mul(&c, &t.coalgebra.counit()[i]);
            right[i].add_mul(&c, &t.coalgebra.counit()[j]);
        }
        witness_if_nonzero(&[0], vec_sub(&left, &u)).or_else(|| witness_if_nonzero(&[1], vec_sub(&right, &u)))
    });
    rep.check("quasi-cocommutative", || {
        for h in 0..d {
            let delta = t.coalgebra.basis_coproduct(h);
            let cop: Vector = (0..d * d).map(|ix| delta[(ix % d) * d + ix / d].clone()).collect();
            let lhs = tensor_mul(&two, &cop, &r.element);
            let rhs = tensor_mul(&two, &r.element, delta);
            if let Some(w) = witness_if_nonzero(&[h], vec_sub(&lhs, &rhs)) {
                return Some(w);
            }
        }
        None
    });
    let s = &t.antipode;
    let s_inv = t.antipode_inverse();
    let apply_legs = |m1: Option<&Matrix>, m2: Option<&Matrix>| -> Vector {
        let mut out = zero_vec(f, d * d);
        for (i, j, c) in r.terms() {
            let x = m1.map_or_else(|| unit_vec(f, d, i), |m| m.column(i));
            let y = m2.map_or_else(|| unit_vec(f, d, j), |m| m.column(j));
            for (ix, v) in sparse(&kron_vec(&x, &y)) {
                out[ix].add_mul(&c, &v);
            }
        }
        out
    };
    rep.check("antipode-left-inverse", || witness_if_nonzero(&[], vec_sub(&apply_legs(Some(s), None), &r.inverse)));
    rep.check("antipode-right-inverse", || {
        witness_if_nonzero(&[], vec_sub(&apply_legs(None, Some(&s_inv)), &r.inverse))
    });
    rep.check("antipode-both", || witness_if_nonzero(&[], vec_sub(&apply_legs(Some(s), Some(s)), &r.element)));
    rep
}

/// Left module over a finite-dimensional algebra; `action[i]` is the matrix of `e_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleRep {
    field: Field,
    pub dim: usize,
    pub action: Vec<Matrix>,
}

impl ModuleRep {
    pub fn new(field: &Field, dim: usize, action: Vec<Matrix>) -> Self {
        assert!(action.iter().all(|m| m.rows() == dim && m.cols() == dim));
        ModuleRep { field: field.clone(), dim, action }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn host_dim(&self) -> usize {
        self.action.len()
    }

    /// Matrix of an arbitrary host element.
    pub fn act(&self, h: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(&self.field, self.dim, self.dim);
        for (i, c) in sparse(h) {
            m = m.add(&self.action[i].scale(&c));
        }
        m
    }

    pub fn regular(a: &FinDimAlgebra) -> Self {
        let action = (0..a.dim()).map(|i| a.left_mult_matrix(&a.basis(i))).collect();
        ModuleRep::new(a.field(), a.dim(), action)
    }

    /// One-dimensional module through the counit.
    pub fn trivial(h: &FinDimHopf) -> Self {
        let f = h.field();
        let action = h.coalgebra.counit().iter().map(|e| Matrix::from_entries(f, 1, 1, vec![e.clone()])).collect();
        ModuleRep::new(f, 1, action)
    }

    /// Pulls back along an algebra map `phi: B -> A` (columns are images of B's basis).
    pub fn restrict(&self, phi: &Matrix) -> Self {
        let action = (0..phi.cols()).map(|i| self.act(&phi.column(i))).collect();
        ModuleRep::new(&self.field, self.dim, action)
    }

    /// `V (x) W` with `h` acting through `Delta(h)`.
    pub fn tensor(&self, w: &ModuleRep, h: &FinDimHopf) -> Self {
        let action = (0..h.dim())
            .map(|i| {
                let mut m = Matrix::zeros(&self.field, self.dim * w.dim, self.dim * w.dim);
                for (j, k, c) in h.coalgebra.coproduct_terms(i) {
                    m = m.add(&kron(&self.action[*j], &w.action[*k]).scale(c));
                }
                m
            })
            .collect();
        ModuleRep::new(&self.field, self.dim * w.dim, action)
    }

    pub fn direct_sum(&self, w: &ModuleRep) -> Self {
        let n = self.dim + w.dim;
        let action = self
            .action
            .iter()
            .zip(&w.action)
            .map(|(a, b)| {
                Matrix::from_fn(&self.field, n, n, |r, c| {
                    if r < self.dim && c < self.dim {
                        a.get(r, c).clone()
                    } else if r >= self.dim && c >= self.dim {
                        b.get(r - self.dim, c - self.dim).clone()
                    } else {
                        Scalar::zero(&self.field)
                    }
                })
            })
            .collect();
        ModuleRep::new(&self.field, n, action)
    }
}

pub fn check_module(m: &ModuleRep, a: &FinDimAlgebra) -> VerificationReport {
    let mut r = VerificationReport::new();
    r.check("module-associativity", || {
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = m.action[i].mul(&m.action[j]);
                let rhs = m.act(a.basis_product(i, j));
                if let Some(w) = matrix_witness(&[i, j], &lhs, &rhs) {
                    return Some(w);
                }
            }
        }
        None
    });
    r.check("module-unit", || matrix_witness(&[], &m.act(a.unit()), &Matrix::identity(m.field(), m.dim)));
    r
}

/// Left comodule `V -> C (x) V`, stored as a `(dim C * dim V) x dim V` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct ComoduleRep {
    pub dim: usize,
    pub host_dim: usize,
    pub coaction: Matrix,
}

impl ComoduleRep {
    pub fn new(host_dim: usize, dim: usize, coaction: Matrix) -> Self {
        assert_eq!((coaction.rows(), coaction.cols()), (host_dim * dim, dim));
        ComoduleRep { dim, host_dim, coaction }
    }

    pub fn field(&self) -> &Field {
        self.coaction.field()
    }

    /// `v -> 1 (x) v`
    pub fn trivial(h: &FinDimHopf, dim: usize) -> Self {
        let m = kron(&Matrix::from_columns(h.field(), h.dim(), &[h.unit().to_vec()]), &Matrix::identity(h.field(), dim));
        ComoduleRep::new(h.dim(), dim, m)
    }

    /// The regular comodule `Delta`.
    pub fn regular(c: &FinDimCoalgebra) -> Self {
        ComoduleRep::new(c.dim(), c.dim(), c.comult_matrix())
    }

    /// Terms `(host index, v index, coeff)` of `lambda(e_v)`.
    pub fn terms(&self, v: usize) -> Vec<(usize, usize, Scalar)> {
        sparse(&self.coaction.column(v)).into_iter().map(|(ix, c)| (ix / self.dim, ix % self.dim, c)).collect()
    }

    /// Component `V -> V` of the coaction along host basis element `a`.
    pub fn component(&self, a: usize) -> Matrix {
        Matrix::from_fn(self.field(), self.dim, self.dim, |r, c| self.coaction.get(a * self.dim + r, c).clone())
    }

    /// `V (x) W` with `lambda(v (x) w) = v_{-1} w_{-1} (x) v_0 (x) w_0`.
    pub fn tensor(&self, w: &ComoduleRep, h: &FinDimAlgebra) -> Self {
        let f = self.field();
        let n = self.dim * w.dim;
        let mut m = Matrix::zeros(f, h.dim() * n, n);
        for v in 0..self.dim {
            let tv = self.terms(v);
            for x in 0..w.dim {
                for (a, v0, c) in &tv {
                    for (b, x0, e) in w.terms(x) {
                        let ce = c * &e;
                        for (k, p) in h.basis_product_terms(*a, b) {
                            m.add_at(k * n + v0 * w.dim + x0, v * w.dim + x, &(&ce * p));
                        }
                    }
                }
            }
        }
        ComoduleRep::new(h.dim(), n, m)
    }

    pub fn direct_sum(&self, w: &ComoduleRep) -> Self {
        let f = self.field();
        let n = self.dim + w.dim;
        let mut m = Matrix::zeros(f, self.host_dim * n, n);
        for v in 0..self.dim {
            for (a, v0, c) in self.terms(v) {
                m.set(a * n + v0, v, c);
            }
        }
        for v in 0..w.dim {
            for (a, v0, c) in w.terms(v) {
                m.set(a * n + self.dim + v0, self.dim + v, c);
            }
        }
        ComoduleRep::new(self.host_dim, n, m)
    }
}

pub fn check_comodule(m: &ComoduleRep, c: &FinDimCoalgebra) -> VerificationReport {
    let f = m.field();
    let d = c.dim();
    let mut r = VerificationReport::new();
    r.check("comodule-coassociativity", || {
        for v in 0..m.dim {
            let mut lhs = zero_vec(f, d * d * m.dim);
            let mut rhs = zero_vec(f, d * d * m.dim);
            let tv = m.terms(v);
            for (a, v0, x) in &tv {
                for (a1, a2, y) in c.coproduct_terms(*a) {
                    lhs[(a1 * d + a2) * m.dim + v0].add_mul(x, y);
                }
                for (b, v00, y) in m.terms(*v0) {
                    rhs[(a * d + b) * m.dim + v00].add_mul(x, &y);
                }
            }
            if let Some(w) = witness_if_nonzero(&[v], vec_sub(&lhs, &rhs)) {
                return Some(w);
            }
        }
        None
    });
    r.check("comodule-counit", || {
        for v in 0..m.dim {
            let mut out = zero_vec(f, m.dim);
            for (a, v0, x) in m.terms(v) {
                out[v0].add_mul(&x, &c.counit()[a]);
            }
            if let Some(w) = witness_if_nonzero(&[v], vec_sub(&out, &unit_vec(f, m.dim, v))) {
                return Some(w);
            }
        }
        None
    });
    r
}

/// Algebra `K` with a coaction `K -> H (x) K` that is an algebra map.
#[derive(Clone, Debug, PartialEq)]
pub struct ComoduleAlgebra {
    pub algebra: FinDimAlgebra,
    pub coaction: ComoduleRep,
    /// Algebra generators, when known; used by the generator-only solver path.
    pub generators: Option<Vec<Vector>>,
}

impl ComoduleAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }

    /// `lambda(k)` in `H (x) K` kron coordinates.
    pub fn coact(&self, k: &[Scalar]) -> Vector {
        self.coaction.coaction.apply(k)
    }
}

pub fn check_comodule_algebra(k: &ComoduleAlgebra, h: &FinDimHopf) -> VerificationReport {
    let mut r = check_comodule(&k.coaction, &h.coalgebra);
    let algs = [&h.algebra, &k.algebra];
    let d = k.dim();
    r.check("coaction-multiplicative", || {
        for i in 0..d {
            let li = k.coaction.coaction.column(i);
            for j in 0..d {
                let lhs = k.coact(k.algebra.basis_product(i, j));
                let rhs = tensor_mul(&algs, &li, &k.coaction.coaction.column(j));
                if let Some(w) = witness_if_nonzero(&[i, j], vec_sub(&lhs, &rhs)) {
                    return Some(w);
                }
            }
        }
        None
    });
    r.check("coaction-unit", || {
        witness_if_nonzero(&[], vec_sub(&k.coact(k.algebra.unit()), &kron_vec(h.unit(), k.algebra.unit())))
    });
    r.extend(crate::hopf::check_algebra(&k.algebra));
    r
}

#[derive(Clone, Debug, PartialEq)]
pub struct YDModule {
    pub module: ModuleRep,
    pub comodule: ComoduleRep,
}

impl YDModule {
    pub fn dim(&self) -> usize {
        self.module.dim
    }

    pub fn direct_sum(&self, other: &YDModule) -> YDModule {
        YDModule { module: self.module.direct_sum(&other.module), comodule: self.comodule.direct_sum(&other.comodule) }
    }
}

/// `lambda(h.v) = h_1 v_{-1} S(h_3) (x) h_2 . v_0` on all basis pairs.
pub fn check_yd(y: &YDModule, h: &FinDimHopf) -> VerificationReport {
    let mut r = check_module(&y.module, &h.algebra);
    r.extend(check_comodule(&y.comodule, &h.coalgebra));
    r.check("yd-compatibility", || yd_residual(y, h));
    r
}

fn yd_residual(y: &YDModule, h: &FinDimHopf) -> Option<Value> {
    let f = h.field();
    let d = h.dim();
    let n = y.dim();
    for hb in 0..d {
        let triple = h.coalgebra.double_coproduct_terms(hb);
        for v in 0..n {
            let hv = y.module.action[hb].column(v);
            let lhs = y.comodule.coaction.apply(&hv);
            let mut rhs = zero_vec(f, d * n);
            for (a, b, c, x) in &triple {
                let s3 = h.antipode.column(*c);
                for (t, v0, cv) in y.comodule.terms(v) {
                    let left = h.mul(&h.mul(&h.basis(*a), &h.basis(t)), &s3);
                    let right = y.module.action[*b].column(v0);
                    let coef = x * &cv;
                    for (i, p) in sparse(&left) {
                        for (j, q) in sparse(&right) {
                            rhs[i * n + j].add_mul(&coef, &(&p * &q));
                        }
                    }
                }
            }
            if let Some(w) = witness_if_nonzero(&[hb, v], vec_sub(&lhs, &rhs)) {
                return Some(w);
            }
        }
    }
    None
}

/// Flip `V (x) W -> W (x) V`.
pub fn flip(f: &Field, dv: usize, dw: usize) -> Matrix {
    let mut m = Matrix::zeros(f, dw * dv, dv * dw);
    for v in 0..dv {
        for w in 0..dw {
            m.set(w * dv + v, v * dw + w, Scalar::one(f));
        }
    }
    m
}

/// `sigma_{V,W}(v (x) w) = R^2 . w (x) R^1 . v`.
pub fn braiding(r: &RMatrix, v: &ModuleRep, w: &ModuleRep) -> Matrix {
    let f = r.field();
    let mut m = Matrix::zeros(f, w.dim * v.dim, v.dim * w.dim);
    for (i, j, c) in r.terms() {
        m = m.add(&kron(&w.action[j], &v.action[i]).scale(&c).mul(&flip(f, v.dim, w.dim)));
    }
    m
}

/// `sigma^{-1}_{V,W}(w (x) v) = S(R^1) . v (x) R^2 . w`, a map `W (x) V -> V (x) W`.
pub fn braiding_inverse(r: &RMatrix, v: &ModuleRep, w: &ModuleRep) -> Matrix {
    let f = r.field();
    let mut m = Matrix::zeros(f, v.dim * w.dim, w.dim * v.dim);
    for (i, j, c) in r.terms() {
        let s1 = v.act(&r.host.antipode.column(i));
        m = m.add(&kron(&s1, &w.action[j]).scale(&c).mul(&flip(f, w.dim, v.dim)));
    }
    m
}

/// `c(v (x) x) = v_{-1} . x (x) v_0`, a map `A (x) B -> B (x) A`.
pub fn yd_braiding(a: &YDModule, b: &YDModule) -> Matrix {
    let f = a.module.field();
    let (da, db) = (a.dim(), b.dim());
    let mut m = Matrix::zeros(f, db * da, da * db);
    for v in 0..da {
        for (t, v0, c) in a.comodule.terms(v) {
            let act = &b.module.action[t];
            for x in 0..db {
                for y in 0..db {
                    let e = act.get(y, x);
                    if !e.is_zero() {
                        m.add_at(y * da + v0, v * db + x, &(&c * e));
                    }
                }
            }
        }
    }
    m
}

/// Right dual `V*` with evaluation `V* (x) V -> k` and coevaluation `k -> V (x) V*`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualModule {
    pub module: ModuleRep,
    /// `ev(f_i (x) v_j)` at `i * dim + j`.
    pub ev: Vector,
    /// `coev(1)` in `V (x) V*`.
    pub coev: Vector,
}

/// `(t . f)(x) = f(S(t) x)` on the dual basis.
pub fn dual_module(v: &ModuleRep, h: &FinDimHopf) -> DualModule {
    let f = v.field();
    let action = (0..h.dim()).map(|i| v.act(&h.antipode.column(i)).transpose()).collect();
    let n = v.dim;
    let id: Vector = Matrix::identity(f, n).entries().to_vec();
    DualModule { module: ModuleRep::new(f, n, action), ev: id.clone(), coev: id }
}

/// Zig-zag identities and equivariance of `ev` and `coev`.
pub fn check_dual(d: &DualModule, v: &ModuleRep, h: &FinDimHopf) -> VerificationReport {
    let f = v.field();
    let n = v.dim;
    let mut r = VerificationReport::new();
    let ev = Matrix::from_entries(f, 1, n * n, d.ev.clone());
    let coev = Matrix::from_entries(f, n * n, 1, d.coev.clone());
    let idv = Matrix::identity(f, n);
    r.check("zigzag-v", || {
        // (id_V (x) ev)(coev (x) id_V) = id_V
        let m = kron(&idv, &ev).mul(&kron(&coev, &idv));
        matrix_witness(&[], &m, &idv)
    });
    r.check("zigzag-dual", || {
        // (ev (x) id_{V*})(id_{V*} (x) coev) = id_{V*}
        let m = kron(&ev, &idv).mul(&kron(&idv, &coev));
        matrix_witness(&[], &m, &idv)
    });
    let dv = d.module.tensor(v, h);
    let vd = v.tensor(&d.module, h);
    let triv = ModuleRep::trivial(h);
    r.check("ev-equivariant", || {
        for i in 0..h.dim() {
            if let Some(w) = matrix_witness(&[i], &ev.mul(&dv.action[i]), &triv.action[i].mul(&ev)) {
                return Some(w);
            }
        }
        None
    });
    r.check("coev-equivariant", || {
        for i in 0..h.dim() {
            if let Some(w) = matrix_witness(&[i], &vd.action[i].mul(&coev), &coev.mul(&triv.action[i])) {
                return Some(w);
            }
        }
        None
    });
    r
}

/// Basis of `Hom_A(V, W)` as `dim W x dim V` matrices.
pub fn hom_space(v: &ModuleRep, w: &ModuleRep) -> Vec<Matrix> {
    let f = v.field();
    let (dv, dw) = (v.dim, w.dim);
    let mut red = RowReducer::new(f, dw * dv);
    // f * act_V(e_i) - act_W(e_i) * f = 0, variable (r, c) of f at r * dv + c
    for (av, aw) in v.action.iter().zip(&w.action) {
        push_intertwiner_rows(&mut red, av, aw, dv, dw);
    }
    red.kernel().vectors().iter().map(|x| Matrix::from_entries(f, dw, dv, x.clone())).collect()
}

fn push_intertwiner_rows(red: &mut RowReducer, av: &Matrix, aw: &Matrix, dv: usize, dw: usize) {
    for r in 0..dw {
        for c in 0..dv {
            let mut row = Vec::new();
            for k in 0..dv {
                let x = av.get(k, c);
                if !x.is_zero() {
                    row.push((r * dv + k, x.clone()));
                }
            }
            for k in 0..dw {
                let x = aw.get(r, k);
                if !x.is_zero() {
                    row.push((k * dv + c, -x));
                }
            }
            red.insert(row);
        }
    }
}

/// Basis of YD morphisms `V -> W`.
pub fn yd_hom_space(v: &YDModule, w: &YDModule) -> Vec<Matrix> {
    let f = v.module.field();
    let (dv, dw) = (v.dim(), w.dim());
    let mut red = RowReducer::new(f, dw * dv);
    for (av, aw) in v.module.action.iter().zip(&w.module.action) {
        push_intertwiner_rows(&mut red, av, aw, dv, dw);
    }
    // colinearity: (id (x) f) lambda_V = lambda_W f, componentwise over the host basis
    for t in 0..v.comodule.host_dim {
        push_intertwiner_rows(&mut red, &v.comodule.component(t), &w.comodule.component(t), dv, dw);
    }
    red.kernel().vectors().iter().map(|x| Matrix::from_entries(f, dw, dv, x.clone())).collect()
}

/// Invertibility of a square matrix as a report witness.
pub(crate) fn invertible_witness(m: &Matrix) -> Option<Value> {
    let k = kernel_basis(m);
    if m.rows() == m.cols() && k.dim() == 0 {
        None
    } else {
        Some(serde_json::json!({ "kernel_dim": k.dim(), "rows": m.rows(), "cols": m.cols() }))
    }
}

pub(crate) fn eq_witness(indices: &[usize], a: &Matrix, b: &Matrix) -> Option<Value> {
    matrix_witness(indices, a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{group_algebra_cn, r_matrix_cn};
    use crate::scalar::{rational, zeta_power};

    #[test]
    fn rmatrix_suite_small_n() {
        for n in 1..=4 {
            let r = r_matrix_cn(n);
            let rep = check_rmatrix(&r);
            assert!(rep.all_passed(), "n = {}: {:?}", n, rep.failures().collect::<Vec<_>>());
        }
        assert!(check_rmatrix(&RMatrix::trivial(group_algebra_cn(3))).all_passed());
    }

    #[test]
    fn n2_rmatrix_coefficients() {
        let r = r_matrix_cn(2);
        let f = r.field().clone();
        let half = Scalar::from_rational(&f, rational(1, 2));
        assert_eq!(r.element, vec![half.clone(), half.clone(), half.clone(), -half]);
    }

    #[test]
    fn sign_flip_breaks_coproduct_axioms() {
        let mut r = r_matrix_cn(3);
        r.element[4] = -r.element[4].clone();
        let r = RMatrix::new(r.host.clone(), r.element.clone()).unwrap();
        let rep = check_rmatrix(&r);
        // kC_3 is commutative and cocommutative, so only the coproduct laws can see it
        assert_eq!(rep.status_of("quasi-cocommutative"), Some(crate::report::Status::Pass));
        assert_eq!(rep.status_of("coproduct-left"), Some(crate::report::Status::Fail));
    }

    #[test]
    fn trivial_rmatrix_braiding_is_flip() {
        let t = group_algebra_cn(3);
        let r = RMatrix::trivial(t.clone());
        let v = ModuleRep::regular(&t.algebra);
        assert_eq!(braiding(&r, &v, &v), flip(t.field(), 3, 3));
    }

    #[test]
    fn braiding_on_characters_n2() {
        // g acts by q = -1 on a line: sigma = (1/2) sum_{ij} (-1)^{ij} (-1)^i (-1)^j = -1
        let t = group_algebra_cn(2);
        let r = r_matrix_cn(2);
        let f = t.field().clone();
        let chi = ModuleRep::new(
            &f,
            1,
            vec![Matrix::identity(&f, 1), Matrix::from_entries(&f, 1, 1, vec![zeta_power(&f, 1)])],
        );
        let s = braiding(&r, &chi, &chi);
        assert_eq!(s.get(0, 0), &Scalar::from_int(&f, -1));
    }

    #[test]
    fn braiding_inverse_law_n3() {
        let t = group_algebra_cn(3);
        let r = r_matrix_cn(3);
        let v = ModuleRep::regular(&t.algebra);
        let s = braiding(&r, &v, &v);
        let si = braiding_inverse(&r, &v, &v);
        assert!(s.mul(&si).is_identity());
        assert!(si.mul(&s).is_identity());
    }

    #[test]
    fn duals_of_group_modules() {
        let t = group_algebra_cn(3);
        let triv = ModuleRep::trivial(&t);
        assert_eq!(dual_module(&triv, &t).module, triv);
        let reg = ModuleRep::regular(&t.algebra);
        let d = dual_module(&reg, &t);
        assert!(check_dual(&d, &reg, &t).all_passed());
        assert!(check_module(&d.module, &t.algebra).all_passed());
    }

    #[test]
    fn trivial_coaction_yd_braiding_is_flip() {
        let t = group_algebra_cn(2);
        let reg = ModuleRep::regular(&t.algebra);
        let y = YDModule { module: reg.clone(), comodule: ComoduleRep::trivial(&t, 2) };
        assert!(check_yd(&y, &t).all_passed());
        assert_eq!(yd_braiding(&y, &y), flip(t.field(), 2, 2));
    }

    #[test]
    fn hom_space_of_regular_group_module() {
        let t = group_algebra_cn(3);
        let reg = ModuleRep::regular(&t.algebra);
        // End(kC_3) as a module is kC_3 itself (right multiplications)
        assert_eq!(hom_space(&reg, &reg).len(), 3);
        assert_eq!(hom_space(&reg, &ModuleRep::trivial(&t)).len(), 1);
    }
}
