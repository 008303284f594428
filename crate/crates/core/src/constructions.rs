//! Concrete objects: `(kC_n, R_q)`, the braided line `k[x]/(x^n)`, its bosonization
//! (the Taft algebra), and the comodule algebras `K(d, xi)`, `kC_d`, `k1`, `H#T`.
//!
//! Basis orders: Taft monomials `x^a g^b` at `a*n + b`; `K(d, xi)` monomials
//! `h^a w^b` at `a*n + b`.

use serde_json::{json, Value};
use thiserror::Error;

use crate::braiding::{braiding, check_comodule_algebra, check_module, ComoduleAlgebra, ComoduleRep, ModuleRep, RMatrix};
use crate::hopf::{
    check_algebra, check_antipode, check_coalgebra, is_algebra_map, is_coalgebra_map, residual_witness,
    solve_antipode, tensor_mul, witness_if_nonzero, FinDimAlgebra, FinDimCoalgebra, FinDimHopf, HopfError,
};
use crate::linalg::{kron_vec, sparse, unit_vec, vec_add, vec_sub, zero_vec, Matrix, RowReducer, Vector};
use crate::report::VerificationReport;
use crate::scalar::{make_field, rational_to_string, zeta_power, Field, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("d = {d} does not divide n = {n}")]
    NotDivisor { n: usize, d: usize },
    #[error("n must be at least {0}")]
    TooSmall(usize),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error("constructed object fails its axioms: {0}")]
    Check(String),
}

fn first_failure(r: &VerificationReport) -> Result<(), ConstructionError> {
    match r.failures().next() {
        Some(e) => Err(ConstructionError::Check(e.claim_id.clone())),
        None => Ok(()),
    }
}

/// Group algebra `kC_n` over `Q(zeta_n)`, basis `g^0..g^{n-1}`.
pub fn group_algebra_cn(n: usize) -> FinDimHopf {
    assert!(n >= 1);
    let f = make_field(n);
    let alg = FinDimAlgebra::from_fn(&f, n, |i, j| unit_vec(&f, n, (i + j) % n), unit_vec(&f, n, 0));
    let coalg = FinDimCoalgebra::new(
        &f,
        n,
        (0..n).map(|i| unit_vec(&f, n * n, i * n + i)).collect(),
        vec![Scalar::one(&f); n],
    );
    FinDimHopf::new(alg, coalg).expect("group algebras are Hopf algebras")
}

/// `R_q = (1/n) sum_{i,j} q^{-ij} g^i (x) g^j` with `q = zeta_n`.
pub fn r_matrix_cn(n: usize) -> RMatrix {
    r_matrix_over(group_algebra_cn(n))
}

fn r_matrix_over(t: FinDimHopf) -> RMatrix {
    let n = t.dim();
    let f = t.field().clone();
    let inv_n = Scalar::from_rational(&f, Rational::new(1.into(), (n as i64).into()));
    let element = (0..n * n).map(|ix| &inv_n * &zeta_power(&f, -((ix / n * (ix % n)) as i64))).collect();
    RMatrix::new(t, element).expect("R_q is invertible")
}

/// Gaussian binomial `(a choose k)_q` by the q-Pascal recurrence.
pub fn gaussian_binomial(f: &Field, a: usize, k: usize) -> Scalar {
    if k > a {
        return Scalar::zero(f);
    }
    let mut row = vec![Scalar::one(f)];
    for m in 1..=a {
        let mut next = vec![Scalar::zero(f); m + 1];
        for j in 0..=m {
            if j <= m - 1 {
                next[j] += &(&zeta_power(f, j as i64) * &row[j]);
            }
            if j >= 1 {
                next[j] += &row[j - 1];
            }
        }
        row = next;
    }
    row[k].clone()
}

/// A Hopf algebra in `Rep(T)`: structure maps plus the `T`-action.
#[derive(Clone, Debug, PartialEq)]
pub struct BraidedHopf {
    pub algebra: FinDimAlgebra,
    pub coalgebra: FinDimCoalgebra,
    pub tmodule: ModuleRep,
    pub braided_antipode: Matrix,
}

impl BraidedHopf {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }
}

/// Product on `H (x) H`: `(a (x) b)(c (x) d) = a sigma(b (x) c) d`.
pub fn braided_tensor_mul(h: &FinDimAlgebra, sigma: &Matrix, x: &[Scalar], y: &[Scalar]) -> Vector {
    let d = h.dim();
    let f = h.field();
    let mut out = zero_vec(f, d * d);
    for (ix, p) in sparse(x) {
        let (a, b) = (ix / d, ix % d);
        for (iy, q) in sparse(y) {
            let (c, e) = (iy / d, iy % d);
            let pq = &p * &q;
            let col = sigma.column(b * d + c);
            for (s, sv) in sparse(&col) {
                let (c2, b2) = (s / d, s % d);
                let coef = &pq * &sv;
                for (l, lv) in h.basis_product_terms(a, c2) {
                    for (rr, rv) in h.basis_product_terms(b2, e) {
                        out[l * d + rr].add_mul(&coef, &(lv * rv));
                    }
                }
            }
        }
    }
    out
}

/// `H = k[x]/(x^n)` in `Rep(kC_n)` with `g . x = q x`, `Delta(x) = x (x) 1 + 1 (x) x`.
pub fn braided_line(n: usize) -> BraidedHopf {
    braided_line_over(&r_matrix_cn(n))
}

pub fn braided_line_over(r: &RMatrix) -> BraidedHopf {
    let n = r.dim();
    let f = r.field().clone();
    let algebra = FinDimAlgebra::from_fn(
        &f,
        n,
        |a, b| if a + b < n { unit_vec(&f, n, a + b) } else { zero_vec(&f, n) },
        unit_vec(&f, n, 0),
    );
    let action = (0..n)
        .map(|i| Matrix::from_fn(&f, n, n, |r, c| if r == c { zeta_power(&f, (i * c) as i64) } else { Scalar::zero(&f) }))
        .collect();
    let tmodule = ModuleRep::new(&f, n, action);
    let sigma = braiding(r, &tmodule, &tmodule);
    let mut comult = vec![unit_vec(&f, n * n, 0)];
    if n > 1 {
        let mut dx = zero_vec(&f, n * n);
        dx[n] = Scalar::one(&f);
        dx[1] = Scalar::one(&f);
        for _ in 1..n {
            let next = braided_tensor_mul(&algebra, &sigma, comult.last().unwrap(), &dx);
            comult.push(next);
        }
    }
    let counit = unit_vec(&f, n, 0);
    let coalgebra = FinDimCoalgebra::new(&f, n, comult, counit);
    let braided_antipode = solve_antipode(&algebra, &coalgebra).expect("the braided line has an antipode");
    BraidedHopf { algebra, coalgebra, tmodule, braided_antipode }
}

/// Axioms of a Hopf algebra in `Rep(T)` with the braiding of `r`.
pub fn check_braided_hopf(h: &BraidedHopf, r: &RMatrix) -> VerificationReport {
    let t = &r.host;
    let d = h.dim();
    let f = h.field().clone();
    let mut rep = check_algebra(&h.algebra);
    rep.extend(check_coalgebra(&h.coalgebra));
    rep.extend(check_module(&h.tmodule, &t.algebra));
    let sigma = braiding(r, &h.tmodule, &h.tmodule);
    rep.check("comult-braided-multiplicative", || {
        for i in 0..d {
            for j in 0..d {
                let lhs = h.coalgebra.coproduct(h.algebra.basis_product(i, j));
                let rhs = braided_tensor_mul(
                    &h.algebra,
                    &sigma,
                    h.coalgebra.basis_coproduct(i),
                    h.coalgebra.basis_coproduct(j),
                );
                if let Some(w) = witness_if_nonzero(&[i, j], vec_sub(&lhs, &rhs)) {
                    return Some(w);
                }
            }
        }
        None
    });
    rep.check("counit-multiplicative", || {
        for i in 0..d {
            for j in 0..d {
                let lhs = h.coalgebra.counit_of(h.algebra.basis_product(i, j));
                let rhs = &h.coalgebra.counit()[i] * &h.coalgebra.counit()[j];
                if lhs != rhs {
                    return Some(residual_witness(&[i, j], &[&lhs - &rhs]));
                }
            }
        }
        None
    });
    let hh = h.tmodule.tensor(&h.tmodule, t);
    let mult = h.algebra.mult_matrix();
    let comult = h.coalgebra.comult_matrix();
    rep.check("structure-maps-equivariant", || {
        for ti in 0..t.dim() {
            let act = &h.tmodule.action[ti];
            let checks = [
                (0, mult.mul(&hh.action[ti]), act.mul(&mult)),
                (1, comult.mul(act), hh.action[ti].mul(&comult)),
                (2, h.braided_antipode.mul(act), act.mul(&h.braided_antipode)),
            ];
            for (which, a, b) in checks.iter() {
                if let Some(w) = crate::braiding::eq_witness(&[ti, *which], a, b) {
                    return Some(w);
                }
            }
            let u = act.apply(h.algebra.unit());
            let eu: Vector = h.algebra.unit().iter().map(|x| x * &t.coalgebra.counit()[ti]).collect();
            if let Some(w) = witness_if_nonzero(&[ti, 3], vec_sub(&u, &eu)) {
                return Some(w);
            }
            for x in 0..d {
                let lhs = h.coalgebra.counit_of(&act.column(x));
                let rhs = &t.coalgebra.counit()[ti] * &h.coalgebra.counit()[x];
                if lhs != rhs {
                    return Some(residual_witness(&[ti, 4, x], &[&lhs - &rhs]));
                }
            }
        }
        None
    });
    let as_hopf = FinDimHopf {
        algebra: h.algebra.clone(),
        coalgebra: h.coalgebra.clone(),
        antipode: h.braided_antipode.clone(),
    };
    rep.extend(check_antipode(&as_hopf));
    rep.check("q-binomial-coefficients", || {
        for a in 0..d {
            for k in 0..=a {
                let c = &h.coalgebra.basis_coproduct(a)[k * d + (a - k)];
                let expect = gaussian_binomial(&f, a, k);
                if c != &expect {
                    return Some(residual_witness(&[a, k], &[c - &expect]));
                }
            }
        }
        None
    });
    rep
}

/// Smash product algebra and smash coproduct coalgebra on `H (x) T`, index `a * dim T + b`.
pub fn bosonization_parts(h: &BraidedHopf, t: &FinDimHopf, r: &RMatrix) -> (FinDimAlgebra, FinDimCoalgebra) {
    let f = h.field().clone();
    let (dh, dt) = (h.dim(), t.dim());
    let n = dh * dt;
    let algebra = FinDimAlgebra::from_fn(
        &f,
        n,
        |i, j| {
            let (a, b) = (i / dt, i % dt);
            let (c, e) = (j / dt, j % dt);
            // (h # t)(y # r) = h (t_1 . y) # t_2 r
            let mut out = zero_vec(&f, n);
            for (t1, t2, coef) in t.coalgebra.coproduct_terms(b) {
                let ty = h.tmodule.action[*t1].column(c);
                let hy = h.algebra.mul(&h.algebra.basis(a), &ty);
                let tr = t.algebra.basis_product(*t2, e);
                for (ix, v) in sparse(&kron_vec(&hy, tr)) {
                    out[ix].add_mul(coef, &v);
                }
            }
            out
        },
        kron_vec(h.algebra.unit(), t.unit()),
    );
    let rterms = r.terms();
    let comult = (0..n)
        .map(|i| {
            let (a, b) = (i / dt, i % dt);
            // Delta(h # t) = h_1 # R^2 t_1 (x) R^1 . h_2 # t_2
            let mut out = zero_vec(&f, n * n);
            for (h1, h2, ch) in h.coalgebra.coproduct_terms(a) {
                for (t1, t2, ct) in t.coalgebra.coproduct_terms(b) {
                    for (ri, rj, cr) in &rterms {
                        let left = kron_vec(&h.algebra.basis(*h1), t.algebra.basis_product(*rj, *t1));
                        let right = kron_vec(&h.tmodule.action[*ri].column(*h2), &t.basis(*t2));
                        let coef = &(ch * ct) * cr;
                        for (l, lv) in sparse(&left) {
                            for (rr, rv) in sparse(&right) {
                                out[l * n + rr].add_mul(&coef, &(&lv * &rv));
                            }
                        }
                    }
                }
            }
            out
        })
        .collect();
    let counit = kron_vec(h.coalgebra.counit(), t.coalgebra.counit());
    (algebra, FinDimCoalgebra::new(&f, n, comult, counit))
}

/// `H # T` as an ordinary Hopf algebra; the antipode is solved, not transcribed.
pub fn bosonization(h: &BraidedHopf, t: &FinDimHopf, r: &RMatrix) -> Result<FinDimHopf, HopfError> {
    let (a, c) = bosonization_parts(h, t, r);
    FinDimHopf::new(a, c)
}

/// Relations of `T_q = <g, x | gx = q xg, g^n = 1, x^n = 0>`, its coproduct, and the
/// linear independence of the monomials `x^a g^b`.
pub fn taft_presentation_check(a: &FinDimAlgebra, c: &FinDimCoalgebra, n: usize) -> VerificationReport {
    let mut rep = VerificationReport::new();
    if n < 2 || a.dim() != n * n {
        rep.skip("taft-presentation", "needs n >= 2 and dimension n^2");
        return rep;
    }
    let f = a.field().clone();
    let x = a.basis(n);
    let g = a.basis(1);
    let q = zeta_power(&f, 1);
    let one = a.unit().to_vec();
    rep.check("gx=qxg", || {
        let lhs = a.mul(&g, &x);
        let rhs: Vector = a.mul(&x, &g).iter().map(|s| s * &q).collect();
        witness_if_nonzero(&[], vec_sub(&lhs, &rhs))
    });
    rep.check("g^n=1", || witness_if_nonzero(&[], vec_sub(&a.pow(&g, n), &one)));
    rep.check("x^n=0", || witness_if_nonzero(&[], a.pow(&x, n)));
    rep.check("coproduct-g", || witness_if_nonzero(&[], vec_sub(&c.coproduct(&g), &kron_vec(&g, &g))));
    rep.check("coproduct-x", || {
        let expect = vec_add(&kron_vec(&x, &one), &kron_vec(&g, &x));
        witness_if_nonzero(&[], vec_sub(&c.coproduct(&x), &expect))
    });
    rep.check("counit-generators", || {
        let ex = c.counit_of(&x);
        let eg = c.counit_of(&g);
        if !ex.is_zero() || !eg.is_one() {
            Some(residual_witness(&[], &[ex, &eg - &Scalar::one(&f)]))
        } else {
            None
        }
    });
    rep.check("monomials-independent", || {
        let mut red = RowReducer::new(&f, n * n);
        let mut monomials = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let m = a.mul(&a.pow(&x, i), &a.pow(&g, j));
                red.insert(sparse(&m));
                monomials.push(m);
            }
        }
        if red.rank() == n * n {
            // the contractual basis order is x^a g^b at a*n + b
            for (ix, m) in monomials.iter().enumerate() {
                if m != &unit_vec(&f, n * n, ix) {
                    return Some(json!({ "monomial": ix, "expected_basis_vector": ix }));
                }
            }
            None
        } else {
            Some(json!({ "rank": red.rank(), "expected": n * n }))
        }
    });
    rep
}

/// Everything built over `(kC_n, R_q)` for one `n`.
#[derive(Clone, Debug)]
pub struct TaftSetup {
    pub n: usize,
    pub group: FinDimHopf,
    pub r: RMatrix,
    pub line: BraidedHopf,
    pub taft: FinDimHopf,
    /// `pi: H#T -> T`, `pi(x^a g^b) = delta_{a,0} g^b`.
    pub pi: Matrix,
    /// `T -> H#T`, `t -> 1 # t`.
    pub iota: Matrix,
    /// `H -> H#T`, `h -> h # 1`.
    pub inc_h: Matrix,
}

impl TaftSetup {
    pub fn new(n: usize) -> Result<TaftSetup, ConstructionError> {
        if n < 1 {
            return Err(ConstructionError::TooSmall(1));
        }
        let r = r_matrix_cn(n);
        let group = r.host.clone();
        let line = braided_line_over(&r);
        let taft = bosonization(&line, &group, &r)?;
        let f = group.field().clone();
        let pi = projection_pi_matrix(&f, n);
        let iota = Matrix::from_fn(&f, n * n, n, |row, c| if row == c { Scalar::one(&f) } else { Scalar::zero(&f) });
        let inc_h = Matrix::from_fn(&f, n * n, n, |row, c| if row == c * n { Scalar::one(&f) } else { Scalar::zero(&f) });
        Ok(TaftSetup { n, group, r, line, taft, pi, iota, inc_h })
    }

    pub fn field(&self) -> &Field {
        self.taft.field()
    }

    pub fn q(&self) -> Scalar {
        zeta_power(self.field(), 1)
    }

    /// Index of `x^a g^b`.
    pub fn taft_index(&self, a: usize, b: usize) -> usize {
        a * self.n + (b % self.n)
    }

    /// The regular `H#T`-module.
    pub fn regular_module(&self) -> ModuleRep {
        ModuleRep::regular(&self.taft.algebra)
    }

    pub fn trivial_module(&self) -> ModuleRep {
        ModuleRep::trivial(&self.taft)
    }

    /// A `T`-module viewed as an `H#T`-module through `pi`.
    pub fn pi_module(&self, v: &ModuleRep) -> ModuleRep {
        v.restrict(&self.pi)
    }
}

fn projection_pi_matrix(f: &Field, n: usize) -> Matrix {
    Matrix::from_fn(f, n, n * n, |row, col| if col < n && col == row { Scalar::one(f) } else { Scalar::zero(f) })
}

/// `pi: Taft -> kC_n`.
pub fn projection_pi(n: usize) -> Matrix {
    projection_pi_matrix(&make_field(n), n)
}

pub fn check_projection(s: &TaftSetup) -> VerificationReport {
    let mut rep = VerificationReport::new();
    rep.check("pi-algebra-map", || is_algebra_map(&s.pi, &s.taft.algebra, &s.group.algebra));
    rep.check("pi-coalgebra-map", || is_coalgebra_map(&s.pi, &s.taft.coalgebra, &s.group.coalgebra));
    rep.check("pi-antipode", || {
        crate::braiding::eq_witness(&[], &s.pi.mul(&s.taft.antipode), &s.group.antipode.mul(&s.pi))
    });
    rep.check("pi-splits-inclusion", || {
        crate::braiding::eq_witness(&[], &s.pi.mul(&s.iota), &Matrix::identity(s.field(), s.n))
    });
    rep
}

/// `K(d, xi)`: `h^d = 1`, `w^n = xi`, `hw = q^m wh`, with `lambda(h) = g^m (x) h` and
/// `lambda(w) = x (x) 1 + g (x) w`.
#[derive(Clone, Debug)]
pub struct ComoduleAlgebraK {
    pub n: usize,
    pub d: usize,
    pub m: usize,
    pub xi: Rational,
    pub comod: ComoduleAlgebra,
}

impl ComoduleAlgebraK {
    /// Index of `h^a w^b`.
    pub fn index(&self, a: usize, b: usize) -> usize {
        (a % self.d) * self.n + b
    }

    pub fn h(&self) -> Vector {
        self.comod.algebra.basis(self.index(1, 0))
    }

    pub fn w(&self) -> Vector {
        if self.n == 1 {
            // w = w^1 = xi
            return self.comod.algebra.unit().iter().map(|u| u.scale(&self.xi)).collect();
        }
        self.comod.algebra.basis(self.index(0, 1))
    }

    pub fn h_inverse(&self) -> Vector {
        self.comod.algebra.basis(self.index(self.d - 1, 0))
    }

    /// Right H#T-simplicity is not decided by the constructor, so `simple` is always `null`.
    pub fn describe(&self) -> Value {
        json!({ "n": self.n, "d": self.d, "m": self.m, "xi": rational_to_string(&self.xi), "simple": Value::Null })
    }
}

pub fn comodule_algebra_k(s: &TaftSetup, d: usize, xi: Rational) -> Result<ComoduleAlgebraK, ConstructionError> {
    let n = s.n;
    if d == 0 || n % d != 0 {
        return Err(ConstructionError::NotDivisor { n, d });
    }
    let m = n / d;
    let f = s.field().clone();
    let dim = d * n;
    let xi_s = Scalar::from_rational(&f, xi.clone());
    let algebra = FinDimAlgebra::from_fn(
        &f,
        dim,
        |i, j| {
            let (a, b) = (i / n, i % n);
            let (c, e) = (j / n, j % n);
            // h^a w^b h^c w^e = q^{-mbc} h^{a+c} w^{b+e}
            let mut coef = zeta_power(&f, -((m * b * c) as i64));
            let mut pw = b + e;
            if pw >= n {
                coef = &coef * &xi_s;
                pw -= n;
            }
            let mut out = zero_vec(&f, dim);
            out[((a + c) % d) * n + pw] = coef;
            out
        },
        unit_vec(&f, dim, 0),
    );
    let taft = &s.taft;
    let nt = taft.dim();
    let algs = [&taft.algebra, &algebra];
    // generators
    let h = algebra.basis(if d > 1 { n } else { 0 });
    let w: Vector = if n > 1 {
        algebra.basis(1)
    } else {
        algebra.unit().iter().map(|u| u * &xi_s).collect()
    };
    let lam_h = kron_vec(&taft.basis(s.taft_index(0, m)), &h);
    let lam_w = if n == 1 {
        kron_vec(taft.unit(), &w)
    } else {
        vec_add(&kron_vec(&taft.basis(s.taft_index(1, 0)), algebra.unit()), &kron_vec(&taft.basis(s.taft_index(0, 1)), &w))
    };
    let unit = kron_vec(taft.unit(), algebra.unit());
    let mut columns = vec![zero_vec(&f, nt * dim); dim];
    let mut lam_ha = unit.clone();
    for a in 0..d {
        let mut cur = lam_ha.clone();
        for b in 0..n {
            columns[a * n + b] = cur.clone();
            cur = tensor_mul(&algs, &cur, &lam_w);
        }
        lam_ha = tensor_mul(&algs, &lam_ha, &lam_h);
    }
    let coaction = ComoduleRep::new(nt, dim, Matrix::from_columns(&f, nt * dim, &columns));
    let comod = ComoduleAlgebra { algebra, coaction, generators: Some(vec![h, w]) };
    first_failure(&check_comodule_algebra(&comod, taft))?;
    Ok(ComoduleAlgebraK { n, d, m, xi, comod })
}

/// `k1` with `lambda(1) = 1 (x) 1`.
pub fn trivial_comodule_algebra(s: &TaftSetup) -> ComoduleAlgebra {
    let f = s.field().clone();
    let algebra = FinDimAlgebra::new(&f, 1, vec![vec![Scalar::one(&f)]], vec![Scalar::one(&f)]);
    let coaction = ComoduleRep::trivial(&s.taft, 1);
    ComoduleAlgebra { algebra, coaction, generators: Some(vec![]) }
}

/// `H#T` coacting on itself by `Delta`.
pub fn regular_comodule_algebra(s: &TaftSetup) -> ComoduleAlgebra {
    let n = s.n;
    let mut gens = vec![s.taft.basis(s.taft_index(0, 1))];
    if n > 1 {
        gens.push(s.taft.basis(s.taft_index(1, 0)));
    }
    ComoduleAlgebra {
        algebra: s.taft.algebra.clone(),
        coaction: ComoduleRep::regular(&s.taft.coalgebra),
        generators: Some(gens),
    }
}

/// `kC_d` inside the Taft algebra via `g_d -> g^m`, coacting by `lambda(g_d^a) = g^{ma} (x) g_d^a`.
pub fn coideal_comodule_algebra(s: &TaftSetup, d: usize) -> Result<ComoduleAlgebra, ConstructionError> {
    let n = s.n;
    if d == 0 || n % d != 0 {
        return Err(ConstructionError::NotDivisor { n, d });
    }
    let m = n / d;
    let f = s.field().clone();
    let nt = s.taft.dim();
    let algebra = FinDimAlgebra::from_fn(&f, d, |i, j| unit_vec(&f, d, (i + j) % d), unit_vec(&f, d, 0));
    let columns: Vec<Vector> = (0..d).map(|a| kron_vec(&s.taft.basis(s.taft_index(0, m * a)), &unit_vec(&f, d, a))).collect();
    let coaction = ComoduleRep::new(nt, d, Matrix::from_columns(&f, nt * d, &columns));
    let gens = if d > 1 { vec![unit_vec(&f, d, 1)] } else { vec![] };
    Ok(ComoduleAlgebra { algebra, coaction, generators: Some(gens) })
}

/// Every auxiliary comodule algebra for `(n, d)`.
pub fn auxiliary_comodule_algebras(s: &TaftSetup, d: usize) -> Result<Vec<(String, ComoduleAlgebra)>, ConstructionError> {
    Ok(vec![
        ("trivial".to_string(), trivial_comodule_algebra(s)),
        ("regular".to_string(), regular_comodule_algebra(s)),
        (format!("coideal-kc{}", d), coideal_comodule_algebra(s, d)?),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::check_rmatrix;
    use crate::hopf::check_hopf;
    use crate::scalar::rational_int;

    #[test]
    fn n1_rmatrix_is_trivial() {
        let r = r_matrix_cn(1);
        assert!(r.element[0].is_one());
    }

    #[test]
    fn rmatrix_n3_passes() {
        assert!(check_rmatrix(&r_matrix_cn(3)).all_passed());
    }

    #[test]
    fn braided_line_coproducts() {
        let h = braided_line(3);
        let f = h.field().clone();
        // Delta(x) = x (x) 1 + 1 (x) x
        let dx = h.coalgebra.basis_coproduct(1);
        assert!(dx[3].is_one() && dx[1].is_one());
        // Delta(x^2) coefficient of x (x) x is 1 + q
        let c = &h.coalgebra.basis_coproduct(2)[4];
        assert_eq!(c, &(&Scalar::one(&f) + &zeta_power(&f, 1)));
        assert_eq!(h.coalgebra.basis_coproduct(0), &unit_vec(&f, 9, 0)[..]);
        for n in 1..=4 {
            let r = r_matrix_cn(n);
            let rep = check_braided_hopf(&braided_line_over(&r), &r);
            assert!(rep.all_passed(), "n = {}: {:?}", n, rep.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn braided_antipode_formula() {
        // S(x^a) = (-1)^a q^{a(a-1)/2} x^a
        let h = braided_line(4);
        let f = h.field().clone();
        for a in 0..4 {
            let sign = if a % 2 == 0 { 1 } else { -1 };
            let expect = &Scalar::from_int(&f, sign) * &zeta_power(&f, (a * (a.max(1) - 1) / 2) as i64);
            assert_eq!(h.braided_antipode.get(a, a), &expect);
        }
    }

    #[test]
    fn taft_by_bosonization_n2() {
        let s = TaftSetup::new(2).unwrap();
        let t = &s.taft;
        let f = s.field().clone();
        assert!(check_hopf(t).all_passed());
        // Delta(x#1) = x#1 (x) 1#1 + 1#g (x) x#1
        let dx = t.coalgebra.basis_coproduct(2);
        assert!(dx[2 * 4].is_one() && dx[4 + 2].is_one());
        assert_eq!(crate::linalg::support(dx).count(), 2);
        // (x#1)(1#g) = x#g and (1#g)(x#1) = q x#g
        assert_eq!(t.algebra.basis_product(2, 1), &unit_vec(&f, 4, 3)[..]);
        assert_eq!(t.algebra.basis_product(1, 2)[3], zeta_power(&f, 1));
        let eps: Vec<Scalar> = (0..4).map(|i| Scalar::from_int(&f, (i < 2) as i64)).collect();
        assert_eq!(t.coalgebra.counit(), &eps[..]);
        // S(x) = -g^{-1} x
        let expect: Vector = t.mul(&t.basis(1), &t.basis(2)).iter().map(|c| -c).collect();
        assert_eq!(t.antipode.column(2), expect);
        assert!(taft_presentation_check(&t.algebra, &t.coalgebra, 2).all_passed());
    }

    #[test]
    fn trivial_rmatrix_bosonization_breaks_presentation() {
        let r = r_matrix_cn(3);
        let line = braided_line_over(&r);
        let trivial = RMatrix::trivial(r.host.clone());
        let (a, c) = bosonization_parts(&line, &r.host, &trivial);
        let rep = taft_presentation_check(&a, &c, 3);
        assert!(!rep.all_passed());
        assert_eq!(rep.status_of("coproduct-x"), Some(crate::report::Status::Fail));
    }

    #[test]
    fn k_algebras_pass_comodule_checks() {
        for n in 1..=4 {
            let s = TaftSetup::new(n).unwrap();
            assert!(check_projection(&s).all_passed());
            for d in (1..=n).filter(|d| n % d == 0) {
                for xi in [0, 1] {
                    let k = comodule_algebra_k(&s, d, rational_int(xi)).unwrap();
                    assert_eq!(k.comod.dim(), d * n);
                }
                for (_, c) in auxiliary_comodule_algebras(&s, d).unwrap() {
                    assert!(check_comodule_algebra(&c, &s.taft).all_passed());
                }
            }
        }
        assert!(matches!(
            comodule_algebra_k(&TaftSetup::new(4).unwrap(), 3, rational_int(0)),
            Err(ConstructionError::NotDivisor { .. })
        ));
    }

    #[test]
    fn k_relations_and_w_squared_coaction() {
        let s = TaftSetup::new(2).unwrap();
        let k = comodule_algebra_k(&s, 2, rational_int(1)).unwrap();
        let a = &k.comod.algebra;
        let f = s.field().clone();
        let (h, w) = (k.h(), k.w());
        assert_eq!(a.pow(&h, 2), a.unit().to_vec());
        assert_eq!(a.pow(&w, 2), a.unit().to_vec());
        let hw = a.mul(&h, &w);
        let qwh: Vector = a.mul(&w, &h).iter().map(|c| c * &zeta_power(&f, 1)).collect();
        assert_eq!(hw, qwh);
        // lambda(w^2) = lambda(xi 1) = 1 (x) 1
        let w2 = a.pow(&w, 2);
        assert_eq!(k.comod.coact(&w2), kron_vec(s.taft.unit(), a.unit()));
    }

    #[test]
    fn dropping_g_w_term_breaks_multiplicativity() {
        let s = TaftSetup::new(2).unwrap();
        let k = comodule_algebra_k(&s, 2, rational_int(1)).unwrap();
        let f = s.field().clone();
        let mut cols: Vec<Vector> = (0..4).map(|i| k.comod.coaction.coaction.column(i)).collect();
        // lambda(w) = x (x) 1 only
        cols[1] = kron_vec(&s.taft.basis(2), &unit_vec(&f, 4, 0));
        let mut bad = k.comod.clone();
        bad.coaction = ComoduleRep::new(4, 4, Matrix::from_columns(&f, 16, &cols));
        assert!(!check_comodule_algebra(&bad, &s.taft).all_passed());
    }

    #[test]
    fn gaussian_binomials() {
        let f = make_field(3);
        assert!(gaussian_binomial(&f, 3, 0).is_one());
        assert_eq!(gaussian_binomial(&f, 2, 1), &Scalar::one(&f) + &zeta_power(&f, 1));
        // (3 choose 1)_q = 1 + q + q^2 = 0 at a primitive cube root
        assert!(gaussian_binomial(&f, 3, 1).is_zero());
    }
}
