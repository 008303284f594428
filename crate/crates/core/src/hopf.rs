//! Finite-dimensional algebras, coalgebras and Hopf algebras by structure constants.

use serde_json::{json, Value};
use thiserror::Error;

use crate::json::{matrix_json, vector_json};
use crate::linalg::{axpy, is_zero_vec, sparse, unit_vec, vec_sub, zero_vec, Matrix, RowReducer, Vector};
use crate::report::VerificationReport;
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("the convolution system for the antipode is inconsistent")]
    NoAntipode,
    #[error("the antipode is not unique (solution space of dimension {0})")]
    AntipodeNotUnique(usize),
    #[error("structure check failed: {0}")]
    Invalid(String),
}

pub(crate) fn residual_witness(indices: &[usize], residual: &[Scalar]) -> Value {
    json!({ "indices": indices, "residual": vector_json(residual) })
}

/// Associative unital algebra with basis `e_0..e_{dim-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct FinDimAlgebra {
    field: Field,
    dim: usize,
    // m(e_i, e_j) at i * dim + j
    mult: Vec<Vector>,
    unit: Vector,
    mult_sparse: Vec<Vec<(usize, Scalar)>>,
}

impl FinDimAlgebra {
    pub fn new(field: &Field, dim: usize, mult: Vec<Vector>, unit: Vector) -> Self {
        assert_eq!(mult.len(), dim * dim, "need one product vector per basis pair");
        assert!(mult.iter().all(|v| v.len() == dim) && unit.len() == dim);
        let mult_sparse = mult.iter().map(|v| sparse(v)).collect();
        FinDimAlgebra { field: field.clone(), dim, mult, unit, mult_sparse }
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Vector>(field: &Field, dim: usize, mut f: F, unit: Vector) -> Self {
        let mut mult = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                mult.push(f(i, j));
            }
        }
        Self::new(field, dim, mult, unit)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.mult[i * self.dim + j]
    }

    pub fn basis_product_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mult_sparse[i * self.dim + j]
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vec(&self.field, self.dim, i)
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let mut out = zero_vec(&self.field, self.dim);
        let bs = sparse(b);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in &bs {
                let xy = x * y;
                for (k, c) in self.basis_product_terms(i, *j) {
                    out[*k].add_mul(&xy, c);
                }
            }
        }
        out
    }

    /// Matrix of `v -> a v`.
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(a, &self.basis(j))).collect();
        Matrix::from_columns(&self.field, self.dim, &cols)
    }

    /// Matrix of `v -> v a`.
    pub fn right_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(&self.basis(j), a)).collect();
        Matrix::from_columns(&self.field, self.dim, &cols)
    }

    pub fn pow(&self, a: &[Scalar], e: usize) -> Vector {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Multiplication as a `dim x dim^2` matrix.
    pub fn mult_matrix(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.dim, self.dim * self.dim, |r, c| self.mult[c][r].clone())
    }

    pub fn to_json(&self) -> Value {
        let mult: Vec<Value> = (0..self.dim)
            .map(|i| Value::Array((0..self.dim).map(|j| vector_json(self.basis_product(i, j))).collect()))
            .collect();
        json!({ "dim": self.dim, "mult": mult, "unit": vector_json(&self.unit) })
    }

    pub fn from_json(f: &Field, v: &Value) -> Result<Self, crate::json::JsonError> {
        use crate::json::{parse_vector, JsonError};
        let bad = |s: &str| JsonError::Malformed(s.to_string());
        let dim = v.get("dim").and_then(Value::as_u64).ok_or_else(|| bad("dim"))? as usize;
        let rows = v.get("mult").and_then(Value::as_array).ok_or_else(|| bad("mult"))?;
        let mut mult = Vec::new();
        for row in rows {
            for e in row.as_array().ok_or_else(|| bad("mult"))? {
                mult.push(parse_vector(f, e)?);
            }
        }
        let unit = parse_vector(f, v.get("unit").ok_or_else(|| bad("unit"))?)?;
        if mult.len() != dim * dim || unit.len() != dim || mult.iter().any(|m| m.len() != dim) {
            return Err(bad("algebra shape"));
        }
        Ok(Self::new(f, dim, mult, unit))
    }
}

/// Coassociative counital coalgebra.
#[derive(Clone, Debug, PartialEq)]
pub struct FinDimCoalgebra {
    field: Field,
    dim: usize,
    // Delta(e_i) in kron coordinates (length dim^2)
    comult: Vec<Vector>,
    counit: Vector,
    comult_sparse: Vec<Vec<(usize, usize, Scalar)>>,
}

impl FinDimCoalgebra {
    pub fn new(field: &Field, dim: usize, comult: Vec<Vector>, counit: Vector) -> Self {
        assert_eq!(comult.len(), dim);
        assert!(comult.iter().all(|v| v.len() == dim * dim) && counit.len() == dim);
        let comult_sparse = comult
            .iter()
            .map(|v| sparse(v).into_iter().map(|(ix, c)| (ix / dim, ix % dim, c)).collect())
            .collect();
        FinDimCoalgebra { field: field.clone(), dim, comult, counit, comult_sparse }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn basis_coproduct(&self, i: usize) -> &[Scalar] {
        &self.comult[i]
    }

    /// Terms `(j, k, c)` of `Delta(e_i) = sum c e_j (x) e_k`.
    pub fn coproduct_terms(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comult_sparse[i]
    }

    pub fn coproduct(&self, v: &[Scalar]) -> Vector {
        let mut out = zero_vec(&self.field, self.dim * self.dim);
        for (i, x) in v.iter().enumerate() {
            if !x.is_zero() {
                for (j, k, c) in self.coproduct_terms(i) {
                    out[j * self.dim + k].add_mul(x, c);
                }
            }
        }
        out
    }

    /// Terms of `(Delta (x) id) Delta (e_i)` as `(a, b, c, coeff)`.
    pub fn double_coproduct_terms(&self, i: usize) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out: std::collections::BTreeMap<(usize, usize, usize), Scalar> = Default::default();
        for (j, k, c) in self.coproduct_terms(i) {
            for (a, b, d) in self.coproduct_terms(*j) {
                let e = out.entry((*a, *b, *k)).or_insert_with(|| Scalar::zero(&self.field));
                e.add_mul(c, d);
            }
        }
        out.into_iter().filter(|(_, v)| !v.is_zero()).map(|((a, b, c), v)| (a, b, c, v)).collect()
    }

    pub fn counit_of(&self, v: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero(&self.field);
        for (x, e) in v.iter().zip(&self.counit) {
            acc.add_mul(x, e);
        }
        acc
    }

    /// Comultiplication as a `dim^2 x dim` matrix.
    pub fn comult_matrix(&self) -> Matrix {
        Matrix::from_columns(&self.field, self.dim * self.dim, &self.comult)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "comult": self.comult.iter().map(|v| vector_json(v)).collect::<Vec<_>>(),
            "counit": vector_json(&self.counit),
        })
    }

    pub fn from_json(f: &Field, dim: usize, v: &Value) -> Result<Self, crate::json::JsonError> {
        use crate::json::{parse_vector, JsonError};
        let bad = |s: &str| JsonError::Malformed(s.to_string());
        let comult: Result<Vec<Vector>, JsonError> = v
            .get("comult")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("comult"))?
            .iter()
            .map(|c| parse_vector(f, c))
            .collect();
        let comult = comult?;
        let counit = parse_vector(f, v.get("counit").ok_or_else(|| bad("counit"))?)?;
        if comult.len() != dim || counit.len() != dim || comult.iter().any(|c| c.len() != dim * dim) {
            return Err(bad("coalgebra shape"));
        }
        Ok(Self::new(f, dim, comult, counit))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FinDimHopf {
    pub algebra: FinDimAlgebra,
    pub coalgebra: FinDimCoalgebra,
    /// Column `j` is `S(e_j)`.
    pub antipode: Matrix,
}

impl FinDimHopf {
    /// Solves for the antipode and validates the whole structure.
    pub fn new(algebra: FinDimAlgebra, coalgebra: FinDimCoalgebra) -> Result<Self, HopfError> {
        let report = check_bialgebra(&algebra, &coalgebra);
        if let Some(e) = report.failures().next() {
            return Err(HopfError::Invalid(e.claim_id.clone()));
        }
        let antipode = solve_antipode(&algebra, &coalgebra)?;
        Ok(FinDimHopf { algebra, coalgebra, antipode })
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.algebra.mul(a, b)
    }

    pub fn basis(&self, i: usize) -> Vector {
        self.algebra.basis(i)
    }

    pub fn unit(&self) -> &[Scalar] {
        self.algebra.unit()
    }

    pub fn antipode_of(&self, v: &[Scalar]) -> Vector {
        self.antipode.apply(v)
    }

    pub fn antipode_inverse(&self) -> Matrix {
        self.antipode.inverse().expect("finite-dimensional antipodes are invertible")
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.algebra.to_json();
        let c = self.coalgebra.to_json();
        let m = v.as_object_mut().expect("object");
        m.insert("comult".into(), c["comult"].clone());
        m.insert("counit".into(), c["counit"].clone());
        m.insert("antipode".into(), matrix_json(&self.antipode));
        v
    }

    pub fn from_json(f: &Field, v: &Value) -> Result<Self, crate::json::JsonError> {
        let algebra = FinDimAlgebra::from_json(f, v)?;
        let coalgebra = FinDimCoalgebra::from_json(f, algebra.dim(), v)?;
        let antipode = crate::json::parse_matrix(f, v.get("antipode").unwrap_or(&Value::Null))?;
        Ok(FinDimHopf { algebra, coalgebra, antipode })
    }
}

/// Product in `A_1 (x) ... (x) A_k`, elements in mixed-radix kron coordinates.
pub fn tensor_mul(algs: &[&FinDimAlgebra], x: &[Scalar], y: &[Scalar]) -> Vector {
    let field = algs[0].field();
    let dims: Vec<usize> = algs.iter().map(|a| a.dim()).collect();
    let total: usize = dims.iter().product();
    let split = |mut ix: usize| -> Vec<usize> {
        let mut out = vec![0; dims.len()];
        for p in (0..dims.len()).rev() {
            out[p] = ix % dims[p];
            ix /= dims[p];
        }
        out
    };
    let mut out = zero_vec(field, total);
    let ys = sparse(y);
    for (ix, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let xi = split(ix);
        for (iy, b) in &ys {
            let yi = split(*iy);
            // expand the product factor by factor
            let mut terms: Vec<(usize, Scalar)> = vec![(0, a * b)];
            for p in 0..dims.len() {
                let mut next = Vec::new();
                for (idx, c) in &terms {
                    for (k, d) in algs[p].basis_product_terms(xi[p], yi[p]) {
                        next.push((idx * dims[p] + k, c * d));
                    }
                }
                terms = next;
            }
            for (idx, c) in terms {
                out[idx] += &c;
            }
        }
    }
    out
}

pub fn tensor_unit(algs: &[&FinDimAlgebra]) -> Vector {
    let mut acc = algs[0].unit().to_vec();
    for a in &algs[1..] {
        acc = crate::linalg::kron_vec(&acc, a.unit());
    }
    acc
}

pub fn tensor_algebra(a: &FinDimAlgebra, b: &FinDimAlgebra) -> FinDimAlgebra {
    let f = a.field();
    let n = a.dim() * b.dim();
    let algs = [a, b];
    FinDimAlgebra::from_fn(
        f,
        n,
        |i, j| tensor_mul(&algs, &unit_vec(f, n, i), &unit_vec(f, n, j)),
        tensor_unit(&algs),
    )
}

/// Convolution algebra on the dual basis; `(e^i e^j)(e_k) = c_k^{ij}`.
pub fn dual_algebra(c: &FinDimCoalgebra) -> FinDimAlgebra {
    let f = c.field();
    let d = c.dim();
    FinDimAlgebra::from_fn(
        f,
        d,
        |i, j| (0..d).map(|k| c.basis_coproduct(k)[i * d + j].clone()).collect(),
        c.counit().to_vec(),
    )
}

pub fn check_algebra(a: &FinDimAlgebra) -> VerificationReport {
    let mut r = VerificationReport::new();
    let d = a.dim();
    r.check("associativity", || {
        for i in 0..d {
            for j in 0..d {
                let ij = a.basis_product(i, j).to_vec();
                for k in 0..d {
                    let lhs = a.mul(&ij, &a.basis(k));
                    let rhs = a.mul(&a.basis(i), a.basis_product(j, k));
                    if lhs != rhs {
                        return Some(residual_witness(&[i, j, k], &vec_sub(&lhs, &rhs)));
                    }
                }
            }
        }
        None
    });
    r.check("unit", || {
        for i in 0..d {
            let e = a.basis(i);
            for side in [a.mul(a.unit(), &e), a.mul(&e, a.unit())] {
                if side != e {
                    return Some(residual_witness(&[i], &vec_sub(&side, &e)));
                }
            }
        }
        None
    });
    r
}

pub fn check_coalgebra(c: &FinDimCoalgebra) -> VerificationReport {
    let mut r = VerificationReport::new();
    let d = c.dim();
    let f = c.field();
    r.check("coassociativity", || {
        for i in 0..d {
            let mut lhs = zero_vec(f, d * d * d);
            let mut rhs = zero_vec(f, d * d * d);
            for (j, k, x) in c.coproduct_terms(i) {
                for (a, b, y) in c.coproduct_terms(*j) {
                    lhs[(a * d + b) * d + k].add_mul(x, y);
                }
                for (a, b, y) in c.coproduct_terms(*k) {
                    rhs[(j * d + a) * d + b].add_mul(x, y);
                }
            }
            if lhs != rhs {
                return Some(residual_witness(&[i], &vec_sub(&lhs, &rhs)));
            }
        }
        None
    });
    r.check("counit", || {
        for i in 0..d {
            let e = unit_vec(f, d, i);
            let mut left = zero_vec(f, d);
            let mut right = zero_vec(f, d);
            for (j, k, x) in c.coproduct_terms(i) {
                left[*k].add_mul(x, &c.counit()[*j]);
                right[*j].add_mul(x, &c.counit()[*k]);
            }
            for side in [left, right] {
                if side != e {
                    return Some(residual_witness(&[i], &vec_sub(&side, &e)));
                }
            }
        }
        None
    });
    r
}

pub fn check_bialgebra(a: &FinDimAlgebra, c: &FinDimCoalgebra) -> VerificationReport {
    let mut r = check_algebra(a);
    r.extend(check_coalgebra(c));
    let d = a.dim();
    let f = a.field();
    r.check("comult-multiplicative", || {
        for i in 0..d {
            for j in 0..d {
                let lhs = c.coproduct(a.basis_product(i, j));
                let rhs = tensor_mul(&[a, a], c.basis_coproduct(i), c.basis_coproduct(j));
                if lhs != rhs {
                    return Some(residual_witness(&[i, j], &vec_sub(&lhs, &rhs)));
                }
            }
        }
        None
    });
    r.check("counit-multiplicative", || {
        for i in 0..d {
            for j in 0..d {
                let lhs = c.counit_of(a.basis_product(i, j));
                let rhs = &c.counit()[i] * &c.counit()[j];
                if lhs != rhs {
                    return Some(residual_witness(&[i, j], &[&lhs - &rhs]));
                }
            }
        }
        None
    });
    r.check("unit-compatibility", || {
        let du = c.coproduct(a.unit());
        let uu = crate::linalg::kron_vec(a.unit(), a.unit());
        if du != uu {
            return Some(residual_witness(&[], &vec_sub(&du, &uu)));
        }
        let e = c.counit_of(a.unit());
        if !e.is_one() {
            return Some(residual_witness(&[], &[&e - &Scalar::one(f)]));
        }
        None
    });
    r
}

/// `m (S (x) id) Delta` and `m (id (x) S) Delta` against `u eps`.
pub fn check_antipode(h: &FinDimHopf) -> VerificationReport {
    let mut r = VerificationReport::new();
    let d = h.dim();
    for (name, left) in [("antipode-left", true), ("antipode-right", false)] {
        r.check(name, || {
            for i in 0..d {
                let mut acc = zero_vec(h.field(), d);
                for (j, k, c) in h.coalgebra.coproduct_terms(i) {
                    let p = if left {
                        h.mul(&h.antipode.column(*j), &h.basis(*k))
                    } else {
                        h.mul(&h.basis(*j), &h.antipode.column(*k))
                    };
                    axpy(&mut acc, c, &p);
                }
                let expect: Vector = h.unit().iter().map(|u| u * &h.coalgebra.counit()[i]).collect();
                if acc != expect {
                    return Some(residual_witness(&[i], &vec_sub(&acc, &expect)));
                }
            }
            None
        });
    }
    r
}

pub fn check_hopf(h: &FinDimHopf) -> VerificationReport {
    let mut r = check_bialgebra(&h.algebra, &h.coalgebra);
    r.extend(check_antipode(h));
    r
}

/// Solves `m (S (x) id) Delta = u eps` for `S`, then confirms the other identity.
pub fn solve_antipode(a: &FinDimAlgebra, c: &FinDimCoalgebra) -> Result<Matrix, HopfError> {
    let d = a.dim();
    let f = a.field();
    let nvars = d * d;
    // variable (j, p): coefficient of e_p in S(e_j)
    let mut red = RowReducer::new(f, nvars + 1);
    for i in 0..d {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); d];
        for (j, k, x) in c.coproduct_terms(i) {
            for p in 0..d {
                for (out, y) in a.basis_product_terms(p, *k) {
                    rows[*out].push((j * d + p, x * y));
                }
            }
        }
        for (out, mut row) in rows.into_iter().enumerate() {
            let rhs = &a.unit()[out] * &c.counit()[i];
            if !rhs.is_zero() {
                row.push((nvars, rhs));
            }
            red.insert(row);
        }
    }
    if red.pivot_row(nvars).is_some() {
        return Err(HopfError::NoAntipode);
    }
    if red.rank() < nvars {
        return Err(HopfError::AntipodeNotUnique(nvars - red.rank()));
    }
    let mut s = Matrix::zeros(f, d, d);
    for (var, row) in red.rows() {
        let val = row.iter().find(|(col, _)| *col == nvars).map(|(_, v)| v.clone()).unwrap_or_else(|| Scalar::zero(f));
        s.set(var % d, var / d, val);
    }
    let h = FinDimHopf { algebra: a.clone(), coalgebra: c.clone(), antipode: s };
    let check = check_antipode(&h);
    if !check.all_passed() {
        return Err(HopfError::NoAntipode);
    }
    Ok(h.antipode)
}

/// True when `f: A -> B` (columns = images of basis) is an algebra map.
pub fn is_algebra_map(f: &Matrix, a: &FinDimAlgebra, b: &FinDimAlgebra) -> Option<Value> {
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = f.apply(a.basis_product(i, j));
            let rhs = b.mul(&f.column(i), &f.column(j));
            if lhs != rhs {
                return Some(residual_witness(&[i, j], &vec_sub(&lhs, &rhs)));
            }
        }
    }
    let u = f.apply(a.unit());
    if u != b.unit() {
        return Some(residual_witness(&[], &vec_sub(&u, b.unit())));
    }
    None
}

/// True when `f: C -> D` is a coalgebra map.
pub fn is_coalgebra_map(f: &Matrix, c: &FinDimCoalgebra, d: &FinDimCoalgebra) -> Option<Value> {
    let ff = crate::linalg::kron(f, f);
    for i in 0..c.dim() {
        let lhs = d.coproduct(&f.column(i));
        let rhs = ff.apply(c.basis_coproduct(i));
        if lhs != rhs {
            return Some(residual_witness(&[i], &vec_sub(&lhs, &rhs)));
        }
        let e = d.counit_of(&f.column(i));
        if e != c.counit()[i] {
            return Some(residual_witness(&[i], &[&e - &c.counit()[i]]));
        }
    }
    None
}

pub(crate) fn witness_if_nonzero(indices: &[usize], residual: Vector) -> Option<Value> {
    if is_zero_vec(&residual) {
        None
    } else {
        Some(residual_witness(indices, &residual))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::make_field;

    fn group_algebra(n: usize) -> (FinDimAlgebra, FinDimCoalgebra) {
        let f = make_field(1);
        let a = FinDimAlgebra::from_fn(&f, n, |i, j| unit_vec(&f, n, (i + j) % n), unit_vec(&f, n, 0));
        let c = FinDimCoalgebra::new(
            &f,
            n,
            (0..n).map(|i| unit_vec(&f, n * n, i * n + i)).collect(),
            vec![Scalar::one(&f); n],
        );
        (a, c)
    }

    #[test]
    fn group_algebra_axioms_and_antipode() {
        let (a, c) = group_algebra(3);
        assert!(check_bialgebra(&a, &c).all_passed());
        let s = solve_antipode(&a, &c).unwrap();
        for i in 0..3 {
            assert_eq!(s.column(i), unit_vec(a.field(), 3, (3 - i) % 3));
        }
    }

    #[test]
    fn perturbed_mult_fails_associativity() {
        let (a, _) = group_algebra(2);
        let f = a.field().clone();
        let mut mult: Vec<Vector> = (0..4).map(|ix| a.basis_product(ix / 2, ix % 2).to_vec()).collect();
        // e0 * g = 2g breaks (e0 e0) g = e0 (e0 g)
        mult[1] = vec![Scalar::zero(&f), Scalar::from_int(&f, 2)];
        let bad = FinDimAlgebra::new(&f, 2, mult, a.unit().to_vec());
        let r = check_algebra(&bad);
        let e = r.get("associativity").unwrap();
        assert_eq!(e.status, crate::report::Status::Fail);
        assert!(e.witness.as_ref().unwrap()["indices"].as_array().unwrap().len() == 3);
    }

    #[test]
    fn dual_numbers_not_a_bialgebra() {
        // Q[t]/(t^2), t primitive: Delta(t)^2 = 2 t (x) t != 0
        let f = make_field(1);
        let z = || Scalar::zero(&f);
        let o = || Scalar::one(&f);
        let a = FinDimAlgebra::from_fn(
            &f,
            2,
            |i, j| if i + j >= 2 { zero_vec(&f, 2) } else { unit_vec(&f, 2, i + j) },
            unit_vec(&f, 2, 0),
        );
        let c = FinDimCoalgebra::new(
            &f,
            2,
            vec![vec![o(), z(), z(), z()], vec![z(), o(), o(), z()]],
            vec![o(), z()],
        );
        let r = check_bialgebra(&a, &c);
        assert_eq!(r.status_of("comult-multiplicative"), Some(crate::report::Status::Fail));
        assert!(check_coalgebra(&c).all_passed());
    }

    #[test]
    fn tensor_and_dual_algebras() {
        let (a, c) = group_algebra(2);
        let t = tensor_algebra(&a, &a);
        assert_eq!(t.dim(), 4);
        assert!(check_algebra(&t).all_passed());
        // (g (x) 1)(1 (x) g) = g (x) g
        assert_eq!(t.basis_product(2, 1), &unit_vec(a.field(), 4, 3)[..]);
        assert_eq!(t.unit(), &unit_vec(a.field(), 4, 0)[..]);
        let d = dual_algebra(&c);
        assert!(check_algebra(&d).all_passed());
        assert_eq!(d.unit(), c.counit());
        // functions on a group: dual basis elements are orthogonal idempotents
        assert_eq!(d.basis_product(0, 0), &unit_vec(a.field(), 2, 0)[..]);
        assert!(is_zero_vec(d.basis_product(0, 1)));
    }

    #[test]
    fn dual_of_non_coassociative_is_not_associative() {
        let f = make_field(1);
        // Delta(e_1) = e_1 (x) e_1 + e_1 (x) e_0 is not coassociative
        let mut d1 = zero_vec(&f, 4);
        d1[3] = Scalar::one(&f);
        d1[2] = Scalar::one(&f);
        let c = FinDimCoalgebra::new(&f, 2, vec![unit_vec(&f, 4, 0), d1], vec![Scalar::one(&f), Scalar::zero(&f)]);
        assert!(!check_coalgebra(&c).all_passed());
        assert!(!check_algebra(&dual_algebra(&c)).all_passed());
    }
}
