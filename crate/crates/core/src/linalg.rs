//! Exact matrices, echelon forms, kernels and subspaces over [`Scalar`].
//!
//! Tensor index convention everywhere: `(i, j) -> i * dim_b + j`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::scalar::{Field, Scalar};

pub type Vector = Vec<Scalar>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("vector is not in the subspace (first residual at coordinate {coordinate})")]
    NotInSubspace { coordinate: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
}

pub fn zero_vec(f: &Field, n: usize) -> Vector {
    vec![Scalar::zero(f); n]
}

pub fn unit_vec(f: &Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vec(f, n);
    v[i] = Scalar::one(f);
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(|s| s.is_zero())
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        a.add_mul(c, x);
    }
}

pub fn scale_vec(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// Nonzero entries with their indices.
pub fn support(v: &[Scalar]) -> impl Iterator<Item = (usize, &Scalar)> {
    v.iter().enumerate().filter(|(_, s)| !s.is_zero())
}

pub fn sparse(v: &[Scalar]) -> Vec<(usize, Scalar)> {
    support(v).map(|(i, s)| (i, s.clone())).collect()
}

/// Kronecker product of two vectors.
pub fn kron_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    let f = a.first().or(b.first()).map(|s| s.context().clone());
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    if out.is_empty() {
        if let Some(f) = f {
            return zero_vec(&f, 0);
        }
    }
    out
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, entries: zero_vec(field, rows * cols) }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    pub fn from_entries(field: &Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Matrix {
        assert_eq!(entries.len(), rows * cols, "entry count must equal rows * cols");
        Matrix { field: field.clone(), rows, cols, entries }
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Scalar>(field: &Field, rows: usize, cols: usize, mut f: F) -> Matrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { field: field.clone(), rows, cols, entries }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &Field, rows: usize, columns: &[Vector]) -> Matrix {
        Matrix::from_fn(field, rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn from_rows(field: &Field, cols: usize, rows: &[Vector]) -> Matrix {
        Matrix::from_fn(field, rows.len(), cols, |r, c| rows[r][c].clone())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &Scalar) {
        self.entries[r * self.cols + c] += v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.entries)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..self.cols).all(|c| {
                let e = self.get(r, c);
                if r == c { e.is_one() } else { e.is_zero() }
            }))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(&self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for (k, a) in support(self.row(r)) {
                for (c, b) in support(other.row(k)) {
                    out.entries[r * other.cols + c].add_mul(a, b);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let nz = sparse(v);
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero(&self.field);
                for (c, x) in &nz {
                    acc.add_mul(self.get(r, *c), x);
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, entries: vec_add(&self.entries, &other.entries) }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, entries: vec_sub(&self.entries, &other.entries) }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, entries: scale_vec(c, &self.entries) }
    }

    /// First entry where `self` and `other` differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Some((usize::MAX, usize::MAX));
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|i| (i / self.cols, i % self.cols))
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let aug = Matrix::from_fn(&self.field, n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                Scalar::one(&self.field)
            } else {
                Scalar::zero(&self.field)
            }
        });
        let (red, pivots) = rref(&aug);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(LinalgError::Singular);
        }
        Ok(Matrix::from_fn(&self.field, n, n, |r, c| red.get(r, n + c).clone()))
    }

    /// Some `x` with `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        let mut red = RowReducer::new(&self.field, self.cols + 1);
        for r in 0..self.rows {
            let mut row = sparse(self.row(r));
            if !b[r].is_zero() {
                row.push((self.cols, b[r].clone()));
            }
            red.insert(row);
        }
        if red.pivot_row(self.cols).is_some() {
            return None;
        }
        let mut x = zero_vec(&self.field, self.cols);
        for (p, row) in red.rows() {
            if let Some((_, v)) = row.iter().find(|(c, _)| *c == self.cols) {
                x[*p] = v.clone();
            }
        }
        Some(x)
    }
}

/// Kronecker product, left factor major.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(&a.field, a.rows * b.rows, a.cols * b.cols);
    for ar in 0..a.rows {
        for (ac, x) in support(a.row(ar)) {
            for br in 0..b.rows {
                for (bc, y) in support(b.row(br)) {
                    out.set(ar * b.rows + br, ac * b.cols + bc, x * y);
                }
            }
        }
    }
    out
}

/// Reduced row echelon form and pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut red = RowReducer::new(&m.field, m.cols);
    for r in 0..m.rows {
        red.insert(sparse(m.row(r)));
    }
    let pivots: Vec<usize> = red.rows().map(|(p, _)| *p).collect();
    let mut out = Matrix::zeros(&m.field, m.rows, m.cols);
    for (i, (_, row)) in red.rows().enumerate() {
        for (c, v) in row {
            out.set(i, *c, v.clone());
        }
    }
    (out, pivots)
}

pub fn kernel_basis(m: &Matrix) -> SubspaceBasis {
    let mut red = RowReducer::new(&m.field, m.cols);
    for r in 0..m.rows {
        red.insert(sparse(m.row(r)));
    }
    red.kernel()
}

/// Incremental sparse row reduction that keeps its rows in reduced echelon form.
///
/// Rows can be streamed in one at a time; the final reduced form is the
/// unique RREF of the row space, so it matches a dense elimination exactly.
#[derive(Clone)]
pub struct RowReducer {
    field: Field,
    cols: usize,
    // pivot column -> row with a 1 at the pivot and 0 at every other pivot
    rows: BTreeMap<usize, Vec<(usize, Scalar)>>,
}

impl RowReducer {
    pub fn new(field: &Field, cols: usize) -> Self {
        RowReducer { field: field.clone(), cols, rows: BTreeMap::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_row(&self, col: usize) -> Option<&Vec<(usize, Scalar)>> {
        self.rows.get(&col)
    }

    /// Rows in pivot order.
    pub fn rows(&self) -> impl Iterator<Item = (&usize, &Vec<(usize, Scalar)>)> {
        self.rows.iter()
    }

    /// Reduces `row` against the current pivots, returning the remainder.
    pub fn reduce(&self, row: Vec<(usize, Scalar)>) -> BTreeMap<usize, Scalar> {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (c, v) in row {
            debug_assert!(c < self.cols);
            if v.is_zero() {
                continue;
            }
            match acc.get_mut(&c) {
                Some(e) => *e += &v,
                None => {
                    acc.insert(c, v);
                }
            }
        }
        let pivots: Vec<usize> = acc.keys().copied().filter(|c| self.rows.contains_key(c)).collect();
        for p in pivots {
            let coef = match acc.remove(&p) {
                Some(c) if !c.is_zero() => c,
                _ => continue,
            };
            for (c, v) in &self.rows[&p] {
                if *c == p {
                    continue;
                }
                let t = &coef * v;
                match acc.get_mut(c) {
                    Some(e) => *e -= &t,
                    None => {
                        acc.insert(*c, -t);
                    }
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        acc
    }

    /// Adds a row; returns true when it enlarged the row space.
    pub fn insert(&mut self, row: Vec<(usize, Scalar)>) -> bool {
        let rem = self.reduce(row);
        let (&lead, lead_val) = match rem.iter().next() {
            Some(x) => x,
            None => return false,
        };
        let inv = lead_val.inv().expect("nonzero leading entry");
        let new_row: Vec<(usize, Scalar)> = rem.iter().map(|(c, v)| (*c, &inv * v)).collect();
        // clear the new pivot column from existing rows
        for row in self.rows.values_mut() {
            if let Ok(pos) = row.binary_search_by_key(&lead, |(c, _)| *c) {
                let coef = row[pos].1.clone();
                let mut merged: BTreeMap<usize, Scalar> = row.drain(..).collect();
                for (c, v) in &new_row {
                    let t = &coef * v;
                    match merged.get_mut(c) {
                        Some(e) => *e -= &t,
                        None => {
                            merged.insert(*c, -t);
                        }
                    }
                }
                row.extend(merged.into_iter().filter(|(_, v)| !v.is_zero()));
            }
        }
        self.rows.insert(lead, new_row);
        true
    }

    pub fn contains(&self, row: Vec<(usize, Scalar)>) -> bool {
        self.reduce(row).is_empty()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|c| !self.rows.contains_key(c)).collect()
    }

    /// Kernel of the accumulated rows, as a canonical subspace basis.
    pub fn kernel(&self) -> SubspaceBasis {
        let mut vectors = Vec::new();
        for f in self.free_columns() {
            let mut v = zero_vec(&self.field, self.cols);
            v[f] = Scalar::one(&self.field);
            for (p, row) in &self.rows {
                if let Ok(pos) = row.binary_search_by_key(&f, |(c, _)| *c) {
                    v[*p] = -&row[pos].1;
                }
            }
            vectors.push(v);
        }
        SubspaceBasis::from_vectors(&self.field, self.cols, &vectors)
    }

    /// The row space as a canonical subspace basis.
    pub fn row_space(&self) -> SubspaceBasis {
        let mut vectors = Vec::new();
        let mut pivots = Vec::new();
        for (p, row) in &self.rows {
            let mut v = zero_vec(&self.field, self.cols);
            for (c, x) in row {
                v[*c] = x.clone();
            }
            vectors.push(v);
            pivots.push(*p);
        }
        SubspaceBasis { field: self.field.clone(), ambient_dim: self.cols, vectors, pivots }
    }
}

/// A subspace given by a basis in reduced echelon form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubspaceBasis {
    field: Field,
    ambient_dim: usize,
    vectors: Vec<Vector>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    /// Span of `vectors`, brought to reduced echelon form.
    pub fn from_vectors(field: &Field, ambient_dim: usize, vectors: &[Vector]) -> SubspaceBasis {
        let mut red = RowReducer::new(field, ambient_dim);
        for v in vectors {
            assert_eq!(v.len(), ambient_dim, "vector length must equal the ambient dimension");
            red.insert(sparse(v));
        }
        red.row_space()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        coords_in_basis(v, self).is_ok()
    }

    /// Direct sum with another subspace of a different ambient space (block layout).
    pub fn direct_sum(&self, other: &SubspaceBasis) -> SubspaceBasis {
        let n = self.ambient_dim + other.ambient_dim;
        let mut vs = Vec::new();
        for v in &self.vectors {
            let mut w = v.clone();
            w.extend(zero_vec(&self.field, other.ambient_dim));
            vs.push(w);
        }
        for v in &other.vectors {
            let mut w = zero_vec(&self.field, self.ambient_dim);
            w.extend(v.iter().cloned());
            vs.push(w);
        }
        SubspaceBasis::from_vectors(&self.field, n, &vs)
    }
}

/// Coordinates of `v` in `b`, verified exactly.
pub fn coords_in_basis(v: &[Scalar], b: &SubspaceBasis) -> Result<Vector, LinalgError> {
    if v.len() != b.ambient_dim {
        return Err(LinalgError::Dimension(format!("vector of length {} in ambient {}", v.len(), b.ambient_dim)));
    }
    let c: Vector = b.pivots.iter().map(|p| v[*p].clone()).collect();
    let mut residual = v.to_vec();
    for (ci, bi) in c.iter().zip(&b.vectors) {
        axpy(&mut residual, &-ci, bi);
    }
    match residual.iter().position(|s| !s.is_zero()) {
        None => Ok(c),
        Some(coordinate) => Err(LinalgError::NotInSubspace { coordinate }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{make_field, zeta_power};

    fn q() -> Field {
        make_field(1)
    }

    fn int_matrix(f: &Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_fn(f, rows.len(), cols, |r, c| Scalar::from_int(f, rows[r][c]))
    }

    #[test]
    fn rref_examples() {
        let f = q();
        let id = Matrix::identity(&f, 3);
        assert_eq!(rref(&id), (id.clone(), vec![0, 1, 2]));
        let z = Matrix::zeros(&f, 2, 3);
        assert_eq!(rref(&z), (z.clone(), vec![]));
        let m = int_matrix(&f, &[&[1, 2], &[2, 4]]);
        assert_eq!(rref(&m), (int_matrix(&f, &[&[1, 2], &[0, 0]]), vec![0]));
    }

    #[test]
    fn kernel_examples() {
        let f = q();
        assert_eq!(kernel_basis(&Matrix::identity(&f, 4)).dim(), 0);
        let k = kernel_basis(&Matrix::zeros(&f, 2, 3));
        assert_eq!(k.dim(), 3);
        assert_eq!(k.vectors()[1], unit_vec(&f, 3, 1));
        let m = int_matrix(&f, &[&[1, 1, 0]]);
        let k = kernel_basis(&m);
        assert_eq!(k.dim(), 2);
        for v in k.vectors() {
            assert!(is_zero_vec(&m.apply(v)));
        }
    }

    #[test]
    fn coords_examples() {
        let f = q();
        let b = SubspaceBasis::from_vectors(
            &f,
            3,
            &[vec![Scalar::from_int(&f, 1), Scalar::from_int(&f, 1), Scalar::zero(&f)]],
        );
        assert_eq!(coords_in_basis(&b.vectors()[0], &b).unwrap(), vec![Scalar::one(&f)]);
        assert_eq!(coords_in_basis(&zero_vec(&f, 3), &b).unwrap(), vec![Scalar::zero(&f)]);
        assert!(matches!(
            coords_in_basis(&unit_vec(&f, 3, 1), &b),
            Err(LinalgError::NotInSubspace { .. })
        ));
    }

    #[test]
    fn kron_examples() {
        let f = make_field(4);
        assert!(kron(&Matrix::identity(&f, 2), &Matrix::identity(&f, 3)).is_identity());
        assert!(kron(&Matrix::identity(&f, 2), &Matrix::zeros(&f, 2, 2)).is_zero());
        let qq = zeta_power(&f, 1);
        let one = Scalar::one(&f);
        let z = Scalar::zero(&f);
        let a = Matrix::from_entries(&f, 2, 2, vec![qq.clone(), z.clone(), z.clone(), one.clone()]);
        let b = Matrix::from_entries(&f, 2, 2, vec![one.clone(), z.clone(), z.clone(), qq.clone()]);
        let k = kron(&a, &b);
        let diag: Vec<Scalar> = (0..4).map(|i| k.get(i, i).clone()).collect();
        assert_eq!(diag, vec![qq.clone(), &qq * &qq, one.clone(), qq.clone()]);
    }

    #[test]
    fn inverse_and_solve() {
        let f = make_field(3);
        let qq = zeta_power(&f, 1);
        let m = Matrix::from_entries(
            &f,
            2,
            2,
            vec![Scalar::one(&f), qq.clone(), qq.clone(), Scalar::from_int(&f, 2)],
        );
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let b = vec![Scalar::one(&f), Scalar::zero(&f)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.apply(&x), b);
        assert_eq!(int_matrix(&q(), &[&[1, 2], &[2, 4]]).inverse(), Err(LinalgError::Singular));
    }
}
