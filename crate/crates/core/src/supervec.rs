//! ℤ₂-graded vector spaces, dense exact matrices and row reduction.
//!
//! Every graded space uses the canonical basis order: even basis vectors
//! first, then odd ones. A linear map between graded spaces is *even* when its
//! matrix is block diagonal and *odd* when it is block anti-diagonal.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Parity, Scalar};

/// Graded dimension `m|n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedDim {
    pub even: usize,
    pub odd: usize,
}

impl GradedDim {
    pub fn new(even: usize, odd: usize) -> GradedDim {
        GradedDim { even, odd }
    }

    pub fn total(self) -> usize {
        self.even + self.odd
    }

    pub fn swapped(self) -> GradedDim {
        GradedDim::new(self.odd, self.even)
    }

    /// Graded dimension of a tensor product.
    pub fn tensor(self, other: GradedDim) -> GradedDim {
        GradedDim::new(
            self.even * other.even + self.odd * other.odd,
            self.even * other.odd + self.odd * other.even,
        )
    }
}

impl fmt::Display for GradedDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.even, self.odd)
    }
}

/// Finite-dimensional super vector space with an ordered homogeneous basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SuperSpace {
    field: Field,
    dim_even: usize,
    dim_odd: usize,
    labels: Vec<String>,
}

impl SuperSpace {
    pub fn new(field: Field, even_labels: Vec<String>, odd_labels: Vec<String>) -> SuperSpace {
        let dim_even = even_labels.len();
        let dim_odd = odd_labels.len();
        let mut labels = even_labels;
        labels.extend(odd_labels);
        SuperSpace {
            field,
            dim_even,
            dim_odd,
            labels,
        }
    }

    /// `k^{m|n}` with generated labels.
    pub fn with_dims(field: Field, m: usize, n: usize) -> SuperSpace {
        SuperSpace::new(
            field,
            (0..m).map(|i| format!("e{i}")).collect(),
            (0..n).map(|j| format!("o{j}")).collect(),
        )
    }

    /// Builds a space from labelled, parity-tagged basis vectors that must
    /// already be in canonical order.
    pub fn from_tagged(field: Field, basis: &[(String, Parity)]) -> Result<SuperSpace> {
        let mut seen_odd = false;
        for (label, parity) in basis {
            match parity {
                Parity::Odd => seen_odd = true,
                Parity::Even if seen_odd => {
                    return Err(Error::Parse(format!(
                        "basis vector '{label}' is even but follows an odd one; list even basis vectors first"
                    )))
                }
                Parity::Even => {}
            }
        }
        let even = basis
            .iter()
            .filter(|(_, p)| *p == Parity::Even)
            .map(|(l, _)| l.clone())
            .collect();
        let odd = basis
            .iter()
            .filter(|(_, p)| *p == Parity::Odd)
            .map(|(l, _)| l.clone())
            .collect();
        Ok(SuperSpace::new(field, even, odd))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim_even + self.dim_odd
    }

    pub fn dim_even(&self) -> usize {
        self.dim_even
    }

    pub fn dim_odd(&self) -> usize {
        self.dim_odd
    }

    pub fn graded_dim(&self) -> GradedDim {
        GradedDim::new(self.dim_even, self.dim_odd)
    }

    #[inline]
    pub fn parity(&self, index: usize) -> Parity {
        if index < self.dim_even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis_vector(&self, index: usize) -> Vec<Scalar> {
        let mut v = self.zero_vector();
        v[index] = self.field.one();
        v
    }

    /// Parity of a vector: `Ok(None)` for zero, an error when it mixes parities.
    pub fn vector_parity(&self, v: &[Scalar]) -> Result<Option<Parity>> {
        let even = v[..self.dim_even].iter().any(|x| !x.is_zero());
        let odd = v[self.dim_even..].iter().any(|x| !x.is_zero());
        match (even, odd) {
            (false, false) => Ok(None),
            (true, false) => Ok(Some(Parity::Even)),
            (false, true) => Ok(Some(Parity::Odd)),
            (true, true) => Err(Error::NonHomogeneousInput),
        }
    }

    /// Even and odd components of a vector.
    pub fn split(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut even = v.to_vec();
        let mut odd = v.to_vec();
        for (i, (e, o)) in even.iter_mut().zip(odd.iter_mut()).enumerate() {
            if self.parity(i) == Parity::Even {
                *o = self.field.zero();
            } else {
                *e = self.field.zero();
            }
        }
        (even, odd)
    }

    /// The same space with parity reversed, relabelled `Π…`.
    pub fn parity_reversed(&self) -> SuperSpace {
        let flip = |l: &String| match l.strip_prefix('Π') {
            Some(rest) => rest.to_string(),
            None => format!("Π{l}"),
        };
        SuperSpace::new(
            self.field,
            self.labels[self.dim_even..].iter().map(flip).collect(),
            self.labels[..self.dim_even].iter().map(flip).collect(),
        )
    }

    /// Index permutation `old -> new` realising [`parity_reversed`](Self::parity_reversed).
    pub fn parity_reversal_permutation(&self) -> Vec<usize> {
        let (m, n) = (self.dim_even, self.dim_odd);
        (0..self.dim())
            .map(|i| if i < m { n + i } else { i - m })
            .collect()
    }
}

impl fmt::Display for SuperSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.field, self.graded_dim())
    }
}

// ---------------------------------------------------------------------------
// vectors

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| c * x).collect()
}

pub fn vec_is_zero(a: &[Scalar]) -> bool {
    a.iter().all(Scalar::is_zero)
}

/// `acc += c * v`, skipping zero entries.
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(c * x);
        }
    }
}

// ---------------------------------------------------------------------------
// matrices

/// Dense row-major matrix over an exact field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::ShapeMismatch("ragged matrix rows".into()));
            }
            for x in row {
                if x.field() != field {
                    return Err(Error::FieldMismatch(field.to_string(), x.field().to_string()));
                }
                data.push(x);
            }
        }
        Ok(Matrix {
            field,
            rows: r,
            cols: c,
            data,
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(field, rows).expect("rectangular literal")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.field, self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Matrix product; panics on a shape mismatch.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix shape mismatch")
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            let acc = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if !a.is_zero() {
                    axpy(acc, a, rhs.row(k));
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        let mut out = vec![self.field.zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: vec_add(&self.data, &rhs.data),
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: vec_sub(&self.data, &rhs.data),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: vec_scale(c, &self.data),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&self.field.from_i64(-1))
    }

    /// Adds `c * rhs` in place.
    pub fn add_scaled(&mut self, c: &Scalar, rhs: &Matrix) {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        axpy(&mut self.data, c, &rhs.data);
    }

    /// Row-major flattening, used to treat maps as vectors.
    pub fn as_vector(&self) -> &[Scalar] {
        &self.data
    }

    pub fn from_vector(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Matrix {
        assert_eq!(data.len(), rows * cols);
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Reduced row echelon form with leftmost pivots.
    pub fn rref(&self) -> RowReducer {
        let mut rr = RowReducer::new(self.field, self.cols);
        for r in 0..self.rows {
            rr.push(self.row(r).to_vec());
        }
        rr
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Kernel basis as the columns of a `cols × nullity` matrix.
    pub fn kernel(&self) -> Matrix {
        let k = self.rref().kernel_basis();
        Matrix::from_columns(self.field, self.cols, &k)
    }

    /// Solves `self · X = rhs`.
    pub fn solve(&self, rhs: &Matrix) -> Result<Option<Solution>> {
        rref_solve(self, rhs)
    }

    /// Column span (the image) as a list of reduced echelon vectors.
    pub fn image_rank(&self) -> usize {
        self.rank()
    }

    /// Block `[self | rhs]`.
    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows);
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..rhs.cols {
                out.set(r, self.cols + c, rhs.get(r, c).clone());
            }
        }
        out
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let sol = self.solve(&Matrix::identity(self.field, self.rows)).ok()??;
        if sol.kernel.cols() != 0 {
            return None;
        }
        Some(sol.particular)
    }

    /// Permutation matrix sending basis vector `i` to `perm[i]`.
    pub fn permutation(field: Field, perm: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(field, perm.len(), perm.len());
        for (i, &j) in perm.iter().enumerate() {
            m.set(j, i, field.one());
        }
        m
    }
}

/// Incremental reduced row echelon form.
///
/// Rows are kept fully reduced with leftmost pivots, so the result is the
/// unique RREF of the pushed rows regardless of push order.
#[derive(Debug, Clone)]
pub struct RowReducer {
    field: Field,
    ncols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RowReducer {
    pub fn new(field: Field, ncols: usize) -> RowReducer {
        RowReducer {
            field,
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Residue of `v` after eliminating all pivot coordinates.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = -&v[p];
                axpy(&mut v, &c, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        vec_is_zero(&self.reduce(v.to_vec()))
    }

    /// Adds a row; returns whether the rank grew.
    pub fn push(&mut self, v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.ncols, "row length");
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inverse().expect("nonzero pivot");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = -&row[p];
                axpy(row, &c, &v);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols).filter(|&c| !is_pivot[c]).collect()
    }

    /// Kernel basis of the row space's matrix: one vector per free column,
    /// equal to 1 at that column and 0 at the other free columns.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut v = vec![self.field.zero(); self.ncols];
                v[f] = self.field.one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if !row[f].is_zero() {
                        v[p] = -&row[f];
                    }
                }
                v
            })
            .collect()
    }

    pub fn to_matrix(&self) -> Matrix {
        if self.rows.is_empty() {
            return Matrix::zeros(self.field, 0, self.ncols);
        }
        Matrix::from_rows(self.field, self.rows.clone()).expect("uniform rows")
    }
}

/// Particular solution plus kernel basis of a linear system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub particular: Matrix,
    pub kernel: Matrix,
}

/// Solves `a · X = b` with deterministic leftmost-pivot elimination.
pub fn rref_solve(a: &Matrix, b: &Matrix) -> Result<Option<Solution>> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(a.field().to_string(), b.field().to_string()));
    }
    if a.rows() != b.rows() {
        return Err(Error::ShapeMismatch(format!(
            "system has {} equations but right-hand side has {} rows",
            a.rows(),
            b.rows()
        )));
    }
    let n = a.cols();
    let aug = a.hstack(b).rref();
    if aug.pivots().iter().any(|&p| p >= n) {
        return Ok(None);
    }
    let field = a.field();
    let mut particular = Matrix::zeros(field, n, b.cols());
    for (row, &p) in aug.rows().iter().zip(aug.pivots()) {
        for j in 0..b.cols() {
            particular.set(p, j, row[n + j].clone());
        }
    }
    let kernel = a.kernel();
    Ok(Some(Solution { particular, kernel }))
}

// ---------------------------------------------------------------------------
// subspaces and graded maps

/// Subspace of a graded space, stored as a reduced echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: SuperSpace,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
    homogeneous: bool,
}

impl Subspace {
    /// Span of arbitrary vectors.
    pub fn span(ambient: &SuperSpace, vectors: impl IntoIterator<Item = Vec<Scalar>>) -> Subspace {
        let mut rr = RowReducer::new(ambient.field(), ambient.dim());
        for v in vectors {
            rr.push(v);
        }
        Subspace::from_reducer(ambient, rr)
    }

    pub fn from_reducer(ambient: &SuperSpace, rr: RowReducer) -> Subspace {
        let homogeneous = rr
            .rows()
            .iter()
            .all(|r| ambient.vector_parity(r).is_ok());
        Subspace {
            ambient: ambient.clone(),
            basis: rr.rows().to_vec(),
            pivots: rr.pivots().to_vec(),
            homogeneous,
        }
    }

    pub fn zero(ambient: &SuperSpace) -> Subspace {
        Subspace::span(ambient, std::iter::empty())
    }

    pub fn full(ambient: &SuperSpace) -> Subspace {
        Subspace::span(ambient, (0..ambient.dim()).map(|i| ambient.basis_vector(i)))
    }

    pub fn ambient(&self) -> &SuperSpace {
        &self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// Graded dimension; only meaningful for homogeneous subspaces.
    pub fn graded_dim(&self) -> GradedDim {
        let even = self
            .pivots
            .iter()
            .filter(|&&p| self.ambient.parity(p) == Parity::Even)
            .count();
        GradedDim::new(even, self.dim() - even)
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let c: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = self.ambient.zero_vector();
        for (ci, b) in c.iter().zip(&self.basis) {
            axpy(&mut rebuilt, ci, b);
        }
        (rebuilt == v).then_some(c)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient.dim()
    }

    /// Basis as matrix columns.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient.field(), self.ambient.dim(), &self.basis)
    }
}

/// A linear map between graded spaces (not necessarily homogeneous).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMap {
    pub source: SuperSpace,
    pub target: SuperSpace,
    pub matrix: Matrix,
}

impl GradedMap {
    pub fn new(source: SuperSpace, target: SuperSpace, matrix: Matrix) -> Result<GradedMap> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix for a map {} -> {}",
                matrix.rows(),
                matrix.cols(),
                source,
                target
            )));
        }
        Ok(GradedMap {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(space: &SuperSpace) -> GradedMap {
        GradedMap {
            source: space.clone(),
            target: space.clone(),
            matrix: Matrix::identity(space.field(), space.dim()),
        }
    }

    /// Parity of a homogeneous map; `Ok(None)` for the zero map.
    pub fn parity(&self) -> Result<Option<Parity>> {
        matrix_parity(&self.matrix, &self.source, &self.target)
    }

    pub fn compose(&self, inner: &GradedMap) -> GradedMap {
        GradedMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&inner.matrix),
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_bijective(&self) -> bool {
        self.source.dim() == self.target.dim() && self.rank() == self.source.dim()
    }
}

/// Parity of a matrix viewed as a map `source -> target`.
pub fn matrix_parity(m: &Matrix, source: &SuperSpace, target: &SuperSpace) -> Result<Option<Parity>> {
    let mut even = false;
    let mut odd = false;
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if !m.get(r, c).is_zero() {
                if target.parity(r) == source.parity(c) {
                    even = true;
                } else {
                    odd = true;
                }
            }
        }
    }
    match (even, odd) {
        (false, false) => Ok(None),
        (true, false) => Ok(Some(Parity::Even)),
        (false, true) => Ok(Some(Parity::Odd)),
        (true, true) => Err(Error::NonHomogeneousInput),
    }
}

/// Splits a map into its parity-preserving and parity-reversing parts.
pub fn graded_parts(f: &GradedMap) -> (GradedMap, GradedMap) {
    let field = f.matrix.field();
    let mut even = f.matrix.clone();
    let mut odd = f.matrix.clone();
    for r in 0..f.matrix.rows() {
        for c in 0..f.matrix.cols() {
            if f.target.parity(r) == f.source.parity(c) {
                odd.set(r, c, field.zero());
            } else {
                even.set(r, c, field.zero());
            }
        }
    }
    (
        GradedMap {
            source: f.source.clone(),
            target: f.target.clone(),
            matrix: even,
        },
        GradedMap {
            source: f.source.clone(),
            target: f.target.clone(),
            matrix: odd,
        },
    )
}

/// Result of [`quotient`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub space: SuperSpace,
    pub projection: GradedMap,
    pub section: GradedMap,
}

/// Quotient of `ambient` by a homogeneous subspace, with an even projection
/// and a section whose image is spanned by the non-pivot basis vectors.
pub fn quotient(ambient: &SuperSpace, rel: &Subspace) -> Result<Quotient> {
    if !rel.is_homogeneous() {
        return Err(Error::NonHomogeneousRelations);
    }
    if rel.ambient() != ambient {
        return Err(Error::ShapeMismatch("relations live in a different space".into()));
    }
    let field = ambient.field();
    let mut is_pivot = vec![None; ambient.dim()];
    for (k, &p) in rel.pivots().iter().enumerate() {
        is_pivot[p] = Some(k);
    }
    let free: Vec<usize> = (0..ambient.dim()).filter(|&c| is_pivot[c].is_none()).collect();
    let even_labels = free
        .iter()
        .filter(|&&c| ambient.parity(c) == Parity::Even)
        .map(|&c| ambient.label(c).to_string())
        .collect();
    let odd_labels = free
        .iter()
        .filter(|&&c| ambient.parity(c) == Parity::Odd)
        .map(|&c| ambient.label(c).to_string())
        .collect();
    let space = SuperSpace::new(field, even_labels, odd_labels);
    let mut slot = vec![usize::MAX; ambient.dim()];
    for (s, &c) in free.iter().enumerate() {
        slot[c] = s;
    }
    let mut projection = Matrix::zeros(field, free.len(), ambient.dim());
    let mut section = Matrix::zeros(field, ambient.dim(), free.len());
    for c in 0..ambient.dim() {
        match is_pivot[c] {
            None => {
                projection.set(slot[c], c, field.one());
                section.set(c, slot[c], field.one());
            }
            Some(k) => {
                let row = &rel.basis()[k];
                for &f in &free {
                    if !row[f].is_zero() {
                        projection.set(slot[f], c, -&row[f]);
                    }
                }
            }
        }
    }
    Ok(Quotient {
        projection: GradedMap {
            source: ambient.clone(),
            target: space.clone(),
            matrix: projection,
        },
        section: GradedMap {
            source: space.clone(),
            target: ambient.clone(),
            matrix: section,
        },
        space,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn solve_identity() {
        let a = Matrix::identity(q(), 2);
        let b = Matrix::from_i64(q(), &[&[1], &[0]]);
        let sol = rref_solve(&a, &b).unwrap().unwrap();
        assert_eq!(sol.particular, b);
        assert_eq!(sol.kernel.cols(), 0);
    }

    #[test]
    fn solve_zero_is_unsolvable() {
        let a = Matrix::zeros(q(), 2, 2);
        let b = Matrix::from_i64(q(), &[&[1], &[0]]);
        assert!(rref_solve(&a, &b).unwrap().is_none());
    }

    #[test]
    fn solve_over_f5() {
        let f5 = Field::Prime(5);
        let a = Matrix::from_i64(f5, &[&[2]]);
        let b = Matrix::from_i64(f5, &[&[1]]);
        let sol = rref_solve(&a, &b).unwrap().unwrap();
        assert_eq!(sol.particular, Matrix::from_i64(f5, &[&[3]]));
        assert_eq!(sol.kernel.cols(), 0);
    }

    #[test]
    fn solve_shape_and_field_errors() {
        let a = Matrix::identity(q(), 2);
        let b = Matrix::from_i64(q(), &[&[1]]);
        assert!(matches!(rref_solve(&a, &b), Err(Error::ShapeMismatch(_))));
        let c = Matrix::from_i64(Field::Prime(5), &[&[1], &[1]]);
        assert!(matches!(rref_solve(&a, &c), Err(Error::FieldMismatch(_, _))));
    }

    #[test]
    fn underdetermined_system_has_kernel() {
        let a = Matrix::from_i64(q(), &[&[1, 2, 3], &[2, 4, 6]]);
        let b = Matrix::from_i64(q(), &[&[6], &[12]]);
        let sol = rref_solve(&a, &b).unwrap().unwrap();
        assert_eq!(sol.kernel.cols(), 2);
        assert_eq!(a.mul(&sol.particular), b);
        assert!(a.mul(&sol.kernel).is_zero());
    }

    #[test]
    fn graded_parts_of_block_maps() {
        let s = SuperSpace::with_dims(q(), 1, 1);
        let diag = GradedMap::new(s.clone(), s.clone(), Matrix::from_i64(q(), &[&[2, 0], &[0, 3]])).unwrap();
        let (e, o) = graded_parts(&diag);
        assert_eq!(e, diag);
        assert!(o.matrix.is_zero());
        let anti = GradedMap::new(s.clone(), s.clone(), Matrix::from_i64(q(), &[&[0, 1], &[4, 0]])).unwrap();
        let (e, o) = graded_parts(&anti);
        assert!(e.matrix.is_zero());
        assert_eq!(o, anti);
    }

    #[test]
    fn graded_parts_generic_map() {
        // 2|1 -> 1|1, oracle: mask entries by parity agreement and re-add
        let src = SuperSpace::with_dims(q(), 2, 1);
        let tgt = SuperSpace::with_dims(q(), 1, 1);
        let m = Matrix::from_i64(q(), &[&[1, 2, 3], &[4, 5, 6]]);
        let f = GradedMap::new(src, tgt, m.clone()).unwrap();
        let (e, o) = graded_parts(&f);
        assert_eq!(e.matrix, Matrix::from_i64(q(), &[&[1, 2, 0], &[0, 0, 6]]));
        assert_eq!(o.matrix, Matrix::from_i64(q(), &[&[0, 0, 3], &[4, 5, 0]]));
        assert_eq!(e.matrix.add(&o.matrix), m);
        assert_eq!(e.parity().unwrap(), Some(Parity::Even));
        assert_eq!(o.parity().unwrap(), Some(Parity::Odd));
        assert!(f.parity().is_err());
    }

    #[test]
    fn quotient_edge_cases() {
        let amb = SuperSpace::with_dims(q(), 2, 1);
        let zero = quotient(&amb, &Subspace::zero(&amb)).unwrap();
        assert_eq!(zero.space.graded_dim(), GradedDim::new(2, 1));
        assert!(zero.projection.matrix.is_identity());

        let full = quotient(&amb, &Subspace::full(&amb)).unwrap();
        assert_eq!(full.space.graded_dim(), GradedDim::new(0, 0));

        let one = Subspace::span(&amb, [vec![q().one(), q().from_i64(2), q().zero()]]);
        let quo = quotient(&amb, &one).unwrap();
        assert_eq!(quo.space.graded_dim(), GradedDim::new(1, 1));
        assert!(quo.projection.matrix.mul(&quo.section.matrix).is_identity());
        assert_eq!(quo.projection.parity().unwrap(), Some(Parity::Even));
        assert!(vec_is_zero(&quo.projection.matrix.apply(&one.basis()[0])));
    }

    #[test]
    fn quotient_rejects_mixed_relations() {
        let amb = SuperSpace::with_dims(q(), 1, 1);
        let mixed = Subspace::span(&amb, [vec![q().one(), q().one()]]);
        assert_eq!(quotient(&amb, &mixed), Err(Error::NonHomogeneousRelations));
    }

    #[test]
    fn subspace_coordinates() {
        let amb = SuperSpace::with_dims(q(), 3, 0);
        let s = Subspace::span(
            &amb,
            [
                vec![q().one(), q().one(), q().zero()],
                vec![q().zero(), q().one(), q().one()],
            ],
        );
        let v = vec![q().from_i64(2), q().from_i64(5), q().from_i64(3)];
        let c = s.coords(&v).unwrap();
        assert_eq!(c.len(), 2);
        assert!(s.coords(&[q().one(), q().zero(), q().zero()]).is_none());
    }

    #[test]
    fn parity_reversal_labels_are_involutive() {
        let s = SuperSpace::with_dims(q(), 2, 1);
        assert_eq!(s.parity_reversed().parity_reversed(), s);
        assert_eq!(s.parity_reversed().graded_dim(), GradedDim::new(1, 2));
    }
}
