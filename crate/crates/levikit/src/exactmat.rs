//! Dense exact linear algebra over the rationals.
//!
//! Everything downstream (Killing forms, radical computations, cohomology
//! solves) reduces to row echelon forms and kernels computed here. No
//! floating point anywhere: scalars are arbitrary-precision rationals and
//! every result is exact.
//!
//! Subspaces are kept in canonical form: the unique reduced row echelon
//! basis with zero rows removed. Two subspaces are equal if and only if
//! their stored bases are identical, which makes deterministic tie-breaking
//! ("lexicographically least basis") meaningful.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use num_rational::BigRational as Rational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `p/q`. Panics on `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"` with optional sign. The stored value is always
/// reduced with a positive denominator, courtesy of the rational type.
pub fn parse_rational(s: &str) -> Result<Rational, MatError> {
    let bad = || MatError::BadRational(s.to_string());
    let mut parts = s.splitn(2, '/');
    let p: BigInt = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    match parts.next() {
        None => Ok(Rational::from_integer(p)),
        Some(q) => {
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Renders a rational as `p/q`, or plain `p` when the denominator is one.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum MatError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("not a valid rational literal: {0}")]
    BadRational(String),
}

/// Dense row-major matrix over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Rational> {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += prod;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &other[(i, j)])
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &other[(i, j)])
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| -self[(i, j)].clone())
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * c)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "matrix apply shape");
        (0..self.rows)
            .map(|i| {
                let mut s = Rational::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        s += &self[(i, j)] * &v[j];
                    }
                }
                s
            })
            .collect()
    }

    pub fn trace(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "trace of non-square matrix");
        let mut s = Rational::zero();
        for i in 0..self.rows {
            s += self[(i, i)].clone();
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack width");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack height");
        let mut m = Matrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    /// Flattens row-major into a single vector; used to treat operators as
    /// vectors when computing associative hulls.
    pub fn flatten(&self) -> Vec<Rational> {
        self.data.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Rational>) -> Matrix {
        assert_eq!(rows * cols, data.len());
        Matrix { rows, cols, data }
    }

    /// Rank via row reduction.
    pub fn rank(&self) -> usize {
        let (r, pivots) = rref_with_pivots(self);
        debug_assert_eq!(r.rows, pivots.len());
        pivots.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Inverse of a square invertible matrix; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n));
        let (red, pivots) = rref_with_pivots(&aug);
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| red[(i, n + j)].clone()))
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

/// Reduced row echelon form together with the pivot column of each
/// remaining row. Pivot entries are one, pivot columns are otherwise zero,
/// pivot columns strictly increase, zero rows are dropped. The result is
/// the unique canonical representative of the row space.
pub fn rref_with_pivots(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut rows: Vec<Vec<Rational>> = (0..m.rows).map(|i| m.row_vec(i)).collect();
    let cols = m.cols;
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..cols {
        // Locate a pivot at or below the current rank row.
        let Some(pr) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = rows[rank][col].recip();
        for x in rows[rank].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..cols {
                    let delta = &factor * &rows[rank][c];
                    rows[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    (Matrix::from_rows(rows).normalized_shape(cols), pivots)
}

impl Matrix {
    /// `from_rows` of an empty list loses the width; restore it.
    fn normalized_shape(mut self, cols: usize) -> Matrix {
        if self.rows == 0 {
            self.cols = cols;
        }
        self
    }
}

pub fn rref(m: &Matrix) -> Matrix {
    rref_with_pivots(m).0
}

/// Canonical basis of the nullspace `{x : m x = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    let (red, pivots) = rref_with_pivots(m);
    let n = m.cols;
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![Rational::zero(); n];
        v[f] = Rational::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -red[(r, f)].clone();
        }
        basis.push(v);
    }
    Subspace::from_rows(n, basis)
}

/// Solves `a x = b` exactly. Returns a particular solution (free variables
/// set to zero) together with the kernel of `a`.
pub fn solve(a: &Matrix, b: &[Rational]) -> Result<(Vec<Rational>, Subspace), MatError> {
    if a.rows != b.len() {
        return Err(MatError::DimensionMismatch(format!(
            "system has {} rows but rhs has {} entries",
            a.rows,
            b.len()
        )));
    }
    let rhs = Matrix::from_rows(b.iter().map(|x| vec![x.clone()]).collect::<Vec<_>>());
    let rhs = if b.is_empty() { Matrix::zeros(0, 1) } else { rhs };
    let aug = if a.rows == 0 { Matrix::zeros(0, a.cols + 1) } else { a.hstack(&rhs) };
    let (red, pivots) = rref_with_pivots(&aug);
    if pivots.contains(&a.cols) {
        return Err(MatError::NoSolution);
    }
    let mut x = vec![Rational::zero(); a.cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = red[(r, a.cols)].clone();
    }
    Ok((x, kernel(a)))
}

/// A linear subspace of `F^n` held as its canonical reduced echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_matrix(&Matrix::identity(ambient))
    }

    pub fn from_rows(ambient: usize, rows: Vec<Vec<Rational>>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), ambient, "spanning vector length");
        }
        let m = if rows.is_empty() {
            Matrix::zeros(0, ambient)
        } else {
            Matrix::from_rows(rows)
        };
        Subspace::from_matrix(&m)
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        let (basis, pivots) = rref_with_pivots(m);
        Subspace { ambient: m.cols, basis, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.dim()).map(|i| self.basis.row_vec(i)).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Standard coordinates not used as pivots; the corresponding standard
    /// basis vectors span the canonical complement.
    pub fn free_coordinates(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Reduces `v` against the stored basis. The remainder is zero exactly
    /// when `v` lies in the subspace; otherwise it is the canonical
    /// representative of `v` modulo the subspace (zero in pivot columns).
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient, "vector length");
        let mut w = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let factor = w[p].clone();
                for c in 0..self.ambient {
                    let delta = &factor * &self.basis[(r, c)];
                    w[c] -= delta;
                }
            }
        }
        w
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        (0..other.dim()).all(|i| self.contains_vector(other.basis.row(i)))
    }

    /// Coordinates of `v` in the stored echelon basis. Because the basis is
    /// reduced, the coefficient of row `r` is just the entry of `v` at that
    /// row's pivot column. `None` when `v` is outside the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Embeds coordinates in the echelon basis back into the ambient space.
    pub fn from_coordinates(&self, coords: &[Rational]) -> Vec<Rational> {
        assert_eq!(coords.len(), self.dim(), "coordinate length");
        let mut v = vec![Rational::zero(); self.ambient];
        for (r, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..self.ambient {
                let delta = c * &self.basis[(r, j)];
                v[j] += delta;
            }
        }
        v
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        Subspace::from_matrix(&self.basis.vstack(&other.basis))
    }

    /// Intersection of row spaces: kernel vectors of `[U^T | -V^T]` give the
    /// coefficient pairs with equal combinations.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        let stacked = self.basis.transpose().hstack(&other.basis.transpose().neg());
        let ker = kernel(&stacked);
        let mut rows = Vec::new();
        for k in 0..ker.dim() {
            let coeffs = ker.basis.row(k);
            let mut v = vec![Rational::zero(); self.ambient];
            for (r, c) in coeffs.iter().take(self.dim()).enumerate() {
                if c.is_zero() {
                    continue;
                }
                for j in 0..self.ambient {
                    let delta = c * &self.basis[(r, j)];
                    v[j] += delta;
                }
            }
            rows.push(v);
        }
        Subspace::from_rows(self.ambient, rows)
    }

    /// Image of the subspace under a linear map given by `m` (columns index
    /// the ambient space of `self`).
    pub fn map_through(&self, m: &Matrix) -> Subspace {
        let rows: Vec<Vec<Rational>> = (0..self.dim()).map(|i| m.apply(self.basis.row(i))).collect();
        Subspace::from_rows(m.rows, rows)
    }

    /// Lexicographic comparison of canonical bases, used for deterministic
    /// tie-breaking among candidate subspaces.
    pub fn lex_cmp(&self, other: &Subspace) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.dim().cmp(&other.dim()) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in 0..self.dim() {
            for j in 0..self.ambient {
                let a = &self.basis[(i, j)];
                let b = &other.basis[(i, j)];
                match a.cmp(b) {
                    Ordering::Equal => {}
                    o => return o,
                }
            }
        }
        Ordering::Equal
    }
}

/// Column space of `m`, i.e. the span of its columns.
pub fn column_space(m: &Matrix) -> Subspace {
    Subspace::from_matrix(&m.transpose())
}

/// Gram-style pairing check helper: absolute value used only for pivot
/// selection heuristics would break exactness, so none is used anywhere.
#[allow(dead_code)]
fn _no_floats(_: &BigInt) {}
