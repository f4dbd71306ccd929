//! Finite-dimensional Lie algebras over Q presented by structure constants.
//!
//! A bracket table c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k is the
//! only primitive. The classical structure maps are computed exactly:
//!
//! * solvable radical as the Killing-orthogonal complement of [L, L],
//! * nilradical as the preimage of the trace-form radical of the
//!   associative operator hull generated by ad L (valid in characteristic
//!   zero, where the trace-form radical of a matrix algebra equals its
//!   Jacobson radical),
//! * centralizers as kernels of stacked adjoint matrices.
//!
//! Quotients and restrictions materialize honest algebras with their own
//! structure tensors, so every recursion level can be revalidated.

use crate::exactmat::{kernel, rref_with_pivots, solve, Matrix, Rational, Subspace};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("bracket table is not antisymmetric at ({i},{j},{k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },
    #[error("Jacobi identity fails on basis triple ({i},{j},{k})")]
    JacobiFailure { i: usize, j: usize, k: usize },
    #[error("operator basis is not closed under commutators at pair ({i},{j})")]
    NotClosed { i: usize, j: usize },
    #[error("subspace is not closed under the bracket")]
    NotASubalgebra,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("{0}")]
    Internal(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    /// Flat tensor, index [i*n*n + j*n + k].
    c: Vec<Rational>,
    pub labels: Option<Vec<String>>,
}

impl LieAlgebra {
    pub fn zero_algebra(dim: usize) -> Self {
        LieAlgebra { dim, c: vec![Rational::zero(); dim * dim * dim], labels: None }
    }

    /// Builds from entries on pairs i < j; the antisymmetric counterparts
    /// are filled in automatically.
    pub fn from_pairs(dim: usize, entries: &[(usize, usize, usize, Rational)]) -> Self {
        let mut alg = LieAlgebra::zero_algebra(dim);
        for (i, j, k, v) in entries {
            assert!(i < j && *j < dim && *k < dim, "bad structure entry ({i},{j},{k})");
            alg.c[i * dim * dim + j * dim + k] = v.clone();
            alg.c[j * dim * dim + i * dim + k] = -v.clone();
        }
        alg
    }

    /// Builds from a full structure tensor; antisymmetry is checked by
    /// [`validate`](Self::validate), not here.
    pub fn from_structure_tensor(dim: usize, c: Vec<Rational>) -> Self {
        assert_eq!(c.len(), dim * dim * dim, "tensor size");
        LieAlgebra { dim, c, labels: None }
    }

    /// Structure constants of a Lie algebra realized by linearly independent
    /// operators closed under commutators.
    pub fn from_operator_basis(ops: &[Matrix]) -> Result<Self, LieError> {
        let n = ops.len();
        if n == 0 {
            return Ok(LieAlgebra::zero_algebra(0));
        }
        let flat_cols = Matrix::from_rows(ops.iter().map(|m| m.flatten()).collect::<Vec<_>>()).transpose();
        let mut alg = LieAlgebra::zero_algebra(n);
        for i in 0..n {
            for j in (i + 1)..n {
                let comm = ops[i].mul(&ops[j]).sub(&ops[j].mul(&ops[i]));
                let coords = solve(&flat_cols, &comm.flatten())
                    .map_err(|_| LieError::NotClosed { i, j })?
                    .0;
                for (k, v) in coords.into_iter().enumerate() {
                    alg.c[i * n * n + j * n + k] = v.clone();
                    alg.c[j * n * n + i * n + k] = -v;
                }
            }
        }
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[i * self.dim * self.dim + j * self.dim + k]
    }

    /// The coefficient vector of [e_i, e_j].
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Rational] {
        let n = self.dim;
        &self.c[i * n * n + j * n..i * n * n + j * n + n]
    }

    pub fn validate(&self) -> Result<(), LieError> {
        let n = self.dim;
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    if self.c(i, j, k) != &-self.c(j, i, k).clone() {
                        return Err(LieError::NotAntisymmetric { i, j, k });
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    for l in 0..n {
                        let mut s = Rational::zero();
                        for m in 0..n {
                            s += self.c(i, j, m) * self.c(m, k, l)
                                + self.c(j, k, m) * self.c(m, i, l)
                                + self.c(k, i, m) * self.c(m, j, l);
                        }
                        if !s.is_zero() {
                            return Err(LieError::JacobiFailure { i, j, k });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let scale = &x[i] * &y[j];
                for (k, c) in self.bracket_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        let delta = &scale * c;
                        out[k] += delta;
                    }
                }
            }
        }
        out
    }

    /// Matrix of ad(x): column j holds [x, e_j].
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in self.bracket_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        let delta = &x[i] * c;
                        m[(k, j)] += delta;
                    }
                }
            }
        }
        m
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(n, n, |k, j| self.c(i, j, k).clone())
    }

    pub fn killing_form(&self) -> Matrix {
        let n = self.dim;
        let ads: Vec<Matrix> = (0..n).map(|i| self.ad_basis(i)).collect();
        let mut kappa = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = ads[i].mul(&ads[j]).trace();
                kappa[(i, j)] = t.clone();
                kappa[(j, i)] = t;
            }
        }
        kappa
    }

    pub fn killing_nondegenerate(&self) -> bool {
        self.killing_form().rank() == self.dim
    }

    /// Span of [u, v] over basis pairs of the two subspaces.
    pub fn bracket_span(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut rows = Vec::new();
        for a in 0..u.dim() {
            for b in 0..v.dim() {
                rows.push(self.bracket(u.basis().row(a), v.basis().row(b)));
            }
        }
        Subspace::from_rows(self.dim, rows)
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        self.bracket_span(&full, &full)
    }

    /// Derived series starting at L, strictly decreasing, ending at the
    /// stable term (zero for solvable algebras).
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut out = vec![Subspace::full(self.dim)];
        loop {
            let last = out.last().unwrap();
            let next = self.bracket_span(last, last);
            if &next == last {
                break;
            }
            let stop = next.is_zero();
            out.push(next);
            if stop {
                break;
            }
        }
        out
    }

    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim);
        let mut out = vec![full.clone()];
        loop {
            let last = out.last().unwrap();
            let next = self.bracket_span(&full, last);
            if &next == last {
                break;
            }
            let stop = next.is_zero();
            out.push(next);
            if stop {
                break;
            }
        }
        out
    }

    pub fn is_subalgebra_subspace(&self, w: &Subspace) -> bool {
        w.contains(&self.bracket_span(w, w))
    }

    pub fn is_ideal(&self, w: &Subspace) -> bool {
        w.contains(&self.bracket_span(&Subspace::full(self.dim), w))
    }

    pub fn is_abelian_subspace(&self, w: &Subspace) -> bool {
        self.bracket_span(w, w).is_zero()
    }

    /// Solvability of a bracket-closed subspace via its derived series.
    pub fn is_solvable_subspace(&self, w: &Subspace) -> bool {
        let mut cur = w.clone();
        loop {
            let next = self.bracket_span(&cur, &cur);
            if next.is_zero() {
                return true;
            }
            if next == cur {
                return false;
            }
            cur = next;
        }
    }

    /// Nilpotency of a bracket-closed subspace via its lower central series
    /// (as an algebra in its own right).
    pub fn is_nilpotent_subspace(&self, w: &Subspace) -> bool {
        let mut cur = w.clone();
        loop {
            let next = self.bracket_span(w, &cur);
            if next.is_zero() {
                return true;
            }
            if next == cur {
                return false;
            }
            cur = next;
        }
    }

    /// Killing-orthogonal complement of the derived subalgebra. The
    /// postconditions (solvable ideal, semisimple quotient) are asserted.
    pub fn solvable_radical(&self) -> Subspace {
        let n = self.dim;
        let derived = self.derived_subalgebra();
        let kappa = self.killing_form();
        let mut rows = Vec::new();
        for a in 0..derived.dim() {
            rows.push(kappa.apply(derived.basis().row(a)));
        }
        let m = if rows.is_empty() { Matrix::zeros(0, n) } else { Matrix::from_rows(rows) };
        let radical = kernel(&m);
        debug_assert!(self.is_ideal(&radical), "radical must be an ideal");
        debug_assert!(self.is_solvable_subspace(&radical), "radical must be solvable");
        debug_assert!(
            {
                let (q, _) = self.quotient(&radical);
                q.killing_nondegenerate()
            },
            "quotient by the radical must have nondegenerate Killing form"
        );
        radical
    }

    /// Largest nilpotent ideal: x belongs exactly when ad(x) lies in the
    /// trace-form radical of the hull of ad L.
    pub fn nilradical(&self) -> Subspace {
        let n = self.dim;
        let hull = self.associative_hull();
        let mut rows = Vec::new();
        for b in &hull.basis {
            // Row q: x |-> tr(ad(x) b_q), linear in x.
            let row: Vec<Rational> = (0..n).map(|j| self.ad_basis(j).mul(b).trace()).collect();
            rows.push(row);
        }
        let m = if rows.is_empty() { Matrix::zeros(0, n) } else { Matrix::from_rows(rows) };
        let nil = kernel(&m);
        debug_assert!(self.is_ideal(&nil));
        debug_assert!(self.is_nilpotent_subspace(&nil));
        debug_assert!({
            let r = self.solvable_radical();
            r.contains(&nil) && nil.contains(&self.bracket_span(&Subspace::full(n), &r))
        });
        nil
    }

    /// Elements commuting with every element of m: the joint kernel of the
    /// stacked ad-matrices of a basis of m.
    pub fn centralizer(&self, m: &Subspace) -> Subspace {
        let n = self.dim;
        if m.is_zero() {
            return Subspace::full(n);
        }
        let mut stacked = Matrix::zeros(0, n);
        for a in 0..m.dim() {
            stacked = stacked.vstack(&self.ad(m.basis().row(a)));
        }
        kernel(&stacked)
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&Subspace::full(self.dim))
    }

    /// Associative subalgebra of End(L) generated by the ad operators.
    pub fn associative_hull(&self) -> AssociativeHull {
        let gens: Vec<Matrix> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        AssociativeHull::generate(self.dim, &gens)
    }

    /// Quotient by an ideal, with the transport map. The quotient basis is
    /// the set of standard coordinates not used as pivots by the ideal.
    pub fn quotient(&self, ideal: &Subspace) -> (LieAlgebra, QuotientMap) {
        assert!(self.is_ideal(ideal), "quotient requires an ideal");
        let map = QuotientMap::new(self.dim, ideal.clone());
        let nq = map.quotient_dim();
        let mut q = LieAlgebra::zero_algebra(nq);
        for a in 0..nq {
            for b in 0..nq {
                if a == b {
                    continue;
                }
                let br = self.bracket(&map.section_basis(a), &map.section_basis(b));
                let coords = map.project(&br);
                for (k, v) in coords.into_iter().enumerate() {
                    q.c[a * nq * nq + b * nq + k] = v;
                }
            }
        }
        debug_assert!(q.validate().is_ok());
        (q, map)
    }

    /// Restriction to a bracket-closed subspace, in that subspace's
    /// canonical echelon basis.
    pub fn restrict(&self, w: &Subspace) -> SubalgebraContext {
        assert!(self.is_subalgebra_subspace(w), "restriction requires a subalgebra");
        let m = w.dim();
        let mut sub = LieAlgebra::zero_algebra(m);
        for a in 0..m {
            for b in 0..m {
                if a == b {
                    continue;
                }
                let br = self.bracket(w.basis().row(a), w.basis().row(b));
                let coords = w
                    .coordinates(&br)
                    .expect("bracket of subalgebra basis vectors stays inside");
                for (k, v) in coords.into_iter().enumerate() {
                    sub.c[a * m * m + b * m + k] = v;
                }
            }
        }
        debug_assert!(sub.validate().is_ok());
        SubalgebraContext { algebra: sub, carrier: w.clone() }
    }
}

/// Transport between L and L/I. Quotient coordinates are the non-pivot
/// standard coordinates of the ideal's echelon basis; the section sends them
/// back to the corresponding standard basis vectors.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    ambient: usize,
    ideal: Subspace,
    free: Vec<usize>,
}

impl QuotientMap {
    fn new(ambient: usize, ideal: Subspace) -> Self {
        let free = ideal.free_coordinates();
        QuotientMap { ambient, ideal, free }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn quotient_dim(&self) -> usize {
        self.free.len()
    }

    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    /// Quotient coordinates of an ambient vector.
    pub fn project(&self, v: &[Rational]) -> Vec<Rational> {
        let reduced = self.ideal.reduce(v);
        self.free.iter().map(|&c| reduced[c].clone()).collect()
    }

    /// Canonical representative of a quotient vector.
    pub fn section(&self, q: &[Rational]) -> Vec<Rational> {
        assert_eq!(q.len(), self.free.len());
        let mut v = vec![Rational::zero(); self.ambient];
        for (idx, &c) in self.free.iter().enumerate() {
            v[c] = q[idx].clone();
        }
        v
    }

    pub fn section_basis(&self, a: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.ambient];
        v[self.free[a]] = Rational::from_integer(1.into());
        v
    }

    /// The projection as a matrix (quotient_dim x ambient).
    pub fn projection_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.quotient_dim(), self.ambient);
        for j in 0..self.ambient {
            let mut e = vec![Rational::zero(); self.ambient];
            e[j] = Rational::from_integer(1.into());
            for (i, v) in self.project(&e).into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    /// Preimage of a quotient subspace (always contains the ideal).
    pub fn preimage(&self, w: &Subspace) -> Subspace {
        let mut rows = self.ideal.basis_rows();
        for a in 0..w.dim() {
            rows.push(self.section(w.basis().row(a)));
        }
        Subspace::from_rows(self.ambient, rows)
    }

    /// Image of an ambient subspace in the quotient.
    pub fn image(&self, w: &Subspace) -> Subspace {
        let rows: Vec<Vec<Rational>> = (0..w.dim()).map(|a| self.project(w.basis().row(a))).collect();
        Subspace::from_rows(self.quotient_dim(), rows)
    }
}

/// A subalgebra materialized as an algebra of its own, remembering its
/// carrier subspace in the ambient algebra.
#[derive(Debug, Clone)]
pub struct SubalgebraContext {
    pub algebra: LieAlgebra,
    pub carrier: Subspace,
}

impl SubalgebraContext {
    pub fn to_ambient_vec(&self, v: &[Rational]) -> Vec<Rational> {
        self.carrier.from_coordinates(v)
    }

    pub fn to_local_vec(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        self.carrier.coordinates(v)
    }

    pub fn to_ambient_subspace(&self, w: &Subspace) -> Subspace {
        assert_eq!(w.ambient(), self.algebra.dim());
        let rows: Vec<Vec<Rational>> =
            (0..w.dim()).map(|a| self.to_ambient_vec(w.basis().row(a))).collect();
        Subspace::from_rows(self.carrier.ambient(), rows)
    }

    pub fn to_local_subspace(&self, w: &Subspace) -> Option<Subspace> {
        let mut rows = Vec::new();
        for a in 0..w.dim() {
            rows.push(self.to_local_vec(w.basis().row(a))?);
        }
        Some(Subspace::from_rows(self.algebra.dim(), rows))
    }
}

/// Associative matrix algebra given by an echelonized basis, generated from
/// a finite set of operators. Closure under right multiplication by the
/// generators suffices: every word extends a shorter word by one generator.
#[derive(Debug, Clone)]
pub struct AssociativeHull {
    pub ambient_dim: usize,
    pub basis: Vec<Matrix>,
    span: Subspace,
}

impl AssociativeHull {
    pub fn generate(ambient_dim: usize, generators: &[Matrix]) -> Self {
        let flat_len = ambient_dim * ambient_dim;
        let mut span = Subspace::zero(flat_len);
        let mut worklist: Vec<Matrix> = Vec::new();
        for g in generators {
            assert_eq!((g.rows, g.cols), (ambient_dim, ambient_dim));
            if !span.contains_vector(&g.flatten()) {
                span = span.sum(&Subspace::from_rows(flat_len, vec![g.flatten()]));
                worklist.push(g.clone());
            }
        }
        let mut idx = 0;
        while idx < worklist.len() {
            let w = worklist[idx].clone();
            idx += 1;
            for g in generators {
                let p = w.mul(g);
                if !span.contains_vector(&p.flatten()) {
                    span = span.sum(&Subspace::from_rows(flat_len, vec![p.flatten()]));
                    worklist.push(p);
                }
            }
        }
        let basis: Vec<Matrix> = (0..span.dim())
            .map(|i| Matrix::from_flat(ambient_dim, ambient_dim, span.basis().row_vec(i)))
            .collect();
        AssociativeHull { ambient_dim, basis, span }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.span.contains_vector(&m.flatten())
    }

    /// Coordinates of a member operator in the echelon basis.
    pub fn coordinates(&self, m: &Matrix) -> Option<Vec<Rational>> {
        self.span.coordinates(&m.flatten())
    }

    /// Gram matrix of the trace form tr(ab) on the basis.
    pub fn trace_gram(&self) -> Matrix {
        let d = self.dim();
        let mut g = Matrix::zeros(d, d);
        for i in 0..d {
            for j in i..d {
                let t = self.basis[i].mul(&self.basis[j]).trace();
                g[(i, j)] = t.clone();
                g[(j, i)] = t;
            }
        }
        g
    }

    /// Basis of the trace-form radical, as operators. In characteristic
    /// zero this is the Jacobson radical of the hull.
    pub fn trace_radical(&self) -> Vec<Matrix> {
        let ker = kernel(&self.trace_gram());
        (0..ker.dim())
            .map(|i| {
                let coeffs = ker.basis().row(i);
                let mut m = Matrix::zeros(self.ambient_dim, self.ambient_dim);
                for (b, c) in coeffs.iter().enumerate() {
                    if !c.is_zero() {
                        m = m.add(&self.basis[b].scale(c));
                    }
                }
                m
            })
            .collect()
    }

    /// Center of the hull: members commuting with every basis element.
    pub fn center(&self) -> Vec<Matrix> {
        let d = self.dim();
        if d == 0 {
            return Vec::new();
        }
        let flat_len = self.ambient_dim * self.ambient_dim;
        // Unknown z = sum x_b basis_b with [z, basis_q] = 0 for all q.
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for q in 0..d {
            let comms: Vec<Vec<Rational>> = (0..d)
                .map(|b| {
                    self.basis[b]
                        .mul(&self.basis[q])
                        .sub(&self.basis[q].mul(&self.basis[b]))
                        .flatten()
                })
                .collect();
            for entry in 0..flat_len {
                rows.push(comms.iter().map(|f| f[entry].clone()).collect());
            }
        }
        let ker = kernel(&Matrix::from_rows(rows));
        (0..ker.dim())
            .map(|i| {
                let coeffs = ker.basis().row(i);
                let mut m = Matrix::zeros(self.ambient_dim, self.ambient_dim);
                for (b, c) in coeffs.iter().enumerate() {
                    if !c.is_zero() {
                        m = m.add(&self.basis[b].scale(c));
                    }
                }
                m
            })
            .collect()
    }
}

/// Canonical projection matrix onto a subspace along the span of the
/// standard basis vectors at its free coordinates; rows give coordinates in
/// the subspace's echelon basis.
pub fn echelon_projection(w: &Subspace) -> Matrix {
    let n = w.ambient();
    let mut m = Matrix::zeros(w.dim(), n);
    for (r, &p) in w.pivots().iter().enumerate() {
        m[(r, p)] = Rational::from_integer(1.into());
    }
    let _ = rref_with_pivots(w.basis()); // canonical by construction
    m
}
