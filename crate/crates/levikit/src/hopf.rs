//! Finite-dimensional Hopf algebras over Q as explicit tensors.
//!
//! A Hopf algebra is stored as raw data: a multiplication tensor, a
//! comultiplication tensor, unit and counit vectors, and an antipode matrix.
//! `validate` brute-forces every axiom by tensor contraction, which is cheap
//! at the dimensions this crate targets. Group algebras and the
//! four-dimensional Sweedler algebra are built in; duals are computed by
//! transposing tensors.
//!
//! The integral machinery searches H* for functionals t with
//! t(a_(2)) a_(1) = t(a) 1 on every a, normalizes t(1) = 1 when possible,
//! and reports whether t(a_(1) b S(a_(2))) = eps(a) t(b) holds. Averaging
//! operators elsewhere in the crate demand exactly these certificates.

use crate::exactmat::{kernel, Matrix, Rational, Subspace};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error("multiplication is not associative at basis triple ({i},{j},{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("unit vector does not act as identity on basis element {i}")]
    UnitFailure { i: usize },
    #[error("comultiplication is not coassociative at basis element {i}")]
    NotCoassociative { i: usize },
    #[error("counit axiom fails at basis element {i}")]
    CounitFailure { i: usize },
    #[error("comultiplication is not an algebra map at basis pair ({i},{j})")]
    ComultNotMultiplicative { i: usize, j: usize },
    #[error("counit is not an algebra map at basis pair ({i},{j})")]
    CounitNotMultiplicative { i: usize, j: usize },
    #[error("antipode axiom fails at basis element {i}")]
    AntipodeFailure { i: usize },
    #[error("not a group table: {0}")]
    NotAGroup(String),
    #[error("the integral equations only have the zero solution")]
    NoIntegral,
    #[error("no integral takes a nonzero value on 1 (integral space dimension {space_dim})")]
    NormalizationImpossible { space_dim: usize },
    #[error("malformed Hopf data: {0}")]
    Shape(String),
}

/// Identity index and inverse table of a finite group presented by its
/// multiplication table; the error names the first failed group axiom.
pub fn validate_group_table(table: &[Vec<usize>]) -> Result<(usize, Vec<usize>), HopfError> {
    let n = table.len();
    if n == 0 {
        return Err(HopfError::NotAGroup("empty table".into()));
    }
    for row in table {
        if row.len() != n || row.iter().any(|&e| e >= n) {
            return Err(HopfError::NotAGroup("table is not square over 0..n".into()));
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|j| table[e][j] == j && table[j][e] == j))
        .ok_or_else(|| HopfError::NotAGroup("no identity element".into()))?;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if table[table[i][j]][k] != table[i][table[j][k]] {
                    return Err(HopfError::NotAGroup(format!(
                        "associativity fails at ({},{},{})",
                        i, j, k
                    )));
                }
            }
        }
    }
    let mut inv = vec![usize::MAX; n];
    for i in 0..n {
        match (0..n).find(|&j| table[i][j] == identity && table[j][i] == identity) {
            Some(j) => inv[i] = j,
            None => return Err(HopfError::NotAGroup(format!("element {} has no inverse", i))),
        }
    }
    Ok((identity, inv))
}

/// A functional t in H* certified (or not) as normalized and ad-invariant.
///
/// `functional[i]` is t(e_i). The flags record checks made against the
/// algebra the integral was extracted from; consumers that average with t
/// must require the flags they need.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Integral {
    pub functional: Vec<Rational>,
    pub normalized: bool,
    pub ad_invariant: bool,
}

impl Integral {
    /// t applied to an element of H given in coordinates.
    pub fn apply(&self, a: &[Rational]) -> Rational {
        self.functional
            .iter()
            .zip(a)
            .map(|(t, c)| t * c)
            .fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// Hopf algebra data over Q. Basis-indexed tensors, flat row-major layout.
///
/// * `mul[(i*n + j)*n + k]` is the coefficient of e_k in e_i e_j,
/// * `comul[(i*n + j)*n + k]` is the coefficient of e_j (x) e_k in Delta(e_i),
/// * `unit` holds the coordinates of 1, `counit[i]` is eps(e_i),
/// * column i of `antipode` is S(e_i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfAlgebra {
    dim: usize,
    mul: Vec<Rational>,
    comul: Vec<Rational>,
    unit: Vec<Rational>,
    counit: Vec<Rational>,
    antipode: Matrix,
    labels: Option<Vec<String>>,
}

impl HopfAlgebra {
    pub fn new(
        dim: usize,
        mul: Vec<Rational>,
        comul: Vec<Rational>,
        unit: Vec<Rational>,
        counit: Vec<Rational>,
        antipode: Matrix,
        labels: Option<Vec<String>>,
    ) -> Result<Self, HopfError> {
        let n3 = dim * dim * dim;
        if mul.len() != n3 || comul.len() != n3 {
            return Err(HopfError::Shape(format!(
                "tensors must have {} entries at dimension {}",
                n3, dim
            )));
        }
        if unit.len() != dim || counit.len() != dim {
            return Err(HopfError::Shape("unit/counit length mismatch".into()));
        }
        if antipode.rows != dim || antipode.cols != dim {
            return Err(HopfError::Shape("antipode must be a square matrix".into()));
        }
        if let Some(ls) = &labels {
            if ls.len() != dim {
                return Err(HopfError::Shape("label count mismatch".into()));
            }
        }
        Ok(HopfAlgebra {
            dim,
            mul,
            comul,
            unit,
            counit,
            antipode,
            labels,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn unit_vector(&self) -> &[Rational] {
        &self.unit
    }

    pub fn counit_vector(&self) -> &[Rational] {
        &self.counit
    }

    pub fn antipode_matrix(&self) -> &Matrix {
        &self.antipode
    }

    /// Coefficient of e_k in e_i e_j.
    pub fn mul_at(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.mul[(i * self.dim + j) * self.dim + k]
    }

    /// Coefficient of e_j (x) e_k in Delta(e_i).
    pub fn comul_at(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.comul[(i * self.dim + j) * self.dim + k]
    }

    /// Product of two elements given in coordinates.
    pub fn multiply(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[j].is_zero() {
                    continue;
                }
                let scale = &a[i] * &b[j];
                for k in 0..n {
                    let c = self.mul_at(i, j, k);
                    if !c.is_zero() {
                        out[k] += &scale * c;
                    }
                }
            }
        }
        out
    }

    /// Delta applied to an element; result is a flat tensor of length n^2
    /// with the coefficient of e_j (x) e_k at index j*n + k.
    pub fn comultiply(&self, a: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n * n];
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                for k in 0..n {
                    let c = self.comul_at(i, j, k);
                    if !c.is_zero() {
                        out[j * n + k] += &a[i] * c;
                    }
                }
            }
        }
        out
    }

    pub fn counit_of(&self, a: &[Rational]) -> Rational {
        self.counit
            .iter()
            .zip(a)
            .map(|(e, c)| e * c)
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn antipode_of(&self, a: &[Rational]) -> Vec<Rational> {
        self.antipode.apply(a)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim;
        for i in 0..n {
            for j in 0..i {
                for k in 0..n {
                    if self.mul_at(i, j, k) != self.mul_at(j, i, k) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..j {
                    if self.comul_at(i, j, k) != self.comul_at(i, k, j) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Check every Hopf axiom. Errors carry the first offending basis index.
    pub fn validate(&self) -> Result<(), HopfError> {
        let n = self.dim;
        let basis = |i: usize| {
            let mut v = vec![Rational::zero(); n];
            v[i] = Rational::one();
            v
        };

        // Unit: 1 e_i = e_i 1 = e_i.
        for i in 0..n {
            let e = basis(i);
            if self.multiply(&self.unit, &e) != e || self.multiply(&e, &self.unit) != e {
                return Err(HopfError::UnitFailure { i });
            }
        }

        // Associativity on basis triples.
        for i in 0..n {
            for j in 0..n {
                let ij = self.multiply(&basis(i), &basis(j));
                for k in 0..n {
                    let jk = self.multiply(&basis(j), &basis(k));
                    if self.multiply(&ij, &basis(k)) != self.multiply(&basis(i), &jk) {
                        return Err(HopfError::NotAssociative { i, j, k });
                    }
                }
            }
        }

        // Coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta.
        for i in 0..n {
            let mut lhs = vec![Rational::zero(); n * n * n];
            let mut rhs = vec![Rational::zero(); n * n * n];
            for p in 0..n {
                for q in 0..n {
                    let c = self.comul_at(i, p, q).clone();
                    if c.is_zero() {
                        continue;
                    }
                    // Left leg expands: coefficient lands at (a, b, q).
                    for a in 0..n {
                        for b in 0..n {
                            let d = self.comul_at(p, a, b);
                            if !d.is_zero() {
                                lhs[(a * n + b) * n + q] += &c * d;
                            }
                        }
                    }
                    // Right leg expands: coefficient lands at (p, b, c2).
                    for b in 0..n {
                        for c2 in 0..n {
                            let d = self.comul_at(q, b, c2);
                            if !d.is_zero() {
                                rhs[(p * n + b) * n + c2] += &c * d;
                            }
                        }
                    }
                }
            }
            if lhs != rhs {
                return Err(HopfError::NotCoassociative { i });
            }
        }

        // Counit: both partial contractions of Delta(e_i) return e_i.
        for i in 0..n {
            for k in 0..n {
                let mut left = Rational::zero();
                let mut right = Rational::zero();
                for j in 0..n {
                    left += self.comul_at(i, j, k) * &self.counit[j];
                    right += self.comul_at(i, k, j) * &self.counit[j];
                }
                let expect = if k == i {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                if left != expect || right != expect {
                    return Err(HopfError::CounitFailure { i });
                }
            }
        }

        // Delta and eps are algebra maps; Delta(1) = 1 (x) 1; eps(1) = 1.
        for i in 0..n {
            for j in 0..n {
                let prod = self.multiply(&basis(i), &basis(j));
                let lhs = self.comultiply(&prod);
                let mut rhs = vec![Rational::zero(); n * n];
                for a1 in 0..n {
                    for b1 in 0..n {
                        let c1 = self.comul_at(i, a1, b1).clone();
                        if c1.is_zero() {
                            continue;
                        }
                        for a2 in 0..n {
                            for b2 in 0..n {
                                let c2 = self.comul_at(j, a2, b2);
                                if c2.is_zero() {
                                    continue;
                                }
                                let scale = &c1 * c2;
                                for a in 0..n {
                                    let m1 = self.mul_at(a1, a2, a);
                                    if m1.is_zero() {
                                        continue;
                                    }
                                    for b in 0..n {
                                        let m2 = self.mul_at(b1, b2, b);
                                        if !m2.is_zero() {
                                            rhs[a * n + b] += &scale * m1 * m2;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
                if lhs != rhs {
                    return Err(HopfError::ComultNotMultiplicative { i, j });
                }
                if self.counit_of(&prod) != &self.counit[i] * &self.counit[j] {
                    return Err(HopfError::CounitNotMultiplicative { i, j });
                }
            }
        }
        let unit_comul = self.comultiply(&self.unit);
        let mut unit_sq = vec![Rational::zero(); n * n];
        for j in 0..n {
            for k in 0..n {
                unit_sq[j * n + k] = &self.unit[j] * &self.unit[k];
            }
        }
        if unit_comul != unit_sq || !self.counit_of(&self.unit).is_one() {
            return Err(HopfError::CounitFailure { i: 0 });
        }

        // Antipode: mu (S (x) id) Delta = unit . eps = mu (id (x) S) Delta.
        for i in 0..n {
            let mut left = vec![Rational::zero(); n];
            let mut right = vec![Rational::zero(); n];
            for j in 0..n {
                for k in 0..n {
                    let c = self.comul_at(i, j, k).clone();
                    if c.is_zero() {
                        continue;
                    }
                    for p in 0..n {
                        let s = &self.antipode[(p, j)];
                        if !s.is_zero() {
                            for l in 0..n {
                                let m = self.mul_at(p, k, l);
                                if !m.is_zero() {
                                    left[l] += &c * s * m;
                                }
                            }
                        }
                        let s2 = &self.antipode[(p, k)];
                        if !s2.is_zero() {
                            for l in 0..n {
                                let m = self.mul_at(j, p, l);
                                if !m.is_zero() {
                                    right[l] += &c * s2 * m;
                                }
                            }
                        }
                    }
                }
            }
            let expect: Vec<Rational> = self.unit.iter().map(|u| u * &self.counit[i]).collect();
            if left != expect || right != expect {
                return Err(HopfError::AntipodeFailure { i });
            }
        }
        Ok(())
    }

    /// The group algebra FG of a finite group given by its multiplication
    /// table, together with its canonical integral (the indicator of the
    /// identity element, which is normalized and ad-invariant).
    pub fn group_algebra(
        table: &[Vec<usize>],
        labels: Option<Vec<String>>,
    ) -> Result<(Self, Integral), HopfError> {
        let (e, inv) = validate_group_table(table)?;
        let n = table.len();

        let mut mul = vec![Rational::zero(); n * n * n];
        let mut comul = vec![Rational::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                mul[(i * n + j) * n + table[i][j]] = Rational::one();
            }
            comul[(i * n + i) * n + i] = Rational::one();
        }
        let mut unit = vec![Rational::zero(); n];
        unit[e] = Rational::one();
        let counit = vec![Rational::one(); n];
        let antipode = Matrix::from_fn(n, n, |r, c| {
            if r == inv[c] {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let h = HopfAlgebra::new(n, mul, comul, unit, counit, antipode, labels)?;
        let mut functional = vec![Rational::zero(); n];
        functional[e] = Rational::one();
        let t = Integral {
            functional,
            normalized: true,
            ad_invariant: true,
        };
        debug_assert!(h.is_left_integral(&t.functional));
        debug_assert!(h.is_ad_invariant_functional(&t.functional));
        Ok((h, t))
    }

    /// The four-dimensional Sweedler algebra in the basis (1, g, x, gx):
    /// g^2 = 1, x^2 = 0, xg = -gx, Delta(g) = g (x) g,
    /// Delta(x) = g (x) x + x (x) 1, S(g) = g, S(x) = -gx.
    ///
    /// Not semisimple and not cosemisimple: its integrals all kill 1, which
    /// is what makes it the standard counterexample to equivariant lifting.
    pub fn sweedler4() -> Self {
        let n = 4;
        let one = Rational::one;
        let mut mul = vec![Rational::zero(); n * n * n];
        let mut set = |i: usize, j: usize, k: usize, v: Rational| {
            mul[(i * n + j) * n + k] = v;
        };
        for j in 0..n {
            set(0, j, j, one());
            if j > 0 {
                set(j, 0, j, one());
            }
        }
        set(1, 1, 0, one()); // g g = 1
        set(1, 2, 3, one()); // g x = gx
        set(1, 3, 2, one()); // g gx = x
        set(2, 1, 3, -one()); // x g = -gx
        set(3, 1, 2, -one()); // gx g = -x

        let mut comul = vec![Rational::zero(); n * n * n];
        let mut cset = |i: usize, j: usize, k: usize, v: Rational| {
            comul[(i * n + j) * n + k] = v;
        };
        cset(0, 0, 0, one());
        cset(1, 1, 1, one());
        cset(2, 1, 2, one()); // g (x) x
        cset(2, 2, 0, one()); // x (x) 1
        cset(3, 0, 3, one()); // 1 (x) gx
        cset(3, 3, 1, one()); // gx (x) g

        let unit = vec![one(), Rational::zero(), Rational::zero(), Rational::zero()];
        let counit = vec![one(), one(), Rational::zero(), Rational::zero()];
        let mut s = Matrix::zeros(n, n);
        s[(0, 0)] = one();
        s[(1, 1)] = one();
        s[(3, 2)] = -one(); // S(x) = -gx
        s[(2, 3)] = one(); // S(gx) = x
        HopfAlgebra::new(
            n,
            mul,
            comul,
            unit,
            counit,
            s,
            Some(vec!["1".into(), "g".into(), "x".into(), "gx".into()]),
        )
        .expect("built-in tensors are well shaped")
    }

    /// The dual Hopf algebra on the dual basis: multiplication is the
    /// transpose of Delta, comultiplication the transpose of mu, unit and
    /// counit swap with counit and unit, and the antipode transposes.
    pub fn dual_hopf(&self) -> Self {
        let n = self.dim;
        let mut mul = vec![Rational::zero(); n * n * n];
        let mut comul = vec![Rational::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    mul[(j * n + k) * n + i] = self.comul_at(i, j, k).clone();
                    comul[(i * n + j) * n + k] = self.mul_at(j, k, i).clone();
                }
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|ls| ls.iter().map(|l| format!("{}*", l)).collect());
        HopfAlgebra::new(
            n,
            mul,
            comul,
            self.counit.clone(),
            self.unit.clone(),
            self.antipode.transpose(),
            labels,
        )
        .expect("dual of well-shaped tensors is well shaped")
    }

    /// Does t satisfy t(a_(2)) a_(1) = t(a) 1 on every basis element?
    pub fn is_left_integral(&self, t: &[Rational]) -> bool {
        let n = self.dim;
        for i in 0..n {
            for p in 0..n {
                let mut acc = Rational::zero();
                for q in 0..n {
                    acc += self.comul_at(i, p, q) * &t[q];
                }
                if acc != &t[i] * &self.unit[p] {
                    return false;
                }
            }
        }
        true
    }

    /// Does t satisfy t(a_(1) b S(a_(2))) = eps(a) t(b) on all basis pairs?
    pub fn is_ad_invariant_functional(&self, t: &[Rational]) -> bool {
        let n = self.dim;
        let apply_t = |v: &[Rational]| -> Rational {
            v.iter()
                .zip(t)
                .map(|(c, tc)| c * tc)
                .fold(Rational::zero(), |acc, x| acc + x)
        };
        let mut basis = Vec::with_capacity(n);
        for i in 0..n {
            let mut v = vec![Rational::zero(); n];
            v[i] = Rational::one();
            basis.push(v);
        }
        for i in 0..n {
            for j in 0..n {
                let mut lhs = Rational::zero();
                for p in 0..n {
                    for q in 0..n {
                        let c = self.comul_at(i, p, q);
                        if c.is_zero() {
                            continue;
                        }
                        let pj = self.multiply(&basis[p], &basis[j]);
                        let sq = self.antipode.col_vec(q);
                        lhs += c * apply_t(&self.multiply(&pj, &sq));
                    }
                }
                if lhs != &self.counit[i] * &t[j] {
                    return false;
                }
            }
        }
        true
    }

    /// Solution space of the left integral identity inside H*.
    pub fn left_integral_space(&self) -> Subspace {
        let n = self.dim;
        let mut rows = Matrix::zeros(n * n, n);
        for i in 0..n {
            for p in 0..n {
                for q in 0..n {
                    let mut c = self.comul_at(i, p, q).clone();
                    if q == i {
                        c -= &self.unit[p];
                    }
                    rows[(i * n + p, q)] = c;
                }
            }
        }
        kernel(&rows)
    }

    /// A left integral with t(1) = 1, when one exists, with its
    /// ad-invariance recorded. Scaling is the only freedom used: the
    /// normalized integral is unique whenever the integral space is a line,
    /// which is the case for every finite-dimensional Hopf algebra.
    pub fn find_normalized_integral(&self) -> Result<Integral, HopfError> {
        let space = self.left_integral_space();
        if space.dim() == 0 {
            return Err(HopfError::NoIntegral);
        }
        for row in space.basis_rows() {
            let at_one: Rational = row
                .iter()
                .zip(&self.unit)
                .map(|(t, u)| t * u)
                .fold(Rational::zero(), |acc, x| acc + x);
            if !at_one.is_zero() {
                let functional: Vec<Rational> = row.iter().map(|t| t / &at_one).collect();
                let ad_invariant = self.is_ad_invariant_functional(&functional);
                return Ok(Integral {
                    functional,
                    normalized: true,
                    ad_invariant,
                });
            }
        }
        Err(HopfError::NormalizationImpossible {
            space_dim: space.dim(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::rat;
    use crate::samples;

    fn basis(n: usize, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); n];
        v[i] = Rational::one();
        v
    }

    #[test]
    fn sweedler_tables_and_axioms() {
        let h = HopfAlgebra::sweedler4();
        h.validate().unwrap();
        assert!(!h.is_commutative());
        assert!(!h.is_cocommutative());

        // x g = -gx, gx g = -x, x^2 = 0, (gx)(gx) = 0.
        let g = basis(4, 1);
        let x = basis(4, 2);
        let gx = basis(4, 3);
        let mut minus_gx = vec![Rational::zero(); 4];
        minus_gx[3] = rat(-1);
        assert_eq!(h.multiply(&x, &g), minus_gx);
        let mut minus_x = vec![Rational::zero(); 4];
        minus_x[2] = rat(-1);
        assert_eq!(h.multiply(&gx, &g), minus_x);
        assert!(h.multiply(&x, &x).iter().all(|c| c.is_zero()));
        assert!(h.multiply(&gx, &gx).iter().all(|c| c.is_zero()));

        // Delta(gx) = 1 (x) gx + gx (x) g.
        let dgx = h.comultiply(&gx);
        let mut expect = vec![Rational::zero(); 16];
        expect[3] = rat(1); // 1 (x) gx
        expect[3 * 4 + 1] = rat(1); // gx (x) g
        assert_eq!(dgx, expect);

        // S(x) = -gx, S(gx) = x, so S^2 = -1 on x and S^2 != id.
        assert_eq!(h.antipode_of(&x), minus_gx);
        assert_eq!(h.antipode_of(&gx), x);
        let s2 = h.antipode_matrix().mul(h.antipode_matrix());
        assert_ne!(s2, Matrix::identity(4));
    }

    #[test]
    fn sweedler_integrals_kill_one() {
        let h = HopfAlgebra::sweedler4();
        let space = h.left_integral_space();
        assert_eq!(space.dim(), 1);
        // The integral space is spanned by the dual vector of gx.
        assert_eq!(
            space.basis_rows()[0],
            vec![rat(0), rat(0), rat(0), rat(1)]
        );
        assert!(h.is_left_integral(&space.basis_rows()[0]));
        match h.find_normalized_integral() {
            Err(HopfError::NormalizationImpossible { space_dim: 1 }) => {}
            other => panic!("expected NormalizationImpossible, got {:?}", other),
        }
        // The dual is just as bad: no normalized integral on either side.
        let dual = h.dual_hopf();
        dual.validate().unwrap();
        assert!(matches!(
            dual.find_normalized_integral(),
            Err(HopfError::NormalizationImpossible { .. })
        ));
    }

    #[test]
    fn group_algebra_of_s3() {
        let (h, t) = HopfAlgebra::group_algebra(&samples::s3_table(), None).unwrap();
        h.validate().unwrap();
        assert!(!h.is_commutative());
        assert!(h.is_cocommutative());
        assert!(t.normalized && t.ad_invariant);
        assert!(h.is_left_integral(&t.functional));
        assert!(h.is_ad_invariant_functional(&t.functional));
        let found = h.find_normalized_integral().unwrap();
        assert_eq!(found.functional, t.functional);
        assert!(found.ad_invariant);
    }

    #[test]
    fn dual_of_group_algebra() {
        let (h, _) = HopfAlgebra::group_algebra(&samples::s3_table(), None).unwrap();
        let dual = h.dual_hopf();
        dual.validate().unwrap();
        // Functions on a group: commutative, cocommutative only if abelian.
        assert!(dual.is_commutative());
        assert!(!dual.is_cocommutative());
        // Commutative Hopf algebras have ad-invariant integrals; here the
        // normalized integral is uniform averaging over the group.
        let t = dual.find_normalized_integral().unwrap();
        assert!(t.ad_invariant);
        assert_eq!(t.functional, vec![crate::exactmat::ratio(1, 6); 6]);
        // Double dual returns the original tensors.
        assert_eq!(dual.dual_hopf().mul, h.mul);
        assert_eq!(dual.dual_hopf().comul, h.comul);

        let (z2, _) = HopfAlgebra::group_algebra(&samples::cyclic_table(2), None).unwrap();
        let dz2 = z2.dual_hopf();
        dz2.validate().unwrap();
        let t2 = dz2.find_normalized_integral().unwrap();
        assert!(t2.normalized && t2.ad_invariant);
    }

    #[test]
    fn broken_antipode_is_rejected() {
        let mut h = HopfAlgebra::sweedler4();
        h.antipode[(3, 2)] = rat(1); // S(x) = gx violates the axiom
        assert!(matches!(
            h.validate(),
            Err(HopfError::AntipodeFailure { .. })
        ));
    }

    #[test]
    fn non_groups_are_rejected() {
        // Associativity failure: (1 1) 2 = 2 but 1 (2 2) = 1.
        let bad = vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 0]];
        assert!(matches!(
            HopfAlgebra::group_algebra(&bad, None),
            Err(HopfError::NotAGroup(_))
        ));
        // Subtraction mod 3: a Latin square with no two-sided identity.
        let sub: Vec<Vec<usize>> = (0..3)
            .map(|i: usize| (0..3).map(|j| (3 + i - j) % 3).collect())
            .collect();
        assert!(matches!(
            HopfAlgebra::group_algebra(&sub, None),
            Err(HopfError::NotAGroup(_))
        ));
    }

    #[test]
    fn cyclic_group_integrals() {
        for n in [2usize, 3, 4] {
            let (h, t) = HopfAlgebra::group_algebra(&samples::cyclic_table(n), None).unwrap();
            h.validate().unwrap();
            let found = h.find_normalized_integral().unwrap();
            assert_eq!(found.functional, t.functional);
        }
    }
}
