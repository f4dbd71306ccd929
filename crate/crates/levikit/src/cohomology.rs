//! Chevalley-Eilenberg cochains in degrees one to three, their coboundary
//! operators, colinearity tests for cochains, and the constructive solver
//! that writes a 2-cocycle as the coboundary of a 1-cochain, optionally
//! inside the colinear subcomplex (solve plainly, then average).

use crate::action::{
    validate_graded_module, validate_hlmodule, ActionError, ComoduleStructure, GradedModule,
    Grading, HLModule,
};
use crate::exactmat::{solve, MatError, Matrix, Rational};
use crate::hopf::Integral;
use crate::liealg::LieAlgebra;
use crate::maschke::{average_colinear, average_graded, LinearMap, MaschkeError};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("right-hand side is not a 2-cocycle")]
    NotACocycle,
    #[error("the coboundary equation has no solution")]
    NoSolution,
    #[error("colinear solving needs a semisimple algebra (nondegenerate Killing form)")]
    NotSemisimple,
    #[error("colinear solving needs a symmetric module structure")]
    SymmetryRequired,
    #[error("right-hand side must itself be colinear")]
    CochainNotColinear,
    #[error("no usable integral: need a normalized ad-invariant left integral")]
    IntegralUnavailable,
    #[error("malformed cochain data: {0}")]
    Shape(String),
    #[error("a lemma-guaranteed property failed; this is a bug: {0}")]
    InternalInconsistency(String),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Averaging(#[from] MaschkeError),
}

/// A 1-cochain is a linear map from the algebra to the module.
pub type Cochain1 = LinearMap;

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// An alternating bilinear map L x L -> V, stored on basis pairs i < j so
/// that alternation holds structurally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain2 {
    pub algebra_dim: usize,
    pub module_dim: usize,
    vals: Vec<Vec<Rational>>,
}

impl Cochain2 {
    pub fn zero(algebra_dim: usize, module_dim: usize) -> Self {
        Cochain2 {
            algebra_dim,
            module_dim,
            vals: vec![vec![Rational::zero(); module_dim]; pair_count(algebra_dim)],
        }
    }

    /// Value on (e_i, e_j) for any index order; antisymmetry is applied.
    pub fn get(&self, i: usize, j: usize) -> Vec<Rational> {
        if i == j {
            return vec![Rational::zero(); self.module_dim];
        }
        if i < j {
            self.vals[pair_index(self.algebra_dim, i, j)].clone()
        } else {
            self.vals[pair_index(self.algebra_dim, j, i)]
                .iter()
                .map(|c| -c)
                .collect()
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: Vec<Rational>) {
        assert!(i < j && v.len() == self.module_dim);
        self.vals[pair_index(self.algebra_dim, i, j)] = v;
    }

    /// Bilinear evaluation on coordinate vectors.
    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.module_dim];
        for i in 0..self.algebra_dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.algebra_dim {
                if y[j].is_zero() || i == j {
                    continue;
                }
                let scale = &x[i] * &y[j];
                for (w, c) in self.get(i, j).into_iter().enumerate() {
                    if !c.is_zero() {
                        out[w] += &scale * c;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.vals.iter().all(|v| v.iter().all(|c| c.is_zero()))
    }
}

fn triple_index(n: usize, i: usize, j: usize, k: usize) -> usize {
    debug_assert!(i < j && j < k && k < n);
    // Triples before (i,j,k) in lexicographic order.
    let c2 = |m: usize| m * (m - 1) / 2;
    let mut idx = 0;
    for a in 0..i {
        idx += c2(n - 1 - a);
    }
    for b in (i + 1)..j {
        idx += n - 1 - b;
    }
    idx + (k - j - 1)
}

fn triple_count(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// An alternating trilinear map stored on basis triples i < j < k; only
/// needed as the codomain of the degree-2 coboundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain3 {
    pub algebra_dim: usize,
    pub module_dim: usize,
    vals: Vec<Vec<Rational>>,
}

impl Cochain3 {
    pub fn zero(algebra_dim: usize, module_dim: usize) -> Self {
        Cochain3 {
            algebra_dim,
            module_dim,
            vals: vec![vec![Rational::zero(); module_dim]; triple_count(algebra_dim)],
        }
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &[Rational] {
        &self.vals[triple_index(self.algebra_dim, i, j, k)]
    }

    fn entry_mut(&mut self, i: usize, j: usize, k: usize) -> &mut Vec<Rational> {
        let idx = triple_index(self.algebra_dim, i, j, k);
        &mut self.vals[idx]
    }

    pub fn is_zero(&self) -> bool {
        self.vals.iter().all(|v| v.iter().all(|c| c.is_zero()))
    }
}

fn check_rep_shape(l: &LieAlgebra, psi: &[Matrix]) -> Result<usize, CohomologyError> {
    if psi.len() != l.dim() {
        return Err(CohomologyError::Shape(
            "one representation matrix per basis element".into(),
        ));
    }
    let dv = psi.first().map(|m| m.rows).unwrap_or(0);
    for m in psi {
        if m.rows != dv || m.cols != dv {
            return Err(CohomologyError::Shape("representation matrices must be square".into()));
        }
    }
    Ok(dv)
}

/// Degree-1 coboundary: (dw)(x, y) = psi(x) w(y) - psi(y) w(x) - w([x, y]).
pub fn coboundary1(l: &LieAlgebra, psi: &[Matrix], w: &Cochain1) -> Result<Cochain2, CohomologyError> {
    let dv = check_rep_shape(l, psi)?;
    if w.source_dim() != l.dim() || w.target_dim() != dv {
        return Err(CohomologyError::Shape("cochain shape mismatch".into()));
    }
    let n = l.dim();
    let mut out = Cochain2::zero(n, dv);
    for i in 0..n {
        for j in (i + 1)..n {
            let a = psi[i].apply(&w.matrix.col_vec(j));
            let b = psi[j].apply(&w.matrix.col_vec(i));
            let c = w.apply(l.bracket_basis(i, j));
            let val = (0..dv).map(|t| &a[t] - &b[t] - &c[t]).collect();
            out.set(i, j, val);
        }
    }
    Ok(out)
}

/// Degree-2 coboundary: the standard Chevalley-Eilenberg operator
/// (dw)(x,y,z) = psi(x)w(y,z) - psi(y)w(x,z) + psi(z)w(x,y)
///             - w([x,y],z) + w([x,z],y) - w([y,z],x).
pub fn coboundary2(l: &LieAlgebra, psi: &[Matrix], w: &Cochain2) -> Result<Cochain3, CohomologyError> {
    let dv = check_rep_shape(l, psi)?;
    if w.algebra_dim != l.dim() || w.module_dim != dv {
        return Err(CohomologyError::Shape("cochain shape mismatch".into()));
    }
    let n = l.dim();
    let mut out = Cochain3::zero(n, dv);
    let basis = |i: usize| -> Vec<Rational> {
        let mut e = vec![Rational::zero(); n];
        e[i] = Rational::one();
        e
    };
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let mut val = psi[i].apply(&w.get(j, k));
                for (t, c) in psi[j].apply(&w.get(i, k)).into_iter().enumerate() {
                    val[t] -= c;
                }
                for (t, c) in psi[k].apply(&w.get(i, j)).into_iter().enumerate() {
                    val[t] += c;
                }
                for (t, c) in w.eval(l.bracket_basis(i, j), &basis(k)).into_iter().enumerate() {
                    val[t] -= c;
                }
                for (t, c) in w.eval(l.bracket_basis(i, k), &basis(j)).into_iter().enumerate() {
                    val[t] += c;
                }
                for (t, c) in w.eval(l.bracket_basis(j, k), &basis(i)).into_iter().enumerate() {
                    val[t] -= c;
                }
                *out.entry_mut(i, j, k) = val;
            }
        }
    }
    Ok(out)
}

/// Equivariance data for cochain colinearity tests: matched comodule
/// structures or matched gradings on the algebra and the module.
pub enum EquivData<'a> {
    Comodule {
        rho_l: &'a ComoduleStructure,
        rho_v: &'a ComoduleStructure,
    },
    Graded {
        g_l: &'a Grading,
        g_v: &'a Grading,
    },
}

/// Colinearity of a 1-cochain:
/// rho_V(w(a)) = w(a_(0)) (x) a_(1), or degree preservation when graded.
pub fn is_colinear_cochain1(w: &Cochain1, s: &EquivData) -> bool {
    match s {
        EquivData::Comodule { rho_l, rho_v } => crate::maschke::is_colinear_map(w, rho_l, rho_v),
        EquivData::Graded { g_l, g_v } => crate::maschke::is_graded_map(w, g_l, g_v),
    }
}

/// Colinearity of a 2-cochain:
/// rho_V(w(a,b)) = w(a_(0), b_(0)) (x) a_(1) b_(1) on all basis pairs, or
/// output degree = product of input degrees when graded.
pub fn is_colinear_cochain2(w: &Cochain2, s: &EquivData) -> bool {
    let n = w.algebra_dim;
    let dv = w.module_dim;
    match s {
        EquivData::Comodule { rho_l, rho_v } => {
            if rho_l.dim != n || rho_v.dim != dv || rho_l.hopf != rho_v.hopf {
                return false;
            }
            let hd = rho_l.hopf.dim();
            for i in 0..n {
                for j in (i + 1)..n {
                    let val = w.get(i, j);
                    let mut lhs = vec![Rational::zero(); dv * hd];
                    for (u, c) in val.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for t in 0..dv {
                            for s_ in 0..hd {
                                let r = rho_v.rho_at(u, t, s_);
                                if !r.is_zero() {
                                    lhs[t * hd + s_] += c * r;
                                }
                            }
                        }
                    }
                    let mut rhs = vec![Rational::zero(); dv * hd];
                    for p in 0..n {
                        for a in 0..hd {
                            let r1 = rho_l.rho_at(i, p, a).clone();
                            if r1.is_zero() {
                                continue;
                            }
                            for q in 0..n {
                                if p == q {
                                    continue;
                                }
                                for b in 0..hd {
                                    let r2 = rho_l.rho_at(j, q, b);
                                    if r2.is_zero() {
                                        continue;
                                    }
                                    let scale = &r1 * r2;
                                    for (t, c) in w.get(p, q).into_iter().enumerate() {
                                        if c.is_zero() {
                                            continue;
                                        }
                                        for s_ in 0..hd {
                                            let m = rho_l.hopf.mul_at(a, b, s_);
                                            if !m.is_zero() {
                                                rhs[t * hd + s_] += &scale * &c * m;
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
            true
        }
        EquivData::Graded { g_l, g_v } => {
            if g_l.dim() != n || g_v.dim() != dv {
                return false;
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    let target = match g_l.group.compose(g_l.degree(i), g_l.degree(j)) {
                        Ok(d) => d,
                        Err(_) => return false,
                    };
                    for (t, c) in w.get(i, j).into_iter().enumerate() {
                        if !c.is_zero() && g_v.degree(t) != &target {
                            return false;
                        }
                    }
                }
            }
            true
        }
    }
}

/// How to solve the coboundary equation: plainly, or inside the colinear
/// subcomplex with the matching equivariance witness.
pub enum SolveMode<'a> {
    Plain,
    ColinearComodule { module: &'a HLModule, t: &'a Integral },
    ColinearGraded { module: &'a GradedModule },
}

fn solve_plain(
    l: &LieAlgebra,
    psi: &[Matrix],
    phi: &Cochain2,
    dv: usize,
) -> Result<Cochain1, CohomologyError> {
    let n = l.dim();
    let unknowns = dv * n; // w[(p, q)] flattened as p * n + q
    let rows = pair_count(n) * dv;
    let mut a = Matrix::zeros(rows, unknowns);
    let mut b = vec![Rational::zero(); rows];
    for i in 0..n {
        for j in (i + 1)..n {
            let base = pair_index(n, i, j) * dv;
            let br = l.bracket_basis(i, j);
            for w in 0..dv {
                let row = base + w;
                for p in 0..dv {
                    let c1 = &psi[i][(w, p)];
                    if !c1.is_zero() {
                        a[(row, p * n + j)] += c1;
                    }
                    let c2 = &psi[j][(w, p)];
                    if !c2.is_zero() {
                        a[(row, p * n + i)] -= c2;
                    }
                }
                for (q, c) in br.iter().enumerate() {
                    if !c.is_zero() {
                        a[(row, w * n + q)] -= c;
                    }
                }
                b[row] = phi.get(i, j)[w].clone();
            }
        }
    }
    match solve(&a, &b) {
        Ok((x, _)) => {
            let m = Matrix::from_fn(dv, n, |p, q| x[p * n + q].clone());
            Ok(LinearMap::new(m))
        }
        Err(MatError::NoSolution) => Err(CohomologyError::NoSolution),
        Err(e) => Err(CohomologyError::Shape(e.to_string())),
    }
}

/// Solve d(omega) = phi for a 1-cochain omega. In the colinear modes the
/// hypotheses of the constructive vanishing lemma are checked up front
/// (cocycle, semisimplicity, symmetric module, usable integral, colinear
/// right-hand side), the plain solution is averaged, and the averaged
/// solution is verified to still satisfy the equation.
pub fn solve_coboundary(
    l: &LieAlgebra,
    psi: &[Matrix],
    phi: &Cochain2,
    mode: SolveMode,
) -> Result<Cochain1, CohomologyError> {
    let dv = check_rep_shape(l, psi)?;
    if phi.algebra_dim != l.dim() || phi.module_dim != dv {
        return Err(CohomologyError::Shape("cochain shape mismatch".into()));
    }
    if !coboundary2(l, psi, phi)?.is_zero() {
        return Err(CohomologyError::NotACocycle);
    }
    match mode {
        SolveMode::Plain => {
            let w = solve_plain(l, psi, phi, dv)?;
            if &coboundary1(l, psi, &w)? != phi {
                return Err(CohomologyError::InternalInconsistency(
                    "solver returned a non-solution".into(),
                ));
            }
            Ok(w)
        }
        SolveMode::ColinearComodule { module, t } => {
            if !l.killing_nondegenerate() {
                return Err(CohomologyError::NotSemisimple);
            }
            if module.algebra != *l || module.psi != psi || module.rho_v.dim != dv {
                return Err(CohomologyError::Shape(
                    "module witness does not match the solving data".into(),
                ));
            }
            if !validate_hlmodule(module)? {
                return Err(CohomologyError::SymmetryRequired);
            }
            let hopf = &module.rho_l.hopf;
            if !hopf.is_left_integral(&t.functional)
                || !hopf.is_ad_invariant_functional(&t.functional)
                || !t.apply(hopf.unit_vector()).is_one()
            {
                return Err(CohomologyError::IntegralUnavailable);
            }
            let data = EquivData::Comodule {
                rho_l: &module.rho_l,
                rho_v: &module.rho_v,
            };
            if !is_colinear_cochain2(phi, &data) {
                return Err(CohomologyError::CochainNotColinear);
            }
            let nu = solve_plain(l, psi, phi, dv)?;
            let avg = average_colinear(&nu, &module.rho_l, &module.rho_v, t, None)?;
            if &coboundary1(l, psi, &avg)? != phi {
                return Err(CohomologyError::InternalInconsistency(
                    "averaged solution stopped solving the equation".into(),
                ));
            }
            debug_assert!(is_colinear_cochain1(&avg, &data));
            Ok(avg)
        }
        SolveMode::ColinearGraded { module } => {
            if !l.killing_nondegenerate() {
                return Err(CohomologyError::NotSemisimple);
            }
            if module.algebra != *l || module.psi != psi || module.grading_v.dim() != dv {
                return Err(CohomologyError::Shape(
                    "module witness does not match the solving data".into(),
                ));
            }
            if !validate_graded_module(module)? {
                return Err(CohomologyError::SymmetryRequired);
            }
            let data = EquivData::Graded {
                g_l: &module.grading_l,
                g_v: &module.grading_v,
            };
            if !is_colinear_cochain2(phi, &data) {
                return Err(CohomologyError::CochainNotColinear);
            }
            let nu = solve_plain(l, psi, phi, dv)?;
            let avg = average_graded(&nu, &module.grading_l, &module.grading_v)?;
            if &coboundary1(l, psi, &avg)? != phi {
                return Err(CohomologyError::InternalInconsistency(
                    "averaged solution stopped solving the equation".into(),
                ));
            }
            debug_assert!(is_colinear_cochain1(&avg, &data));
            Ok(avg)
        }
    }
}

/// The bracket as a 2-cochain with values in the adjoint module.
pub fn bracket_cochain(l: &LieAlgebra) -> Cochain2 {
    let n = l.dim();
    let mut out = Cochain2::zero(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            out.set(i, j, l.bracket_basis(i, j).to_vec());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{grading_to_comodule, GroupBackend, GroupElement};
    use crate::exactmat::rat;
    use crate::samples;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn adjoint_psi(l: &LieAlgebra) -> Vec<Matrix> {
        (0..l.dim()).map(|i| l.ad_basis(i)).collect()
    }

    fn random_cochain1(rng: &mut StdRng, n: usize, dv: usize) -> Cochain1 {
        LinearMap::new(Matrix::from_fn(dv, n, |_, _| rat(rng.gen_range(-3..=3))))
    }

    fn random_cochain2(rng: &mut StdRng, n: usize, dv: usize) -> Cochain2 {
        let mut w = Cochain2::zero(n, dv);
        for i in 0..n {
            for j in (i + 1)..n {
                w.set(i, j, (0..dv).map(|_| rat(rng.gen_range(-3..=3))).collect());
            }
        }
        w
    }

    #[test]
    fn identity_cochain_bounds_the_bracket() {
        let l = samples::sl2();
        let psi = adjoint_psi(&l);
        let id = LinearMap::identity(3);
        let d = coboundary1(&l, &psi, &id).unwrap();
        assert_eq!(d, bracket_cochain(&l));
        let zero = LinearMap::zero(3, 3);
        assert!(coboundary1(&l, &psi, &zero).unwrap().is_zero());
    }

    #[test]
    fn coboundary_squares_to_zero() {
        let mut rng = StdRng::seed_from_u64(5);
        for l in [
            samples::sl2(),
            samples::affine_line(),
            samples::heisenberg3(),
            samples::sl2_torus_plane(),
            samples::sl_block_extension(),
        ] {
            let psi = adjoint_psi(&l);
            for _ in 0..5 {
                let nu = random_cochain1(&mut rng, l.dim(), l.dim());
                let d1 = coboundary1(&l, &psi, &nu).unwrap();
                assert!(coboundary2(&l, &psi, &d1).unwrap().is_zero());
            }
        }
        // Also with a non-adjoint module: sl2 acting on F^2.
        let l = samples::sl2();
        let psi = vec![
            Matrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(0), rat(0)]]),
            Matrix::from_rows(vec![vec![rat(1), rat(0)], vec![rat(0), rat(-1)]]),
            Matrix::from_rows(vec![vec![rat(0), rat(0)], vec![rat(1), rat(0)]]),
        ];
        for _ in 0..5 {
            let nu = random_cochain1(&mut rng, 3, 2);
            let d1 = coboundary1(&l, &psi, &nu).unwrap();
            assert!(coboundary2(&l, &psi, &d1).unwrap().is_zero());
        }
    }

    #[test]
    fn colinearity_of_cochains() {
        let l = samples::gl2_gl2_blocks();
        let g = samples::s3_block_grading();
        let data = EquivData::Graded { g_l: &g, g_v: &g };
        assert!(is_colinear_cochain1(&LinearMap::identity(8), &data));
        assert!(is_colinear_cochain2(&bracket_cochain(&l), &data));

        let aff = samples::affine_line();
        let zg = Grading {
            group: GroupBackend::free_abelian(1),
            degrees: vec![GroupElement::Lattice(vec![0]), GroupElement::Lattice(vec![1])],
        };
        let mut m = Matrix::zeros(2, 2);
        m[(1, 0)] = rat(1);
        let up = LinearMap::new(m);
        assert!(!is_colinear_cochain1(
            &up,
            &EquivData::Graded { g_l: &zg, g_v: &zg }
        ));
        assert!(is_colinear_cochain2(
            &bracket_cochain(&aff),
            &EquivData::Graded { g_l: &zg, g_v: &zg }
        ));

        // Comodule forms agree with the graded ones through the functor.
        let c = grading_to_comodule(&l, &g).unwrap();
        let cdata = EquivData::Comodule { rho_l: &c, rho_v: &c };
        assert!(is_colinear_cochain1(&LinearMap::identity(8), &cdata));
        assert!(is_colinear_cochain2(&bracket_cochain(&l), &cdata));
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..5 {
            let w = random_cochain2(&mut rng, 8, 8);
            assert_eq!(
                is_colinear_cochain2(&w, &data),
                is_colinear_cochain2(&w, &cdata)
            );
        }
    }

    #[test]
    fn plain_solving() {
        let l = samples::sl2();
        let psi = adjoint_psi(&l);
        let phi = bracket_cochain(&l);
        let w = solve_coboundary(&l, &psi, &phi, SolveMode::Plain).unwrap();
        assert_eq!(coboundary1(&l, &psi, &w).unwrap(), phi);

        let zero = Cochain2::zero(3, 3);
        let w0 = solve_coboundary(&l, &psi, &zero, SolveMode::Plain).unwrap();
        assert!(coboundary1(&l, &psi, &w0).unwrap().is_zero());
    }

    #[test]
    fn unsolvable_and_non_cocycle_inputs() {
        // Abelian 2-dim algebra, zero representation on F: every coboundary
        // vanishes, so a nonzero cocycle has no preimage.
        let l = LieAlgebra::from_pairs(2, &[]);
        let psi = vec![Matrix::zeros(1, 1), Matrix::zeros(1, 1)];
        let mut phi = Cochain2::zero(2, 1);
        phi.set(0, 1, vec![rat(1)]);
        assert!(matches!(
            solve_coboundary(&l, &psi, &phi, SolveMode::Plain),
            Err(CohomologyError::NoSolution)
        ));

        // The bracket cochain of sl2 evaluated in a non-adjoint module is
        // not even a cocycle for that module.
        let sl2 = samples::sl2();
        let std_rep = vec![
            Matrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(0), rat(0)]]),
            Matrix::from_rows(vec![vec![rat(1), rat(0)], vec![rat(0), rat(-1)]]),
            Matrix::from_rows(vec![vec![rat(0), rat(0)], vec![rat(1), rat(0)]]),
        ];
        let mut bad = Cochain2::zero(3, 2);
        bad.set(0, 1, vec![rat(1), rat(0)]);
        assert!(matches!(
            solve_coboundary(&sl2, &std_rep, &bad, SolveMode::Plain),
            Err(CohomologyError::NotACocycle)
        ));
    }

    #[test]
    fn colinear_graded_solving() {
        let l = samples::sl2_sl2_twisted_basis();
        let g = samples::z2_swap_grading();
        let psi = adjoint_psi(&l);
        let module = GradedModule {
            algebra: l.clone(),
            psi: psi.clone(),
            grading_l: g.clone(),
            grading_v: g.clone(),
        };
        let data = EquivData::Graded { g_l: &g, g_v: &g };
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..5 {
            let nu = random_cochain1(&mut rng, 6, 6);
            let nu_g = average_graded(&nu, &g, &g).unwrap();
            let phi = coboundary1(&l, &psi, &nu_g).unwrap();
            assert!(is_colinear_cochain2(&phi, &data));
            let w = solve_coboundary(&l, &psi, &phi, SolveMode::ColinearGraded { module: &module })
                .unwrap();
            assert!(is_colinear_cochain1(&w, &data));
            assert_eq!(coboundary1(&l, &psi, &w).unwrap(), phi);
        }

        // A cocycle that is not colinear is rejected up front.
        let nu = random_cochain1(&mut rng, 6, 6);
        let phi = coboundary1(&l, &psi, &nu).unwrap();
        if !is_colinear_cochain2(&phi, &data) {
            assert!(matches!(
                solve_coboundary(&l, &psi, &phi, SolveMode::ColinearGraded { module: &module }),
                Err(CohomologyError::CochainNotColinear)
            ));
        }

        // Non-semisimple algebras are rejected in colinear mode.
        let aff = samples::affine_line();
        let aff_mod = GradedModule {
            algebra: aff.clone(),
            psi: adjoint_psi(&aff),
            grading_l: Grading::trivial(2),
            grading_v: Grading::trivial(2),
        };
        assert!(matches!(
            solve_coboundary(
                &aff,
                &adjoint_psi(&aff),
                &Cochain2::zero(2, 2),
                SolveMode::ColinearGraded { module: &aff_mod }
            ),
            Err(CohomologyError::NotSemisimple)
        ));
    }

    #[test]
    fn colinear_comodule_solving() {
        let l = samples::sl2_sl2_twisted_basis();
        let g = samples::z2_swap_grading();
        let c = grading_to_comodule(&l, &g).unwrap();
        let t = c.hopf.find_normalized_integral().unwrap();
        let psi = adjoint_psi(&l);
        let module = HLModule {
            algebra: l.clone(),
            psi: psi.clone(),
            rho_l: c.clone(),
            rho_v: c.clone(),
        };
        let data = EquivData::Comodule { rho_l: &c, rho_v: &c };
        let mut rng = StdRng::seed_from_u64(29);
        for _ in 0..3 {
            let nu = random_cochain1(&mut rng, 6, 6);
            let nu_avg = average_colinear(&nu, &c, &c, &t, None).unwrap();
            let phi = coboundary1(&l, &psi, &nu_avg).unwrap();
            assert!(is_colinear_cochain2(&phi, &data));
            let w = solve_coboundary(
                &l,
                &psi,
                &phi,
                SolveMode::ColinearComodule { module: &module, t: &t },
            )
            .unwrap();
            assert!(is_colinear_cochain1(&w, &data));
            assert_eq!(coboundary1(&l, &psi, &w).unwrap(), phi);
        }

        // An unusable integral is refused.
        let mut doubled = t.clone();
        for v in doubled.functional.iter_mut() {
            *v *= rat(2);
        }
        doubled.normalized = false;
        assert!(matches!(
            solve_coboundary(
                &l,
                &psi,
                &Cochain2::zero(6, 6),
                SolveMode::ColinearComodule { module: &module, t: &doubled },
            ),
            Err(CohomologyError::IntegralUnavailable)
        ));
    }

    #[test]
    fn symmetry_is_required() {
        // sl2 graded by S3 through its Z2 quotient: h sits in the identity
        // degree, e and f in the transposition (12). The standard module F^2
        // graded by (23) and (123) is a graded module but not a symmetric
        // one, since (12)(123) differs from (123)(12).
        let l = samples::sl2();
        let group = GroupBackend::finite(samples::s3_table(), Some(samples::s3_labels())).unwrap();
        let g_l = Grading {
            group: group.clone(),
            degrees: vec![
                GroupElement::Finite(2),
                GroupElement::Finite(0),
                GroupElement::Finite(2),
            ],
        };
        let g_v = Grading {
            group,
            degrees: vec![GroupElement::Finite(1), GroupElement::Finite(3)],
        };
        let std_rep = vec![
            Matrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(0), rat(0)]]),
            Matrix::from_rows(vec![vec![rat(1), rat(0)], vec![rat(0), rat(-1)]]),
            Matrix::from_rows(vec![vec![rat(0), rat(0)], vec![rat(1), rat(0)]]),
        ];
        let module = GradedModule {
            algebra: l.clone(),
            psi: std_rep.clone(),
            grading_l: g_l,
            grading_v: g_v,
        };
        assert!(!validate_graded_module(&module).unwrap());
        assert!(matches!(
            solve_coboundary(
                &l,
                &std_rep,
                &Cochain2::zero(3, 2),
                SolveMode::ColinearGraded { module: &module }
            ),
            Err(CohomologyError::SymmetryRequired)
        ));
    }
}
