//! Levi-type decompositions compatible with an equivariant structure: a
//! Levi subalgebra through averaged sections and a coboundary solve, the
//! splitting of an invariantly semisimple algebra into minimal invariant
//! ideals, equivariant complete reducibility of modules, the complement of
//! the nilradical inside the solvable radical, and the certificate that an
//! automorphism admits no invariant Levi subalgebra.
//!
//! Everything is verified at runtime: each recursion level re-validates the
//! transported structure, and every produced subspace is checked against
//! the properties it is claimed to have.

use crate::action::{
    comodule_of_module, invariant_hull, radical_stability_report, validate_graded_module,
    validate_hlmodule, ActionError, CyclicAction, EquivStructure, GradedModule, Grading, HLModule,
};
use crate::cohomology::{solve_coboundary, Cochain2, CohomologyError, SolveMode};
use crate::exactmat::{column_space, kernel, rat, solve, MatError, Matrix, Rational, Subspace};
use crate::hopf::Integral;
use crate::liealg::{AssociativeHull, LieAlgebra, QuotientMap};
use crate::maschke::{average_colinear, average_equivariant_projection, average_graded, LinearMap, MaschkeError};
use crate::poly::{factor, min_poly_matrix};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LeviError {
    #[error("the solvable radical is not invariant under the given structure")]
    RadicalNotInvariant,
    #[error("the nilradical is not invariant under the given structure")]
    NilradicalNotInvariant,
    #[error("no averaging route: the acting structure has no normalized ad-invariant integral")]
    NoAveragingRoute,
    #[error("the subalgebra is not semisimple")]
    NotSemisimple,
    #[error("the module is not completely reducible")]
    NotCompletelyReducible,
    #[error("the map is not a Lie algebra automorphism")]
    NotAnAutomorphism,
    #[error("{stage} stage: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<LeviError>,
    },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("internal invariant violated: {0}")]
    InternalInconsistency(String),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Averaging(#[from] MaschkeError),
}

fn internal(msg: &str) -> LeviError {
    LeviError::InternalInconsistency(msg.to_string())
}

fn staged<T>(stage: &'static str, r: Result<T, LeviError>) -> Result<T, LeviError> {
    r.map_err(|e| LeviError::Stage { stage, source: Box::new(e) })
}

/// One named verification outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub check: String,
    pub pass: bool,
}

/// The full decomposition L = B + S + N with R = S + N: a Levi subalgebra
/// B split into minimal invariant ideals, the solvable radical R, a
/// complement S of the nilradical N inside R with [B, S] = 0.
#[derive(Debug, Clone)]
pub struct LeviDecomposition {
    pub b: Subspace,
    pub r: Subspace,
    pub s: Subspace,
    pub n: Subspace,
    pub components: Vec<Subspace>,
    pub report: Vec<CheckResult>,
}

/// Outcome of the invariant-Levi obstruction test for an automorphism phi:
/// when both im(phi - id) and Fix(phi) lie inside the solvable radical of a
/// non-solvable algebra, any phi-invariant Levi subalgebra would be forced
/// into the radical and hence be zero, so none exists.
#[derive(Debug, Clone)]
pub enum ObstructionOutcome {
    Certificate { image: Subspace, fixed: Subspace },
    NoObstruction {
        image: Subspace,
        fixed: Subspace,
        image_in_radical: bool,
        fixed_in_radical: bool,
    },
}

/// The averaging mechanism the equivariant steps run through. Gradings
/// average by degree projection; Hopf (co)actions through a normalized
/// ad-invariant integral (module actions via their dual coaction); cyclic
/// actions have no route, which is exactly the regime where invariant Levi
/// subalgebras can fail to exist.
enum Route {
    Plain,
    Graded(Grading),
    Comodule(crate::action::ComoduleStructure, Integral),
}

impl Route {
    fn build(l: &LieAlgebra, s: Option<&EquivStructure>) -> Result<Route, LeviError> {
        match s {
            None => Ok(Route::Plain),
            Some(EquivStructure::Graded(g)) => Ok(Route::Graded(g.clone())),
            Some(EquivStructure::Comodule(c)) => {
                let t = c.hopf.find_normalized_integral().map_err(|_| LeviError::NoAveragingRoute)?;
                if !t.ad_invariant {
                    return Err(LeviError::NoAveragingRoute);
                }
                Ok(Route::Comodule(c.clone(), t))
            }
            Some(EquivStructure::Module(m)) => {
                let c = comodule_of_module(l, m);
                let t = c.hopf.find_normalized_integral().map_err(|_| LeviError::NoAveragingRoute)?;
                if !t.ad_invariant {
                    return Err(LeviError::NoAveragingRoute);
                }
                Ok(Route::Comodule(c, t))
            }
            Some(EquivStructure::Cyclic(_)) => Err(LeviError::NoAveragingRoute),
        }
    }

    fn validate(&self, l: &LieAlgebra) -> Result<(), LeviError> {
        match self {
            Route::Plain => Ok(()),
            Route::Graded(g) => Ok(crate::action::validate_grading(l, g)?),
            Route::Comodule(c, _) => {
                c.validate_space()?;
                Ok(crate::action::validate_coaction(l, c)?)
            }
        }
    }

    fn is_invariant(&self, w: &Subspace) -> bool {
        match self {
            Route::Plain => true,
            Route::Graded(g) => g.restrict(w).is_ok(),
            Route::Comodule(c, _) => c.restrict(w).is_ok(),
        }
    }

    fn restrict(&self, w: &Subspace) -> Result<Route, LeviError> {
        Ok(match self {
            Route::Plain => Route::Plain,
            Route::Graded(g) => Route::Graded(g.restrict(w)?),
            Route::Comodule(c, t) => Route::Comodule(c.restrict(w)?, t.clone()),
        })
    }

    fn quotient(&self, q: &QuotientMap) -> Result<Route, LeviError> {
        Ok(match self {
            Route::Plain => Route::Plain,
            Route::Graded(g) => Route::Graded(g.quotient(q)?),
            Route::Comodule(c, t) => Route::Comodule(c.quotient(q)?, t.clone()),
        })
    }
}

fn section_matrix(q: &QuotientMap) -> Matrix {
    let cols: Vec<Vec<Rational>> = (0..q.quotient_dim()).map(|a| q.section_basis(a)).collect();
    Matrix::from_fn(q.ambient_dim(), q.quotient_dim(), |i, a| cols[a][i].clone())
}

fn flat_key(w: &Subspace) -> Vec<Rational> {
    w.basis().flatten()
}

fn canonical_order(spaces: &mut [Subspace]) {
    spaces.sort_by(|a, b| flat_key(a).cmp(&flat_key(b)));
}

/// A Levi subalgebra invariant under the structure, together with the
/// solvable radical: L = B + R directly, B a semisimple subalgebra.
///
/// When 0 != R != L the algorithm follows the derived series of R: quotient
/// by [R, R], pull the quotient's Levi subalgebra back, and recurse on the
/// preimage; in the base case R is abelian and B is the image of an
/// averaged section corrected by a coboundary solve.
pub fn levi_decompose(
    l: &LieAlgebra,
    structure: Option<&EquivStructure>,
) -> Result<(Subspace, Subspace), LeviError> {
    if let Some(s) = structure {
        s.validate(l)?;
    }
    let r = l.solvable_radical();
    if let Some(s) = structure {
        if !s.is_invariant(&r) {
            return Err(LeviError::RadicalNotInvariant);
        }
    }
    if r.dim() == 0 {
        return Ok((Subspace::full(l.dim()), r));
    }
    if r.dim() == l.dim() {
        return Ok((Subspace::zero(l.dim()), r));
    }
    let route = Route::build(l, structure)?;
    let b = levi_inner(l, &route)?;
    if let Some(s) = structure {
        if !s.is_invariant(&b) {
            return Err(internal("computed Levi subalgebra lost invariance"));
        }
    }
    Ok((b, r))
}

fn levi_inner(l: &LieAlgebra, route: &Route) -> Result<Subspace, LeviError> {
    let n = l.dim();
    route.validate(l)?;
    let r = l.solvable_radical();
    if !route.is_invariant(&r) {
        return Err(internal("transported structure does not preserve the radical"));
    }
    if r.dim() == 0 {
        return Ok(Subspace::full(n));
    }
    if r.dim() == n {
        return Ok(Subspace::zero(n));
    }
    let derived = l.bracket_span(&r, &r);
    if derived.dim() > 0 {
        // Quotient by [R, R], split there, then recurse on the preimage of
        // the quotient Levi subalgebra, whose radical is [R, R].
        if !route.is_invariant(&derived) {
            return Err(internal("derived radical lost invariance"));
        }
        let (lq, q) = l.quotient(&derived);
        let route_q = route.quotient(&q)?;
        let bq = levi_inner(&lq, &route_q)?;
        let l1 = q.preimage(&bq);
        if !route.is_invariant(&l1) {
            return Err(internal("pullback of the quotient Levi subalgebra lost invariance"));
        }
        let ctx = l.restrict(&l1);
        let route1 = route.restrict(&l1)?;
        let b_local = levi_inner(&ctx.algebra, &route1)?;
        let b = ctx.to_ambient_subspace(&b_local);
        return finish_levi(l, route, &r, b);
    }

    // Abelian radical: average the canonical section of L -> L/R, measure
    // its curvature, and straighten it by a compatible coboundary solve.
    let (lq, q) = l.quotient(&r);
    let nq = lq.dim();
    let dr = r.dim();
    let sect = LinearMap::new(section_matrix(&q));
    let proj = LinearMap::new(q.projection_matrix());
    let mut gq: Option<Grading> = None;
    let mut cq: Option<crate::action::ComoduleStructure> = None;
    let r_tilde = match route {
        Route::Plain => sect,
        Route::Graded(g) => {
            let g_q = g.quotient(&q)?;
            let averaged = average_graded(&sect, &g_q, g)?;
            if proj.compose(&averaged).matrix != Matrix::identity(nq) {
                return Err(internal("graded averaging broke the section"));
            }
            gq = Some(g_q);
            averaged
        }
        Route::Comodule(c, t) => {
            let c_q = c.quotient(&q)?;
            let averaged = average_colinear(&sect, &c_q, c, t, Some(&proj))?;
            cq = Some(c_q);
            averaged
        }
    };

    // The quotient acts on the abelian radical through any section.
    let rbasis = r.basis_rows();
    let mut psi: Vec<Matrix> = Vec::with_capacity(nq);
    for a in 0..nq {
        let xa = r_tilde.matrix.col_vec(a);
        let mut m = Matrix::zeros(dr, dr);
        for (cidx, v) in rbasis.iter().enumerate() {
            let coords = r
                .coordinates(&l.bracket(&xa, v))
                .ok_or_else(|| internal("radical is not stable under the section action"))?;
            for (p, val) in coords.into_iter().enumerate() {
                m[(p, cidx)] = val;
            }
        }
        psi.push(m);
    }

    // Curvature of the section, a 2-cocycle with values in the radical.
    let mut phi = Cochain2::zero(nq, dr);
    for i in 0..nq {
        for j in (i + 1)..nq {
            let xi = r_tilde.matrix.col_vec(i);
            let xj = r_tilde.matrix.col_vec(j);
            let mut val = l.bracket(&xi, &xj);
            let lifted = r_tilde.matrix.apply(lq.bracket_basis(i, j));
            for (p, c) in lifted.into_iter().enumerate() {
                val[p] -= c;
            }
            let coords = r
                .coordinates(&val)
                .ok_or_else(|| internal("section curvature left the radical"))?;
            phi.set(i, j, coords);
        }
    }

    let omega = match route {
        Route::Plain => solve_coboundary(&lq, &psi, &phi, SolveMode::Plain)?,
        Route::Graded(g) => {
            let module = GradedModule {
                algebra: lq.clone(),
                psi: psi.clone(),
                grading_l: gq.expect("set on the graded path"),
                grading_v: g.restrict(&r)?,
            };
            solve_coboundary(&lq, &psi, &phi, SolveMode::ColinearGraded { module: &module })?
        }
        Route::Comodule(c, t) => {
            let module = HLModule {
                algebra: lq.clone(),
                psi: psi.clone(),
                rho_l: cq.expect("set on the comodule path"),
                rho_v: c.restrict(&r)?,
            };
            solve_coboundary(&lq, &psi, &phi, SolveMode::ColinearComodule { module: &module, t })?
        }
    };

    let lift = r.basis().transpose();
    let bmat = r_tilde.matrix.sub(&lift.mul(&omega.matrix));
    finish_levi(l, route, &r, column_space(&bmat))
}

fn finish_levi(l: &LieAlgebra, route: &Route, r: &Subspace, b: Subspace) -> Result<Subspace, LeviError> {
    let n = l.dim();
    if b.dim() + r.dim() != n || b.sum(r).dim() != n {
        return Err(internal("Levi candidate is not a complement of the radical"));
    }
    if !l.is_subalgebra_subspace(&b) {
        return Err(internal("Levi candidate is not a subalgebra"));
    }
    if !l.restrict(&b).algebra.killing_nondegenerate() {
        return Err(internal("Levi candidate is not semisimple"));
    }
    if !route.is_invariant(&b) {
        return Err(internal("Levi candidate lost invariance"));
    }
    Ok(b)
}

fn mat_pow(m: &Matrix, k: usize) -> Matrix {
    let mut out = Matrix::identity(m.rows);
    for _ in 0..k {
        out = out.mul(m);
    }
    out
}

/// A generator of the (commutative) span of pairwise commuting matrices,
/// found by sweeping geometric weight vectors; exists whenever the span is
/// an etale algebra.
fn primitive_center_generator(z: &[Matrix]) -> Result<Matrix, LeviError> {
    let dz = z.len();
    let side = z[0].rows;
    for k in 1..=96i64 {
        let mut theta = Matrix::zeros(side, side);
        let mut w = Rational::one();
        for zi in z {
            theta = theta.add(&zi.scale(&w));
            w *= rat(k);
        }
        if min_poly_matrix(&theta).degree() == Some(dz) {
            return Ok(theta);
        }
    }
    Err(internal("no primitive central generator within the search bound"))
}

/// The simple ideals of a semisimple algebra: kernels of the irreducible
/// factors of a primitive central generator of the multiplication algebra.
fn simple_ideals(lb: &LieAlgebra) -> Result<Vec<Subspace>, LeviError> {
    let m = lb.dim();
    if m == 0 {
        return Ok(Vec::new());
    }
    let hull = lb.associative_hull();
    let z = hull.center();
    if z.is_empty() {
        return Err(internal("multiplication algebra of a semisimple algebra has a center"));
    }
    let theta = primitive_center_generator(&z)?;
    let mu = min_poly_matrix(&theta);
    let facs = factor(&mu);
    if facs.iter().any(|(_, mult)| *mult > 1) {
        return Err(internal("central generator of a semisimple algebra is separable"));
    }
    let mut out = Vec::new();
    let mut total = 0;
    for (f, _) in facs {
        let piece = kernel(&f.eval_matrix(&theta));
        if !lb.is_ideal(&piece) {
            return Err(internal("central eigenspace is not an ideal"));
        }
        total += piece.dim();
        out.push(piece);
    }
    if total != m {
        return Err(internal("central eigenspaces do not fill the algebra"));
    }
    canonical_order(&mut out);
    Ok(out)
}

/// Split a semisimple invariant subalgebra B of L into its minimal
/// invariant ideals (the plain simple ideals when no structure is given).
/// Components are pairwise commuting ideals of B summing to B, each of
/// which admits no proper nonzero invariant ideal.
pub fn semisimple_split(
    l: &LieAlgebra,
    b: &Subspace,
    structure: Option<&EquivStructure>,
) -> Result<Vec<Subspace>, LeviError> {
    if b.ambient() != l.dim() {
        return Err(LeviError::Shape("subspace ambient dimension mismatch".into()));
    }
    if !l.is_subalgebra_subspace(b) {
        return Err(LeviError::Shape("the split input must be a subalgebra".into()));
    }
    if b.dim() == 0 {
        return Ok(Vec::new());
    }
    let ctx = l.restrict(b);
    let s_local = match structure {
        None => None,
        Some(s) => Some(s.restrict(b)?),
    };
    let comps_local = split_local(&ctx.algebra, s_local.as_ref())?;
    if let Some(s) = &s_local {
        // Re-split check: every component must be invariantly simple.
        for comp in &comps_local {
            let cctx = ctx.algebra.restrict(comp);
            let s_c = s.restrict(comp)?;
            for ideal in simple_ideals(&cctx.algebra)? {
                let hull = invariant_hull(&cctx.algebra, &s_c, &ideal, true)?;
                if hull.dim() != cctx.algebra.dim() {
                    return Err(internal("component splits further, minimality failed"));
                }
            }
        }
    }
    let mut out: Vec<Subspace> =
        comps_local.iter().map(|w| ctx.to_ambient_subspace(w)).collect();
    canonical_order(&mut out);
    Ok(out)
}

fn split_local(
    lb: &LieAlgebra,
    structure: Option<&EquivStructure>,
) -> Result<Vec<Subspace>, LeviError> {
    if lb.dim() == 0 {
        return Ok(Vec::new());
    }
    if !lb.killing_nondegenerate() {
        return Err(LeviError::NotSemisimple);
    }
    let simples = simple_ideals(lb)?;
    let Some(s) = structure else {
        return Ok(simples);
    };
    // Smallest invariant ideal: hulls of the simple ideals, minimal ones
    // first, ties broken by the lexicographically least echelon basis.
    let mut hulls: Vec<Subspace> = Vec::new();
    for ideal in &simples {
        hulls.push(invariant_hull(lb, s, ideal, true)?);
    }
    hulls.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| flat_key(a).cmp(&flat_key(b))));
    let b1 = hulls.swap_remove(0);
    let b0 = lb.centralizer(&b1);
    if b1.dim() + b0.dim() != lb.dim() || b1.sum(&b0).dim() != lb.dim() {
        return Err(internal("centralizer is not a direct complement of the minimal ideal"));
    }
    if !s.is_invariant(&b0) {
        return Err(internal("centralizer of an invariant ideal lost invariance"));
    }
    let mut out = vec![b1];
    if b0.dim() > 0 {
        let ctx0 = lb.restrict(&b0);
        let s0 = s.restrict(&b0)?;
        for w in split_local(&ctx0.algebra, Some(&s0))? {
            out.push(ctx0.to_ambient_subspace(&w));
        }
    }
    Ok(out)
}

fn unital_hull(dim: usize, ops: &[Matrix]) -> AssociativeHull {
    let mut gens = vec![Matrix::identity(dim)];
    for op in ops {
        if !op.is_zero() {
            gens.push(op.clone());
        }
    }
    AssociativeHull::generate(dim, &gens)
}

fn spin(hull: &AssociativeHull, v: &[Rational]) -> Subspace {
    let rows: Vec<Vec<Rational>> = hull.basis.iter().map(|m| m.apply(v)).collect();
    Subspace::from_rows(hull.ambient_dim, rows)
}

fn spin_dual(hull: &AssociativeHull, u: &[Rational]) -> Subspace {
    let rows: Vec<Vec<Rational>> = hull.basis.iter().map(|m| m.transpose().apply(u)).collect();
    Subspace::from_rows(hull.ambient_dim, rows)
}

fn probe_sequence(hull: &AssociativeHull, budget: usize) -> Vec<Matrix> {
    let d = hull.dim();
    let mut out: Vec<Matrix> = Vec::new();
    for b in &hull.basis {
        if out.len() >= budget {
            return out;
        }
        out.push(b.clone());
    }
    let cap = d.min(12);
    'pairs: for i in 0..cap {
        for j in (i + 1)..cap {
            if out.len() + 2 > budget {
                break 'pairs;
            }
            out.push(hull.basis[i].add(&hull.basis[j]));
            out.push(hull.basis[i].sub(&hull.basis[j]));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x4e4f_5254);
    let coeffs = [-2i64, -1, 1, 2];
    while out.len() < budget {
        let mut m = Matrix::zeros(hull.ambient_dim, hull.ambient_dim);
        for _ in 0..4 {
            let k = rng.gen_range(0..d);
            let c = rat(coeffs[rng.gen_range(0..coeffs.len())]);
            m = m.add(&hull.basis[k].scale(&c));
        }
        out.push(m);
    }
    out
}

/// Followed the standard kernel-spinning test: pick an algebra element,
/// spin kernels of irreducible factors of its minimal polynomial, and use
/// the nullity-minimal case as a two-sided irreducibility certificate.
fn probe_proper(hull: &AssociativeHull, d: usize) -> Result<Option<Subspace>, LeviError> {
    if d <= 1 {
        return Ok(None);
    }
    for c in probe_sequence(hull, 120) {
        if c.is_zero() {
            continue;
        }
        let mu = min_poly_matrix(&c);
        for (f, _) in factor(&mu) {
            let fc = f.eval_matrix(&c);
            let ker = kernel(&fc);
            if ker.dim() == 0 {
                continue;
            }
            for v in ker.basis_rows() {
                let w = spin(hull, &v);
                if w.dim() < d {
                    return Ok(Some(w));
                }
            }
            if Some(ker.dim()) == f.degree() {
                // Nullity-minimal element: the kernel is a line over the
                // residue field, so one spin on each side decides.
                let kt = kernel(&fc.transpose());
                let u = kt
                    .basis_rows()
                    .into_iter()
                    .next()
                    .ok_or_else(|| internal("transpose kernel vanished"))?;
                let wd = spin_dual(hull, &u);
                if wd.dim() < d {
                    let ann = kernel(wd.basis());
                    if ann.dim() == 0 || ann.dim() >= d {
                        return Err(internal("dual spin produced a degenerate annihilator"));
                    }
                    return Ok(Some(ann));
                }
                return Ok(None);
            }
        }
    }
    Err(internal("irreducibility probe budget exhausted"))
}

fn restrict_ops(ops: &[Matrix], w: &Subspace) -> Result<Vec<Matrix>, LeviError> {
    let d = w.dim();
    let mut out = Vec::with_capacity(ops.len());
    for op in ops {
        let mut m = Matrix::zeros(d, d);
        for (c, row) in w.basis_rows().iter().enumerate() {
            let coords = w
                .coordinates(&op.apply(row))
                .ok_or_else(|| internal("operator does not preserve the subspace"))?;
            for (p, val) in coords.into_iter().enumerate() {
                m[(p, c)] = val;
            }
        }
        out.push(m);
    }
    Ok(out)
}

fn embed_through(carrier: &Subspace, local: &Subspace) -> Subspace {
    let rows: Vec<Vec<Rational>> =
        local.basis_rows().iter().map(|r| carrier.from_coordinates(r)).collect();
    Subspace::from_rows(carrier.ambient(), rows)
}

/// A minimal nonzero plain submodule for the given operators, found by
/// descending through proper submodules until the spinning test certifies
/// irreducibility.
fn minimal_plain_submodule(ops: &[Matrix], dim: usize) -> Result<Subspace, LeviError> {
    let mut carrier = Subspace::full(dim);
    loop {
        if carrier.dim() <= 1 {
            return Ok(carrier);
        }
        let local = restrict_ops(ops, &carrier)?;
        let hull = unital_hull(carrier.dim(), &local);
        match probe_proper(&hull, carrier.dim())? {
            Some(w) => carrier = embed_through(&carrier, &w),
            None => return Ok(carrier),
        }
    }
}

/// Generalized eigenspaces of a primitive central generator of the
/// operator algebra; falls back to the whole space when the center is not
/// monogenic (the complete-reducibility check reports honestly later).
fn isotypic_pieces(hull: &AssociativeHull, dim: usize) -> Vec<Subspace> {
    let z = hull.center();
    if z.len() <= 1 {
        return vec![Subspace::full(dim)];
    }
    let Ok(theta) = primitive_center_generator(&z) else {
        return vec![Subspace::full(dim)];
    };
    let mu = min_poly_matrix(&theta);
    let facs = factor(&mu);
    if facs.len() <= 1 {
        return vec![Subspace::full(dim)];
    }
    facs.into_iter()
        .map(|(f, mult)| kernel(&mat_pow(&f.eval_matrix(&theta), mult)))
        .collect()
}

/// Module-side structure carried through the complete-reducibility
/// recursion, in the coordinates of the current carrier.
enum VSide {
    Plain,
    Com(crate::action::ComoduleStructure),
    Gr(Grading),
}

impl VSide {
    fn restrict(&self, w: &Subspace) -> Result<VSide, LeviError> {
        Ok(match self {
            VSide::Plain => VSide::Plain,
            VSide::Com(c) => VSide::Com(c.restrict(w)?),
            VSide::Gr(g) => VSide::Gr(g.restrict(w)?),
        })
    }

    fn closure(&self, hull: &AssociativeHull, seed: &Subspace) -> Subspace {
        let d = hull.ambient_dim;
        let mut cur = seed.clone();
        loop {
            let before = cur.dim();
            let mut rows = cur.basis_rows();
            for row in cur.basis_rows() {
                for m in &hull.basis {
                    rows.push(m.apply(&row));
                }
                match self {
                    VSide::Plain => {}
                    VSide::Com(c) => rows.extend(c.slices(&row)),
                    VSide::Gr(g) => {
                        for deg in g.support() {
                            rows.push(g.project(&row, &deg));
                        }
                    }
                }
            }
            cur = Subspace::from_rows(d, rows);
            if cur.dim() == before {
                return cur;
            }
        }
    }
}

/// Witness that a space is a module of the claimed kind, everything needed
/// to decompose it equivariantly.
pub enum ModuleWitness<'a> {
    Plain { algebra: &'a LieAlgebra, psi: &'a [Matrix] },
    Comodule { module: &'a HLModule, integral: &'a Integral },
    Graded { module: &'a GradedModule },
}

struct WeylCtx<'a> {
    algebra: &'a LieAlgebra,
    rho_l: Option<&'a crate::action::ComoduleStructure>,
    integral: Option<&'a Integral>,
}

/// Decompose a completely reducible module into invariant components, each
/// admitting no proper nonzero invariant submodule. Complete reducibility
/// is checked constructively: every invariant submodule the recursion
/// produces must admit a plain equivariant projection, which is then
/// averaged into an equivariant one for the structure.
pub fn weyl_decompose(witness: &ModuleWitness) -> Result<Vec<Subspace>, LeviError> {
    let (ctx, psi, vside, dv) = match witness {
        ModuleWitness::Plain { algebra, psi } => {
            if psi.len() != algebra.dim() {
                return Err(LeviError::Shape("one operator per algebra basis element".into()));
            }
            let dv = psi.first().map_or(0, |m| m.rows);
            if psi.iter().any(|m| m.rows != dv || m.cols != dv) {
                return Err(LeviError::Shape("module operators must be square of one size".into()));
            }
            (WeylCtx { algebra, rho_l: None, integral: None }, psi.to_vec(), VSide::Plain, dv)
        }
        ModuleWitness::Comodule { module, integral } => {
            validate_hlmodule(module)?;
            let hopf = &module.rho_v.hopf;
            if !hopf.is_left_integral(&integral.functional)
                || !integral.apply(hopf.unit_vector()).is_one()
                || !hopf.is_ad_invariant_functional(&integral.functional)
            {
                return Err(LeviError::NoAveragingRoute);
            }
            (
                WeylCtx { algebra: &module.algebra, rho_l: Some(&module.rho_l), integral: Some(integral) },
                module.psi.clone(),
                VSide::Com(module.rho_v.clone()),
                module.rho_v.dim,
            )
        }
        ModuleWitness::Graded { module } => {
            validate_graded_module(module)?;
            (
                WeylCtx { algebra: &module.algebra, rho_l: None, integral: None },
                module.psi.clone(),
                VSide::Gr(module.grading_v.clone()),
                module.grading_v.dim(),
            )
        }
    };
    let mut comps = weyl_recurse(&ctx, &psi, &Subspace::full(dv), &vside)?;
    canonical_order(&mut comps);
    Ok(comps)
}

fn weyl_recurse(
    ctx: &WeylCtx,
    psi: &[Matrix],
    carrier: &Subspace,
    vside: &VSide,
) -> Result<Vec<Subspace>, LeviError> {
    let d = carrier.dim();
    if d == 0 {
        return Ok(Vec::new());
    }
    let hull = unital_hull(d, psi);
    let mut cands: Vec<Subspace> = Vec::new();
    for piece in isotypic_pieces(&hull, d) {
        if piece.dim() == 0 {
            continue;
        }
        let seed = if piece.dim() == d {
            minimal_plain_submodule(psi, d)?
        } else {
            let inner = minimal_plain_submodule(&restrict_ops(psi, &piece)?, piece.dim())?;
            embed_through(&piece, &inner)
        };
        for cand in [vside.closure(&hull, &seed), vside.closure(&hull, &piece)] {
            if cand.dim() > 0 && cand.dim() < d && !cands.contains(&cand) {
                cands.push(cand);
            }
        }
    }
    // Intersections of invariant submodules are invariant; close downward
    // so a minimal one is among the candidates.
    loop {
        let mut added = false;
        let k = cands.len();
        for i in 0..k {
            for j in (i + 1)..k {
                let x = cands[i].intersect(&cands[j]);
                if x.dim() > 0 && !cands.contains(&x) {
                    cands.push(x.clone());
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    if cands.is_empty() {
        return Ok(vec![carrier.clone()]);
    }
    cands.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| flat_key(a).cmp(&flat_key(b))));
    let w = cands.swap_remove(0);
    let pi = equivariant_projection(psi, &w)?;
    let pi_avg = match vside {
        VSide::Plain => pi,
        VSide::Com(c) => {
            let hl = HLModule {
                algebra: ctx.algebra.clone(),
                psi: psi.to_vec(),
                rho_l: ctx.rho_l.expect("comodule context carries the algebra coaction").clone(),
                rho_v: c.clone(),
            };
            let t = ctx.integral.expect("comodule context carries an integral");
            average_equivariant_projection(&LinearMap::new(pi), &hl, &hl, t)?.matrix
        }
        VSide::Gr(g) => {
            let avg = average_graded(&LinearMap::new(pi), g, g)?.matrix;
            if psi.iter().any(|op| avg.mul(op) != op.mul(&avg)) {
                return Err(internal("graded averaging broke equivariance"));
            }
            if avg.mul(&avg) != avg || column_space(&avg) != w {
                return Err(internal("graded averaging broke the projection"));
            }
            avg
        }
    };
    let k = kernel(&pi_avg);
    if w.dim() + k.dim() != d || w.sum(&k).dim() != d {
        return Err(internal("projection kernel is not a complement"));
    }
    let mut out = Vec::new();
    for part in [w, k] {
        let sub_psi = restrict_ops(psi, &part)?;
        let sub_side = vside.restrict(&part)?;
        let sub_carrier = embed_through(carrier, &part);
        out.extend(weyl_recurse(ctx, &sub_psi, &sub_carrier, &sub_side)?);
    }
    Ok(out)
}

/// The canonical projection onto an invariant subspace commuting with the
/// given operators: identity on the subspace, image inside it, free
/// parameters zero. No solution means the module is not completely
/// reducible.
fn equivariant_projection(ops: &[Matrix], w: &Subspace) -> Result<Matrix, LeviError> {
    let d = w.ambient();
    let unknowns = d * d; // pi[(p, q)] flattened as p * d + q
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    for op in ops {
        for p in 0..d {
            for q in 0..d {
                let mut row = vec![Rational::zero(); unknowns];
                for k in 0..d {
                    row[p * d + k] += op[(k, q)].clone();
                    row[k * d + q] -= op[(p, k)].clone();
                }
                rows.push(row);
                rhs.push(Rational::zero());
            }
        }
    }
    for wrow in w.basis_rows() {
        for p in 0..d {
            let mut row = vec![Rational::zero(); unknowns];
            for (q, c) in wrow.iter().enumerate() {
                row[p * d + q] = c.clone();
            }
            rows.push(row);
            rhs.push(wrow[p].clone());
        }
    }
    let ann = kernel(w.basis());
    for a in ann.basis_rows() {
        for q in 0..d {
            let mut row = vec![Rational::zero(); unknowns];
            for (p, c) in a.iter().enumerate() {
                row[p * d + q] = c.clone();
            }
            rows.push(row);
            rhs.push(Rational::zero());
        }
    }
    match solve(&Matrix::from_rows(rows), &rhs) {
        Ok((x, _)) => Ok(Matrix::from_fn(d, d, |p, q| x[p * d + q].clone())),
        Err(MatError::NoSolution) => Err(LeviError::NotCompletelyReducible),
        Err(e) => Err(internal(&format!("projection solve failed: {e}"))),
    }
}

/// The invariant complement S of the nilradical N inside the solvable
/// radical R, with [B, S] = 0 for the given Levi subalgebra B. S is the
/// kernel of an averaged B-equivariant projection R -> N.
pub fn radical_complement(
    l: &LieAlgebra,
    b: &Subspace,
    structure: Option<&EquivStructure>,
) -> Result<Subspace, LeviError> {
    let n = l.dim();
    let r = l.solvable_radical();
    let nil = l.nilradical();
    if let Some(s) = structure {
        s.validate(l)?;
        if !s.is_invariant(&r) {
            return Err(LeviError::RadicalNotInvariant);
        }
        if !s.is_invariant(&nil) {
            return Err(LeviError::NilradicalNotInvariant);
        }
    }
    if !l.is_subalgebra_subspace(b) || b.dim() + r.dim() != n || b.sum(&r).dim() != n {
        return Err(LeviError::Shape("complement input must be a Levi subalgebra".into()));
    }
    if r.dim() == 0 {
        return Ok(Subspace::zero(n));
    }
    let dr = r.dim();
    let nil_local = Subspace::from_rows(
        dr,
        nil.basis_rows()
            .iter()
            .map(|v| r.coordinates(v).ok_or_else(|| internal("nilradical outside the radical")))
            .collect::<Result<Vec<_>, _>>()?,
    );
    // ad action of B on R in radical coordinates.
    let rbasis = r.basis_rows();
    let mut ops: Vec<Matrix> = Vec::with_capacity(b.dim());
    for brow in b.basis_rows() {
        let mut m = Matrix::zeros(dr, dr);
        for (cidx, v) in rbasis.iter().enumerate() {
            let coords = r
                .coordinates(&l.bracket(&brow, v))
                .ok_or_else(|| internal("radical is not an ideal"))?;
            for (p, val) in coords.into_iter().enumerate() {
                m[(p, cidx)] = val;
            }
        }
        ops.push(m);
    }
    let pi = equivariant_projection(&ops, &nil_local)?;
    let route = Route::build(l, structure)?;
    let pi_avg = match &route {
        Route::Plain => pi,
        Route::Graded(g) => {
            let g_r = g.restrict(&r)?;
            let avg = average_graded(&LinearMap::new(pi), &g_r, &g_r)?.matrix;
            if ops.iter().any(|op| avg.mul(op) != op.mul(&avg)) {
                return Err(internal("graded averaging broke equivariance"));
            }
            if avg.mul(&avg) != avg || column_space(&avg) != nil_local {
                return Err(internal("graded averaging broke the projection"));
            }
            avg
        }
        Route::Comodule(c, t) => {
            let ctx_b = l.restrict(b);
            let hl = HLModule {
                algebra: ctx_b.algebra.clone(),
                psi: ops.clone(),
                rho_l: c.restrict(b)?,
                rho_v: c.restrict(&r)?,
            };
            average_equivariant_projection(&LinearMap::new(pi), &hl, &hl, t)?.matrix
        }
    };
    let s_local = kernel(&pi_avg);
    let s = embed_through(&r, &s_local);
    if s.dim() + nil.dim() != dr || s.sum(&nil) != r {
        return Err(internal("complement does not split the radical"));
    }
    for brow in b.basis_rows() {
        for srow in s.basis_rows() {
            if l.bracket(&brow, &srow).iter().any(|c| !c.is_zero()) {
                return Err(internal("complement does not commute with the Levi subalgebra"));
            }
        }
    }
    if let Some(st) = structure {
        if !st.is_invariant(&s) {
            return Err(internal("complement lost invariance"));
        }
    }
    Ok(s)
}

/// Run the whole pipeline: radical, nilradical, Levi subalgebra, minimal
/// invariant ideal split, nilradical complement, verification report.
/// Errors carry the stage that failed.
pub fn full_decomposition(
    l: &LieAlgebra,
    structure: Option<&EquivStructure>,
) -> Result<LeviDecomposition, LeviError> {
    staged("validate", l.validate().map_err(|e| LeviError::Shape(e.to_string())))?;
    if let Some(s) = structure {
        staged("validate", s.validate(l).map_err(LeviError::from))?;
    }
    let n = l.nilradical();
    if let Some(s) = structure {
        staged("radical", radical_stability_report(l, s).map_err(LeviError::from))?;
    }
    let (b, r) = staged("levi", levi_decompose(l, structure))?;
    let components = staged("split", semisimple_split(l, &b, structure))?;
    let s = staged("complement", radical_complement(l, &b, structure))?;
    let mut d = LeviDecomposition { b, r, s, n, components, report: Vec::new() };
    d.report = verify_decomposition(l, structure, &d);
    if d.report.iter().any(|c| !c.pass) {
        let failed: Vec<&str> =
            d.report.iter().filter(|c| !c.pass).map(|c| c.check.as_str()).collect();
        return Err(LeviError::Stage {
            stage: "verify",
            source: Box::new(internal(&format!("checks failed: {}", failed.join(", ")))),
        });
    }
    Ok(d)
}

/// Re-derive every property the decomposition claims, as named pass/fail
/// results; nothing is trusted from the construction.
pub fn verify_decomposition(
    l: &LieAlgebra,
    structure: Option<&EquivStructure>,
    d: &LeviDecomposition,
) -> Vec<CheckResult> {
    let n = l.dim();
    let mut out: Vec<CheckResult> = Vec::new();
    let mut push = |name: &str, pass: bool| out.push(CheckResult { check: name.into(), pass });
    push("b-subalgebra", l.is_subalgebra_subspace(&d.b));
    push("b-radical-direct-sum", d.b.dim() + d.r.dim() == n && d.b.sum(&d.r).dim() == n);
    push(
        "b-killing-nondegenerate",
        l.is_subalgebra_subspace(&d.b) && l.restrict(&d.b).algebra.killing_nondegenerate(),
    );
    push("r-is-solvable-radical", d.r == l.solvable_radical());
    push("n-is-nilradical", d.n == l.nilradical());
    push("n-nilpotent", l.is_nilpotent_subspace(&d.n));
    push("s-n-direct-sum-is-radical", d.s.dim() + d.n.dim() == d.r.dim() && d.s.sum(&d.n) == d.r);
    let commute = d.b.basis_rows().iter().all(|brow| {
        d.s.basis_rows().iter().all(|srow| l.bracket(brow, srow).iter().all(Rational::is_zero))
    });
    push("b-s-commute", commute);
    let comp_sum = d
        .components
        .iter()
        .fold(Subspace::zero(n), |acc, c| acc.sum(c));
    push(
        "components-sum-to-b",
        comp_sum == d.b && d.components.iter().map(Subspace::dim).sum::<usize>() == d.b.dim(),
    );
    let pairwise = d.components.iter().enumerate().all(|(i, ci)| {
        d.components.iter().skip(i + 1).all(|cj| {
            ci.basis_rows().iter().all(|x| {
                cj.basis_rows().iter().all(|y| l.bracket(x, y).iter().all(Rational::is_zero))
            })
        })
    });
    push("components-pairwise-commute", pairwise);
    let ideals = if l.is_subalgebra_subspace(&d.b) {
        let ctx = l.restrict(&d.b);
        d.components.iter().all(|c| {
            ctx.to_local_subspace(c).map(|w| ctx.algebra.is_ideal(&w)).unwrap_or(false)
        })
    } else {
        false
    };
    push("components-ideals-of-b", ideals);
    if let Some(s) = structure {
        push("b-invariant", s.is_invariant(&d.b));
        push("r-invariant", s.is_invariant(&d.r));
        push("s-invariant", s.is_invariant(&d.s));
        push("n-invariant", s.is_invariant(&d.n));
        push("components-invariant", d.components.iter().all(|c| s.is_invariant(c)));
    }
    out
}

/// Decide the obstruction certificate for an automorphism: both
/// im(phi - id) and Fix(phi) inside the solvable radical of a non-solvable
/// algebra force any phi-invariant Levi subalgebra B to satisfy
/// B = Fix(phi) restricted to B (since phi(b) - b lies in B and R) and
/// hence B inside R, so B = 0; no invariant Levi subalgebra exists.
pub fn automorphism_levi_obstruction(
    l: &LieAlgebra,
    phi: &CyclicAction,
) -> Result<ObstructionOutcome, LeviError> {
    phi.validate(l).map_err(|e| match e {
        ActionError::Shape(s) => LeviError::Shape(s),
        _ => LeviError::NotAnAutomorphism,
    })?;
    let n = l.dim();
    let r = l.solvable_radical();
    let delta = phi.phi.sub(&Matrix::identity(n));
    let image = column_space(&delta);
    let fixed = kernel(&delta);
    let image_in_radical = r.contains(&image);
    let fixed_in_radical = r.contains(&fixed);
    if image_in_radical && fixed_in_radical && r.dim() < n {
        Ok(ObstructionOutcome::Certificate { image, fixed })
    } else {
        Ok(ObstructionOutcome::NoObstruction { image, fixed, image_in_radical, fixed_in_radical })
    }
}
