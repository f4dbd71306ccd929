//! Acceptance gate: ten criteria, each printed as one pass/fail line with
//! its wall-clock time. Dimensions and subspaces are compared exactly; the
//! only tolerances are the per-criterion runtime caps asserted inside each
//! criterion body.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use levikit::action::{
    radical_stability_report, validate_action, validate_grading, ComoduleStructure,
    EquivStructure, GradedModule, Grading, GroupBackend, GroupElement,
};
use levikit::cohomology::{
    coboundary1, coboundary2, is_colinear_cochain1, is_colinear_cochain2, solve_coboundary,
    Cochain1, EquivData, SolveMode,
};
use levikit::exactmat::{rat, Matrix, Rational, Subspace};
use levikit::hopf::{HopfAlgebra, HopfError};
use levikit::levi::{
    automorphism_levi_obstruction, full_decomposition, levi_decompose, semisimple_split,
    verify_decomposition, LeviError, ObstructionOutcome,
};
use levikit::maschke::{average_colinear, average_graded, is_colinear_map, is_graded_map, LinearMap};
use levikit::samples;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn timed(cap: Duration, body: impl FnOnce()) {
    let start = Instant::now();
    body();
    let took = start.elapsed();
    assert!(took < cap, "runtime {took:?} exceeds the {cap:?} cap");
}

/// Criterion 1: the S3-graded block algebra decomposes into a graded Levi
/// part of dimension 6 over a graded radical R = N of dimension 2, S = 0,
/// with every piece homogeneous and the verification report all-pass.
fn c01_graded_decompose() {
    timed(Duration::from_secs(1), || {
        let l = samples::gl2_gl2_blocks();
        let g = samples::s3_block_grading();
        let structure = EquivStructure::Graded(g.clone());
        let d = full_decomposition(&l, Some(&structure)).expect("graded pipeline succeeds");
        assert_eq!(d.b.dim(), 6);
        assert_eq!(d.r.dim(), 2);
        assert_eq!(d.n, d.r);
        assert_eq!(d.s.dim(), 0);
        for piece in [&d.b, &d.r, &d.n].into_iter().chain(&d.components) {
            assert!(g.restrict(piece).is_ok(), "piece is not homogeneous");
        }
        let report = verify_decomposition(&l, Some(&structure), &d);
        assert!(!report.is_empty());
        assert!(report.iter().all(|c| c.pass), "verification report has failures");
    });
}

/// Criterion 2: the Sweedler-algebra action passes the module axioms, its
/// stability report says the radical is not invariant, and the equivariant
/// Levi entry point refuses with exactly that error.
fn c02_sweedler_counterexample() {
    timed(Duration::from_secs(1), || {
        let l = samples::sl2_adjoint_radical();
        let m = samples::sweedler_action();
        validate_action(&l, &m).expect("module axioms hold");
        let structure = EquivStructure::Module(m);
        let report = radical_stability_report(&l, &structure).expect("report succeeds");
        assert!(!report.r_invariant);
        match levi_decompose(&l, Some(&structure)) {
            Err(LeviError::RadicalNotInvariant) => {}
            other => panic!("expected RadicalNotInvariant, got {other:?}"),
        }
    });
}

/// Criterion 3: the Sweedler algebra has a 1-dimensional integral space
/// and no normalized integral; the S3 group algebra has the
/// identity-indicator integral, normalized and ad-invariant, exactly.
fn c03_integrals() {
    timed(Duration::from_secs(1), || {
        let h4 = HopfAlgebra::sweedler4();
        assert_eq!(h4.left_integral_space().dim(), 1);
        match h4.find_normalized_integral() {
            Err(HopfError::NormalizationImpossible { space_dim: 1 }) => {}
            other => panic!("expected NormalizationImpossible with space 1, got {other:?}"),
        }
        let (fg, built) =
            HopfAlgebra::group_algebra(&samples::s3_table(), Some(samples::s3_labels()))
                .expect("S3 is a group");
        let t = fg.find_normalized_integral().expect("group algebras average");
        assert_eq!(t, built);
        assert_eq!(t.functional, samples::unit_vec(6, 0));
        assert!(t.normalized && t.ad_invariant);
    });
}

/// Criterion 4: the order-2 shear on the 7-dimensional extension yields an
/// obstruction certificate with im(phi - id) inside R and Fix(phi) = R,
/// both verified exactly. (im(phi - id) is 3-dimensional, a proper subspace
/// of the 4-dimensional radical; the inclusion is what the contradiction
/// B <= Fix(phi) = R needs.)
fn c04_obstruction_certificate() {
    timed(Duration::from_secs(1), || {
        let l = samples::sl_block_extension();
        assert_eq!(l.dim(), 7);
        let phi = levikit::action::CyclicAction::new(samples::shear_automorphism());
        let r = l.solvable_radical();
        assert_eq!(r.dim(), 4);
        match automorphism_levi_obstruction(&l, &phi).expect("valid automorphism") {
            ObstructionOutcome::Certificate { image, fixed } => {
                assert_eq!(image.dim(), 3);
                assert!(r.contains(&image));
                assert_eq!(fixed, r);
            }
            other => panic!("expected a certificate, got {other:?}"),
        }
    });
}

/// Criterion 5: 200 random semidirect sums (one or two sl2 copies over a
/// solvable radical of dimension <= 6, shuffled basis) all Levi-decompose:
/// B is a subalgebra of the expected dimension with nondegenerate Killing
/// form and B (+) R = L. Zero failures allowed.
fn c05_random_levi_suite() {
    timed(Duration::from_secs(60), || {
        for seed in 0..200u64 {
            let (l, bdim) = samples::random_levi_instance(seed);
            assert!(l.dim() <= 12);
            let (b, r) = levi_decompose(&l, None)
                .unwrap_or_else(|e| panic!("seed {seed}: {e}"));
            assert_eq!(b.dim(), bdim, "seed {seed}: wrong Levi dimension");
            assert!(l.is_subalgebra_subspace(&b), "seed {seed}: B not a subalgebra");
            assert!(
                l.restrict(&b).algebra.killing_nondegenerate(),
                "seed {seed}: Killing form degenerate on B"
            );
            assert_eq!(r, l.solvable_radical(), "seed {seed}: R is not the radical");
            assert_eq!(b.sum(&r).dim(), l.dim(), "seed {seed}: B + R != L");
            assert_eq!(b.intersect(&r).dim(), 0, "seed {seed}: B meets R");
        }
    });
}

/// Pushes a rank-1 lattice grading forward along d -> images[d mod n] for
/// a finite group in which images lists a cyclic subgroup in order, giving
/// a compatible finite-group grading on the same algebra.
fn push_to_finite(g: &Grading, table: Vec<Vec<usize>>, images: &[usize]) -> Grading {
    let n = images.len() as i64;
    let group = GroupBackend::finite(table, None).expect("group table");
    let degrees = g
        .degrees
        .iter()
        .map(|d| match d {
            GroupElement::Lattice(v) => GroupElement::Finite(images[v[0].rem_euclid(n) as usize]),
            GroupElement::Finite(_) => unreachable!("lattice grading expected"),
        })
        .collect();
    Grading { group, degrees }
}

/// Criterion 6: the same random constructions carrying compatible Z, Z2,
/// and S3 gradings (homogeneous basis changes only): the returned Levi
/// subalgebra is spanned by homogeneous elements in 100% of cases.
fn c06_graded_levi_suite() {
    timed(Duration::from_secs(60), || {
        for seed in 0..200u64 {
            let (l, z_grading, bdim) = samples::random_graded_levi_instance(seed);
            let g = match seed % 3 {
                0 => z_grading,
                // d mod 2 in Z2 = {0, 1}.
                1 => push_to_finite(&z_grading, samples::cyclic_table(2), &[0, 1]),
                // d mod 3 into the cyclic subgroup e, (123), (132) of S3.
                _ => push_to_finite(&z_grading, samples::s3_table(), &[0, 3, 4]),
            };
            validate_grading(&l, &g).unwrap_or_else(|e| panic!("seed {seed}: bad grading: {e}"));
            let structure = EquivStructure::Graded(g.clone());
            let (b, r) = levi_decompose(&l, Some(&structure))
                .unwrap_or_else(|e| panic!("seed {seed}: {e}"));
            assert_eq!(b.dim(), bdim, "seed {seed}: wrong Levi dimension");
            assert!(g.restrict(&b).is_ok(), "seed {seed}: B is not homogeneous");
            assert!(g.restrict(&r).is_ok(), "seed {seed}: R is not homogeneous");
            assert_eq!(b.sum(&r).dim(), l.dim(), "seed {seed}: B + R != L");
        }
    });
}

/// The diagonal group-algebra comodule on a space with the given finite
/// degrees: rho(e_i) = e_i (x) h_{deg(i)}.
fn group_comodule(hopf: &HopfAlgebra, degs: &[usize]) -> ComoduleStructure {
    let dim = degs.len();
    let hd = hopf.dim();
    let mut rho = vec![Rational::zero(); dim * dim * hd];
    for (i, &d) in degs.iter().enumerate() {
        rho[(i * dim + i) * hd + d] = Rational::one();
    }
    ComoduleStructure::new(hopf.clone(), dim, rho).expect("diagonal coaction is coassociative")
}

fn finite_grading(table: Vec<Vec<usize>>, degs: &[usize]) -> Grading {
    Grading {
        group: GroupBackend::finite(table, None).expect("group table"),
        degrees: degs.iter().map(|&d| GroupElement::Finite(d)).collect(),
    }
}

/// Criterion 7: on 100 random (map, structure) pairs over Z2 and S3
/// comodules, averaging is idempotent on colinear maps, outputs are
/// certified colinear, and averaged sections keep their left inverse
/// pi o r~ = id. All equalities exact.
fn c07_maschke_properties() {
    timed(Duration::from_secs(60), || {
        let mut rng = StdRng::seed_from_u64(0x4d41_5343);
        for case in 0..100usize {
            let table = if case % 2 == 0 {
                samples::cyclic_table(2)
            } else {
                samples::s3_table()
            };
            let order = table.len();
            let (hopf, t) = HopfAlgebra::group_algebra(&table, None).expect("group");
            let nv = rng.gen_range(2..=4);
            let nw = rng.gen_range(2..=4);
            let degs_v: Vec<usize> = (0..nv).map(|_| rng.gen_range(0..order)).collect();
            let degs_w: Vec<usize> = (0..nw).map(|_| rng.gen_range(0..order)).collect();
            let rho_v = group_comodule(&hopf, &degs_v);
            let rho_w = group_comodule(&hopf, &degs_w);
            let g_v = finite_grading(table.clone(), &degs_v);
            let g_w = finite_grading(table, &degs_w);

            let r = LinearMap::new(Matrix::from_fn(nw, nv, |_, _| rat(rng.gen_range(-4..=4))));
            let avg = average_colinear(&r, &rho_v, &rho_w, &t, None).expect("averaging succeeds");
            assert!(is_colinear_map(&avg, &rho_v, &rho_w), "case {case}: output not colinear");
            // Idempotent on colinear maps: averaging the average is the identity.
            let twice = average_colinear(&avg, &rho_v, &rho_w, &t, None).expect("second pass");
            assert_eq!(twice, avg, "case {case}: averaging not idempotent");
            // The graded compression computes the same map.
            assert_eq!(
                average_graded(&r, &g_v, &g_w).expect("graded average"),
                avg,
                "case {case}: graded and colinear averages disagree"
            );
            assert!(is_graded_map(&avg, &g_v, &g_w));

            // Section preservation: embed V into V (+) V with matching
            // degrees, perturb the second block arbitrarily; the canonical
            // projection is a colinear left inverse and must survive.
            let mut degs_big = degs_v.clone();
            degs_big.extend(&degs_v);
            let rho_big = group_comodule(&hopf, &degs_big);
            let mut sec = Matrix::zeros(2 * nv, nv);
            for j in 0..nv {
                sec[(j, j)] = Rational::one();
                for i in 0..nv {
                    sec[(nv + i, j)] = rat(rng.gen_range(-3..=3));
                }
            }
            let pi = LinearMap::new(Matrix::from_fn(nv, 2 * nv, |i, j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            let section = LinearMap::new(sec);
            assert_eq!(pi.compose(&section).matrix, Matrix::identity(nv));
            let straightened = average_colinear(&section, &rho_v, &rho_big, &t, Some(&pi))
                .expect("section averaging succeeds");
            assert!(is_colinear_map(&straightened, &rho_v, &rho_big));
            assert_eq!(
                pi.compose(&straightened).matrix,
                Matrix::identity(nv),
                "case {case}: averaging lost the section property"
            );
        }
    });
}

/// Criterion 8: the coboundary squares to zero on 100 random 1-cochains
/// over assorted adjoint modules, and the colinear solver recovers exact
/// graded primitives for 50 generated colinear 2-cocycles over graded
/// semisimple algebras.
fn c08_cohomology() {
    timed(Duration::from_secs(60), || {
        let mut rng = StdRng::seed_from_u64(0x434f_484f);
        let pool = [
            samples::sl2(),
            samples::gl2(),
            samples::sl2_sl2(),
            samples::sl2_torus_plane(),
            samples::heisenberg3(),
            samples::sl2_adjoint_radical(),
        ];
        for case in 0..100usize {
            let l = &pool[case % pool.len()];
            let n = l.dim();
            let psi: Vec<Matrix> = (0..n).map(|i| l.ad_basis(i)).collect();
            let w = Cochain1::new(Matrix::from_fn(n, n, |_, _| rat(rng.gen_range(-5..=5))));
            let dw = coboundary1(l, &psi, &w).expect("shapes agree");
            let ddw = coboundary2(l, &psi, &dw).expect("shapes agree");
            assert!(ddw.is_zero(), "case {case}: d(d(w)) != 0");
        }

        // Graded semisimple algebras with their adjoint modules.
        let z = samples::sl2_z_grading();
        let double_z = Grading {
            group: GroupBackend::free_abelian(1),
            degrees: z.degrees.iter().chain(&z.degrees).cloned().collect(),
        };
        let graded_pool = [
            (samples::sl2(), z),
            (samples::sl2_sl2(), double_z),
            (samples::sl2_sl2_twisted_basis(), samples::z2_swap_grading()),
        ];
        for case in 0..50usize {
            let (l, g) = &graded_pool[case % graded_pool.len()];
            validate_grading(l, g).expect("grading is multiplicative");
            let n = l.dim();
            let psi: Vec<Matrix> = (0..n).map(|i| l.ad_basis(i)).collect();
            // A graded 1-cochain produces a colinear 2-cocycle as its
            // coboundary; the solver sees only the cocycle.
            let raw = LinearMap::new(Matrix::from_fn(n, n, |_, _| rat(rng.gen_range(-4..=4))));
            let omega0 = average_graded(&raw, g, g).expect("graded average");
            let phi = coboundary1(l, &psi, &omega0).expect("shapes agree");
            let equiv = EquivData::Graded { g_l: g, g_v: g };
            assert!(is_colinear_cochain2(&phi, &equiv));
            let module = GradedModule {
                algebra: l.clone(),
                psi: psi.clone(),
                grading_l: g.clone(),
                grading_v: g.clone(),
            };
            let omega =
                solve_coboundary(l, &psi, &phi, SolveMode::ColinearGraded { module: &module })
                    .unwrap_or_else(|e| panic!("case {case}: solver failed: {e}"));
            assert!(is_colinear_cochain1(&omega, &equiv), "case {case}: output not graded");
            assert_eq!(
                coboundary1(l, &psi, &omega).expect("shapes agree"),
                phi,
                "case {case}: d(omega) != phi"
            );
        }
    });
}

/// Criterion 9: sl2 (+) sl2 splits into two components without structure
/// and into one 6-dimensional invariant component under the Z2 swap
/// grading; re-splitting each component is the identity.
fn c09_invariant_splitting() {
    timed(Duration::from_secs(5), || {
        let plain_l = samples::sl2_sl2();
        let plain = semisimple_split(&plain_l, &Subspace::full(6), None).expect("plain split");
        assert_eq!(plain.len(), 2);
        assert!(plain.iter().all(|c| c.dim() == 3));
        for c in &plain {
            let again = semisimple_split(&plain_l, c, None).expect("re-split");
            assert_eq!(again, vec![c.clone()]);
        }

        let l = samples::sl2_sl2_twisted_basis();
        let structure = EquivStructure::Graded(samples::z2_swap_grading());
        let comps =
            semisimple_split(&l, &Subspace::full(6), Some(&structure)).expect("graded split");
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].dim(), 6);
        let again = semisimple_split(&l, &comps[0], Some(&structure)).expect("re-split");
        assert_eq!(again, comps);
    });
}

/// Criterion 10: the sl2-torus-plane fixture decomposes as B = sl2,
/// S = span{t}, N = the plane, with [B, S] = 0 and [L, R] inside N, all
/// subspaces pinned to exact coordinate spans.
fn c10_full_pipeline() {
    timed(Duration::from_secs(1), || {
        let l = samples::sl2_torus_plane();
        let d = full_decomposition(&l, None).expect("pipeline succeeds");
        let unit = |i: usize| samples::unit_vec(6, i);
        assert_eq!(d.b, Subspace::from_rows(6, vec![unit(0), unit(1), unit(2)]));
        assert_eq!(d.s, Subspace::from_rows(6, vec![unit(3)]));
        assert_eq!(d.n, Subspace::from_rows(6, vec![unit(4), unit(5)]));
        assert!(d.report.iter().all(|c| c.pass));
        let full = Subspace::full(6);
        assert!(l.bracket_span(&d.b, &d.s).is_zero());
        assert!(d.n.contains(&l.bracket_span(&full, &d.r)));
    });
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn()); 10] = [
        ("S3-graded decomposition: B dim 6 graded, R = N dim 2, S = 0", c01_graded_decompose),
        ("Sweedler counterexample: action valid, radical not invariant", c02_sweedler_counterexample),
        ("integrals: Sweedler normalization fails, S3 indicator exact", c03_integrals),
        ("obstruction certificate: im(phi - id) in R, Fix(phi) = R", c04_obstruction_certificate),
        ("random Levi suite: 200 instances, zero failures", c05_random_levi_suite),
        ("graded Levi suite: homogeneous B in 100% of 200 instances", c06_graded_levi_suite),
        ("Maschke averaging: idempotent, colinear, section-preserving", c07_maschke_properties),
        ("cohomology: d^2 = 0 and 50 exact colinear solves", c08_cohomology),
        ("invariant splitting: 2 plain components, 1 graded, stable", c09_invariant_splitting),
        ("full pipeline: B = sl2, S = span{t}, N = plane, exact", c10_full_pipeline),
    ];
    let mut failures = Vec::new();
    for (i, (name, body)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let ok = catch_unwind(AssertUnwindSafe(body)).is_ok();
        let took = start.elapsed();
        println!(
            "criterion {:2}: {} - {} ({:.2?})",
            i + 1,
            if ok { "pass" } else { "FAIL" },
            name,
            took
        );
        if !ok {
            failures.push(i + 1);
        }
    }
    assert!(failures.is_empty(), "failing criteria: {failures:?}");
}
