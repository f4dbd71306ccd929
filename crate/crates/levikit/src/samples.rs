//! Named example algebras, Hopf data, and randomized constructions used by
//! tests, benchmarks, and the runnable examples.
//!
//! Where a faithful matrix realization is available the structure constants
//! are derived from it rather than typed in, which keeps the tables honest.

use crate::exactmat::{rat, Matrix, Rational};
use num_traits::Zero;
use crate::action::{Grading, GroupBackend, GroupElement, ModuleStructure};
use crate::hopf::HopfAlgebra;
use crate::liealg::LieAlgebra;

/// sl2 in the basis (e, h, f): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_pairs(
        3,
        &[
            (0, 1, 0, rat(-2)), // [e,h] = -2e
            (0, 2, 1, rat(1)),  // [e,f] = h
            (1, 2, 2, rat(-2)), // [h,f] = -2f
        ],
    )
}

/// The two-dimensional non-abelian algebra: [e1, e2] = e2.
pub fn affine_line() -> LieAlgebra {
    LieAlgebra::from_pairs(2, &[(0, 1, 1, rat(1))])
}

/// Heisenberg algebra in the basis (x, y, z): [x, y] = z.
pub fn heisenberg3() -> LieAlgebra {
    LieAlgebra::from_pairs(3, &[(0, 1, 2, rat(1))])
}

fn unit_matrix(n: usize, r: usize, c: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m[(r, c)] = rat(1);
    m
}

/// gl2 in the basis (E11, E12, E21, E22).
pub fn gl2() -> LieAlgebra {
    let ops = vec![
        unit_matrix(2, 0, 0),
        unit_matrix(2, 0, 1),
        unit_matrix(2, 1, 0),
        unit_matrix(2, 1, 1),
    ];
    LieAlgebra::from_operator_basis(&ops).expect("gl2 closes")
}

/// Two gl2 blocks inside gl4, basis (E11, E12, E21, E22, E33, E34, E43, E44).
/// Carries the standard S3-grading used throughout the examples: diagonal
/// units have trivial degree, the first block's off-diagonal units degree
/// (12), the second block's degree (23).
pub fn gl2_gl2_blocks() -> LieAlgebra {
    let idx = [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2), (2, 3), (3, 2), (3, 3)];
    let ops: Vec<Matrix> = idx.iter().map(|&(r, c)| unit_matrix(4, r, c)).collect();
    LieAlgebra::from_operator_basis(&ops).expect("block algebra closes")
}

/// sl2 + sl2 as block diagonal in gl4, standard per-copy basis
/// (e1, h1, f1, e2, h2, f2).
pub fn sl2_sl2() -> LieAlgebra {
    let e = |r, c| -> Matrix { unit_matrix(4, r, c) };
    let ops = vec![
        e(0, 1),
        e(0, 0).sub(&e(1, 1)),
        e(1, 0),
        e(2, 3),
        e(2, 2).sub(&e(3, 3)),
        e(3, 2),
    ];
    LieAlgebra::from_operator_basis(&ops).expect("sl2+sl2 closes")
}

/// sl2 + sl2 in the diagonal/antidiagonal basis (d_e, d_h, d_f, a_e, a_h,
/// a_f) with d_x = (x, x) and a_x = (x, -x). The swap automorphism grades
/// this basis by Z2: d-vectors even, a-vectors odd.
pub fn sl2_sl2_twisted_basis() -> LieAlgebra {
    let e = |r, c| -> Matrix { unit_matrix(4, r, c) };
    let top = [e(0, 1), e(0, 0).sub(&e(1, 1)), e(1, 0)];
    let bot = [e(2, 3), e(2, 2).sub(&e(3, 3)), e(3, 2)];
    let mut ops = Vec::new();
    for i in 0..3 {
        ops.push(top[i].add(&bot[i]));
    }
    for i in 0..3 {
        ops.push(top[i].sub(&bot[i]));
    }
    LieAlgebra::from_operator_basis(&ops).expect("twisted basis closes")
}

/// sl2 acting on a torus line and a natural plane: basis (e, h, f, t, v1,
/// v2) with [t, v] = v on the plane, sl2 acting naturally on (v1, v2), and
/// [sl2, t] = 0. The full decomposition is B = sl2, S = span t, N = plane.
pub fn sl2_torus_plane() -> LieAlgebra {
    // Realized in gl3 as [[a + s*I2, v], [0, 0]] blocks.
    let mut ops = Vec::new();
    let emb = |m: &Matrix| -> Matrix {
        let mut out = Matrix::zeros(3, 3);
        for i in 0..2 {
            for j in 0..2 {
                out[(i, j)] = m[(i, j)].clone();
            }
        }
        out
    };
    let e = Matrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(0), rat(0)]]);
    let h = Matrix::from_rows(vec![vec![rat(1), rat(0)], vec![rat(0), rat(-1)]]);
    let f = Matrix::from_rows(vec![vec![rat(0), rat(0)], vec![rat(1), rat(0)]]);
    ops.push(emb(&e));
    ops.push(emb(&h));
    ops.push(emb(&f));
    ops.push(emb(&Matrix::identity(2))); // t
    ops.push(unit_matrix(3, 0, 2)); // v1
    ops.push(unit_matrix(3, 1, 2)); // v2
    LieAlgebra::from_operator_basis(&ops).expect("sl2 torus plane closes")
}

/// sl2 with an abelian radical carrying the adjoint action: basis
/// (e, h, f, we, wh, wf) with [a, w(b)] = w([a, b]) and [w, w] = 0.
/// This is the carrier of the Sweedler-algebra action whose radical is not
/// an invariant subspace.
pub fn sl2_adjoint_radical() -> LieAlgebra {
    let s = sl2();
    let mut entries: Vec<(usize, usize, usize, Rational)> = Vec::new();
    for i in 0..3 {
        for j in (i + 1)..3 {
            for k in 0..3 {
                let c = s.c(i, j, k).clone();
                if !c.is_zero() {
                    entries.push((i, j, k, c.clone())); // [a, b]
                    entries.push((i, j + 3, k + 3, c)); // [a, w(b)] = w([a,b])
                }
            }
        }
        // [e_i, w(e_i)] = w([e_i, e_i]) = 0, nothing to add; cross terms
        // with i > j are handled by antisymmetry of from_pairs input below.
    }
    // Also (j, i+3) pairs with j < i+3 but j > i: [e_j, w(e_i)] = w([e_j, e_i]).
    for j in 0..3 {
        for i in 0..3 {
            if j <= i {
                continue;
            }
            for k in 0..3 {
                let c = s.c(j, i, k).clone();
                if !c.is_zero() {
                    entries.push((j, i + 3, k + 3, c));
                }
            }
        }
    }
    LieAlgebra::from_pairs(6, &entries)
}

/// Block algebra {(C, D)} with C traceless m x m and D arbitrary m x m,
/// realized as [[C, D], [0, 0]] inside gl(2m), for m = 2. Its radical is the
/// D-block; the shear automorphism (C, D) -> (C, C + D) admits no invariant
/// Levi subalgebra.
pub fn sl_block_extension() -> LieAlgebra {
    let emb_c = |m: &Matrix| -> Matrix {
        let mut out = Matrix::zeros(4, 4);
        for i in 0..2 {
            for j in 0..2 {
                out[(i, j)] = m[(i, j)].clone();
            }
        }
        out
    };
    let e = Matrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(0), rat(0)]]);
    let h = Matrix::from_rows(vec![vec![rat(1), rat(0)], vec![rat(0), rat(-1)]]);
    let f = Matrix::from_rows(vec![vec![rat(0), rat(0)], vec![rat(1), rat(0)]]);
    let mut ops = vec![emb_c(&e), emb_c(&h), emb_c(&f)];
    for r in 0..2 {
        for c in 0..2 {
            ops.push(unit_matrix(4, r, 2 + c));
        }
    }
    LieAlgebra::from_operator_basis(&ops).expect("block extension closes")
}

/// The shear automorphism (C, D) -> (C, C + D) of
/// [`sl_block_extension`], in its basis (e, h, f, D11, D12, D21, D22).
pub fn shear_automorphism() -> Matrix {
    let mut phi = Matrix::identity(7);
    // C = x_e e + x_h h + x_f f maps to D-part: e -> E12, h -> E11 - E22,
    // f -> E21 in D coordinates (D11, D12, D21, D22).
    phi[(4, 0)] = rat(1); // e adds E12
    phi[(3, 1)] = rat(1); // h adds E11
    phi[(6, 1)] = rat(-1); // h subtracts E22
    phi[(5, 2)] = rat(1); // f adds E21
    phi
}

/// Multiplication table of the group generated by a closed set of
/// permutations in one-line notation: entry (i, j) is the index of the
/// composite that applies permutation j first, then permutation i.
///
/// Panics if the list is not closed under composition; the samples below
/// always pass full lists.
pub fn permutation_table(perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let find = |p: &[usize]| -> usize {
        perms
            .iter()
            .position(|q| q.as_slice() == p)
            .expect("permutation list must be closed under composition")
    };
    perms
        .iter()
        .map(|pi| {
            perms
                .iter()
                .map(|pj| {
                    let composed: Vec<usize> = pj.iter().map(|&s| pi[s]).collect();
                    find(&composed)
                })
                .collect()
        })
        .collect()
}

/// The symmetric group on three letters; elements are the permutations of
/// {0,1,2} in lexicographic one-line order, so the identity has index 0.
pub fn s3_table() -> Vec<Vec<usize>> {
    permutation_table(&[
        vec![0, 1, 2],
        vec![0, 2, 1],
        vec![1, 0, 2],
        vec![1, 2, 0],
        vec![2, 0, 1],
        vec![2, 1, 0],
    ])
}

/// Cycle-notation labels matching the element order of [`s3_table`].
pub fn s3_labels() -> Vec<String> {
    ["e", "(23)", "(12)", "(123)", "(132)", "(13)"]
        .iter()
        .map(|s| s.to_string())
        .collect()
}

/// Addition table of the integers mod n.
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

/// Standard basis vector i of F^n.
pub fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = rat(1);
    v
}

/// The S3-grading of [`gl2_gl2_blocks`]: diagonal units sit in the identity
/// degree, the first block's off-diagonal pair in degree (12), the second
/// block's in degree (23).
pub fn s3_block_grading() -> Grading {
    let group = GroupBackend::finite(s3_table(), Some(s3_labels())).expect("S3 is a group");
    let deg = |i: usize| GroupElement::Finite(i);
    Grading {
        group,
        degrees: vec![
            deg(0),
            deg(2),
            deg(2),
            deg(0),
            deg(0),
            deg(1),
            deg(1),
            deg(0),
        ],
    }
}

/// The Z2-grading of [`sl2_sl2_twisted_basis`]: diagonal vectors are even,
/// antidiagonal ones odd.
pub fn z2_swap_grading() -> Grading {
    let group = GroupBackend::finite(cyclic_table(2), None).expect("Z2 is a group");
    let mut degrees = vec![GroupElement::Finite(0); 3];
    degrees.extend(vec![GroupElement::Finite(1); 3]);
    Grading { group, degrees }
}

/// The principal Z-grading of [`sl2`]: deg e = 1, deg h = 0, deg f = -1.
pub fn sl2_z_grading() -> Grading {
    Grading {
        group: GroupBackend::free_abelian(1),
        degrees: vec![
            GroupElement::Lattice(vec![1]),
            GroupElement::Lattice(vec![0]),
            GroupElement::Lattice(vec![-1]),
        ],
    }
}

/// The Sweedler-algebra action on [`sl2_adjoint_radical`] under which the
/// solvable radical is not invariant: g negates the radical, x collapses
/// w(a) to a and kills the semisimple part, and gx acts exactly as x does.
pub fn sweedler_action() -> ModuleStructure {
    let hopf = HopfAlgebra::sweedler4();
    let id = Matrix::identity(6);
    let g = Matrix::from_fn(6, 6, |i, j| {
        if i != j {
            rat(0)
        } else if i < 3 {
            rat(1)
        } else {
            rat(-1)
        }
    });
    let x = Matrix::from_fn(6, 6, |i, j| if j == i + 3 { rat(1) } else { rat(0) });
    ModuleStructure::from_operators(hopf, &[id, g, x.clone(), x]).expect("shapes agree")
}

/// The order-two subaction of [`sweedler_action`]: the group algebra of Z2
/// acting through g alone. Both the radical and the semisimple part are
/// invariant under it.
pub fn z2_sign_action() -> ModuleStructure {
    let (hopf, _) = HopfAlgebra::group_algebra(&cyclic_table(2), None).expect("Z2 is a group");
    let id = Matrix::identity(6);
    let g = Matrix::from_fn(6, 6, |i, j| {
        if i != j {
            rat(0)
        } else if i < 3 {
            rat(1)
        } else {
            rat(-1)
        }
    });
    ModuleStructure::from_operators(hopf, &[id, g]).expect("shapes agree")
}

/// sl2 acting on its natural plane: basis (e, h, f, v1, v2) with the plane
/// as an abelian radical, realized as [[a, v], [0, 0]] blocks in gl3.
pub fn sl2_natural_plane() -> LieAlgebra {
    let emb = |m: &Matrix| -> Matrix {
        let mut out = Matrix::zeros(3, 3);
        for i in 0..2 {
            for j in 0..2 {
                out[(i, j)] = m[(i, j)].clone();
            }
        }
        out
    };
    let e = Matrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(0), rat(0)]]);
    let h = Matrix::from_rows(vec![vec![rat(1), rat(0)], vec![rat(0), rat(-1)]]);
    let f = Matrix::from_rows(vec![vec![rat(0), rat(0)], vec![rat(1), rat(0)]]);
    let ops = vec![emb(&e), emb(&h), emb(&f), unit_matrix(3, 0, 2), unit_matrix(3, 1, 2)];
    LieAlgebra::from_operator_basis(&ops).expect("sl2 natural plane closes")
}

/// A randomized Levi testbed: a semidirect sum of one or two sl2 copies
/// with a solvable radical assembled from natural, adjoint, torus-plane,
/// Heisenberg, affine, and trivial chunks, pushed through a seeded
/// unimodular change of basis. Returns the algebra and the dimension its
/// Levi subalgebras must have.
pub fn random_levi_instance(seed: u64) -> (LieAlgebra, usize) {
    let (l, _, bdim) = random_levi_core(seed, false);
    (l, bdim)
}

/// Graded variant of [`random_levi_instance`]: carries a rank-one lattice
/// grading; the basis shuffle mixes only coordinates of equal degree, so
/// the degree vector survives the change of basis verbatim.
pub fn random_graded_levi_instance(seed: u64) -> (LieAlgebra, Grading, usize) {
    random_levi_core(seed, true)
}

fn random_levi_core(seed: u64, graded: bool) -> (LieAlgebra, Grading, usize) {
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(
        seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(graded as u64),
    );
    let s = sl2();
    let copies = 1 + rng.gen_range(0..2usize);
    let mut entries: Vec<(usize, usize, usize, Rational)> = Vec::new();
    let mut degrees: Vec<i64> = Vec::new();
    for c in 0..copies {
        let a0 = 3 * c;
        entries.push((a0, a0 + 1, a0, rat(-2)));
        entries.push((a0, a0 + 2, a0 + 1, rat(1)));
        entries.push((a0 + 1, a0 + 2, a0 + 2, rat(-2)));
        degrees.extend([1, 0, -1]);
    }
    // Radical chunks, all acted on by the first copy only. Each pushes its
    // own brackets and degrees; shifts keep the grading multiplicative.
    let a0 = 0usize;
    let mut dim = 3 * copies;
    let chunks = 1 + rng.gen_range(0..3usize);
    for _ in 0..chunks {
        // A chunk adds at most three coordinates; stop while the radical can
        // still absorb one, keeping it within six dimensions (total <= 12).
        if dim - 3 * copies > 3 {
            break;
        }
        let off = dim;
        match rng.gen_range(0..6usize) {
            0 => {
                // Natural plane (v1, v2), degrees (d + 1, d).
                let d: i64 = rng.gen_range(-1..=1);
                entries.push((a0, off + 1, off, rat(1)));
                entries.push((a0 + 1, off, off, rat(1)));
                entries.push((a0 + 1, off + 1, off + 1, rat(-1)));
                entries.push((a0 + 2, off, off + 1, rat(1)));
                degrees.extend([d + 1, d]);
                dim += 2;
            }
            1 => {
                // Adjoint copy (we, wh, wf), degrees shifted by s.
                let sh: i64 = rng.gen_range(-1..=1);
                for x in 0..3 {
                    for j in 0..3 {
                        for k in 0..3 {
                            let c = s.c(x, j, k).clone();
                            if !c.is_zero() {
                                entries.push((a0 + x, off + j, off + k, c));
                            }
                        }
                    }
                }
                degrees.extend([sh + 1, sh, sh - 1]);
                dim += 3;
            }
            2 => {
                // Torus and plane: [t, v] = v on a natural plane.
                let d: i64 = rng.gen_range(-1..=1);
                entries.push((a0, off + 2, off + 1, rat(1)));
                entries.push((a0 + 1, off + 1, off + 1, rat(1)));
                entries.push((a0 + 1, off + 2, off + 2, rat(-1)));
                entries.push((a0 + 2, off + 1, off + 2, rat(1)));
                entries.push((off, off + 1, off + 1, rat(1)));
                entries.push((off, off + 2, off + 2, rat(1)));
                degrees.extend([0, d + 1, d]);
                dim += 3;
            }
            3 => {
                // Heisenberg chunk with trivial action, [x, y] = z.
                let da: i64 = rng.gen_range(-1..=1);
                let db: i64 = rng.gen_range(-1..=1);
                entries.push((off, off + 1, off + 2, rat(1)));
                degrees.extend([da, db, da + db]);
                dim += 3;
            }
            4 => {
                // Affine pair with trivial action, [x, y] = y.
                let db: i64 = rng.gen_range(-1..=1);
                entries.push((off, off + 1, off + 1, rat(1)));
                degrees.extend([0, db]);
                dim += 2;
            }
            _ => {
                // Trivial central coordinates.
                let d = 1 + rng.gen_range(0..2usize);
                for _ in 0..d {
                    degrees.push(rng.gen_range(-1..=1));
                }
                dim += d;
            }
        }
    }
    let l0 = LieAlgebra::from_pairs(dim, &entries);
    // Unimodular shuffle: column j += lambda * column i, restricted to
    // equal-degree columns in the graded variant.
    let mut p = Matrix::identity(dim);
    let lambdas = [-2i64, -1, 1, 2];
    for _ in 0..(2 * dim) {
        let i = rng.gen_range(0..dim);
        let j = rng.gen_range(0..dim);
        if i == j || (graded && degrees[i] != degrees[j]) {
            continue;
        }
        let lam = rat(lambdas[rng.gen_range(0..lambdas.len())]);
        for r in 0..dim {
            let add = &p[(r, i)] * &lam;
            p[(r, j)] += add;
        }
    }
    let pinv = p.inverse().expect("unimodular shuffle is invertible");
    let mut moved: Vec<(usize, usize, usize, Rational)> = Vec::new();
    for i in 0..dim {
        for j in (i + 1)..dim {
            let w = l0.bracket(&p.col_vec(i), &p.col_vec(j));
            for (k, c) in pinv.apply(&w).into_iter().enumerate() {
                if !c.is_zero() {
                    moved.push((i, j, k, c));
                }
            }
        }
    }
    let l = LieAlgebra::from_pairs(dim, &moved);
    debug_assert!(l.validate().is_ok());
    let grading = Grading {
        group: GroupBackend::free_abelian(1),
        degrees: degrees.into_iter().map(|d| GroupElement::Lattice(vec![d])).collect(),
    };
    (l, grading, 3 * copies)
}
