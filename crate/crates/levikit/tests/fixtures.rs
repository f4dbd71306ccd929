//! The committed fixture files are exact emissions of the sample builders.
//! This test regenerates every fixture in memory and compares bytes, so
//! the files, the builders, and the serializers can never drift apart.
//! Run with LEVIKIT_REGEN_FIXTURES=1 to rewrite the tree instead.

use levikit::cohomology::coboundary1;
use levikit::exactmat::{rat, Matrix};
use levikit::hopf::HopfAlgebra;
use levikit::io;
use levikit::maschke::LinearMap;
use levikit::samples;
use std::path::PathBuf;

fn fixtures_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn doubled_natural_operators() -> Vec<Matrix> {
    let e = Matrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(0), rat(0)]]);
    let h = Matrix::from_rows(vec![vec![rat(1), rat(0)], vec![rat(0), rat(-1)]]);
    let f = Matrix::from_rows(vec![vec![rat(0), rat(0)], vec![rat(1), rat(0)]]);
    [e, h, f]
        .iter()
        .map(|m| {
            Matrix::from_fn(4, 4, |i, j| {
                if i / 2 == j / 2 {
                    m[(i % 2, j % 2)].clone()
                } else {
                    rat(0)
                }
            })
        })
        .collect()
}

fn manifest() -> Vec<(&'static str, String)> {
    let (s3_hopf, _) = HopfAlgebra::group_algebra(&samples::s3_table(), Some(samples::s3_labels()))
        .expect("S3 is a group");
    let (z2_hopf, _) =
        HopfAlgebra::group_algebra(&samples::cyclic_table(2), None).expect("Z2 is a group");
    let sl2 = samples::sl2();
    let adjoint_psi: Vec<Matrix> = (0..3).map(|i| sl2.ad_basis(i)).collect();
    let adjoint_space =
        io::ModuleSpace { psi: adjoint_psi.clone(), grading: None, coaction: None };
    let doubled_space =
        io::ModuleSpace { psi: doubled_natural_operators(), grading: None, coaction: None };
    // A guaranteed-solvable right-hand side: the coboundary of a fixed map.
    let omega = LinearMap::new(Matrix::from_rows(vec![
        vec![rat(1), rat(2), rat(0)],
        vec![rat(0), rat(1), rat(-1)],
        vec![rat(3), rat(0), rat(1)],
    ]));
    let phi = coboundary1(&sl2, &adjoint_psi, &omega).expect("shapes agree");

    vec![
        ("algebras/sl2.alg", io::algebra_to_string(&sl2)),
        ("algebras/gl2.alg", io::algebra_to_string(&samples::gl2())),
        ("algebras/affine_line.alg", io::algebra_to_string(&samples::affine_line())),
        ("algebras/heisenberg3.alg", io::algebra_to_string(&samples::heisenberg3())),
        ("algebras/sl2_sl2.alg", io::algebra_to_string(&samples::sl2_sl2())),
        ("algebras/sl2_sl2_twisted.alg", io::algebra_to_string(&samples::sl2_sl2_twisted_basis())),
        ("algebras/s3_block.alg", io::algebra_to_string(&samples::gl2_gl2_blocks())),
        ("algebras/adjoint_radical.alg", io::algebra_to_string(&samples::sl2_adjoint_radical())),
        ("algebras/torus_plane.alg", io::algebra_to_string(&samples::sl2_torus_plane())),
        ("algebras/block_extension.alg", io::algebra_to_string(&samples::sl_block_extension())),
        ("gradings/s3_block.grading", io::grading_to_string(&samples::s3_block_grading())),
        ("gradings/z2_swap.grading", io::grading_to_string(&samples::z2_swap_grading())),
        ("gradings/sl2_z.grading", io::grading_to_string(&samples::sl2_z_grading())),
        ("hopf/sweedler4.hopf", io::hopf_to_string(&HopfAlgebra::sweedler4())),
        ("hopf/s3_group.hopf", io::hopf_to_string(&s3_hopf)),
        ("hopf/z2_group.hopf", io::hopf_to_string(&z2_hopf)),
        (
            "actions/sweedler_action.act",
            io::module_to_string(&samples::sweedler_action(), Some("../hopf/sweedler4.hopf")),
        ),
        (
            "actions/z2_sign.act",
            io::module_to_string(&samples::z2_sign_action(), Some("../hopf/z2_group.hopf")),
        ),
        ("automorphisms/shear.aut", io::automorphism_to_string(&samples::shear_automorphism())),
        ("automorphisms/identity_gl2.aut", io::automorphism_to_string(&Matrix::identity(4))),
        ("modules/adjoint_sl2.mspace", io::module_space_to_string(&adjoint_space, None)),
        ("modules/doubled_natural.mspace", io::module_space_to_string(&doubled_space, None)),
        ("cochains/adjoint_coboundary.cochain", io::cochain_to_string(&phi)),
    ]
}

#[test]
fn fixtures_match_their_builders() {
    let root = fixtures_root();
    let regen = std::env::var("LEVIKIT_REGEN_FIXTURES").is_ok();
    let mut missing = Vec::new();
    for (rel, body) in manifest() {
        let path = root.join(rel);
        if regen {
            std::fs::create_dir_all(path.parent().unwrap()).unwrap();
            std::fs::write(&path, &body).unwrap();
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(on_disk) => assert_eq!(on_disk, body, "fixture {rel} is out of sync"),
            Err(_) => missing.push(rel),
        }
    }
    assert!(missing.is_empty(), "missing fixtures (regenerate with LEVIKIT_REGEN_FIXTURES=1): {missing:?}");
}

#[test]
fn fixture_actions_load_against_referenced_hopf_files() {
    let root = fixtures_root();
    if !root.exists() {
        return;
    }
    let m = io::read_module(&root.join("actions/sweedler_action.act"), None).unwrap();
    assert_eq!(m, samples::sweedler_action());
    let z = io::read_module(&root.join("actions/z2_sign.act"), None).unwrap();
    assert_eq!(z, samples::z2_sign_action());
}
