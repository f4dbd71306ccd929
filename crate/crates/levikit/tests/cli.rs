//! End-to-end tests of the command-line binary: exit codes (0 success,
//! 1 usage/validation, 2 theorem hypothesis failed, 3 io), structured
//! output shapes, output-file round trips, and byte determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn fixture(rel: &str) -> String {
    fixtures().join(rel).to_str().expect("utf-8 path").to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_levikit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn stderr_text(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn graded_decompose_reports_all_pass() {
    let out = run(&[
        "decompose",
        &fixture("algebras/s3_block.alg"),
        "--grading",
        &fixture("gradings/s3_block.grading"),
        "--format",
        "structured",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_text(&out));
    let v = stdout_json(&out);
    assert_eq!(v["B"].as_array().unwrap().len(), 6);
    assert_eq!(v["S"].as_array().unwrap().len(), 0);
    assert_eq!(v["N"].as_array().unwrap().len(), 2);
    assert_eq!(v["components"].as_array().unwrap().len(), 2);
    let report = v["report"].as_array().unwrap();
    assert!(!report.is_empty());
    assert!(report.iter().all(|c| c["pass"].as_bool() == Some(true)));
}

#[test]
fn sweedler_levi_fails_the_hypothesis() {
    let out = run(&[
        "levi",
        &fixture("algebras/adjoint_radical.alg"),
        "--module",
        &fixture("actions/sweedler_action.act"),
    ]);
    assert_eq!(code(&out), 2, "stderr: {}", stderr_text(&out));
    assert!(stderr_text(&out).contains("not invariant"), "stderr: {}", stderr_text(&out));
}

#[test]
fn sweedler_integral_fails_the_hypothesis() {
    let out = run(&["integral", &fixture("hopf/sweedler4.hopf")]);
    assert_eq!(code(&out), 2, "stderr: {}", stderr_text(&out));
    assert!(
        stderr_text(&out).contains("integral space dimension 1"),
        "stderr: {}",
        stderr_text(&out)
    );
}

#[test]
fn group_algebra_integral_is_the_identity_indicator() {
    let out = run(&["integral", &fixture("hopf/s3_group.hopf"), "--format", "structured"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_text(&out));
    let v = stdout_json(&out);
    assert_eq!(v["functional"], serde_json::json!(["1", "0", "0", "0", "0", "0"]));
    assert_eq!(v["normalized"], Value::Bool(true));
    assert_eq!(v["ad_invariant"], Value::Bool(true));
}

#[test]
fn shear_obstruction_certificate() {
    let out = run(&[
        "obstruction",
        &fixture("algebras/block_extension.alg"),
        "--automorphism",
        &fixture("automorphisms/shear.aut"),
        "--format",
        "structured",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_text(&out));
    let v = stdout_json(&out);
    assert_eq!(v["certificate"], Value::Bool(true));
    assert_eq!(v["image"]["basis"].as_array().unwrap().len(), 3);
    assert_eq!(v["fixed"]["basis"].as_array().unwrap().len(), 4);
}

#[test]
fn identity_automorphism_obstructs_nothing() {
    let out = run(&[
        "obstruction",
        &fixture("algebras/gl2.alg"),
        "--automorphism",
        &fixture("automorphisms/identity_gl2.aut"),
        "--format",
        "structured",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_text(&out));
    let v = stdout_json(&out);
    assert_eq!(v["certificate"], Value::Bool(false));
    assert_eq!(v["image"]["dim"], serde_json::json!(0));
}

#[test]
fn split_with_and_without_structure() {
    let plain = run(&["split", &fixture("algebras/sl2_sl2.alg"), "--format", "structured"]);
    assert_eq!(code(&plain), 0, "stderr: {}", stderr_text(&plain));
    assert_eq!(stdout_json(&plain)["components"].as_array().unwrap().len(), 2);

    let graded = run(&[
        "split",
        &fixture("algebras/sl2_sl2_twisted.alg"),
        "--grading",
        &fixture("gradings/z2_swap.grading"),
        "--format",
        "structured",
    ]);
    assert_eq!(code(&graded), 0, "stderr: {}", stderr_text(&graded));
    let comps = stdout_json(&graded)["components"].as_array().unwrap().clone();
    assert_eq!(comps.len(), 1);
    assert_eq!(comps[0]["dim"], serde_json::json!(6));
}

#[test]
fn weyl_splits_the_doubled_natural_module() {
    let out = run(&[
        "weyl",
        &fixture("algebras/sl2.alg"),
        "--module-space",
        &fixture("modules/doubled_natural.mspace"),
        "--format",
        "structured",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_text(&out));
    let comps = stdout_json(&out)["components"].as_array().unwrap().clone();
    assert_eq!(comps.len(), 2);
    assert!(comps.iter().all(|c| c["dim"] == serde_json::json!(2)));
}

#[test]
fn cohomology_solve_recovers_a_primitive() {
    let out = run(&[
        "cohomology",
        "solve",
        &fixture("algebras/sl2.alg"),
        "--module-space",
        &fixture("modules/adjoint_sl2.mspace"),
        "--cochain",
        &fixture("cochains/adjoint_coboundary.cochain"),
        "--format",
        "structured",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_text(&out));
    let omega = stdout_json(&out)["omega"].as_array().unwrap().clone();
    assert_eq!(omega.len(), 3);
    // Check d(omega) equals the fixture cocycle through the library.
    let l = levikit::io::read_algebra(&fixtures().join("algebras/sl2.alg")).unwrap();
    let psi: Vec<levikit::exactmat::Matrix> = (0..3).map(|i| l.ad_basis(i)).collect();
    let rows: Vec<Vec<levikit::exactmat::Rational>> = omega
        .iter()
        .map(|row| {
            row.as_array()
                .unwrap()
                .iter()
                .map(|c| levikit::exactmat::parse_rational(c.as_str().unwrap()).unwrap())
                .collect()
        })
        .collect();
    let w = levikit::maschke::LinearMap::new(levikit::exactmat::Matrix::from_rows(rows));
    let phi =
        levikit::io::read_cochain(&fixtures().join("cochains/adjoint_coboundary.cochain")).unwrap();
    assert_eq!(levikit::cohomology::coboundary1(&l, &psi, &w).unwrap(), phi);
}

#[test]
fn hopf_builders_and_dual() {
    let dir = std::env::temp_dir().join("levikit-cli-hopf");
    std::fs::create_dir_all(&dir).unwrap();
    let z2 = dir.join("z2.hopf");
    let out = run(&[
        "hopf",
        "build",
        "group",
        "--table",
        "0,1;1,0",
        "--labels",
        "e,g",
        "-o",
        z2.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_text(&out));
    let h = levikit::io::read_hopf(&z2).unwrap();
    assert_eq!(h.dim(), 2);
    assert_eq!(h.labels(), Some(&["e".to_string(), "g".to_string()][..]));

    let sw = dir.join("sweedler.hopf");
    let out = run(&["hopf", "build", "sweedler4", "-o", sw.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_text(&out));
    assert_eq!(levikit::io::read_hopf(&sw).unwrap(), levikit::hopf::HopfAlgebra::sweedler4());

    let out = run(&["hopf", "dual", sw.to_str().unwrap(), "--format", "structured"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_text(&out));
    let v = stdout_json(&out);
    assert_eq!(v["dim"], serde_json::json!(4));
}

#[test]
fn output_file_round_trips_and_reverifies() {
    let dir = std::env::temp_dir().join("levikit-cli-out");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("torus_plane.decomp");
    let out = run(&[
        "decompose",
        &fixture("algebras/torus_plane.alg"),
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_text(&out));
    let body = std::fs::read_to_string(&path).unwrap();
    let d = levikit::io::decomposition_from_str(&body).unwrap();
    assert_eq!((d.b.dim(), d.s.dim(), d.n.dim()), (3, 1, 2));
    // Reverify the stored decomposition against the algebra it came from.
    let l = levikit::io::read_algebra(&fixtures().join("algebras/torus_plane.alg")).unwrap();
    let report = levikit::levi::verify_decomposition(&l, None, &d);
    assert!(report.iter().all(|c| c.pass));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "decompose",
        &fixture("algebras/s3_block.alg"),
        "--grading",
        &fixture("gradings/s3_block.grading"),
        "--format",
        "structured",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn missing_file_exits_3_with_the_path() {
    let out = run(&["radical", "no-such-algebra.alg"]);
    assert_eq!(code(&out), 3);
    assert!(stderr_text(&out).contains("no-such-algebra.alg"));
}

#[test]
fn invalid_algebra_exits_1() {
    let dir = std::env::temp_dir().join("levikit-cli-bad");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("non_jacobi.alg");
    // [e0,e1] = e0, [e1,e2] = e1, [e0,e2] = e2 violates Jacobi.
    std::fs::write(
        &path,
        r#"{"dim": 3, "bracket": [
            {"i": 0, "j": 1, "c": {"0": "1"}},
            {"i": 1, "j": 2, "c": {"1": "1"}},
            {"i": 0, "j": 2, "c": {"2": "1"}}
        ]}"#,
    )
    .unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1, "stderr: {}", stderr_text(&out));
    assert!(stderr_text(&out).to_lowercase().contains("jacobi"));
}

#[test]
fn dimension_cap_exits_1() {
    let out = Command::new(env!("CARGO_BIN_EXE_levikit"))
        .args(["decompose", &fixture("algebras/s3_block.alg")])
        .env("LEVIKIT_MAX_DIM", "4")
        .output()
        .expect("binary runs");
    assert_eq!(code(&out), 1, "stderr: {}", stderr_text(&out));
    assert!(stderr_text(&out).contains("dimension"), "stderr: {}", stderr_text(&out));
}

#[test]
fn conflicting_structures_exit_1() {
    let out = run(&[
        "levi",
        &fixture("algebras/s3_block.alg"),
        "--grading",
        &fixture("gradings/s3_block.grading"),
        "--module",
        &fixture("actions/sweedler_action.act"),
    ]);
    assert_eq!(code(&out), 1);
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
    assert_eq!(code(&run(&["decompose", "--help"])), 0);
}
