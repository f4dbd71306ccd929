//! Solving d(omega) = phi for a 1-cochain colinear with the structure.
//! The adjoint module of sl2 carries its principal Z-grading; starting
//! from a degree-preserving omega we form phi = d(omega), hand the solver
//! only phi, and get back a degree-preserving primitive whose coboundary
//! matches exactly.

use levikit::action::GradedModule;
use levikit::cohomology::{
    coboundary1, coboundary2, is_colinear_cochain1, is_colinear_cochain2, solve_coboundary,
    Cochain1, EquivData, SolveMode,
};
use levikit::exactmat::{Matrix, Rational};
use levikit::samples;
use num_traits::FromPrimitive;

fn main() {
    let l = samples::sl2();
    let g = samples::sl2_z_grading();
    let psi: Vec<Matrix> = (0..3).map(|i| l.ad_basis(i)).collect();
    let r = |x: i64| Rational::from_i64(x).unwrap();

    // A degree-preserving 1-cochain: each basis line is rescaled.
    let omega = Cochain1::new(Matrix::from_rows(vec![
        vec![r(2), r(0), r(0)],
        vec![r(0), r(-1), r(0)],
        vec![r(0), r(0), r(3)],
    ]));
    let equiv = EquivData::Graded { g_l: &g, g_v: &g };
    assert!(is_colinear_cochain1(&omega, &equiv));

    let phi = coboundary1(&l, &psi, &omega).expect("shapes agree");
    assert!(is_colinear_cochain2(&phi, &equiv));
    // d^2 = 0, so phi is a cocycle.
    assert!(coboundary2(&l, &psi, &phi).expect("shapes agree").is_zero());

    let module = GradedModule {
        algebra: l.clone(),
        psi: psi.clone(),
        grading_l: g.clone(),
        grading_v: g.clone(),
    };
    let solved = solve_coboundary(&l, &psi, &phi, SolveMode::ColinearGraded { module: &module })
        .expect("cocycle over a semisimple algebra splits");
    assert!(is_colinear_cochain1(&solved, &equiv));
    let check = coboundary1(&l, &psi, &solved).expect("shapes agree");
    assert_eq!(check, phi);
    println!("recovered a graded primitive; d(omega') = phi holds exactly");
    for (j, label) in ["e", "h", "f"].into_iter().enumerate() {
        let cells: Vec<String> =
            solved.matrix.col_vec(j).iter().map(levikit::exactmat::format_rational).collect();
        println!("  omega'({label}) = [{}]", cells.join(", "));
    }
}
