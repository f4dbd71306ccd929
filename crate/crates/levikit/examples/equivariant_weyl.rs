//! Complete reducibility with structure. A doubled natural sl2-module
//! splits into two irreducible planes. The adjoint module of sl2 x sl2 in
//! a basis diagonalizing the copy swap splits into the two copies as a
//! plain module, but under the swap grading neither copy is a graded
//! submodule, so the equivariant decomposition keeps the module whole.

use levikit::action::GradedModule;
use levikit::exactmat::{Matrix, Rational, Subspace};
use levikit::levi::{weyl_decompose, ModuleWitness};
use levikit::samples;
use num_traits::FromPrimitive;

fn dims(comps: &[Subspace]) -> Vec<usize> {
    comps.iter().map(Subspace::dim).collect()
}

fn main() {
    let l = samples::sl2();
    let r = |x: i64| Rational::from_i64(x).unwrap();
    let e = Matrix::from_rows(vec![vec![r(0), r(1)], vec![r(0), r(0)]]);
    let h = Matrix::from_rows(vec![vec![r(1), r(0)], vec![r(0), r(-1)]]);
    let f = Matrix::from_rows(vec![vec![r(0), r(0)], vec![r(1), r(0)]]);
    // Two copies of the natural plane, stacked block-diagonally.
    let double = |m: &Matrix| {
        Matrix::from_fn(4, 4, |i, j| if i / 2 == j / 2 { m[(i % 2, j % 2)].clone() } else { r(0) })
    };
    let doubled: Vec<Matrix> = [e, h, f].iter().map(double).collect();
    let comps = weyl_decompose(&ModuleWitness::Plain { algebra: &l, psi: &doubled })
        .expect("completely reducible");
    println!("doubled natural sl2-module: irreducibles of dims {:?}", dims(&comps));
    assert_eq!(dims(&comps), vec![2, 2]);

    let ll = samples::sl2_sl2_twisted_basis();
    let psi: Vec<Matrix> = (0..6).map(|i| ll.ad_basis(i)).collect();
    let plain = weyl_decompose(&ModuleWitness::Plain { algebra: &ll, psi: &psi })
        .expect("plain adjoint");
    println!("adjoint of sl2 x sl2, no structure: dims {:?}", dims(&plain));
    assert_eq!(plain.len(), 2);

    let g = samples::z2_swap_grading();
    let gm = GradedModule { algebra: ll, psi, grading_l: g.clone(), grading_v: g };
    let graded = weyl_decompose(&ModuleWitness::Graded { module: &gm }).expect("graded adjoint");
    println!("same module, swap grading: dims {:?}", dims(&graded));
    assert_eq!(graded, vec![Subspace::full(6)]);
}
