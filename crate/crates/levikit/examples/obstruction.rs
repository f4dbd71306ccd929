//! A Levi subalgebra that cannot be made invariant. The order-2
//! automorphism phi of a 7-dimensional algebra (sl2 acting on a radical
//! glued by a shear) fixes exactly the radical, so any phi-invariant
//! complement to R would land in Fix(phi) = R: a contradiction witnessed
//! by the certificate pair (im(phi - id), Fix(phi)).

use levikit::action::CyclicAction;
use levikit::exactmat::Subspace;
use levikit::levi::{automorphism_levi_obstruction, ObstructionOutcome};
use levikit::samples;

fn main() {
    let l = samples::sl_block_extension();
    let phi = CyclicAction::new(samples::shear_automorphism());
    let r = l.solvable_radical();

    match automorphism_levi_obstruction(&l, &phi).expect("automorphism is valid") {
        ObstructionOutcome::Certificate { image, fixed } => {
            println!(
                "no invariant Levi subalgebra: dim im(phi - id) = {}, dim Fix(phi) = {}",
                image.dim(),
                fixed.dim()
            );
            assert!(r.contains(&image));
            assert_eq!(fixed, r);
            println!("im(phi - id) lies in R and Fix(phi) = R exactly");
        }
        ObstructionOutcome::NoObstruction { .. } => panic!("shear must obstruct"),
    }

    // The identity automorphism obstructs nothing.
    let id = CyclicAction::new(levikit::exactmat::Matrix::identity(l.dim()));
    match automorphism_levi_obstruction(&l, &id).expect("identity is valid") {
        ObstructionOutcome::NoObstruction { image, fixed, .. } => {
            assert!(image.is_zero());
            assert_eq!(fixed, Subspace::full(l.dim()));
            println!("identity automorphism: no obstruction, as expected");
        }
        ObstructionOutcome::Certificate { .. } => panic!("identity cannot obstruct"),
    }
}
