//! An action of the 4-dimensional Sweedler Hopf algebra under which the
//! solvable radical is not invariant. The action satisfies every module
//! axiom, yet no invariant Levi subalgebra can be produced: the pipeline
//! reports the failed hypothesis instead of a wrong answer.

use levikit::action::{radical_stability_report, validate_action, EquivStructure};
use levikit::levi::{levi_decompose, LeviError};
use levikit::samples;

fn main() {
    let l = samples::sl2_adjoint_radical();
    let m = samples::sweedler_action();
    validate_action(&l, &m).expect("the action satisfies the module axioms");
    println!("module axioms: ok");

    let structure = EquivStructure::Module(m);
    let report = radical_stability_report(&l, &structure).expect("report available");
    println!("radical invariant: {}", report.r_invariant);
    println!("nilradical invariant: {}", report.n_invariant);
    println!("invariance theorem applies: {}", report.theorem_applies);
    assert!(!report.r_invariant);
    assert!(!report.theorem_applies, "the Sweedler algebra has no normalized integral");

    match levi_decompose(&l, Some(&structure)) {
        Err(LeviError::RadicalNotInvariant) => {
            println!("levi: refused, the radical is not invariant")
        }
        other => panic!("expected the radical obstruction, got {other:?}"),
    }
}
