//! Splitting a semisimple algebra into minimal invariant ideals. Without
//! extra structure sl2 x sl2 falls apart into its two copies; under the
//! Z/2 grading that swaps the copies (diagonalized by sums/differences)
//! neither copy is graded, so the finest invariant split is the whole
//! algebra: one graded-simple ideal that is not simple.

use levikit::action::EquivStructure;
use levikit::exactmat::Subspace;
use levikit::levi::semisimple_split;
use levikit::samples;

fn main() {
    let plain_l = samples::sl2_sl2();
    let plain = semisimple_split(&plain_l, &Subspace::full(6), None).expect("semisimple");
    println!(
        "sl2 x sl2, no structure: {} simple ideals of dims {:?}",
        plain.len(),
        plain.iter().map(Subspace::dim).collect::<Vec<_>>()
    );
    assert_eq!(plain.len(), 2);

    let l = samples::sl2_sl2_twisted_basis();
    let structure = EquivStructure::Graded(samples::z2_swap_grading());
    let comps = semisimple_split(&l, &Subspace::full(6), Some(&structure)).expect("graded split");
    println!(
        "swap-graded twisted basis: {} invariant ideal(s) of dims {:?}",
        comps.len(),
        comps.iter().map(Subspace::dim).collect::<Vec<_>>()
    );
    assert_eq!(comps.len(), 1);
    assert_eq!(comps[0], Subspace::full(6));

    // Splitting an already-minimal invariant ideal returns it unchanged.
    let again = semisimple_split(&l, &comps[0], Some(&structure)).expect("re-split");
    assert_eq!(again, comps);
    println!("re-splitting the graded-simple ideal is the identity");
}
