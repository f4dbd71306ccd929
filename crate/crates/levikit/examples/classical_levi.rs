//! Levi decomposition of gl2: the traceless part is a Levi subalgebra and
//! the scalar line is the solvable radical.

use levikit::exactmat::format_rational;
use levikit::levi::levi_decompose;
use levikit::samples;

fn print_rows(name: &str, w: &levikit::exactmat::Subspace) {
    println!("{name} (dim {}):", w.dim());
    for row in w.basis_rows() {
        let cells: Vec<String> = row.iter().map(format_rational).collect();
        println!("  [{}]", cells.join(", "));
    }
}

fn main() {
    let l = samples::gl2();
    let (b, r) = levi_decompose(&l, None).expect("gl2 splits");
    println!("gl2 in the basis (E11, E12, E21, E22)");
    print_rows("Levi subalgebra B", &b);
    print_rows("solvable radical R", &r);
    assert!(l.is_subalgebra_subspace(&b));
    assert!(l.restrict(&b).algebra.killing_nondegenerate());
    assert_eq!(b.sum(&r).dim(), l.dim());
    println!("verified: B is a semisimple subalgebra and L = B + R directly");
}
