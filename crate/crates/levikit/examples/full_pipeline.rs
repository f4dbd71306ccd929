//! The full B + S + N pipeline on a mixed algebra: sl2 acting on a plane,
//! plus a central torus element scaling the plane. The radical is the
//! 3-dimensional span of the torus and the plane; its nilradical is the
//! plane; the torus survives as the reductive part S with [B, S] = 0.

use levikit::levi::full_decomposition;
use levikit::samples;

fn main() {
    let l = samples::sl2_torus_plane();
    let d = full_decomposition(&l, None).expect("pipeline succeeds");

    println!("L = B + S + N with dim B = {}, dim S = {}, dim N = {}", d.b.dim(), d.s.dim(), d.n.dim());
    println!("semisimple part splits into {} minimal ideal(s)", d.components.len());
    for c in &d.report {
        println!("  {:<28} {}", c.check, if c.pass { "pass" } else { "FAIL" });
    }
    assert!(d.report.iter().all(|c| c.pass));
    assert_eq!((d.b.dim(), d.s.dim(), d.n.dim()), (3, 1, 2));

    // The structural inclusions behind the splitting, checked exactly:
    // S commutes with B, and [L, R] lands inside the nilradical.
    let full = levikit::exactmat::Subspace::full(l.dim());
    assert_eq!(l.bracket_span(&d.b, &d.s).dim(), 0);
    assert!(d.n.contains(&l.bracket_span(&full, &d.r)));
    println!("[B, S] = 0 and [L, R] lies in N");
}
