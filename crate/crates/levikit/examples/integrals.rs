//! Left integrals on finite-dimensional Hopf algebras. The 4-dimensional
//! Sweedler algebra has a one-dimensional space of left integrals, all of
//! which vanish on 1, so no normalized integral exists and averaging is
//! unavailable. On a group algebra the indicator of the identity element
//! is the normalized ad-invariant integral.

use levikit::exactmat::format_rational;
use levikit::hopf::{HopfAlgebra, HopfError};
use levikit::samples;

fn main() {
    let h4 = HopfAlgebra::sweedler4();
    h4.validate().expect("Hopf axioms hold");
    let space = h4.left_integral_space();
    println!("Sweedler algebra: integral space dimension {}", space.dim());
    match h4.find_normalized_integral() {
        Err(HopfError::NormalizationImpossible { space_dim }) => {
            println!("normalization impossible (integral space dimension {space_dim})")
        }
        other => panic!("expected normalization failure, got {other:?}"),
    }

    let (fg, t) = HopfAlgebra::group_algebra(&samples::s3_table(), Some(samples::s3_labels()))
        .expect("S3 is a group");
    fg.validate().expect("Hopf axioms hold");
    let found = fg.find_normalized_integral().expect("group algebras average");
    assert_eq!(found, t);
    let cells: Vec<String> = found.functional.iter().map(format_rational).collect();
    println!("S3 group algebra: integral [{}]", cells.join(", "));
    println!("normalized: {}, ad-invariant: {}", found.normalized, found.ad_invariant);
}
