//! Complementation pairs maximal-complexity graphs with minimal-complexity
//! ones: the spectrum maps x -> order - x, near-regularity is preserved,
//! and the triangle counts split a fixed total.
//!
//! ```bash
//! cargo run --example complement_duality
//! ```

use treelab::extremal::complement_duality_check;
use treelab::families;
use treelab::spectral;

fn main() {
    let petersen = families::petersen();
    let report = complement_duality_check(&petersen);
    println!("Petersen vs its complement (the triangular graph on 10 vertices):");
    println!("  spectrum duality max error: {:.2e}", report.spectrum_duality_max_err);
    println!("  two-eigenvalue on both sides: {:?}", report.two_eigenvalue_match);
    println!("  nearly regular on both sides: {}", report.nearly_regular_match);
    println!(
        "  triangles {} vs {}; identity exact: {}",
        report.triangle_count, report.complement_triangle_count, report.triangle_identity_exact
    );
    println!(
        "  t(Petersen) = {}, t(complement) = {}",
        spectral::tree_count_exact(&petersen),
        spectral::tree_count_exact(&petersen.complement())
    );
    println!("  {}\n", report.pairing_note);

    let c5 = families::cycle(5).unwrap();
    let report = complement_duality_check(&c5);
    println!("C_5 is self-complementary: every fact is symmetric");
    println!(
        "  triangles {} = {}, duality error {:.2e}, passed {}",
        report.triangle_count,
        report.complement_triangle_count,
        report.spectrum_duality_max_err,
        report.passed
    );
}
