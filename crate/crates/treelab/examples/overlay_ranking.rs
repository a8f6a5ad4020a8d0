//! Superimposing copies of the complete graph: each copy shifts every
//! nonzero Laplacian eigenvalue by the order, and for any number of copies
//! the complexity ranking of the overlaid graphs matches the lexicographic
//! trace ranking (maximize Tr L, then -Tr L^2, then Tr L^3, ...).
//!
//! ```bash
//! cargo run --example overlay_ranking
//! ```

use treelab::extremal::overlay_table;
use treelab::families;

fn main() {
    let rook = families::rook_3x3();
    let champion = families::apexed_bipartite(2, 0).unwrap();
    let report = overlay_table(&[rook, champion], 8).expect("same order, within envelope");

    println!("graphs: 0 = rook 3x3, 1 = apexed bipartite (both 9 vertices, 18 edges)");
    println!("trace ranking (no overlay needed): {:?}", report.trace_ranking);
    println!();
    println!("{:>6} {:>22} {:>22} {:>10}", "copies", "t(rook + x*K9)", "t(champ + x*K9)", "agree");
    for row in &report.rows {
        println!(
            "{:>6} {:>22} {:>22} {:>10}",
            row.copies, row.tree_counts[0], row.tree_counts[1], row.matches_trace_ranking
        );
    }
    println!();
    println!("shifted-spectrum check, max relative error: {:.2e}", report.shift_check_max_rel_err);
    println!("{}", report.shift_note);
}
