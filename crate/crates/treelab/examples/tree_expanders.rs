//! Tree-expander series: cycles barely qualify (roots fall to 1), cubic
//! Moebius ladders hold sqrt(2 + sqrt 3) at infinity, and doubling a
//! ladder lifts the observed roots.
//!
//! ```bash
//! cargo run --example tree_expanders
//! ```

use treelab::expanders::{limiting_root_estimate, series};
use treelab::families::Family;

fn main() {
    let cycle_indices: Vec<usize> = (3..=50).collect();
    let cycles = series("cycles", &cycle_indices, |n| Family::Cycle { n }).unwrap();
    println!("cycles (2-regular): t(C_n) = n, so the roots n^(1/(n-1)) sink toward 1");
    for p in cycles.points.iter().step_by(8) {
        println!("  n = {:>2}: t = {:>3}, root = {:.5}, spectral gap x1 = {:.5}", p.index, p.tree_count, p.root, p.x1);
    }
    let tail = limiting_root_estimate(&cycles, 21).unwrap();
    println!("  tail estimate over n >= 30: {tail:.5} (the limit is 1; spectral gap vanishes)\n");

    let ladder_indices: Vec<usize> = (6..=40).step_by(2).collect();
    let ladders = series("moebius-ladders", &ladder_indices, |v| Family::MoebiusLadder {
        vertices: v,
    })
    .unwrap();
    let c3 = (2.0f64 + 3.0f64.sqrt()).sqrt();
    println!("Moebius ladders (3-regular): closed form verified against exact elimination");
    for p in ladders.points.iter().step_by(4) {
        println!(
            "  vertices = {:>2}: t = {:>14}, root = {:.5} (limit {:.5})",
            p.index, p.tree_count, p.root, c3
        );
    }
    println!(
        "  roots approach the limit from above at O(log n / n); at 40 vertices the gap is still {:.3}\n",
        ladders.points.last().unwrap().root - c3
    );

    let doubled = series("doubled-ladders", &ladder_indices, |v| Family::Doubled {
        base: Box::new(Family::MoebiusLadder { vertices: v }),
    })
    .unwrap();
    println!("doubling to degree 4 lifts every observed root (pointwise at equal index):");
    for (b, d) in ladders.points.iter().zip(&doubled.points).step_by(6) {
        println!(
            "  base {:>2} vertices: root {:.5}  ->  doubled {:>2} vertices: root {:.5}",
            b.order, b.root, d.order, d.root
        );
    }
}
