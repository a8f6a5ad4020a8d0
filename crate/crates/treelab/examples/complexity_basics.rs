//! Exact spanning-tree counts along both Kirchhoff routes.
//!
//! ```bash
//! cargo run --example complexity_basics
//! ```

use treelab::families::{self, Family};
use treelab::spectral;

fn main() {
    let showcase = [
        Family::Cycle { n: 5 },
        Family::Complete { n: 6 },
        Family::CompleteBipartite { a: 3, b: 3 },
        Family::MoebiusLadder { vertices: 8 },
        Family::Petersen,
        Family::Rook3x3,
        Family::ApexedBipartite { k: 2, l: 0 },
    ];

    println!("{:<28} {:>6} {:>6} {:>12} {:>14} {:>12}", "graph", "order", "size", "exact t", "spectral t", "closed form");
    for family in showcase {
        let g = family.build().expect("showcase families build");
        let exact = spectral::tree_count_exact(&g);
        let spectrum = spectral::eigenvalues(&g, 1e-10).expect("eigensolver converges");
        let via_spectrum = spectral::tree_count_from_spectrum(&spectrum).expect("connected");
        let closed = family
            .tree_count_closed_form()
            .map(|t| t.to_string())
            .unwrap_or_else(|| "-".into());
        println!(
            "{:<28} {:>6} {:>6} {:>12} {:>14.3} {:>12}",
            family.label(),
            g.order(),
            g.size(),
            exact.to_string(),
            via_spectrum,
            closed
        );
    }

    // the two routes agree: exact integer elimination vs eigenvalue product
    let rook = families::rook_3x3();
    let exact = spectral::tree_count_exact(&rook);
    let sp = spectral::eigenvalues(&rook, 1e-10).unwrap();
    println!();
    println!("rook 3x3 Laplacian clusters:");
    for c in &sp.clusters {
        println!("  value {:>4}  multiplicity {}  snapped {}", c.value, c.multiplicity, c.snapped);
    }
    println!("exact count {exact}, spectral product {:.6}", spectral::tree_count_from_spectrum(&sp).unwrap());
}
