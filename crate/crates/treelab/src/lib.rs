//! # treelab
//!
//! An exact-arithmetic laboratory for the spanning-tree complexity of
//! small graphs.
//!
//! The complexity t(G) of a graph is its number of labeled spanning trees:
//! the determinant of any principal minor of the Laplacian L = D - A, or
//! equivalently the product of the nonzero Laplacian eigenvalues divided by
//! the order. This crate keeps both routes and plays them against each
//! other: big-integer fraction-free elimination is authoritative, the
//! floating-point spectrum is advisory.
//!
//! On top of that foundation sit the laboratory benches:
//!
//! | Module | What it does |
//! |--------|--------------|
//! | [`graph`] | bitset graphs, degree stats, triangles, complements, canonical forms |
//! | [`spectral`] | Laplacians, exact tree counts, eigenvalues, trace powers, two-eigenvalue structure |
//! | [`families`] | named constructors (cycles, ladders, Petersen, ...) with closed-form counts |
//! | [`extremal`] | exhaustive trace-filtration search for maximal-complexity graphs |
//! | [`synchrony`] | threshold activation spread and its exact synchrony measures |
//! | [`expanders`] | tree-expander series and limiting growth-root estimates |
//! | [`io`] | edge-list and graph6 formats, deterministic JSON reports |
//!
//! The headline phenomenon: among connected graphs with a fixed number of
//! vertices and edges, maximizing the spanning-tree count empirically
//! amounts to greedily extremizing the trace powers (-1)^(r-1) Tr(L^r) —
//! fix the size, even out the degrees, kill triangles, then shorter closed
//! walks — and the survivors of that filtration are conjectured to be
//! exactly the maximal-complexity graphs. `extremal::verify_conjecture`
//! checks the claim exhaustively at small orders against an independent
//! direct maximization.
//!
//! ## Quick start
//!
//! ```
//! use treelab::families;
//! use treelab::spectral;
//!
//! let petersen = families::petersen();
//! assert_eq!(spectral::tree_count_exact(&petersen), 2000u32.into());
//!
//! let spectrum = spectral::eigenvalues(&petersen, 1e-10).unwrap();
//! let kirchhoff = spectral::tree_count_from_spectrum(&spectrum).unwrap();
//! assert!((kirchhoff - 2000.0).abs() < 1e-6);
//! ```
//!
//! The `examples/` directory walks through each capability; `cargo run
//! --example complexity_basics` is a good entry point. A thin `treelab`
//! binary exposes the same operations as subcommands with deterministic
//! JSON output.

pub mod expanders;
pub mod extremal;
pub mod families;
pub mod graph;
pub mod io;
pub mod spectral;
pub mod synchrony;

mod canon;
#[cfg(test)]
pub(crate) mod testkit;

pub use graph::{DegreeStats, Graph, GraphError, SrgParams};
pub use spectral::{Spectrum, TwoEigenvalueModel};

/// Seeded random-graph helpers shared by examples, tests, and the CLI.
pub mod random {
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    use crate::graph::Graph;

    /// Erdos–Renyi G(n, p) from a caller-provided ChaCha8 stream.
    pub fn gnp(rng: &mut ChaCha8Rng, order: usize, p: f64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..order {
            for v in (u + 1)..order {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(order, &edges).expect("generated edges are simple")
    }

    /// Rejection-sampled connected G(n, p).
    pub fn connected_gnp(rng: &mut ChaCha8Rng, order: usize, p: f64) -> Graph {
        loop {
            let g = gnp(rng, order, p);
            if g.is_connected() {
                return g;
            }
        }
    }
}
