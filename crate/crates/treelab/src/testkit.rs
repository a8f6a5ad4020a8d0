//! Shared fixtures and independent brute-force oracles for unit tests.
//!
//! Everything here is deliberately naive: subset enumeration, triple loops,
//! permutation search. The oracles must stay independent of the
//! implementation paths they check.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// The 9-vertex, 18-edge, 4-regular graph with two triangles and 12480
/// spanning trees (1-based edge-list document).
pub(crate) const NINE_VERTEX_CHAMPION: &str = "9 18\n1 5\n1 6\n1 7\n1 8\n2 5\n2 6\n2 7\n2 8\n3 5\n3 7\n3 8\n3 9\n4 6\n4 7\n4 8\n4 9\n5 9\n6 9\n";

pub(crate) fn random_graph(rng: &mut ChaCha8Rng, order: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..order {
        for v in (u + 1)..order {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(order, &edges).unwrap()
}

pub(crate) fn random_connected(rng: &mut ChaCha8Rng, order: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, order, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// Triangle count over all vertex triples.
pub(crate) fn triangles_brute(g: &Graph) -> u64 {
    let n = g.order();
    let mut count = 0;
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Spanning-tree count by enumerating all (order-1)-edge subsets and
/// keeping the acyclic spanning ones.
pub(crate) fn spanning_trees_brute(g: &Graph) -> u64 {
    let n = g.order();
    if n == 1 {
        return 1;
    }
    let edges = g.edges();
    if edges.len() < n - 1 {
        return 0;
    }
    let mut count = 0u64;
    let mut chosen = Vec::with_capacity(n - 1);
    subsets(&edges, n - 1, 0, &mut chosen, &mut |subset| {
        let mut uf: Vec<usize> = (0..n).collect();
        let mut ok = true;
        for &&(u, v) in subset {
            let (ru, rv) = (find(&mut uf, u), find(&mut uf, v));
            if ru == rv {
                ok = false;
                break;
            }
            uf[ru] = rv;
        }
        if ok {
            count += 1;
        }
    });
    count
}

fn subsets<'a>(
    edges: &'a [(usize, usize)],
    k: usize,
    start: usize,
    chosen: &mut Vec<&'a (usize, usize)>,
    f: &mut impl FnMut(&[&(usize, usize)]),
) {
    if chosen.len() == k {
        f(chosen);
        return;
    }
    let need = k - chosen.len();
    if start + need > edges.len() {
        return;
    }
    for i in start..=edges.len() - need {
        chosen.push(&edges[i]);
        subsets(edges, k, i + 1, chosen, f);
        chosen.pop();
    }
}

fn find(uf: &mut Vec<usize>, mut x: usize) -> usize {
    while uf[x] != x {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    x
}

/// Isomorphism by exhaustive permutation search (order <= 8).
pub(crate) fn isomorphic_brute(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if b.order() != n || a.size() != b.size() {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    permute_check(&mut perm, 0, a, b)
}

fn permute_check(perm: &mut Vec<usize>, k: usize, a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if k == n {
        return (0..n)
            .all(|u| (u + 1..n).all(|v| a.has_edge(u, v) == b.has_edge(perm[u], perm[v])));
    }
    for i in k..n {
        perm.swap(k, i);
        if permute_check(perm, k + 1, a, b) {
            perm.swap(k, i);
            return true;
        }
        perm.swap(k, i);
    }
    false
}
