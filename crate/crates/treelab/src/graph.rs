//! Simple undirected labeled graphs over bitset adjacency rows.
//!
//! `Graph` is the universal object every other module consumes. Vertices are
//! indexed `0..order` internally; all text I/O is 1-based (see [`crate::io`]).
//! Values are immutable after construction and safe to share across threads.

use thiserror::Error;

use crate::canon;

/// Errors raised while building or transforming graphs.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order must be at least 1")]
    ZeroOrder,
    #[error("vertex index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("canonical labeling supports order <= {max}, got {got}")]
    CanonicalTooLarge { got: usize, max: usize },
}

/// A finite, loopless, undirected graph without multiple edges.
///
/// Adjacency is stored as one bitset row per vertex, packed into 64-bit
/// words row-major, so common-neighbor counts are word-parallel AND +
/// popcount.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        if order == 0 {
            return Err(GraphError::ZeroOrder);
        }
        let words = order.div_ceil(64);
        Ok(Graph {
            order,
            words,
            adj: vec![0; order * words],
        })
    }

    /// Builds a graph from an explicit edge list (0-based endpoints).
    ///
    /// Rejects out-of-range endpoints, self-loops, and duplicate edges
    /// (in either orientation).
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Complete graph on `order` vertices.
    pub fn complete(order: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(order)?;
        for u in 0..order {
            for v in (u + 1)..order {
                g.insert_edge(u, v)?;
            }
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let order = self.order;
        for &ix in &[u, v] {
            if ix >= order {
                return Err(GraphError::IndexOutOfRange { index: ix, order });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            let (a, b) = (u.min(v), u.max(v));
            return Err(GraphError::DuplicateEdge { u: a, v: b });
        }
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        let total: u32 = self.adj.iter().map(|w| w.count_ones()).sum();
        (total / 2) as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.order && v < self.order);
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of common neighbors of `u` and `v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Iterates the neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &w)| {
            BitIter { word: w }.map(move |b| wi * 64 + b)
        })
    }

    /// All edges as 0-based pairs `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Degree list plus the power sums the trace identities use.
    pub fn degree_stats(&self) -> DegreeStats {
        let degrees: Vec<usize> = (0..self.order).map(|v| self.degree(v)).collect();
        let sum = degrees.iter().sum();
        let sum_squares = degrees.iter().map(|&d| d * d).sum();
        let sum_cubes = degrees.iter().map(|&d| d * d * d).sum();
        let min_deg = degrees.iter().copied().min().unwrap_or(0);
        let max_deg = degrees.iter().copied().max().unwrap_or(0);
        DegreeStats {
            degrees,
            sum,
            sum_squares,
            sum_cubes,
            min_deg,
            max_deg,
        }
    }

    /// Whether every degree equals `d` or `d + 1` for some `d`.
    pub fn is_nearly_regular(&self) -> bool {
        self.degree_stats().nearly_regular()
    }

    pub fn is_regular(&self) -> bool {
        let s = self.degree_stats();
        s.min_deg == s.max_deg
    }

    /// Bitset BFS connectivity check.
    pub fn is_connected(&self) -> bool {
        if self.order == 1 {
            return true;
        }
        let words = self.words;
        let mut visited = vec![0u64; words];
        visited[0] = 1;
        let mut frontier = vec![0u64; words];
        frontier[0] = 1;
        let mut count = 1usize;
        while frontier.iter().any(|&w| w != 0) {
            let mut next = vec![0u64; words];
            for wi in 0..words {
                let mut f = frontier[wi];
                while f != 0 {
                    let v = wi * 64 + f.trailing_zeros() as usize;
                    f &= f - 1;
                    for (nw, &rw) in next.iter_mut().zip(self.row(v)) {
                        *nw |= rw;
                    }
                }
            }
            for wi in 0..words {
                next[wi] &= !visited[wi];
                visited[wi] |= next[wi];
                count += next[wi].count_ones() as usize;
            }
            frontier = next;
        }
        count == self.order
    }

    /// Exact triangle count by edge iteration with bitset intersection.
    pub fn triangle_count(&self) -> u64 {
        let mut tripled = 0u64;
        for u in 0..self.order {
            for v in self.neighbors(u) {
                if v > u {
                    tripled += self.common_neighbors(u, v) as u64;
                }
            }
        }
        // every triangle is seen once per edge
        tripled / 3
    }

    /// Complement graph: edge present iff absent here.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.order).expect("order preserved");
        for u in 0..self.order {
            for v in (u + 1)..self.order {
                if !self.has_edge(u, v) {
                    g.insert_edge(u, v).expect("fresh edge");
                }
            }
        }
        g
    }

    /// Exact closed-walk count `Tr(A^r)` via repeated big-integer matrix
    /// multiplication.
    pub fn closed_walk_count(&self, r: usize) -> num_bigint::BigUint {
        use num_bigint::BigUint;
        use num_traits::{One, Zero};
        let n = self.order;
        if r == 0 {
            return BigUint::from(n);
        }
        let a: Vec<Vec<BigUint>> = (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| {
                        if self.has_edge(u, v) {
                            BigUint::one()
                        } else {
                            BigUint::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let mut power = a.clone();
        for _ in 1..r {
            power = mat_mul(&power, &a);
        }
        (0..n).map(|i| power[i][i].clone()).sum()
    }

    /// Strong-regularity test: `Some((v, k, lambda, mu))` iff the graph is
    /// regular with constant common-neighbor counts over adjacent and
    /// non-adjacent pairs.
    pub fn srg_params(&self) -> Option<SrgParams> {
        let n = self.order;
        if n < 2 || !self.is_regular() {
            return None;
        }
        let k = self.degree(0);
        let mut lambda: Option<usize> = None;
        let mut mu: Option<usize> = None;
        for u in 0..n {
            for v in (u + 1)..n {
                let c = self.common_neighbors(u, v);
                let slot = if self.has_edge(u, v) { &mut lambda } else { &mut mu };
                match slot {
                    None => *slot = Some(c),
                    Some(x) if *x == c => {}
                    Some(_) => return None,
                }
            }
        }
        Some(SrgParams {
            v: n,
            k,
            lambda: lambda.unwrap_or(0),
            mu: mu.unwrap_or(0),
        })
    }

    /// Canonical relabeling: isomorphic graphs map to identical graphs.
    ///
    /// Minimizes the adjacency encoding over relabelings consistent with an
    /// iteratively refined vertex-invariant partition. Guaranteed envelope is
    /// order <= 12; larger orders work but may branch heavily. Orders above
    /// 64 are rejected.
    pub fn canonical_form(&self) -> Result<Graph, GraphError> {
        if self.order > 64 {
            return Err(GraphError::CanonicalTooLarge {
                got: self.order,
                max: 64,
            });
        }
        let rows: Vec<u64> = (0..self.order).map(|v| self.row64(v)).collect();
        let perm = canon::canonical_permutation(&rows, self.order);
        Ok(self.relabel(&perm))
    }

    /// Isomorphism at small order via canonical forms.
    pub fn is_isomorphic_to(&self, other: &Graph) -> Result<bool, GraphError> {
        if self.order != other.order || self.size() != other.size() {
            return Ok(false);
        }
        Ok(self.canonical_form()? == other.canonical_form()?)
    }

    /// Applies `perm` as "vertex v moves to position perm[v]".
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.order);
        let mut g = Graph::empty(self.order).expect("order preserved");
        for u in 0..self.order {
            for v in self.neighbors(u) {
                if v > u {
                    g.insert_edge(perm[u], perm[v]).expect("permutation is a bijection");
                }
            }
        }
        g
    }

    /// Single-word adjacency row; only valid for order <= 64.
    pub(crate) fn row64(&self, v: usize) -> u64 {
        debug_assert!(self.order <= 64);
        self.row(v)[0]
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(order={}, edges={:?})", self.order, self.edges())
    }
}

fn mat_mul(
    a: &[Vec<num_bigint::BigUint>],
    b: &[Vec<num_bigint::BigUint>],
) -> Vec<Vec<num_bigint::BigUint>> {
    use num_traits::Zero;
    let n = a.len();
    let mut out = vec![vec![num_bigint::BigUint::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

struct BitIter {
    word: u64,
}

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let b = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(b)
    }
}

/// Degree sequence summary with the power sums used by trace identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub degrees: Vec<usize>,
    /// `2m` by the handshake identity.
    pub sum: usize,
    pub sum_squares: usize,
    pub sum_cubes: usize,
    pub min_deg: usize,
    pub max_deg: usize,
}

impl DegreeStats {
    pub fn nearly_regular(&self) -> bool {
        self.max_deg - self.min_deg <= 1
    }
}

/// Strongly regular graph parameters `(v, k, lambda, mu)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    /// The counting identity `k(k - lambda - 1) = (v - k - 1) mu` every SRG
    /// satisfies.
    pub fn consistent(&self) -> bool {
        self.k * (self.k - self.lambda - 1) == (self.v - self.k - 1) * self.mu
    }
}
