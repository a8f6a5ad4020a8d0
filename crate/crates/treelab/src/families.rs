//! Constructors for the named graph families, their closed-form tree
//! counts, and structural verification for the large triangle-free
//! strongly regular graphs ingested from graph6 fixtures.

use std::path::PathBuf;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, SrgParams};
use crate::io;
use crate::spectral::{self, Spectrum};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FamilyError {
    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("complete graph needs at least 1 vertex")]
    EmptyComplete,
    #[error("complete bipartite parts must both be at least 1")]
    BadBipartite,
    #[error("complete multipartite needs at least 2 parts of size at least 1, got {parts} x {part_size}")]
    BadMultipartite { parts: usize, part_size: usize },
    #[error("moebius ladder needs an even vertex count of at least 6, got {0}")]
    BadLadder(usize),
    #[error("matching of size {matching} does not fit in order {order}")]
    MatchingTooLarge { order: usize, matching: usize },
    #[error("apexed bipartite family needs k > l >= 0, got k={k}, l={l}")]
    BadApexParameters { k: usize, l: usize },
    #[error("doubling needs a connected base graph")]
    DoubledDisconnected,
    #[error("reading {path}: {message}")]
    File { path: String, message: String },
}

/// Cycle C_n: 2-regular, complexity n.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::CycleTooSmall(n));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edges(n, &edges).expect("cycle edges are valid"))
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    Graph::complete(n).map_err(|_| FamilyError::EmptyComplete)
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, FamilyError> {
    if a == 0 || b == 0 {
        return Err(FamilyError::BadBipartite);
    }
    let mut g = Graph::empty(a + b).expect("positive order");
    for i in 0..a {
        for j in 0..b {
            g.insert_edge(i, a + j).expect("fresh edge");
        }
    }
    Ok(g)
}

/// K_{q,...,q} with `parts` parts of size `part_size`: regular of degree
/// q(p-1), Laplacian spectrum {0, (pq-q)^{p(q-1)}, (pq)^{p-1}}.
pub fn complete_multipartite(parts: usize, part_size: usize) -> Result<Graph, FamilyError> {
    if parts < 2 || part_size < 1 {
        return Err(FamilyError::BadMultipartite { parts, part_size });
    }
    let n = parts * part_size;
    let mut g = Graph::empty(n).expect("positive order");
    for u in 0..n {
        for v in (u + 1)..n {
            if u / part_size != v / part_size {
                g.insert_edge(u, v).expect("fresh edge");
            }
        }
    }
    Ok(g)
}

/// Moebius ladder on `vertices` (even, >= 6): the cycle plus all
/// diameters; 3-regular.
pub fn moebius_ladder(vertices: usize) -> Result<Graph, FamilyError> {
    if vertices < 6 || vertices % 2 != 0 {
        return Err(FamilyError::BadLadder(vertices));
    }
    let half = vertices / 2;
    let mut edges: Vec<(usize, usize)> = (0..vertices).map(|i| (i, (i + 1) % vertices)).collect();
    edges.extend((0..half).map(|i| (i, i + half)));
    Ok(Graph::from_edges(vertices, &edges).expect("ladder edges are valid"))
}

/// K_order minus a partial matching on vertices 0-1, 2-3, ...; degrees are
/// order-1 or order-2, so the result is nearly regular.
pub fn complete_minus_matching(order: usize, matching: usize) -> Result<Graph, FamilyError> {
    if matching > order / 2 {
        return Err(FamilyError::MatchingTooLarge { order, matching });
    }
    let mut g = Graph::complete(order).map_err(|_| FamilyError::EmptyComplete)?;
    let mut edges = g.edges();
    edges.retain(|&(u, v)| !(u % 2 == 0 && v == u + 1 && u / 2 < matching));
    g = Graph::from_edges(order, &edges).expect("subset of valid edges");
    Ok(g)
}

/// Petersen graph as the Kneser graph K(5,2): 2-subsets of a 5-set,
/// adjacent when disjoint. SRG(10,3,0,1).
pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| ((a + 1)..5).map(move |b| (a, b)))
        .collect();
    let mut g = Graph::empty(10).expect("positive order");
    for i in 0..10 {
        for j in (i + 1)..10 {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            if a != c && a != d && b != c && b != d {
                g.insert_edge(i, j).expect("fresh edge");
            }
        }
    }
    g
}

/// Clebsch graph as the folded 5-cube: 4-bit strings, adjacent at Hamming
/// distance 1 or 4. SRG(16,5,0,2).
pub fn clebsch() -> Graph {
    let mut g = Graph::empty(16).expect("positive order");
    for u in 0..16usize {
        for v in (u + 1)..16 {
            let d = (u ^ v).count_ones();
            if d == 1 || d == 4 {
                g.insert_edge(u, v).expect("fresh edge");
            }
        }
    }
    g
}

/// Hoffman-Singleton graph from five pentagons and five pentagrams:
/// pentagon h joins j to j+-1, pentagram i joins j to j+-2, and pentagon
/// vertex (h, j) meets pentagram vertex (i, h*i + j mod 5). SRG(50,7,0,1).
pub fn hoffman_singleton() -> Graph {
    let p = |h: usize, j: usize| h * 5 + j;
    let q = |i: usize, j: usize| 25 + i * 5 + j;
    let mut g = Graph::empty(50).expect("positive order");
    for h in 0..5 {
        for j in 0..5 {
            g.insert_edge(p(h, j), p(h, (j + 1) % 5)).expect("pentagon edge");
            g.insert_edge(q(h, j), q(h, (j + 2) % 5)).expect("pentagram edge");
        }
    }
    for h in 0..5 {
        for i in 0..5 {
            for j in 0..5 {
                g.insert_edge(p(h, j), q(i, (h * i + j) % 5)).expect("cross edge");
            }
        }
    }
    g
}

/// The 3x3 rook's graph (line graph of K_{3,3}): SRG(9,4,1,2) with
/// Laplacian spectrum {0, 3^4, 6^4} and 11664 spanning trees.
pub fn rook_3x3() -> Graph {
    let mut g = Graph::empty(9).expect("positive order");
    for u in 0..9 {
        for v in (u + 1)..9 {
            if u / 3 == v / 3 || u % 3 == v % 3 {
                g.insert_edge(u, v).expect("fresh edge");
            }
        }
    }
    g
}

/// K_{4,4} (parts {0..3}, {4..7}) plus the two extra edges 0-1 and 2-3,
/// both inside the first part.
pub fn k44_plus_inner_pair() -> Graph {
    let mut g = complete_bipartite(4, 4).expect("valid parts");
    g.insert_edge(0, 1).expect("fresh edge");
    g.insert_edge(2, 3).expect("fresh edge");
    g
}

/// K_{4,4} plus edges 0-1 and 4-5, one in each part. Cospectral with
/// [`k44_plus_inner_pair`] but not isomorphic to it.
pub fn k44_plus_split_pair() -> Graph {
    let mut g = complete_bipartite(4, 4).expect("valid parts");
    g.insert_edge(0, 1).expect("fresh edge");
    g.insert_edge(4, 5).expect("fresh edge");
    g
}

/// Regular graph of degree 2k on 4k+2l+1 vertices with exactly k(k-l-1)
/// triangles: a complete bipartite graph with two cyclic factors removed
/// and an apex vertex joined to the first k vertices of each part.
///
/// The removed factors are fixed cyclic shifts, so the construction is
/// deterministic; any factor choice satisfies the degree and triangle
/// claims.
pub fn apexed_bipartite(k: usize, l: usize) -> Result<Graph, FamilyError> {
    if k <= l {
        return Err(FamilyError::BadApexParameters { k, l });
    }
    let side = 2 * k + l;
    let order = 2 * side + 1;
    let x = |i: usize| i;
    let y = |j: usize| side + j;
    let z = order - 1;
    let mut g = Graph::empty(order).expect("positive order");
    for i in 0..side {
        for j in 0..side {
            g.insert_edge(x(i), y(j)).expect("fresh edge");
        }
    }
    let mut remove = Vec::new();
    // an (l+1)-factor of the K_{k,k} on the first k of each side
    for i in 0..k {
        for j in 0..=l {
            remove.push((x(i), y((i + j) % k)));
        }
    }
    // an l-factor of the K_{k+l,k+l} on the remaining vertices
    for i in 0..(k + l) {
        for j in 0..l {
            remove.push((x(k + i), y(k + (i + j) % (k + l))));
        }
    }
    let mut edges = g.edges();
    edges.retain(|&(u, v)| !remove.contains(&(u, v)) && !remove.contains(&(v, u)));
    for i in 0..k {
        edges.push((x(i), z));
        edges.push((y(i), z));
    }
    Ok(Graph::from_edges(order, &edges).expect("deduplicated edges"))
}

/// Two disjoint copies of `h` joined by the identity perfect matching.
/// Doubles the order, adds order(h) edges, and raises regular degree by 1.
pub fn doubled(h: &Graph) -> Result<Graph, FamilyError> {
    if !h.is_connected() {
        return Err(FamilyError::DoubledDisconnected);
    }
    let v = h.order();
    let mut edges = Vec::with_capacity(2 * h.size() + v);
    for (a, b) in h.edges() {
        edges.push((a, b));
        edges.push((v + a, v + b));
    }
    for i in 0..v {
        edges.push((i, v + i));
    }
    Ok(Graph::from_edges(2 * v, &edges).expect("disjoint copies"))
}

/// t(C_n) = n.
pub fn cycle_tree_count(n: usize) -> BigUint {
    BigUint::from(n)
}

/// Cayley: t(K_n) = n^(n-2).
pub fn complete_tree_count(n: usize) -> BigUint {
    if n <= 1 {
        return BigUint::one();
    }
    BigUint::from(n).pow(n as u32 - 2)
}

/// t(K_{a,b}) = a^(b-1) * b^(a-1).
pub fn complete_bipartite_tree_count(a: usize, b: usize) -> BigUint {
    BigUint::from(a).pow(b as u32 - 1) * BigUint::from(b).pow(a as u32 - 1)
}

/// t(K_{q,...,q}) with p parts: (pq)^(p-2) * (pq-q)^(p(q-1)), the Kirchhoff
/// product of the spectrum {0, (pq-q)^(p(q-1)), (pq)^(p-1)}.
pub fn complete_multipartite_tree_count(parts: usize, part_size: usize) -> BigUint {
    let pq = parts * part_size;
    BigUint::from(pq).pow(parts as u32 - 2)
        * BigUint::from(pq - part_size).pow((parts * (part_size - 1)) as u32)
}

/// t(M_2n) = (n/2) * [(2+sqrt3)^n + (2-sqrt3)^n + 2], evaluated exactly via
/// the integer recurrence u_{j+1} = 4 u_j - u_{j-1}, u_0 = 2, u_1 = 4 for
/// the conjugate power sum.
pub fn moebius_ladder_tree_count(vertices: usize) -> Result<BigUint, FamilyError> {
    if vertices < 6 || vertices % 2 != 0 {
        return Err(FamilyError::BadLadder(vertices));
    }
    let half = vertices / 2;
    let mut prev = BigUint::from(2u32);
    let mut cur = BigUint::from(4u32);
    for _ in 1..half {
        let next = BigUint::from(4u32) * &cur - &prev;
        prev = cur;
        cur = next;
    }
    // t = half * (u + 2) / 2; u is always even, so this stays integral
    let doubled_count = BigUint::from(half) * (cur + BigUint::from(2u32));
    Ok(doubled_count / BigUint::from(2u32))
}

/// A buildable family description, the CLI- and report-facing counterpart
/// of the constructors above.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Family {
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    CompleteMultipartite { parts: usize, part_size: usize },
    MoebiusLadder { vertices: usize },
    CompleteMinusMatching { order: usize, matching: usize },
    Petersen,
    Clebsch,
    HoffmanSingleton,
    Rook3x3,
    ApexedBipartite { k: usize, l: usize },
    Doubled { base: Box<Family> },
    FromFile { path: PathBuf },
}

impl Family {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match self {
            Family::Cycle { n } => cycle(*n),
            Family::Complete { n } => complete(*n),
            Family::CompleteBipartite { a, b } => complete_bipartite(*a, *b),
            Family::CompleteMultipartite { parts, part_size } => {
                complete_multipartite(*parts, *part_size)
            }
            Family::MoebiusLadder { vertices } => moebius_ladder(*vertices),
            Family::CompleteMinusMatching { order, matching } => {
                complete_minus_matching(*order, *matching)
            }
            Family::Petersen => Ok(petersen()),
            Family::Clebsch => Ok(clebsch()),
            Family::HoffmanSingleton => Ok(hoffman_singleton()),
            Family::Rook3x3 => Ok(rook_3x3()),
            Family::ApexedBipartite { k, l } => apexed_bipartite(*k, *l),
            Family::Doubled { base } => doubled(&base.build()?),
            Family::FromFile { path } => {
                let raw = std::fs::read(path).map_err(|e| FamilyError::File {
                    path: path.display().to_string(),
                    message: e.to_string(),
                })?;
                if path.extension().is_some_and(|e| e == "g6") {
                    io::parse_graph6(&raw).map_err(|e| FamilyError::File {
                        path: path.display().to_string(),
                        message: e.to_string(),
                    })
                } else {
                    let text = String::from_utf8(raw).map_err(|e| FamilyError::File {
                        path: path.display().to_string(),
                        message: e.to_string(),
                    })?;
                    io::parse_edge_list(&text).map_err(|e| FamilyError::File {
                        path: path.display().to_string(),
                        message: e.to_string(),
                    })
                }
            }
        }
    }

    /// Closed-form tree count where the family has one.
    pub fn tree_count_closed_form(&self) -> Option<BigUint> {
        match self {
            Family::Cycle { n } => Some(cycle_tree_count(*n)),
            Family::Complete { n } => Some(complete_tree_count(*n)),
            Family::CompleteBipartite { a, b } => Some(complete_bipartite_tree_count(*a, *b)),
            Family::CompleteMultipartite { parts, part_size } => {
                Some(complete_multipartite_tree_count(*parts, *part_size))
            }
            Family::MoebiusLadder { vertices } => moebius_ladder_tree_count(*vertices).ok(),
            _ => None,
        }
    }

    pub fn label(&self) -> String {
        match self {
            Family::Cycle { n } => format!("cycle({n})"),
            Family::Complete { n } => format!("complete({n})"),
            Family::CompleteBipartite { a, b } => format!("completeBipartite({a},{b})"),
            Family::CompleteMultipartite { parts, part_size } => {
                format!("completeMultipartite({parts}x{part_size})")
            }
            Family::MoebiusLadder { vertices } => format!("moebiusLadder({vertices})"),
            Family::CompleteMinusMatching { order, matching } => {
                format!("completeMinusMatching({order},{matching})")
            }
            Family::Petersen => "petersen".into(),
            Family::Clebsch => "clebsch".into(),
            Family::HoffmanSingleton => "hoffmanSingleton".into(),
            Family::Rook3x3 => "rook3x3".into(),
            Family::ApexedBipartite { k, l } => format!("apexedBipartite({k},{l})"),
            Family::Doubled { base } => format!("doubled({})", base.label()),
            Family::FromFile { path } => format!("file({})", path.display()),
        }
    }
}

/// Structural verification report for a claimed triangle-free strongly
/// regular graph. Mismatches are reported, not raised.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SrgVerification {
    pub expected: SrgParams,
    pub observed: Option<SrgParams>,
    pub triangle_count: u64,
    /// (value, multiplicity, snapped) for each Laplacian cluster.
    pub spectrum_clusters: Vec<(f64, usize, bool)>,
    /// Exact count from integer elimination, decimal string.
    pub tree_count_exact: String,
    /// Exact count from the snapped integer spectrum, when available.
    pub tree_count_spectral: Option<String>,
    pub passed: bool,
    pub mismatches: Vec<String>,
}

/// Checks SRG parameters, triangle-freeness, spectrum shape, and the exact
/// agreement of both tree-count routes.
pub fn verify_triangle_free_srg(g: &Graph, expected: SrgParams) -> SrgVerification {
    let mut mismatches = Vec::new();
    let observed = g.srg_params();
    if observed != Some(expected) {
        mismatches.push(format!(
            "srg parameters: expected {:?}, observed {:?}",
            expected, observed
        ));
    }
    let triangle_count = g.triangle_count();
    if expected.lambda == 0 && triangle_count != 0 {
        mismatches.push(format!("expected triangle-free, found {triangle_count} triangles"));
    }
    let spectrum = spectral::eigenvalues(g, 1e-10).expect("symmetric eigensolver converges");
    let clusters: Vec<(f64, usize, bool)> = spectrum
        .clusters
        .iter()
        .map(|c| (c.value, c.multiplicity, c.snapped))
        .collect();
    if spectrum.nonzero_clusters().len() != 2 {
        mismatches.push(format!(
            "expected two distinct nonzero Laplacian eigenvalues, found {}",
            spectrum.nonzero_clusters().len()
        ));
    }
    let exact = spectral::tree_count_exact(g);
    let spectral_count = snapped_spectrum_tree_count(&spectrum, g.order());
    match &spectral_count {
        Some(t) if *t == exact => {}
        Some(t) => mismatches.push(format!(
            "tree-count routes disagree: elimination {exact}, spectrum {t}"
        )),
        None => mismatches.push("spectrum did not snap to integers".into()),
    }
    SrgVerification {
        expected,
        observed,
        triangle_count,
        spectrum_clusters: clusters,
        tree_count_exact: exact.to_string(),
        tree_count_spectral: spectral_count.map(|t| t.to_string()),
        passed: mismatches.is_empty(),
        mismatches,
    }
}

/// Exact Kirchhoff product from a fully integer-snapped spectrum.
pub fn snapped_spectrum_tree_count(sp: &Spectrum, order: usize) -> Option<BigUint> {
    let mut product = BigUint::one();
    for c in sp.nonzero_clusters() {
        if !c.snapped || c.value < 1.0 {
            return None;
        }
        product *= BigUint::from(c.value as u64).pow(c.multiplicity as u32);
    }
    let order = BigUint::from(order);
    if (&product % &order).is_zero() {
        Some(product / order)
    } else {
        None
    }
}
