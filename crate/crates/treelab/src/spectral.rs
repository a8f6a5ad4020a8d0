//! Laplacian spectra and exact spanning-tree counting.
//!
//! Two routes to the complexity t(G) are kept deliberately independent:
//! fraction-free integer elimination on a Laplacian minor (authoritative,
//! exact) and the eigenvalue product from a floating-point symmetric
//! eigensolver (advisory). Tests hold the two against each other.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("eigensolver did not reach the residual target in {sweeps} sweeps")]
    ConvergenceFailure { sweeps: usize },
    #[error("spectrum is degenerate: eigenvalue {value} at index {index} is within tolerance of zero")]
    DegenerateSpectrum { index: usize, value: f64 },
    #[error("moment system unsolvable: n*s = {ns} is below r^2 = {r_squared}")]
    MomentDomain { ns: i128, r_squared: i128 },
    #[error("multiplicity {n1} outside 1..={max}")]
    MultiplicityRange { n1: usize, max: usize },
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
}

/// Laplacian L = D - A as a dense integer matrix.
pub fn laplacian(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.order();
    let mut m = vec![vec![0i64; n]; n];
    for u in 0..n {
        m[u][u] = g.degree(u) as i64;
        for v in g.neighbors(u) {
            m[u][v] = -1;
        }
    }
    m
}

/// Exact spanning-tree count via fraction-free elimination on the principal
/// minor that deletes the last row and column. Disconnected graphs count 0.
pub fn tree_count_exact(g: &Graph) -> BigUint {
    tree_count_via_minor(g, g.order() - 1)
}

/// Same determinant computed after deleting row/column `delete` instead;
/// the result is independent of the choice.
pub fn tree_count_via_minor(g: &Graph, delete: usize) -> BigUint {
    let n = g.order();
    if n == 1 {
        return BigUint::one();
    }
    let lap = laplacian(g);
    let keep: Vec<usize> = (0..n).filter(|&i| i != delete).collect();
    let det = if n <= 16 {
        let mut m: Vec<Vec<i128>> = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| lap[i][j] as i128).collect())
            .collect();
        BigInt::from(bareiss_det_i128(&mut m))
    } else {
        let m: Vec<Vec<BigInt>> = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| BigInt::from(lap[i][j])).collect())
            .collect();
        bareiss_det_bigint(m)
    };
    debug_assert!(!det.is_negative(), "Laplacian minors are positive semidefinite");
    det.to_biguint().unwrap_or_default()
}

/// Fraction-free Bareiss determinant over i128. Exact for the Laplacian
/// minors this crate feeds it (order <= 16 keeps every intermediate product
/// well inside the i128 range).
pub(crate) fn bareiss_det_i128(m: &mut [Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, r);
            sign = -sign;
        }
        let pivot = m[k][k];
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = pivot;
    }
    sign * m[n - 1][n - 1]
}

/// Bareiss over arbitrary-precision integers; the exact division at each
/// step is guaranteed by the fraction-free recurrence.
pub(crate) fn bareiss_det_bigint(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, r);
            sign = -sign;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &pivot - &m[i][k] * &m[k][j];
                debug_assert!((&num % &prev).is_zero());
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = pivot;
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Exact integer trace of L^r via repeated big-integer multiplication;
/// never computed through the floating-point spectrum.
pub fn trace_power(g: &Graph, r: usize) -> BigInt {
    let n = g.order();
    if r == 0 {
        return BigInt::from(n);
    }
    let lap: Vec<Vec<BigInt>> = laplacian(g)
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    let mut power = lap.clone();
    for _ in 1..r {
        power = bigint_mat_mul(&power, &lap);
    }
    (0..n).map(|i| power[i][i].clone()).sum()
}

fn bigint_mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
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

/// The trace-cube identity Tr(L^3) = sum d^3 + 3 sum d^2 - 6 * triangles,
/// checked exactly; a cross-oracle between walks, degrees, and traces.
pub fn trace_cube_identity_holds(g: &Graph) -> bool {
    let stats = g.degree_stats();
    let rhs = BigInt::from(stats.sum_cubes) + BigInt::from(3 * stats.sum_squares)
        - BigInt::from(6 * g.triangle_count());
    trace_power(g, 3) == rhs
}

/// Sorted Laplacian eigenvalues with multiplicity clustering.
#[derive(Debug, Clone, Serialize)]
pub struct Spectrum {
    /// Ascending eigenvalues, one per vertex.
    pub values: Vec<f64>,
    pub clusters: Vec<EigenCluster>,
    /// Residual tolerance the spectrum was computed with.
    pub tol: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct EigenCluster {
    pub value: f64,
    pub multiplicity: usize,
    /// Set when the cluster mean was within 1e-6 of an integer and replaced
    /// by it.
    pub snapped: bool,
}

const CLUSTER_GAP_PER_VERTEX: f64 = 1e-6;
const SNAP_TOL: f64 = 1e-6;

impl Spectrum {
    /// Clusters a raw eigenvalue list. Values are sorted ascending; a new
    /// cluster starts wherever the gap exceeds 1e-6 * order.
    pub fn from_values(mut values: Vec<f64>, tol: f64) -> Spectrum {
        values.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
        let gap = CLUSTER_GAP_PER_VERTEX * values.len() as f64;
        let mut clusters = Vec::new();
        let mut start = 0;
        for i in 1..=values.len() {
            if i == values.len() || values[i] - values[i - 1] > gap {
                let slice = &values[start..i];
                let mean = slice.iter().sum::<f64>() / slice.len() as f64;
                let snapped = (mean - mean.round()).abs() <= SNAP_TOL;
                clusters.push(EigenCluster {
                    // the + 0.0 clears the sign off a snapped -0.0
                    value: if snapped { mean.round() + 0.0 } else { mean },
                    multiplicity: slice.len(),
                    snapped,
                });
                start = i;
            }
        }
        Spectrum { values, clusters, tol }
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// Clusters with value above the zero threshold.
    pub fn nonzero_clusters(&self) -> Vec<&EigenCluster> {
        self.clusters.iter().filter(|c| c.value > 1e-6).collect()
    }
}

/// Full symmetric eigendecomposition of the Laplacian by cyclic Jacobi
/// rotations. All eigenvalues, ascending; off-diagonal mass is driven below
/// `tol * ||L||_F`.
pub fn eigenvalues(g: &Graph, tol: f64) -> Result<Spectrum, SpectralError> {
    if tol <= 0.0 {
        return Err(SpectralError::BadTolerance(tol));
    }
    let lap = laplacian(g);
    let n = g.order();
    let mut a: Vec<Vec<f64>> = lap
        .iter()
        .map(|row| row.iter().map(|&x| x as f64).collect())
        .collect();
    let fro: f64 = a
        .iter()
        .flat_map(|row| row.iter())
        .map(|x| x * x)
        .sum::<f64>()
        .sqrt();
    if fro == 0.0 {
        return Ok(Spectrum::from_values(vec![0.0; n], tol));
    }
    let target = tol * fro;
    const MAX_SWEEPS: usize = 100;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = {
            let mut s = 0.0;
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        s += a[i][j] * a[i][j];
                    }
                }
            }
            s.sqrt()
        };
        if off <= target {
            let values: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
            return Ok(Spectrum::from_values(values, tol));
        }
        for p in 0..n {
            for q in p + 1..n {
                jacobi_rotate(&mut a, p, q);
            }
        }
    }
    Err(SpectralError::ConvergenceFailure { sweeps: MAX_SWEEPS })
}

fn jacobi_rotate(a: &mut [Vec<f64>], p: usize, q: usize) {
    let apq = a[p][q];
    if apq == 0.0 {
        return;
    }
    let n = a.len();
    let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        1.0 / (2.0 * theta)
    } else {
        let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
        sign / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let app = a[p][p];
    let aqq = a[q][q];
    a[p][p] = app - t * apq;
    a[q][q] = aqq + t * apq;
    a[p][q] = 0.0;
    a[q][p] = 0.0;
    for i in 0..n {
        if i == p || i == q {
            continue;
        }
        let aip = a[i][p];
        let aiq = a[i][q];
        a[i][p] = c * aip - s * aiq;
        a[p][i] = a[i][p];
        a[i][q] = s * aip + c * aiq;
        a[q][i] = a[i][q];
    }
}

/// Kirchhoff product along the spectral route: product of the nonzero
/// eigenvalues divided by the order.
pub fn tree_count_from_spectrum(sp: &Spectrum) -> Result<f64, SpectralError> {
    let order = sp.order();
    let zero_tol = sp.tol.max(1e-9) * order as f64;
    let mut product = 1.0f64;
    for (i, &x) in sp.values.iter().enumerate().skip(1) {
        if x <= zero_tol {
            return Err(SpectralError::DegenerateSpectrum { index: i, value: x });
        }
        product *= x;
    }
    Ok(product / order as f64)
}

/// The moment data of a connected graph whose Laplacian has exactly two
/// distinct nonzero eigenvalues x1 > x2 with multiplicities n1 and n - n1.
#[derive(Debug, Clone, Serialize)]
pub struct TwoEigenvalueModel {
    /// order - 1
    pub n: usize,
    /// Tr L = 2m
    pub r: i64,
    /// Tr L^2
    pub s: i64,
    /// sqrt(n*s - r^2)
    pub z: f64,
    /// multiplicity of the larger eigenvalue
    pub n1: usize,
    pub x1: f64,
    pub x2: f64,
}

/// Detects the two-nonzero-eigenvalue structure from a clustered spectrum.
/// Returns `None` unless the nonzero values form exactly two clusters that
/// reproduce the moment solution to 1e-9.
pub fn detect_two_eigenvalue(sp: &Spectrum) -> Option<TwoEigenvalueModel> {
    let nonzero = sp.nonzero_clusters();
    if nonzero.len() != 2 {
        return None;
    }
    let order = sp.order();
    let n = order - 1;
    let (lo, hi) = (nonzero[0], nonzero[1]);
    let (x1, n1) = (hi.value, hi.multiplicity);
    let x2 = lo.value;
    let r_f: f64 = sp.values.iter().sum();
    let s_f: f64 = sp.values.iter().map(|x| x * x).sum();
    let r = r_f.round() as i64;
    let s = s_f.round() as i64;
    let z2 = n as i64 * s - r * r;
    if z2 < 0 {
        return None;
    }
    let z = (z2 as f64).sqrt();
    let (rx1, rx2) = solve_two_eigenvalues(n, r, s, n1).ok()?;
    if (rx1 - x1).abs() > 1e-9 * x1.abs().max(1.0) || (rx2 - x2).abs() > 1e-9 * x2.abs().max(1.0) {
        return None;
    }
    Some(TwoEigenvalueModel { n, r, s, z, n1, x1, x2 })
}

/// Solves the two-moment system n1*x1 + (n-n1)*x2 = r,
/// n1*x1^2 + (n-n1)*x2^2 = s for the split with the larger value carrying
/// multiplicity n1:
///
/// x1 = r/n + (z/n) sqrt((n-n1)/n1),  x2 = r/n - (z/n) sqrt(n1/(n-n1)),
/// with z = sqrt(n*s - r^2).
pub fn solve_two_eigenvalues(
    n: usize,
    r: i64,
    s: i64,
    n1: usize,
) -> Result<(f64, f64), SpectralError> {
    if n1 == 0 || n1 >= n {
        return Err(SpectralError::MultiplicityRange { n1, max: n - 1 });
    }
    let ns = n as i128 * s as i128;
    let r_squared = (r as i128) * (r as i128);
    if ns < r_squared {
        return Err(SpectralError::MomentDomain { ns, r_squared });
    }
    let z = ((ns - r_squared) as f64).sqrt();
    let n_f = n as f64;
    let n1_f = n1 as f64;
    let base = r as f64 / n_f;
    let x1 = base + z / n_f * ((n_f - n1_f) / n1_f).sqrt();
    let x2 = base - z / n_f * (n1_f / (n_f - n1_f)).sqrt();
    Ok((x1, x2))
}

/// Spectrum of the complement: each nonzero eigenvalue x maps to
/// `order - x`; the zero eigenvalue stays.
pub fn complement_spectrum(sp: &Spectrum, order: usize) -> Spectrum {
    let zero_tol = sp.tol.max(1e-9) * order as f64;
    let values: Vec<f64> = sp
        .values
        .iter()
        .map(|&x| if x <= zero_tol { 0.0 } else { order as f64 - x })
        .collect();
    Spectrum::from_values(values, sp.tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::Graph;
    use crate::testkit::{
        random_connected, random_graph, spanning_trees_brute, NINE_VERTEX_CHAMPION,
    };
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn laplacian_shape() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(laplacian(&k2), vec![vec![1, -1], vec![-1, 1]]);
        let c3 = families::cycle(3).unwrap();
        let lap = laplacian(&c3);
        assert_eq!((lap[0][0], lap[1][1], lap[2][2]), (2, 2, 2));
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..100 {
            let order = rng.random_range(2..=10);
            let g = random_graph(&mut rng, order, 0.5);
            let tr: i64 = laplacian(&g).iter().enumerate().map(|(i, row)| row[i]).sum();
            assert_eq!(tr, 2 * g.size() as i64);
        }
    }

    #[test]
    fn tree_count_paper_values() {
        assert_eq!(tree_count_exact(&families::cycle(5).unwrap()), 5u32.into());
        let rook = families::rook_3x3();
        assert_eq!(tree_count_exact(&rook), 11664u32.into());
        let champ = crate::io::parse_edge_list(NINE_VERTEX_CHAMPION).unwrap();
        assert_eq!(tree_count_exact(&champ), 12480u32.into());
        for g in [families::k44_plus_inner_pair(), families::k44_plus_split_pair()] {
            assert_eq!(tree_count_exact(&g), 9216u32.into());
        }
    }

    #[test]
    fn tree_count_matches_brute_enumeration() {
        // exact-elimination route vs direct subset enumeration
        let rook = families::rook_3x3();
        assert_eq!(spanning_trees_brute(&rook), 11664);
        let champ = crate::io::parse_edge_list(NINE_VERTEX_CHAMPION).unwrap();
        assert_eq!(spanning_trees_brute(&champ), 12480);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let order = rng.random_range(2..=7);
            let g = random_graph(&mut rng, order, 0.5);
            let exact = tree_count_exact(&g);
            assert_eq!(exact, spanning_trees_brute(&g).into());
        }
    }

    #[test]
    fn tree_count_minor_choice_is_irrelevant() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..50 {
            let order = rng.random_range(2..=8);
            let g = random_graph(&mut rng, order, 0.5);
            let reference = tree_count_exact(&g);
            for i in 0..order {
                assert_eq!(tree_count_via_minor(&g, i), reference);
            }
        }
    }

    #[test]
    fn disconnected_graph_counts_zero() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(tree_count_exact(&g), 0u32.into());
    }

    #[test]
    fn bigint_and_i128_elimination_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..40 {
            let order = rng.random_range(2..=10);
            let g = random_connected(&mut rng, order, 0.5);
            let lap = laplacian(&g);
            let keep: Vec<usize> = (0..order - 1).collect();
            let mut small: Vec<Vec<i128>> = keep
                .iter()
                .map(|&i| keep.iter().map(|&j| lap[i][j] as i128).collect())
                .collect();
            let big: Vec<Vec<BigInt>> = keep
                .iter()
                .map(|&i| keep.iter().map(|&j| BigInt::from(lap[i][j])).collect())
                .collect();
            assert_eq!(
                BigInt::from(bareiss_det_i128(&mut small)),
                bareiss_det_bigint(big)
            );
        }
    }

    #[test]
    fn cycle_spectra_match_closed_form() {
        let sp = eigenvalues(&families::cycle(4).unwrap(), 1e-10).unwrap();
        let expect = [0.0, 2.0, 2.0, 4.0];
        for (a, b) in sp.values.iter().zip(expect) {
            assert!((a - b).abs() < 1e-9, "{a} vs {b}");
        }
        for n in 3..=20 {
            let sp = eigenvalues(&families::cycle(n).unwrap(), 1e-10).unwrap();
            let x1 = 2.0 - 2.0 * (2.0 * std::f64::consts::PI / n as f64).cos();
            assert!((sp.values[1] - x1).abs() < 1e-9, "n={n}");
        }
    }

    #[test]
    fn multipartite_spectrum_multiplicities() {
        // K_{q,...,q} with p parts: eigenvalue pq has multiplicity p - 1 and
        // eigenvalue pq - q has multiplicity p(q - 1). (K_{3,3} pins the
        // assignment: its spectrum is {0, 3, 3, 3, 3, 6}.)
        for p in 2..=4usize {
            for q in 1..=4usize {
                let g = families::complete_multipartite(p, q).unwrap();
                let sp = eigenvalues(&g, 1e-10).unwrap();
                let nz = sp.nonzero_clusters();
                if q == 1 {
                    assert_eq!(nz.len(), 1, "K_p has one nonzero eigenvalue");
                    assert_eq!(nz[0].value, (p * q) as f64);
                    assert_eq!(nz[0].multiplicity, p - 1);
                } else {
                    assert_eq!(nz.len(), 2, "p={p} q={q}");
                    assert_eq!(nz[0].value, (p * q - q) as f64);
                    assert_eq!(nz[0].multiplicity, p * (q - 1));
                    assert_eq!(nz[1].value, (p * q) as f64);
                    assert_eq!(nz[1].multiplicity, p - 1);
                    assert!(nz[0].snapped && nz[1].snapped);
                }
            }
        }
    }

    #[test]
    fn spectral_route_tracks_exact_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..200 {
            let order = rng.random_range(2..=9);
            let g = random_connected(&mut rng, order, 0.5);
            let exact = tree_count_exact(&g);
            let via_spectrum =
                tree_count_from_spectrum(&eigenvalues(&g, 1e-10).unwrap()).unwrap();
            let exact_f = exact.to_string().parse::<f64>().unwrap();
            assert!(
                (via_spectrum - exact_f).abs() <= 1e-6 * exact_f.max(1.0),
                "{via_spectrum} vs {exact_f}"
            );
        }
    }

    #[test]
    fn spectrum_from_known_clusters_reproduces_counts() {
        let sp = Spectrum::from_values(vec![0.0, 4.0, 4.0, 4.0], 1e-10);
        assert!((tree_count_from_spectrum(&sp).unwrap() - 16.0).abs() < 1e-9);
        let rook = Spectrum::from_values(
            vec![0.0, 3.0, 3.0, 3.0, 3.0, 6.0, 6.0, 6.0, 6.0],
            1e-10,
        );
        assert!((tree_count_from_spectrum(&rook).unwrap() - 11664.0).abs() < 1e-6);
        let pair = Spectrum::from_values(vec![0.0, 8.0, 6.0, 6.0, 4.0, 4.0, 4.0, 4.0], 1e-10);
        assert!((tree_count_from_spectrum(&pair).unwrap() - 9216.0).abs() < 1e-6);
    }

    #[test]
    fn degenerate_spectrum_is_signaled() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let sp = eigenvalues(&g, 1e-10).unwrap();
        assert!(matches!(
            tree_count_from_spectrum(&sp),
            Err(SpectralError::DegenerateSpectrum { .. })
        ));
    }

    #[test]
    fn trace_powers_match_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        for _ in 0..80 {
            let order = rng.random_range(2..=8);
            let g = random_graph(&mut rng, order, 0.5);
            let stats = g.degree_stats();
            assert_eq!(trace_power(&g, 1), BigInt::from(2 * g.size()));
            assert_eq!(
                trace_power(&g, 2),
                BigInt::from(stats.sum_squares + 2 * g.size())
            );
        }
        assert_eq!(trace_power(&families::cycle(3).unwrap(), 3), BigInt::from(54));
    }

    #[test]
    fn trace_powers_match_float_spectrum() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        for _ in 0..50 {
            let order = rng.random_range(2..=12);
            let g = random_graph(&mut rng, order, 0.4);
            let sp = eigenvalues(&g, 1e-10).unwrap();
            for r in 1..=6usize {
                let exact: f64 = trace_power(&g, r).to_string().parse().unwrap();
                let float: f64 = sp.values.iter().map(|x| x.powi(r as i32)).sum();
                assert!(
                    (exact - float).abs() <= 1e-6 * exact.abs().max(1.0),
                    "r={r} exact={exact} float={float}"
                );
            }
        }
    }

    #[test]
    fn trace_cube_identity() {
        assert!(trace_cube_identity_holds(&families::cycle(3).unwrap()));
        let c5 = families::cycle(5).unwrap();
        assert_eq!(trace_power(&c5, 3), BigInt::from(100));
        assert!(trace_cube_identity_holds(&c5));
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..500 {
            let order = rng.random_range(2..=10);
            let g = random_graph(&mut rng, order, 0.5);
            assert!(trace_cube_identity_holds(&g));
        }
    }

    #[test]
    fn two_eigenvalue_detection() {
        let rook = families::rook_3x3();
        let model = detect_two_eigenvalue(&eigenvalues(&rook, 1e-10).unwrap()).unwrap();
        assert_eq!((model.n, model.r, model.s, model.n1), (8, 36, 180, 4));
        assert!((model.z - 12.0).abs() < 1e-9);
        assert!((model.x1 - 6.0).abs() < 1e-9);
        assert!((model.x2 - 3.0).abs() < 1e-9);

        let champ = crate::io::parse_edge_list(NINE_VERTEX_CHAMPION).unwrap();
        assert!(detect_two_eigenvalue(&eigenvalues(&champ, 1e-10).unwrap()).is_none());

        let k5 = Graph::complete(5).unwrap();
        assert!(detect_two_eigenvalue(&eigenvalues(&k5, 1e-10).unwrap()).is_none());
    }

    #[test]
    fn moment_solver_known_points() {
        let (x1, x2) = solve_two_eigenvalues(8, 36, 180, 4).unwrap();
        assert!((x1 - 6.0).abs() < 1e-12 && (x2 - 3.0).abs() < 1e-12);
        // Petersen: spectrum {0, 2^5, 5^4}
        let (x1, x2) = solve_two_eigenvalues(9, 30, 120, 4).unwrap();
        assert!((x1 - 5.0).abs() < 1e-12 && (x2 - 2.0).abs() < 1e-12);
        // z = 0 collapses both roots to r/n
        let (x1, x2) = solve_two_eigenvalues(4, 8, 16, 2).unwrap();
        assert!((x1 - 2.0).abs() < 1e-12 && (x2 - 2.0).abs() < 1e-12);
        assert!(matches!(
            solve_two_eigenvalues(4, 9, 16, 2),
            Err(SpectralError::MomentDomain { .. })
        ));
        assert!(matches!(
            solve_two_eigenvalues(4, 8, 16, 4),
            Err(SpectralError::MultiplicityRange { .. })
        ));
    }

    #[test]
    fn moment_constraints_reproduced() {
        let mut rng = ChaCha8Rng::seed_from_u64(18);
        for _ in 0..200 {
            let n = rng.random_range(2..=40usize);
            let n1 = rng.random_range(1..n);
            let r = rng.random_range(1..200i64);
            let min_s = (r * r + n as i64 - 1) / n as i64;
            let s = min_s + rng.random_range(0..100i64);
            let Ok((x1, x2)) = solve_two_eigenvalues(n, r, s, n1) else {
                continue;
            };
            let m1 = n1 as f64 * x1 + (n - n1) as f64 * x2;
            let m2 = n1 as f64 * x1 * x1 + (n - n1) as f64 * x2 * x2;
            assert!((m1 - r as f64).abs() <= 1e-9 * (r as f64).abs().max(1.0));
            assert!((m2 - s as f64).abs() <= 1e-9 * (s as f64).abs().max(1.0));
        }
    }

    #[test]
    fn complement_spectrum_matches_direct() {
        let c5 = families::cycle(5).unwrap();
        let sp = eigenvalues(&c5, 1e-10).unwrap();
        let comp = complement_spectrum(&sp, 5);
        for (a, b) in comp.values.iter().zip(sp.values.iter()) {
            assert!((a - b).abs() < 1e-8, "self-complementary pentagon");
        }

        let pet = families::petersen();
        let comp = complement_spectrum(&eigenvalues(&pet, 1e-10).unwrap(), 10);
        let expect = [0.0, 5.0, 5.0, 5.0, 5.0, 8.0, 8.0, 8.0, 8.0, 8.0];
        for (a, b) in comp.values.iter().zip(expect) {
            assert!((a - b).abs() < 1e-8);
        }
        let direct = eigenvalues(&pet.complement(), 1e-10).unwrap();
        for (a, b) in comp.values.iter().zip(direct.values.iter()) {
            assert!((a - b).abs() < 1e-8);
        }

        let mut rng = ChaCha8Rng::seed_from_u64(19);
        let mut done = 0;
        while done < 200 {
            let order = rng.random_range(4..=10);
            let g = random_connected(&mut rng, order, 0.5);
            if !g.complement().is_connected() {
                continue;
            }
            done += 1;
            let mapped = complement_spectrum(&eigenvalues(&g, 1e-10).unwrap(), order);
            let direct = eigenvalues(&g.complement(), 1e-10).unwrap();
            for (a, b) in mapped.values.iter().zip(direct.values.iter()) {
                assert!((a - b).abs() < 1e-8);
            }
        }
    }
}
