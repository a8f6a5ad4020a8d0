//! Canonical labeling for graphs of order at most 64.
//!
//! The canonical form is the lexicographically minimal adjacency encoding
//! over all relabelings consistent with an iteratively refined
//! vertex-invariant partition, found by branch-and-bound with incumbent
//! pruning. Encodings are compared column by column: placing a vertex at
//! position `p` contributes the `p` bits of its adjacency to the vertices
//! already placed, earliest position most significant.

/// Returns `perm` with `perm[v] = position of v` in the canonical labeling.
pub(crate) fn canonical_permutation(rows: &[u64], n: usize) -> Vec<usize> {
    debug_assert!(n <= 64);
    if n <= 1 {
        return vec![0; n];
    }
    let colors = stable_colors(rows, n);
    let color_count = colors.iter().max().unwrap() + 1;
    let mut cell_sizes = vec![0usize; color_count];
    for &c in &colors {
        cell_sizes[c] += 1;
    }
    let mut cell_of_pos = Vec::with_capacity(n);
    for (c, &sz) in cell_sizes.iter().enumerate() {
        cell_of_pos.extend(std::iter::repeat(c).take(sz));
    }

    let mut search = Search {
        rows,
        n,
        colors: &colors,
        cell_of_pos,
        best_cols: None,
        best_placed: vec![0; n],
        placed: Vec::with_capacity(n),
        used: 0,
        acc: vec![0; n],
        cols: vec![0; n],
    };
    search.dfs(0, true);

    let mut perm = vec![0usize; n];
    for (pos, &v) in search.best_placed.iter().enumerate() {
        perm[v] = pos;
    }
    perm
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    colors: &'a [usize],
    /// Color that owns each position; positions are blocked by cell.
    cell_of_pos: Vec<usize>,
    best_cols: Option<Vec<u64>>,
    best_placed: Vec<usize>,
    placed: Vec<usize>,
    used: u64,
    /// acc[v] = adjacency bits of v against the placed prefix.
    acc: Vec<u64>,
    cols: Vec<u64>,
}

impl Search<'_> {
    /// `tied` means the current column prefix equals the incumbent's.
    fn dfs(&mut self, pos: usize, tied: bool) {
        if pos == self.n {
            if tied && self.best_cols.is_some() {
                return; // an automorphic relabeling, same encoding
            }
            self.best_cols = Some(self.cols.clone());
            self.best_placed.copy_from_slice(&self.placed);
            return;
        }
        let cell = self.cell_of_pos[pos];
        let mut cands: Vec<(u64, usize)> = (0..self.n)
            .filter(|&v| self.used >> v & 1 == 0 && self.colors[v] == cell)
            .map(|v| (self.acc[v], v))
            .collect();
        cands.sort_unstable();

        for (col, v) in cands {
            let mut tied_next = tied;
            if tied {
                if let Some(best) = &self.best_cols {
                    if col > best[pos] {
                        break; // candidates are sorted; the rest are worse
                    }
                    if col < best[pos] {
                        tied_next = false;
                    }
                }
            }
            self.placed.push(v);
            self.used |= 1 << v;
            self.cols[pos] = col;
            for u in 0..self.n {
                self.acc[u] = (self.acc[u] << 1) | (self.rows[u] >> v & 1);
            }
            self.dfs(pos + 1, tied_next);
            for u in 0..self.n {
                self.acc[u] >>= 1;
            }
            self.used &= !(1 << v);
            self.placed.pop();
        }
    }
}

/// Iterated invariant partition: degree classes refined by neighbor-color
/// multisets, escalating to common-neighbor profiles when cells stay coarse
/// (the regular-graph case, where plain degree refinement is blind).
fn stable_colors(rows: &[u64], n: usize) -> Vec<usize> {
    let mut colors = rank_signatures(
        (0..n)
            .map(|v| vec![rows[v].count_ones() as u64])
            .collect(),
    );
    colors = wl_refine(rows, n, colors);
    if distinct(&colors) < n {
        let profiled = rank_signatures(
            (0..n)
                .map(|v| {
                    let mut sig = vec![colors[v] as u64];
                    let mut entries: Vec<u64> = (0..n)
                        .filter(|&u| u != v)
                        .map(|u| {
                            let cn = (rows[v] & rows[u]).count_ones() as u64;
                            let adj = rows[v] >> u & 1;
                            (colors[u] as u64) << 32 | adj << 16 | cn
                        })
                        .collect();
                    entries.sort_unstable();
                    sig.extend(entries);
                    sig
                })
                .collect(),
        );
        colors = wl_refine(rows, n, profiled);
    }
    colors
}

fn wl_refine(rows: &[u64], n: usize, mut colors: Vec<usize>) -> Vec<usize> {
    let mut count = distinct(&colors);
    loop {
        let sigs: Vec<Vec<u64>> = (0..n)
            .map(|v| {
                let mut sig = vec![colors[v] as u64];
                let mut neigh: Vec<u64> = (0..n)
                    .filter(|&u| rows[v] >> u & 1 == 1)
                    .map(|u| colors[u] as u64)
                    .collect();
                neigh.sort_unstable();
                sig.extend(neigh);
                sig
            })
            .collect();
        let next = rank_signatures(sigs);
        let next_count = distinct(&next);
        if next_count == count {
            return next;
        }
        colors = next;
        count = next_count;
    }
}

fn distinct(colors: &[usize]) -> usize {
    let mut seen = vec![false; colors.len()];
    let mut k = 0;
    for &c in colors {
        if !seen[c] {
            seen[c] = true;
            k += 1;
        }
    }
    k
}

/// Maps each vertex signature to its rank in the sorted signature order.
fn rank_signatures(sigs: Vec<Vec<u64>>) -> Vec<usize> {
    let mut order: Vec<usize> = (0..sigs.len()).collect();
    order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]));
    let mut colors = vec![0usize; sigs.len()];
    let mut rank = 0;
    for i in 0..order.len() {
        if i > 0 && sigs[order[i]] != sigs[order[i - 1]] {
            rank += 1;
        }
        colors[order[i]] = rank;
    }
    colors
}

/// Canonical upper-triangle bit code for order <= 16; used as a compact
/// dedup key by the extremal search.
pub(crate) fn canonical_code16(rows: &[u64], n: usize) -> u128 {
    debug_assert!(n <= 16);
    let perm = canonical_permutation(rows, n);
    let mut inv = vec![0usize; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let mut code: u128 = 0;
    for p in 1..n {
        for i in 0..p {
            code = code << 1 | (rows[inv[p]] >> inv[i] & 1) as u128;
        }
    }
    code
}

/// Rebuilds adjacency rows from a code produced by [`canonical_code16`].
pub(crate) fn rows_from_code16(code: u128, n: usize) -> Vec<u64> {
    let mut rows = vec![0u64; n];
    let total = n * (n - 1) / 2;
    let mut bit = total;
    for p in 1..n {
        for i in 0..p {
            bit -= 1;
            if code >> bit & 1 == 1 {
                rows[p] |= 1 << i;
                rows[i] |= 1 << p;
            }
        }
    }
    rows
}
