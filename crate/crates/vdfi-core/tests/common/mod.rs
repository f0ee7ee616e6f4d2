//! Helpers shared by the integration suites: a tiny deterministic RNG,
//! random chemical graph construction, relabeling, an independent
//! backtracking isomorphism test, and labeled brute-force enumeration.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use vdfi_core::ChemGraph;

/// splitmix64; deterministic and seedable, good enough for test sampling.
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    /// Uniform in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform in `[lo, hi)`.
    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }
}

/// A random connected graph with maximum degree at most 4: a random
/// degree-capped spanning tree plus up to `extra` rejection-sampled
/// chords. Deterministic per seed.
pub fn random_chem_graph(seed: u64, n: usize, extra: usize) -> ChemGraph {
    assert!(n >= 1);
    let mut rng = SplitMix64(seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut degree = vec![0usize; n];
    for v in 1..n {
        let candidates: Vec<usize> = (0..v).filter(|&u| degree[u] < 4).collect();
        let u = candidates[rng.below(candidates.len())];
        edges.push((u, v));
        degree[u] += 1;
        degree[v] += 1;
    }
    let adjacent = |edges: &[(usize, usize)], a: usize, b: usize| {
        edges.iter().any(|&(x, y)| (x, y) == (a.min(b), a.max(b)))
    };
    let mut added = 0;
    let mut attempts = 0;
    while added < extra && attempts < 20 * (extra + 1) {
        attempts += 1;
        if n < 2 {
            break;
        }
        let a = rng.below(n);
        let b = rng.below(n);
        if a == b || degree[a] >= 4 || degree[b] >= 4 || adjacent(&edges, a, b) {
            continue;
        }
        edges.push((a.min(b), a.max(b)));
        degree[a] += 1;
        degree[b] += 1;
        added += 1;
    }
    ChemGraph::from_edges(n, &edges).expect("construction keeps every invariant")
}

/// Fisher–Yates permutation of `0..n`.
pub fn random_perm(rng: &mut SplitMix64, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.below(i + 1));
    }
    p
}

/// The graph with every vertex `v` renamed to `perm[v]`.
pub fn relabel(g: &ChemGraph, perm: &[usize]) -> ChemGraph {
    let edges: Vec<(usize, usize)> = g
        .edge_list()
        .into_iter()
        .map(|(u, v)| (perm[u], perm[v]))
        .collect();
    ChemGraph::from_edges(g.n(), &edges).unwrap()
}

/// Backtracking isomorphism test, independent of the canonical labeling.
pub fn isomorphic(a: &ChemGraph, b: &ChemGraph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let n = a.n();
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (usize::MAX - a.degree(v), v));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn assign(
        a: &ChemGraph,
        b: &ChemGraph,
        order: &[usize],
        idx: usize,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if idx == order.len() {
            return true;
        }
        let u = order[idx];
        for w in 0..b.n() {
            if used[w] || b.degree(w) != a.degree(u) {
                continue;
            }
            let consistent = order[..idx]
                .iter()
                .all(|&p| a.has_edge(u, p) == b.has_edge(w, map[p]));
            if consistent {
                map[u] = w;
                used[w] = true;
                if assign(a, b, order, idx + 1, map, used) {
                    return true;
                }
                used[w] = false;
                map[u] = usize::MAX;
            }
        }
        false
    }
    assign(a, b, &order, 0, &mut map, &mut used)
}

/// All vertex pairs `u < v` on `n` vertices, in a fixed order.
pub fn edge_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            out.push((u, v));
        }
    }
    out
}

/// Labeled brute force over all edge subsets: canonical codes of every
/// connected graph with maximum degree at most 4 on `n` vertices, keyed
/// by edge count. Usable up to `n = 6`.
pub fn labeled_census(n: usize) -> BTreeMap<usize, BTreeSet<String>> {
    let pairs = edge_pairs(n);
    assert!(pairs.len() <= 20, "mask scan is for small orders only");
    let mut census: BTreeMap<usize, BTreeSet<String>> = BTreeMap::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let mut degree = vec![0usize; n];
        let mut edges = Vec::new();
        let mut capped = false;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                degree[u] += 1;
                degree[v] += 1;
                if degree[u] > 4 || degree[v] > 4 {
                    capped = true;
                    break;
                }
                edges.push((u, v));
            }
        }
        if capped || !connected(n, &edges) {
            continue;
        }
        let g = ChemGraph::from_edges(n, &edges).unwrap();
        census
            .entry(edges.len())
            .or_default()
            .insert(g.canonical_code().unwrap().into_string());
    }
    census
}

/// Degree multisets (sorted descending) of every simple graph on `n`
/// vertices, connected or not, with no degree cap. Usable up to `n = 6`.
pub fn labeled_degree_multisets(n: usize) -> BTreeSet<Vec<usize>> {
    let pairs = edge_pairs(n);
    assert!(pairs.len() <= 20);
    let mut out = BTreeSet::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let mut degree = vec![0usize; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                degree[u] += 1;
                degree[v] += 1;
            }
        }
        degree.sort_unstable_by(|a, b| b.cmp(a));
        out.insert(degree);
    }
    out
}

pub fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return false;
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == n
}

/// Relative closeness with an absolute floor of 1.
pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}
