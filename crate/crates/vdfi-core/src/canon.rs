//! Canonical labeling for graphs on up to 16 vertices.
//!
//! Equitable degree refinement plus backtracking over the vertices of the
//! first non-singleton cell. Each discrete leaf yields a certificate (the
//! upper-triangle bits of the relabeled adjacency matrix); the smallest
//! certificate wins. Cells prune the permutation space enough for every
//! graph in range, including the degree cap 4 regulars.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{ChemGraph, GraphError};
use crate::graph6;

pub(crate) const MAX_CANON_N: usize = 16;

/// Dense little graph used by the canonical search and the enumerator.
/// Bit `v` of `rows[u]` is set iff `u` and `v` are adjacent.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub(crate) struct BitGraph {
    pub n: u8,
    pub rows: [u16; MAX_CANON_N],
}

impl BitGraph {
    pub fn new(n: usize) -> Self {
        debug_assert!(n >= 1 && n <= MAX_CANON_N);
        BitGraph {
            n: n as u8,
            rows: [0; MAX_CANON_N],
        }
    }

    pub fn from_chem(g: &ChemGraph) -> Self {
        let mut out = BitGraph::new(g.n());
        for (u, v) in g.edge_list() {
            out.add_edge(u, v);
        }
        out
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n as usize;
        let mut seen: u16 = 1;
        loop {
            let mut next = seen;
            for v in 0..n {
                if seen >> v & 1 == 1 {
                    next |= self.rows[v];
                }
            }
            if next == seen {
                break;
            }
            seen = next;
        }
        seen.count_ones() as usize == n
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n as usize;
        let mut out = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self.n as usize, |u, v| self.has_edge(u, v))
    }
}

/// Relabels `g` canonically. Isolated vertices take the trailing labels;
/// the result depends only on the isomorphism class of `g`.
pub(crate) fn canonical_form(g: &BitGraph) -> BitGraph {
    let n = g.n as usize;
    let active: Vec<u8> = (0..n as u8).filter(|&v| g.degree(v as usize) > 0).collect();
    let mut out = BitGraph::new(n);
    if active.is_empty() {
        return out;
    }
    let mut best: Option<(u128, Vec<u8>)> = None;
    search(g, alloc::vec![active], &mut best);
    let (_, perm) = best.expect("at least one leaf");
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            if g.has_edge(perm[i] as usize, perm[j] as usize) {
                out.add_edge(i, j);
            }
        }
    }
    out
}

fn search(g: &BitGraph, mut cells: Vec<Vec<u8>>, best: &mut Option<(u128, Vec<u8>)>) {
    refine(g, &mut cells);
    if let Some(target) = cells.iter().position(|c| c.len() > 1) {
        let candidates = cells[target].clone();
        for &v in &candidates {
            let mut child = cells.clone();
            child[target] = alloc::vec![v];
            let rest: Vec<u8> = candidates.iter().copied().filter(|&u| u != v).collect();
            child.insert(target + 1, rest);
            search(g, child, best);
        }
        return;
    }
    let perm: Vec<u8> = cells.iter().map(|c| c[0]).collect();
    let cert = certificate(g, &perm);
    if best.as_ref().is_none_or(|(b, _)| cert < *b) {
        *best = Some((cert, perm));
    }
}

/// Splits every cell by its vertices' neighbor counts into all current
/// cells until the partition is equitable. Subcells are ordered by count
/// vector, then by vertex id, so the result is deterministic.
fn refine(g: &BitGraph, cells: &mut Vec<Vec<u8>>) {
    loop {
        let masks: Vec<u16> = cells
            .iter()
            .map(|c| c.iter().fold(0u16, |m, &v| m | 1 << v))
            .collect();
        let key = |v: u8| -> Vec<u8> {
            masks
                .iter()
                .map(|&m| (g.rows[v as usize] & m).count_ones() as u8)
                .collect()
        };
        let mut next: Vec<Vec<u8>> = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut tagged: Vec<(Vec<u8>, u8)> = cell.iter().map(|&v| (key(v), v)).collect();
            tagged.sort();
            let mut group: Vec<u8> = alloc::vec![tagged[0].1];
            for pair in tagged.windows(2) {
                if pair[1].0 == pair[0].0 {
                    group.push(pair[1].1);
                } else {
                    next.push(core::mem::take(&mut group));
                    group.push(pair[1].1);
                }
            }
            next.push(group);
        }
        let stable = next.len() == cells.len();
        *cells = next;
        if stable {
            return;
        }
    }
}

/// Upper-triangle adjacency bits of the relabeled graph, column-major, as
/// one big-endian integer. Only defined for up to 16 active vertices.
fn certificate(g: &BitGraph, perm: &[u8]) -> u128 {
    let mut cert = 0u128;
    for j in 1..perm.len() {
        for i in 0..j {
            cert = cert << 1 | u128::from(g.has_edge(perm[i] as usize, perm[j] as usize));
        }
    }
    cert
}

/// Label-invariant graph identifier: the graph6 encoding of the canonical
/// relabeling. Equal codes mean isomorphic graphs, and byte order gives a
/// stable total order (vertex count first).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub(crate) fn code_of_bitgraph(g: &BitGraph) -> CanonicalCode {
    CanonicalCode(canonical_form(g).to_graph6())
}

pub(crate) fn code_of_graph(g: &ChemGraph) -> Result<CanonicalCode, GraphError> {
    if g.n() > MAX_CANON_N {
        return Err(GraphError::CanonicalLimit(g.n()));
    }
    Ok(code_of_bitgraph(&BitGraph::from_chem(g)))
}
