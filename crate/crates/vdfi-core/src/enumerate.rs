//! Exhaustive isomorph-free enumeration of connected chemical graphs at
//! desk scale.
//!
//! Enumeration runs as a breadth-first search on edge count: level `k`
//! holds one canonical representative of every graph on `n` vertices with
//! `k` edges and maximum degree at most 4, connected or not (removing an
//! edge never raises a degree, so each level is reachable from the one
//! below). Levels are memoized per order, so queries at the same `n` and
//! different sizes share the work. The connected graphs at the requested
//! size are read off the final level.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::canon::{canonical_form, BitGraph};
use crate::graph::ChemGraph;

/// Largest order the enumerator accepts. Level sizes grow by roughly an
/// order of magnitude per vertex; 10 is the practical desk-scale limit.
pub const MAX_ENUM_N: usize = 10;

/// Anything that can produce the complete isomorph-free list of connected
/// chemical graphs of a given order and size.
pub trait GraphSource {
    fn connected_graphs(&mut self, n: usize, m: usize) -> Result<Vec<ChemGraph>, EnumError>;
}

/// Memoizing enumerator. Construction is cheap; all work happens on the
/// first query per order and is reused afterwards.
pub struct Enumerator {
    workers: usize,
    levels: BTreeMap<usize, Vec<BTreeSet<BitGraph>>>,
}

impl Enumerator {
    /// Single-threaded enumerator.
    pub fn new() -> Self {
        Self::with_workers(1)
    }

    /// Enumerator expanding levels on up to `workers` threads. The result
    /// is identical for every worker count; without the `std` feature the
    /// expansion always runs on the calling thread.
    pub fn with_workers(workers: usize) -> Self {
        Enumerator {
            workers: workers.max(1),
            levels: BTreeMap::new(),
        }
    }

    /// All connected graphs with `n` vertices, `m` edges and maximum
    /// degree at most 4, one per isomorphism class, sorted by canonical
    /// graph6 code. Sizes no connected chemical graph can have yield an
    /// empty list.
    pub fn connected(&mut self, n: usize, m: usize) -> Result<Vec<ChemGraph>, EnumError> {
        if n == 0 || n > MAX_ENUM_N {
            return Err(EnumError::OrderOutOfRange(n));
        }
        if m > (2 * n).min(n * (n - 1) / 2) {
            return Ok(Vec::new());
        }
        let workers = self.workers;
        let levels = self.levels.entry(n).or_insert_with(|| {
            let mut base = BTreeSet::new();
            base.insert(BitGraph::new(n));
            alloc::vec![base]
        });
        while levels.len() <= m {
            let next = expand(levels.last().unwrap(), workers);
            levels.push(next);
        }
        let mut out: Vec<ChemGraph> = levels[m]
            .iter()
            .filter(|g| g.is_connected())
            .map(|g| {
                ChemGraph::from_edges(n, &g.edges())
                    .expect("canonical forms stay simple, connected and degree-capped")
            })
            .collect();
        out.sort_by(|a, b| a.to_graph6().cmp(&b.to_graph6()));
        Ok(out)
    }

    /// Graphs of every admissible size at order `n`, flattened in size
    /// order. The total is the count of connected chemical graphs of that
    /// order.
    pub fn connected_all_sizes(&mut self, n: usize) -> Result<Vec<ChemGraph>, EnumError> {
        let hi = if n == 0 { 0 } else { (2 * n).min(n * (n - 1) / 2) };
        let lo = n.saturating_sub(1);
        let mut out = Vec::new();
        for m in lo..=hi {
            out.extend(self.connected(n, m)?);
        }
        Ok(out)
    }
}

impl Default for Enumerator {
    fn default() -> Self {
        Self::new()
    }
}

impl GraphSource for Enumerator {
    fn connected_graphs(&mut self, n: usize, m: usize) -> Result<Vec<ChemGraph>, EnumError> {
        self.connected(n, m)
    }
}

/// One-shot enumeration with a fresh single-threaded [`Enumerator`].
pub fn enumerate_connected_chemical(n: usize, m: usize) -> Result<Vec<ChemGraph>, EnumError> {
    Enumerator::new().connected(n, m)
}

/// Canonical forms of every one-edge extension of every parent.
fn expand(parents: &BTreeSet<BitGraph>, workers: usize) -> BTreeSet<BitGraph> {
    #[cfg(feature = "std")]
    {
        if workers > 1 && parents.len() >= 256 {
            let items: Vec<&BitGraph> = parents.iter().collect();
            let chunk = items.len().div_ceil(workers);
            return std::thread::scope(|scope| {
                let handles: Vec<_> = items
                    .chunks(chunk)
                    .map(|slice| scope.spawn(move || expand_chunk(slice.iter().copied())))
                    .collect();
                let mut merged = BTreeSet::new();
                for handle in handles {
                    merged.extend(handle.join().expect("expansion worker panicked"));
                }
                merged
            });
        }
    }
    let _ = workers;
    expand_chunk(parents.iter())
}

fn expand_chunk<'a>(parents: impl Iterator<Item = &'a BitGraph>) -> BTreeSet<BitGraph> {
    let mut out = BTreeSet::new();
    for g in parents {
        let n = g.n as usize;
        for u in 0..n {
            if g.degree(u) >= 4 {
                continue;
            }
            for v in (u + 1)..n {
                if g.degree(v) >= 4 || g.has_edge(u, v) {
                    continue;
                }
                let mut child = *g;
                child.add_edge(u, v);
                out.insert(canonical_form(&child));
            }
        }
    }
    out
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EnumError {
    /// Order outside `1..=MAX_ENUM_N`.
    OrderOutOfRange(usize),
    /// A non-enumerating [`GraphSource`] failed to deliver.
    Source(String),
}

impl fmt::Display for EnumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumError::OrderOutOfRange(n) => write!(
                f,
                "enumeration handles orders 1 through {}, got {}",
                MAX_ENUM_N, n
            ),
            EnumError::Source(what) => f.write_str(what),
        }
    }
}

impl core::error::Error for EnumError {}
