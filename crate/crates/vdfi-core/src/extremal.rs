//! Candidate extremal graphs from degree counts.
//!
//! For a given order and size the bound is met exactly when `(n2, n3)`
//! take the residue-forced values, which pins the whole degree vector.
//! This module solves for that vector, decides whether a connected graph
//! realizes it, and deterministically builds one when it exists.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bounds::{residue, EqualityDegreeSet, MIN_BOUND_ORDER};
use crate::graph::{ChemGraph, DegreeVector, MAX_GRAPH_N};

/// The degree vector a bound-attaining graph of order `n` and size `m`
/// must have, or `None` when the forced counts go negative. Inside the
/// admissible size range `n - 1 <= m <= 2n` (with `n >= 5`) the counts
/// are always nonnegative.
pub fn solve_counts(n: usize, m: usize) -> Option<DegreeVector> {
    let (n2, n3) = EqualityDegreeSet::for_residue(residue(n, m)).forced_counts();
    let rem = 2 * m as i64 - n as i64 - n2 as i64 - 2 * n3 as i64;
    // The forced counts were chosen to make this divisible.
    assert!(rem.rem_euclid(3) == 0);
    let n4 = rem / 3;
    let n1 = n as i64 - n2 as i64 - n3 as i64 - n4;
    if n4 < 0 || n1 < 0 {
        return None;
    }
    Some(DegreeVector {
        n1: n1 as usize,
        n2,
        n3,
        n4: n4 as usize,
    })
}

/// Erdős–Gallai test: whether some simple graph has exactly this degree
/// multiset.
pub fn erdos_gallai(degrees: &[usize]) -> bool {
    let mut d: Vec<usize> = degrees.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    if d.iter().any(|&x| x >= d.len()) {
        return false;
    }
    let total: usize = d.iter().sum();
    if total % 2 != 0 {
        return false;
    }
    let mut prefix = 0usize;
    for k in 1..=d.len() {
        prefix += d[k - 1];
        let tail: usize = d[k..].iter().map(|&x| x.min(k)).sum();
        if prefix > k * (k - 1) + tail {
            return false;
        }
    }
    true
}

/// Whether a connected graph with this degree vector exists. With every
/// degree positive this reduces to the multiset being graphical with at
/// least a spanning tree's worth of edges.
pub fn realizable_connected(counts: &DegreeVector) -> bool {
    let n = counts.order();
    if n == 0 {
        return false;
    }
    let twice_m = counts.degree_sum();
    twice_m % 2 == 0 && twice_m / 2 + 1 >= n && erdos_gallai(&counts.degree_multiset())
}

/// Why no connected chemical graph attains the bound at this order and
/// size.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum InfeasibilityReason {
    /// The forced counts go negative. Cannot happen inside the admissible
    /// size range; kept for out-of-range arithmetic.
    NegativeCount,
    /// The counts are nonnegative but no simple graph has that degree
    /// multiset.
    ErdosGallai,
    /// Fewer than `n - 1` edges cannot connect `n` vertices.
    ConnectivityDeficit,
    /// More than `2n` edges force a degree above 4.
    DegreeCap,
}

impl fmt::Display for InfeasibilityReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InfeasibilityReason::NegativeCount => "negative-count",
            InfeasibilityReason::ErdosGallai => "erdos-gallai",
            InfeasibilityReason::ConnectivityDeficit => "connectivity-deficit",
            InfeasibilityReason::DegreeCap => "degree-cap",
        })
    }
}

/// Outcome of [`construct_extremal`]: the forced counts, and either a
/// witness graph or the reason none exists.
#[derive(Clone, PartialEq, Debug)]
pub struct ExtremalSolution {
    pub n: usize,
    pub m: usize,
    pub counts: Option<DegreeVector>,
    pub witness: Option<ChemGraph>,
    pub reason: Option<InfeasibilityReason>,
}

impl ExtremalSolution {
    pub fn feasible(&self) -> bool {
        self.witness.is_some()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExtremalError {
    /// The bounds, and hence the equality analysis, start at order 5.
    OrderTooSmall(usize),
    /// No witness representation above [`MAX_GRAPH_N`] vertices.
    OrderTooLarge(usize),
}

impl fmt::Display for ExtremalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtremalError::OrderTooSmall(n) => {
                write!(f, "extremal analysis needs order at least {}, got {}", MIN_BOUND_ORDER, n)
            }
            ExtremalError::OrderTooLarge(n) => {
                write!(f, "cannot build witnesses above order {}, got {}", MAX_GRAPH_N, n)
            }
        }
    }
}

impl core::error::Error for ExtremalError {}

/// Solves the forced degree counts for `(n, m)` and builds a connected
/// witness when one exists. Infeasibility is an answer, not an error.
/// The construction is deterministic: the same input always yields the
/// same witness.
pub fn construct_extremal(n: usize, m: usize) -> Result<ExtremalSolution, ExtremalError> {
    if n < MIN_BOUND_ORDER {
        return Err(ExtremalError::OrderTooSmall(n));
    }
    if n > MAX_GRAPH_N {
        return Err(ExtremalError::OrderTooLarge(n));
    }
    let counts = solve_counts(n, m);
    let infeasible = |reason| {
        Ok(ExtremalSolution {
            n,
            m,
            counts,
            witness: None,
            reason: Some(reason),
        })
    };
    if m > 2 * n {
        return infeasible(InfeasibilityReason::DegreeCap);
    }
    if m + 1 < n {
        return infeasible(InfeasibilityReason::ConnectivityDeficit);
    }
    let Some(vector) = counts else {
        return infeasible(InfeasibilityReason::NegativeCount);
    };
    if !erdos_gallai(&vector.degree_multiset()) {
        return infeasible(InfeasibilityReason::ErdosGallai);
    }
    let mut edges = havel_hakimi(&vector.degree_multiset())
        .expect("Erdős–Gallai accepted the multiset");
    connect_components(n, &mut edges);
    let witness = ChemGraph::from_edges(n, &edges)
        .expect("construction preserves simplicity, degrees and connectivity");
    assert!(witness.degree_vector() == vector);
    Ok(ExtremalSolution {
        n,
        m,
        counts,
        witness: Some(witness),
        reason: None,
    })
}

/// Builds a simple graph with the given degree sequence by repeatedly
/// exhausting the vertex of largest residual degree against the next
/// largest ones (ties broken by smallest index). Succeeds exactly on
/// graphical sequences; the result may be disconnected.
fn havel_hakimi(degrees: &[usize]) -> Option<Vec<(usize, usize)>> {
    let n = degrees.len();
    debug_assert!(n <= MAX_GRAPH_N);
    let mut residual: Vec<usize> = degrees.to_vec();
    let mut edges = Vec::new();
    loop {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        let u = order[0];
        let need = residual[u];
        if need == 0 {
            return Some(edges);
        }
        residual[u] = 0;
        let targets: Vec<usize> = order[1..]
            .iter()
            .copied()
            .filter(|&v| residual[v] > 0)
            .take(need)
            .collect();
        if targets.len() < need {
            return None;
        }
        for v in targets {
            // u and v cannot be adjacent yet: every earlier edge has an
            // already-exhausted endpoint, and both still had residual.
            residual[v] -= 1;
            edges.push((u.min(v), u.max(v)));
        }
    }
}

/// Rewires a possibly disconnected graph into a connected one with the
/// same degrees: repeatedly removes a cycle edge from one component and
/// an edge from another, reconnecting the four loose endpoints across
/// the gap. Works whenever `m >= n - 1` and every degree is positive,
/// because some component then carries a cycle.
fn connect_components(n: usize, edges: &mut Vec<(usize, usize)>) {
    loop {
        let comp = component_ids(n, edges);
        let ncomp = comp.iter().max().map_or(0, |&c| c + 1);
        if ncomp <= 1 {
            return;
        }
        let mut vcount = vec![0usize; ncomp];
        for &c in &comp {
            vcount[c] += 1;
        }
        let mut ecount = vec![0usize; ncomp];
        for &(a, _) in edges.iter() {
            ecount[comp[a]] += 1;
        }
        let cyclic = (0..ncomp)
            .find(|&c| ecount[c] >= vcount[c])
            .expect("with m >= n - 1 and several components, one has a cycle");
        let donor = non_bridge_edge(n, edges, &comp, cyclic);
        let other = (0..ncomp).find(|&c| c != cyclic).unwrap();
        let receiver = edges
            .iter()
            .copied()
            .filter(|&(a, _)| comp[a] == other)
            .min()
            .expect("every vertex has positive degree, so every component has an edge");
        edges.retain(|&e| e != donor && e != receiver);
        let (u, v) = donor;
        let (a, b) = receiver;
        edges.push((u.min(a), u.max(a)));
        edges.push((v.min(b), v.max(b)));
        edges.sort_unstable();
    }
}

/// Component id per vertex, numbered in order of each component's
/// smallest vertex.
fn component_ids(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp[start] = next;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if comp[y] == usize::MAX {
                    comp[y] = next;
                    stack.push(y);
                }
            }
        }
        next += 1;
    }
    comp
}

/// The smallest edge of component `target` whose removal keeps that
/// component connected. Exists whenever the component has at least as
/// many edges as vertices.
fn non_bridge_edge(
    n: usize,
    edges: &[(usize, usize)],
    comp: &[usize],
    target: usize,
) -> (usize, usize) {
    let mut local: Vec<(usize, usize)> = edges
        .iter()
        .copied()
        .filter(|&(a, _)| comp[a] == target)
        .collect();
    local.sort_unstable();
    for &candidate in &local {
        let rest: Vec<(usize, usize)> = local
            .iter()
            .copied()
            .filter(|&e| e != candidate)
            .collect();
        let sub = component_ids(n, &rest);
        let (u, v) = candidate;
        if sub[u] == sub[v] {
            return candidate;
        }
    }
    unreachable!("a component with as many edges as vertices has a cycle edge")
}
