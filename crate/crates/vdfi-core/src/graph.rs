//! Simple connected graphs with maximum degree at most 4.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::canon;
use crate::graph6;

/// Largest vertex count a [`ChemGraph`] may have. Matches the short form of
/// the graph6 interchange format, which is the only form supported.
pub const MAX_GRAPH_N: usize = 62;

/// Largest degree a vertex of a chemical graph may have.
pub const MAX_DEGREE: usize = 4;

/// A simple connected graph with maximum degree at most 4, immutable after
/// construction.
///
/// The only single-vertex graph has one vertex of degree 0; every graph with
/// `n >= 2` has minimum degree at least 1 because it is connected.
///
/// # Examples
///
/// ```
/// use vdfi_core::ChemGraph;
///
/// let star = ChemGraph::parse_graph6("Ds_").unwrap();
/// assert_eq!((star.n(), star.m()), (5, 4));
/// assert_eq!(star.degree(0), 4);
/// assert_eq!(star.to_graph6(), "Ds_");
/// ```
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChemGraph {
    n: usize,
    m: usize,
    /// Bit `v` of `rows[u]` is set iff `u` and `v` are adjacent.
    rows: Vec<u64>,
}

impl ChemGraph {
    /// Builds a graph on vertices `0..n` from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n < 1 || n > MAX_GRAPH_N {
            return Err(GraphError::OrderOutOfRange(n));
        }
        let mut rows = alloc::vec![0u64; n];
        let mut m = 0usize;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::InvalidVertex {
                    v: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if rows[u] >> v & 1 == 1 {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
            m += 1;
        }
        let g = ChemGraph { n, m, rows };
        if let Some(v) = (0..n).find(|&v| g.degree(v) > MAX_DEGREE) {
            return Err(GraphError::DegreeExceeded(v));
        }
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    /// Parses a graph6 record (short form, `n <= 62`). An optional
    /// `>>graph6<<` prefix and trailing whitespace are tolerated.
    pub fn parse_graph6(text: &str) -> Result<Self, GraphError> {
        let (n, edges) = graph6::decode(text)?;
        Self::from_edges(n, &edges)
    }

    /// Parses an edge list: one `u v` pair per line, 0-based labels,
    /// `#` starts a comment, blank lines are skipped. The vertex count is
    /// one more than the largest label mentioned.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        let mut max_label = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let mut tokens = line.split_whitespace();
            let (u, v) = match (tokens.next(), tokens.next()) {
                (None, _) => continue,
                (Some(a), Some(b)) => {
                    let parse = |s: &str| s.parse::<usize>().ok();
                    match (parse(a), parse(b)) {
                        (Some(u), Some(v)) => (u, v),
                        _ => return Err(GraphError::EdgeListSyntax { line: idx + 1 }),
                    }
                }
                _ => return Err(GraphError::EdgeListSyntax { line: idx + 1 }),
            };
            if tokens.next().is_some() {
                return Err(GraphError::EdgeListSyntax { line: idx + 1 });
            }
            max_label = max_label.max(u).max(v);
            edges.push((u, v));
        }
        if edges.is_empty() {
            return Err(GraphError::EmptyEdgeList);
        }
        Self::from_edges(max_label + 1, &edges)
    }

    /// Encodes the graph as a graph6 record (no header, no newline).
    pub fn to_graph6(&self) -> String {
        graph6::encode(self.n, |u, v| self.has_edge(u, v))
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// Degrees of all vertices, indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.rows[v];
        (0..self.n).filter(move |&u| row >> u & 1 == 1)
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        edges
    }

    /// Counts of vertices of degree 1 through 4.
    ///
    /// For every graph with `n >= 2` the counts satisfy
    /// `n1 + n2 + n3 + n4 = n` and `n1 + 2 n2 + 3 n3 + 4 n4 = 2m`; the
    /// single-vertex graph is the one exception (its vertex has degree 0).
    pub fn degree_vector(&self) -> DegreeVector {
        let mut counts = [0usize; 5];
        for v in 0..self.n {
            counts[self.degree(v)] += 1;
        }
        DegreeVector {
            n1: counts[1],
            n2: counts[2],
            n3: counts[3],
            n4: counts[4],
        }
    }

    /// A label-invariant identifier: two graphs (with `n <= 16`) get the
    /// same code exactly when they are isomorphic. The code is the graph6
    /// encoding of a canonical relabeling, so it is printable and sorts the
    /// same way as the cache files the CLI writes.
    pub fn canonical_code(&self) -> Result<canon::CanonicalCode, GraphError> {
        canon::code_of_graph(self)
    }

    fn is_connected(&self) -> bool {
        let mut seen: u64 = 1;
        loop {
            let mut next = seen;
            for v in 0..self.n {
                if seen >> v & 1 == 1 {
                    next |= self.rows[v];
                }
            }
            if next == seen {
                break;
            }
            seen = next;
        }
        seen.count_ones() as usize == self.n
    }
}

impl fmt::Debug for ChemGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChemGraph(n={}, m={}, {})", self.n, self.m, self.to_graph6())
    }
}

/// Counts `(n1, n2, n3, n4)` of vertices of each degree.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DegreeVector {
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub n4: usize,
}

impl DegreeVector {
    pub fn new(n1: usize, n2: usize, n3: usize, n4: usize) -> Self {
        DegreeVector { n1, n2, n3, n4 }
    }

    /// Total vertex count `n1 + n2 + n3 + n4`.
    pub fn order(&self) -> usize {
        self.n1 + self.n2 + self.n3 + self.n4
    }

    /// Degree sum, twice the edge count.
    pub fn degree_sum(&self) -> usize {
        self.n1 + 2 * self.n2 + 3 * self.n3 + 4 * self.n4
    }

    pub fn count(&self, degree: usize) -> usize {
        match degree {
            1 => self.n1,
            2 => self.n2,
            3 => self.n3,
            4 => self.n4,
            _ => 0,
        }
    }

    /// Degrees present, ascending.
    pub fn distinct_degrees(&self) -> Vec<usize> {
        (1..=4).filter(|&d| self.count(d) > 0).collect()
    }

    /// The full degree multiset, descending.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.order());
        for d in (1..=4).rev() {
            out.extend(core::iter::repeat(d).take(self.count(d)));
        }
        out
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n1={}, n2={}, n3={}, n4={})", self.n1, self.n2, self.n3, self.n4)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GraphError {
    /// Vertex count outside `1..=62`.
    OrderOutOfRange(usize),
    InvalidVertex { v: usize, n: usize },
    SelfLoop(usize),
    DuplicateEdge(usize, usize),
    /// The named vertex would exceed degree 4.
    DegreeExceeded(usize),
    Disconnected,
    EmptyEdgeList,
    EdgeListSyntax { line: usize },
    Graph6(graph6::Graph6Error),
    /// Canonical codes are only computed for `n <= 16`.
    CanonicalLimit(usize),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::OrderOutOfRange(n) => {
                write!(f, "vertex count {} outside 1..={}", n, MAX_GRAPH_N)
            }
            GraphError::InvalidVertex { v, n } => {
                write!(f, "vertex label {} out of range for n={}", v, n)
            }
            GraphError::SelfLoop(v) => write!(f, "self loop at vertex {}", v),
            GraphError::DuplicateEdge(u, v) => write!(f, "duplicate edge {}-{}", u, v),
            GraphError::DegreeExceeded(v) => {
                write!(f, "vertex {} exceeds degree {}", v, MAX_DEGREE)
            }
            GraphError::Disconnected => write!(f, "graph is not connected"),
            GraphError::EmptyEdgeList => write!(f, "edge list is empty"),
            GraphError::EdgeListSyntax { line } => {
                write!(f, "malformed edge list at line {}", line)
            }
            GraphError::Graph6(e) => write!(f, "graph6: {}", e),
            GraphError::CanonicalLimit(n) => {
                write!(f, "canonical code supports n <= 16, got {}", n)
            }
        }
    }
}

impl core::error::Error for GraphError {}

impl From<graph6::Graph6Error> for GraphError {
    fn from(e: graph6::Graph6Error) -> Self {
        GraphError::Graph6(e)
    }
}
