//! Vertex-degree-function index values on a concrete graph.

use core::fmt;

use crate::degfn::{DegFnError, DegreeFunction};
use crate::graph::ChemGraph;

/// An index value, carried in floating point and, when the function takes
/// exact integer values, also as an exact integer.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct IndexValue {
    pub value: f64,
    pub exact: Option<i64>,
}

/// `H_f(G) = sum over vertices of f(deg v)`.
pub fn h_f(g: &ChemGraph, f: &DegreeFunction) -> Result<IndexValue, IndexError> {
    check_context(g, f)?;
    let counts = g.degree_vector();
    let vals = f.values()?;
    let value = counts.n1 as f64 * vals[0]
        + counts.n2 as f64 * vals[1]
        + counts.n3 as f64 * vals[2]
        + counts.n4 as f64 * vals[3];
    let exact = f.exact_values().map(|v| {
        counts.n1 as i64 * v[0]
            + counts.n2 as i64 * v[1]
            + counts.n3 as i64 * v[2]
            + counts.n4 as i64 * v[3]
    });
    Ok(IndexValue { value, exact })
}

/// `Gamma_f(G) = xi1 n2 + xi2 n3`, the part of `H_f` not determined by
/// order and size alone.
pub fn gamma_f(g: &ChemGraph, f: &DegreeFunction) -> Result<f64, IndexError> {
    check_context(g, f)?;
    let counts = g.degree_vector();
    let (xi1, xi2) = f.xi_pair()?;
    Ok(xi1 * counts.n2 as f64 + xi2 * counts.n3 as f64)
}

/// The degree-weighted pair `TI(G) = sum d_u f(d_u)` and
/// `TIbar(G) = sum (n - 1 - d_u) f(d_u)`. Their sum is `(n - 1) H_f(G)`.
pub fn ti_pair(
    g: &ChemGraph,
    f: &DegreeFunction,
) -> Result<(IndexValue, IndexValue), IndexError> {
    check_context(g, f)?;
    if g.n() < 2 {
        return Err(IndexError::OrderTooSmall { needs: 2, got: g.n() });
    }
    let counts = g.degree_vector();
    let vals = f.values()?;
    let nf = g.n() as f64;
    let by_degree = [counts.n1, counts.n2, counts.n3, counts.n4];
    let mut ti = 0.0;
    let mut tibar = 0.0;
    for (d, &count) in (1..=4usize).zip(by_degree.iter()) {
        ti += (count * d) as f64 * vals[d - 1];
        tibar += count as f64 * (nf - 1.0 - d as f64) * vals[d - 1];
    }
    let exact = f.exact_values();
    let ti_exact = exact.map(|v| {
        (1..=4)
            .map(|d| (by_degree[d - 1] * d) as i64 * v[d - 1])
            .sum()
    });
    let tibar_exact = exact.map(|v| {
        (1..=4)
            .map(|d| by_degree[d - 1] as i64 * (g.n() as i64 - 1 - d as i64) * v[d - 1])
            .sum()
    });
    Ok((
        IndexValue { value: ti, exact: ti_exact },
        IndexValue { value: tibar, exact: tibar_exact },
    ))
}

fn check_context(g: &ChemGraph, f: &DegreeFunction) -> Result<(), IndexError> {
    if let Some(expected) = f.context_n() {
        if expected != g.n() {
            return Err(IndexError::ContextMismatch { expected, got: g.n() });
        }
    }
    if g.n() == 1 {
        // The single vertex has degree 0, outside the domain of f.
        return Err(IndexError::Function(DegFnError::DegreeOutOfDomain(0)));
    }
    Ok(())
}

#[derive(Clone, PartialEq, Debug)]
pub enum IndexError {
    Function(DegFnError),
    /// The function is tied to a different graph order.
    ContextMismatch { expected: usize, got: usize },
    OrderTooSmall { needs: usize, got: usize },
}

impl fmt::Display for IndexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexError::Function(e) => e.fmt(f),
            IndexError::ContextMismatch { expected, got } => write!(
                f,
                "function is defined for order {} but the graph has order {}",
                expected, got
            ),
            IndexError::OrderTooSmall { needs, got } => {
                write!(f, "needs order at least {}, got {}", needs, got)
            }
        }
    }
}

impl core::error::Error for IndexError {}

impl From<DegFnError> for IndexError {
    fn from(e: DegFnError) -> Self {
        IndexError::Function(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degfn::DegreeFunction;

    fn star4() -> ChemGraph {
        ChemGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap()
    }

    fn path5() -> ChemGraph {
        ChemGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn first_zagreb_of_star_and_path() {
        let f = DegreeFunction::Power { alpha: 2.0 };
        let star = h_f(&star4(), &f).unwrap();
        assert_eq!(star.value, 20.0);
        assert_eq!(star.exact, Some(20));
        let path = h_f(&path5(), &f).unwrap();
        assert_eq!(path.value, 14.0);
        assert_eq!(path.exact, Some(14));
    }

    #[test]
    fn sum_exdeg_of_star() {
        let f = DegreeFunction::SumExdeg { a: 2.0 };
        let star = h_f(&star4(), &f).unwrap();
        // 4 * 1 * 2 + 1 * 4 * 16 = 72.
        assert_eq!(star.value, 72.0);
        assert_eq!(star.exact, None);
    }

    #[test]
    fn gamma_of_path() {
        let f = DegreeFunction::Power { alpha: 2.0 };
        // P5 has n2 = 3, n3 = 0 and xi = (-2, -2).
        assert_eq!(gamma_f(&path5(), &f).unwrap(), -6.0);
        assert_eq!(gamma_f(&star4(), &f).unwrap(), 0.0);
    }

    #[test]
    fn ti_pair_values_and_identity() {
        let f = DegreeFunction::Power { alpha: 2.0 };
        let (ti, tibar) = ti_pair(&path5(), &f).unwrap();
        assert_eq!((ti.value, tibar.value), (26.0, 30.0));
        assert_eq!((ti.exact, tibar.exact), (Some(26), Some(30)));
        let (ti, tibar) = ti_pair(&star4(), &f).unwrap();
        assert_eq!((ti.value, tibar.value), (68.0, 12.0));
        // TI + TIbar = (n - 1) H_f.
        let h = h_f(&star4(), &f).unwrap();
        assert_eq!(ti.value + tibar.value, 4.0 * h.value);
    }

    #[test]
    fn ti_matches_per_vertex_sum() {
        let g = ChemGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2)])
            .unwrap();
        let f = DegreeFunction::SumExdeg { a: 0.75 };
        let vals = f.values().unwrap();
        let mut ti = 0.0;
        let mut tibar = 0.0;
        for v in 0..g.n() {
            let d = g.degree(v);
            ti += d as f64 * vals[d - 1];
            tibar += (g.n() - 1 - d) as f64 * vals[d - 1];
        }
        let (got_ti, got_tibar) = ti_pair(&g, &f).unwrap();
        assert!((got_ti.value - ti).abs() < 1e-12);
        assert!((got_tibar.value - tibar).abs() < 1e-12);
    }

    #[test]
    fn context_mismatch_is_reported() {
        let f = DegreeFunction::ForgottenCoindex { n: 6 };
        let err = h_f(&star4(), &f).unwrap_err();
        assert_eq!(err, IndexError::ContextMismatch { expected: 6, got: 5 });
        let f = DegreeFunction::ForgottenCoindex { n: 5 };
        // (n-1-d) d^2 summed over the star: 4 * (5-1-1) * 1 + (5-1-4) * 16 = 12.
        assert_eq!(h_f(&star4(), &f).unwrap().exact, Some(12));
    }

    #[test]
    fn single_vertex_is_out_of_domain() {
        let k1 = ChemGraph::from_edges(1, &[]).unwrap();
        let f = DegreeFunction::Power { alpha: 2.0 };
        assert!(matches!(
            h_f(&k1, &f),
            Err(IndexError::Function(DegFnError::DegreeOutOfDomain(0)))
        ));
        let k2 = ChemGraph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(matches!(ti_pair(&k2, &f), Ok(_)));
    }
}
