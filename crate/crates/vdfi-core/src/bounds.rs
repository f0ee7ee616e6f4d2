//! Sharp bounds on `H_f` over connected chemical graphs of given order and
//! size.
//!
//! Writing `n` for the order and `m` for the size, eliminating `n1` and
//! `n4` from the degree-count equations gives
//!
//! ```text
//! H_f = (1/3) (4 f(1) - f(4)) n + (2/3) (f(4) - f(1)) m + xi1 n2 + xi2 n3
//! ```
//!
//! and `n2 + 2 n3 = 2m - n (mod 3)`. For a CaseI function the trailing term
//! is maximized, subject to that congruence, by the smallest admissible
//! `(n2, n3)`: `(0, 0)`, `(1, 0)` or `(0, 1)` according to the residue of
//! `2m - n` mod 3. CaseII functions minimize at the same counts, so the
//! same expression is a lower bound.

use core::fmt;

use crate::degfn::{CaseVerdict, DegFnError, DegreeFunction, FunctionFamily, DEFAULT_TOLERANCE};
use crate::graph::DegreeVector;
use crate::math;

/// Smallest order the bounds are stated for.
pub const MIN_BOUND_ORDER: usize = 5;

/// `(2m - n) mod 3`, the residue that selects the correction term.
pub fn residue(n: usize, m: usize) -> u8 {
    (2 * m as i64 - n as i64).rem_euclid(3) as u8
}

/// Whether `m` is a possible size for a connected chemical graph of order
/// `n`: at least a tree, at most `min(2n, n(n-1)/2)` edges.
pub fn size_in_range(n: usize, m: usize) -> bool {
    m + 1 >= n && m <= (2 * n).min(n * (n - 1) / 2)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Direction {
    UpperBound,
    LowerBound,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::UpperBound => "UpperBound",
            Direction::LowerBound => "LowerBound",
        })
    }
}

/// The degree sets extremal graphs may use, by residue of `2m - n` mod 3.
///
/// The listed degrees assume every count forced to zero stays zero and the
/// rest are positive; when `n1` or `n4` degenerates to zero (which happens
/// only at the extreme sizes `m = 2n` and `m = 2n - 1`), the attaining
/// graphs use a subset. [`EqualityDegreeSet::matches`] therefore tests the
/// forced counts `(n2, n3)` rather than the literal set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum EqualityDegreeSet {
    /// Residue 0: `n2 = n3 = 0`, degrees from `{1, 4}`.
    OneFour,
    /// Residue 1: `n2 = 1`, `n3 = 0`, degrees from `{1, 2, 4}`.
    OneTwoFour,
    /// Residue 2: `n2 = 0`, `n3 = 1`, degrees from `{1, 3, 4}`.
    OneThreeFour,
}

impl EqualityDegreeSet {
    pub fn for_residue(r: u8) -> Self {
        match r {
            0 => EqualityDegreeSet::OneFour,
            1 => EqualityDegreeSet::OneTwoFour,
            2 => EqualityDegreeSet::OneThreeFour,
            _ => unreachable!("residue is always 0, 1 or 2"),
        }
    }

    /// The forced `(n2, n3)` pair.
    pub fn forced_counts(&self) -> (usize, usize) {
        match self {
            EqualityDegreeSet::OneFour => (0, 0),
            EqualityDegreeSet::OneTwoFour => (1, 0),
            EqualityDegreeSet::OneThreeFour => (0, 1),
        }
    }

    /// Whether a degree vector meets the equality condition.
    pub fn matches(&self, counts: &DegreeVector) -> bool {
        (counts.n2, counts.n3) == self.forced_counts()
    }
}

impl fmt::Display for EqualityDegreeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EqualityDegreeSet::OneFour => "{1,4}",
            EqualityDegreeSet::OneTwoFour => "{1,2,4} with one vertex of degree 2",
            EqualityDegreeSet::OneThreeFour => "{1,3,4} with one vertex of degree 3",
        })
    }
}

/// The bound numerators tripled, exact whenever the function is integer
/// valued. `total_thirds = 3 * bound`, so a graph attains the bound
/// exactly when `3 * H_f = total_thirds` on the integer path.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ExactBound {
    pub base_thirds: i64,
    pub correction_thirds: i64,
    pub total_thirds: i64,
}

/// A sharp bound on `H_f` over connected chemical graphs with `n` vertices
/// and `m` edges.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    /// `(2m - n) mod 3`.
    pub residue: u8,
    /// The part of the bound linear in `n` and `m`.
    pub base: f64,
    /// The residue correction: `0`, `xi1` or `xi2`.
    pub correction: f64,
    /// `base + correction`.
    pub total: f64,
    pub direction: Direction,
    /// Degree counts an attaining graph must have.
    pub equality_degree_set: EqualityDegreeSet,
    /// The same numbers tripled in exact integers, when available.
    pub exact: Option<ExactBound>,
}

impl BoundReport {
    /// Whether an exact index value attains the bound, decided without any
    /// floating point. `None` when the bound has no exact form.
    pub fn attained_by_exact(&self, h_exact: i64) -> Option<bool> {
        self.exact.map(|e| 3 * h_exact == e.total_thirds)
    }

    /// Whether a floating index value attains the bound within `tol`,
    /// relative to the larger of 1 and the magnitudes involved.
    pub fn attained_by(&self, h: f64, tol: f64) -> bool {
        math::abs(h - self.total) <= tol * math::abs(h).max(math::abs(self.total)).max(1.0)
    }
}

/// The sharp bound on `H_f` over connected chemical graphs of order `n`
/// and size `m`. Upper bound for CaseI functions, lower for CaseII;
/// boundary and unclassified functions are refused.
pub fn hf_bound(n: usize, m: usize, f: &DegreeFunction) -> Result<BoundReport, BoundError> {
    if n < MIN_BOUND_ORDER {
        return Err(BoundError::OrderTooSmall(n));
    }
    if let Some(expected) = f.context_n() {
        if expected != n {
            return Err(BoundError::ContextMismatch { expected, got: n });
        }
    }
    if !size_in_range(n, m) {
        return Err(BoundError::SizeOutOfRange { n, m });
    }
    let class = f.classify(DEFAULT_TOLERANCE)?;
    let direction = match class.verdict {
        CaseVerdict::CaseI => Direction::UpperBound,
        CaseVerdict::CaseII => Direction::LowerBound,
        other => return Err(BoundError::NotApplicable(other)),
    };
    let [f1, _, _, f4] = f.values()?;
    let r = residue(n, m);
    let base = ((4.0 * f1 - f4) * n as f64 + 2.0 * (f4 - f1) * m as f64) / 3.0;
    let correction = match r {
        0 => 0.0,
        1 => class.xi1,
        _ => class.xi2,
    };
    let exact = f.exact_values().and_then(|v| {
        let (xi1_3, xi2_3) = f.xi_thirds()?;
        let base_thirds = (4 * v[0] - v[3])
            .checked_mul(n as i64)?
            .checked_add(2i64.checked_mul(v[3] - v[0])?.checked_mul(m as i64)?)?;
        let correction_thirds = match r {
            0 => 0,
            1 => xi1_3,
            _ => xi2_3,
        };
        Some(ExactBound {
            base_thirds,
            correction_thirds,
            total_thirds: base_thirds.checked_add(correction_thirds)?,
        })
    });
    Ok(BoundReport {
        n,
        m,
        residue: r,
        base,
        correction,
        total: base + correction,
        direction,
        equality_degree_set: EqualityDegreeSet::for_residue(r),
        exact,
    })
}

/// The matching bound on `TI(G) + TIbar(G) = (n - 1) H_f(G)`: everything
/// in the `H_f` bound scaled by `n - 1`.
pub fn ti_sum_bound(n: usize, m: usize, f: &DegreeFunction) -> Result<BoundReport, BoundError> {
    let inner = hf_bound(n, m, f)?;
    let k = (n - 1) as f64;
    let base = k * inner.base;
    let correction = k * inner.correction;
    let exact = inner.exact.and_then(|e| {
        let k = (n - 1) as i64;
        Some(ExactBound {
            base_thirds: e.base_thirds.checked_mul(k)?,
            correction_thirds: e.correction_thirds.checked_mul(k)?,
            total_thirds: e.total_thirds.checked_mul(k)?,
        })
    });
    Ok(BoundReport {
        base,
        correction,
        total: base + correction,
        exact,
        ..inner
    })
}

/// The same bound evaluated from the published per-family formulas instead
/// of the generic `xi` machinery. For the log-multiplicative families the
/// value is in log space, comparable to `H_f` with `f = a ln x` or
/// `f = a x ln x`. For the forgotten coindex the family parameter is the
/// order and must equal `n`.
///
/// Errors with [`BoundError::UnaddressedRange`] when the parameter falls
/// outside every range the formulas cover.
pub fn closed_form_bound(
    family: FunctionFamily,
    param: f64,
    n: usize,
    m: usize,
) -> Result<f64, BoundError> {
    if n < MIN_BOUND_ORDER {
        return Err(BoundError::OrderTooSmall(n));
    }
    if !size_in_range(n, m) {
        return Err(BoundError::SizeOutOfRange { n, m });
    }
    if family == FunctionFamily::ForgottenCoindex && param != n as f64 {
        return Err(BoundError::ContextMismatch {
            expected: n,
            got: param as usize,
        });
    }
    if family.covered_range(param).is_none() {
        return Err(BoundError::UnaddressedRange);
    }
    let r = residue(n, m);
    let nf = n as f64;
    let mf = m as f64;
    let pow = math::powf;
    let ln = math::ln;
    Ok(match family {
        FunctionFamily::Power => {
            let a = param;
            let p4 = pow(4.0, a);
            let base = ((4.0 - p4) * nf + 2.0 * (p4 - 1.0) * mf) / 3.0;
            base + match r {
                0 => 0.0,
                1 => {
                    let p2 = pow(2.0, a);
                    -(p2 - 2.0) * (p2 - 1.0) / 3.0
                }
                _ => (pow(3.0, a + 1.0) - pow(2.0, 2.0 * a + 1.0) - 1.0) / 3.0,
            }
        }
        FunctionFamily::SumExdeg => {
            let a = param;
            let a3 = a * a * a;
            let base = (4.0 * a * (1.0 - a3) * nf + 2.0 * a * (4.0 * a3 - 1.0) * mf) / 3.0;
            base + match r {
                0 => 0.0,
                1 => 2.0 * a * (1.0 - a) * (2.0 * a * a + 2.0 * a - 1.0) / 3.0,
                _ => a * (1.0 - a) * (8.0 * a * a - a - 1.0) / 3.0,
            }
        }
        FunctionFamily::SumLodeg => {
            let a = param;
            let l4 = pow(ln(4.0), a);
            let base = (8.0 * mf - 4.0 * nf) * l4 / 3.0;
            base + match r {
                0 => 0.0,
                1 => 2.0 * (3.0 * pow(ln(2.0), a) - 2.0 * l4) / 3.0,
                _ => (9.0 * pow(ln(3.0), a) - 8.0 * l4) / 3.0,
            }
        }
        FunctionFamily::LnMultZagreb1 => {
            let a = param;
            match r {
                0 => 2.0 * a * (2.0 * mf - nf) / 3.0 * ln(2.0),
                1 => a * (4.0 * mf - 2.0 * nf + 1.0) / 3.0 * ln(2.0),
                _ => 2.0 * a * (2.0 * mf - nf - 2.0) / 3.0 * ln(2.0) + a * ln(3.0),
            }
        }
        FunctionFamily::LnMultZagreb2 => {
            let a = param;
            match r {
                0 => 8.0 * a * (2.0 * mf - nf) / 3.0 * ln(2.0),
                1 => 2.0 * a * (8.0 * mf - 4.0 * nf - 1.0) / 3.0 * ln(2.0),
                _ => 8.0 * a * (2.0 * mf - nf - 2.0) / 3.0 * ln(2.0) + 3.0 * a * ln(3.0),
            }
        }
        FunctionFamily::ForgottenCoindex => {
            let core = mf * (5.0 * nf - 26.0);
            match r {
                0 => 2.0 * (core - 2.0 * nf * (nf - 6.0)),
                1 => 2.0 * (core - nf * (2.0 * nf - 11.0) + 8.0),
                _ => 2.0 * (core - nf * (2.0 * nf - 11.0) + 9.0),
            }
        }
    })
}

#[derive(Clone, PartialEq, Debug)]
pub enum BoundError {
    /// The bounds are only stated for orders of at least 5.
    OrderTooSmall(usize),
    /// No connected chemical graph has this order and size.
    SizeOutOfRange { n: usize, m: usize },
    /// The function classifies as neither CaseI nor CaseII.
    NotApplicable(CaseVerdict),
    ContextMismatch { expected: usize, got: usize },
    Function(DegFnError),
    /// The parameter is outside every range the closed forms cover.
    UnaddressedRange,
}

impl fmt::Display for BoundError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundError::OrderTooSmall(n) => {
                write!(f, "bounds need order at least {}, got {}", MIN_BOUND_ORDER, n)
            }
            BoundError::SizeOutOfRange { n, m } => write!(
                f,
                "no connected chemical graph has {} vertices and {} edges",
                n, m
            ),
            BoundError::NotApplicable(v) => {
                write!(f, "function classifies as {}, no bound applies", v)
            }
            BoundError::ContextMismatch { expected, got } => write!(
                f,
                "function is defined for order {} but the bound was asked at order {}",
                expected, got
            ),
            BoundError::Function(e) => e.fmt(f),
            BoundError::UnaddressedRange => {
                f.write_str("parameter is outside the ranges the closed forms cover")
            }
        }
    }
}

impl core::error::Error for BoundError {}

impl From<DegFnError> for BoundError {
    fn from(e: DegFnError) -> Self {
        BoundError::Function(e)
    }
}
