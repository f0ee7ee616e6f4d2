//! Checking the bounds against exhaustive enumeration, and the two
//! supporting scans: the coefficient separation behind the residue
//! corrections, and parameter sweeps over whole function families.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bounds::{hf_bound, residue, BoundError, MIN_BOUND_ORDER};
use crate::canon::CanonicalCode;
use crate::degfn::{CaseVerdict, DegreeFunction, FunctionFamily, DEFAULT_TOLERANCE};
use crate::enumerate::{EnumError, GraphSource, MAX_ENUM_N};
use crate::extremal::construct_extremal;
use crate::indices::{h_f, IndexError};
use crate::math;

/// Default relative tolerance for float attainment and violation checks.
pub const VERIFY_TOLERANCE: f64 = 1e-9;

/// One graph beating the bound: `excess` is how far past it lies, always
/// positive, oriented so that it means "worse than the bound claims".
#[derive(Clone, PartialEq, Debug)]
pub struct Violation {
    pub code: CanonicalCode,
    pub value: f64,
    pub excess: f64,
}

/// Result of checking one bound against every graph of its order and size.
#[derive(Clone, PartialEq, Debug)]
pub struct VerificationReport {
    pub n: usize,
    pub m: usize,
    /// The function spec, as [`DegreeFunction::describe`] prints it.
    pub function: String,
    pub bound: crate::bounds::BoundReport,
    /// How many isomorphism classes were checked.
    pub graph_count: usize,
    /// Graphs outside the bound. Empty unless the bound is wrong.
    pub violations: Vec<Violation>,
    /// Canonical codes of the graphs meeting the bound exactly.
    pub attaining: Vec<CanonicalCode>,
    /// The best index value seen: maximum under an upper bound, minimum
    /// under a lower bound. Meaningless when `graph_count` is zero.
    pub extremum: f64,
    /// Whether the attaining graphs are exactly those whose degree counts
    /// match the residue-forced `(n2, n3)`.
    pub equality_counts_verified: bool,
    /// Whether attainment being possible matches what the degree-count
    /// solver predicted.
    pub attainment_matches_prediction: bool,
}

/// Checks the `H_f` bound at `(n, m)` against every connected chemical
/// graph from `source`. Attainment and violation are decided in exact
/// integer arithmetic whenever the function supports it, otherwise within
/// `tolerance` relative to the magnitudes involved.
pub fn verify_bound_with<S: GraphSource + ?Sized>(
    source: &mut S,
    n: usize,
    m: usize,
    f: &DegreeFunction,
    tolerance: f64,
) -> Result<VerificationReport, VerifyError> {
    let bound = hf_bound(n, m, f)?;
    let graphs = source.connected_graphs(n, m)?;
    let upper = bound.direction == crate::bounds::Direction::UpperBound;
    let mut violations = Vec::new();
    let mut attaining = Vec::new();
    let mut extremum = if upper { f64::NEG_INFINITY } else { f64::INFINITY };
    let mut equality_ok = true;
    for g in &graphs {
        let h = h_f(g, f)?;
        extremum = if upper {
            extremum.max(h.value)
        } else {
            extremum.min(h.value)
        };
        let (attained, violated, excess) = match (bound.exact, h.exact) {
            (Some(exact), Some(h_exact)) => {
                let diff = 3 * h_exact - exact.total_thirds;
                let past = if upper { diff > 0 } else { diff < 0 };
                (diff == 0, past, math::abs(diff as f64) / 3.0)
            }
            _ => {
                let scale = math::abs(h.value).max(math::abs(bound.total)).max(1.0);
                let diff = h.value - bound.total;
                let past = if upper {
                    diff > tolerance * scale
                } else {
                    diff < -tolerance * scale
                };
                (math::abs(diff) <= tolerance * scale, past, math::abs(diff))
            }
        };
        if violated {
            violations.push(Violation {
                code: g.canonical_code().map_err(VerifyError::Canon)?,
                value: h.value,
                excess,
            });
        } else if attained {
            attaining.push(g.canonical_code().map_err(VerifyError::Canon)?);
        }
        if attained != bound.equality_degree_set.matches(&g.degree_vector()) {
            equality_ok = false;
        }
    }
    attaining.sort();
    let predicted = construct_extremal(n, m)
        .map(|sol| sol.feasible())
        .unwrap_or(false);
    Ok(VerificationReport {
        n,
        m,
        function: f.describe(),
        bound,
        graph_count: graphs.len(),
        violations,
        attaining: attaining.clone(),
        extremum,
        equality_counts_verified: equality_ok,
        attainment_matches_prediction: (!attaining.is_empty()) == predicted,
    })
}

/// Outcome of [`gamma_separation`].
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct GammaSeparation {
    pub xi1: f64,
    pub xi2: f64,
    /// The chain orientation the coefficients satisfied.
    pub case: CaseVerdict,
    /// Number of `(n2, n3)` pairs scanned.
    pub checked_pairs: usize,
    /// Whether every pair cleared the threshold strictly.
    pub verified: bool,
    /// Smallest clearance seen, and the pair it occurred at.
    pub worst_margin: f64,
    pub worst_pair: (usize, usize),
}

/// Verifies the separation fact behind the residue corrections: with the
/// chain `xi1 < 0`, `xi2 < 0`, `2 xi2 < xi1 < xi2 / 2`, every pair
/// `(n2, n3)` of nonnegative integers with `2 <= n2 + n3 <= max_total`
/// satisfies `xi1 n2 + xi2 n3 < min(xi1, xi2)`; with the mirrored
/// positive chain, `> max(xi1, xi2)`. Combined with the three base pairs
/// `(0,0)`, `(1,0)`, `(0,1)`, which meet their residue's correction with
/// equality, this pins the extremal degree counts.
///
/// The chain precondition is checked with raw strict comparisons, no
/// tolerance: a coefficient pair on the boundary is rejected.
pub fn gamma_separation(
    xi1: f64,
    xi2: f64,
    max_total: usize,
) -> Result<GammaSeparation, VerifyError> {
    if max_total < 2 {
        return Err(VerifyError::BadConfig("max_total must be at least 2"));
    }
    if !(xi1.is_finite() && xi2.is_finite()) {
        return Err(VerifyError::ChainViolated("coefficients must be finite"));
    }
    let upper = if xi1 < 0.0 && xi2 < 0.0 {
        true
    } else if xi1 > 0.0 && xi2 > 0.0 {
        false
    } else {
        return Err(VerifyError::ChainViolated(
            "coefficients must be both negative or both positive",
        ));
    };
    let chained = if upper {
        2.0 * xi2 < xi1 && xi1 < xi2 / 2.0
    } else {
        xi2 / 2.0 < xi1 && xi1 < 2.0 * xi2
    };
    if !chained {
        return Err(VerifyError::ChainViolated(
            "coefficients must satisfy the chain between xi2/2 and 2 xi2",
        ));
    }
    let threshold = if upper { xi1.min(xi2) } else { xi1.max(xi2) };
    let mut checked = 0usize;
    let mut verified = true;
    let mut worst = f64::INFINITY;
    let mut worst_pair = (0, 0);
    for n2 in 0..=max_total {
        for n3 in 0..=(max_total - n2) {
            if n2 + n3 < 2 {
                continue;
            }
            checked += 1;
            let value = xi1 * n2 as f64 + xi2 * n3 as f64;
            let margin = if upper { threshold - value } else { value - threshold };
            if margin <= 0.0 {
                verified = false;
            }
            if margin < worst {
                worst = margin;
                worst_pair = (n2, n3);
            }
        }
    }
    Ok(GammaSeparation {
        xi1,
        xi2,
        case: if upper { CaseVerdict::CaseI } else { CaseVerdict::CaseII },
        checked_pairs: checked,
        verified,
        worst_margin: worst,
        worst_pair,
    })
}

/// How the sweep picks sizes for each order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MRule {
    /// Every admissible size `n - 1 ..= min(2n, n(n-1)/2)`.
    All,
    /// One fixed size, skipped at orders where it is inadmissible.
    Fixed(usize),
    /// `m = n + k`, skipped where inadmissible.
    Offset(i64),
    /// `m = 2n`.
    TwiceN,
}

impl MRule {
    fn sizes(&self, n: usize) -> Vec<usize> {
        let hi = (2 * n).min(n * (n - 1) / 2);
        let lo = n - 1;
        let admissible = |m: usize| m >= lo && m <= hi;
        match *self {
            MRule::All => (lo..=hi).collect(),
            MRule::Fixed(m) if admissible(m) => alloc::vec![m],
            MRule::Offset(k) => {
                let m = n as i64 + k;
                if m >= 0 && admissible(m as usize) {
                    alloc::vec![m as usize]
                } else {
                    Vec::new()
                }
            }
            MRule::TwiceN => alloc::vec![2 * n],
            _ => Vec::new(),
        }
    }
}

/// A family sweep: which members, which orders, which sizes, and whether
/// to verify each cell exhaustively.
#[derive(Clone, PartialEq, Debug)]
pub struct SweepConfig {
    pub family: FunctionFamily,
    /// Member parameters. Ignored for the forgotten coindex, whose member
    /// at each order is fixed; give it a single placeholder entry.
    pub params: Vec<f64>,
    /// Inclusive order range, starting at 5 or above.
    pub orders: (usize, usize),
    pub sizes: MRule,
    pub tolerance: f64,
    /// Verify cells exhaustively for orders up to this (0 disables; capped
    /// at [`MAX_ENUM_N`]).
    pub exhaustive_upto: usize,
}

/// One `(member, n, m)` cell of a sweep.
#[derive(Clone, PartialEq, Debug)]
pub struct SweepRow {
    pub family: FunctionFamily,
    pub param: f64,
    pub n: usize,
    pub m: usize,
    pub residue: u8,
    pub verdict: CaseVerdict,
    /// The bound, absent when the verdict admits none.
    pub bound: Option<f64>,
    /// The enumerated extremum of `H_f`, when the cell was verified
    /// exhaustively.
    pub extremal: Option<f64>,
    /// Exhaustive attainment, when the cell was verified.
    pub attained: Option<bool>,
    /// Exhaustive violation count, when the cell was verified.
    pub violations: Option<usize>,
}

/// Runs a sweep. Cells whose verdict admits no bound still produce rows,
/// with the bound columns empty, so coverage gaps stay visible.
pub fn sweep<S: GraphSource + ?Sized>(
    source: &mut S,
    config: &SweepConfig,
) -> Result<Vec<SweepRow>, VerifyError> {
    if config.orders.0 < MIN_BOUND_ORDER || config.orders.1 < config.orders.0 {
        return Err(VerifyError::BadConfig(
            "sweep orders must be an increasing range starting at 5 or above",
        ));
    }
    if config.params.is_empty() {
        return Err(VerifyError::BadConfig("sweep needs at least one parameter"));
    }
    let mut rows = Vec::new();
    for &param in &config.params {
        for n in config.orders.0..=config.orders.1 {
            let f = config.family.instantiate(param, n);
            let class = f.classify(DEFAULT_TOLERANCE).map_err(BoundError::from)?;
            for m in config.sizes.sizes(n) {
                let bound = match hf_bound(n, m, &f) {
                    Ok(report) => Some(report),
                    Err(BoundError::NotApplicable(_)) => None,
                    Err(e) => return Err(e.into()),
                };
                let (extremal, attained, violations) = if bound.is_some()
                    && n <= config.exhaustive_upto.min(MAX_ENUM_N)
                {
                    let report = verify_bound_with(source, n, m, &f, config.tolerance)?;
                    let extremum = (report.graph_count > 0).then_some(report.extremum);
                    (
                        extremum,
                        Some(!report.attaining.is_empty()),
                        Some(report.violations.len()),
                    )
                } else {
                    (None, None, None)
                };
                rows.push(SweepRow {
                    family: config.family,
                    param,
                    n,
                    m,
                    residue: residue(n, m),
                    verdict: class.verdict,
                    bound: bound.map(|b| b.total),
                    extremal,
                    attained,
                    violations,
                });
            }
        }
    }
    Ok(rows)
}

#[derive(Clone, PartialEq, Debug)]
pub enum VerifyError {
    Bound(BoundError),
    Enumeration(EnumError),
    Index(IndexError),
    Canon(crate::graph::GraphError),
    /// The separation scan's chain precondition failed.
    ChainViolated(&'static str),
    BadConfig(&'static str),
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::Bound(e) => e.fmt(f),
            VerifyError::Enumeration(e) => e.fmt(f),
            VerifyError::Index(e) => e.fmt(f),
            VerifyError::Canon(e) => e.fmt(f),
            VerifyError::ChainViolated(what) => write!(f, "chain precondition failed: {}", what),
            VerifyError::BadConfig(what) => f.write_str(what),
        }
    }
}

impl core::error::Error for VerifyError {}

impl From<BoundError> for VerifyError {
    fn from(e: BoundError) -> Self {
        VerifyError::Bound(e)
    }
}

impl From<EnumError> for VerifyError {
    fn from(e: EnumError) -> Self {
        VerifyError::Enumeration(e)
    }
}

impl From<IndexError> for VerifyError {
    fn from(e: IndexError) -> Self {
        VerifyError::Index(e)
    }
}
