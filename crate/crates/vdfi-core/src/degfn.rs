//! Degree functions on `{1, 2, 3, 4}` and their case classification.
//!
//! Everything the bounds need about a function `f` is captured by the pair
//!
//! ```text
//! xi1 = f(2) - (2/3) f(1) - (1/3) f(4)
//! xi2 = f(3) - (1/3) f(1) - (2/3) f(4)
//! ```
//!
//! which are the coefficients of `n2` and `n3` once `n1` and `n4` are
//! eliminated against the order and size of the graph. A function is
//! *CaseI* (upper bound) when `xi1 < 0`, `xi2 < 0` and
//! `2 xi2 < xi1 < xi2 / 2`, *CaseII* (lower bound) when `xi1 > 0`,
//! `xi2 > 0` and `xi2 / 2 < xi1 < 2 xi2`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::math;

/// Tolerance used by [`DegreeFunction::classify`] unless the caller picks
/// another: an inequality holding by less than this margin is reported as
/// [`CaseVerdict::Boundary`].
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Largest magnitude an exact integer function value may have; keeps sums
/// over a graph and the bound arithmetic inside `i64`.
const EXACT_LIMIT: i64 = 1 << 50;

/// A function on the degrees 1 through 4.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum DegreeFunction {
    /// `f(x) = x^alpha`, the general zeroth-order Randić index. `alpha = 2`
    /// gives the first Zagreb index.
    Power { alpha: f64 },
    /// `f(x) = x a^x` with `a > 0`, `a != 1`, the sum exdeg index.
    SumExdeg { a: f64 },
    /// `f(x) = x (ln x)^a` with `a > 0`, the sum lodeg index.
    SumLodeg { a: f64 },
    /// `f(x) = a ln x`, the log of the general multiplicative first Zagreb
    /// index.
    LnMultZagreb1 { a: f64 },
    /// `f(x) = a x ln x`, the log of the general multiplicative second
    /// Zagreb index.
    LnMultZagreb2 { a: f64 },
    /// `f(x) = (n - 1 - x) x^2` for graphs of order exactly `n >= 2`, the
    /// forgotten coindex summand.
    ForgottenCoindex { n: usize },
    /// Explicit values `(f(1), f(2), f(3), f(4))`.
    CustomTable { values: [f64; 4] },
}

impl DegreeFunction {
    /// Checks the parameter constraints of the family.
    pub fn validate(&self) -> Result<(), DegFnError> {
        let finite = |x: f64, what: &'static str| {
            if x.is_finite() {
                Ok(())
            } else {
                Err(DegFnError::InvalidParameter(what))
            }
        };
        match *self {
            DegreeFunction::Power { alpha } => finite(alpha, "power exponent must be finite"),
            DegreeFunction::SumExdeg { a } => {
                finite(a, "sum exdeg base must be finite")?;
                if a > 0.0 && a != 1.0 {
                    Ok(())
                } else {
                    Err(DegFnError::InvalidParameter("sum exdeg needs a > 0 and a != 1"))
                }
            }
            DegreeFunction::SumLodeg { a } => {
                finite(a, "sum lodeg exponent must be finite")?;
                if a > 0.0 {
                    Ok(())
                } else {
                    Err(DegFnError::InvalidParameter("sum lodeg needs a > 0"))
                }
            }
            DegreeFunction::LnMultZagreb1 { a } => finite(a, "lnpi1 factor must be finite"),
            DegreeFunction::LnMultZagreb2 { a } => finite(a, "lnpi2 factor must be finite"),
            DegreeFunction::ForgottenCoindex { n } => {
                if n >= 2 {
                    Ok(())
                } else {
                    Err(DegFnError::InvalidParameter("forgotten coindex needs order n >= 2"))
                }
            }
            DegreeFunction::CustomTable { values } => {
                if values.iter().all(|v| v.is_finite()) {
                    Ok(())
                } else {
                    Err(DegFnError::InvalidParameter("table values must be finite"))
                }
            }
        }
    }

    /// `(f(1), f(2), f(3), f(4))`.
    pub fn values(&self) -> Result<[f64; 4], DegFnError> {
        self.validate()?;
        let ln = math::ln;
        let pow = math::powf;
        Ok(match *self {
            DegreeFunction::Power { alpha } => {
                [1.0, pow(2.0, alpha), pow(3.0, alpha), pow(4.0, alpha)]
            }
            DegreeFunction::SumExdeg { a } => {
                [a, 2.0 * a * a, 3.0 * a * a * a, 4.0 * a * a * a * a]
            }
            DegreeFunction::SumLodeg { a } => [
                0.0,
                2.0 * pow(ln(2.0), a),
                3.0 * pow(ln(3.0), a),
                4.0 * pow(ln(4.0), a),
            ],
            DegreeFunction::LnMultZagreb1 { a } => {
                [0.0, a * ln(2.0), a * ln(3.0), a * ln(4.0)]
            }
            DegreeFunction::LnMultZagreb2 { a } => {
                [0.0, 2.0 * a * ln(2.0), 3.0 * a * ln(3.0), 4.0 * a * ln(4.0)]
            }
            DegreeFunction::ForgottenCoindex { n } => {
                let n = n as f64;
                [n - 2.0, 4.0 * (n - 3.0), 9.0 * (n - 4.0), 16.0 * (n - 5.0)]
            }
            DegreeFunction::CustomTable { values } => values,
        })
    }

    /// `f(x)` for a degree `x` in `1..=4`.
    pub fn evaluate(&self, x: usize) -> Result<f64, DegFnError> {
        if !(1..=4).contains(&x) {
            return Err(DegFnError::DegreeOutOfDomain(x));
        }
        Ok(self.values()?[x - 1])
    }

    /// Integer `(f(1), ..., f(4))` for the families that take exact integer
    /// values: `Power` with a nonnegative integer exponent, the forgotten
    /// coindex, and integer tables. Values are kept small enough that index
    /// sums and bound numerators stay inside `i64`.
    pub fn exact_values(&self) -> Option<[i64; 4]> {
        let vals = match *self {
            DegreeFunction::Power { alpha } => {
                if !(alpha.is_finite() && alpha >= 0.0 && math::fract(alpha) == 0.0 && alpha <= 60.0) {
                    return None;
                }
                let k = alpha as u32;
                [
                    1i64,
                    2i64.checked_pow(k)?,
                    3i64.checked_pow(k)?,
                    4i64.checked_pow(k)?,
                ]
            }
            DegreeFunction::ForgottenCoindex { n } => {
                if n < 2 {
                    return None;
                }
                let n = n as i64;
                [n - 2, 4 * (n - 3), 9 * (n - 4), 16 * (n - 5)]
            }
            DegreeFunction::CustomTable { values } => {
                let mut out = [0i64; 4];
                for (slot, &v) in out.iter_mut().zip(values.iter()) {
                    if !(v.is_finite() && math::fract(v) == 0.0 && math::abs(v) <= EXACT_LIMIT as f64) {
                        return None;
                    }
                    *slot = v as i64;
                }
                out
            }
            _ => return None,
        };
        if vals.iter().any(|v| v.abs() > EXACT_LIMIT) {
            return None;
        }
        Some(vals)
    }

    /// The order the function is tied to, for families defined relative to
    /// a specific graph order.
    pub fn context_n(&self) -> Option<usize> {
        match *self {
            DegreeFunction::ForgottenCoindex { n } => Some(n),
            _ => None,
        }
    }

    /// `(xi1, xi2)`, the coefficients of `n2` and `n3` in `H_f` after `n1`
    /// and `n4` are eliminated. Scaling `f` by a constant scales both.
    pub fn xi_pair(&self) -> Result<(f64, f64), DegFnError> {
        let [f1, f2, f3, f4] = self.values()?;
        Ok((f2 - (2.0 * f1 + f4) / 3.0, f3 - (f1 + 2.0 * f4) / 3.0))
    }

    /// Exact `(3 xi1, 3 xi2)` on the integer path.
    pub fn xi_thirds(&self) -> Option<(i64, i64)> {
        let [f1, f2, f3, f4] = self.exact_values()?;
        Some((3 * f2 - 2 * f1 - f4, 3 * f3 - f1 - 2 * f4))
    }

    /// Classifies the function against the two inequality chains. Any chain
    /// inequality that holds or fails by no more than `tolerance` makes the
    /// verdict [`CaseVerdict::Boundary`].
    pub fn classify(&self, tolerance: f64) -> Result<Classification, DegFnError> {
        let (xi1, xi2) = self.xi_pair()?;
        let min4 = |a: f64, b: f64, c: f64, d: f64| a.min(b).min(c).min(d);
        // Smallest margin by which the four CaseI (resp. CaseII) conditions
        // hold; negative when some condition fails.
        let slack_i = min4(-xi1, -xi2, xi1 - 2.0 * xi2, xi2 / 2.0 - xi1);
        let slack_ii = min4(xi1, xi2, xi1 - xi2 / 2.0, 2.0 * xi2 - xi1);
        let verdict = if slack_i > tolerance {
            CaseVerdict::CaseI
        } else if slack_ii > tolerance {
            CaseVerdict::CaseII
        } else if slack_i.max(slack_ii) >= -tolerance {
            CaseVerdict::Boundary
        } else {
            CaseVerdict::Neither
        };
        Ok(Classification { xi1, xi2, verdict })
    }

    /// The function scaled by `c`, materialized as a table.
    pub fn scaled(&self, c: f64) -> Result<DegreeFunction, DegFnError> {
        let [f1, f2, f3, f4] = self.values()?;
        Ok(DegreeFunction::CustomTable {
            values: [c * f1, c * f2, c * f3, c * f4],
        })
    }

    /// Parses the textual spec used by the CLI: `power:2`, `sei:2.0`,
    /// `sli:1`, `lnpi1:-1`, `lnpi2:0.5`, `fbar:11`, or
    /// `table:f1,f2,f3,f4`.
    pub fn parse(spec: &str) -> Result<Self, DegFnError> {
        let (tag, arg) = spec
            .split_once(':')
            .ok_or_else(|| DegFnError::ParseSpec(format!("missing ':' in {:?}", spec)))?;
        let float = |s: &str| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| DegFnError::ParseSpec(format!("bad number {:?}", s)))
        };
        let f = match tag {
            "power" => DegreeFunction::Power { alpha: float(arg)? },
            "sei" => DegreeFunction::SumExdeg { a: float(arg)? },
            "sli" => DegreeFunction::SumLodeg { a: float(arg)? },
            "lnpi1" => DegreeFunction::LnMultZagreb1 { a: float(arg)? },
            "lnpi2" => DegreeFunction::LnMultZagreb2 { a: float(arg)? },
            "fbar" => DegreeFunction::ForgottenCoindex {
                n: arg
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| DegFnError::ParseSpec(format!("bad order {:?}", arg)))?,
            },
            "table" => {
                let parts: Vec<&str> = arg.split(',').collect();
                if parts.len() != 4 {
                    return Err(DegFnError::ParseSpec(
                        "table needs exactly four comma-separated values".to_string(),
                    ));
                }
                let mut values = [0.0; 4];
                for (slot, part) in values.iter_mut().zip(parts) {
                    *slot = float(part)?;
                }
                DegreeFunction::CustomTable { values }
            }
            other => {
                return Err(DegFnError::ParseSpec(format!("unknown family {:?}", other)));
            }
        };
        f.validate()?;
        Ok(f)
    }

    /// The textual spec this function parses back from.
    pub fn describe(&self) -> String {
        match *self {
            DegreeFunction::Power { alpha } => format!("power:{}", alpha),
            DegreeFunction::SumExdeg { a } => format!("sei:{}", a),
            DegreeFunction::SumLodeg { a } => format!("sli:{}", a),
            DegreeFunction::LnMultZagreb1 { a } => format!("lnpi1:{}", a),
            DegreeFunction::LnMultZagreb2 { a } => format!("lnpi2:{}", a),
            DegreeFunction::ForgottenCoindex { n } => format!("fbar:{}", n),
            DegreeFunction::CustomTable { values } => format!(
                "table:{},{},{},{}",
                values[0], values[1], values[2], values[3]
            ),
        }
    }
}

/// Result of [`DegreeFunction::classify`].
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Classification {
    pub xi1: f64,
    pub xi2: f64,
    pub verdict: CaseVerdict,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CaseVerdict {
    /// Both coefficients negative and chained: `H_f` is bounded above.
    CaseI,
    /// Both coefficients positive and chained: `H_f` is bounded below.
    CaseII,
    /// Some chain inequality holds only within tolerance.
    Boundary,
    /// Some chain inequality fails outright.
    Neither,
}

impl fmt::Display for CaseVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseVerdict::CaseI => "CaseI",
            CaseVerdict::CaseII => "CaseII",
            CaseVerdict::Boundary => "Boundary",
            CaseVerdict::Neither => "Neither",
        })
    }
}

/// The parametric families with published closed-form bounds.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FunctionFamily {
    Power,
    SumExdeg,
    SumLodeg,
    LnMultZagreb1,
    LnMultZagreb2,
    ForgottenCoindex,
}

impl FunctionFamily {
    pub const ALL: [FunctionFamily; 6] = [
        FunctionFamily::Power,
        FunctionFamily::SumExdeg,
        FunctionFamily::SumLodeg,
        FunctionFamily::LnMultZagreb1,
        FunctionFamily::LnMultZagreb2,
        FunctionFamily::ForgottenCoindex,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            FunctionFamily::Power => "power",
            FunctionFamily::SumExdeg => "sei",
            FunctionFamily::SumLodeg => "sli",
            FunctionFamily::LnMultZagreb1 => "lnpi1",
            FunctionFamily::LnMultZagreb2 => "lnpi2",
            FunctionFamily::ForgottenCoindex => "fbar",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        FunctionFamily::ALL.into_iter().find(|f| f.tag() == tag)
    }

    /// The member of the family with the given parameter. The forgotten
    /// coindex is tied to the graph order, so it takes `n` and ignores
    /// `param`.
    pub fn instantiate(&self, param: f64, n: usize) -> DegreeFunction {
        match self {
            FunctionFamily::Power => DegreeFunction::Power { alpha: param },
            FunctionFamily::SumExdeg => DegreeFunction::SumExdeg { a: param },
            FunctionFamily::SumLodeg => DegreeFunction::SumLodeg { a: param },
            FunctionFamily::LnMultZagreb1 => DegreeFunction::LnMultZagreb1 { a: param },
            FunctionFamily::LnMultZagreb2 => DegreeFunction::LnMultZagreb2 { a: param },
            FunctionFamily::ForgottenCoindex => DegreeFunction::ForgottenCoindex { n },
        }
    }

    /// The verdict the closed-form bounds claim for this parameter, or
    /// `None` when the parameter falls outside every covered range. For
    /// the forgotten coindex the parameter is the graph order.
    ///
    /// This is written straight from the published parameter ranges,
    /// independent of the numeric classifier, so the two can be checked
    /// against each other.
    pub fn covered_range(&self, param: f64) -> Option<CaseVerdict> {
        match self {
            FunctionFamily::Power => {
                if param > 1.0 || param < 0.0 {
                    Some(CaseVerdict::CaseI)
                } else if param > 0.0 && param < 1.0 {
                    Some(CaseVerdict::CaseII)
                } else {
                    None
                }
            }
            FunctionFamily::SumExdeg => {
                if param > 1.0 || (param > 0.0 && param < 1.0 / 3.0) {
                    Some(CaseVerdict::CaseI)
                } else if param > 0.5 && param < 1.0 {
                    Some(CaseVerdict::CaseII)
                } else {
                    None
                }
            }
            FunctionFamily::SumLodeg => {
                if param > sum_lodeg_threshold() {
                    Some(CaseVerdict::CaseI)
                } else {
                    None
                }
            }
            FunctionFamily::LnMultZagreb1 => match param.partial_cmp(&0.0) {
                Some(core::cmp::Ordering::Less) => Some(CaseVerdict::CaseI),
                Some(core::cmp::Ordering::Greater) => Some(CaseVerdict::CaseII),
                _ => None,
            },
            FunctionFamily::LnMultZagreb2 => match param.partial_cmp(&0.0) {
                Some(core::cmp::Ordering::Greater) => Some(CaseVerdict::CaseI),
                Some(core::cmp::Ordering::Less) => Some(CaseVerdict::CaseII),
                _ => None,
            },
            FunctionFamily::ForgottenCoindex => {
                if math::fract(param) == 0.0 && param >= 11.0 {
                    Some(CaseVerdict::CaseI)
                } else {
                    None
                }
            }
        }
    }
}

impl fmt::Display for FunctionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// The sum lodeg parameter above which the function is CaseI:
/// `(ln 3 - ln 4) / (ln ln 2 - ln ln 3)`, about 0.6246.
pub fn sum_lodeg_threshold() -> f64 {
    (math::ln(3.0) - math::ln(4.0)) / (math::ln(math::ln(2.0)) - math::ln(math::ln(3.0)))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DegFnError {
    InvalidParameter(&'static str),
    /// Degree outside `1..=4`.
    DegreeOutOfDomain(usize),
    ParseSpec(String),
}

impl fmt::Display for DegFnError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegFnError::InvalidParameter(what) => f.write_str(what),
            DegFnError::DegreeOutOfDomain(x) => {
                write!(f, "degree {} outside the domain 1..=4", x)
            }
            DegFnError::ParseSpec(what) => write!(f, "bad function spec: {}", what),
        }
    }
}

impl core::error::Error for DegFnError {}
