//! Vertex-degree-function indices on chemical graphs.
//!
//! A *chemical graph* here is a simple connected graph whose maximum degree
//! is at most 4. For a function `f` defined on the degrees 1..=4, the index
//!
//! ```text
//! H_f(G) = sum over vertices v of f(deg v)
//! ```
//!
//! covers the first Zagreb index (`f(x) = x^2`), the general zeroth-order
//! Randić index (`f(x) = x^alpha`), the sum exdeg and sum lodeg indices, the
//! logarithms of the multiplicative Zagreb indices, the forgotten coindex,
//! and anything else given by a table of four values.
//!
//! The crate computes these indices, evaluates sharp bounds on them that
//! depend only on the order `n` and size `m` (with a correction term picked
//! by the residue of `2m - n` mod 3), constructs extremal graphs attaining
//! the bounds or proves none exists, and verifies every claim by exhaustive
//! isomorph-free enumeration at small orders.
//!
//! The crate is `no_std` (with `alloc`); enable the `libm` feature instead
//! of the default `std` feature for freestanding builds. File formats, the
//! command line interface, and the enumeration cache live in the companion
//! `vdfi-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("enable either the `std` feature or the `libm` feature");

extern crate alloc;

#[cfg(feature = "std")]
extern crate std;

pub mod bounds;
pub mod canon;
pub mod degfn;
pub mod enumerate;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod indices;
mod math;
pub mod verify;

pub use bounds::{closed_form_bound, hf_bound, residue, ti_sum_bound, BoundReport, Direction};
pub use canon::CanonicalCode;
pub use degfn::{CaseVerdict, Classification, DegreeFunction, FunctionFamily};
pub use enumerate::{enumerate_connected_chemical, Enumerator, GraphSource, MAX_ENUM_N};
pub use extremal::{construct_extremal, solve_counts, ExtremalSolution, InfeasibilityReason};
pub use graph::{ChemGraph, DegreeVector};
pub use indices::{gamma_f, h_f, ti_pair, IndexValue};
pub use verify::{gamma_separation, sweep, verify_bound_with, SweepConfig, VerificationReport};
