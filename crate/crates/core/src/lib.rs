//! Upper-tail variational bounds for subgraph counts in directed
//! Erdős–Rényi graphs.
//!
//! The pipeline runs digraph → max-degree core → independent sets →
//! per-set profiles (with exact matching weights) → tail polynomials →
//! constrained minimization:
//!
//! ```
//! use uptail::{families, Analysis, SolverConfig};
//!
//! let triangle = families::transitive_triangle();
//! let analysis = Analysis::new(&triangle).unwrap();
//! let out = analysis.bounds(1.0, &SolverConfig::default()).unwrap();
//! assert!((out.report.upper_bound - 2.0 / 3.0).abs() < 1e-9);
//! assert!((out.report.lower_bound - 2.0 / 3.0).abs() < 1e-9);
//! ```
//!
//! The [`graphon`] module checks the answers against planted step graphons,
//! Monte Carlo tails and a small finite-n optimizer.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod core_sets;
pub mod digraph;
pub mod error;
pub mod families;
pub mod graphon;
pub mod matching;
pub mod poly;
pub mod profile;
pub mod variational;

pub use analysis::{Analysis, BoundsOutcome};
pub use digraph::{ClassificationFlags, DegreeRecord, Digraph};
pub use error::{GraphError, ParseError, SimError, SolveError};
pub use poly::TailPolynomial;
pub use profile::SetProfile;
pub use variational::{BoundsReport, SolverConfig, Tightness, VariationalResult};
