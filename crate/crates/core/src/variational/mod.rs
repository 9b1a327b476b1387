//! The variational problems `F(H, δ)` and `G(H, δ)` and the bounds built
//! from them.

mod level;
mod report;
mod search;
mod solver;

pub use level::{solve_level_x, solve_level_x_with, DEFAULT_LEVEL_TOL};
pub use report::{assemble_bounds, closed_form, tightness_certificates, BoundsReport, Certificate, Tightness};
pub use solver::{solve_f, solve_g, Branch, Family, Point, Region, SolverConfig, VariationalResult};
