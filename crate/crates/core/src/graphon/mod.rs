//! Step graphons, planted constructions, sampling and tail checks.

mod discrete;
mod entropy;
mod matrix;
mod plant;
mod step;
mod tail;

pub use discrete::{
    discrete_phi_upper, model_density, penalty_gradient, penalty_objective, DensityModel, PhiUpper, StartOutcome,
    DISCRETE_N_CAP, DISCRETE_V_CAP,
};
pub use entropy::ip;
pub use matrix::{hom_count, hom_density, sample_digraph, WeightedDigraphMatrix, GENERATOR, HOM_MAP_CAP};
pub use plant::{planting_table, Construction, PlantRow};
pub use step::{
    clique_graphon, clique_side, hub_graphon, ip_mass, t_step, StepGraphon, HUB_BLOCKS, STEP_BLOCK_CAP, STEP_VERTEX_CAP,
};
pub use tail::{
    binomial_neg_log_tail, binomial_tail_c2, mc_upper_tail, meets_threshold, wilson_interval, TailEstimate,
    TwoCycleTail,
};

use crate::variational::Point;

/// Hub graphon at a variational argmin. A hub whose `B` side is empty adds
/// nothing to the level equation, so it is dropped first.
pub fn hub_from_argmin(point: &Point, p: f64, max_degree: usize) -> Result<StepGraphon, crate::SimError> {
    let x1 = if point.y1 == 0.0 { 0.0 } else { point.x1 };
    let x2 = if point.y2 == 0.0 { 0.0 } else { point.x2 };
    hub_graphon(x1, x2, point.y1, point.y2, p, max_degree)
}
