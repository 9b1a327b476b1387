//! Bipartite witnesses of independent sets, matchings, vertex covers and the
//! directional matching weights `a_S`, `b_S`.

mod bounds;
mod cardinality;
mod simplex;
mod witness;

pub use bounds::{
    brute_force_directional_bounds, directional_bounds, max_fractional_matching_value, DirectionalBounds,
    DirectionalCounts, FractionalMatching, BRUTE_FORCE_ARC_CAP,
};
pub use cardinality::{max_matching, min_vertex_cover, VertexCover};
pub use witness::{induced_bipartite, Arc, ArcDir, BipartiteWitness};
