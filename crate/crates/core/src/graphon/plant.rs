//! Convergence tables for the planted hub and clique constructions.

use serde::{Deserialize, Serialize};

use super::{clique_graphon, hub_from_argmin, ip_mass, t_step};
use crate::digraph::Digraph;
use crate::error::SimError;
use crate::variational::Point;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    Hub,
    Clique,
}

/// One row: `t_ratio = t(H, W) / p^{e(H)}` and
/// `mass_ratio = E[I_p(W)] / (p^Δ ln(1/p))`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlantRow {
    pub construction: Construction,
    pub p: f64,
    /// `Err` holds the reason the graphon could not be built at this `p`.
    pub values: Result<(f64, f64), String>,
}

impl PlantRow {
    pub fn t_ratio(&self) -> Option<f64> {
        self.values.as_ref().ok().map(|v| v.0)
    }

    pub fn mass_ratio(&self) -> Option<f64> {
        self.values.as_ref().ok().map(|v| v.1)
    }
}

fn ratios(h: &Digraph, w: Result<super::StepGraphon, SimError>, p: f64) -> Result<(f64, f64), String> {
    let w = w.map_err(|e| e.to_string())?;
    let t = t_step(h, &w).map_err(|e| e.to_string())?;
    let mass = ip_mass(&w, p).map_err(|e| e.to_string())?;
    let scale = p.powi(h.max_degree() as i32) * (1.0 / p).ln();
    Ok((t / p.powi(h.edge_count() as i32), mass / scale))
}

/// Hub rows at `argmin` for every `p`, followed by clique rows when
/// `with_clique` is set.
pub fn planting_table(h: &Digraph, argmin: &Point, delta: f64, ps: &[f64], with_clique: bool) -> Vec<PlantRow> {
    let deg = h.max_degree();
    let mut rows: Vec<PlantRow> = ps
        .iter()
        .map(|&p| PlantRow {
            construction: Construction::Hub,
            p,
            values: ratios(h, hub_from_argmin(argmin, p, deg), p),
        })
        .collect();
    if with_clique {
        rows.extend(ps.iter().map(|&p| PlantRow {
            construction: Construction::Clique,
            p,
            values: ratios(h, clique_graphon(delta, p, h.vertex_count(), deg), p),
        }));
    }
    rows
}
