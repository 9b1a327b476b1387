//! The `plant-verify` convergence table.

use serde::{Deserialize, Serialize};

use uptail::graphon::{planting_table, Construction, GENERATOR};
use uptail::{Analysis, Digraph, SolverConfig};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlantCsvRow {
    pub construction: Construction,
    pub p: f64,
    pub t_ratio: Option<f64>,
    pub mass_ratio: Option<f64>,
    /// Limit of `t_ratio`: `1 + δ`.
    pub t_limit: f64,
    /// Limit of `mass_ratio`: `F` for the hub, `δ^(2/v)` for the clique.
    pub mass_limit: f64,
    /// `ok`, or why the construction does not fit at this `p`.
    pub status: String,
}

/// Hub rows at the `F` argmin; clique rows only for regular H.
pub fn plant_rows(d: &Digraph, delta: f64, ps: &[f64], cfg: &SolverConfig) -> Result<Vec<PlantCsvRow>, CliError> {
    if d.max_degree() == 0 {
        return Err(CliError::Invalid("the digraph has no edges".into()));
    }
    let a = Analysis::new(d)?;
    let out = a.bounds(delta, cfg)?;
    let regular = a.flags.regular;
    let clique_limit = delta.powf(2.0 / d.vertex_count() as f64);
    Ok(planting_table(d, &out.f.argmin, delta, ps, regular)
        .into_iter()
        .map(|r| PlantCsvRow {
            construction: r.construction,
            p: r.p,
            t_ratio: r.t_ratio(),
            mass_ratio: r.mass_ratio(),
            t_limit: 1.0 + delta,
            mass_limit: match r.construction {
                Construction::Hub => out.f.value,
                Construction::Clique => clique_limit,
            },
            status: r.values.err().unwrap_or_else(|| "ok".into()),
        })
        .collect())
}

/// CSV with a `#` comment line naming the graph, δ and generator.
pub fn render_csv(source: &str, delta: f64, rows: &[PlantCsvRow]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| CliError::Invalid(e.to_string()))?;
    }
    let body =
        String::from_utf8(w.into_inner().map_err(|e| CliError::Invalid(e.to_string()))?).expect("csv output is utf-8");
    Ok(format!("# graph={source} delta={delta} generator={GENERATOR} seed=none\n{body}"))
}
