//! The `simulate` report.

use serde::{Deserialize, Serialize};

use uptail::graphon::{binomial_neg_log_tail, binomial_tail_c2, mc_upper_tail, TailEstimate, TwoCycleTail, GENERATOR};
use uptail::{families, Digraph};

use crate::report::{GraphSummary, ToolInfo};
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulateReport {
    pub tool: ToolInfo,
    pub graph: GraphSummary,
    pub n: usize,
    pub p: f64,
    pub delta: f64,
    pub samples: u64,
    pub seed: u64,
    pub generator: String,
    pub estimate: TailEstimate,
    /// Exact binomial tail and its large-n formula, for the 2-cycle.
    pub two_cycle: Option<TwoCycleTail>,
    /// Exact `−ln P` for a single edge, where the count is binomial.
    pub single_edge_exact: Option<f64>,
}

pub fn simulate(
    source: &str,
    d: &Digraph,
    n: usize,
    p: f64,
    delta: f64,
    samples: u64,
    seed: u64,
) -> Result<SimulateReport, CliError> {
    if !(delta > -1.0) {
        return Err(CliError::Invalid(format!("delta must exceed -1, got {delta}")));
    }
    let estimate = mc_upper_tail(d, n, p, delta, samples, seed)?;
    let two_cycle = (*d == families::two_cycle()).then(|| binomial_tail_c2(n as u64, p, delta));
    let single_edge_exact = (*d == families::single_edge()).then(|| {
        let target = (1.0 + delta) * p * (n * n) as f64;
        let k = (target - 1e-9 * target).ceil().max(0.0) as u64;
        binomial_neg_log_tail((n * (n - 1)) as u64, p, k)
    });
    Ok(SimulateReport {
        tool: ToolInfo::current(),
        graph: GraphSummary::new(source, d),
        n,
        p,
        delta,
        samples,
        seed,
        generator: GENERATOR.to_string(),
        estimate,
        two_cycle,
        single_edge_exact,
    })
}

pub fn render_text(r: &SimulateReport) -> String {
    let e = &r.estimate;
    let mut s = format!(
        "graph {}: n = {}, p = {}, δ = {}, samples = {}, seed = {} ({})\n",
        r.graph.source, r.n, r.p, r.delta, r.samples, r.seed, r.generator
    );
    s += &format!(
        "Monte Carlo: hits {}/{}, P in [{:.6e}, {:.6e}], -ln P = {:.6} ± {:.6}{}\n",
        e.hits,
        e.samples,
        e.ci.0,
        e.ci.1,
        e.neg_log_p,
        e.half_width,
        if e.one_sided { " (no hits: lower bound only)" } else { "" }
    );
    if let Some(c) = &r.two_cycle {
        s += &format!(
            "2-cycle exact: -ln P(Bin({}, p²) ≥ {}) = {:.12}; formula {:.12}; ratio {:.12}\n",
            c.pairs,
            c.threshold,
            c.exact,
            c.formula,
            c.ratio()
        );
    }
    if let Some(x) = r.single_edge_exact {
        s += &format!("single edge exact: -ln P = {x:.12}\n");
    }
    s
}
