//! The `bounds` report.

use serde::{Deserialize, Serialize};

use uptail::core_sets::DEFAULT_CORE_CAP;
use uptail::{Analysis, BoundsReport, ClassificationFlags, Digraph, SetProfile, SolverConfig, VariationalResult};

use crate::{CliError, TOOL_NAME, TOOL_VERSION};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

impl ToolInfo {
    pub fn current() -> Self {
        Self { name: TOOL_NAME.to_string(), version: TOOL_VERSION.to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSummary {
    /// File path or built-in name as given.
    pub source: String,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub flags: ClassificationFlags,
    pub edges: Vec<(usize, usize)>,
}

impl GraphSummary {
    pub fn new(source: &str, d: &Digraph) -> Self {
        Self {
            source: source.to_string(),
            n: d.vertex_count(),
            m: d.edge_count(),
            max_degree: d.max_degree(),
            flags: d.classify(),
            edges: d.edges().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub delta: f64,
    pub solver: SolverConfig,
    pub core_cap: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polynomials {
    pub f: String,
    pub g: String,
    pub fbar: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub tool: ToolInfo,
    pub graph: GraphSummary,
    pub config: RunConfig,
    pub independent_sets: usize,
    pub profiles: Vec<SetProfile>,
    pub polynomials: Polynomials,
    pub f: VariationalResult,
    pub g: VariationalResult,
    pub bounds: BoundsReport,
    /// The bounds pipeline is deterministic; kept for a uniform report shape.
    pub seeds: Vec<u64>,
}

pub fn analyze(source: &str, d: &Digraph, delta: f64, solver: SolverConfig) -> Result<AnalysisReport, CliError> {
    if d.max_degree() == 0 {
        return Err(CliError::Invalid("the digraph has no edges".into()));
    }
    let a = Analysis::new(d)?;
    let out = a.bounds(delta, &solver)?;
    Ok(AnalysisReport {
        tool: ToolInfo::current(),
        graph: GraphSummary::new(source, d),
        config: RunConfig { delta, solver, core_cap: DEFAULT_CORE_CAP },
        independent_sets: a.profiles.len(),
        profiles: a.profiles.clone(),
        polynomials: Polynomials { f: a.f.to_string(), g: a.g.to_string(), fbar: a.fbar.to_string() },
        f: out.f,
        g: out.g,
        bounds: out.report,
        seeds: Vec::new(),
    })
}

fn fmt_set(set: &[usize]) -> String {
    let inner: Vec<String> = set.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// Plain-text rendering; values are printed to the digits the tolerance supports.
pub fn render_text(r: &AnalysisReport) -> String {
    let digits = (-r.bounds.tol.log10()).ceil().max(1.0) as usize;
    let mut s = String::new();
    let g = &r.graph;
    s += &format!("graph {}: n = {}, m = {}, Δ = {}\n", g.source, g.n, g.m, g.max_degree);
    s += &format!("flags: {:?}\n", g.flags);
    s += &format!("independent sets of the core: {}\n", r.independent_sets);
    s += "  set            v+  v-  v±   A   B   a   b\n";
    for p in &r.profiles {
        s += &format!(
            "  {:<14} {:>2}  {:>2}  {:>2}  {:>2}  {:>2}  {:>2}  {:>2}\n",
            fmt_set(&p.set),
            p.v_plus,
            p.v_minus,
            p.v_pm,
            p.big_a,
            p.big_b,
            p.a.unwrap_or(0),
            p.b.unwrap_or(0)
        );
    }
    s += &format!("f    = {}\ng    = {}\nfbar = {}\n", r.polynomials.f, r.polynomials.g, r.polynomials.fbar);
    for (name, v) in [("F", &r.f), ("G", &r.g)] {
        let p = v.argmin;
        s += &format!(
            "{name} = {:.digits$} at (x1, x2, y1, y2) = ({:.6}, {:.6}, {:.6}, {:.6}), residual {:.1e}\n",
            v.value, p.x1, p.x2, p.y1, p.y2, v.level_residual
        );
    }
    let b = &r.bounds;
    if let Some(c) = b.clique_branch {
        s += &format!("clique branch = {c:.digits$}\n");
    }
    s += &format!("δ = {}: {:.digits$} ≤ Φ ≤ {:.digits$} (tol {:e})\n", b.delta, b.lower_bound, b.upper_bound, b.tol);
    s += &format!("verdict: {}\n", serde_json::to_value(b.tightness).unwrap().as_str().unwrap_or("?"));
    if !b.certificates.is_empty() {
        s += &format!("certificates: {:?}\n", b.certificates);
    }
    for w in &b.warnings {
        s += &format!("warning: {w}\n");
    }
    s
}
