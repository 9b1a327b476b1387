//! Worked examples with known answers, recomputed end to end.

use serde::{Deserialize, Serialize};

use uptail::{families, Analysis, BoundsOutcome, SolverConfig, Tightness};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExampleRow {
    pub name: String,
    /// Which worked example the expected value comes from.
    pub citation: String,
    pub graph: String,
    pub delta: f64,
    /// `F`, `G`, `upper`, `lower` or `y1` (the `G` argmin coordinate).
    pub quantity: String,
    pub computed: f64,
    pub expected: f64,
    pub diff: f64,
    /// Absolute tolerance on `diff`.
    pub tolerance: f64,
    pub verdict: Tightness,
    pub expected_verdict: Option<Tightness>,
    pub pass: bool,
}

struct Case<'a> {
    citation: &'a str,
    graph: &'a str,
    delta: f64,
    expected_verdict: Option<Tightness>,
}

fn solve(graph: &str, delta: f64, cfg: &SolverConfig) -> Result<BoundsOutcome, CliError> {
    let d = families::builtin(graph).ok_or_else(|| CliError::UnknownGraph(graph.to_string()))?;
    Ok(Analysis::new(&d)?.bounds(delta, cfg)?)
}

fn row(case: &Case, out: &BoundsOutcome, quantity: &str, expected: f64, tolerance: f64) -> ExampleRow {
    let computed = match quantity {
        "F" => out.f.value,
        "G" => out.g.value,
        "upper" => out.report.upper_bound,
        "lower" => out.report.lower_bound,
        "y1" => out.g.argmin.y1,
        other => unreachable!("unknown quantity {other}"),
    };
    let diff = (computed - expected).abs();
    let verdict = out.report.tightness;
    ExampleRow {
        name: format!("{} δ={} {}", case.graph, case.delta, quantity),
        citation: case.citation.to_string(),
        graph: case.graph.to_string(),
        delta: case.delta,
        quantity: quantity.to_string(),
        computed,
        expected,
        diff,
        tolerance,
        verdict,
        expected_verdict: case.expected_verdict,
        pass: diff <= tolerance && case.expected_verdict.is_none_or(|v| v == verdict),
    }
}

/// Every row, in a fixed order. Failing rows are reported, not raised.
pub fn example_rows(cfg: &SolverConfig) -> Result<Vec<ExampleRow>, CliError> {
    let mut rows = Vec::new();
    let tight = Some(Tightness::TightCertified);
    let agree = |v: f64| 10.0 * cfg.tol * v.max(1.0);

    for delta in [0.01, 1.0, 1000.0] {
        for (graph, factor) in [("out-star:3", 1.0), ("in-star:3", 1.0), ("mixed-star:3", 2.0)] {
            let case = Case {
                citation: "Stars: F = G = δ for one-way stars, 2δ with both directions at the centre",
                graph,
                delta,
                expected_verdict: None,
            };
            let out = solve(graph, delta, cfg)?;
            let want = factor * delta;
            for q in ["F", "G"] {
                rows.push(row(&case, &out, q, want, 1e-8 * want));
            }
        }
    }

    for delta in [0.5, 1.0, 3.375, 8.0] {
        for graph in ["transitive-triangle", "cyclic-triangle"] {
            let case = Case {
                citation: "Triangles: min(δ^(2/3), 2δ/3) for both orientations",
                graph,
                delta,
                expected_verdict: tight,
            };
            let out = solve(graph, delta, cfg)?;
            let want = delta.powf(2.0 / 3.0).min(2.0 * delta / 3.0);
            for q in ["upper", "lower"] {
                rows.push(row(&case, &out, q, want, 1e-6 * want));
            }
        }
    }

    for graph in ["cycle:3", "cycle:4", "cycle:5", "cycle:6", "two-cycle"] {
        let case = Case {
            citation: "Balanced digraphs: a, b ≥ |S|/2 forces y1 = y2 = 1 and F = G",
            graph,
            delta: 1.0,
            expected_verdict: tight,
        };
        let out = solve(graph, 1.0, cfg)?;
        rows.push(row(&case, &out, "F", out.g.value, agree(out.g.value)));
    }

    let case = Case {
        citation: "0 < y1 < 1: k = 3, δ = 100 gives y1 ≈ 0.691",
        graph: "shared-sink:3",
        delta: 100.0,
        expected_verdict: tight,
    };
    let out = solve(case.graph, case.delta, cfg)?;
    rows.push(row(&case, &out, "y1", 0.691, 0.005));
    rows.push(row(&case, &out, "F", out.g.value, agree(out.g.value)));

    let case = Case {
        citation: "Gap: k = 5, δ = 10000 gives F ≈ 7.283 and G ≈ 7.031",
        graph: "gap:5",
        delta: 10000.0,
        expected_verdict: Some(Tightness::Gap),
    };
    let out = solve(case.graph, case.delta, cfg)?;
    rows.push(row(&case, &out, "F", 7.283, 0.005));
    rows.push(row(&case, &out, "G", 7.031, 0.005));

    Ok(rows)
}

pub fn render_table(rows: &[ExampleRow]) -> String {
    let mut s = format!(
        "{:<38} {:>14} {:>14} {:>10} {:>10}  {}\n",
        "example", "computed", "expected", "|diff|", "tol", "result"
    );
    for r in rows {
        s += &format!(
            "{:<38} {:>14.9} {:>14.9} {:>10.2e} {:>10.2e}  {}\n",
            r.name,
            r.computed,
            r.expected,
            r.diff,
            r.tolerance,
            if r.pass { "pass" } else { "FAIL" }
        );
    }
    s
}
