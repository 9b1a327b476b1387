//! Final bounds, the clique branch and the `F = G` certificates.

use serde::{Deserialize, Serialize};

use super::solver::VariationalResult;
use crate::digraph::Digraph;
use crate::profile::SetProfile;

/// Conditions checked against the profiles and the `G` argmin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    /// `2a_S ≥ |S|` for every S: `y1 = 1` is optimal for `G`.
    OutWeightHalf,
    /// `2b_S ≥ |S|` for every S: `y2 = 1` is optimal for `G`.
    InWeightHalf,
    /// Both of the above: `G` is attained at `y1 = y2 = 1`.
    BothWeightsHalf,
    /// The computed `G` argmin has `y1 = y2 = 1`, where `f` and `g` agree.
    CornerArgmin,
    /// `a_S = A_S` for every S and the `G` argmin has `y2 = 1`.
    OutWeightMatchesOutNeighborhood,
    /// `b_S = B_S` for every S and the `G` argmin has `y1 = 1`.
    InWeightMatchesInNeighborhood,
    /// `f_H` and `g_H` have identical terms.
    IdenticalPolynomials,
}

impl Certificate {
    /// Whether the condition alone implies `F(H, δ) = G(H, δ)`.
    pub fn proves_equality(self) -> bool {
        !matches!(self, Certificate::OutWeightHalf | Certificate::InWeightHalf)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Tightness {
    /// An equality certificate fired and the bounds agree numerically.
    TightCertified,
    /// The bounds agree within `10·tol` with no certificate.
    TightNumerical,
    Gap,
    /// A solver result is infeasible or contradicts a certificate.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub delta: f64,
    pub f_value: f64,
    pub g_value: f64,
    /// `δ^{2/v(H)}`, present for regular H.
    pub clique_branch: Option<f64>,
    pub upper_bound: f64,
    pub lower_bound: f64,
    pub tightness: Tightness,
    pub certificates: Vec<Certificate>,
    pub warnings: Vec<String>,
    pub tol: f64,
}

fn all(profiles: &[SetProfile], pred: impl Fn(&SetProfile, u32, u32) -> bool) -> bool {
    profiles.iter().all(|p| {
        let a = p.a.expect("matching weights filled");
        let b = p.b.expect("matching weights filled");
        pred(p, a, b)
    })
}

/// Every listed condition that holds, in declaration order.
pub fn tightness_certificates(profiles: &[SetProfile], g: &VariationalResult) -> Vec<Certificate> {
    let out_half = all(profiles, |p, a, _| 2 * a >= p.size());
    let in_half = all(profiles, |p, _, b| 2 * b >= p.size());
    let out_eq = all(profiles, |p, a, _| a == p.big_a);
    let in_eq = all(profiles, |p, _, b| b == p.big_b);
    let (y1_one, y2_one) = (g.argmin.y1 == 1.0, g.argmin.y2 == 1.0);
    [
        (out_half, Certificate::OutWeightHalf),
        (in_half, Certificate::InWeightHalf),
        (out_half && in_half, Certificate::BothWeightsHalf),
        (y1_one && y2_one, Certificate::CornerArgmin),
        (out_eq && y2_one, Certificate::OutWeightMatchesOutNeighborhood),
        (in_eq && y1_one, Certificate::InWeightMatchesInNeighborhood),
        (out_eq && in_eq, Certificate::IdenticalPolynomials),
    ]
    .into_iter()
    .filter_map(|(fired, c)| fired.then_some(c))
    .collect()
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= 10.0 * tol * a.abs().max(b.abs()).max(1.0)
}

/// Upper bound `min(F, δ^{2/v})` for connected regular H, else `F`; lower
/// bound `min(G, δ^{2/v})` for regular H, else `G`.
pub fn assemble_bounds(
    d: &Digraph,
    delta: f64,
    f: &VariationalResult,
    g: &VariationalResult,
    certificates: &[Certificate],
    tol: f64,
) -> BoundsReport {
    let flags = d.classify();
    let clique_branch = flags.regular.then(|| delta.powf(2.0 / d.vertex_count() as f64));
    let upper_bound = match clique_branch {
        Some(c) if flags.connected => f.value.min(c),
        _ => f.value,
    };
    let lower_bound = clique_branch.map_or(g.value, |c| g.value.min(c));

    let certified = certificates.iter().any(|c| c.proves_equality());
    let clique_both = clique_branch.is_some_and(|c| upper_bound == c && lower_bound == c);
    let tightness = if !f.feasible || !g.feasible || (certified && !close(f.value, g.value, tol)) {
        Tightness::Unknown
    } else if close(upper_bound, lower_bound, tol) {
        if certified || clique_both {
            Tightness::TightCertified
        } else {
            Tightness::TightNumerical
        }
    } else {
        Tightness::Gap
    };

    let mut warnings = Vec::new();
    if d.max_degree() < 2 {
        warnings.push("max degree below 2: the lower-bound asymptotics assume Δ ≥ 2".to_string());
    }
    if !flags.oriented {
        warnings.push(
            "H not oriented (has a 2-cycle): the tail asymptotics identifying UT with Φ do not apply".to_string(),
        );
    }
    if !flags.connected && flags.regular {
        warnings.push("H regular but disconnected: clique branch used for the lower bound only".to_string());
    }

    BoundsReport {
        delta,
        f_value: f.value,
        g_value: g.value,
        clique_branch,
        upper_bound,
        lower_bound,
        tightness,
        certificates: certificates.to_vec(),
        warnings,
        tol,
    }
}

/// Known answers: `δ` for a one-way star, `2δ` for a star whose centre has
/// both in- and out-edges, `min(δ^{2/3}, 2δ/3)` for either directed triangle.
pub fn closed_form(d: &Digraph, delta: f64) -> Option<f64> {
    let flags = d.classify();
    if flags.is_star {
        let centre = (0..d.vertex_count()).find(|&v| d.degree(v).deg == d.max_degree())?;
        let deg = d.degree(centre);
        return Some(if deg.in_deg == 0 || deg.out_deg == 0 { delta } else { 2.0 * delta });
    }
    if d.vertex_count() == 3 && d.edge_count() == 3 && flags.oriented {
        return Some(delta.powf(2.0 / 3.0).min(2.0 * delta / 3.0));
    }
    None
}
