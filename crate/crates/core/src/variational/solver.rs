//! Grid-plus-golden minimization of `x1·y1 + x2·y2` on the level set
//! `P = 1 + δ`, restricted to the boundary families `y2 = 1` and `y1 = 1`.
//!
//! `G` uses `x1 = x2`, leaving one free coordinate per family. `F` keeps the
//! ratio `t = min(x1, x2) / max(x1, x2)` as a second coordinate and splits on
//! which of `x1`, `x2` is the larger, so `x1 ∧ x2 = t·X` is smooth in each
//! region. The larger coordinate `X` is always recovered by a root solve.

use serde::{Deserialize, Serialize};

use super::level::newton_level;
use super::search::{golden_min, LineMin};
use crate::error::SolveError;
use crate::poly::TailPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Objective tolerance, relative to `max(1, value)`.
    pub tol: f64,
    /// Level-constraint tolerance, relative to `1 + δ`.
    pub level_tol: f64,
    /// Points per free coordinate in the initial grid.
    pub grid: usize,
    /// Cap on coordinate sweeps in the two-dimensional refinement.
    pub max_sweeps: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self { tol: 1e-9, level_tol: 1e-12, grid: 1025, max_sweeps: 60 }
    }
}

/// Which `y` coordinate is pinned to 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Y2One,
    Y1One,
}

/// Which `x` coordinate is the larger one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    /// `x2 ≤ x1`.
    X1Major,
    /// `x1 ≤ x2`.
    X2Major,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branch {
    pub family: Family,
    /// `None` when `x1 = x2` is imposed.
    pub region: Option<Region>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x1: f64,
    pub x2: f64,
    pub y1: f64,
    pub y2: f64,
}

impl Point {
    pub fn objective(&self) -> f64 {
        self.x1 * self.y1 + self.x2 * self.y2
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VariationalResult {
    pub value: f64,
    pub argmin: Point,
    pub branch: Branch,
    /// Relative objective spread over the final refinement brackets.
    pub tol_achieved: f64,
    /// `|P(argmin) − (1+δ)| / (1+δ)`.
    pub level_residual: f64,
    /// Level residual within `level_tol`.
    pub feasible: bool,
}

/// A tail polynomial restricted to one family and region, as terms
/// `coeff · X^dx · y^dy · t^dt` in the larger `x`, the free `y` and the ratio.
#[derive(Debug, Clone)]
struct Slice {
    family: Family,
    region: Region,
    terms: Vec<(usize, usize, usize, f64)>,
    max_dx: usize,
    max_dt: usize,
}

impl Slice {
    fn new(p: &TailPolynomial, family: Family, region: Region) -> Self {
        let mut merged = std::collections::BTreeMap::new();
        for term in p.terms() {
            let [p1, p2, p3, q1, q2, q3] = term.exps.map(|e| e as usize);
            let dx = p1 + p2 + p3;
            let dt = match region {
                Region::X1Major => p2 + p3,
                Region::X2Major => p1 + p3,
            };
            let dy = match family {
                Family::Y2One => q1 + q3,
                Family::Y1One => q2 + q3,
            };
            *merged.entry((dx, dy, dt)).or_insert(0.0) += term.coeff as f64;
        }
        let terms: Vec<_> = merged.into_iter().map(|((dx, dy, dt), c)| (dx, dy, dt, c)).collect();
        Self {
            family,
            region,
            max_dx: terms.iter().map(|t| t.0).max().unwrap_or(0),
            max_dt: terms.iter().map(|t| t.2).max().unwrap_or(0),
            terms,
        }
    }

    fn row_len(&self) -> usize {
        self.max_dt + 1
    }

    /// Dense `[dx][dt]` coefficients with `y` substituted.
    fn fill_row(&self, y: f64, row: &mut [f64]) {
        row.fill(0.0);
        let w = self.row_len();
        for &(dx, dy, dt, c) in &self.terms {
            row[dx * w + dt] += c * y.powi(dy as i32);
        }
    }

    fn coeffs_at(&self, row: &[f64], t: f64, out: &mut [f64]) {
        let w = self.row_len();
        for (dx, o) in out.iter_mut().enumerate() {
            *o = row[dx * w..(dx + 1) * w].iter().rev().fold(0.0, |acc, &c| acc * t + c);
        }
    }

    /// `(x1·y1 + x2·y2) / X`.
    fn multiplier(&self, y: f64, t: f64) -> f64 {
        match (self.family, self.region) {
            (Family::Y2One, Region::X1Major) => y + t,
            (Family::Y2One, Region::X2Major) => t * y + 1.0,
            (Family::Y1One, Region::X1Major) => 1.0 + t * y,
            (Family::Y1One, Region::X2Major) => t + y,
        }
    }

    fn point(&self, y: f64, t: f64, x: f64) -> Point {
        let (x1, x2) = match self.region {
            Region::X1Major => (x, t * x),
            Region::X2Major => (t * x, x),
        };
        let (y1, y2) = match self.family {
            Family::Y2One => (y, 1.0),
            Family::Y1One => (1.0, y),
        };
        Point { x1, x2, y1, y2 }
    }
}

/// Evaluates the reduced objective with reusable buffers and a warm start.
struct Evaluator<'a> {
    slice: &'a Slice,
    target: f64,
    row: Vec<f64>,
    coeffs: Vec<f64>,
    row_y: f64,
    hint: f64,
}

impl<'a> Evaluator<'a> {
    fn new(slice: &'a Slice, target: f64) -> Self {
        Self {
            slice,
            target,
            row: vec![0.0; (slice.max_dx + 1) * slice.row_len()],
            coeffs: vec![0.0; slice.max_dx + 1],
            row_y: f64::NAN,
            hint: 1.0,
        }
    }

    /// Larger `x` on the level set, or `None` when the slice is constant.
    fn level_x(&mut self, y: f64, t: f64) -> Option<f64> {
        if y != self.row_y {
            self.slice.fill_row(y, &mut self.row);
            self.row_y = y;
        }
        self.slice.coeffs_at(&self.row, t, &mut self.coeffs);
        let x = newton_level(&self.coeffs, self.target, self.hint)?;
        self.hint = x;
        Some(x)
    }

    fn objective(&mut self, y: f64, t: f64) -> f64 {
        match self.level_x(y, t) {
            Some(x) => x * self.slice.multiplier(y, t),
            None => f64::INFINITY,
        }
    }
}

fn grid_coord(i: usize, n: usize) -> f64 {
    if i + 1 == n {
        1.0
    } else {
        i as f64 / (n - 1) as f64
    }
}

fn check_inputs(delta: f64, config: &SolverConfig) -> Result<f64, SolveError> {
    if !(delta > 0.0) {
        return Err(SolveError::NonPositiveDelta(delta));
    }
    assert!(config.grid >= 3, "solver grid needs at least 3 points");
    Ok(1.0 + delta)
}

struct Candidate {
    slice_index: usize,
    y: f64,
    t: f64,
    value: f64,
    spread: f64,
}

fn finish(
    p: &TailPolynomial,
    slices: &[Slice],
    best: Candidate,
    target: f64,
    config: &SolverConfig,
    fixed_ratio: bool,
) -> Result<VariationalResult, SolveError> {
    if !best.value.is_finite() {
        return Err(SolveError::Infeasible);
    }
    let slice = &slices[best.slice_index];
    let mut eval = Evaluator::new(slice, target);
    let x = eval.level_x(best.y, best.t).ok_or(SolveError::Infeasible)?;
    let argmin = slice.point(best.y, best.t, x);
    let level_residual = (p.eval(argmin.x1, argmin.x2, argmin.y1, argmin.y2) - target).abs() / target;
    Ok(VariationalResult {
        value: argmin.objective(),
        argmin,
        branch: Branch { family: slice.family, region: (!fixed_ratio).then_some(slice.region) },
        tol_achieved: best.spread,
        level_residual,
        feasible: level_residual <= config.level_tol,
    })
}

/// `G(H, δ)`: minimum of `x·(y1 + y2)` over `g(x, x, y1, y2) = 1 + δ` on both
/// boundary families.
pub fn solve_g(p: &TailPolynomial, delta: f64, config: &SolverConfig) -> Result<VariationalResult, SolveError> {
    let target = check_inputs(delta, config)?;
    let n = config.grid;
    let h = 1.0 / (n - 1) as f64;
    let slices = [Slice::new(p, Family::Y2One, Region::X1Major), Slice::new(p, Family::Y1One, Region::X1Major)];
    let mut best = Candidate { slice_index: 0, y: 1.0, t: 1.0, value: f64::INFINITY, spread: 0.0 };
    for (si, slice) in slices.iter().enumerate() {
        let mut eval = Evaluator::new(slice, target);
        // The root shrinks as y grows, so each warm start lies to its right.
        let values: Vec<f64> = (0..n).map(|i| eval.objective(grid_coord(i, n), 1.0)).collect();
        let grid_best = values.iter().cloned().fold(f64::INFINITY, f64::min);
        if !grid_best.is_finite() {
            continue;
        }
        // Refine every local grid minimum within 1% of the best one.
        let mut starts: Vec<usize> = (0..n)
            .filter(|&i| {
                let left = i == 0 || values[i] <= values[i - 1];
                let right = i + 1 == n || values[i] <= values[i + 1];
                left && right && values[i] <= grid_best * 1.01
            })
            .collect();
        starts.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        starts.truncate(4);
        for i in starts {
            let lo = (i as f64 - 1.0).max(0.0) * h;
            let hi = if i + 2 >= n { 1.0 } else { (i + 1) as f64 * h };
            let m: LineMin = golden_min(|y| eval.objective(y, 1.0), lo, hi, config.tol);
            if m.value < best.value {
                best = Candidate { slice_index: si, y: m.arg, t: 1.0, value: m.value, spread: m.spread };
            }
        }
    }
    finish(p, &slices, best, target, config, true)
}

/// `F(H, δ)`: minimum of `x1·y1 + x2·y2` over `f = 1 + δ` on both boundary
/// families, without assuming `x1 = x2`.
pub fn solve_f(p: &TailPolynomial, delta: f64, config: &SolverConfig) -> Result<VariationalResult, SolveError> {
    let target = check_inputs(delta, config)?;
    let slices: Vec<Slice> = [Family::Y2One, Family::Y1One]
        .into_iter()
        .flat_map(|fam| [Region::X1Major, Region::X2Major].map(|r| Slice::new(p, fam, r)))
        .collect();
    let mut best = Candidate { slice_index: 0, y: 1.0, t: 1.0, value: f64::INFINITY, spread: 0.0 };
    for (si, slice) in slices.iter().enumerate() {
        let Some(c) = refine_2d(slice, target, config) else {
            continue;
        };
        if c.value < best.value {
            best = Candidate { slice_index: si, ..c };
        }
    }
    finish(p, &slices, best, target, config, false)
}

/// Grid scan over `(y, t) ∈ [0,1]²` followed by coordinate-wise golden
/// sections, each sweep closed by a line search along the sweep's net move.
fn refine_2d(slice: &Slice, target: f64, config: &SolverConfig) -> Option<Candidate> {
    let n = config.grid;
    let h = 1.0 / (n - 1) as f64;
    let mut eval = Evaluator::new(slice, target);
    let (mut y, mut t, mut value) = (1.0, 1.0, f64::INFINITY);
    let mut row_hint = 1.0;
    for i in 0..n {
        let yi = grid_coord(i, n);
        // The root shrinks in both y and t: each row restarts from the
        // previous row's first root, which lies to the right.
        eval.hint = row_hint;
        for j in 0..n {
            let tj = grid_coord(j, n);
            let v = eval.objective(yi, tj);
            if j == 0 {
                row_hint = eval.hint;
            }
            if v < value {
                (y, t, value) = (yi, tj, v);
            }
        }
    }
    if !value.is_finite() {
        return None;
    }

    let xtol = config.tol;
    let mut spread: f64 = 0.0;
    for _ in 0..config.max_sweeps {
        let (y0, t0, v0) = (y, t, value);
        let m = golden_min(|s| eval.objective(s, t), (y - h).max(0.0), (y + h).min(1.0), xtol);
        if m.value < value {
            (y, value) = (m.arg, m.value);
        }
        spread = m.spread;
        let m = golden_min(|s| eval.objective(y, s), (t - h).max(0.0), (t + h).min(1.0), xtol);
        if m.value < value {
            (t, value) = (m.arg, m.value);
        }
        spread = spread.max(m.spread);

        let (dy, dt) = (y - y0, t - t0);
        if dy != 0.0 || dt != 0.0 {
            let (lo, hi) = box_range(y, t, dy, dt);
            let at = |s: f64| ((y + s * dy).clamp(0.0, 1.0), (t + s * dt).clamp(0.0, 1.0));
            let m = golden_min(
                |s| {
                    let (ys, ts) = at(s);
                    eval.objective(ys, ts)
                },
                lo,
                hi,
                xtol,
            );
            if m.value < value {
                (y, t) = at(m.arg);
                value = m.value;
            }
        }
        if v0 - value <= 0.1 * config.tol * value.max(1.0) {
            break;
        }
    }
    Some(Candidate { slice_index: 0, y, t, value, spread })
}

/// Range of `s ∈ [-2, 2]` keeping `(y, t) + s·(dy, dt)` inside the unit box.
fn box_range(y: f64, t: f64, dy: f64, dt: f64) -> (f64, f64) {
    let (mut lo, mut hi) = (-2.0f64, 2.0f64);
    for (c, d) in [(y, dy), (t, dt)] {
        if d > 0.0 {
            hi = hi.min((1.0 - c) / d);
            lo = lo.max(-c / d);
        } else if d < 0.0 {
            hi = hi.min(-c / d);
            lo = lo.max((1.0 - c) / d);
        }
    }
    (lo, hi.max(lo))
}
