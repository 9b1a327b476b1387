//! End-to-end pipeline: core, independent sets, profiles with matching
//! weights, and the three tail polynomials.

use crate::core_sets::{enumerate_independent_sets, max_degree_core, MaxDegreeCore, DEFAULT_CORE_CAP};
use crate::digraph::{ClassificationFlags, Digraph};
use crate::error::{GraphError, SolveError};
use crate::matching::{directional_bounds, induced_bipartite};
use crate::poly::{build_f, build_fbar, build_g, TailPolynomial};
use crate::profile::{set_profile, SetProfile};
use crate::variational::{
    assemble_bounds, solve_f, solve_g, tightness_certificates, BoundsReport, SolverConfig, VariationalResult,
};

#[derive(Debug, Clone)]
pub struct Analysis {
    pub digraph: Digraph,
    pub flags: ClassificationFlags,
    pub core: MaxDegreeCore,
    /// One profile per independent set of the core, ∅ first.
    pub profiles: Vec<SetProfile>,
    pub f: TailPolynomial,
    pub g: TailPolynomial,
    pub fbar: TailPolynomial,
}

/// Both solver results together with the assembled bounds.
#[derive(Debug, Clone)]
pub struct BoundsOutcome {
    pub f: VariationalResult,
    pub g: VariationalResult,
    pub report: BoundsReport,
}

/// Fills `a` and `b` on each profile from the exact matching LPs.
pub fn fill_matching_bounds(d: &Digraph, core: &MaxDegreeCore, profiles: &mut [SetProfile]) -> Result<(), GraphError> {
    for p in profiles.iter_mut() {
        if p.set.is_empty() {
            p.a = Some(0);
            p.b = Some(0);
            continue;
        }
        let w = induced_bipartite(d, core, &p.set)?;
        // Only when Δ = 0: no arcs, nothing to match.
        if w.arcs.is_empty() {
            p.a = Some(0);
            p.b = Some(0);
            continue;
        }
        let counts = directional_bounds(&w)?.counts().expect("incidence LPs have integral optima");
        p.a = Some(counts.a as u32);
        p.b = Some(counts.b as u32);
    }
    Ok(())
}

impl Analysis {
    pub fn new(d: &Digraph) -> Result<Self, GraphError> {
        Self::with_cap(d, DEFAULT_CORE_CAP)
    }

    pub fn with_cap(d: &Digraph, cap: usize) -> Result<Self, GraphError> {
        let core = max_degree_core(d);
        let sets = enumerate_independent_sets(&core, cap)?;
        let mut profiles: Vec<SetProfile> = sets.iter().map(|s| set_profile(d, s)).collect();
        fill_matching_bounds(d, &core, &mut profiles)?;
        Ok(Self {
            f: build_f(&profiles),
            g: build_g(&profiles),
            fbar: build_fbar(&profiles),
            flags: d.classify(),
            digraph: d.clone(),
            core,
            profiles,
        })
    }

    pub fn max_degree(&self) -> usize {
        self.core.max_degree
    }

    /// Solves both variational problems at `delta` and assembles the bounds.
    pub fn bounds(&self, delta: f64, config: &SolverConfig) -> Result<BoundsOutcome, SolveError> {
        if !(delta > 0.0) {
            return Err(SolveError::NonPositiveDelta(delta));
        }
        let g = solve_g(&self.g, delta, config)?;
        let f = solve_f(&self.f, delta, config)?;
        let certificates = tightness_certificates(&self.profiles, &g);
        let report = assemble_bounds(&self.digraph, delta, &f, &g, &certificates, config.tol);
        Ok(BoundsOutcome { f, g, report })
    }
}
