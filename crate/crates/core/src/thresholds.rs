//! Closed-form one-step thresholds and worst-case bounds.
//!
//! For a uniform hub of weight `W`, one synchronous TieGlory step reaches
//! all-Glory from every initial state iff `W ≥ maxneed(τ)`, where
//! `maxneed(τ) = max_{v≠g} (rest_weight(v) − τ(v))` with truncation at zero.
//! With a seed set `H` the exact criterion is `hub_H(v) + τ(v) ≥ rest_H(v)` for
//! every `v ∉ H`.
//!
//! The bounds satisfy `maxneed ≤ maxrest ≤ pointwise ≤ classical`, where
//! `pointwise = max_{v≠g} indeg(v)·max_in(v)` and `classical` multiplies the
//! two global maxima (both taken over non-hub targets and non-hub sources).

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{HhError, Result};
use crate::graph::{Mass, SeedSet, Tolerance, Weight, WeightedDigraph};

fn require_non_hub(g: &WeightedDigraph) -> Result<()> {
    if g.n() < 2 {
        Err(HhError::NoNonHubVertices { n: g.n() })
    } else {
        Ok(())
    }
}

fn need(rest: Mass, tau: u64) -> Mass {
    rest.saturating_sub(tau as Mass)
}

/// Maximum rest weight over non-hub vertices.
pub fn max_rest(g: &WeightedDigraph) -> Result<Mass> {
    require_non_hub(g)?;
    Ok(g
        .non_hub_vertices()
        .map(|v| g.rest_weight_unchecked(v))
        .max()
        .unwrap_or(0))
}

/// `max_{v≠g} max(0, rest_weight(v) − τ(v))`.
pub fn max_need(g: &WeightedDigraph, tau: &Tolerance) -> Result<Mass> {
    require_non_hub(g)?;
    Ok(g
        .non_hub_vertices()
        .map(|v| need(g.rest_weight_unchecked(v), tau.get(v)))
        .max()
        .unwrap_or(0))
}

/// Exact one-step criterion for a hypothetical uniform hub weight `w`.
/// Existing hub edges in `g` are ignored.
pub fn uniform_one_step_holds(g: &WeightedDigraph, w: Weight, tau: &Tolerance) -> Result<bool> {
    Ok(w as Mass >= max_need(g, tau)?)
}

/// `hub_weight(v) + τ(v) ≥ rest_weight(v)` for every non-hub `v`, using the
/// hub edges actually present in `g`.
pub fn domination_holds(g: &WeightedDigraph, tau: &Tolerance) -> bool {
    g.non_hub_vertices().all(|v| {
        g.weight(g.hub(), v) as Mass + tau.get(v) as Mass >= g.rest_weight_unchecked(v)
    })
}

/// Exact one-step criterion under seeded forcing.
pub fn seeded_one_step_holds(g: &WeightedDigraph, seeds: &SeedSet, tau: &Tolerance) -> Result<bool> {
    seeds.check_within(g.n())?;
    Ok((0..g.n()).filter(|&v| !seeds.contains(v)).all(|v| {
        let (inside, outside) = g.seed_masses_unchecked(seeds, v);
        inside + tau.get(v) as Mass >= outside
    }))
}

pub fn pointwise_degmax_bound(g: &WeightedDigraph) -> Result<Mass> {
    require_non_hub(g)?;
    Ok(g
        .non_hub_vertices()
        .map(|v| {
            let (deg, max_in) = g.nonhub_indeg_and_maxin_unchecked(v);
            deg as Mass * max_in as Mass
        })
        .max()
        .unwrap_or(0))
}

pub fn classical_bound(g: &WeightedDigraph) -> Result<Mass> {
    require_non_hub(g)?;
    let (deg, wmax) = g
        .non_hub_vertices()
        .map(|v| g.nonhub_indeg_and_maxin_unchecked(v))
        .fold((0, 0), |(d, m), (deg, max_in)| (d.max(deg), m.max(max_in)));
    Ok(deg as Mass * wmax as Mass)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodeThreshold {
    pub vertex: usize,
    pub rest_weight: Mass,
    pub tolerance: u64,
    pub need: Mass,
    pub indeg: usize,
    pub max_in: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdReport {
    pub maxrest: Mass,
    pub maxneed: Mass,
    pub pointwise_bound: Mass,
    pub classical_bound: Mass,
    pub per_node: Vec<NodeThreshold>,
}

impl ThresholdReport {
    /// `classical / pointwise` when the division is exact, `None` otherwise
    /// or when the pointwise bound is zero.
    pub fn classical_ratio(&self) -> Option<Mass> {
        (self.pointwise_bound != 0 && self.classical_bound.is_multiple_of(self.pointwise_bound))
            .then(|| self.classical_bound / self.pointwise_bound)
    }

    pub fn chain_holds(&self) -> bool {
        self.maxneed <= self.maxrest
            && self.maxrest <= self.pointwise_bound
            && self.pointwise_bound <= self.classical_bound
    }

    /// Flat `key=value` block, one quantity per line.
    pub fn to_kv_block(&self) -> String {
        let mut out = String::new();
        writeln!(out, "maxrest={}", self.maxrest).unwrap();
        writeln!(out, "maxneed={}", self.maxneed).unwrap();
        writeln!(out, "pointwise_bound={}", self.pointwise_bound).unwrap();
        writeln!(out, "classical_bound={}", self.classical_bound).unwrap();
        match self.classical_ratio() {
            Some(r) => writeln!(out, "classical_over_pointwise={r}").unwrap(),
            None if self.pointwise_bound == 0 => {
                writeln!(out, "classical_over_pointwise=NA").unwrap()
            }
            None => writeln!(
                out,
                "classical_over_pointwise={:.6}",
                self.classical_bound as f64 / self.pointwise_bound as f64
            )
            .unwrap(),
        }
        out
    }
}

pub fn threshold_report(g: &WeightedDigraph, tau: &Tolerance) -> Result<ThresholdReport> {
    require_non_hub(g)?;
    let per_node: Vec<NodeThreshold> = g
        .non_hub_vertices()
        .map(|v| {
            let rest_weight = g.rest_weight_unchecked(v);
            let (indeg, max_in) = g.nonhub_indeg_and_maxin_unchecked(v);
            NodeThreshold {
                vertex: v,
                rest_weight,
                tolerance: tau.get(v),
                need: need(rest_weight, tau.get(v)),
                indeg,
                max_in,
            }
        })
        .collect();
    Ok(ThresholdReport {
        maxrest: max_rest(g)?,
        maxneed: max_need(g, tau)?,
        pointwise_bound: pointwise_degmax_bound(g)?,
        classical_bound: classical_bound(g)?,
        per_node,
    })
}

/// Checks `max_need(τ_hi) ≤ max_need(τ_lo)`. Errors unless `τ_hi ≥ τ_lo`
/// pointwise on every vertex of `g`.
pub fn tolerance_monotonicity_check(
    g: &WeightedDigraph,
    tau_lo: &Tolerance,
    tau_hi: &Tolerance,
) -> Result<bool> {
    if let Some(v) = (0..g.n()).find(|&v| tau_hi.get(v) < tau_lo.get(v)) {
        return Err(HhError::ToleranceNotDominating {
            vertex: v,
            tau_base: tau_lo.get(v),
            tau_new: tau_hi.get(v),
        });
    }
    Ok(max_need(g, tau_hi)? <= max_need(g, tau_lo)?)
}
