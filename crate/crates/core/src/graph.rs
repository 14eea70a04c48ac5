//! Weighted digraphs with a designated hub, plus the inbound-mass
//! decompositions (hub vs. rest, seed set vs. outside) used throughout.
//!
//! Weights are `u64`; every inbound sum is accumulated as a [`Mass`] (`u128`),
//! which cannot overflow for any graph that fits in memory.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{check_vertex, HhError, Result};

/// A single edge weight. Zero means "no edge" and is never stored.
pub type Weight = u64;

/// Sum of edge weights (and tolerances) into one vertex.
pub type Mass = u128;

/// A hubless weighted digraph on vertices `0..n`.
///
/// This is what the generators produce before a hub or seed set is attached.
/// Inbound edges are kept per target, sorted by source.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Topology {
    inbound: Vec<Vec<(usize, Weight)>>,
}

impl Topology {
    pub fn empty(n: usize) -> Self {
        Topology {
            inbound: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.inbound.len()
    }

    /// Adds `w` to the weight of `(u, v)`. Zero is a no-op.
    pub fn add_weight(&mut self, u: usize, v: usize, w: Weight) -> Result<()> {
        let n = self.n();
        check_vertex(u, n)?;
        check_vertex(v, n)?;
        if w == 0 {
            return Ok(());
        }
        let row = &mut self.inbound[v];
        match row.binary_search_by_key(&u, |&(src, _)| src) {
            Ok(i) => {
                row[i].1 = row[i]
                    .1
                    .checked_add(w)
                    .ok_or(HhError::WeightOverflow { u, v })?;
            }
            Err(i) => row.insert(i, (u, w)),
        }
        Ok(())
    }

    /// Appends a fresh isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.inbound.push(Vec::new());
        self.inbound.len() - 1
    }

    /// `w(u, v)`, 0 for absent pairs. Out-of-range ids also read as 0.
    pub fn weight(&self, u: usize, v: usize) -> Weight {
        self.inbound
            .get(v)
            .and_then(|row| {
                row.binary_search_by_key(&u, |&(src, _)| src)
                    .ok()
                    .map(|i| row[i].1)
            })
            .unwrap_or(0)
    }

    /// Inbound edges of `v` as `(source, weight)`, sorted by source.
    pub fn in_edges(&self, v: usize) -> &[(usize, Weight)] {
        &self.inbound[v]
    }

    pub fn in_mass(&self, v: usize) -> Mass {
        self.inbound[v].iter().map(|&(_, w)| w as Mass).sum()
    }

    /// All stored edges as `(u, v, w)`, sorted by `(u, v)`.
    pub fn edges(&self) -> Vec<(usize, usize, Weight)> {
        let mut out: Vec<_> = self
            .inbound
            .iter()
            .enumerate()
            .flat_map(|(v, row)| row.iter().map(move |&(u, w)| (u, v, w)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn edge_count(&self) -> usize {
        self.inbound.iter().map(Vec::len).sum()
    }
}

/// Immutable weighted digraph with a designated hub `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedDigraph {
    topology: Topology,
    hub: usize,
}

impl WeightedDigraph {
    pub fn new(topology: Topology, hub: usize) -> Result<Self> {
        check_vertex(hub, topology.n())?;
        Ok(WeightedDigraph { topology, hub })
    }

    /// Builds a graph from `(u, v, w)` triples. Repeated pairs accumulate and
    /// zero weights are dropped.
    pub fn from_edges<I>(n: usize, hub: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Weight)>,
    {
        let mut topology = Topology::empty(n);
        for (u, v, w) in edges {
            topology.add_weight(u, v, w)?;
        }
        Self::new(topology, hub)
    }

    pub fn n(&self) -> usize {
        self.topology.n()
    }

    pub fn hub(&self) -> usize {
        self.hub
    }

    pub fn topology(&self) -> &Topology {
        &self.topology
    }

    pub fn into_topology(self) -> Topology {
        self.topology
    }

    pub fn weight(&self, u: usize, v: usize) -> Weight {
        self.topology.weight(u, v)
    }

    pub fn in_edges(&self, v: usize) -> &[(usize, Weight)] {
        self.topology.in_edges(v)
    }

    pub fn edges(&self) -> Vec<(usize, usize, Weight)> {
        self.topology.edges()
    }

    /// Every vertex except the hub, ascending.
    pub fn non_hub_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(move |&v| v != self.hub)
    }

    /// `Σ_u w(u, v)`, self-loops and the hub included.
    pub fn total_in(&self, v: usize) -> Result<Mass> {
        check_vertex(v, self.n())?;
        Ok(self.topology.in_mass(v))
    }

    /// `w(g, v)`.
    pub fn hub_weight(&self, v: usize) -> Result<Mass> {
        check_vertex(v, self.n())?;
        Ok(self.weight(self.hub, v) as Mass)
    }

    /// `Σ_{u ≠ g} w(u, v)`.
    pub fn rest_weight(&self, v: usize) -> Result<Mass> {
        check_vertex(v, self.n())?;
        Ok(self.rest_weight_unchecked(v))
    }

    pub(crate) fn rest_weight_unchecked(&self, v: usize) -> Mass {
        self.in_edges(v)
            .iter()
            .filter(|&&(u, _)| u != self.hub)
            .map(|&(_, w)| w as Mass)
            .sum()
    }

    /// Inbound mass from inside and from outside the seed set: `(hub_H, rest_H)`.
    pub fn seed_masses(&self, seeds: &SeedSet, v: usize) -> Result<(Mass, Mass)> {
        check_vertex(v, self.n())?;
        seeds.check_within(self.n())?;
        Ok(self.seed_masses_unchecked(seeds, v))
    }

    pub(crate) fn seed_masses_unchecked(&self, seeds: &SeedSet, v: usize) -> (Mass, Mass) {
        self.in_edges(v)
            .iter()
            .fold((0, 0), |(inside, outside), &(u, w)| {
                if seeds.contains(u) {
                    (inside + w as Mass, outside)
                } else {
                    (inside, outside + w as Mass)
                }
            })
    }

    /// Number of non-hub in-neighbours of `v` and the largest such inbound weight.
    pub fn nonhub_indeg_and_maxin(&self, v: usize) -> Result<(usize, Weight)> {
        check_vertex(v, self.n())?;
        Ok(self.nonhub_indeg_and_maxin_unchecked(v))
    }

    pub(crate) fn nonhub_indeg_and_maxin_unchecked(&self, v: usize) -> (usize, Weight) {
        self.in_edges(v)
            .iter()
            .filter(|&&(u, _)| u != self.hub)
            .fold((0, 0), |(deg, max), &(_, w)| (deg + 1, max.max(w)))
    }
}

/// Per-vertex nonnegative slack `τ(v)`. Vertices without an explicit value
/// take the default (0 unless built with [`Tolerance::uniform`]).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tolerance {
    default: u64,
    overrides: BTreeMap<usize, u64>,
}

impl Tolerance {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn uniform(tau: u64) -> Self {
        Tolerance {
            default: tau,
            overrides: BTreeMap::new(),
        }
    }

    /// Tolerance taking `values[v]` at each listed vertex and 0 elsewhere.
    pub fn from_values(values: &[u64]) -> Self {
        let mut t = Self::zero();
        for (v, &tau) in values.iter().enumerate() {
            t.set(v, tau);
        }
        t
    }

    pub fn set(&mut self, v: usize, tau: u64) {
        if tau == self.default {
            self.overrides.remove(&v);
        } else {
            self.overrides.insert(v, tau);
        }
    }

    pub fn get(&self, v: usize) -> u64 {
        self.overrides.get(&v).copied().unwrap_or(self.default)
    }

    /// Dense view over `0..n`.
    pub fn to_vec(&self, n: usize) -> Vec<u64> {
        (0..n).map(|v| self.get(v)).collect()
    }

    /// Pointwise `self + delta`.
    pub fn shifted(&self, delta: u64) -> Self {
        Tolerance {
            default: self.default.saturating_add(delta),
            overrides: self
                .overrides
                .iter()
                .map(|(&v, &t)| (v, t.saturating_add(delta)))
                .collect(),
        }
    }
}

/// Nonempty set `H` of vertices pinned to Glory.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeedSet {
    members: Vec<usize>,
}

impl SeedSet {
    pub fn new<I: IntoIterator<Item = usize>>(members: I) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(HhError::EmptySeedSet);
        }
        Ok(SeedSet { members })
    }

    /// The single-hub seed set `{g}`.
    pub fn hub_of(graph: &WeightedDigraph) -> Self {
        SeedSet {
            members: vec![graph.hub()],
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Errors if any member is not a vertex of an `n`-vertex graph.
    pub fn check_within(&self, n: usize) -> Result<()> {
        match self.members.last() {
            Some(&max) => check_vertex(max, n),
            None => Err(HhError::EmptySeedSet),
        }
    }
}
