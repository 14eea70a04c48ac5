#![allow(dead_code)]

use std::collections::BTreeMap;

use hh_core::{Opinion, SeedSet, State, Tolerance, WeightedDigraph};
use proptest::prelude::*;
use rand::Rng;

/// Random graph together with the raw edge triples it was built from, so
/// tests can recompute masses without going through the graph's own sums.
#[derive(Clone, Debug)]
pub struct RawGraph {
    pub n: usize,
    pub hub: usize,
    pub triples: Vec<(usize, usize, u64)>,
}

impl RawGraph {
    pub fn build(&self) -> WeightedDigraph {
        WeightedDigraph::from_edges(self.n, self.hub, self.triples.iter().copied()).unwrap()
    }

    /// Inbound mass of `v` from sources accepted by `pick`.
    pub fn mass_into(&self, v: usize, pick: impl Fn(usize) -> bool) -> u128 {
        self.triples
            .iter()
            .filter(|&&(u, t, _)| t == v && pick(u))
            .map(|&(_, _, w)| w as u128)
            .sum()
    }

    /// Accumulated weight per pair, zero pairs dropped.
    pub fn weight_map(&self) -> BTreeMap<(usize, usize), u64> {
        let mut m = BTreeMap::new();
        for &(u, v, w) in &self.triples {
            *m.entry((u, v)).or_insert(0) += w;
        }
        m.retain(|_, w| *w > 0);
        m
    }
}

pub fn arb_raw_graph(min_n: usize, max_n: usize, max_w: u64) -> impl Strategy<Value = RawGraph> {
    (min_n..=max_n).prop_flat_map(move |n| {
        (
            Just(n),
            0..n,
            prop::collection::vec((0..n, 0..n, 0..=max_w), 0..=(n * n)),
        )
            .prop_map(|(n, hub, triples)| RawGraph { n, hub, triples })
    })
}

pub fn arb_tolerance(n: usize, max_tau: u64) -> impl Strategy<Value = Tolerance> {
    prop::collection::vec(0..=max_tau, n).prop_map(|v| Tolerance::from_values(&v))
}

pub fn arb_state(n: usize) -> impl Strategy<Value = State> {
    prop::collection::vec(any::<bool>(), n)
        .prop_map(|bits| State::from_fn(bits.len(), |v| Opinion::from(bits[v])))
}

pub fn arb_seeds(n: usize) -> impl Strategy<Value = SeedSet> {
    prop::collection::btree_set(0..n, 1..=n).prop_map(|s| SeedSet::new(s).unwrap())
}

/// Graph, tolerance, state and seed set on the same vertex count.
pub fn arb_instance(
    max_n: usize,
    max_w: u64,
    max_tau: u64,
) -> impl Strategy<Value = (RawGraph, Tolerance, State, SeedSet)> {
    arb_raw_graph(2, max_n, max_w).prop_flat_map(move |raw| {
        let n = raw.n;
        (Just(raw), arb_tolerance(n, max_tau), arb_state(n), arb_seeds(n))
    })
}

/// Plain-rng random graph for fixed-count sweeps.
pub fn random_raw_graph<R: Rng>(rng: &mut R, min_n: usize, max_n: usize, max_w: u64) -> RawGraph {
    let n = rng.random_range(min_n..=max_n);
    let hub = rng.random_range(0..n);
    let density: f64 = rng.random_range(0.1..0.9);
    let mut triples = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if rng.random_bool(density) {
                triples.push((u, v, rng.random_range(1..=max_w)));
            }
        }
    }
    RawGraph { n, hub, triples }
}

pub fn random_tolerance<R: Rng>(rng: &mut R, n: usize, max_tau: u64) -> Tolerance {
    let v: Vec<u64> = (0..n).map(|_| rng.random_range(0..=max_tau)).collect();
    Tolerance::from_values(&v)
}

pub fn random_seeds<R: Rng>(rng: &mut R, n: usize) -> SeedSet {
    let size = rng.random_range(1..=n);
    let mut all: Vec<usize> = (0..n).collect();
    for i in 0..size {
        let j = rng.random_range(i..n);
        all.swap(i, j);
    }
    SeedSet::new(all[..size].iter().copied()).unwrap()
}

/// Brute-force one-step check written directly from the update rule:
/// every TieGlory-updated non-seed vertex must become Glory from every
/// initial assignment. Shares no code with the library's dynamics.
pub fn brute_one_step(raw: &RawGraph, seeds: &SeedSet, tau: &Tolerance) -> bool {
    let free: Vec<usize> = (0..raw.n).filter(|&v| !seeds.contains(v)).collect();
    for mask in 0u64..(1 << free.len()) {
        let mut glory = vec![false; raw.n];
        for (bit, &v) in free.iter().enumerate() {
            glory[v] = mask >> bit & 1 == 1;
        }
        for &h in seeds.members() {
            glory[h] = true;
        }
        for &v in &free {
            let g = raw.mass_into(v, |u| glory[u]);
            let b = raw.mass_into(v, |u| !glory[u]);
            if b > g + tau.get(v) as u128 {
                return false;
            }
        }
    }
    true
}
