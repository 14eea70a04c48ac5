//! Brute-force ground truth by exhaustive enumeration of initial states.
//!
//! Non-seed vertices are enumerated as a binary counter (ascending vertex id
//! is the least significant bit, Gnash = 0, Glory = 1) starting from
//! all-Gnash. Seed vertices are left Gnash in the enumerated state; forcing
//! pins them anyway. The first failing state in counter order is the witness.

use serde::Serialize;

use crate::dynamics::{sync_step, Opinion, State, TiePolicy};
use crate::error::{HhError, Result};
use crate::generators::attach_hub;
use crate::graph::{SeedSet, Tolerance, Topology, Weight, WeightedDigraph};

/// Largest vertex count the oracle accepts.
pub const MAX_ORACLE_VERTICES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Initial state (seeds shown as left in the enumeration, i.e. Gnash).
    #[serde(serialize_with = "ser_state")]
    pub state: State,
    /// Smallest vertex that is not Glory after one step.
    pub vertex: usize,
}

fn ser_state<S: serde::Serializer>(s: &State, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_str(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub converges_from_all_states: bool,
    pub witness: Option<Witness>,
    /// States stepped before stopping (all of them when converging).
    pub states_checked: u64,
}

fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_ORACLE_VERTICES {
        Err(HhError::Capacity {
            n,
            max: MAX_ORACLE_VERTICES,
        })
    } else {
        Ok(())
    }
}

/// Does one synchronous step reach all-Glory from every initial state?
pub fn exhaustive_one_step(
    g: &WeightedDigraph,
    seeds: &SeedSet,
    tau: &Tolerance,
    policy: TiePolicy,
) -> Result<OracleVerdict> {
    check_capacity(g.n())?;
    seeds.check_within(g.n())?;
    let free: Vec<usize> = (0..g.n()).filter(|&v| !seeds.contains(v)).collect();
    let total: u64 = 1 << free.len();
    for counter in 0..total {
        let mut s = State::all_gnash(g.n());
        for (bit, &v) in free.iter().enumerate() {
            if counter >> bit & 1 == 1 {
                s.set(v, Opinion::Glory);
            }
        }
        let next = sync_step(g, &s, seeds, tau, policy);
        let failing = next.gnash_vertices().next();
        if let Some(vertex) = failing {
            return Ok(OracleVerdict {
                converges_from_all_states: false,
                witness: Some(Witness { state: s, vertex }),
                states_checked: counter + 1,
            });
        }
    }
    Ok(OracleVerdict {
        converges_from_all_states: true,
        witness: None,
        states_checked: total,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Scan `W = 0, 1, ...` upward.
    Linear,
    /// Bisect, assuming success is monotone in `W`.
    Binary,
}

/// Smallest `W ≤ max_w` for which attaching a uniform hub of weight `W` to
/// `base` makes [`exhaustive_one_step`] succeed, or `None`.
pub fn oracle_threshold_search(
    base: &Topology,
    max_w: Weight,
    tau: &Tolerance,
    policy: TiePolicy,
    mode: SearchMode,
) -> Result<Option<Weight>> {
    check_capacity(base.n() + 1)?;
    let holds = |w: Weight| -> Result<bool> {
        let g = attach_hub(base, w)?;
        let h = SeedSet::hub_of(&g);
        Ok(exhaustive_one_step(&g, &h, tau, policy)?.converges_from_all_states)
    };
    match mode {
        SearchMode::Linear => {
            for w in 0..=max_w {
                if holds(w)? {
                    return Ok(Some(w));
                }
            }
            Ok(None)
        }
        SearchMode::Binary => {
            if !holds(max_w)? {
                return Ok(None);
            }
            // invariant: holds(hi), !holds(w) for all w < lo
            let (mut lo, mut hi) = (0, max_w);
            while lo < hi {
                let mid = lo + (hi - lo) / 2;
                if holds(mid)? {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            Ok(Some(hi))
        }
    }
}

/// Checks that the single all-Gnash initial state decides one-step
/// convergence exactly as the full enumeration does (TieGlory).
pub fn worst_case_is_all_gnash_check(g: &WeightedDigraph, seeds: &SeedSet, tau: &Tolerance) -> Result<bool> {
    let verdict = exhaustive_one_step(g, seeds, tau, TiePolicy::TieGlory)?;
    let from_gnash = sync_step(g, &State::all_gnash(g.n()), seeds, tau, TiePolicy::TieGlory).is_all_glory();
    Ok(from_gnash == verdict.converges_from_all_states)
}
