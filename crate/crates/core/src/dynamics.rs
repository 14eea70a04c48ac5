//! Update semantics: seed forcing, Glory/Gnash scores, tie policies,
//! synchronous steps and sequential schedules.
//!
//! Every function here is pure. Passing a state whose length differs from the
//! graph's vertex count, or a vertex id out of range, panics.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{check_vertex, HhError, Result};
use crate::graph::{Mass, SeedSet, Tolerance, WeightedDigraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Opinion {
    Gnash,
    Glory,
}

impl Opinion {
    pub fn is_glory(self) -> bool {
        self == Opinion::Glory
    }

    pub fn symbol(self) -> char {
        match self {
            Opinion::Glory => 'G',
            Opinion::Gnash => 'N',
        }
    }
}

impl From<bool> for Opinion {
    fn from(glory: bool) -> Self {
        if glory {
            Opinion::Glory
        } else {
            Opinion::Gnash
        }
    }
}

/// Total assignment of vertices to Glory/Gnash.
///
/// Displays and parses as a string of `G`/`N` indexed by vertex id.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct State {
    glory: Vec<bool>,
}

impl State {
    pub fn all_gnash(n: usize) -> Self {
        State {
            glory: vec![false; n],
        }
    }

    pub fn all_glory(n: usize) -> Self {
        State {
            glory: vec![true; n],
        }
    }

    pub fn from_fn(n: usize, f: impl FnMut(usize) -> Opinion) -> Self {
        State {
            glory: (0..n).map(f).map(Opinion::is_glory).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.glory.len()
    }

    pub fn is_empty(&self) -> bool {
        self.glory.is_empty()
    }

    pub fn get(&self, v: usize) -> Opinion {
        self.glory[v].into()
    }

    pub fn is_glory(&self, v: usize) -> bool {
        self.glory[v]
    }

    pub fn set(&mut self, v: usize, opinion: Opinion) {
        self.glory[v] = opinion.is_glory();
    }

    pub fn glory_count(&self) -> usize {
        self.glory.iter().filter(|&&g| g).count()
    }

    pub fn is_all_glory(&self) -> bool {
        self.glory.iter().all(|&g| g)
    }

    /// Vertices that are not Glory, ascending.
    pub fn gnash_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.glory
            .iter()
            .enumerate()
            .filter(|&(_, &g)| !g)
            .map(|(v, _)| v)
    }

    /// True iff every Glory vertex of `other` is also Glory here.
    pub fn glory_superset_of(&self, other: &State) -> bool {
        self.len() == other.len() && self.glory.iter().zip(&other.glory).all(|(&a, &b)| a || !b)
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.glory
            .iter()
            .try_for_each(|&g| write!(f, "{}", Opinion::from(g).symbol()))
    }
}

impl FromStr for State {
    type Err = HhError;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'G' => Ok(true),
                'N' => Ok(false),
                other => Err(HhError::InvalidParameter(format!(
                    "state literal may only contain `G` or `N`, found `{other}`"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(|glory| State { glory })
    }
}

/// How a vertex resolves an exact tie between Glory and Gnash pressure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TiePolicy {
    TieGlory,
    TieGnash,
    TieStay,
}

impl TiePolicy {
    pub const ALL: [TiePolicy; 3] = [TiePolicy::TieGlory, TiePolicy::TieGnash, TiePolicy::TieStay];
}

impl fmt::Display for TiePolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TiePolicy::TieGlory => "glory",
            TiePolicy::TieGnash => "gnash",
            TiePolicy::TieStay => "stay",
        })
    }
}

impl FromStr for TiePolicy {
    type Err = HhError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "glory" | "tieglory" => Ok(TiePolicy::TieGlory),
            "gnash" | "tiegnash" => Ok(TiePolicy::TieGnash),
            "stay" | "tiestay" => Ok(TiePolicy::TieStay),
            other => Err(HhError::InvalidParameter(format!(
                "unknown tie policy `{other}` (expected glory, gnash or stay)"
            ))),
        }
    }
}

/// Finite ordered list of vertex visits for a sequential sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Schedule {
    visits: Vec<usize>,
}

impl Schedule {
    pub fn new(visits: Vec<usize>, n: usize) -> Result<Self> {
        for &v in &visits {
            check_vertex(v, n)?;
        }
        Ok(Schedule { visits })
    }

    /// Parses a comma-separated list of vertex ids. The empty string is the
    /// empty schedule.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Schedule::default());
        }
        let visits = text
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|_| {
                    HhError::InvalidParameter(format!("invalid schedule entry `{}`", tok.trim()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Schedule::new(visits, n)
    }

    pub fn visits(&self) -> &[usize] {
        &self.visits
    }
}

impl fmt::Display for Schedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.visits.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Weighted inbound pressure on one vertex after forcing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Scores {
    pub glory: Mass,
    pub gnash: Mass,
}

/// `s` with every seed set to Glory.
pub fn force_seed(s: &State, seeds: &SeedSet) -> State {
    let mut out = s.clone();
    for &h in seeds.members() {
        out.glory[h] = true;
    }
    out
}

/// Scores of `v` against an already-forced state.
fn scores_forced(g: &WeightedDigraph, forced: &State, v: usize) -> Scores {
    g.in_edges(v)
        .iter()
        .fold(Scores { glory: 0, gnash: 0 }, |acc, &(u, w)| {
            if forced.glory[u] {
                Scores {
                    glory: acc.glory + w as Mass,
                    ..acc
                }
            } else {
                Scores {
                    gnash: acc.gnash + w as Mass,
                    ..acc
                }
            }
        })
}

/// Glory and Gnash inbound scores of `v` after forcing the seeds.
pub fn scores(g: &WeightedDigraph, s: &State, seeds: &SeedSet, v: usize) -> Scores {
    assert_eq!(s.len(), g.n(), "state length must match vertex count");
    scores_forced(g, &force_seed(s, seeds), v)
}

/// Tie-policy decision on raw pressures. `current` is the pre-forcing state of
/// the vertex, consulted only by `TieStay` on an exact tie.
pub fn decide(policy: TiePolicy, glory_side: Mass, gnash_side: Mass, current: Opinion) -> Opinion {
    use std::cmp::Ordering::*;
    match (policy, gnash_side.cmp(&glory_side)) {
        (_, Less) => Opinion::Glory,
        (_, Greater) => Opinion::Gnash,
        (TiePolicy::TieGlory, Equal) => Opinion::Glory,
        (TiePolicy::TieGnash, Equal) => Opinion::Gnash,
        (TiePolicy::TieStay, Equal) => current,
    }
}

fn next_state_forced(
    g: &WeightedDigraph,
    original: &State,
    forced: &State,
    seeds: &SeedSet,
    tau: &Tolerance,
    policy: TiePolicy,
    v: usize,
) -> Opinion {
    if seeds.contains(v) {
        return Opinion::Glory;
    }
    let sc = scores_forced(g, forced, v);
    decide(policy, sc.glory + tau.get(v) as Mass, sc.gnash, original.get(v))
}

/// One-vertex update: seeds are Glory; otherwise compare
/// `T = score_G + τ(v)` against `R = score_N` under `policy`.
pub fn next_state(
    g: &WeightedDigraph,
    s: &State,
    seeds: &SeedSet,
    tau: &Tolerance,
    policy: TiePolicy,
    v: usize,
) -> Opinion {
    assert_eq!(s.len(), g.n(), "state length must match vertex count");
    next_state_forced(g, s, &force_seed(s, seeds), seeds, tau, policy, v)
}

/// Single-hub TieGlory update in majority form: Glory iff
/// `2·score_G + τ(v) ≥ total_in(v)`.
pub fn next_state_majority(g: &WeightedDigraph, s: &State, tau: &Tolerance, v: usize) -> Opinion {
    let hub = g.hub();
    if v == hub {
        return Opinion::Glory;
    }
    let glory: Mass = g
        .in_edges(v)
        .iter()
        .filter(|&&(u, _)| u == hub || s.is_glory(u))
        .map(|&(_, w)| w as Mass)
        .sum();
    let total = g.topology().in_mass(v);
    (2 * glory + tau.get(v) as Mass >= total).into()
}

/// Simultaneous update of every vertex against the same forced pre-step state.
pub fn sync_step(
    g: &WeightedDigraph,
    s: &State,
    seeds: &SeedSet,
    tau: &Tolerance,
    policy: TiePolicy,
) -> State {
    assert_eq!(s.len(), g.n(), "state length must match vertex count");
    let forced = force_seed(s, seeds);
    State::from_fn(g.n(), |v| {
        next_state_forced(g, s, &forced, seeds, tau, policy, v)
    })
}

/// Outcome of [`run_sync`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyncRun {
    pub final_state: State,
    /// First step index at which every vertex is Glory (0 if the initial state already is).
    pub steps_to_all_glory: Option<usize>,
    /// Glory count of the initial state followed by the count after each step.
    pub glory_counts: Vec<usize>,
}

/// Iterates [`sync_step`] up to `max_steps` times, stopping early at all-Glory
/// or at any other fixed point.
pub fn run_sync(
    g: &WeightedDigraph,
    s0: &State,
    seeds: &SeedSet,
    tau: &Tolerance,
    policy: TiePolicy,
    max_steps: usize,
) -> SyncRun {
    let mut state = s0.clone();
    let mut glory_counts = vec![state.glory_count()];
    if state.is_all_glory() {
        return SyncRun {
            final_state: state,
            steps_to_all_glory: Some(0),
            glory_counts,
        };
    }
    for step in 1..=max_steps {
        let next = sync_step(g, &state, seeds, tau, policy);
        glory_counts.push(next.glory_count());
        if next.is_all_glory() {
            return SyncRun {
                final_state: next,
                steps_to_all_glory: Some(step),
                glory_counts,
            };
        }
        if next == state {
            // fixed point short of consensus
            state = next;
            break;
        }
        state = next;
    }
    SyncRun {
        final_state: state,
        steps_to_all_glory: None,
        glory_counts,
    }
}

/// Sequential sweep with seeds pinned to Glory for the whole run. Each visit
/// recomputes scores against the current state; visiting a seed is a no-op.
pub fn run_schedule(
    g: &WeightedDigraph,
    s0: &State,
    seeds: &SeedSet,
    tau: &Tolerance,
    policy: TiePolicy,
    sched: &Schedule,
) -> State {
    run_schedule_traced(g, s0, seeds, tau, policy, sched).0
}

/// Like [`run_schedule`], also returning the Glory count after forcing and
/// after every visit (`visits().len() + 1` entries).
pub fn run_schedule_traced(
    g: &WeightedDigraph,
    s0: &State,
    seeds: &SeedSet,
    tau: &Tolerance,
    policy: TiePolicy,
    sched: &Schedule,
) -> (State, Vec<usize>) {
    assert_eq!(s0.len(), g.n(), "state length must match vertex count");
    let mut state = force_seed(s0, seeds);
    let mut counts = Vec::with_capacity(sched.visits().len() + 1);
    let mut glory = state.glory_count();
    counts.push(glory);
    for &v in sched.visits() {
        if !seeds.contains(v) {
            let sc = scores_forced(g, &state, v);
            let next = decide(policy, sc.glory + tau.get(v) as Mass, sc.gnash, state.get(v));
            match (state.glory[v], next.is_glory()) {
                (false, true) => glory += 1,
                (true, false) => glory -= 1,
                _ => {}
            }
            state.glory[v] = next.is_glory();
        }
        counts.push(glory);
    }
    (state, counts)
}

/// True iff every vertex outside the seed set is visited at least once.
pub fn covers_all_nonhubs(sched: &Schedule, g: &WeightedDigraph, seeds: &SeedSet) -> bool {
    let mut seen = vec![false; g.n()];
    for &v in sched.visits() {
        if let Some(slot) = seen.get_mut(v) {
            *slot = true;
        }
    }
    (0..g.n()).all(|v| seen[v] || seeds.contains(v))
}
