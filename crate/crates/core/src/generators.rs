//! Deterministic graph families and hub/seed attachment.
//!
//! Base families are hubless [`Topology`] values. Hubs and seeds are always new
//! vertices appended after the base vertices, so attaching them never changes
//! the base rest weights. No family produces self-loops.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{HhError, Result};
use crate::graph::{SeedSet, Topology, Weight, WeightedDigraph};

fn invalid(msg: impl Into<String>) -> HhError {
    HhError::InvalidParameter(msg.into())
}

/// Cycle on `n` vertices where each vertex receives a weight-1 edge from each of
/// its `k` nearest neighbours on either side.
pub fn gen_ring(n: usize, k: usize) -> Result<Topology> {
    if k == 0 {
        return Err(invalid("ring: k must be at least 1"));
    }
    if n < 2 * k + 1 {
        return Err(invalid(format!("ring: n = {n} must be at least 2k + 1 = {}", 2 * k + 1)));
    }
    let mut t = Topology::empty(n);
    for v in 0..n {
        for d in 1..=k {
            t.add_weight((v + d) % n, v, 1)?;
            t.add_weight((v + n - d) % n, v, 1)?;
        }
    }
    Ok(t)
}

/// 4-neighbour grid, row-major ids, weight 1 in both directions.
pub fn gen_grid(rows: usize, cols: usize, torus: bool) -> Result<Topology> {
    if rows < 3 || cols < 3 {
        return Err(invalid(format!("grid: rows and cols must be at least 3 (got {rows}x{cols})")));
    }
    let id = |r: usize, c: usize| r * cols + c;
    let mut t = Topology::empty(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            let v = id(r, c);
            let mut link = |u: usize| t.add_weight(u, v, 1);
            if torus {
                link(id((r + 1) % rows, c))?;
                link(id((r + rows - 1) % rows, c))?;
                link(id(r, (c + 1) % cols))?;
                link(id(r, (c + cols - 1) % cols))?;
            } else {
                if r + 1 < rows {
                    link(id(r + 1, c))?;
                }
                if r > 0 {
                    link(id(r - 1, c))?;
                }
                if c + 1 < cols {
                    link(id(r, c + 1))?;
                }
                if c > 0 {
                    link(id(r, c - 1))?;
                }
            }
        }
    }
    Ok(t)
}

/// Preferential attachment: a complete graph on the first `m + 1` vertices,
/// then each new vertex links to `m` distinct earlier vertices drawn with
/// probability proportional to degree. Links are unit weight in both
/// directions. Identical `(n, m, seed)` gives an identical graph.
pub fn gen_ba(n: usize, m: usize, seed: u64) -> Result<Topology> {
    if m == 0 || n <= m {
        return Err(invalid(format!("ba: need n > m >= 1 (got n = {n}, m = {m})")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Topology::empty(n);
    // each vertex appears once per incident link
    let mut endpoints: Vec<usize> = Vec::new();
    let link = |t: &mut Topology, endpoints: &mut Vec<usize>, a: usize, b: usize| -> Result<()> {
        t.add_weight(a, b, 1)?;
        t.add_weight(b, a, 1)?;
        endpoints.push(a);
        endpoints.push(b);
        Ok(())
    };
    for a in 0..=m {
        for b in (a + 1)..=m {
            link(&mut t, &mut endpoints, a, b)?;
        }
    }
    for v in (m + 1)..n {
        let mut targets: Vec<usize> = Vec::with_capacity(m);
        while targets.len() < m {
            let cand = endpoints[rng.random_range(0..endpoints.len())];
            if !targets.contains(&cand) {
                targets.push(cand);
            }
        }
        for u in targets {
            link(&mut t, &mut endpoints, u, v)?;
        }
    }
    Ok(t)
}

/// Two-target construction separating the pointwise and classical bounds.
///
/// Vertex 0 receives `fan_in` edges of weight `light_w` from leaves
/// `3..3 + fan_in`; vertex 1 receives one edge of weight `heavy_w` from
/// vertex 2. With the defaults (200, 4, 800) both targets have rest weight 800
/// while the global indegree × global max weight is 160 000.
pub fn gen_adversarial_hetero(fan_in: usize, light_w: Weight, heavy_w: Weight) -> Result<Topology> {
    if fan_in == 0 || light_w == 0 || heavy_w == 0 {
        return Err(invalid("adversarial: fan_in, light_w and heavy_w must all be at least 1"));
    }
    let mut t = Topology::empty(3 + fan_in);
    for leaf in 3..3 + fan_in {
        t.add_weight(leaf, 0, light_w)?;
    }
    t.add_weight(2, 1, heavy_w)?;
    Ok(t)
}

pub const ADVERSARIAL_DEFAULTS: (usize, Weight, Weight) = (200, 4, 800);

/// Appends a hub with an edge of weight `w` into every base vertex. `w = 0`
/// gives an isolated hub.
pub fn attach_hub(base: &Topology, w: Weight) -> Result<WeightedDigraph> {
    let mut t = base.clone();
    let hub = t.add_vertex();
    for v in 0..base.n() {
        t.add_weight(hub, v, w)?;
    }
    WeightedDigraph::new(t, hub)
}

/// Appends one seed vertex per entry of `weights`, the i-th wired into every
/// base vertex at `weights[i]`. The first seed is the graph's hub. Seeds get no
/// inbound edges.
pub fn attach_seed_split(base: &Topology, weights: &[Weight]) -> Result<(WeightedDigraph, SeedSet)> {
    if weights.is_empty() {
        return Err(invalid("seed split needs at least one weight"));
    }
    let mut t = base.clone();
    let mut seeds = Vec::with_capacity(weights.len());
    for &w in weights {
        let s = t.add_vertex();
        for v in 0..base.n() {
            t.add_weight(s, v, w)?;
        }
        seeds.push(s);
    }
    let graph = WeightedDigraph::new(t, seeds[0])?;
    Ok((graph, SeedSet::new(seeds)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Ring { n: usize, k: usize },
    Grid { rows: usize, cols: usize, torus: bool },
    BarabasiAlbert { n: usize, m: usize, seed: u64 },
    AdversarialHetero { fan_in: usize, light_w: Weight, heavy_w: Weight },
}

impl Family {
    pub fn build(&self) -> Result<Topology> {
        match *self {
            Family::Ring { n, k } => gen_ring(n, k),
            Family::Grid { rows, cols, torus } => gen_grid(rows, cols, torus),
            Family::BarabasiAlbert { n, m, seed } => gen_ba(n, m, seed),
            Family::AdversarialHetero { fan_in, light_w, heavy_w } => {
                gen_adversarial_hetero(fan_in, light_w, heavy_w)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Hubbing {
    /// Isolated hub (uniform weight 0).
    None,
    Uniform(Weight),
    Split(Vec<Weight>),
}

/// Full description of a generated instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub family: Family,
    pub hubbing: Hubbing,
}

impl GenSpec {
    pub fn build(&self) -> Result<(WeightedDigraph, SeedSet)> {
        let base = self.family.build()?;
        match &self.hubbing {
            Hubbing::None => attach_hub(&base, 0).map(|g| {
                let h = SeedSet::hub_of(&g);
                (g, h)
            }),
            Hubbing::Uniform(w) => attach_hub(&base, *w).map(|g| {
                let h = SeedSet::hub_of(&g);
                (g, h)
            }),
            Hubbing::Split(ws) => attach_seed_split(&base, ws),
        }
    }
}
