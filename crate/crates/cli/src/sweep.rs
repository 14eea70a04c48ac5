//! Parameter sweeps behind `hh sweep`. Points are computed in parallel and
//! emitted in ascending parameter order.

use anyhow::{ensure, Result};
use hh_core::dynamics::{run_sync, sync_step};
use hh_core::generators::{attach_hub, attach_seed_split, gen_adversarial_hetero, gen_ring, Family};
use hh_core::oracle::exhaustive_one_step;
use hh_core::thresholds::{max_need, seeded_one_step_holds, threshold_report};
use hh_core::{Opinion, SeedSet, State, TiePolicy, Tolerance, Weight, MAX_ORACLE_VERTICES};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::args::WRange;

pub struct SweepTable {
    pub tag: &'static str,
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

pub const THRESHOLD_HEADERS: [&str; 9] = [
    "family", "params", "w", "w_star", "w_over_wstar", "mode", "samples", "success", "steps",
];

fn family_label(f: &Family) -> (&'static str, String) {
    match *f {
        Family::Ring { n, k } => ("ring", format!("n={n};k={k}")),
        Family::Grid { rows, cols, torus } => ("grid", format!("rows={rows};cols={cols};torus={torus}")),
        Family::BarabasiAlbert { n, m, seed } => ("ba", format!("n={n};m={m};seed={seed}")),
        Family::AdversarialHetero { fan_in, light_w, heavy_w } => {
            ("adversarial", format!("fan_in={fan_in};light_w={light_w};heavy_w={heavy_w}"))
        }
    }
}

fn ratio(w: Weight, w_star: u128) -> String {
    if w_star == 0 {
        "NA".into()
    } else {
        format!("{:.6}", w as f64 / w_star as f64)
    }
}

/// One-step success of a uniform hub against `W` in `range`. Exact via the
/// oracle when the graph fits, otherwise the fraction of `trials` sampled
/// initial states that reach all-Glory in one step.
pub fn threshold_sweep(family: &Family, range: &WRange, seed: u64) -> Result<SweepTable> {
    ensure!(range.w_min <= range.w_max, "--w-min must not exceed --w-max");
    let base = family.build()?;
    let tau = Tolerance::uniform(range.tau);
    let w_star = max_need(&attach_hub(&base, 0)?, &tau)?;
    let exact = base.n() < MAX_ORACLE_VERTICES;
    ensure!(exact || range.trials > 0, "--trials must be positive for sampled sweeps");
    let (name, params) = family_label(family);
    let policy = range.policy;

    let rows = (range.w_min..=range.w_max)
        .into_par_iter()
        .map(|w| -> Result<Vec<String>> {
            let g = attach_hub(&base, w)?;
            let hub = SeedSet::hub_of(&g);
            let (mode, samples, success) = if exact {
                let v = exhaustive_one_step(&g, &hub, &tau, policy)?;
                let states = 1u64 << (g.n() - 1);
                ("exact", states, format!("{:.6}", f64::from(u8::from(v.converges_from_all_states))))
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ w.rotate_left(32));
                let ok = (0..range.trials)
                    .filter(|_| {
                        let s = State::from_fn(g.n(), |_| Opinion::from(rng.random_bool(0.5)));
                        sync_step(&g, &s, &hub, &tau, policy).is_all_glory()
                    })
                    .count();
                ("sampled", range.trials as u64, format!("{:.6}", ok as f64 / range.trials as f64))
            };
            let run = run_sync(&g, &State::all_gnash(g.n()), &hub, &tau, policy, g.n());
            Ok(vec![
                name.to_string(),
                params.clone(),
                w.to_string(),
                w_star.to_string(),
                ratio(w, w_star),
                mode.to_string(),
                samples.to_string(),
                success,
                run.steps_to_all_glory.map_or("NA".into(), |s| s.to_string()),
            ])
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(SweepTable {
        tag: "hh-sweep-threshold",
        headers: THRESHOLD_HEADERS.to_vec(),
        rows,
    })
}

pub fn bounds_sweep(min: usize, max: usize, step: usize, light_w: Weight, heavy_w: Weight) -> Result<SweepTable> {
    ensure!(min >= 1 && min <= max, "need 1 <= --fan-in-min <= --fan-in-max");
    ensure!(step >= 1, "--fan-in-step must be positive");
    let points: Vec<usize> = (min..=max).step_by(step).collect();
    let rows = points
        .into_par_iter()
        .map(|m| -> Result<Vec<String>> {
            let g = attach_hub(&gen_adversarial_hetero(m, light_w, heavy_w)?, 0)?;
            let r = threshold_report(&g, &Tolerance::zero())?;
            Ok(vec![
                "adversarial".into(),
                m.to_string(),
                light_w.to_string(),
                heavy_w.to_string(),
                r.maxrest.to_string(),
                r.pointwise_bound.to_string(),
                r.classical_bound.to_string(),
                format!("{:.6}", r.classical_bound as f64 / r.pointwise_bound as f64),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepTable {
        tag: "hh-sweep-bounds",
        headers: vec![
            "family", "fan_in", "light_w", "heavy_w", "maxrest", "pointwise_bound", "classical_bound",
            "classical_over_pointwise",
        ],
        rows,
    })
}

/// `budget` split as evenly as possible over `hubs`, larger shares first.
pub fn equal_split(budget: Weight, hubs: usize) -> Vec<Weight> {
    let h = hubs as Weight;
    (0..h).map(|i| budget / h + Weight::from(i < budget % h)).collect()
}

pub fn split_sweep(n: usize, k: usize, budget: Weight, hubs_min: usize, hubs_max: usize) -> Result<SweepTable> {
    ensure!(hubs_min >= 1 && hubs_min <= hubs_max, "need 1 <= --hubs-min <= --hubs-max");
    let base = gen_ring(n, k)?;
    let tau = Tolerance::zero();
    let rows = (hubs_min..=hubs_max)
        .into_par_iter()
        .map(|h| -> Result<Vec<String>> {
            let weights = equal_split(budget, h);
            let (g, seeds) = attach_seed_split(&base, &weights)?;
            let criterion = seeded_one_step_holds(&g, &seeds, &tau)?;
            let oracle = if g.n() <= MAX_ORACLE_VERTICES {
                exhaustive_one_step(&g, &seeds, &tau, TiePolicy::TieGlory)?
                    .converges_from_all_states
                    .to_string()
            } else {
                "NA".into()
            };
            Ok(vec![
                "ring".into(),
                format!("n={n};k={k}"),
                h.to_string(),
                budget.to_string(),
                weights.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(";"),
                format!("{:.6}", budget as f64 / h as f64),
                criterion.to_string(),
                oracle,
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepTable {
        tag: "hh-sweep-split",
        headers: vec!["family", "params", "hubs", "budget", "weights", "per_hub_w", "criterion", "oracle"],
        rows,
    })
}
