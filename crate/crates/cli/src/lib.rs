//! Command implementations for the `hh` binary.

pub mod args;
pub mod sweep;
pub mod table;

use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use hh_core::dynamics::{covers_all_nonhubs, run_schedule_traced, run_sync};
use hh_core::generators::{attach_hub, attach_seed_split};
use hh_core::io::{parse_graph, write_graph};
use hh_core::oracle::exhaustive_one_step;
use hh_core::thresholds::threshold_report;
use hh_core::{GraphDocument, Opinion, Schedule, SeedSet, State, Tolerance, WeightedDigraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use args::{
    Cli, Command, Format, GenerateArgs, Mode, OracleArgs, SimulateArgs, SweepArgs, SweepCmd,
    ThresholdArgs, ToleranceArg,
};
use sweep::SweepTable;

/// Runs one parsed command and returns the process exit status.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Generate(a) => generate(a, cli.seed, out),
        Command::Threshold(a) => threshold(a, out),
        Command::Simulate(a) => simulate(a, cli.seed, out),
        Command::Sweep(a) => run_sweep(a, cli.seed, out),
        Command::Oracle(a) => oracle(a, out),
    }
}

fn load(path: &Path, tau: &ToleranceArg) -> Result<(WeightedDigraph, Tolerance)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let doc = parse_graph(&text).with_context(|| format!("parsing {}", path.display()))?;
    let tolerance = tau.tau.map_or(doc.tolerance, Tolerance::uniform);
    Ok((doc.graph, tolerance))
}

fn seed_set(g: &WeightedDigraph, seeds: &[usize]) -> Result<SeedSet> {
    if seeds.is_empty() {
        return Ok(SeedSet::hub_of(g));
    }
    let set = SeedSet::new(seeds.iter().copied())?;
    set.check_within(g.n())?;
    Ok(set)
}

fn fraction(count: usize, n: usize) -> String {
    format!("{:.6}", count as f64 / n as f64)
}

fn generate(a: GenerateArgs, seed: u64, out: &mut dyn Write) -> Result<i32> {
    let base = a.family.family(seed).build()?;
    let (graph, seeds) = if a.split.is_empty() {
        let g = attach_hub(&base, a.hub_w.unwrap_or(0))?;
        let s = SeedSet::hub_of(&g);
        (g, s)
    } else {
        attach_seed_split(&base, &a.split)?
    };
    let summary = format!(
        "n={} hub={} seeds={}",
        graph.n(),
        graph.hub(),
        seeds.members().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    );
    let text = write_graph(&GraphDocument::new(graph));
    match &a.output {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
            writeln!(out, "{summary}")?;
        }
        None => {
            out.write_all(text.as_bytes())?;
            eprintln!("{summary}");
        }
    }
    Ok(0)
}

fn threshold(a: ThresholdArgs, out: &mut dyn Write) -> Result<i32> {
    let (g, tau) = load(&a.graph, &a.tau)?;
    let report = threshold_report(&g, &tau)?;
    let headers = ["vertex", "rest_weight", "tolerance", "need", "indeg", "max_in"];
    let rows: Vec<Vec<String>> = report
        .per_node
        .iter()
        .map(|t| {
            vec![
                t.vertex.to_string(),
                t.rest_weight.to_string(),
                t.tolerance.to_string(),
                t.need.to_string(),
                t.indeg.to_string(),
                t.max_in.to_string(),
            ]
        })
        .collect();
    match a.format {
        Format::Human => {
            write!(out, "{}", report.to_kv_block())?;
            writeln!(out)?;
            write!(out, "{}", table::render(&headers, &rows))?;
        }
        Format::Csv => write!(out, "{}", table::csv("hh-threshold", &headers, &rows))?,
        Format::Json => writeln!(out, "{}", serde_json::to_string(&report)?)?,
    }
    Ok(0)
}

fn initial_state(spec: &str, n: usize, seed: u64) -> Result<State> {
    Ok(match spec {
        "all-gnash" => State::all_gnash(n),
        "all-glory" => State::all_glory(n),
        "random" => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            State::from_fn(n, |_| Opinion::from(rng.random_bool(0.5)))
        }
        literal => {
            let s: State = literal
                .parse()
                .with_context(|| format!("invalid --init `{literal}`"))?;
            if s.len() != n {
                bail!("--init has length {} but the graph has {n} vertices", s.len());
            }
            s
        }
    })
}

#[derive(Serialize)]
struct TraceRecord {
    mode: &'static str,
    policy: String,
    initial: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    schedule: Option<Vec<usize>>,
    glory_counts: Vec<usize>,
    final_state: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    steps_to_all_glory: Option<Option<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    covers_all: Option<bool>,
}

fn simulate(a: SimulateArgs, seed: u64, out: &mut dyn Write) -> Result<i32> {
    let (g, tau) = load(&a.graph, &a.tau)?;
    let seeds = seed_set(&g, &a.seeds)?;
    let n = g.n();
    let s0 = initial_state(&a.init, n, seed)?;

    let record = match a.mode {
        Mode::Sync => {
            let run = run_sync(&g, &s0, &seeds, &tau, a.policy, a.steps);
            TraceRecord {
                mode: "sync",
                policy: a.policy.to_string(),
                initial: s0.to_string(),
                schedule: None,
                glory_counts: run.glory_counts,
                final_state: run.final_state.to_string(),
                steps_to_all_glory: Some(run.steps_to_all_glory),
                covers_all: None,
            }
        }
        Mode::Schedule => {
            let sched = match (&a.schedule, a.shuffle) {
                (Some(text), _) => Schedule::parse(text, n)?,
                (None, true) => {
                    let mut order: Vec<usize> = (0..n).collect();
                    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
                    Schedule::new(order, n)?
                }
                (None, false) => Schedule::new((0..n).collect(), n)?,
            };
            let (fin, counts) = run_schedule_traced(&g, &s0, &seeds, &tau, a.policy, &sched);
            TraceRecord {
                mode: "schedule",
                policy: a.policy.to_string(),
                initial: s0.to_string(),
                covers_all: Some(covers_all_nonhubs(&sched, &g, &seeds)),
                schedule: Some(sched.visits().to_vec()),
                glory_counts: counts,
                final_state: fin.to_string(),
                steps_to_all_glory: None,
            }
        }
    };

    // Row i is the count after step i (sync) or after visit i (schedule);
    // row 0 is the starting point.
    let rows: Vec<Vec<String>> = record
        .glory_counts
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            let vertex = match (&record.schedule, i) {
                (Some(s), i) if i > 0 => s[i - 1].to_string(),
                _ => "NA".into(),
            };
            vec![
                record.mode.to_string(),
                i.to_string(),
                vertex,
                c.to_string(),
                n.to_string(),
                fraction(c, n),
            ]
        })
        .collect();
    let headers = ["mode", "index", "vertex", "glory", "n", "glory_fraction"];

    match a.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&record)?)?,
        Format::Csv => write!(out, "{}", table::csv("hh-trace", &headers, &rows))?,
        Format::Human => {
            write!(out, "{}", table::render(&headers, &rows))?;
            writeln!(out)?;
            writeln!(out, "final={}", record.final_state)?;
            if let Some(steps) = record.steps_to_all_glory {
                match steps {
                    Some(s) => writeln!(out, "steps_to_all_glory={s}")?,
                    None => writeln!(out, "steps_to_all_glory=NA")?,
                }
            }
            if let Some(c) = record.covers_all {
                writeln!(out, "covers_all_non_seeds={c}")?;
            }
        }
    }
    Ok(0)
}

fn run_sweep(a: SweepArgs, seed: u64, out: &mut dyn Write) -> Result<i32> {
    use hh_core::generators::Family;
    let t: SweepTable = match a.kind {
        SweepCmd::Ring { n, k, range } => sweep::threshold_sweep(&Family::Ring { n, k }, &range, seed)?,
        SweepCmd::Grid { rows, cols, torus, range } => {
            sweep::threshold_sweep(&Family::Grid { rows, cols, torus }, &range, seed)?
        }
        SweepCmd::Ba { n, m, range } => {
            sweep::threshold_sweep(&Family::BarabasiAlbert { n, m, seed }, &range, seed)?
        }
        SweepCmd::Adversarial { fan_in_min, fan_in_max, fan_in_step, light_w, heavy_w } => {
            sweep::bounds_sweep(fan_in_min, fan_in_max, fan_in_step, light_w, heavy_w)?
        }
        SweepCmd::Split { n, k, budget, hubs_min, hubs_max } => {
            sweep::split_sweep(n, k, budget, hubs_min, hubs_max)?
        }
    };
    match a.format {
        Format::Csv => write!(out, "{}", table::csv(t.tag, &t.headers, &t.rows))?,
        Format::Human => write!(out, "{}", table::render(&t.headers, &t.rows))?,
        Format::Json => {
            let records: Vec<serde_json::Map<String, serde_json::Value>> = t
                .rows
                .iter()
                .map(|row| {
                    t.headers
                        .iter()
                        .zip(row)
                        .map(|(h, c)| (h.to_string(), serde_json::Value::String(c.clone())))
                        .collect()
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string(&records)?)?;
        }
    }
    Ok(0)
}

fn oracle(a: OracleArgs, out: &mut dyn Write) -> Result<i32> {
    let (g, tau) = load(&a.graph, &a.tau)?;
    let seeds = seed_set(&g, &a.seeds)?;
    let verdict = exhaustive_one_step(&g, &seeds, &tau, a.policy)?;
    match a.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&verdict)?)?,
        Format::Human | Format::Csv => {
            writeln!(out, "converges={}", verdict.converges_from_all_states)?;
            writeln!(out, "states_checked={}", verdict.states_checked)?;
            if let Some(w) = &verdict.witness {
                writeln!(out, "witness={}", w.state)?;
                writeln!(out, "failing_vertex={}", w.vertex)?;
            }
        }
    }
    Ok(if verdict.converges_from_all_states { 0 } else { 1 })
}
