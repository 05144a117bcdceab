use std::io::{self, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use psdzf::extremal::{classify_extremal, ng_search, nordhaus_gaddum, throttling_number, zeta, Checkpoint};
use psdzf::families::{FamilyRegistry, FamilySpec, NamedGraph};
use psdzf::migration::StrategyRegistry;
use psdzf::{
    propagate, propagation_time, psd_zero_forcing_number, pt_plus, pt_plus_k, write_graph6, Error, ExtremalRecord,
    Graph, Limits, VertexSet,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::input::{InputArgs, Item};

/// Set when anything was skipped or a check failed; decides the exit code.
#[derive(Default)]
pub struct Status {
    pub failed: bool,
}

fn warn(status: &mut Status, msg: impl std::fmt::Display) {
    eprintln!("warning: {msg}");
    status.failed = true;
}

fn emit_json<T: Serialize>(out: &mut impl Write, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Runs `f` over the inputs in parallel, returning results in input order.
/// Unreadable graphs and cap overruns become warnings.
fn per_graph<T, F>(items: Vec<Item>, status: &mut Status, f: F) -> Vec<(String, T)>
where
    T: Send,
    F: Fn(&Graph) -> psdzf::Result<T> + Sync,
{
    let results: Vec<(String, std::result::Result<T, String>)> = items
        .into_par_iter()
        .map(|item| {
            let r = match item.graph {
                Ok(g) => f(&g.graph).map_err(|e| match e {
                    Error::OrderTooLarge { .. } | Error::SubsetCapExceeded { .. } => format!("skipped: {e}"),
                    other => other.to_string(),
                }),
                Err(e) => Err(e),
            };
            (item.source, r)
        })
        .collect();
    let mut out = Vec::new();
    for (source, r) in results {
        match r {
            Ok(v) => out.push((source, v)),
            Err(e) => warn(status, format!("{source}: {e}")),
        }
    }
    out
}

#[derive(Serialize)]
struct ComputeRecord {
    g6: String,
    n: usize,
    #[serde(rename = "z+")]
    z_plus: usize,
    #[serde(rename = "pt+")]
    pt_plus: usize,
    witness: VertexSet,
    #[serde(rename = "th+", skip_serializing_if = "Option::is_none")]
    th_plus: Option<usize>,
}

pub fn compute(input: &InputArgs, limits: &Limits, throttle: bool, json: bool, status: &mut Status) -> Result<()> {
    let rows = per_graph(input.load()?, status, |g| {
        let e = pt_plus(g, limits)?;
        let th_plus = throttle.then(|| throttling_number(g, limits)).transpose()?.map(|t| t.value);
        Ok(ComputeRecord { g6: write_graph6(g), n: g.order(), z_plus: e.k, pt_plus: e.time, witness: e.witness, th_plus })
    });
    let mut out = io::stdout().lock();
    if !json {
        writeln!(out, "{:<16} {:>3} {:>4} {:>4} {:>4}  witness", "graph6", "n", "Z+", "pt+", "th+")?;
    }
    for (_, r) in rows {
        if json {
            emit_json(&mut out, &r)?;
        } else {
            let th = r.th_plus.map_or("-".to_string(), |t| t.to_string());
            writeln!(out, "{:<16} {:>3} {:>4} {:>4} {:>4}  {}", r.g6, r.n, r.z_plus, r.pt_plus, th, r.witness)?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct SimulateReport<'a> {
    g6: String,
    schedule: &'a psdzf::PropagationSchedule,
    #[serde(rename = "pt+")]
    pt_plus: Option<usize>,
    white: VertexSet,
}

pub fn simulate(input: &InputArgs, blue: &str, json: bool) -> Result<()> {
    let (_, ng) = input.load_one()?;
    let b = ng.resolve_set(blue)?;
    let s = propagate(&ng.graph, &b)?;
    let white = ng.graph.vertices().difference(&s.final_blue());
    let mut out = io::stdout().lock();
    if json {
        let report = SimulateReport { g6: write_graph6(&ng.graph), schedule: &s, pt_plus: s.propagation_time(), white };
        return emit_json(&mut out, &report);
    }
    writeln!(out, "initial {}", s.initial)?;
    for (i, round) in s.rounds.iter().enumerate() {
        let forces: Vec<String> = s.forces_at(i + 1).map(|f| format!("{}->{}", f.forcer, f.target)).collect();
        writeln!(out, "step {}: {}  new blue {round}", i + 1, forces.join(" "))?;
    }
    match s.propagation_time() {
        Some(t) => writeln!(out, "forcing: pt+ = {t}")?,
        None => writeln!(out, "stalled after {} step(s); white {white}", s.rounds.len())?,
    }
    Ok(())
}

#[derive(Serialize)]
struct MigrationSummary {
    strategy: &'static str,
    initial: VertexSet,
    #[serde(rename = "final")]
    final_set: VertexSet,
    #[serde(rename = "pt+_initial")]
    pt_initial: usize,
    #[serde(rename = "pt+_final")]
    pt_final: usize,
    steps: usize,
    postcondition: bool,
}

pub fn migrate(input: &InputArgs, blue: &str, strategy: &str, json: bool, status: &mut Status) -> Result<()> {
    let strategy = StrategyRegistry::builtin().get(strategy)?;
    let (_, ng) = input.load_one()?;
    let b = ng.resolve_set(blue)?;
    let g = &ng.graph;
    let pt_initial = propagation_time(g, &b, None).ok_or_else(|| not_forcing(&ng, &b))?;
    let m = strategy.migrate(g, &b)?;
    let pt_final = propagation_time(g, &m.result, None).context("migration result is not forcing")?;
    let postcondition = strategy.postcondition(g, &m.result)?;
    let summary = MigrationSummary {
        strategy: strategy.name(),
        initial: b,
        final_set: m.result.clone(),
        pt_initial,
        pt_final,
        steps: m.trace.steps.len(),
        postcondition,
    };
    let mut out = io::stdout().lock();
    if json {
        out.write_all(m.trace.to_json_lines()?.as_bytes())?;
        emit_json(&mut out, &summary)?;
    } else {
        for (i, s) in m.trace.steps.iter().enumerate() {
            writeln!(
                out,
                "step {}: {} -> {}  out {} in {}  measure {} -> {}",
                i + 1,
                s.before,
                s.after,
                s.moved_out,
                s.moved_in,
                s.measure_before,
                s.measure_after
            )?;
        }
        writeln!(out, "final {}  pt+ {} -> {}", summary.final_set, pt_initial, pt_final)?;
        writeln!(out, "postcondition: {}", if postcondition { "holds" } else { "VIOLATED" })?;
    }
    if !postcondition {
        warn(status, format!("{} postcondition violated", strategy.name()));
    }
    Ok(())
}

fn not_forcing(ng: &NamedGraph, b: &VertexSet) -> anyhow::Error {
    let s = propagate(&ng.graph, b).expect("set already validated");
    let white = ng.graph.vertices().difference(&s.final_blue());
    anyhow::anyhow!("{b} is not a PSD forcing set: propagation stalls after {} step(s) with {white} white", s.rounds.len())
}

pub fn list_strategies() {
    for s in StrategyRegistry::builtin().iter() {
        println!("{:<12} {}", s.name(), s.description());
    }
}

#[derive(Serialize)]
struct FamilyOutput<'a> {
    family: String,
    g6: String,
    n: usize,
    m: usize,
    names: &'a std::collections::BTreeMap<String, usize>,
}

pub fn family(spec: Option<&str>, json: bool) -> Result<()> {
    let Some(spec) = spec else {
        for f in FamilyRegistry::builtin().iter() {
            println!("{:<10} {:<8} {}", f.name(), f.params().join(","), f.description());
        }
        return Ok(());
    };
    let spec: FamilySpec = spec.parse()?;
    let ng = spec.build()?;
    let out = FamilyOutput {
        family: spec.to_string(),
        g6: write_graph6(&ng.graph),
        n: ng.graph.order(),
        m: ng.graph.size(),
        names: &ng.names,
    };
    if json {
        emit_json(&mut io::stdout().lock(), &out)?;
    } else {
        println!("{}", out.g6);
        eprintln!("{}: n={} m={}", out.family, out.n, out.m);
        for (name, v) in out.names {
            eprintln!("  {name} = {v}");
        }
    }
    Ok(())
}

pub struct ExtremalOptions {
    pub k: usize,
    pub throttle: bool,
    pub ng: bool,
    pub checkpoint_dir: Option<PathBuf>,
}

pub fn extremal(opts: &ExtremalOptions, limits: &Limits, json: bool) -> Result<()> {
    let checkpoint = opts.checkpoint_dir.as_ref().map(Checkpoint::new).transpose()?;
    let records = classify_extremal(opts.k, limits, checkpoint.as_ref())?;
    let records: Vec<ExtremalRecord> = records
        .into_par_iter()
        .map(|r| {
            let g = r.graph()?;
            let r = if opts.throttle { r.with_throttling(&g, limits)? } else { r };
            if opts.ng && g.order() >= 2 {
                r.with_nordhaus_gaddum(&g, limits)
            } else {
                Ok(r)
            }
        })
        .collect::<psdzf::Result<_>>()?;
    let mut out = io::stdout().lock();
    for r in &records {
        if json {
            emit_json(&mut out, r)?;
        } else {
            let opt = |v: Option<usize>| v.map_or("-".into(), |v| v.to_string());
            writeln!(
                out,
                "{:<12} n={} Z+={} pt+={} th+={} ng_pt={} ng_z={}",
                r.label,
                r.n,
                r.z_plus,
                r.pt_plus,
                opt(r.th_plus),
                opt(r.ng_pt_sum),
                opt(r.ng_z_sum)
            )?;
        }
    }
    eprintln!("{} graph(s) with pt+ = n - {}", records.len(), opts.k);
    Ok(())
}

pub fn zeta_cmd(n: usize, k: usize, limits: &Limits, json: bool) -> Result<()> {
    let z = zeta(n, k, limits)?;
    if json {
        emit_json(&mut io::stdout().lock(), &z)?;
    } else {
        println!("zeta({n},{k}) = {}", z.value);
        for w in &z.witnesses {
            println!("  {w}");
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct NgRecord {
    g6: String,
    n: usize,
    ng_pt: usize,
    ng_z: usize,
    within_bounds: bool,
}

pub fn ng(order: Option<usize>, input: &InputArgs, limits: &Limits, json: bool, status: &mut Status) -> Result<()> {
    let mut out = io::stdout().lock();
    if let Some(n) = order {
        let s = ng_search(n, limits)?;
        if json {
            emit_json(&mut out, &s)?;
        } else {
            writeln!(out, "order {n}: max pt+ sum {} (target {} {})", s.max_sum, s.target, if s.target_attained { "attained" } else { "not attained" })?;
            for (sum, count) in &s.histogram {
                writeln!(out, "  sum {sum}: {count}")?;
            }
        }
        if !s.all_within_bounds {
            warn(status, format!("order {n}: a Nordhaus-Gaddum bound failed"));
        }
        return Ok(());
    }
    if input.is_empty() {
        bail!("give --order or an input source");
    }
    let rows = per_graph(input.load()?, status, |g| {
        let r = nordhaus_gaddum(g, limits)?;
        Ok(NgRecord { g6: write_graph6(g), n: r.n, ng_pt: r.pt_sum, ng_z: r.z_sum, within_bounds: r.pt_in_bounds && r.z_in_bounds })
    });
    for (source, r) in rows {
        if !r.within_bounds {
            warn(status, format!("{source}: bounds violated"));
        }
        if json {
            emit_json(&mut out, &r)?;
        } else {
            writeln!(out, "{:<16} n={} pt+ sum={} Z+ sum={}", r.g6, r.n, r.ng_pt, r.ng_z)?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct BoundReport {
    g6: String,
    n: usize,
    #[serde(rename = "z+")]
    z_plus: usize,
    checked: usize,
    violations: Vec<usize>,
    tight: Vec<usize>,
}

pub fn verify_bounds(input: &InputArgs, limits: &Limits, json: bool, status: &mut Status) -> Result<()> {
    let rows = per_graph(input.load()?, status, |g| {
        let n = g.order();
        let z = psd_zero_forcing_number(g, limits)?.value;
        let mut r = BoundReport { g6: write_graph6(g), n, z_plus: z, checked: 0, violations: vec![], tight: vec![] };
        for k in z..=n {
            let t = pt_plus_k(g, k, limits)?.time;
            let bound = (n - k).div_ceil(2);
            r.checked += 1;
            if t > bound {
                r.violations.push(k);
            } else if t == bound {
                r.tight.push(k);
            }
        }
        Ok(r)
    });
    let mut out = io::stdout().lock();
    let (mut violations, mut tight_at_z) = (0, 0);
    for (source, r) in &rows {
        if !r.violations.is_empty() {
            violations += 1;
            warn(status, format!("{source}: bound violated at k = {:?}", r.violations));
        }
        if r.tight.contains(&r.z_plus) {
            tight_at_z += 1;
        }
        if json {
            emit_json(&mut out, r)?;
        } else {
            writeln!(out, "{:<16} n={} Z+={} violations={:?} tight={:?}", r.g6, r.n, r.z_plus, r.violations, r.tight)?;
        }
    }
    eprintln!("{} graph(s) checked, {violations} with violations, {tight_at_z} tight at k = Z+", rows.len());
    Ok(())
}
