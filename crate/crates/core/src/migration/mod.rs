//! Forcing-set migration.
//!
//! Single-vertex migration swaps a forcer `v` for its first-step target `w`.
//! Multiple-vertex migration replaces every first-step forcer into one
//! component of `G - B` by its target. Both keep `|B|` and keep `B` forcing;
//! the two iterative algorithms built on them are exposed as
//! [`MigrationStrategy`] implementations looked up by name.

mod algorithm1;
mod algorithm2;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::psd::{forceable, propagation_time};
use crate::{Error, ForceEvent, Graph, Result, VertexSet};

pub use algorithm1::{algorithm1, SpreadComponents};
pub use algorithm2::{algorithm2, BalanceComponentTimes};

/// One replacement of forcing-set vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MigrationStep {
    pub before: VertexSet,
    pub moved_out: VertexSet,
    pub moved_in: VertexSet,
    pub after: VertexSet,
    pub forces: Vec<ForceEvent>,
    /// The quantity the algorithm drives down (largest component size for
    /// algorithm 1, propagation time for algorithm 2), before and after.
    pub measure_before: usize,
    pub measure_after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MigrationTrace {
    pub steps: Vec<MigrationStep>,
    pub final_set: VertexSet,
}

impl MigrationTrace {
    fn start(b: &VertexSet) -> Self {
        Self { steps: Vec::new(), final_set: b.clone() }
    }

    fn push(&mut self, step: MigrationStep) {
        self.final_set = step.after.clone();
        self.steps.push(step);
    }

    /// One JSON object per step, newline-terminated.
    pub fn to_json_lines(&self) -> Result<String> {
        let mut out = String::new();
        for step in &self.steps {
            out.push_str(&serde_json::to_string(step)?);
            out.push('\n');
        }
        Ok(out)
    }
}

/// The four conditions of the force-switch equivalence, evaluated separately.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ForceSwitch {
    /// `v -> w` is a valid initial force for `S ∪ {v}`.
    pub forward_force: bool,
    /// Deleting `vw` from `G - S` separates `v` from `w`.
    pub separates: bool,
    /// `vw` is a bridge of `G - S`.
    pub bridge: bool,
    /// `w -> v` is a valid initial force for `S ∪ {w}`.
    pub reverse_force: bool,
}

impl ForceSwitch {
    pub fn holds(&self) -> bool {
        self.forward_force
    }

    fn consistent(&self) -> bool {
        let all = [self.forward_force, self.separates, self.bridge, self.reverse_force];
        all.iter().all(|&c| c == all[0])
    }
}

fn require_forcing(g: &Graph, b: &VertexSet) -> Result<()> {
    g.check_set(b)?;
    if propagation_time(g, b, None).is_none() {
        return Err(Error::NotForcing(b.clone()));
    }
    Ok(())
}

fn assert_forcing(g: &Graph, b: &VertexSet, why: &str) -> Result<()> {
    if propagation_time(g, b, None).is_none() {
        return Err(Error::InvariantViolation(format!("{why}: {b} is not forcing")));
    }
    Ok(())
}

fn is_initial_force(g: &Graph, blue: &VertexSet, forcer: usize, target: usize) -> bool {
    forceable(g, blue).contains(&(forcer, target))
}

/// Evaluates the four equivalent conditions for `v, w ∉ S` with `vw ∈ E(G)`.
/// Disagreement among them is reported as an [`Error::InvariantViolation`].
pub fn verify_force_switch(g: &Graph, s: &VertexSet, v: usize, w: usize) -> Result<ForceSwitch> {
    g.check_set(s)?;
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    if v == w || s.contains(v) || s.contains(w) {
        return Err(Error::InvalidParameter(format!("need distinct v, w outside S (v={v}, w={w}, S={s})")));
    }
    if !g.has_edge(v, w) {
        return Err(Error::NotAnEdge(v, w));
    }
    let forward_force = is_initial_force(g, &s.union(&VertexSet::singleton(v)), v, w);
    let reverse_force = is_initial_force(g, &s.union(&VertexSet::singleton(w)), w, v);

    let alive = g.vertices().difference(s);
    let separates = !g.without_edge(v, w)?.reach(v, &alive).contains(w);

    let sub = g.induced_subgraph(&alive)?;
    let (sv, sw) = (sub.old_to_new[v].expect("alive"), sub.old_to_new[w].expect("alive"));
    let bridge = sub.graph.is_bridge(sv, sw)?;

    let result = ForceSwitch { forward_force, separates, bridge, reverse_force };
    if !result.consistent() {
        return Err(Error::InvariantViolation(format!(
            "force-switch conditions disagree for S={s}, v={v}, w={w}: {result:?}"
        )));
    }
    Ok(result)
}

/// `(B \ {v}) ∪ {w}` for a valid initial force `v -> w` of the forcing set `B`.
pub fn single_vertex_migrate(g: &Graph, b: &VertexSet, v: usize, w: usize) -> Result<VertexSet> {
    require_forcing(g, b)?;
    g.check_vertex(w)?;
    if !b.contains(v) || b.contains(w) || !is_initial_force(g, b, v, w) {
        return Err(Error::InvalidInitialForce { forcer: v, target: w });
    }
    let mut out = b.clone();
    out.remove(v);
    out.insert(w);
    assert_forcing(g, &out, "single-vertex migration")?;
    Ok(out)
}

/// Result of shifting the first-step forcers of one component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentShift {
    pub result: VertexSet,
    pub forces: Vec<ForceEvent>,
}

/// First-step forces into `component`, one per target (least forcer), by target.
pub(crate) fn first_step_forces_into(g: &Graph, b: &VertexSet, component: &VertexSet) -> Vec<ForceEvent> {
    let mut out: Vec<ForceEvent> = Vec::new();
    for (forcer, target) in forceable(g, b) {
        if component.contains(target) && out.last().is_none_or(|f| f.target != target) {
            out.push(ForceEvent { forcer, target, step: 1 });
        }
    }
    out
}

/// Replaces each first-step forcer into `component` by its target (only the
/// first `take` of them, ordered by target, when given).
pub fn component_shift(
    g: &Graph,
    b: &VertexSet,
    component: &VertexSet,
    take: Option<usize>,
) -> Result<ComponentShift> {
    require_forcing(g, b)?;
    if !g.components(b).contains(component) {
        return Err(Error::InvalidComponent(component.clone()));
    }
    let mut forces = first_step_forces_into(g, b, component);
    if let Some(take) = take {
        if take > forces.len() {
            return Err(Error::TakeOutOfRange { take, available: forces.len() });
        }
        forces.truncate(take);
    }
    let mut result = b.clone();
    for f in &forces {
        result.remove(f.forcer);
        result.insert(f.target);
    }
    if result.len() != b.len() {
        return Err(Error::InvariantViolation(format!(
            "a forcer moved twice into one component ({b} -> {result})"
        )));
    }
    assert_forcing(g, &result, "multiple-vertex migration")?;
    Ok(ComponentShift { result, forces })
}

/// [`component_shift`] returning only the new forcing set.
pub fn multi_vertex_migrate(
    g: &Graph,
    b: &VertexSet,
    component: &VertexSet,
    take: Option<usize>,
) -> Result<VertexSet> {
    component_shift(g, b, component, take).map(|s| s.result)
}

/// `ceil((n - k) / 2)`.
pub fn half_bound(n: usize, k: usize) -> usize {
    (n - k).div_ceil(2)
}

/// Output of a migration strategy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Migration {
    pub result: VertexSet,
    pub trace: MigrationTrace,
}

/// An algorithm turning a forcing set into another of the same size.
pub trait MigrationStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn migrate(&self, g: &Graph, b: &VertexSet) -> Result<Migration>;
    /// Whether `result` satisfies this strategy's output guarantee.
    fn postcondition(&self, g: &Graph, result: &VertexSet) -> Result<bool>;
}

#[derive(Default)]
pub struct StrategyRegistry {
    entries: BTreeMap<&'static str, Box<dyn MigrationStrategy>>,
}

impl StrategyRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn register(&mut self, strategy: Box<dyn MigrationStrategy>) {
        self.entries.insert(strategy.name(), strategy);
    }

    pub fn get(&self, name: &str) -> Result<&dyn MigrationStrategy> {
        self.entries
            .get(name)
            .map(|s| s.as_ref())
            .ok_or_else(|| Error::Unknown { kind: "migration strategy", name: name.to_string() })
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn MigrationStrategy> {
        self.entries.values().map(|s| s.as_ref())
    }

    pub fn builtin() -> &'static Self {
        static REGISTRY: OnceLock<StrategyRegistry> = OnceLock::new();
        REGISTRY.get_or_init(|| {
            let mut reg = Self::new();
            reg.register(Box::new(SpreadComponents));
            reg.register(Box::new(BalanceComponentTimes));
            reg
        })
    }
}
