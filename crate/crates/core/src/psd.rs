//! The PSD colour-change rule and synchronous propagation.
//!
//! Given a blue set `B`, let `W_1, ..., W_k` be the vertex sets of the
//! components of `G - B`. A blue `u` forces `w ∈ W_i` when `w` is the only
//! white neighbour of `u` inside `W_i`. Each round applies every available
//! force at once.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::{Error, Graph, Result, VertexSet};

/// `forcer -> target` at time step `step` (the round in which `target` turned blue).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ForceEvent {
    pub forcer: usize,
    pub target: usize,
    pub step: usize,
}

/// Serialised as `[forcer, target, step]`.
impl Serialize for ForceEvent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.forcer, self.target, self.step).serialize(s)
    }
}

impl<'de> Deserialize<'de> for ForceEvent {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (forcer, target, step) = <(usize, usize, usize)>::deserialize(d)?;
        Ok(Self { forcer, target, step })
    }
}

/// Full record of one propagation run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropagationSchedule {
    pub initial: VertexSet,
    /// `rounds[i]` holds the vertices forced at step `i + 1`.
    pub rounds: Vec<VertexSet>,
    /// One force per forced vertex; among several possible forcers the least id wins.
    pub assignments: Vec<ForceEvent>,
    pub succeeded: bool,
}

impl PropagationSchedule {
    /// `pt+(G; B)`, or `None` when `B` is not a PSD forcing set.
    pub fn propagation_time(&self) -> Option<usize> {
        self.succeeded.then_some(self.rounds.len())
    }

    /// Blue vertices after step `i` (`B^[i]`).
    pub fn blue_after(&self, i: usize) -> VertexSet {
        self.rounds[..i.min(self.rounds.len())]
            .iter()
            .fold(self.initial.clone(), |acc, r| acc.union(r))
    }

    pub fn final_blue(&self) -> VertexSet {
        self.blue_after(self.rounds.len())
    }

    /// Forces performed at step `step` (1-based).
    pub fn forces_at(&self, step: usize) -> impl Iterator<Item = &ForceEvent> {
        self.assignments.iter().filter(move |f| f.step == step)
    }
}

/// The forcing tree of one initial vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcingTree {
    pub vertices: VertexSet,
    /// `(forcer, target)` pairs inside the tree.
    pub edges: Vec<(usize, usize)>,
}

/// `V_b` for every initial vertex `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcingForest {
    pub trees: BTreeMap<usize, ForcingTree>,
}

/// Every valid PSD force for the blue set, sorted by `(target, forcer)`.
pub fn forceable(g: &Graph, blue: &VertexSet) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for comp in g.components(blue) {
        for u in blue {
            let inside = g.neighbors(u).intersection(&comp);
            if inside.len() == 1 {
                out.push((inside.first().expect("one member"), u));
            }
        }
    }
    out.sort_unstable();
    out.into_iter().map(|(t, f)| (f, t)).collect()
}

/// Vertices forced in the next round from `blue`.
pub(crate) fn next_round(g: &Graph, blue: &VertexSet) -> VertexSet {
    let mut forced = VertexSet::new();
    for comp in g.components(blue) {
        for u in blue {
            let nb = g.neighbors(u);
            if nb.intersection_len(&comp) == 1 {
                forced.union_with(&nb.intersection(&comp));
            }
        }
    }
    forced
}

/// Runs the synchronous process from `initial` until no force applies.
pub fn propagate(g: &Graph, initial: &VertexSet) -> Result<PropagationSchedule> {
    g.check_set(initial)?;
    let all = g.vertices();
    let mut blue = initial.clone();
    let mut rounds = Vec::new();
    let mut assignments = Vec::new();
    while blue != all {
        let forces = forceable(g, &blue);
        if forces.is_empty() {
            break;
        }
        let step = rounds.len() + 1;
        let mut round = VertexSet::new();
        for (forcer, target) in forces {
            if round.insert(target) {
                assignments.push(ForceEvent { forcer, target, step });
            }
        }
        blue.union_with(&round);
        rounds.push(round);
    }
    Ok(PropagationSchedule {
        initial: initial.clone(),
        rounds,
        assignments,
        succeeded: blue == all,
    })
}

/// Propagation time of `blue`, giving up once more than `limit` rounds would
/// be needed. `None` means "not forcing" or "slower than `limit`".
pub fn propagation_time(g: &Graph, blue: &VertexSet, limit: Option<usize>) -> Option<usize> {
    let all = g.vertices();
    let mut blue = blue.clone();
    let mut rounds = 0;
    while blue != all {
        if limit.is_some_and(|l| rounds >= l) {
            return None;
        }
        let forced = next_round(g, &blue);
        if forced.is_empty() {
            return None;
        }
        blue.union_with(&forced);
        rounds += 1;
    }
    Some(rounds)
}

pub fn is_psd_forcing_set(g: &Graph, b: &VertexSet) -> Result<bool> {
    g.check_set(b)?;
    Ok(propagation_time(g, b, None).is_some())
}

/// Builds the forcing trees from a successful schedule's assignments.
pub fn forcing_forest(g: &Graph, schedule: &PropagationSchedule) -> Result<ForcingForest> {
    if !schedule.succeeded {
        return Err(Error::NotForcing(schedule.initial.clone()));
    }
    let mut parent = vec![usize::MAX; g.order()];
    for f in &schedule.assignments {
        parent[f.target] = f.forcer;
    }
    let mut trees: BTreeMap<usize, ForcingTree> = schedule
        .initial
        .iter()
        .map(|b| (b, ForcingTree { vertices: VertexSet::singleton(b), edges: Vec::new() }))
        .collect();
    for f in &schedule.assignments {
        let mut root = f.forcer;
        while !schedule.initial.contains(root) {
            root = parent[root];
        }
        let tree = trees.get_mut(&root).expect("root is initial");
        tree.vertices.insert(f.target);
        tree.edges.push((f.forcer, f.target));
    }
    Ok(ForcingForest { trees })
}

/// Propagation time of one component of `G - B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentTime {
    pub component: VertexSet,
    pub time: usize,
}

/// For each component `C` of `G - b`, the propagation time of `b` in `G[C ∪ b]`.
pub fn component_pt(g: &Graph, b: &VertexSet) -> Result<Vec<ComponentTime>> {
    g.check_set(b)?;
    if propagation_time(g, b, None).is_none() {
        return Err(Error::NotForcing(b.clone()));
    }
    g.components(b)
        .into_iter()
        .map(|component| {
            let sub = g.induced_subgraph(&component.union(b))?;
            let time = propagation_time(&sub.graph, &sub.map_in(b), None).ok_or_else(|| {
                Error::InvariantViolation(format!("{b} forces G but not G[{component} ∪ B]"))
            })?;
            Ok(ComponentTime { component, time })
        })
        .collect()
}
