//! Canonical labelling and isomorph-free enumeration of small graphs.
//!
//! The canonical isomorph is the relabelling whose upper-triangle bit string
//! (graph6 bit order) is lexicographically least among all relabellings
//! compatible with the equitable refinement of the degree partition. Search
//! branches by individualising each vertex of the first non-singleton cell;
//! twin vertices (same neighbourhood apart from each other) are interchangeable
//! and only one of them is tried.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{write_graph6, Error, Graph, Result};

/// Largest order accepted by [`canonical_label`].
pub const MAX_CANON_ORDER: usize = 10;
/// Largest order produced by [`enumerate_graphs`].
pub const MAX_ENUM_ORDER: usize = 8;

/// graph6 string of a graph's canonical isomorph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalLabel(String);

impl CanonicalLabel {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

struct Canonizer {
    n: usize,
    rows: Vec<u64>,
    best: Option<(u64, Vec<usize>)>,
}

impl Canonizer {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let rows = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, u| m | 1 << u))
            .collect();
        Self { n, rows, best: None }
    }

    fn cell_mask(cell: &[usize]) -> u64 {
        cell.iter().fold(0, |m, &v| m | 1 << v)
    }

    /// Splits cells by neighbour counts into every cell until stable.
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        loop {
            let masks: Vec<u64> = cells.iter().map(|c| Self::cell_mask(c)).collect();
            let mut next = Vec::with_capacity(self.n);
            let mut split = false;
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let key = masks.iter().map(|m| (self.rows[v] & m).count_ones()).collect();
                        (key, v)
                    })
                    .collect();
                keyed.sort();
                let mut group: Vec<usize> = Vec::new();
                for i in 0..keyed.len() {
                    if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                        next.push(std::mem::take(&mut group));
                        split = true;
                    }
                    group.push(keyed[i].1);
                }
                next.push(group);
            }
            cells = next;
            if !split {
                return cells;
            }
        }
    }

    fn code(&self, order: &[usize]) -> u64 {
        let mut code = 0u64;
        for j in 1..self.n {
            let row = self.rows[order[j]];
            for &u in &order[..j] {
                code = (code << 1) | (row >> u & 1);
            }
        }
        code
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        self.rows[u] & !(1 << v) == self.rows[v] & !(1 << u)
    }

    fn search(&mut self, cells: Vec<Vec<usize>>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            let code = self.code(&order);
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, order));
            }
            return;
        };
        let cell = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let mut branch = Vec::with_capacity(cells.len() + 1);
            branch.extend_from_slice(&cells[..target]);
            branch.push(vec![v]);
            branch.push(cell.iter().copied().filter(|&u| u != v).collect());
            branch.extend_from_slice(&cells[target + 1..]);
            let refined = self.refine(branch);
            self.search(refined);
        }
    }

    fn run(mut self) -> Vec<usize> {
        let mut by_degree: Vec<usize> = (0..self.n).collect();
        by_degree.sort_by_key(|&v| (self.rows[v].count_ones(), v));
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for v in by_degree {
            match cells.last_mut() {
                Some(c) if self.rows[c[0]].count_ones() == self.rows[v].count_ones() => c.push(v),
                _ => cells.push(vec![v]),
            }
        }
        let cells = self.refine(cells);
        self.search(cells);
        self.best.expect("at least one leaf").1
    }
}

/// The canonical isomorph of `g` (order at most [`MAX_CANON_ORDER`]).
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::OrderTooLarge { n, max: MAX_CANON_ORDER, what: "canonical labelling" });
    }
    let order = Canonizer::new(g).run();
    let mut perm = vec![0; n];
    for (position, &v) in order.iter().enumerate() {
        perm[v] = position;
    }
    Ok(g.permuted(&perm))
}

pub fn canonical_label(g: &Graph) -> Result<CanonicalLabel> {
    canonical_form(g).map(|c| CanonicalLabel(write_graph6(&c)))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

static LEVELS: [OnceLock<Vec<Graph>>; MAX_ENUM_ORDER + 1] = [const { OnceLock::new() }; MAX_ENUM_ORDER + 1];

/// Canonical representatives of order `n`, sorted by graph6 label.
fn level(n: usize) -> &'static [Graph] {
    LEVELS[n].get_or_init(|| {
        if n == 1 {
            return vec![Graph::empty(1).expect("n = 1")];
        }
        let parents = level(n - 1);
        let found: HashSet<Graph> = parents
            .par_iter()
            .flat_map_iter(|parent| {
                (0u64..1 << (n - 1)).map(move |mask| {
                    let mut g = parent.disjoint_union(&Graph::empty(1).expect("n = 1"));
                    for u in (0..n - 1).filter(|u| mask >> u & 1 == 1) {
                        g.add_edge(u, n - 1);
                    }
                    canonical_form(&g).expect("order within range")
                })
            })
            .collect();
        let mut graphs: Vec<(String, Graph)> = found.into_iter().map(|g| (write_graph6(&g), g)).collect();
        graphs.sort_by(|a, b| a.0.cmp(&b.0));
        graphs.into_iter().map(|(_, g)| g).collect()
    })
}

/// One representative per isomorphism class of order `n`, in canonical form
/// and sorted by canonical label.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ENUM_ORDER {
        return Err(Error::OrderTooLarge { n, max: MAX_ENUM_ORDER, what: "built-in enumeration" });
    }
    Ok(level(n)
        .iter()
        .filter(|g| !connected_only || g.is_connected())
        .cloned()
        .collect())
}
