//! Exact subset scans for `Z+(G)`, `pt+(G, k)` and `pt+(G)`.
//!
//! Subsets are visited in lexicographic order of their sorted members, so the
//! first optimum found is the lexicographically least witness. Isolated
//! vertices can never be forced and are placed in every candidate set.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::psd::propagation_time;
use crate::{Error, Graph, Result, VertexSet};

/// Desk-scale caps for the exhaustive scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest order for which `Z+` is computed.
    pub max_n: usize,
    /// Largest `C(n, k)` scanned by [`pt_plus_k`].
    pub max_subsets: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_n: 12, max_subsets: 1_000_000 }
    }
}

/// `Z+(G)` with the lexicographically least minimum forcing set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingNumber {
    pub value: usize,
    pub witness: VertexSet,
}

/// `pt+(G, k)` with the lexicographically least `k`-efficient set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EfficientSet {
    pub k: usize,
    pub time: usize,
    pub witness: VertexSet,
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Calls `visit` with every `r`-subset of `pool` (ascending) in lexicographic order.
pub fn for_each_combination<F>(pool: &[usize], r: usize, mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = pool.len();
    if r > n {
        return;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    let mut chosen: Vec<usize> = idx.iter().map(|&i| pool[i]).collect();
    loop {
        if visit(&chosen).is_break() {
            return;
        }
        let Some(i) = (0..r).rev().find(|&i| idx[i] != i + n - r) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
        for j in i..r {
            chosen[j] = pool[idx[j]];
        }
    }
}

fn check_order(g: &Graph, limits: &Limits) -> Result<()> {
    if g.order() > limits.max_n {
        return Err(Error::OrderTooLarge { n: g.order(), max: limits.max_n, what: "Z+ search" });
    }
    Ok(())
}

/// First size-`k` forcing set in lexicographic order, if any.
fn first_forcing_set(g: &Graph, k: usize, isolated: &VertexSet, pool: &[usize]) -> Option<VertexSet> {
    if k < isolated.len() {
        return None;
    }
    let mut found = None;
    for_each_combination(pool, k - isolated.len(), |chosen| {
        let mut b = isolated.clone();
        b.extend(chosen.iter().copied());
        if propagation_time(g, &b, None).is_some() {
            found = Some(b);
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    found
}

/// `Z+(G)`: the least size of a PSD forcing set.
pub fn psd_zero_forcing_number(g: &Graph, limits: &Limits) -> Result<ForcingNumber> {
    check_order(g, limits)?;
    let isolated = g.isolated_vertices();
    let pool: Vec<usize> = (0..g.order()).filter(|&v| !isolated.contains(v)).collect();
    for k in isolated.len()..=g.order() {
        if let Some(witness) = first_forcing_set(g, k, &isolated, &pool) {
            return Ok(ForcingNumber { value: k, witness });
        }
    }
    Err(Error::InvariantViolation("V(G) is not a PSD forcing set".into()))
}

/// `pt+(G, k)`: least propagation time over PSD forcing sets of size `k`.
pub fn pt_plus_k(g: &Graph, k: usize, limits: &Limits) -> Result<EfficientSet> {
    let n = g.order();
    if k > n {
        return Err(Error::InvalidParameter(format!("k = {k} exceeds the order {n}")));
    }
    let count = binomial(n, k);
    if count > limits.max_subsets as u128 {
        return Err(Error::SubsetCapExceeded { n, k, count, max: limits.max_subsets });
    }
    let isolated = g.isolated_vertices();
    if k < isolated.len() {
        return Err(Error::NoForcingSetOfSize { k });
    }
    let pool: Vec<usize> = (0..n).filter(|&v| !isolated.contains(v)).collect();
    let floor = usize::from(k < n);
    let mut best: Option<(usize, VertexSet)> = None;
    for_each_combination(&pool, k - isolated.len(), |chosen| {
        let mut b = isolated.clone();
        b.extend(chosen.iter().copied());
        // best > floor here, so this cannot underflow
        let limit = best.as_ref().map(|(t, _)| t - 1);
        if let Some(t) = propagation_time(g, &b, limit) {
            best = Some((t, b));
            if t == floor {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    match best {
        Some((time, witness)) => Ok(EfficientSet { k, time, witness }),
        None => Err(Error::NoForcingSetOfSize { k }),
    }
}

/// `pt+(G) = pt+(G, Z+(G))` with an efficient witness.
pub fn pt_plus(g: &Graph, limits: &Limits) -> Result<EfficientSet> {
    let z = psd_zero_forcing_number(g, limits)?;
    pt_plus_k(g, z.value, limits)
}
