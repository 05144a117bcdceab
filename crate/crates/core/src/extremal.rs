//! Throttling, Nordhaus-Gaddum sums and exhaustive extremal searches over the
//! built-in enumeration.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{
    canonical_label, enumerate_graphs, parse_graph6, psd_zero_forcing_number, pt_plus, pt_plus_k,
    CanonicalLabel, Error, Graph, Limits, Result, VertexSet,
};

/// `th+(G) = min_k (k + pt+(G, k))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Throttling {
    pub value: usize,
    /// Least `k` attaining the minimum.
    pub k: usize,
    pub witness: VertexSet,
    pub z_plus: usize,
}

pub fn throttling_number(g: &Graph, limits: &Limits) -> Result<Throttling> {
    let n = g.order();
    let z = psd_zero_forcing_number(g, limits)?.value;
    let mut best: Option<Throttling> = None;
    for k in z..=n {
        if best.as_ref().is_some_and(|b| k >= b.value) {
            break;
        }
        let e = pt_plus_k(g, k, limits)?;
        if best.as_ref().is_none_or(|b| k + e.time < b.value) {
            best = Some(Throttling { value: k + e.time, k, witness: e.witness, z_plus: z });
        }
    }
    let best = best.expect("k = Z+ is always evaluated");
    if best.value > (n + z).div_ceil(2) {
        return Err(Error::InvariantViolation(format!(
            "th+ = {} exceeds ceil((n + Z+)/2) = {}",
            best.value,
            (n + z).div_ceil(2)
        )));
    }
    Ok(best)
}

/// Nordhaus-Gaddum sums of `pt+` and `Z+` over `G` and its complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NordhausGaddum {
    pub n: usize,
    pub pt_sum: usize,
    pub z_sum: usize,
    /// `1 <= pt_sum <= n/2 + 2`.
    pub pt_in_bounds: bool,
    /// `n - 2 <= z_sum <= 2n - 1`.
    pub z_in_bounds: bool,
}

fn require_order_two(g: &Graph) -> Result<()> {
    if g.order() < 2 {
        return Err(Error::InvalidParameter("Nordhaus-Gaddum sums need order >= 2".into()));
    }
    Ok(())
}

pub fn ng_pt_sum(g: &Graph, limits: &Limits) -> Result<usize> {
    require_order_two(g)?;
    Ok(pt_plus(g, limits)?.time + pt_plus(&g.complement(), limits)?.time)
}

pub fn ng_z_sum(g: &Graph, limits: &Limits) -> Result<usize> {
    require_order_two(g)?;
    Ok(psd_zero_forcing_number(g, limits)?.value + psd_zero_forcing_number(&g.complement(), limits)?.value)
}

pub fn nordhaus_gaddum(g: &Graph, limits: &Limits) -> Result<NordhausGaddum> {
    let n = g.order();
    let pt_sum = ng_pt_sum(g, limits)?;
    let z_sum = ng_z_sum(g, limits)?;
    Ok(NordhausGaddum {
        n,
        pt_sum,
        z_sum,
        // pt_sum <= n/2 + 2  <=>  2 pt_sum <= n + 4
        pt_in_bounds: pt_sum >= 1 && 2 * pt_sum <= n + 4,
        z_in_bounds: z_sum + 2 >= n && z_sum < 2 * n,
    })
}

/// A graph with its computed invariants; serialised with the keys
/// `g6, n, z+, pt+, th+, ng_pt, ng_z` (optional ones omitted when absent).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalRecord {
    #[serde(rename = "g6")]
    pub label: CanonicalLabel,
    pub n: usize,
    #[serde(rename = "z+")]
    pub z_plus: usize,
    #[serde(rename = "pt+")]
    pub pt_plus: usize,
    #[serde(rename = "th+", default, skip_serializing_if = "Option::is_none")]
    pub th_plus: Option<usize>,
    #[serde(rename = "ng_pt", default, skip_serializing_if = "Option::is_none")]
    pub ng_pt_sum: Option<usize>,
    #[serde(rename = "ng_z", default, skip_serializing_if = "Option::is_none")]
    pub ng_z_sum: Option<usize>,
}

impl ExtremalRecord {
    pub fn compute(g: &Graph, limits: &Limits) -> Result<Self> {
        let e = pt_plus(g, limits)?;
        Ok(Self {
            label: canonical_label(g)?,
            n: g.order(),
            z_plus: e.k,
            pt_plus: e.time,
            th_plus: None,
            ng_pt_sum: None,
            ng_z_sum: None,
        })
    }

    pub fn with_throttling(mut self, g: &Graph, limits: &Limits) -> Result<Self> {
        self.th_plus = Some(throttling_number(g, limits)?.value);
        Ok(self)
    }

    pub fn with_nordhaus_gaddum(mut self, g: &Graph, limits: &Limits) -> Result<Self> {
        let ng = nordhaus_gaddum(g, limits)?;
        self.ng_pt_sum = Some(ng.pt_sum);
        self.ng_z_sum = Some(ng.z_sum);
        Ok(self)
    }

    pub fn graph(&self) -> Result<Graph> {
        parse_graph6(self.label.as_str())
    }

    /// Recomputes every populated field from the stored graph6 label.
    pub fn verify(&self, limits: &Limits) -> Result<bool> {
        let g = self.graph()?;
        let mut fresh = Self::compute(&g, limits)?;
        if self.th_plus.is_some() {
            fresh = fresh.with_throttling(&g, limits)?;
        }
        if self.ng_pt_sum.is_some() || self.ng_z_sum.is_some() {
            fresh = fresh.with_nordhaus_gaddum(&g, limits)?;
        }
        Ok(&fresh == self)
    }
}

/// Largest `k` accepted by [`classify_extremal`].
pub const MAX_EXTREMAL_K: usize = 4;

/// Per-order JSON-lines cache for long enumerations. Files are named
/// `<task>_n<n>_k<k>.jsonl` inside the directory.
#[derive(Clone, Debug)]
pub struct Checkpoint {
    dir: PathBuf,
}

impl Checkpoint {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Self { dir })
    }

    pub fn path(&self, task: &str, n: usize, k: usize) -> PathBuf {
        self.dir.join(format!("{task}_n{n}_k{k}.jsonl"))
    }

    pub fn load(&self, task: &str, n: usize, k: usize) -> Result<Option<Vec<ExtremalRecord>>> {
        let path = self.path(task, n, k);
        if !path.exists() {
            return Ok(None);
        }
        let mut out = Vec::new();
        for line in BufReader::new(fs::File::open(&path)?).lines() {
            let line = line?;
            if !line.trim().is_empty() {
                out.push(serde_json::from_str(&line)?);
            }
        }
        Ok(Some(out))
    }

    /// Writes through a temporary file so an interrupted run leaves no partial checkpoint.
    pub fn store(&self, task: &str, n: usize, k: usize, records: &[ExtremalRecord]) -> Result<()> {
        let path = self.path(task, n, k);
        let tmp = path.with_extension("jsonl.tmp");
        {
            let mut f = fs::File::create(&tmp)?;
            write_records(&mut f, records)?;
            f.flush()?;
        }
        fs::rename(tmp, path)?;
        Ok(())
    }
}

pub fn write_records<W: Write>(out: &mut W, records: &[ExtremalRecord]) -> Result<()> {
    for r in records {
        serde_json::to_writer(&mut *out, r)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

fn classify_order(n: usize, k: usize, limits: &Limits) -> Result<Vec<ExtremalRecord>> {
    if n < k {
        return Ok(Vec::new());
    }
    let graphs = enumerate_graphs(n, false)?;
    let found: Vec<Option<ExtremalRecord>> = graphs
        .par_iter()
        .map(|g| {
            if g.size() == 0 {
                return Ok(None);
            }
            let r = ExtremalRecord::compute(g, limits)?;
            Ok((r.pt_plus + k == n).then_some(r))
        })
        .collect::<Result<_>>()?;
    let mut out: Vec<ExtremalRecord> = found.into_iter().flatten().collect();
    out.sort_by(|a, b| a.label.cmp(&b.label));
    Ok(out)
}

/// Every isomorphism class with `pt+(G) = |V(G)| - k`, ordered by order then label.
///
/// Only orders up to `2k` are searched: above that `pt+(G) < |V(G)| - k`.
/// The edgeless graph on `k` vertices (trivially `pt+ = 0 = n - k`) is left out.
pub fn classify_extremal(k: usize, limits: &Limits, checkpoint: Option<&Checkpoint>) -> Result<Vec<ExtremalRecord>> {
    if !(1..=MAX_EXTREMAL_K).contains(&k) {
        return Err(Error::InvalidParameter(format!("k must be in 1..={MAX_EXTREMAL_K}, got {k}")));
    }
    let mut out = Vec::new();
    for n in 1..=2 * k {
        let records = match checkpoint.map(|c| c.load("extremal", n, k)).transpose()?.flatten() {
            Some(cached) => cached,
            None => {
                let fresh = classify_order(n, k, limits)?;
                if let Some(c) = checkpoint {
                    c.store("extremal", n, k, &fresh)?;
                }
                fresh
            }
        };
        out.extend(records);
    }
    Ok(out)
}

/// Largest order accepted by [`zeta`] and [`ng_search`].
pub const MAX_SEARCH_ORDER: usize = 7;

fn check_search_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_SEARCH_ORDER {
        return Err(Error::OrderTooLarge { n, max: MAX_SEARCH_ORDER, what: "exhaustive search" });
    }
    Ok(())
}

/// `ζ(n, k) = max { pt+(G) : |V(G)| = n, Z+(G) = k }` with every maximiser.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Zeta {
    pub n: usize,
    pub k: usize,
    pub value: usize,
    pub witnesses: Vec<CanonicalLabel>,
}

pub fn zeta(n: usize, k: usize, limits: &Limits) -> Result<Zeta> {
    check_search_order(n)?;
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!("need 1 <= k <= n, got k = {k}, n = {n}")));
    }
    let graphs = enumerate_graphs(n, false)?;
    let records: Vec<ExtremalRecord> =
        graphs.par_iter().map(|g| ExtremalRecord::compute(g, limits)).collect::<Result<_>>()?;
    let matching: Vec<&ExtremalRecord> = records.iter().filter(|r| r.z_plus == k).collect();
    let value = matching.iter().map(|r| r.pt_plus).max().ok_or(Error::NoGraphWithZPlus { n, k })?;
    if value > (n - k).div_ceil(2) {
        return Err(Error::InvariantViolation(format!("ζ({n},{k}) = {value} exceeds ceil((n-k)/2)")));
    }
    let witnesses = matching.iter().filter(|r| r.pt_plus == value).map(|r| r.label.clone()).collect();
    Ok(Zeta { n, k, value, witnesses })
}

/// Histogram of `pt+(G) + pt+(Ḡ)` over all classes of one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NgSummary {
    pub n: usize,
    pub histogram: BTreeMap<usize, usize>,
    pub max_sum: usize,
    /// Graphs attaining `max_sum`.
    pub maximizers: Vec<CanonicalLabel>,
    /// `ceil(n/2) + 2`; equals the upper bound `n/2 + 2` for even `n`.
    pub target: usize,
    pub target_attained: bool,
    pub target_graphs: Vec<CanonicalLabel>,
    /// Every class satisfied both sum bounds.
    pub all_within_bounds: bool,
}

pub fn ng_search(n: usize, limits: &Limits) -> Result<NgSummary> {
    check_search_order(n)?;
    if n < 2 {
        return Err(Error::InvalidParameter("Nordhaus-Gaddum search needs n >= 2".into()));
    }
    let graphs = enumerate_graphs(n, false)?;
    let sums: Vec<(CanonicalLabel, NordhausGaddum)> = graphs
        .par_iter()
        .map(|g| Ok((canonical_label(g)?, nordhaus_gaddum(g, limits)?)))
        .collect::<Result<_>>()?;
    let mut histogram = BTreeMap::new();
    for (_, ng) in &sums {
        *histogram.entry(ng.pt_sum).or_insert(0) += 1;
    }
    let max_sum = sums.iter().map(|(_, ng)| ng.pt_sum).max().unwrap_or(0);
    let target = n.div_ceil(2) + 2;
    let with = |s: usize| -> Vec<CanonicalLabel> {
        sums.iter().filter(|(_, ng)| ng.pt_sum == s).map(|(l, _)| l.clone()).collect()
    };
    let target_graphs = with(target);
    Ok(NgSummary {
        n,
        histogram,
        max_sum,
        maximizers: with(max_sum),
        target,
        target_attained: !target_graphs.is_empty(),
        target_graphs,
        all_within_bounds: sums.iter().all(|(_, ng)| ng.pt_in_bounds && ng.z_in_bounds),
    })
}

/// Reads JSON-lines records (e.g. a frozen fixture).
pub fn read_records(path: &Path) -> Result<Vec<ExtremalRecord>> {
    let text = fs::read_to_string(path)?;
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(Error::from))
        .collect()
}
