//! Named graph families, registered by name for runtime lookup
//! (`path:5`, `lollipop:6,5`, `h:1`, `figure3`, ...).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::{Error, Graph, Result, VertexSet};

/// A graph plus names for distinguished vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedGraph {
    #[serde(skip)]
    pub graph: Graph,
    pub names: BTreeMap<String, usize>,
}

impl NamedGraph {
    fn plain(graph: Graph) -> Self {
        Self { graph, names: BTreeMap::new() }
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.names
            .get(name)
            .copied()
            .ok_or_else(|| Error::Unknown { kind: "vertex name", name: name.to_string() })
    }

    /// Resolves a vertex given as a numeric id or a registered name.
    pub fn resolve(&self, token: &str) -> Result<usize> {
        let token = token.trim();
        let v = match token.parse::<usize>() {
            Ok(v) => v,
            Err(_) => self.vertex(token)?,
        };
        self.graph.check_vertex(v)?;
        Ok(v)
    }

    /// Parses a comma-separated list of ids and names.
    pub fn resolve_set(&self, list: &str) -> Result<VertexSet> {
        list.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| self.resolve(t))
            .collect()
    }

    pub fn set(&self, names: &[&str]) -> Result<VertexSet> {
        names.iter().map(|n| self.vertex(n)).collect()
    }
}

fn need(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(what()))
    }
}

pub fn path(n: usize) -> Result<Graph> {
    need(n >= 1, || "path needs n >= 1".into())?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    need(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    need(n >= 1, || "complete graph needs n >= 1".into())?;
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn empty(n: usize) -> Result<Graph> {
    need(n >= 1, || "empty graph needs n >= 1".into())?;
    Graph::empty(n)
}

/// `L(m, r)`: `K_m` on `0..m`, a path on `m..m+r`, and the edge `(m-1, m)`.
/// `v = m-1` is the clique vertex carrying the path, `w = m+r-1` its far end.
pub fn lollipop(m: usize, r: usize) -> Result<NamedGraph> {
    need(m >= 3 && r >= 1, || format!("lollipop needs m >= 3 and r >= 1, got ({m}, {r})"))?;
    let clique = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v)));
    let tail = (m..m + r).map(|i| (i - 1, i));
    let graph = Graph::from_edges(m + r, clique.chain(tail))?;
    let names = [("v".to_string(), m - 1), ("w".to_string(), m + r - 1)].into();
    Ok(NamedGraph { graph, names })
}

/// `H_{2k+8}`: the 14-edge self-complementary core on
/// `z=0, z'=1, x=2, x'=3, y=4, y'=5, a0=6, b0=7`, with pendant paths
/// `a0-a1-...-ak` on `8..8+k` and `b0-b1-...-bk` on `8+k..8+2k`.
pub fn h_family(k: usize) -> Result<NamedGraph> {
    const CORE: [&str; 8] = ["z", "z'", "x", "x'", "y", "y'", "a0", "b0"];
    let id = |name: &str| CORE.iter().position(|&c| c == name).expect("core vertex");
    let core = [
        ("z", "y"),
        ("y", "b0"),
        ("b0", "x'"),
        ("x'", "z'"),
        ("z'", "y'"),
        ("y'", "a0"),
        ("a0", "x"),
        ("x", "z"),
        ("z", "z'"),
        ("x", "y"),
        ("x", "y'"),
        ("x'", "y"),
        ("x'", "y'"),
        ("y", "y'"),
    ];
    let mut names: BTreeMap<String, usize> =
        CORE.iter().enumerate().map(|(i, c)| (c.to_string(), i)).collect();
    let mut edges: Vec<(usize, usize)> = core.iter().map(|&(a, b)| (id(a), id(b))).collect();
    let (mut prev_a, mut prev_b) = (id("a0"), id("b0"));
    for i in 1..=k {
        let (a, b) = (7 + i, 7 + k + i);
        names.insert(format!("a{i}"), a);
        names.insert(format!("b{i}"), b);
        edges.push((prev_a, a));
        edges.push((prev_b, b));
        (prev_a, prev_b) = (a, b);
    }
    Ok(NamedGraph { graph: Graph::from_edges(2 * k + 8, edges)?, names })
}

type Point = (i32, i32);

/// Builds a graph drawn on integer grid points; every drawn segment is split at
/// the grid vertices it passes through.
fn grid_graph(
    columns: std::ops::RangeInclusive<i32>,
    segments: &[(Point, Point)],
    labels: &[(&str, Point)],
) -> NamedGraph {
    let x0 = *columns.start();
    let width = (columns.end() - x0 + 1) as usize;
    let id = |(x, y): (i32, i32)| ((x - x0) as usize) * 3 + y as usize;
    let points: Vec<(i32, i32)> = columns.clone().flat_map(|x| (0..3).map(move |y| (x, y))).collect();
    let mut edges = Vec::new();
    for &(p, q) in segments {
        // grid points on the closed segment p..q, ordered from p
        let mut on: Vec<(i32, i32)> = points
            .iter()
            .copied()
            .filter(|&r| {
                let cross = (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0);
                cross == 0
                    && r.0 >= p.0.min(q.0)
                    && r.0 <= p.0.max(q.0)
                    && r.1 >= p.1.min(q.1)
                    && r.1 <= p.1.max(q.1)
            })
            .collect();
        on.sort_by_key(|r| (r.0 - p.0).abs() + (r.1 - p.1).abs());
        edges.extend(on.windows(2).map(|w| (id(w[0]), id(w[1]))));
    }
    let graph = Graph::from_edges(width * 3, edges).expect("grid edges are valid");
    let names = labels.iter().map(|&(name, p)| (name.to_string(), id(p))).collect();
    NamedGraph { graph, names }
}

/// The 9-vertex example whose set `{b1, b2, b3}` shifts to `{v1, v2, b3}` with
/// propagation time one lower. Vertex `(x, y)` of the 3x3 drawing (x = 1..3,
/// y = 0..2) has id `3(x-1) + y`.
pub fn figure3_example() -> NamedGraph {
    grid_graph(
        1..=3,
        &[
            ((1, 0), (3, 0)),
            ((3, 0), (3, 2)),
            ((3, 2), (1, 2)),
            ((1, 2), (1, 0)),
            ((1, 0), (3, 2)),
            ((2, 0), (3, 1)),
            ((2, 2), (2, 0)),
            ((1, 1), (3, 1)),
        ],
        &[("b1", (1, 2)), ("b2", (1, 1)), ("b3", (1, 0)), ("v1", (2, 2)), ("v2", (2, 1))],
    )
}

/// The 15-vertex example where shifting forcers in one component of
/// `G - {b1, b2, b3}` keeps a forcing set but shifting in both does not.
/// Vertex `(x, y)` (x = -1..3, y = 0..2) has id `3(x+1) + y`.
pub fn figure4_example() -> NamedGraph {
    grid_graph(
        -1..=3,
        &[
            ((0, 0), (0, 2)),
            ((0, 2), (2, 2)),
            ((2, 2), (2, 0)),
            ((2, 0), (0, 0)),
            ((0, 1), (2, 1)),
            ((2, 1), (1, 0)),
            ((1, 0), (1, 2)),
            ((1, 2), (0, 0)),
            ((0, 0), (1, 1)),
            ((0, 0), (-1, 0)),
            ((-1, 0), (-1, 1)),
            ((-1, 1), (0, 1)),
            ((-1, 1), (-1, 2)),
            ((-1, 2), (0, 2)),
            ((2, 0), (3, 0)),
            ((3, 0), (3, 1)),
            ((3, 1), (2, 1)),
            ((3, 1), (3, 2)),
            ((3, 2), (2, 2)),
        ],
        &[
            ("b1", (1, 2)),
            ("b2", (1, 1)),
            ("b3", (1, 0)),
            ("v1", (2, 2)),
            ("v2", (2, 1)),
            ("v3", (0, 0)),
        ],
    )
}

/// A constructor selectable by name.
pub trait Family: Send + Sync {
    fn name(&self) -> &'static str;
    /// Parameter names, in order.
    fn params(&self) -> &'static [&'static str];
    fn description(&self) -> &'static str;
    fn build(&self, params: &[usize]) -> Result<NamedGraph>;
}

struct FnFamily {
    name: &'static str,
    params: &'static [&'static str],
    description: &'static str,
    build: fn(&[usize]) -> Result<NamedGraph>,
}

impl Family for FnFamily {
    fn name(&self) -> &'static str {
        self.name
    }

    fn params(&self) -> &'static [&'static str] {
        self.params
    }

    fn description(&self) -> &'static str {
        self.description
    }

    fn build(&self, params: &[usize]) -> Result<NamedGraph> {
        if params.len() != self.params.len() {
            return Err(Error::InvalidParameter(format!(
                "{} takes {} parameter(s) ({}), got {}",
                self.name,
                self.params.len(),
                self.params.join(","),
                params.len()
            )));
        }
        (self.build)(params)
    }
}

#[derive(Default)]
pub struct FamilyRegistry {
    entries: BTreeMap<&'static str, Box<dyn Family>>,
}

impl FamilyRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn register(&mut self, family: Box<dyn Family>) {
        self.entries.insert(family.name(), family);
    }

    pub fn get(&self, name: &str) -> Result<&dyn Family> {
        self.entries
            .get(name)
            .map(|f| f.as_ref())
            .ok_or_else(|| Error::Unknown { kind: "family", name: name.to_string() })
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Family> {
        self.entries.values().map(|f| f.as_ref())
    }

    fn with_builtins() -> Self {
        let mut reg = Self::new();
        let builtins = [
            FnFamily {
                name: "path",
                params: &["n"],
                description: "path P_n",
                build: |p| path(p[0]).map(NamedGraph::plain),
            },
            FnFamily {
                name: "cycle",
                params: &["n"],
                description: "cycle C_n (n >= 3)",
                build: |p| cycle(p[0]).map(NamedGraph::plain),
            },
            FnFamily {
                name: "complete",
                params: &["n"],
                description: "complete graph K_n",
                build: |p| complete(p[0]).map(NamedGraph::plain),
            },
            FnFamily {
                name: "empty",
                params: &["n"],
                description: "edgeless graph on n vertices",
                build: |p| empty(p[0]).map(NamedGraph::plain),
            },
            FnFamily {
                name: "lollipop",
                params: &["m", "r"],
                description: "K_m joined by one edge to an end of P_r",
                build: |p| lollipop(p[0], p[1]),
            },
            FnFamily {
                name: "h",
                params: &["k"],
                description: "H_{2k+8}: self-complementary 8-vertex core with two pendant paths of length k",
                build: |p| h_family(p[0]),
            },
            FnFamily {
                name: "figure3",
                params: &[],
                description: "9-vertex single-component shift example",
                build: |_| Ok(figure3_example()),
            },
            FnFamily {
                name: "figure4",
                params: &[],
                description: "15-vertex two-component shift example",
                build: |_| Ok(figure4_example()),
            },
        ];
        for f in builtins {
            reg.register(Box::new(f));
        }
        reg
    }

    /// The process-wide registry of built-in families.
    pub fn builtin() -> &'static Self {
        static REGISTRY: OnceLock<FamilyRegistry> = OnceLock::new();
        REGISTRY.get_or_init(Self::with_builtins)
    }
}

/// `name` or `name:p1,p2,...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: String,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn build(&self) -> Result<NamedGraph> {
        FamilyRegistry::builtin().get(&self.family)?.build(&self.params)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (family, rest) = s.split_once(':').unwrap_or((s, ""));
        let params = rest
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("bad parameter `{p}` in `{s}`")))
            })
            .collect::<Result<_>>()?;
        let family = match family.trim() {
            "h_family" => "h".to_string(),
            other => other.to_string(),
        };
        Ok(Self { family, params })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        for (i, p) in self.params.iter().enumerate() {
            write!(f, "{}{p}", if i == 0 { ':' } else { ',' })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{are_isomorphic, canonical_label, pt_plus, psd_zero_forcing_number, Limits};

    #[test]
    fn basic_constructors() {
        assert_eq!(path(2).unwrap(), complete(2).unwrap());
        assert_eq!(complete(4).unwrap().size(), 6);
        assert_eq!(cycle(3).unwrap(), complete(3).unwrap());
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert!(lollipop(2, 1).is_err());
        assert!(lollipop(3, 0).is_err());
    }

    #[test]
    fn lollipop_layout() {
        let l = lollipop(6, 5).unwrap();
        assert_eq!(l.graph.order(), 11);
        assert_eq!(l.vertex("v").unwrap(), 5);
        assert_eq!(l.vertex("w").unwrap(), 10);
        assert_eq!(l.graph.degree(5), 6);
        assert_eq!(l.graph.degree(10), 1);
        // the edge from v towards w is a bridge, as are all tail edges
        assert!(l.graph.is_bridge(5, 6).unwrap());
        assert!(l.graph.is_bridge(9, 10).unwrap());
        let clique = l.graph.induced_subgraph(&VertexSet::full(6)).unwrap();
        assert_eq!(clique.graph, complete(6).unwrap());
    }

    #[test]
    fn lollipop_small_values() {
        let lim = Limits::default();
        let l31 = lollipop(3, 1).unwrap().graph;
        assert_eq!(l31.order(), 4);
        assert_eq!(psd_zero_forcing_number(&l31, &lim).unwrap().value, 2);
        assert_eq!(pt_plus(&l31, &lim).unwrap().time, 1);
        let l43 = lollipop(4, 3).unwrap().graph;
        assert_eq!(psd_zero_forcing_number(&l43, &lim).unwrap().value, 3);
        assert_eq!(pt_plus(&l43, &lim).unwrap().time, 2);
    }

    #[test]
    fn h8_structure() {
        let h = h_family(0).unwrap();
        let g = &h.graph;
        assert_eq!((g.order(), g.size()), (8, 14));
        assert_eq!(g.degree(h.vertex("a0").unwrap()), 2);
        assert_eq!(g.complement().degree(h.vertex("a0").unwrap()), 5);
        assert!(are_isomorphic(g, &g.complement()).unwrap());
        assert_eq!(canonical_label(g).unwrap(), canonical_label(&g.complement()).unwrap());
    }

    #[test]
    fn h_family_high_degree_vertices() {
        for k in 0..4 {
            let h = h_family(k).unwrap();
            assert_eq!(h.graph.order(), 2 * k + 8);
            let high: VertexSet = (0..h.graph.order()).filter(|&v| h.graph.degree(v) >= 4).collect();
            assert_eq!(high, h.set(&["x", "x'", "y", "y'"]).unwrap());
            if k > 0 {
                assert!(h.graph.has_edge(h.vertex("a0").unwrap(), h.vertex("a1").unwrap()));
                let ak = h.vertex(&format!("b{k}")).unwrap();
                assert_eq!(h.graph.degree(ak), 1);
            }
        }
    }

    #[test]
    fn figure_layouts() {
        let f3 = figure3_example();
        assert_eq!((f3.graph.order(), f3.graph.size()), (9, 15));
        let f4 = figure4_example();
        assert_eq!((f4.graph.order(), f4.graph.size()), (15, 25));
        assert_eq!(f4.resolve_set("b1, b2,v3").unwrap(), VertexSet::from([8, 7, 3]));
        assert!(f4.resolve_set("b1,q9").is_err());
        assert!(f4.resolve_set("15").is_err());
    }

    #[test]
    fn constructors_are_deterministic() {
        assert_eq!(h_family(2).unwrap(), h_family(2).unwrap());
        assert_eq!(figure4_example(), figure4_example());
    }

    #[test]
    fn spec_parsing_and_registry() {
        let s: FamilySpec = "lollipop:6,5".parse().unwrap();
        assert_eq!(s, FamilySpec { family: "lollipop".into(), params: vec![6, 5] });
        assert_eq!(s.to_string(), "lollipop:6,5");
        assert_eq!(s.build().unwrap().graph.order(), 11);
        let f: FamilySpec = "figure3".parse().unwrap();
        assert!(f.params.is_empty());
        assert_eq!("h_family:1".parse::<FamilySpec>().unwrap().build().unwrap().graph.order(), 10);
        assert!("path:x".parse::<FamilySpec>().is_err());
        assert!(matches!("nope:3".parse::<FamilySpec>().unwrap().build(), Err(Error::Unknown { .. })));
        assert!("path:3,4".parse::<FamilySpec>().unwrap().build().is_err());
        let names: Vec<&str> = FamilyRegistry::builtin().iter().map(|f| f.name()).collect();
        assert_eq!(names, ["complete", "cycle", "empty", "figure3", "figure4", "h", "lollipop", "path"]);
    }
}
