//! Immutable simple undirected graphs with bitset adjacency rows.

use std::fmt;

use crate::{Error, Result, VertexSet};

/// Simple undirected graph on vertices `0..n`, `n >= 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// An induced subgraph together with the vertex correspondence.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `old_to_new[v]` is the new id of `v`, or `None` when `v` was dropped.
    pub old_to_new: Vec<Option<usize>>,
    /// `new_to_old[i]` is the original id of new vertex `i`.
    pub new_to_old: Vec<usize>,
}

impl InducedSubgraph {
    pub fn map_in(&self, set: &VertexSet) -> VertexSet {
        set.iter().filter_map(|v| self.old_to_new.get(v).copied().flatten()).collect()
    }

    pub fn map_out(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|v| self.new_to_old[v]).collect()
    }
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(Self { n, adj: vec![VertexSet::new(); n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.last() {
            Some(m) if m >= self.n => Err(Error::VertexOutOfRange { vertex: m, n: self.n }),
            _ => Ok(()),
        }
    }

    /// Copy of the graph with edge `uv` deleted.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        Ok(g)
    }

    /// Vertex sets of the components of `G - removed`, ordered by least vertex.
    pub fn components(&self, removed: &VertexSet) -> Vec<VertexSet> {
        self.components_within(&self.vertices().difference(removed))
    }

    /// Components of the subgraph induced by `alive`.
    pub fn components_within(&self, alive: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = alive.clone();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let comp = self.reach(start, &remaining);
            remaining.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` inside `alive` (which must contain `start`).
    pub fn reach(&self, start: usize, alive: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for u in &frontier {
                next.union_with(&self.adj[u]);
            }
            next.intersect_with(alive);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, &self.vertices()).len() == self.n
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// All bridges `(u, v)` with `u < v`, sorted, found by low-link numbering.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        const UNSEEN: usize = usize::MAX;
        let n = self.n;
        let mut order = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut counter = 0;
        let mut out = Vec::new();
        for root in 0..n {
            if order[root] != UNSEEN {
                continue;
            }
            order[root] = counter;
            low[root] = counter;
            counter += 1;
            // (vertex, parent, remaining neighbours)
            let mut stack: Vec<(usize, usize, Vec<usize>)> =
                vec![(root, UNSEEN, self.adj[root].to_vec())];
            while let Some((v, parent, pending)) = stack.last_mut() {
                let (v, parent) = (*v, *parent);
                if let Some(u) = pending.pop() {
                    if u == parent {
                        continue;
                    }
                    if order[u] == UNSEEN {
                        order[u] = counter;
                        low[u] = counter;
                        counter += 1;
                        stack.push((u, v, self.adj[u].to_vec()));
                    } else {
                        low[v] = low[v].min(order[u]);
                    }
                } else {
                    stack.pop();
                    if parent != UNSEEN {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > order[parent] {
                            out.push((parent.min(v), parent.max(v)));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Whether edge `uv` is a bridge.
    pub fn is_bridge(&self, u: usize, v: usize) -> Result<bool> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        Ok(self.bridges().binary_search(&(u.min(v), u.max(v))).is_ok())
    }

    pub fn complement(&self) -> Self {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| {
                let mut row = all.difference(&self.adj[v]);
                row.remove(v);
                row
            })
            .collect();
        Self { n: self.n, adj }
    }

    /// `self ⊔ other`, with `other`'s vertices shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.n;
        let mut g = Self { n: self.n + other.n, adj: self.adj.clone() };
        g.adj.extend(other.adj.iter().map(|row| row.iter().map(|v| v + shift).collect()));
        g
    }

    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<InducedSubgraph> {
        if keep.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        self.check_set(keep)?;
        let new_to_old = keep.to_vec();
        let mut old_to_new = vec![None; self.n];
        for (i, &v) in new_to_old.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let adj = new_to_old
            .iter()
            .map(|&v| {
                self.adj[v]
                    .intersection(keep)
                    .iter()
                    .map(|u| old_to_new[u].expect("kept"))
                    .collect()
            })
            .collect();
        Ok(InducedSubgraph {
            graph: Self { n: keep.len(), adj },
            old_to_new,
            new_to_old,
        })
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::new(); self.n];
        for (u, row) in self.adj.iter().enumerate() {
            adj[perm[u]] = row.iter().map(|v| perm[v]).collect();
        }
        Self { n: self.n, adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
