#![allow(dead_code)]

use psdzf::{enumerate_graphs, Graph, VertexSet};

#[path = "../../src/oracle.rs"]
pub mod oracle;

pub fn graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(|i| enumerate_graphs(i, false).unwrap()).collect()
}

pub fn matrix(g: &Graph) -> oracle::Matrix {
    oracle::Matrix::new(g.order(), &g.edges())
}

pub fn mask_set(mask: u64) -> VertexSet {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn set_mask(s: &VertexSet) -> u64 {
    s.iter().fold(0, |acc, v| acc | 1 << v)
}

/// Every subset of `V(g)` as a bitmask.
pub fn subsets(g: &Graph) -> impl Iterator<Item = u64> {
    0..1u64 << g.order()
}

pub fn random_graph(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bits.get(i).copied().unwrap_or(false) {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}
