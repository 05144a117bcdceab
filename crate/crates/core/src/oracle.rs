//! Brute-force reference computations used only by tests.
//!
//! Deliberately naive and std-only: adjacency matrices, explicit DFS
//! component labelling, bitmask subset scans, permutation enumeration. It is
//! shared with the integration tests through `#[path]`.
#![allow(dead_code, clippy::needless_range_loop)]

#[derive(Clone, Debug)]
pub struct Matrix {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Matrix {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in edges {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Self { n, adj }
    }

    pub fn from_mask(n: usize, mask: u64) -> Self {
        let mut edges = Vec::new();
        let mut i = 0;
        for v in 1..n {
            for u in 0..v {
                if mask >> i & 1 == 1 {
                    edges.push((u, v));
                }
                i += 1;
            }
        }
        Self::new(n, &edges)
    }

    pub fn complement(&self) -> Self {
        let mut adj = self.adj.clone();
        for u in 0..self.n {
            for v in 0..self.n {
                adj[u][v] = u != v && !self.adj[u][v];
            }
        }
        Self { n: self.n, adj }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn isomorphic(a: &Matrix, b: &Matrix) -> bool {
    a.n == b.n
        && permutations(a.n).iter().any(|p| {
            (0..a.n).all(|u| (0..a.n).all(|v| a.adj[u][v] == b.adj[p[u]][p[v]]))
        })
}

/// Number of isomorphism classes of graphs on `n` vertices (all labelled
/// graphs, each reduced to its least code over every permutation).
pub fn count_classes(n: usize) -> usize {
    let perms = permutations(n);
    let pairs = n * n.saturating_sub(1) / 2;
    let mut seen = std::collections::HashSet::new();
    for mask in 0..1u64 << pairs {
        let m = Matrix::from_mask(n, mask);
        let best = perms
            .iter()
            .map(|p| {
                let mut code = 0u64;
                for v in 1..n {
                    for u in 0..v {
                        code = code << 1 | m.adj[p[u]][p[v]] as u64;
                    }
                }
                code
            })
            .min()
            .unwrap();
        seen.insert(best);
    }
    seen.len()
}

/// Labels the white vertices by component (`usize::MAX` for blue vertices).
fn white_components(m: &Matrix, blue: &[bool]) -> Vec<usize> {
    let mut label = vec![usize::MAX; m.n];
    let mut next = 0;
    for s in 0..m.n {
        if blue[s] || label[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        label[s] = next;
        while let Some(x) = stack.pop() {
            for y in 0..m.n {
                if m.adj[x][y] && !blue[y] && label[y] == usize::MAX {
                    label[y] = next;
                    stack.push(y);
                }
            }
        }
        next += 1;
    }
    label
}

/// Number of synchronous PSD rounds needed from `blue`, or `None` if it stalls.
pub fn psd_time(m: &Matrix, initial: &[bool]) -> Option<usize> {
    let mut blue = initial.to_vec();
    let mut rounds = 0;
    loop {
        if blue.iter().all(|&b| b) {
            return Some(rounds);
        }
        let label = white_components(m, &blue);
        let mut forced = vec![false; m.n];
        for u in 0..m.n {
            if !blue[u] {
                continue;
            }
            let mut per_comp: std::collections::HashMap<usize, Vec<usize>> = Default::default();
            for w in 0..m.n {
                if m.adj[u][w] && !blue[w] {
                    per_comp.entry(label[w]).or_default().push(w);
                }
            }
            for whites in per_comp.values() {
                if whites.len() == 1 {
                    forced[whites[0]] = true;
                }
            }
        }
        if !forced.iter().any(|&f| f) {
            return None;
        }
        for v in 0..m.n {
            blue[v] |= forced[v];
        }
        rounds += 1;
    }
}

pub fn mask_to_bools(n: usize, mask: u64) -> Vec<bool> {
    (0..n).map(|v| mask >> v & 1 == 1).collect()
}

/// Least propagation time over all size-`k` sets, or `None` if none forces.
pub fn pt_k(m: &Matrix, k: usize) -> Option<usize> {
    (0..1u64 << m.n)
        .filter(|s| s.count_ones() as usize == k)
        .filter_map(|s| psd_time(m, &mask_to_bools(m.n, s)))
        .min()
}

pub fn zplus(m: &Matrix) -> usize {
    (0..=m.n).find(|&k| pt_k(m, k).is_some()).unwrap()
}

pub fn pt_plus(m: &Matrix) -> usize {
    pt_k(m, zplus(m)).unwrap()
}

pub fn throttling(m: &Matrix) -> usize {
    (zplus(m)..=m.n).map(|k| k + pt_k(m, k).unwrap()).min().unwrap()
}
