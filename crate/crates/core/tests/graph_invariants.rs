mod common;

use common::{graphs_up_to, matrix, oracle, random_graph};
use proptest::prelude::*;
use psdzf::{canonical_label, parse_graph6, write_graph6, Graph, VertexSet};

#[test]
fn graph6_round_trips_every_class_up_to_seven() {
    for g in graphs_up_to(7) {
        assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }
}

#[test]
fn bridges_match_component_recount() {
    for g in graphs_up_to(6) {
        let before = g.components(&VertexSet::new()).len();
        let mut brute = Vec::new();
        for (u, v) in g.edges() {
            let after = g.without_edge(u, v).unwrap().components(&VertexSet::new()).len();
            if after > before {
                brute.push((u, v));
            }
            assert_eq!(g.is_bridge(u, v).unwrap(), after > before);
        }
        let mut fast = g.bridges();
        fast.sort();
        assert_eq!(fast, brute, "{}", write_graph6(&g));
    }
}

#[test]
fn distinct_labels_are_non_isomorphic_up_to_six() {
    for n in 1..=6 {
        let graphs = psdzf::enumerate_graphs(n, false).unwrap();
        let labels: Vec<_> = graphs.iter().map(|g| canonical_label(g).unwrap()).collect();
        for i in 0..graphs.len() {
            for j in i + 1..graphs.len() {
                assert_ne!(labels[i], labels[j]);
                assert!(!oracle::isomorphic(&matrix(&graphs[i]), &matrix(&graphs[j])));
            }
        }
    }
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| random_graph(n, &bits))
    })
}

proptest! {
    #[test]
    fn graph6_round_trip_random(g in graph_strategy(70)) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn complement_counts_and_involution(g in graph_strategy(30)) {
        let c = g.complement();
        let n = g.order();
        prop_assert_eq!(g.size() + c.size(), n * (n - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn components_partition_the_survivors(g in graph_strategy(20), removed in any::<u32>()) {
        let removed: VertexSet = (0..g.order()).filter(|&v| removed >> v & 1 == 1).collect();
        let parts = g.components(&removed);
        let mut seen = VertexSet::new();
        for p in &parts {
            prop_assert!(p.is_disjoint(&seen));
            seen.union_with(p);
        }
        prop_assert_eq!(seen, g.vertices().difference(&removed));
        for (u, v) in g.edges() {
            if !removed.contains(u) && !removed.contains(v) {
                prop_assert!(parts.iter().any(|p| p.contains(u) && p.contains(v)));
            }
        }
    }

    #[test]
    fn label_survives_relabelling(g in graph_strategy(8), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        prop_assert_eq!(canonical_label(&g.permuted(&perm)).unwrap(), canonical_label(&g).unwrap());
    }
}
