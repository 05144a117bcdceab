mod common;

use common::{graphs_up_to, mask_set, matrix, oracle, random_graph, set_mask, subsets};
use proptest::prelude::*;
use psdzf::migration::{
    algorithm1, algorithm2, half_bound, multi_vertex_migrate, single_vertex_migrate, verify_force_switch,
    StrategyRegistry,
};
use psdzf::psd::forceable;
use psdzf::{propagation_time, write_graph6, Graph, VertexSet};

fn oracle_forces(g: &Graph, b: &VertexSet) -> Option<usize> {
    oracle::psd_time(&matrix(g), &oracle::mask_to_bools(g.order(), set_mask(b)))
}

#[test]
fn single_vertex_migration_always_forces() {
    for g in graphs_up_to(6) {
        for mask in subsets(&g) {
            let b = mask_set(mask);
            if propagation_time(&g, &b, None).is_none() {
                continue;
            }
            for (v, w) in forceable(&g, &b) {
                let out = single_vertex_migrate(&g, &b, v, w).unwrap();
                assert!(oracle_forces(&g, &out).is_some(), "{} {b}: {v}->{w}", write_graph6(&g));
            }
        }
    }
}

#[test]
fn force_switch_conditions_agree() {
    for g in graphs_up_to(6) {
        for mask in subsets(&g) {
            let s = mask_set(mask);
            for (u, v) in g.edges() {
                if !s.contains(u) && !s.contains(v) {
                    let a = verify_force_switch(&g, &s, u, v).unwrap();
                    let b = verify_force_switch(&g, &s, v, u).unwrap();
                    assert_eq!(a.holds(), b.holds());
                }
            }
        }
    }
}

#[test]
fn algorithms_meet_postconditions() {
    let reg = StrategyRegistry::builtin();
    for g in graphs_up_to(6) {
        let n = g.order();
        for mask in subsets(&g) {
            let b = mask_set(mask);
            if propagation_time(&g, &b, None).is_none() {
                continue;
            }
            let (out1, trace1) = algorithm1(&g, &b).unwrap();
            assert!(trace1.steps.len() <= n);
            assert!(g.components(&out1).iter().all(|c| c.len() <= half_bound(n, b.len())));
            assert!(oracle_forces(&g, &out1).is_some());

            let (out2, trace2) = algorithm2(&g, &b).unwrap();
            let t = oracle_forces(&g, &out2).expect("algorithm 2 output forces");
            assert!(t <= half_bound(n, b.len()));
            for step in &trace2.steps {
                assert_eq!(oracle_forces(&g, &step.after), Some(step.measure_after));
            }
            for strategy in reg.iter() {
                let m = strategy.migrate(&g, &b).unwrap();
                assert_eq!(m.result.len(), b.len());
                assert!(strategy.postcondition(&g, &m.result).unwrap(), "{} on {}", strategy.name(), write_graph6(&g));
            }
        }
    }
}

#[test]
fn connected_shift_saves_one_step() {
    for g in graphs_up_to(6) {
        for mask in subsets(&g) {
            let b = mask_set(mask);
            let Some(t) = propagation_time(&g, &b, None) else { continue };
            let comps = g.components(&b);
            if comps.len() == 1 && t >= 2 {
                let out = multi_vertex_migrate(&g, &b, &comps[0], None).unwrap();
                assert_eq!(oracle_forces(&g, &out), Some(t - 1));
            }
        }
    }
}

fn forcing_case() -> impl Strategy<Value = (Graph, VertexSet)> {
    (2usize..=10, proptest::collection::vec(any::<bool>(), 45), any::<u16>()).prop_map(|(n, bits, drop)| {
        let g = random_graph(n, &bits);
        // greedily thin V(G) while it stays forcing
        let mut b = g.vertices();
        for v in 0..n {
            if drop >> v & 1 == 1 {
                b.remove(v);
                if propagation_time(&g, &b, None).is_none() {
                    b.insert(v);
                }
            }
        }
        (g, b)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn registered_strategies_on_random_graphs((g, b) in forcing_case()) {
        for strategy in StrategyRegistry::builtin().iter() {
            let m = strategy.migrate(&g, &b).unwrap();
            prop_assert!(strategy.postcondition(&g, &m.result).unwrap());
            prop_assert_eq!(&m.trace.final_set, &m.result);
            prop_assert!(oracle_forces(&g, &m.result).is_some());
        }
    }
}
