use proptest::prelude::*;

use signed_graceful::ndsg::{adjacent, build_gmn, NdsgParams};
use signed_graceful::search::{solve, Goal, SearchConfig};
use signed_graceful::verify::{verify, Checker};
use signed_graceful::{Edge, GraphDocument, LabelingMode, Sign, SignedGraph, VertexLabeling};

fn signed_graph(max_p: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_p).prop_flat_map(|p| {
        let pairs = p * (p - 1) / 2;
        proptest::collection::vec(proptest::option::of(any::<bool>()), pairs).prop_map(
            move |slots| {
                let pairs = (0..p).flat_map(|u| (u + 1..p).map(move |v| (u, v)));
                let edges = pairs.zip(slots).filter_map(|((u, v), slot)| {
                    slot.map(|neg| {
                        Edge::new(u, v, if neg { Sign::Negative } else { Sign::Positive })
                    })
                });
                SignedGraph::new(p, edges).unwrap()
            },
        )
    })
}

fn mode() -> impl Strategy<Value = LabelingMode> {
    proptest::sample::select(LabelingMode::ALL.to_vec())
}

/// A graph, a compatible mode, an arbitrary labeling into the mode's
/// domain (not necessarily injective) and a vertex permutation.
fn labeled_case() -> impl Strategy<Value = (SignedGraph, LabelingMode, VertexLabeling, Vec<usize>)>
{
    (signed_graph(7), mode()).prop_flat_map(|(g, mode)| {
        let g = if mode.accepts(&g) { g } else { g.underlying() };
        let p = g.p();
        let top = mode.max_label(&g);
        (
            Just(g),
            Just(mode),
            proptest::collection::vec(0..=top + 1, p).prop_map(VertexLabeling::new),
            Just((0..p).collect::<Vec<_>>()).prop_shuffle(),
        )
    })
}

proptest! {
    #[test]
    fn json_round_trip_is_byte_identical((g, _, f, _) in labeled_case()) {
        let json = GraphDocument::from_graph(&g, Some(&f)).to_json().unwrap();
        let back = GraphDocument::parse(&json).unwrap();
        prop_assert_eq!(back.graph().unwrap(), g);
        prop_assert_eq!(back.to_json().unwrap(), json);
    }

    #[test]
    fn verdict_is_invariant_under_relabeling((g, mode, f, perm) in labeled_case()) {
        let before = verify(&g, &f, mode).unwrap();
        let after = verify(&g.permuted(&perm).unwrap(), &f.permuted(&perm), mode).unwrap();
        prop_assert_eq!(before.valid, after.valid);
    }

    #[test]
    fn checker_agrees_with_verify((g, mode, f, _) in labeled_case()) {
        let mut checker = Checker::new(&g, mode).unwrap();
        prop_assert_eq!(checker.check(f.as_slice()), verify(&g, &f, mode).unwrap().valid);
    }

    #[test]
    fn witness_count_is_invariant_under_relabeling((g, mode, _, perm) in labeled_case()) {
        let config = SearchConfig::new(mode, Goal::CountOnly).with_node_budget(200_000);
        let a = solve(&g, &config).unwrap();
        let b = solve(&g.permuted(&perm).unwrap(), &config).unwrap();
        if a.nodes_explored < 200_000 && b.nodes_explored < 200_000 {
            prop_assert_eq!(a.witness_count, b.witness_count);
        }
    }

    #[test]
    fn outcome_does_not_depend_on_workers(
        (g, mode, _, _) in labeled_case(),
        workers in 2usize..6,
        budget in proptest::option::of(1u64..5_000),
        all in any::<bool>(),
    ) {
        let goal = if all { Goal::EnumerateAll } else { Goal::FindOne };
        let mut config = SearchConfig::new(mode, goal);
        config.node_budget = Some(budget.unwrap_or(300_000));
        let serial = solve(&g, &config).unwrap();
        let parallel = solve(&g, &config.clone().with_workers(workers)).unwrap();
        prop_assert_eq!(serial, parallel);
    }

    #[test]
    fn every_witness_verifies((g, mode, _, _) in labeled_case()) {
        let config = SearchConfig::new(mode, Goal::EnumerateAll).with_node_budget(200_000);
        for w in solve(&g, &config).unwrap().witnesses {
            prop_assert!(verify(&g, &w, mode).unwrap().valid);
        }
    }

    #[test]
    fn gmn_grows_by_induced_subgraphs(m in 2u64..20, n in 1u64..25) {
        let small = build_gmn(NdsgParams::new(m, n).unwrap()).unwrap();
        let big = build_gmn(NdsgParams::new(m, n + 1).unwrap()).unwrap();
        let n = n as usize;
        for u in 0..n {
            for v in u + 1..n {
                prop_assert_eq!(small.has_edge(u, v), big.has_edge(u, v));
            }
        }
    }

    #[test]
    fn small_n_gives_complete_graph(m in 2u64..40, n in 1u64..20) {
        prop_assume!(2 * n < m + 1);
        let g = build_gmn(NdsgParams::new(m, n).unwrap()).unwrap();
        let n = n as usize;
        prop_assert_eq!(g.q(), n * (n - 1) / 2);
    }

    #[test]
    fn adjacency_depends_on_sum_mod_m(m in 2u64..30, a in 1u64..60, b in 1u64..60, k in 0u64..4) {
        prop_assert_eq!(adjacent(m, a, b), adjacent(m, b, a));
        let (a2, b2) = (a + k * m, b);
        if a2 != b2 && a != b {
            prop_assert_eq!(adjacent(m, a, b), adjacent(m, a2, b2));
        }
    }
}
