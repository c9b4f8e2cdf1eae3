mod common;

use std::collections::BTreeSet;

use common::*;
use edgegraph::builders::{
    discrete_graph, flower_graph, into_graph, mk_edge_graph, pit_graph, tip_graph, NodeSpec,
};
use edgegraph::canon::{canonical_term, equivalent, normalize};
use edgegraph::multigraph::equivalent_multigraphs;
use edgegraph::{FlowGraph, Multigraph, NodeId};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn multigraph_nodal_flow_round_trip(g in multigraph()) {
        prop_assert_eq!(g.to_nodal_flow().to_multigraph(), g);
    }

    #[test]
    fn nodal_flow_multigraph_round_trip(nf in nodal_flow()) {
        prop_assert_eq!(nf.to_multigraph().to_nodal_flow(), nf);
    }

    #[test]
    fn flow_survives_the_multigraph_representative(g in graph()) {
        prop_assert_eq!(Multigraph::from_flow(&g).to_flow(), g);
    }

    #[test]
    fn representative_is_equivalent(g in multigraph()) {
        let back = Multigraph::from_flow(&g.to_flow());
        prop_assert!(equivalent_multigraphs(&back, &g));
        prop_assert!(witness_exists(&back, &g));
    }

    #[test]
    fn equivalence_agrees_with_witness_search(g in multigraph(), h in multigraph()) {
        prop_assert_eq!(equivalent_multigraphs(&g, &h), witness_exists(&g, &h));
    }

    #[test]
    fn renaming_and_isolated_nodes_are_invisible(g in multigraph()) {
        let renamed = g.rename(|c| (*c as u32) * 7 + 1).with_isolated(1000);
        prop_assert!(equivalent_multigraphs(&g, &renamed));
        prop_assert!(witness_exists(&g, &renamed));
    }

    #[test]
    fn equivalence_is_an_equivalence(g in multigraph(), h in multigraph(), k in multigraph()) {
        prop_assert!(equivalent_multigraphs(&g, &g));
        prop_assert_eq!(equivalent_multigraphs(&g, &h), equivalent_multigraphs(&h, &g));
        if equivalent_multigraphs(&g, &h) && equivalent_multigraphs(&h, &k) {
            prop_assert!(equivalent_multigraphs(&g, &k));
        }
    }

    #[test]
    fn canonical_term_denotes_its_graph(g in graph()) {
        prop_assert_eq!(eval(&canonical_term(&g)), g);
    }

    #[test]
    fn normal_forms_decide_equality((t, r) in rewritten_pair()) {
        prop_assert_eq!(eval(&t), eval(&r));
        prop_assert_eq!(normalize(&t), normalize(&r));
        prop_assert!(equivalent(&t, &r));
    }

    #[test]
    fn normalize_is_idempotent(t in term()) {
        let n = normalize(&t);
        prop_assert_eq!(normalize(&n), n.clone());
        prop_assert_eq!(eval(&n), eval(&t));
    }

    #[test]
    fn distinct_graphs_have_distinct_normal_forms(x in term(), y in term()) {
        prop_assert_eq!(eval(&x) == eval(&y), normalize(&x) == normalize(&y));
    }

    #[test]
    fn builders_match_their_shapes(xs in prop::collection::btree_set(0u8..8, 0..6)) {
        let xs: Vec<u8> = xs.into_iter().collect();
        let n = xs.len();
        let flower = eval(&flower_graph(&xs));
        prop_assert_eq!(flower.len(), usize::from(n > 0));
        let discrete = eval(&discrete_graph(&xs));
        prop_assert_eq!(discrete.len(), 2 * n);
        let pit = eval(&pit_graph(&xs));
        prop_assert_eq!(pit.len(), if n == 0 { 0 } else { n + 1 });
        prop_assert_eq!(eval(&tip_graph(&xs)), pit.transpose());
        let (l, r) = xs.split_at(n / 2);
        let into = eval(&into_graph(l, r));
        prop_assert!(into.len() <= n + 1);
    }

    #[test]
    fn node_list_builder_reproduces_flow(g in graph()) {
        let specs: Vec<NodeSpec<u8>> = g
            .nodes()
            .map(|node| NodeSpec::new(node.tips.iter().copied(), node.pits.iter().copied()))
            .collect();
        prop_assert_eq!(eval(&mk_edge_graph(&specs)), g);
    }
}

#[test]
fn node_ids_follow_canonical_order() {
    let g: FlowGraph<u8> = eval(&into_graph(&[1, 2], &[3]));
    let m = Multigraph::from_flow(&g);
    let expected: BTreeSet<NodeId> = (0..g.len()).map(NodeId).collect();
    assert_eq!(m.nodes(), &expected);
}
