mod common;

use proptest::prelude::*;

use cyclerank::elimination::ForestCondition;
use cyclerank::widths::validate_path_decomposition;
use cyclerank::{
    crank_exact, forest_to_path_decomposition, parse_forest, validate_forest, Digraph, VertexSet,
};

use common::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn witness_is_valid_with_matching_height(g in arb_digraph(9, true)) {
        let r = crank_exact(&g).unwrap();
        let v = validate_forest(&g, &r.witness);
        prop_assert!(v.is_ok(), "{}", v);
        prop_assert_eq!(r.witness.height(), r.value);
    }

    #[test]
    fn path_decomposition_from_forest(g in arb_digraph(9, true)) {
        let r = crank_exact(&g).unwrap();
        let d = forest_to_path_decomposition(&g, &r.witness).unwrap();
        prop_assert!(validate_path_decomposition(&g, &d).is_ok());
        prop_assert!(d.width() <= r.value);
    }

    #[test]
    fn text_round_trip(g in arb_digraph(9, true)) {
        let f = crank_exact(&g).unwrap().witness;
        prop_assert_eq!(parse_forest(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn changing_a_pivot_is_detected(g in arb_digraph(8, true), pick in any::<usize>()) {
        let mut f = crank_exact(&g).unwrap().witness;
        prop_assume!(!f.is_empty());
        let tree = pick % f.trees.len();
        let root = &mut f.trees[tree];
        let outside = (0..g.vertex_count()).find(|v| !root.scope.contains(*v));
        prop_assume!(outside.is_some());
        root.pivot = outside.unwrap();
        prop_assert!(validate_forest(&g, &f).has(ForestCondition::PivotInScope));
    }

    #[test]
    fn dropping_a_root_is_detected(g in arb_digraph(8, true)) {
        let mut f = crank_exact(&g).unwrap().witness;
        prop_assume!(!f.is_empty());
        f.trees.pop();
        prop_assert!(validate_forest(&g, &f).has(ForestCondition::RootScopes));
    }

    #[test]
    fn pruning_children_is_detected(g in arb_digraph(8, true)) {
        let mut f = crank_exact(&g).unwrap().witness;
        let root = f.trees.iter_mut().find(|t| !t.children.is_empty());
        prop_assume!(root.is_some());
        root.unwrap().children.clear();
        prop_assert!(validate_forest(&g, &f).has(ForestCondition::Children));
    }
}

#[test]
fn out_of_range_vertices_are_reported() {
    let g = Digraph::cycle(3);
    let f = parse_forest("0 {0,1,2}\n  5 {1,2}\n").unwrap();
    assert!(validate_forest(&g, &f).has(ForestCondition::Range));
}

#[test]
fn empty_forest_for_acyclic_digraph() {
    let g = Digraph::path(5);
    let f = parse_forest("").unwrap();
    assert!(validate_forest(&g, &f).is_ok());
    assert!(forest_to_path_decomposition(&g, &f).unwrap().width() == 0);
}

#[test]
fn complete_digraph_witness_is_a_chain() {
    let g = Digraph::complete(5);
    let f = crank_exact(&g).unwrap().witness;
    assert_eq!(f.height(), 4);
    assert_eq!(f.node_count(), 4);
    assert_eq!(f.trees[0].scope, VertexSet::full(5));
}
