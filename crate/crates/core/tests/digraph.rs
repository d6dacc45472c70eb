mod common;

use proptest::prelude::*;

use cyclerank::bitgraph::BitGraph;
use cyclerank::digraph::edge_set;
use cyclerank::scc::{nontrivial_sccs_within, scc_within};
use cyclerank::{
    is_acyclic, nontrivial_sccs, parse_digraph, scc, serialize_digraph, Digraph, VertexSet,
};

use common::*;

fn digraph(max_n: usize, loops: bool) -> impl Strategy<Value = Digraph> {
    (0..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((0..n.max(1), 0..n.max(1)), 0..=n * n).prop_map(move |edges| {
            let edges = edges
                .into_iter()
                .filter(|&(u, v)| n > 0 && (loops || u != v));
            Digraph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn components_partition_the_vertices(g in digraph(12, true)) {
        let comps = scc(&g).components;
        let mut seen = VertexSet::new();
        for c in &comps {
            prop_assert!(!c.is_empty());
            prop_assert!(c.is_disjoint(&seen));
            seen = &seen | c;
        }
        prop_assert_eq!(seen, g.vertices());
    }

    #[test]
    fn components_match_mutual_reachability(g in digraph(10, true)) {
        let all: Vec<usize> = (0..g.vertex_count()).collect();
        let reach = closure(&g, &all);
        let p = scc(&g);
        let index = p.index(g.vertex_count());
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                prop_assert_eq!(index[u] == index[v], reach[u][v] && reach[v][u]);
            }
        }
    }

    #[test]
    fn components_in_topological_order(g in digraph(12, true)) {
        let index = scc(&g).index(g.vertex_count());
        for (u, v) in g.edges() {
            prop_assert!(index[u] <= index[v]);
        }
    }

    #[test]
    fn induced_edges(g in digraph(10, true), mask in any::<u64>()) {
        let set = &VertexSet::from_mask(mask) & &g.vertices();
        let sub = g.induced(&set).unwrap();
        let lifted: Vec<(usize, usize)> = sub.graph.edges().map(|(u, v)| (sub.original(u), sub.original(v))).collect();
        let expected: Vec<(usize, usize)> = g.edges().filter(|&(u, v)| set.contains(u) && set.contains(v)).collect();
        prop_assert_eq!(lifted, expected);
    }

    #[test]
    fn acyclic_iff_no_nontrivial_component(g in digraph(10, true)) {
        let all: Vec<usize> = (0..g.vertex_count()).collect();
        prop_assert_eq!(is_acyclic(&g), nontrivial_sccs(&g).is_empty());
        prop_assert_eq!(is_acyclic(&g), is_acyclic_on(&g, &all));
    }

    #[test]
    fn parse_inverts_serialize(g in digraph(15, true)) {
        let back = parse_digraph(&serialize_digraph(&g)).unwrap();
        prop_assert_eq!(edge_set(&back), edge_set(&g));
        prop_assert_eq!(back, g);
    }

    #[test]
    fn bitgraph_agrees_with_adjacency_lists(g in digraph(12, true), mask in any::<u64>()) {
        let b = BitGraph::new(&g).unwrap();
        let within = &VertexSet::from_mask(mask) & &g.vertices();
        let m = within.as_mask().unwrap_or(0);
        let mut from_bits: Vec<VertexSet> = b.sccs_topological(m).into_iter().map(VertexSet::from_mask).collect();
        prop_assert_eq!(&from_bits, &scc_within(&g, &within).unwrap());
        from_bits.retain(|c| b.is_nontrivial_component(c.as_mask().unwrap()));
        prop_assert_eq!(from_bits, nontrivial_sccs_within(&g, &within).unwrap());
        prop_assert_eq!(b.is_acyclic(m), is_acyclic_on(&g, &within.to_vec()));
    }
}

#[test]
fn large_sparse_digraphs() {
    let n = 1000;
    let g = Digraph::new(n, (0..n).map(|i| (i, (i * 7 + 1) % n))).unwrap();
    let total: usize = scc(&g).components.iter().map(VertexSet::len).sum();
    assert_eq!(total, n);
    assert!(g.vertices().last() == Some(n - 1));
}
