mod common;

use proptest::prelude::*;

use cyclerank::cyclerank::crank_bruteforce_with_limit;
use cyclerank::{
    count_sc_subsets, crank_bruteforce, crank_exact, crank_exact_with, sc_subset_bound, Digraph,
    Error, ExactConfig,
};

use common::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn exact_matches_brute_force(g in arb_digraph(8, true)) {
        prop_assert_eq!(crank_exact(&g).unwrap().value, crank_bruteforce(&g).unwrap());
    }

    #[test]
    fn census_matches_brute_force(g in arb_digraph(10, true)) {
        let c = count_sc_subsets(&g).unwrap();
        let (nontrivial, total) = brute_sc_count(&g);
        prop_assert_eq!((c.nontrivial, c.total), (nontrivial, total));
    }

    #[test]
    fn memo_within_census(g in arb_digraph(12, true)) {
        let r = crank_exact(&g).unwrap();
        prop_assert!(r.stats.memoized as u64 <= count_sc_subsets(&g).unwrap().nontrivial);
    }

    #[test]
    fn bounded_outdegree_census_within_bound(n in 2usize..14, d in 1usize..4, seed in any::<u64>()) {
        let g = cyclerank::generate::bounded_outdegree(&mut rng(seed), n, d);
        let bound = sc_subset_bound(n, d).unwrap();
        prop_assert!(count_sc_subsets(&g).unwrap().total as f64 <= bound);
    }

    #[test]
    fn deterministic(g in arb_digraph(10, true)) {
        let a = crank_exact(&g).unwrap();
        let b = crank_exact(&g).unwrap();
        prop_assert_eq!(a.value, b.value);
        prop_assert_eq!(a.witness, b.witness);
    }
}

#[test]
fn small_families() {
    assert_eq!(crank_exact(&Digraph::empty(4)).unwrap().value, 0);
    assert_eq!(crank_exact(&Digraph::path(6)).unwrap().value, 0);
    assert_eq!(
        crank_exact(&Digraph::new(1, [(0, 0)]).unwrap())
            .unwrap()
            .value,
        1
    );
    for n in 2..8 {
        assert_eq!(crank_exact(&Digraph::cycle(n)).unwrap().value, 1);
        assert_eq!(crank_exact(&Digraph::complete(n)).unwrap().value, n - 1);
    }
}

#[test]
fn brute_force_limit() {
    let g = Digraph::cycle(12);
    assert!(matches!(
        crank_bruteforce_with_limit(&g, 10),
        Err(Error::Capacity { .. })
    ));
    assert_eq!(crank_bruteforce_with_limit(&g, 12).unwrap(), 1);
}

#[test]
fn memo_limit_is_a_resource_error() {
    let g = Digraph::complete(10);
    let config = ExactConfig {
        memo_limit: Some(5),
    };
    assert!(matches!(
        crank_exact_with(&g, &config),
        Err(Error::Resource(_))
    ));
}

#[test]
fn more_than_64_vertices_is_a_capacity_error() {
    assert!(matches!(
        crank_exact(&Digraph::cycle(65)),
        Err(Error::Capacity { .. })
    ));
}
