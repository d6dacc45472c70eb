mod common;

use proptest::prelude::*;

use cyclerank::widths::{
    check_bounds, dpw_exact, is_weak_balanced_separator, normalize, rk, snum_exact,
    validate_path_decomposition, PathDecomposition,
};
use cyclerank::{crank_exact, Digraph, VertexSet};

use common::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dpw_matches_brute_force(g in arb_digraph(7, true)) {
        let r = dpw_exact(&g).unwrap();
        prop_assert_eq!(r.width, brute_dpw(&g));
        prop_assert!(validate_path_decomposition(&g, &r.decomposition).is_ok());
        prop_assert_eq!(r.decomposition.width(), r.width);
    }

    #[test]
    fn snum_matches_brute_force(g in arb_digraph(6, true)) {
        let r = snum_exact(&g).unwrap();
        prop_assert_eq!(r.value, brute_snum(&g));
        prop_assert!(is_weak_balanced_separator(&g, &r.witness.target, &r.witness.separator).unwrap());
        prop_assert_eq!(r.witness.separator.len(), r.value);
    }

    #[test]
    fn normalize_keeps_validity_and_width(g in arb_digraph(8, true)) {
        let d = dpw_exact(&g).unwrap().decomposition;
        let n = normalize(&g, &d).unwrap();
        prop_assert!(validate_path_decomposition(&g, &n).is_ok());
        prop_assert!(n.width() <= d.width());
        for pair in n.bags.windows(2) {
            let changed = pair[0].difference(&pair[1]).len() + pair[1].difference(&pair[0]).len();
            prop_assert_eq!(changed, 1);
        }
    }

    #[test]
    fn chain_holds(g in arb_digraph(8, false)) {
        let b = check_bounds(&g).unwrap();
        prop_assert!(b.chain_holds(), "{}", b);
        prop_assert!(b.snum <= b.dpw && b.dpw <= b.crank);
        prop_assert_eq!(b.crank, crank_exact(&g).unwrap().value);
    }
}

#[test]
fn complete_digraph_widths() {
    for n in 1..7 {
        let g = Digraph::complete(n);
        assert_eq!(dpw_exact(&g).unwrap().width, n - 1);
        assert_eq!(crank_exact(&g).unwrap().value, n - 1);
    }
}

#[test]
fn cycle_widths() {
    let g = Digraph::cycle(6);
    assert_eq!(dpw_exact(&g).unwrap().width, 1);
    assert_eq!(snum_exact(&g).unwrap().value, 1);
}

#[test]
fn rk_small_values() {
    assert_eq!(rk(1, 1).unwrap(), 1);
    assert_eq!(rk(1, 4).unwrap(), 3);
    assert_eq!(rk(1, 5).unwrap(), 3);
    assert_eq!(rk(2, 3).unwrap(), 3);
    assert_eq!(rk(3, 2).unwrap(), 2);
    assert_eq!(rk(2, 10).unwrap(), 5);
    assert!(rk(0, 3).is_err());
}

#[test]
fn invalid_decomposition_is_rejected() {
    let g = Digraph::cycle(3);
    let d = PathDecomposition::new(vec![
        VertexSet::singleton(0),
        VertexSet::singleton(1),
        VertexSet::singleton(2),
    ]);
    assert!(!validate_path_decomposition(&g, &d).is_ok());
    assert!(normalize(&g, &d).is_err());
}
