//! Cycle rank of digraphs and the measures around it.
//!
//! The cycle rank of a digraph is 0 if it is acyclic, one more than the best
//! single-vertex deletion if it is strongly connected, and the maximum over
//! its strongly connected components otherwise. This crate computes it
//! exactly ([`crank_exact`]) and approximately ([`approx::crank_approx`]),
//! certifies answers with [elimination forests](elimination), and relates it
//! to directed pathwidth, weak balanced separators, feedback vertex sets and
//! the star height of bideterministic regular languages.
//!
//! ```
//! use cyclerank::{crank_exact, parse_digraph, validate_forest};
//!
//! let g = parse_digraph("digraph 3\n0 1\n1 0\n1 2\n2 1\n2 0\n0 2\n").unwrap();
//! let r = crank_exact(&g).unwrap();
//! assert_eq!(r.value, 2);
//! assert!(validate_forest(&g, &r.witness).is_ok());
//! ```

pub mod approx;
pub mod automata;
pub mod bitgraph;
pub mod cyclerank;
pub mod dfvs;
pub mod digraph;
pub mod elimination;
pub mod error;
pub mod generate;
pub mod scc;
pub mod validation;
pub mod vertex_set;
pub mod widths;

pub use cyclerank::{
    count_sc_subsets, crank_bruteforce, crank_exact, crank_exact_with, sc_growth_rate,
    sc_subset_bound, CrankResult, ExactConfig, ScCount,
};
pub use digraph::{parse_digraph, parse_digraph_report, serialize_digraph, Digraph};
pub use elimination::{
    forest_to_path_decomposition, parse_forest, validate_forest, EliminationForest,
    EliminationNode, ForestCondition,
};
pub use error::{Error, Result};
pub use scc::{is_acyclic, is_strongly_connected, nontrivial_sccs, scc};
pub use vertex_set::VertexSet;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/digraphs.md")]
    mod digraphs {}
    #[doc = include_str!("../../../book/src/cycle-rank.md")]
    mod cycle_rank {}
    #[doc = include_str!("../../../book/src/elimination-forests.md")]
    mod elimination_forests {}
    #[doc = include_str!("../../../book/src/widths.md")]
    mod widths {}
    #[doc = include_str!("../../../book/src/approximation.md")]
    mod approximation {}
    #[doc = include_str!("../../../book/src/feedback-sets.md")]
    mod feedback_sets {}
    #[doc = include_str!("../../../book/src/star-height.md")]
    mod star_height {}
}
