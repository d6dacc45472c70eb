//! Exact cycle rank.
//!
//! The cycle rank of an acyclic digraph is 0; of a strongly connected digraph
//! with at least one edge it is one more than the smallest cycle rank left
//! after deleting a single vertex; otherwise it is the largest cycle rank of a
//! strongly connected component.
//!
//! [`crank_bruteforce`] evaluates that definition directly on induced
//! subgraphs. [`crank_exact`] is the fast route: for a nontrivial strongly
//! connected set `X` it memoizes
//!
//! ```text
//! f(X) = min over x in X of  1 + max { f(Y) : Y a nontrivial SCC of G[X] - x }
//! ```
//!
//! (the max of nothing being 0), reaching only the strongly connected sets the
//! recursion actually visits, and rebuilds an elimination forest of height
//! `f` from the recorded pivots.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rustc_hash::FxHashMap;

use crate::bitgraph::{BitGraph, MAX_VERTICES};
use crate::digraph::Digraph;
use crate::elimination::{EliminationForest, EliminationNode};
use crate::error::{check_capacity, Error, Result};
use crate::scc::scc;
use crate::vertex_set::mask::{bit, bits};
use crate::vertex_set::VertexSet;

pub const DEFAULT_BRUTEFORCE_LIMIT: usize = 10;

/// Literal evaluation of the recursive definition. Memoizes on vertex subsets
/// but otherwise does no pruning.
pub fn crank_bruteforce(g: &Digraph) -> Result<usize> {
    crank_bruteforce_with_limit(g, DEFAULT_BRUTEFORCE_LIMIT)
}

pub fn crank_bruteforce_with_limit(g: &Digraph, limit: usize) -> Result<usize> {
    check_capacity("vertex count for brute force", g.vertex_count(), limit)?;
    let mut memo = HashMap::new();
    Ok(brute(g, &g.vertices(), &mut memo))
}

fn brute(g: &Digraph, set: &VertexSet, memo: &mut HashMap<VertexSet, usize>) -> usize {
    if let Some(&v) = memo.get(set) {
        return v;
    }
    let sub = g.induced(set).expect("subset of vertex range");
    let comps = scc(&sub.graph).components;
    let value = if comps.len() == 1 && sub.graph.edge_count() > 0 {
        // Strongly connected with an edge.
        1 + set
            .iter()
            .map(|v| {
                let mut rest = set.clone();
                rest.remove(v);
                brute(g, &rest, memo)
            })
            .min()
            .expect("nonempty")
    } else if comps.len() <= 1 {
        // Empty, or a single vertex without a loop.
        0
    } else {
        comps
            .iter()
            .map(|c| brute(g, &sub.lift(c), memo))
            .max()
            .unwrap_or(0)
    };
    memo.insert(set.clone(), value);
    value
}

#[derive(Clone, Debug, Default)]
pub struct ExactConfig {
    /// Abort with [`Error::Resource`] once this many subsets are memoized.
    pub memo_limit: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrankStats {
    /// Number of strongly connected subsets whose value was stored.
    pub memoized: usize,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrankResult {
    pub value: usize,
    /// An elimination forest of height `value`, in canonical order.
    pub witness: EliminationForest,
    pub stats: CrankStats,
}

pub fn crank_exact(g: &Digraph) -> Result<CrankResult> {
    crank_exact_with(g, &ExactConfig::default())
}

#[derive(Clone, Copy)]
struct Entry {
    value: u8,
    pivot: u8,
}

struct Solver<'a> {
    graph: &'a BitGraph,
    memo: FxHashMap<u64, Entry>,
    memo_limit: usize,
}

impl Solver<'_> {
    /// `f(set)` for a nontrivial strongly connected `set`.
    fn solve(&mut self, set: u64) -> Result<u8> {
        if let Some(e) = self.memo.get(&set) {
            return Ok(e.value);
        }
        let mut best = u8::MAX;
        let mut best_pivot = 0u8;
        for x in bits(set) {
            let mut comps = self.graph.nontrivial_sccs(set & !bit(x));
            if comps.is_empty() {
                best = 1;
                best_pivot = x as u8;
                break;
            }
            // Large components first: they tend to decide the maximum.
            comps.sort_by_key(|c| std::cmp::Reverse(c.count_ones()));
            let mut worst = 0u8;
            let mut pruned = false;
            for c in comps {
                if worst + 1 >= best {
                    pruned = true;
                    break;
                }
                worst = worst.max(self.solve(c)?);
            }
            if !pruned && worst + 1 < best {
                best = worst + 1;
                best_pivot = x as u8;
            }
        }
        if self.memo.len() >= self.memo_limit {
            return Err(Error::Resource(format!(
                "memo table reached {} subsets",
                self.memo.len()
            )));
        }
        self.memo.insert(
            set,
            Entry {
                value: best,
                pivot: best_pivot,
            },
        );
        Ok(best)
    }

    fn build(&self, set: u64) -> EliminationNode {
        let entry = self.memo[&set];
        let pivot = entry.pivot as usize;
        let children = self
            .graph
            .sccs_topological(set & !bit(pivot))
            .into_iter()
            .filter(|&c| self.graph.is_nontrivial_component(c))
            .map(|c| self.build(c))
            .collect();
        EliminationNode {
            pivot,
            scope: VertexSet::from_mask(set),
            children,
        }
    }
}

pub fn crank_exact_with(g: &Digraph, config: &ExactConfig) -> Result<CrankResult> {
    check_capacity(
        "vertex count for exact cycle rank",
        g.vertex_count(),
        MAX_VERTICES,
    )?;
    let start = Instant::now();
    let graph = BitGraph::new(g)?;
    let mut solver = Solver {
        graph: &graph,
        memo: FxHashMap::default(),
        memo_limit: config.memo_limit.unwrap_or(usize::MAX),
    };
    let roots: Vec<u64> = graph
        .sccs_topological(graph.all())
        .into_iter()
        .filter(|&c| graph.is_nontrivial_component(c))
        .collect();
    let mut value = 0;
    for &r in &roots {
        value = value.max(solver.solve(r)? as usize);
    }
    let witness = EliminationForest::new(roots.iter().map(|&r| solver.build(r)).collect());
    Ok(CrankResult {
        value,
        witness,
        stats: CrankStats {
            memoized: solver.memo.len(),
            elapsed: start.elapsed(),
        },
    })
}

/// Counts of strongly connected vertex subsets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScCount {
    /// Subsets inducing a strongly connected subgraph with at least one edge.
    pub nontrivial: u64,
    /// All nonempty strongly connected subsets, singletons included.
    pub total: u64,
}

/// Enumerates strongly connected subsets by their smallest vertex `v`.
///
/// Vertices above `v` are decided one at a time. Before each decision the
/// undecided vertices are cut down to the component of `v` in
/// `G[chosen + undecided]`; if a chosen vertex falls outside it, no completion
/// can be strongly connected. Every branch that survives contains at least
/// one solution (take all remaining undecided vertices), so the work is
/// proportional to the number of subsets found.
pub fn count_sc_subsets(g: &Digraph) -> Result<ScCount> {
    let b = BitGraph::new(g)?;
    let mut count = ScCount {
        nontrivial: 0,
        total: 0,
    };
    for v in 0..b.n() {
        let above = b.all() & u64::MAX.checked_shl(v as u32 + 1).unwrap_or(0);
        enumerate_sc(&b, bit(v), above, &mut count);
    }
    Ok(count)
}

fn enumerate_sc(b: &BitGraph, chosen: u64, undecided: u64, count: &mut ScCount) {
    let v = chosen.trailing_zeros() as usize;
    let comp = b.component_of(v, chosen | undecided);
    if chosen & !comp != 0 {
        return;
    }
    let undecided = undecided & comp;
    if undecided == 0 {
        count.total += 1;
        if b.is_nontrivial_component(chosen) {
            count.nontrivial += 1;
        }
        return;
    }
    let u = undecided.trailing_zeros() as usize;
    let rest = undecided & !bit(u);
    enumerate_sc(b, chosen | bit(u), rest, count);
    enumerate_sc(b, chosen, rest, count);
}

/// `gamma^n + n` with `gamma = (2^(d+1) - 1)^(1/(d+1))`: the maximum number of
/// strongly connected subsets of an `n`-vertex digraph of maximum outdegree `d`.
pub fn sc_subset_bound(n: usize, d: usize) -> Result<f64> {
    Ok(sc_growth_rate(d)?.powi(n as i32) + n as f64)
}

/// `gamma = (2^(d+1) - 1)^(1/(d+1))`.
pub fn sc_growth_rate(d: usize) -> Result<f64> {
    if d < 1 {
        return Err(Error::input("the outdegree bound must be at least 1"));
    }
    let e = (d + 1) as f64;
    Ok((e.exp2() - 1.0).powf(1.0 / e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elimination::validate_forest;

    fn loop1() -> Digraph {
        Digraph::new(1, [(0, 0)]).unwrap()
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(crank_bruteforce(&Digraph::path(3)).unwrap(), 0);
        assert_eq!(crank_bruteforce(&Digraph::cycle(4)).unwrap(), 1);
        assert_eq!(crank_bruteforce(&Digraph::complete(3)).unwrap(), 2);
        assert_eq!(crank_bruteforce(&loop1()).unwrap(), 1);
        assert!(matches!(
            crank_bruteforce(&Digraph::empty(11)),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn exact_acyclic() {
        let r = crank_exact(&Digraph::path(5)).unwrap();
        assert_eq!(r.value, 0);
        assert!(r.witness.is_empty());
    }

    #[test]
    fn exact_k3_witness() {
        let g = Digraph::complete(3);
        let r = crank_exact(&g).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness.trees.len(), 1);
        let root = &r.witness.trees[0];
        assert_eq!(root.scope, VertexSet::from([0, 1, 2]));
        assert_eq!(root.pivot, 0);
        assert_eq!(root.children.len(), 1);
        assert!(validate_forest(&g, &r.witness).is_ok());
    }

    #[test]
    fn exact_disjoint_cycles() {
        let g = Digraph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let r = crank_exact(&g).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.witness.trees.len(), 2);
    }

    #[test]
    fn exact_complete_graphs() {
        for n in 1..=7 {
            assert_eq!(crank_exact(&Digraph::complete(n)).unwrap().value, n - 1);
        }
    }

    #[test]
    fn memo_limit_aborts() {
        let cfg = ExactConfig {
            memo_limit: Some(2),
        };
        assert!(matches!(
            crank_exact_with(&Digraph::complete(5), &cfg),
            Err(Error::Resource(_))
        ));
        assert!(matches!(
            crank_exact(&Digraph::empty(65)),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn census_examples() {
        assert_eq!(
            count_sc_subsets(&Digraph::cycle(3)).unwrap(),
            ScCount {
                nontrivial: 1,
                total: 4
            }
        );
        assert_eq!(
            count_sc_subsets(&Digraph::complete(3)).unwrap(),
            ScCount {
                nontrivial: 4,
                total: 7
            }
        );
        assert_eq!(
            count_sc_subsets(&Digraph::empty(5)).unwrap(),
            ScCount {
                nontrivial: 0,
                total: 5
            }
        );
        assert_eq!(
            count_sc_subsets(&loop1()).unwrap(),
            ScCount {
                nontrivial: 1,
                total: 1
            }
        );
    }

    #[test]
    fn bound_values() {
        assert!((sc_growth_rate(2).unwrap() - 1.9129).abs() < 5e-5);
        assert!((sc_subset_bound(3, 2).unwrap() - 10.0).abs() < 1e-9);
        assert_eq!(sc_subset_bound(0, 3).unwrap(), 1.0);
        assert!(sc_subset_bound(4, 0).is_err());
    }
}
