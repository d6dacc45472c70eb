//! Directed feedback vertex sets.
//!
//! A set `S` is a directed feedback vertex set (DFVS) if `G - S` is acyclic.
//! The minimal ones are exactly the complements of the inclusion-maximal
//! acyclic vertex sets, which is how [`minimal_dfvs_enumerate`] finds them.

use crate::bitgraph::{BitGraph, MAX_VERTICES};
use crate::digraph::Digraph;
use crate::error::{check_capacity, Error, Result};
use crate::scc::{is_acyclic, nontrivial_sccs};
use crate::vertex_set::mask::{bit, bits, full};
use crate::vertex_set::VertexSet;

/// Default cap on the number of sets an enumeration may produce.
pub const DEFAULT_ENUMERATION_CAP: usize = 100_000;

pub fn is_dfvs(g: &Digraph, s: &VertexSet) -> Result<bool> {
    Ok(is_acyclic(&g.without(s)?.graph))
}

/// The inclusion-maximal vertex sets inducing an acyclic subgraph, in
/// lexicographic order. Fails with [`Error::Resource`] once more than `cap`
/// sets have been found.
///
/// ```
/// use cyclerank::{dfvs::maximal_acyclic_subsets, Digraph};
///
/// let sets = maximal_acyclic_subsets(&Digraph::cycle(3), 10).unwrap();
/// let text: Vec<String> = sets.iter().map(|s| s.to_string()).collect();
/// assert_eq!(text, ["{0,1}", "{0,2}", "{1,2}"]);
/// ```
pub fn maximal_acyclic_subsets(g: &Digraph, cap: usize) -> Result<Vec<VertexSet>> {
    check_capacity(
        "vertex count for DFVS enumeration",
        g.vertex_count(),
        MAX_VERTICES,
    )?;
    let graph = BitGraph::new(g)?;
    let mut search = Enumeration {
        graph: &graph,
        n: g.vertex_count(),
        cap,
        found: Vec::new(),
    };
    search.run(0, 0, 0)?;
    Ok(search.found.into_iter().map(VertexSet::from_mask).collect())
}

struct Enumeration<'a> {
    graph: &'a BitGraph,
    n: usize,
    cap: usize,
    found: Vec<u64>,
}

impl Enumeration<'_> {
    /// Vertices below `v` are decided: `chosen` holds the included ones and
    /// `excluded` the rest.
    fn run(&mut self, v: usize, chosen: u64, excluded: u64) -> Result<()> {
        if v == self.n {
            let maximal = bits(excluded).all(|u| !self.graph.is_acyclic(chosen | bit(u)));
            if maximal {
                if self.found.len() >= self.cap {
                    return Err(Error::Resource(format!(
                        "more than {} maximal acyclic subsets (enumeration stopped after {})",
                        self.cap,
                        self.found.len()
                    )));
                }
                self.found.push(chosen);
            }
            return Ok(());
        }
        let with = chosen | bit(v);
        if self.graph.is_acyclic(with) {
            self.run(v + 1, with, excluded)?;
        }
        // Leaving `v` out only pays off if some completion of `chosen` closes
        // a cycle through `v`.
        let undecided = full(self.n) & !full(v + 1);
        if !self.graph.is_acyclic(with | undecided) {
            self.run(v + 1, chosen, excluded | bit(v))?;
        }
        Ok(())
    }
}

/// The inclusion-minimal DFVSs, in lexicographic order.
pub fn minimal_dfvs_enumerate(g: &Digraph, cap: usize) -> Result<Vec<VertexSet>> {
    let all = g.vertices();
    let mut sets: Vec<VertexSet> = maximal_acyclic_subsets(g, cap)?
        .iter()
        .map(|a| &all - a)
        .collect();
    sets.sort();
    Ok(sets)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DfvsResult {
    /// A minimum DFVS, lexicographically first among those of minimum size.
    pub minimum_set: VertexSet,
    pub minimum_size: usize,
    /// Vertices with a loop; they belong to every DFVS.
    pub forced: VertexSet,
    /// All minimal DFVSs, when requested.
    pub enumeration: Option<Vec<VertexSet>>,
}

/// A minimum DFVS.
///
/// ```
/// use cyclerank::{dfvs::min_dfvs, Digraph};
///
/// let r = min_dfvs(&Digraph::complete(3)).unwrap();
/// assert_eq!(r.minimum_size, 2);
/// assert_eq!(r.minimum_set.to_string(), "{0,1}");
/// ```
pub fn min_dfvs(g: &Digraph) -> Result<DfvsResult> {
    check_capacity("vertex count for DFVS", g.vertex_count(), MAX_VERTICES)?;
    let graph = BitGraph::new(g)?;
    let forced = graph.loops();
    // Only vertices on a cycle of length at least two are worth choosing.
    let mut candidates = 0u64;
    for c in nontrivial_sccs(g) {
        if c.len() > 1 {
            candidates |= c.as_mask().expect("fits in a word");
        }
    }
    candidates &= !forced;
    let candidates: Vec<usize> = bits(candidates).collect();
    let remaining = graph.all() & !forced;

    for size in 0..=candidates.len() {
        if let Some(s) = first_feedback_set(&graph, remaining, &candidates, size) {
            let set = VertexSet::from_mask(s | forced);
            return Ok(DfvsResult {
                minimum_size: set.len(),
                minimum_set: set,
                forced: VertexSet::from_mask(forced),
                enumeration: None,
            });
        }
    }
    unreachable!("removing every candidate leaves an acyclic digraph")
}

/// [`min_dfvs`] together with all minimal DFVSs, failing past `cap` of them.
pub fn min_dfvs_with_enumeration(g: &Digraph, cap: usize) -> Result<DfvsResult> {
    let mut result = min_dfvs(g)?;
    result.enumeration = Some(minimal_dfvs_enumerate(g, cap)?);
    Ok(result)
}

/// The lexicographically first `size`-subset `S` of `candidates` with
/// `remaining - S` acyclic.
fn first_feedback_set(
    graph: &BitGraph,
    remaining: u64,
    candidates: &[usize],
    size: usize,
) -> Option<u64> {
    let k = candidates.len();
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let s = idx.iter().fold(0u64, |m, &i| m | bit(candidates[i]));
        if graph.is_acyclic(remaining & !s) {
            return Some(s);
        }
        let i = (0..size).rev().find(|&i| idx[i] < k - size + i)?;
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
