//! Polynomial-time approximation of cycle rank by balanced separators.
//!
//! [`crank_approx`] splits a digraph into strongly connected components. For
//! a large component `W` it removes a separator `S` after which every
//! remaining component has at most `ceil(3|W|/4)` vertices, solves `G[W] - S`
//! recursively, and puts the vertices of `S` back one at a time with
//! [`extend_forest`]. Components below the base threshold are solved directly.

use std::fmt;

use crate::cyclerank::crank_exact;
use crate::digraph::{Digraph, Induced};
use crate::elimination::{validate_forest_within, EliminationForest, EliminationNode};
use crate::error::{Error, Result};
use crate::scc::{component_containing, nontrivial_sccs_within, scc_within};
use crate::vertex_set::VertexSet;

/// Components up to this size are solved exactly in the base case; larger
/// ones fall back to a deletion-order forest.
pub const EXACT_BASE_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseThreshold {
    /// `max(1, ceil(log2(n)^1.5))` for a digraph on `n` vertices.
    Auto,
    Fixed(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeparatorMode {
    /// Exact minimum separators for components of at most
    /// `exact_separator_limit` vertices, greedy above.
    Exact,
    Greedy,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxConfig {
    pub base_threshold: BaseThreshold,
    pub separator_mode: SeparatorMode,
    pub exact_separator_limit: usize,
}

impl Default for ApproxConfig {
    fn default() -> Self {
        Self {
            base_threshold: BaseThreshold::Auto,
            separator_mode: SeparatorMode::Exact,
            exact_separator_limit: 12,
        }
    }
}

impl ApproxConfig {
    /// The size below which a component is solved directly.
    pub fn threshold(&self, n: usize) -> usize {
        match self.base_threshold {
            BaseThreshold::Auto => {
                let log = if n <= 1 { 0.0 } else { (n as f64).log2() };
                (log.powf(1.5).ceil() as usize).max(1)
            }
            BaseThreshold::Fixed(t) => t,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxResult {
    pub forest: EliminationForest,
    pub height: usize,
    /// `separator_sizes[d]` lists the sizes of the separators chosen at
    /// separator depth `d`, in the order they were computed.
    pub separator_sizes: Vec<Vec<usize>>,
}

impl fmt::Display for ApproxResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "height {}", self.height)?;
        for (depth, sizes) in self.separator_sizes.iter().enumerate() {
            let sizes: Vec<String> = sizes.iter().map(usize::to_string).collect();
            writeln!(f, "separators {depth}: {}", sizes.join(" "))?;
        }
        write!(f, "{}", self.forest)
    }
}

pub fn crank_approx(g: &Digraph, config: &ApproxConfig) -> Result<ApproxResult> {
    if config.base_threshold == BaseThreshold::Fixed(0) {
        return Err(Error::input("the base threshold must be positive"));
    }
    let mut run = Run {
        g,
        config,
        threshold: config.threshold(g.vertex_count()),
        separator_sizes: Vec::new(),
    };
    let mut forest = EliminationForest::new(run.forest(&g.vertices(), 0)?);
    forest.canonicalize(g)?;
    Ok(ApproxResult {
        height: forest.height(),
        forest,
        separator_sizes: run.separator_sizes,
    })
}

struct Run<'a> {
    g: &'a Digraph,
    config: &'a ApproxConfig,
    threshold: usize,
    separator_sizes: Vec<Vec<usize>>,
}

impl Run<'_> {
    /// Trees of a forest for `G[within]`.
    fn forest(&mut self, within: &VertexSet, depth: usize) -> Result<Vec<EliminationNode>> {
        let mut trees = Vec::new();
        for c in nontrivial_sccs_within(self.g, within)? {
            trees.extend(self.component(&c, depth)?);
        }
        Ok(trees)
    }

    fn component(&mut self, w: &VertexSet, depth: usize) -> Result<Vec<EliminationNode>> {
        if w.len() < self.threshold {
            return base_forest(self.g, w);
        }
        let s = find_balanced_separator(self.g, w, self.config)?;
        if self.separator_sizes.len() <= depth {
            self.separator_sizes.resize(depth + 1, Vec::new());
        }
        self.separator_sizes[depth].push(s.len());
        let mut current = w - &s;
        let mut forest = EliminationForest::new(self.forest(&current, depth + 1)?);
        for v in &s {
            forest = extend_unchecked(self.g, &current, v, forest)?;
            current.insert(v);
        }
        Ok(forest.trees)
    }
}

fn base_forest(g: &Digraph, w: &VertexSet) -> Result<Vec<EliminationNode>> {
    if w.len() <= EXACT_BASE_LIMIT {
        let sub = g.induced(w)?;
        let exact = crank_exact(&sub.graph)?;
        Ok(exact
            .witness
            .trees
            .iter()
            .map(|t| lift_node(t, &sub))
            .collect())
    } else {
        deletion_order_tree(g, w).map(|t| vec![t])
    }
}

fn lift_node(node: &EliminationNode, sub: &Induced) -> EliminationNode {
    EliminationNode {
        pivot: sub.original(node.pivot),
        scope: sub.lift(&node.scope),
        children: node.children.iter().map(|c| lift_node(c, sub)).collect(),
    }
}

/// A tree for the strongly connected `w` that always eliminates a vertex of
/// largest total degree inside the current scope.
fn deletion_order_tree(g: &Digraph, w: &VertexSet) -> Result<EliminationNode> {
    let degree = |v: usize| {
        let out = g
            .out_neighbors(v)
            .iter()
            .filter(|&&u| w.contains(u))
            .count();
        let inn = g.in_neighbors(v).iter().filter(|&&u| w.contains(u)).count();
        out + inn
    };
    let pivot = w
        .iter()
        .max_by_key(|&v| (degree(v), std::cmp::Reverse(v)))
        .expect("nonempty scope");
    let mut rest = w.clone();
    rest.remove(pivot);
    let children = nontrivial_sccs_within(g, &rest)?
        .iter()
        .map(|c| deletion_order_tree(g, c))
        .collect::<Result<_>>()?;
    Ok(EliminationNode {
        pivot,
        scope: w.clone(),
        children,
    })
}

/// Size of the largest strongly connected component of `G[within]`.
fn largest_component(g: &Digraph, within: &VertexSet) -> Result<usize> {
    Ok(scc_within(g, within)?
        .iter()
        .map(VertexSet::len)
        .max()
        .unwrap_or(0))
}

/// A nonempty `S ⊆ W` such that every strongly connected component of
/// `G[W] - S` has at most `ceil(3|W|/4)` vertices.
///
/// The separator is a minimum one, first in lexicographic order among those,
/// when `|W|` is at most the exact limit and the mode is
/// [`SeparatorMode::Exact`]. Otherwise it is built greedily.
///
/// ```
/// use cyclerank::{approx::{find_balanced_separator, ApproxConfig}, Digraph, VertexSet};
///
/// let c4 = Digraph::cycle(4);
/// let s = find_balanced_separator(&c4, &c4.vertices(), &ApproxConfig::default()).unwrap();
/// assert_eq!(s, VertexSet::from([0]));
/// ```
pub fn find_balanced_separator(
    g: &Digraph,
    w: &VertexSet,
    config: &ApproxConfig,
) -> Result<VertexSet> {
    g.check_set(w)?;
    let strongly_connected = match w.first() {
        Some(v) => component_containing(g, w, v) == *w && g.has_edge_within(w),
        None => false,
    };
    if !strongly_connected {
        return Err(Error::Precondition(format!(
            "{w} does not induce a nontrivial strongly connected subgraph"
        )));
    }
    let bound = (3 * w.len()).div_ceil(4);
    if config.separator_mode == SeparatorMode::Exact && w.len() <= config.exact_separator_limit {
        exact_separator(g, w, bound)
    } else {
        greedy_separator(g, w, bound)
    }
}

fn exact_separator(g: &Digraph, w: &VertexSet, bound: usize) -> Result<VertexSet> {
    let vertices = w.to_vec();
    for size in 1..=vertices.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let s: VertexSet = idx.iter().map(|&i| vertices[i]).collect();
            if largest_component(g, &(w - &s))? <= bound {
                return Ok(s);
            }
            // Next combination in lexicographic order.
            let Some(i) = (0..size)
                .rev()
                .find(|&i| idx[i] < vertices.len() - size + i)
            else {
                break;
            };
            idx[i] += 1;
            for j in i + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    Ok(w.clone())
}

fn greedy_separator(g: &Digraph, w: &VertexSet, bound: usize) -> Result<VertexSet> {
    let mut s = VertexSet::new();
    loop {
        let rest = w - &s;
        let comps = scc_within(g, &rest)?;
        let largest = comps
            .iter()
            .max_by_key(|c| (c.len(), std::cmp::Reverse(c.first())))
            .cloned()
            .unwrap_or_default();
        if !s.is_empty() && largest.len() <= bound {
            return Ok(s);
        }
        let mut best = (usize::MAX, usize::MAX);
        for v in &largest {
            let mut after = rest.clone();
            after.remove(v);
            let size = largest_component(g, &after)?;
            if size < best.0 {
                best = (size, v);
            }
        }
        s.insert(best.1);
    }
}

/// Extends a forest for `G[W ∪ X]` to one for `G[W ∪ X ∪ {s}]`.
///
/// The trees whose scopes fall into the strongly connected component of `s`
/// become the children of a new root `(s, C)`, where `C` is that component;
/// the other trees are kept. If `s` lies on no cycle, the forest is only
/// reordered.
///
/// ```
/// use cyclerank::{approx::extend_forest, Digraph, EliminationForest, VertexSet};
///
/// let g = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
/// let w = VertexSet::from([1, 2]);
/// let f = extend_forest(&g, &w, &VertexSet::new(), 0, EliminationForest::default()).unwrap();
/// assert_eq!(f.to_string(), "0 {0,1,2}\n");
/// ```
pub fn extend_forest(
    g: &Digraph,
    w: &VertexSet,
    x: &VertexSet,
    s: usize,
    forest: EliminationForest,
) -> Result<EliminationForest> {
    let within = w | x;
    g.check_set(&within)?;
    if s >= g.vertex_count() {
        return Err(Error::input(format!("vertex {s} out of range")));
    }
    if within.contains(s) {
        return Err(Error::input(format!("vertex {s} already belongs to W ∪ X")));
    }
    let validation = validate_forest_within(g, &within, &forest);
    if !validation.is_ok() {
        return Err(Error::input(format!(
            "the forest is not valid for G[W ∪ X]:\n{validation}"
        )));
    }
    extend_unchecked(g, &within, s, forest)
}

fn extend_unchecked(
    g: &Digraph,
    within: &VertexSet,
    s: usize,
    forest: EliminationForest,
) -> Result<EliminationForest> {
    let mut all = within.clone();
    all.insert(s);
    let component = component_containing(g, &all, s);
    let mut trees = forest.trees;
    if component.len() > 1 || g.has_loop(s) {
        let (children, rest): (Vec<_>, Vec<_>) = trees
            .into_iter()
            .partition(|t| t.scope.is_subset(&component));
        trees = rest;
        trees.push(EliminationNode {
            pivot: s,
            scope: component,
            children,
        });
    }
    let mut forest = EliminationForest::new(trees);
    forest.canonicalize_within(g, &all)?;
    Ok(forest)
}
