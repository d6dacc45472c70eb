//! Directed elimination forests.
//!
//! A node `(x, X)` of a directed elimination tree pairs a *pivot* `x` with a
//! *scope* `X` that contains it. The children of `(x, X)` have as scopes
//! exactly the nontrivial strongly connected components of `G[X] - x`, and the
//! roots of a forest for `G` have as scopes the nontrivial strongly connected
//! components of `G` itself. No scope appears twice.
//!
//! The minimum height of such a forest, counted in nodes, is the cycle rank;
//! an acyclic digraph has the empty forest and height 0.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::scc::{nontrivial_sccs_within, scc_within};
use crate::validation::Validation;
use crate::vertex_set::VertexSet;
use crate::widths::PathDecomposition;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EliminationNode {
    pub pivot: usize,
    pub scope: VertexSet,
    pub children: Vec<EliminationNode>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EliminationForest {
    pub trees: Vec<EliminationNode>,
}

impl EliminationNode {
    pub fn leaf(pivot: usize, scope: VertexSet) -> Self {
        Self {
            pivot,
            scope,
            children: Vec::new(),
        }
    }

    pub fn height(&self) -> usize {
        1 + self.children.iter().map(Self::height).max().unwrap_or(0)
    }

    fn count(&self) -> usize {
        1 + self.children.iter().map(Self::count).sum::<usize>()
    }
}

impl EliminationForest {
    pub fn new(trees: Vec<EliminationNode>) -> Self {
        Self { trees }
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// Longest root-to-leaf path, in nodes; 0 for the empty forest.
    pub fn height(&self) -> usize {
        self.trees
            .iter()
            .map(EliminationNode::height)
            .max()
            .unwrap_or(0)
    }

    pub fn node_count(&self) -> usize {
        self.trees.iter().map(EliminationNode::count).sum()
    }

    /// Puts roots and siblings in canonical order: topological order of their
    /// scopes, ties broken by smallest vertex id.
    pub fn canonicalize(&mut self, g: &Digraph) -> Result<()> {
        self.canonicalize_within(g, &g.vertices())
    }

    /// [`EliminationForest::canonicalize`] for a forest of `G[within]`.
    pub fn canonicalize_within(&mut self, g: &Digraph, within: &VertexSet) -> Result<()> {
        let mut position = vec![usize::MAX; g.vertex_count()];
        for (i, c) in scc_within(g, within)?.iter().enumerate() {
            for v in c {
                position[v] = i;
            }
        }
        sort_by_component(&mut self.trees, &position)?;
        for t in &mut self.trees {
            canonicalize_node(g, t)?;
        }
        Ok(())
    }

    pub fn to_dot(&self) -> String {
        fn walk(node: &EliminationNode, parent: Option<usize>, next: &mut usize, out: &mut String) {
            let id = *next;
            *next += 1;
            let _ = writeln!(out, "  n{id} [label=\"{} {}\"];", node.pivot, node.scope);
            if let Some(p) = parent {
                let _ = writeln!(out, "  n{p} -> n{id};");
            }
            for c in &node.children {
                walk(c, Some(id), next, out);
            }
        }
        let mut out = String::from("digraph {\n");
        let mut next = 0;
        for t in &self.trees {
            walk(t, None, &mut next, &mut out);
        }
        out.push_str("}\n");
        out
    }
}

fn sort_by_component(nodes: &mut [EliminationNode], position: &[usize]) -> Result<()> {
    for node in nodes.iter() {
        if node.scope.last().is_some_and(|v| v >= position.len()) || node.scope.is_empty() {
            return Err(Error::Precondition(format!(
                "scope {} does not belong to the digraph",
                node.scope
            )));
        }
    }
    nodes.sort_by_key(|node| position[node.scope.first().expect("nonempty")]);
    Ok(())
}

fn canonicalize_node(g: &Digraph, node: &mut EliminationNode) -> Result<()> {
    if node.children.is_empty() {
        return Ok(());
    }
    let mut rest = node.scope.clone();
    rest.remove(node.pivot);
    let mut position = vec![usize::MAX; g.vertex_count()];
    for (i, c) in scc_within(g, &rest)?.iter().enumerate() {
        for v in c {
            position[v] = i;
        }
    }
    sort_by_component(&mut node.children, &position)?;
    for c in &mut node.children {
        canonicalize_node(g, c)?;
    }
    Ok(())
}

/// Text form: one node per line, `pivot {scope}`, indented two spaces per level.
///
/// ```text
/// 0 {0,1,2,3}
///   2 {2,3}
/// ```
impl fmt::Display for EliminationForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn walk(node: &EliminationNode, depth: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            writeln!(
                f,
                "{:indent$}{} {}",
                "",
                node.pivot,
                node.scope,
                indent = 2 * depth
            )?;
            node.children.iter().try_for_each(|c| walk(c, depth + 1, f))
        }
        self.trees.iter().try_for_each(|t| walk(t, 0, f))
    }
}

pub fn parse_forest(text: &str) -> Result<EliminationForest> {
    // Path of open nodes from the root down to the previous line's node.
    let mut open: Vec<EliminationNode> = Vec::new();
    let mut trees = Vec::new();

    fn close_to(open: &mut Vec<EliminationNode>, depth: usize, trees: &mut Vec<EliminationNode>) {
        while open.len() > depth {
            let node = open.pop().expect("nonempty");
            match open.last_mut() {
                Some(parent) => parent.children.push(node),
                None => trees.push(node),
            }
        }
    }

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start_matches(' ').len();
        if indent % 2 != 0 {
            return Err(Error::parse(
                line_no,
                "indentation must be a multiple of two spaces",
            ));
        }
        let depth = indent / 2;
        if depth > open.len() {
            return Err(Error::parse(
                line_no,
                "node is indented more than one level below its parent",
            ));
        }
        let body = content.trim();
        let (pivot, scope) = body.split_once(char::is_whitespace).ok_or_else(|| {
            Error::parse(
                line_no,
                format!("expected `pivot {{scope}}`, found `{body}`"),
            )
        })?;
        let pivot: usize = pivot
            .parse()
            .map_err(|_| Error::parse(line_no, format!("invalid pivot `{pivot}`")))?;
        let scope: VertexSet = scope
            .parse()
            .map_err(|e: Error| Error::parse(line_no, e.to_string()))?;
        close_to(&mut open, depth, &mut trees);
        open.push(EliminationNode::leaf(pivot, scope));
    }
    close_to(&mut open, 0, &mut trees);
    Ok(EliminationForest { trees })
}

/// Which defining condition a forest violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ForestCondition {
    /// A pivot or scope mentions a vertex the digraph does not have.
    Range,
    /// (a) the pivot lies in the scope.
    PivotInScope,
    /// Root scopes are exactly the nontrivial SCCs of the digraph.
    RootScopes,
    /// (c) no two nodes share a scope.
    DistinctScopes,
    /// (d) child scopes are exactly the nontrivial SCCs of `G[X] - x`.
    Children,
}

impl fmt::Display for ForestCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ForestCondition::Range => "range",
            ForestCondition::PivotInScope => "pivot-in-scope",
            ForestCondition::RootScopes => "root-scopes",
            ForestCondition::DistinctScopes => "distinct-scopes",
            ForestCondition::Children => "children",
        })
    }
}

pub type ForestValidation = Validation<ForestCondition>;

/// Checks every defining condition of a directed elimination forest for `g`.
/// Node locations are dotted child-index paths, `0.2` being the third child of
/// the first root.
pub fn validate_forest(g: &Digraph, forest: &EliminationForest) -> ForestValidation {
    validate_forest_within(g, &g.vertices(), forest)
}

/// [`validate_forest`] for the induced subgraph `G[within]`, in original ids.
pub fn validate_forest_within(
    g: &Digraph,
    within: &VertexSet,
    forest: &EliminationForest,
) -> ForestValidation {
    let mut report = Validation::default();
    if let Some(v) = within.last().filter(|&v| v >= g.vertex_count()) {
        report.push(
            ForestCondition::Range,
            "forest",
            format!("vertex {v} is not in 0..{}", g.vertex_count()),
        );
        return report;
    }
    let mut seen: HashMap<&VertexSet, String> = HashMap::new();
    let expected_roots = nontrivial_sccs_within(g, within).expect("range checked");
    compare_scopes(
        &mut report,
        ForestCondition::RootScopes,
        "forest",
        &expected_roots,
        forest
            .trees
            .iter()
            .enumerate()
            .map(|(i, t)| (i.to_string(), &t.scope)),
    );
    for (i, t) in forest.trees.iter().enumerate() {
        validate_node(g, within, t, i.to_string(), &mut seen, &mut report);
    }
    report
}

fn compare_scopes<'a>(
    report: &mut ForestValidation,
    condition: ForestCondition,
    owner: &str,
    expected: &[VertexSet],
    actual: impl Iterator<Item = (String, &'a VertexSet)>,
) {
    let mut unmatched: Vec<&VertexSet> = expected.iter().collect();
    for (location, scope) in actual {
        match unmatched.iter().position(|e| *e == scope) {
            Some(i) => {
                unmatched.swap_remove(i);
            }
            None => report.push(
                condition,
                location,
                format!("scope {scope} is not a nontrivial strongly connected component"),
            ),
        }
    }
    unmatched.sort();
    for missing in unmatched {
        report.push(
            condition,
            owner,
            format!("no node for nontrivial strongly connected component {missing}"),
        );
    }
}

fn validate_node<'a>(
    g: &Digraph,
    within: &VertexSet,
    node: &'a EliminationNode,
    location: String,
    seen: &mut HashMap<&'a VertexSet, String>,
    report: &mut ForestValidation,
) {
    if !node.scope.is_subset(within) || !within.contains(node.pivot) {
        report.push(
            ForestCondition::Range,
            location,
            format!(
                "node ({}, {}) leaves the vertex set {}",
                node.pivot, node.scope, within
            ),
        );
        return;
    }
    if !node.scope.contains(node.pivot) {
        report.push(
            ForestCondition::PivotInScope,
            location.clone(),
            format!("pivot {} is not in scope {}", node.pivot, node.scope),
        );
    }
    if let Some(first) = seen.get(&node.scope) {
        report.push(
            ForestCondition::DistinctScopes,
            location.clone(),
            format!("scope {} already used at {first}", node.scope),
        );
    } else {
        seen.insert(&node.scope, location.clone());
    }
    let mut rest = node.scope.clone();
    rest.remove(node.pivot);
    let expected = nontrivial_sccs_within(g, &rest).expect("range checked");
    compare_scopes(
        report,
        ForestCondition::Children,
        &location,
        &expected,
        node.children
            .iter()
            .enumerate()
            .map(|(i, c)| (format!("{location}.{i}"), &c.scope)),
    );
    for (i, c) in node.children.iter().enumerate() {
        validate_node(g, within, c, format!("{location}.{i}"), seen, report);
    }
}

/// Turns a valid forest of height `h` into a directed path decomposition of
/// width at most `h`.
///
/// Components of the digraph are handled in topological order and their
/// decompositions concatenated. A trivial component contributes a singleton
/// bag; a nontrivial one with tree `(x, X)` contributes the decomposition of
/// `G[X] - x` (built from the children) with `x` added to every bag.
pub fn forest_to_path_decomposition(
    g: &Digraph,
    forest: &EliminationForest,
) -> Result<PathDecomposition> {
    let report = validate_forest(g, forest);
    if !report.is_ok() {
        return Err(Error::Precondition(format!(
            "not a directed elimination forest ({} violations, first: {})",
            report.violations.len(),
            report.violations[0]
        )));
    }
    let bags = decompose(g, &g.vertices(), &forest.trees)?;
    Ok(PathDecomposition::new(bags))
}

fn decompose(g: &Digraph, within: &VertexSet, trees: &[EliminationNode]) -> Result<Vec<VertexSet>> {
    let by_scope: HashMap<&VertexSet, &EliminationNode> =
        trees.iter().map(|t| (&t.scope, t)).collect();
    let mut bags = Vec::new();
    for comp in scc_within(g, within)? {
        match by_scope.get(&comp) {
            Some(node) => {
                let mut rest = comp.clone();
                rest.remove(node.pivot);
                let mut inner = decompose(g, &rest, &node.children)?;
                if inner.is_empty() {
                    inner.push(VertexSet::new());
                }
                for bag in &mut inner {
                    bag.insert(node.pivot);
                }
                bags.extend(inner);
            }
            None => bags.extend(comp.iter().map(VertexSet::singleton)),
        }
    }
    Ok(bags)
}
