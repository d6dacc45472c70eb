use std::fmt;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::validation::Validation;
use crate::vertex_set::VertexSet;

/// A sequence of bags `W_1 .. W_r`.
///
/// It is a directed path decomposition of `G` when every vertex is in some
/// bag, the bags holding any one vertex are consecutive, and every edge
/// `(u, v)` either has both ends in a common bag or has `u` in a bag strictly
/// before some bag holding `v`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathDecomposition {
    pub bags: Vec<VertexSet>,
}

impl PathDecomposition {
    pub fn new(bags: Vec<VertexSet>) -> Self {
        Self { bags }
    }

    /// Largest bag size minus one. A decomposition without nonempty bags
    /// reports 0; check [`PathDecomposition::is_empty`] to tell it apart.
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(VertexSet::len)
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    /// No vertex in any bag, so the width is undefined.
    pub fn is_empty(&self) -> bool {
        self.bags.iter().all(VertexSet::is_empty)
    }
}

/// One bag per line.
impl fmt::Display for PathDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.bags.iter().try_for_each(|b| writeln!(f, "{b}"))
    }
}

pub fn parse_path_decomposition(text: &str) -> Result<PathDecomposition> {
    let mut bags = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        bags.push(
            line.parse()
                .map_err(|e: Error| Error::parse(idx + 1, e.to_string()))?,
        );
    }
    Ok(PathDecomposition { bags })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecompositionCondition {
    /// A bag holds a vertex outside `0..n`.
    Range,
    /// (a) every vertex is in some bag.
    Coverage,
    /// (b) `W_i ∩ W_k ⊆ W_j` for `i < j < k`.
    Connectivity,
    /// (c) every edge is covered by a bag or points forward.
    Edge,
}

impl fmt::Display for DecompositionCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecompositionCondition::Range => "range",
            DecompositionCondition::Coverage => "(a) coverage",
            DecompositionCondition::Connectivity => "(b) connectivity",
            DecompositionCondition::Edge => "(c) edge",
        })
    }
}

pub type DecompositionValidation = Validation<DecompositionCondition>;

pub fn validate_path_decomposition(g: &Digraph, d: &PathDecomposition) -> DecompositionValidation {
    let n = g.vertex_count();
    let mut report = Validation::default();
    let mut first = vec![usize::MAX; n];
    let mut last = vec![0usize; n];
    for (i, bag) in d.bags.iter().enumerate() {
        for v in bag {
            if v >= n {
                report.push(
                    DecompositionCondition::Range,
                    format!("bag {i}"),
                    format!("vertex {v} is not in 0..{n}"),
                );
                continue;
            }
            if first[v] == usize::MAX {
                first[v] = i;
            }
            last[v] = i;
        }
    }
    for v in 0..n {
        if first[v] == usize::MAX {
            report.push(
                DecompositionCondition::Coverage,
                format!("vertex {v}"),
                "not contained in any bag",
            );
            continue;
        }
        if let Some(gap) = (first[v]..=last[v]).find(|&j| !d.bags[j].contains(v)) {
            report.push(
                DecompositionCondition::Connectivity,
                format!("bags {},{},{}", first[v], gap, last[v]),
                format!(
                    "vertex {v} is in bags {} and {} but not in bag {gap}",
                    first[v], last[v]
                ),
            );
        }
    }
    for (u, v) in g.edges() {
        if first[u] == usize::MAX || first[v] == usize::MAX {
            continue;
        }
        let forward = first[u] < last[v];
        let together = || d.bags.iter().any(|b| b.contains(u) && b.contains(v));
        if !forward && !together() {
            report.push(
                DecompositionCondition::Edge,
                format!("edge ({u},{v})"),
                format!(
                    "tail {u} first appears in bag {} but head {v} last appears in bag {}",
                    first[u], last[v]
                ),
            );
        }
    }
    report
}

/// An equivalent decomposition in which consecutive bags differ by exactly one
/// vertex. Between two input bags, departing vertices leave one at a time
/// before arriving vertices enter, so no bag grows and the width is kept.
/// Empty bags are dropped.
pub fn normalize(g: &Digraph, d: &PathDecomposition) -> Result<PathDecomposition> {
    let report = validate_path_decomposition(g, d);
    if !report.is_ok() {
        return Err(Error::Precondition(format!(
            "not a directed path decomposition: {}",
            report.violations[0]
        )));
    }
    let mut bags: Vec<VertexSet> = Vec::new();
    for target in d.bags.iter().filter(|b| !b.is_empty()) {
        let Some(mut current) = bags.last().cloned() else {
            bags.push(target.clone());
            continue;
        };
        for v in (&current - target).iter() {
            current.remove(v);
            bags.push(current.clone());
        }
        for v in (target - &current).iter() {
            current.insert(v);
            bags.push(current.clone());
        }
    }
    Ok(PathDecomposition { bags })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd(bags: &[&[usize]]) -> PathDecomposition {
        PathDecomposition::new(bags.iter().map(|b| b.iter().copied().collect()).collect())
    }

    #[test]
    fn chain_singletons() {
        let d = pd(&[&[0], &[1], &[2]]);
        assert!(validate_path_decomposition(&Digraph::path(3), &d).is_ok());
        assert_eq!(d.width(), 0);
    }

    #[test]
    fn backwards_edge_is_reported() {
        let report = validate_path_decomposition(&Digraph::path(3), &pd(&[&[1], &[0], &[2]]));
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].condition, DecompositionCondition::Edge);
        assert_eq!(report.violations[0].location, "edge (0,1)");
    }

    #[test]
    fn c3_width_one() {
        let d = pd(&[&[0, 1], &[0, 2]]);
        assert!(validate_path_decomposition(&Digraph::cycle(3), &d).is_ok());
        assert_eq!(d.width(), 1);
    }

    #[test]
    fn coverage_and_connectivity() {
        let g = Digraph::empty(3);
        let report = validate_path_decomposition(&g, &pd(&[&[0], &[1], &[0]]));
        assert!(report.has(DecompositionCondition::Coverage));
        assert!(report.has(DecompositionCondition::Connectivity));
        assert!(validate_path_decomposition(&g, &pd(&[&[7]])).has(DecompositionCondition::Range));
    }

    #[test]
    fn widths() {
        assert_eq!(pd(&[&[0]]).width(), 0);
        let empty = PathDecomposition::default();
        assert_eq!(empty.width(), 0);
        assert!(empty.is_empty());
    }

    #[test]
    fn normalize_inserts_intermediate_bag() {
        let g = Digraph::cycle(3);
        let n = normalize(&g, &pd(&[&[0, 1], &[0, 2]])).unwrap();
        assert_eq!(n, pd(&[&[0, 1], &[0], &[0, 2]]));
        assert_eq!(n.width(), 1);
        assert!(normalize(&g, &pd(&[&[0]])).is_err());
    }

    #[test]
    fn text_round_trip() {
        let d = pd(&[&[0, 1], &[], &[2]]);
        assert_eq!(d.to_string(), "{0,1}\n{}\n{2}\n");
        assert_eq!(parse_path_decomposition(&d.to_string()).unwrap(), d);
        assert!(matches!(
            parse_path_decomposition("{0}\n1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
