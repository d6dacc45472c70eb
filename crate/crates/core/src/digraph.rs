//! Directed graphs on the vertex set `0..n`.
//!
//! Edges form a set of ordered pairs; loops `(v, v)` are allowed and matter:
//! a single vertex with a loop is a cycle, one without is not.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Digraph {
    n: usize,
    // Sorted, duplicate-free adjacency lists.
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    m: usize,
}

/// An induced subgraph together with the map from new to original ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Digraph,
    /// `labels[i]` is the original id of vertex `i` of `graph`; ascending.
    pub labels: Vec<usize>,
}

impl Induced {
    pub fn original(&self, v: usize) -> usize {
        self.labels[v]
    }

    /// Maps a set of new ids back to original ids.
    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|v| self.labels[v]).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Degree {
    pub out: usize,
    /// Number of distinct vertices adjacent in either direction (a loop counts `v` itself).
    pub total: usize,
}

impl Digraph {
    /// Builds a digraph, silently merging repeated edges.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// `n` vertices, no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            out: vec![Vec::new(); n],
            inn: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// The directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn cycle(n: usize) -> Self {
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("in range")
    }

    /// The path `0 -> 1 -> ... -> n-1`.
    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (v - 1, v))).expect("in range")
    }

    /// All ordered pairs of distinct vertices.
    pub fn complete(n: usize) -> Self {
        Self::new(
            n,
            (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))),
        )
        .expect("in range")
    }

    /// Returns `false` if the edge was already present.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> bool {
        match self.out[u].binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.out[u].insert(pos, v);
                let pos = self.inn[v].binary_search(&u).unwrap_err();
                self.inn[v].insert(pos, u);
                self.m += 1;
                true
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out[u].binary_search(&v).is_ok()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.has_edge(v, v)
    }

    pub fn is_loop_free(&self) -> bool {
        (0..self.n).all(|v| !self.has_loop(v))
    }

    pub(crate) fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.last() {
            Some(v) if v >= self.n => Err(Error::input(format!(
                "vertex {v} is outside the vertex range 0..{}",
                self.n
            ))),
            _ => Ok(()),
        }
    }

    /// The subgraph induced by `set`, relabeled to `0..|set|` in ascending order.
    pub fn induced(&self, set: &VertexSet) -> Result<Induced> {
        self.check_set(set)?;
        let labels = set.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let mut graph = Digraph::empty(labels.len());
        for (i, &u) in labels.iter().enumerate() {
            for &v in &self.out[u] {
                if index[v] != usize::MAX {
                    graph.add_edge(i, index[v]);
                }
            }
        }
        Ok(Induced { graph, labels })
    }

    /// `G - set`, relabeled like [`Digraph::induced`].
    pub fn without(&self, set: &VertexSet) -> Result<Induced> {
        self.check_set(set)?;
        self.induced(&(&self.vertices() - set))
    }

    /// Whether `set` induces at least one edge.
    pub fn has_edge_within(&self, set: &VertexSet) -> bool {
        set.iter()
            .any(|u| self.out[u].iter().any(|&v| set.contains(v)))
    }

    pub fn degrees(&self) -> Vec<Degree> {
        (0..self.n)
            .map(|v| {
                let mut adjacent: Vec<usize> = self.out[v]
                    .iter()
                    .chain(self.inn[v].iter())
                    .copied()
                    .collect();
                adjacent.sort_unstable();
                adjacent.dedup();
                Degree {
                    out: self.out[v].len(),
                    total: adjacent.len(),
                }
            })
            .collect()
    }

    pub fn max_outdegree(&self) -> usize {
        self.out.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn max_total_degree(&self) -> usize {
        self.degrees().iter().map(|d| d.total).max().unwrap_or(0)
    }

    /// Graphviz rendering; isolated vertices are listed so none disappear.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph {\n");
        for v in 0..self.n {
            if self.out[v].is_empty() && self.inn[v].is_empty() {
                let _ = writeln!(s, "  {v};");
            }
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "  {u} -> {v};");
        }
        s.push_str("}\n");
        s
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Digraph({}, {:?})",
            self.n,
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// Result of parsing the edge-list format.
#[derive(Debug, Clone)]
pub struct Parsed {
    pub graph: Digraph,
    /// Edges listed more than once (kept once).
    pub duplicates: usize,
}

/// Parses the edge-list text format:
///
/// ```text
/// # comment
/// digraph 3
/// 0 1
/// 1 2   # trailing comments are fine
/// 2 0
/// ```
pub fn parse_digraph(text: &str) -> Result<Digraph> {
    parse_digraph_report(text).map(|p| p.graph)
}

pub fn parse_digraph_report(text: &str) -> Result<Parsed> {
    let mut graph: Option<Digraph> = None;
    let mut duplicates = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match &mut graph {
            None => {
                let n = match tokens.as_slice() {
                    ["digraph", n] => n.parse::<usize>().map_err(|_| {
                        Error::parse(line_no, format!("invalid vertex count `{n}`"))
                    })?,
                    _ => {
                        return Err(Error::parse(
                            line_no,
                            format!("expected `digraph <n>`, found `{line}`"),
                        ))
                    }
                };
                graph = Some(Digraph::empty(n));
            }
            Some(g) => {
                let [u, v] = tokens.as_slice() else {
                    return Err(Error::parse(
                        line_no,
                        format!("expected `<u> <v>`, found `{line}`"),
                    ));
                };
                let u = parse_vertex(u, g.n, line_no)?;
                let v = parse_vertex(v, g.n, line_no)?;
                if !g.add_edge(u, v) {
                    duplicates += 1;
                }
            }
        }
    }
    let graph = graph.ok_or_else(|| Error::parse(1, "missing `digraph <n>` header"))?;
    Ok(Parsed { graph, duplicates })
}

fn parse_vertex(token: &str, n: usize, line: usize) -> Result<usize> {
    if token.starts_with('-') {
        return Err(Error::parse(
            line,
            format!("negative vertex index `{token}`"),
        ));
    }
    let v: usize = token
        .parse()
        .map_err(|_| Error::parse(line, format!("invalid vertex index `{token}`")))?;
    if v >= n {
        return Err(Error::parse(
            line,
            format!("vertex index {v} out of range for a digraph with {n} vertices"),
        ));
    }
    Ok(v)
}

/// Inverse of [`parse_digraph`]; edges come out sorted.
pub fn serialize_digraph(g: &Digraph) -> String {
    let mut s = format!("digraph {}\n", g.n);
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// All edges as a set, mostly for tests and comparisons.
pub fn edge_set(g: &Digraph) -> BTreeSet<(usize, usize)> {
    g.edges().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn induced_on_k3() {
        let sub = Digraph::complete(3)
            .induced(&VertexSet::from([0, 1]))
            .unwrap();
        assert_eq!(edge_set(&sub.graph), BTreeSet::from([(0, 1), (1, 0)]));
    }

    #[test]
    fn induced_on_empty_set() {
        let sub = Digraph::cycle(4).induced(&VertexSet::new()).unwrap();
        assert_eq!(sub.graph.vertex_count(), 0);
        assert_eq!(sub.graph.edge_count(), 0);
    }

    #[test]
    fn induced_cycle_prefix_is_chain() {
        let sub = Digraph::cycle(4)
            .induced(&VertexSet::from([0, 1, 2]))
            .unwrap();
        assert_eq!(edge_set(&sub.graph), BTreeSet::from([(0, 1), (1, 2)]));
        assert_eq!(sub.labels, vec![0, 1, 2]);
    }

    #[test]
    fn induced_rejects_out_of_range() {
        assert!(matches!(
            Digraph::cycle(3).induced(&VertexSet::from([5])),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn degrees_follow_out_neighbor_convention() {
        let c3 = Digraph::cycle(3).degrees();
        assert_eq!(c3[0], Degree { out: 1, total: 2 });
        for d in Digraph::complete(3).degrees() {
            assert_eq!(d, Degree { out: 2, total: 2 });
        }
        assert_eq!(Digraph::empty(1).degrees()[0], Degree { out: 0, total: 0 });
    }

    #[test]
    fn parse_examples() {
        let g = parse_digraph("digraph 3\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(g, Digraph::cycle(3));
        let g = parse_digraph("digraph 1\n0 0\n").unwrap();
        assert!(g.has_loop(0));
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_digraph("digraph 2\n0 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        assert!(err.to_string().contains("out of range"));
        assert!(matches!(
            parse_digraph("digraph 2\n\n0 -1\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_digraph("# hi\n0 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_digraph("digraph 2\n0 1 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_digraph("").is_err());
    }

    #[test]
    fn duplicates_are_merged_and_counted() {
        let p = parse_digraph_report("digraph 2 # two\n0 1\n0 1\n# x\n1 0\n").unwrap();
        assert_eq!(p.graph.edge_count(), 2);
        assert_eq!(p.duplicates, 1);
    }

    #[test]
    fn serializer_sorts_edges() {
        let g = Digraph::new(3, [(2, 0), (0, 2), (0, 1)]).unwrap();
        assert_eq!(serialize_digraph(&g), "digraph 3\n0 1\n0 2\n2 0\n");
    }

    #[test]
    fn dot_lists_isolated_vertices() {
        let g = Digraph::new(3, [(0, 1)]).unwrap();
        assert_eq!(g.to_dot(), "digraph {\n  2;\n  0 -> 1;\n}\n");
    }
}
