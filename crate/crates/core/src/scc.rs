//! Strongly connected components.
//!
//! [`scc`] returns the components in a canonical topological order: every edge
//! between two components points from an earlier one to a later one, and among
//! the components that could come next, the one holding the smallest vertex id
//! goes first.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::digraph::Digraph;
use crate::error::Result;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccPartition {
    pub components: Vec<VertexSet>,
}

impl SccPartition {
    /// `index[v]` is the position of the component containing `v`.
    pub fn index(&self, n: usize) -> Vec<usize> {
        let mut index = vec![usize::MAX; n];
        for (i, c) in self.components.iter().enumerate() {
            for v in c {
                index[v] = i;
            }
        }
        index
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// Iterative Tarjan; components come out in reverse topological order.
fn tarjan(g: &Digraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut out = Vec::new();
    let mut next_index = 0;
    // (vertex, position in its adjacency list)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let succ = g.out_neighbors(v);
            if *pos < succ.len() {
                let w = succ[*pos];
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                out.push(comp);
            }
        }
    }
    out
}

pub fn scc(g: &Digraph) -> SccPartition {
    let n = g.vertex_count();
    let raw = tarjan(g);
    let k = raw.len();
    let mut comp_of = vec![0; n];
    for (i, c) in raw.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let min_vertex: Vec<usize> = raw
        .iter()
        .map(|c| *c.iter().min().expect("nonempty"))
        .collect();

    // Kahn's algorithm on the condensation, smallest vertex id first.
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut indeg = vec![0usize; k];
    for (u, v) in g.edges() {
        let (a, b) = (comp_of[u], comp_of[v]);
        if a != b {
            succ[a].push(b);
        }
    }
    for s in succ.iter_mut() {
        s.sort_unstable();
        s.dedup();
        for &b in s.iter() {
            indeg[b] += 1;
        }
    }
    let mut ready: BinaryHeap<Reverse<(usize, usize)>> = (0..k)
        .filter(|&c| indeg[c] == 0)
        .map(|c| Reverse((min_vertex[c], c)))
        .collect();
    let mut components = Vec::with_capacity(k);
    while let Some(Reverse((_, c))) = ready.pop() {
        components.push(raw[c].iter().copied().collect());
        for &b in &succ[c] {
            indeg[b] -= 1;
            if indeg[b] == 0 {
                ready.push(Reverse((min_vertex[b], b)));
            }
        }
    }
    SccPartition { components }
}

/// Whether the vertex set `c` induces at least one edge.
fn is_nontrivial(g: &Digraph, c: &VertexSet) -> bool {
    c.len() > 1 || c.iter().any(|v| g.has_loop(v))
}

/// The components that contain at least one edge, in topological order.
pub fn nontrivial_sccs(g: &Digraph) -> Vec<VertexSet> {
    scc(g)
        .components
        .into_iter()
        .filter(|c| is_nontrivial(g, c))
        .collect()
}

/// True iff every strongly connected component is trivial. A loop is a cycle.
pub fn is_acyclic(g: &Digraph) -> bool {
    nontrivial_sccs(g).is_empty()
}

/// Strongly connected: exactly one component, and it covers all vertices.
/// The empty digraph is not strongly connected.
pub fn is_strongly_connected(g: &Digraph) -> bool {
    g.vertex_count() > 0 && tarjan(g).len() == 1
}

/// Components of `G[within]`, in original vertex ids and canonical order.
pub fn scc_within(g: &Digraph, within: &VertexSet) -> Result<Vec<VertexSet>> {
    let sub = g.induced(within)?;
    Ok(scc(&sub.graph)
        .components
        .iter()
        .map(|c| sub.lift(c))
        .collect())
}

/// Nontrivial components of `G[within]`, in original vertex ids and canonical order.
pub fn nontrivial_sccs_within(g: &Digraph, within: &VertexSet) -> Result<Vec<VertexSet>> {
    Ok(scc_within(g, within)?
        .into_iter()
        .filter(|c| is_nontrivial(g, c))
        .collect())
}

/// The strongly connected component of `G[within]` containing `v`.
pub fn component_containing(g: &Digraph, within: &VertexSet, v: usize) -> VertexSet {
    let reach = |forward: bool, allowed: &VertexSet| {
        let mut seen = VertexSet::singleton(v);
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            let next = if forward {
                g.out_neighbors(u)
            } else {
                g.in_neighbors(u)
            };
            for &w in next {
                if allowed.contains(w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen
    };
    let forward = reach(true, within);
    reach(false, &forward)
}
