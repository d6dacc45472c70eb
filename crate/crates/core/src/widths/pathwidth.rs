//! Exact directed pathwidth by dynamic programming over vertex layouts.
//!
//! Place the vertices one by one. After a prefix `S` has been placed, a placed
//! vertex `w` must stay open while it has an in-neighbour outside `S`: the
//! edge from that later vertex back to `w` can only be covered by a bag holding
//! both. Writing `open(S)` for the number of such vertices, the best layout
//! minimizes the largest `open` over all its prefixes, and
//!
//! ```text
//! best(S) = max(open(S), min over v in S of best(S - v))
//! ```
//!
//! The bag for the `i`-th placed vertex is that vertex plus the vertices open
//! just before it, so the width equals `best(V)`.

use crate::bitgraph::BitGraph;
use crate::digraph::Digraph;
use crate::error::{check_capacity, Result};
use crate::vertex_set::mask::{bit, bits};
use crate::vertex_set::VertexSet;

use super::PathDecomposition;

pub const DEFAULT_DPW_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpwResult {
    pub width: usize,
    pub decomposition: PathDecomposition,
    /// The vertex order the decomposition was built from.
    pub layout: Vec<usize>,
}

pub fn dpw_exact(g: &Digraph) -> Result<DpwResult> {
    dpw_exact_with_limit(g, DEFAULT_DPW_LIMIT)
}

pub fn dpw_exact_with_limit(g: &Digraph, limit: usize) -> Result<DpwResult> {
    check_capacity("vertex count for dpw", g.vertex_count(), limit.min(30))?;
    let b = BitGraph::new(g)?;
    let n = b.n();
    let all = b.all();
    let open = |s: u64| bits(s).filter(|&w| b.inn(w) & all & !s != 0).count() as u8;

    let mut best = vec![0u8; 1usize << n];
    for s in 1..(1u64 << n) {
        let inner = bits(s)
            .map(|v| best[(s & !bit(v)) as usize])
            .min()
            .expect("nonempty");
        best[s as usize] = inner.max(open(s));
    }

    // Peel the layout off from the back.
    let mut layout = Vec::with_capacity(n);
    let mut s = all;
    while s != 0 {
        let target = best[s as usize];
        let v = bits(s)
            .find(|&v| best[(s & !bit(v)) as usize] <= target)
            .expect("some vertex attains the minimum");
        layout.push(v);
        s &= !bit(v);
    }
    layout.reverse();

    let decomposition = layout_to_decomposition(g, &layout);
    Ok(DpwResult {
        width: best[all as usize] as usize,
        decomposition,
        layout,
    })
}

/// Bags for a vertex order: `{layout[i]}` plus the earlier vertices that still
/// have an in-neighbour at position `i` or later.
pub fn layout_to_decomposition(g: &Digraph, layout: &[usize]) -> PathDecomposition {
    let n = g.vertex_count();
    let mut position = vec![usize::MAX; n];
    for (i, &v) in layout.iter().enumerate() {
        position[v] = i;
    }
    // Last position at which a vertex must still be present.
    let until: Vec<usize> = (0..n)
        .map(|w| {
            g.in_neighbors(w)
                .iter()
                .map(|&u| position[u])
                .chain(std::iter::once(position[w]))
                .max()
                .expect("nonempty")
        })
        .collect();
    let bags = (0..layout.len())
        .map(|i| {
            let mut bag: VertexSet = layout[..i]
                .iter()
                .copied()
                .filter(|&w| until[w] >= i)
                .collect();
            bag.insert(layout[i]);
            bag
        })
        .collect();
    PathDecomposition::new(bags)
}
