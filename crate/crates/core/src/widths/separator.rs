//! Weak balanced separators and the weak separator number.

use crate::bitgraph::BitGraph;
use crate::digraph::Digraph;
use crate::error::{check_capacity, Error, Result};
use crate::scc::scc_within;
use crate::vertex_set::mask::bits;
use crate::vertex_set::VertexSet;

pub const DEFAULT_SNUM_LIMIT: usize = 15;

/// A separator `separator` for the target set `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorCertificate {
    pub target: VertexSet,
    pub separator: VertexSet,
}

/// Every component of `G[U - S]` has at most `ceil(|U - S| / 2)` vertices.
pub fn is_weak_balanced_separator(
    g: &Digraph,
    target: &VertexSet,
    separator: &VertexSet,
) -> Result<bool> {
    g.check_set(target)?;
    if !separator.is_subset(target) {
        return Err(Error::input(format!(
            "separator {separator} is not contained in target {target}"
        )));
    }
    let rest = target - separator;
    let bound = rest.len().div_ceil(2);
    Ok(scc_within(g, &rest)?.iter().all(|c| c.len() <= bound))
}

fn balanced(b: &BitGraph, rest: u64) -> bool {
    let bound = (rest.count_ones() as usize).div_ceil(2);
    let mut left = rest;
    // Once fewer than `bound` vertices remain unassigned, no component can be too big.
    while left.count_ones() as usize > bound {
        let c = b.component_of(left.trailing_zeros() as usize, left);
        if c.count_ones() as usize > bound {
            return false;
        }
        left &= !c;
    }
    true
}

/// Calls `visit` on every `size`-subset of `items` in lexicographic order
/// until it returns `true`.
fn first_subset(items: &[usize], size: usize, mut visit: impl FnMut(u64) -> bool) -> Option<u64> {
    fn rec(
        items: &[usize],
        size: usize,
        start: usize,
        acc: u64,
        visit: &mut dyn FnMut(u64) -> bool,
    ) -> Option<u64> {
        if size == 0 {
            return visit(acc).then_some(acc);
        }
        for i in start..=items.len() - size {
            if let Some(found) = rec(items, size - 1, i + 1, acc | (1 << items[i]), visit) {
                return Some(found);
            }
        }
        None
    }
    if size > items.len() {
        return None;
    }
    rec(items, size, 0, 0, &mut visit)
}

/// Smallest separator of size at most `max_size`, lexicographically first among
/// those of minimum size.
fn smallest_separator(b: &BitGraph, target: u64, max_size: usize) -> Option<u64> {
    let items: Vec<usize> = bits(target).collect();
    (0..=max_size.min(items.len()))
        .find_map(|k| first_subset(&items, k, |s| balanced(b, target & !s)))
}

/// A minimum weak balanced separator for `target`.
pub fn min_weak_separator(g: &Digraph, target: &VertexSet) -> Result<SeparatorCertificate> {
    min_weak_separator_with_limit(g, target, DEFAULT_SNUM_LIMIT)
}

pub fn min_weak_separator_with_limit(
    g: &Digraph,
    target: &VertexSet,
    limit: usize,
) -> Result<SeparatorCertificate> {
    check_capacity("vertex count for separator search", g.vertex_count(), limit)?;
    g.check_set(target)?;
    let b = BitGraph::new(g)?;
    let t = target.as_mask().expect("capacity checked");
    let s = smallest_separator(&b, t, usize::MAX).expect("the whole target always works");
    Ok(SeparatorCertificate {
        target: target.clone(),
        separator: VertexSet::from_mask(s),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnumResult {
    pub value: usize,
    /// A target set whose minimum separator has size `value`, with that separator.
    pub witness: SeparatorCertificate,
}

pub fn snum_exact(g: &Digraph) -> Result<SnumResult> {
    snum_exact_with_limit(g, DEFAULT_SNUM_LIMIT)
}

/// Maximum over all target sets `U` of the minimum weak balanced separator size.
///
/// Targets are visited by decreasing size. A target of size `m` never needs
/// more than `m - 1` vertices, so the search stops once `m - 1` cannot beat
/// the best value so far; for every other target it is enough to ask whether
/// a separator no larger than the current best exists.
pub fn snum_exact_with_limit(g: &Digraph, limit: usize) -> Result<SnumResult> {
    check_capacity("vertex count for snum", g.vertex_count(), limit.min(30))?;
    let b = BitGraph::new(g)?;
    let n = b.n();
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
    for u in 0..(1u64 << n) {
        by_size[u.count_ones() as usize].push(u);
    }
    let mut best = 0usize;
    let mut witness = (0u64, 0u64);
    for m in (1..=n).rev() {
        if m - 1 <= best {
            break;
        }
        for &u in &by_size[m] {
            if smallest_separator(&b, u, best).is_some() {
                continue;
            }
            let s = smallest_separator(&b, u, usize::MAX).expect("the whole target always works");
            best = s.count_ones() as usize;
            witness = (u, s);
        }
    }
    Ok(SnumResult {
        value: best,
        witness: SeparatorCertificate {
            target: VertexSet::from_mask(witness.0),
            separator: VertexSet::from_mask(witness.1),
        },
    })
}
