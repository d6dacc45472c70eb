//! Adjacency bitmasks for digraphs with at most 64 vertices.
//!
//! All the exact algorithms work on vertex subsets encoded as `u64`; this is the
//! graph view they share.

use crate::digraph::Digraph;
use crate::error::{check_capacity, Result};
use crate::vertex_set::mask::{bit, bits, full};

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Debug)]
pub struct BitGraph {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
    loops: u64,
}

impl BitGraph {
    pub fn new(g: &Digraph) -> Result<Self> {
        check_capacity("vertex count", g.vertex_count(), MAX_VERTICES)?;
        let n = g.vertex_count();
        let mut out = vec![0u64; n];
        let mut inn = vec![0u64; n];
        let mut loops = 0;
        for (u, v) in g.edges() {
            out[u] |= bit(v);
            inn[v] |= bit(u);
            if u == v {
                loops |= bit(u);
            }
        }
        Ok(Self { n, out, inn, loops })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn all(&self) -> u64 {
        full(self.n)
    }

    pub fn out(&self, v: usize) -> u64 {
        self.out[v]
    }

    pub fn inn(&self, v: usize) -> u64 {
        self.inn[v]
    }

    pub fn loops(&self) -> u64 {
        self.loops
    }

    fn reach(adj: &[u64], start: usize, within: u64) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn forward_reach(&self, start: usize, within: u64) -> u64 {
        Self::reach(&self.out, start, within)
    }

    pub fn backward_reach(&self, start: usize, within: u64) -> u64 {
        Self::reach(&self.inn, start, within)
    }

    /// The component of `G[within]` containing `v` (`v` must be in `within`).
    pub fn component_of(&self, v: usize, within: u64) -> u64 {
        let fwd = self.forward_reach(v, within);
        fwd & self.backward_reach(v, fwd)
    }

    /// Components of `G[within]`, ordered by their smallest vertex.
    pub fn sccs(&self, within: u64) -> Vec<u64> {
        let mut rest = within;
        let mut comps = Vec::new();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let c = self.component_of(v, rest);
            comps.push(c);
            rest &= !c;
        }
        comps
    }

    /// Whether `set` induces at least one edge, given that it is strongly connected.
    pub fn is_nontrivial_component(&self, set: u64) -> bool {
        set.count_ones() > 1 || set & self.loops != 0
    }

    pub fn nontrivial_sccs(&self, within: u64) -> Vec<u64> {
        let mut comps = self.sccs(within);
        comps.retain(|&c| self.is_nontrivial_component(c));
        comps
    }

    /// Source peeling; loops count as cycles.
    pub fn is_acyclic(&self, within: u64) -> bool {
        if within & self.loops != 0 {
            return false;
        }
        let mut rest = within;
        loop {
            let mut sources = 0;
            for v in bits(rest) {
                if self.inn[v] & rest == 0 {
                    sources |= bit(v);
                }
            }
            if sources == 0 {
                return rest == 0;
            }
            rest &= !sources;
        }
    }

    /// `set` is nonempty and `G[set]` is strongly connected.
    pub fn is_strongly_connected(&self, set: u64) -> bool {
        if set == 0 {
            return false;
        }
        let v = set.trailing_zeros() as usize;
        self.forward_reach(v, set) == set && self.backward_reach(v, set) == set
    }

    /// Components of `G[within]` in the canonical topological order used by
    /// [`crate::scc::scc`].
    pub fn sccs_topological(&self, within: u64) -> Vec<u64> {
        let comps = self.sccs(within);
        let k = comps.len();
        let mut placed = vec![false; k];
        let mut order = Vec::with_capacity(k);
        let mut remaining = within;
        while order.len() < k {
            // First unplaced component (by smallest vertex) with no incoming edge
            // from unplaced components.
            let i = (0..k)
                .find(|&i| {
                    !placed[i] && {
                        let others = remaining & !comps[i];
                        bits(comps[i]).all(|v| self.inn[v] & others == 0)
                    }
                })
                .expect("condensation is acyclic");
            placed[i] = true;
            remaining &= !comps[i];
            order.push(comps[i]);
        }
        order
    }
}
