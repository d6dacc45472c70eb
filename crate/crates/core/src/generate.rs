//! Random digraphs for tests and benchmarks.

use rand::seq::{index, SliceRandom};
use rand::Rng;

use crate::digraph::Digraph;

/// Each ordered pair `(u, v)` becomes an edge with probability `p`. Loops are
/// drawn only if `loops` is set.
pub fn gnp<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64, loops: bool) -> Digraph {
    let mut g = Digraph::empty(n);
    for u in 0..n {
        for v in 0..n {
            if (u != v || loops) && rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Every vertex gets between 0 and `d` distinct out-neighbours other than
/// itself, uniformly.
pub fn bounded_outdegree<R: Rng + ?Sized>(rng: &mut R, n: usize, d: usize) -> Digraph {
    let mut g = Digraph::empty(n);
    for u in 0..n {
        let k = rng.random_range(0..=d.min(n.saturating_sub(1)));
        for i in index::sample(rng, n - 1, k) {
            g.add_edge(u, if i >= u { i + 1 } else { i });
        }
    }
    g
}

/// A loop-free strongly connected digraph with outdegree at most `d >= 1`:
/// a Hamiltonian cycle through a random permutation, plus up to `d - 1`
/// further random out-neighbours per vertex.
pub fn strongly_connected<R: Rng + ?Sized>(rng: &mut R, n: usize, d: usize) -> Digraph {
    hamiltonian_plus(rng, n, d, |rng, most| rng.random_range(0..=most))
}

/// Like [`strongly_connected`], but every vertex gets exactly
/// `min(d, n - 1)` out-neighbours.
pub fn strongly_connected_regular<R: Rng + ?Sized>(rng: &mut R, n: usize, d: usize) -> Digraph {
    hamiltonian_plus(rng, n, d, |_, most| most)
}

fn hamiltonian_plus<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    d: usize,
    extras: impl Fn(&mut R, usize) -> usize,
) -> Digraph {
    assert!(
        d >= 1,
        "a strongly connected digraph needs outdegree at least 1"
    );
    let mut g = Digraph::empty(n);
    if n < 2 {
        return g;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 0..n {
        g.add_edge(order[i], order[(i + 1) % n]);
    }
    for u in 0..n {
        let extra = extras(rng, d.min(n - 1) - 1);
        let mut added = 0;
        for i in index::sample(rng, n - 1, n - 1) {
            if added == extra {
                break;
            }
            let v = if i >= u { i + 1 } else { i };
            if g.add_edge(u, v) {
                added += 1;
            }
        }
    }
    g
}
