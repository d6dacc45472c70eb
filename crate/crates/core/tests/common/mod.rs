//! Independent oracles and instance generators shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cyclerank::automata::{trim, Dfa, Nfa, Regex};
use cyclerank::{Digraph, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The digraph on `n` vertices whose edge `(u, v)` is present iff bit
/// `u * n + v` of `code` is set.
pub fn decode(n: usize, code: u64) -> Digraph {
    let edges = (0..n * n)
        .filter(|i| code >> i & 1 == 1)
        .map(|i| (i / n, i % n));
    Digraph::new(n, edges).unwrap()
}

/// Every digraph on `n` vertices, loops included.
pub fn all_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    (0..1u64 << (n * n)).map(move |code| decode(n, code))
}

pub fn random_digraph(rng: &mut impl Rng, n: usize, loops: bool) -> Digraph {
    let p = rng.random_range(0.1..0.6);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if (u != v || loops) && rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Digraph::new(n, edges).unwrap()
}

/// `reach[u][v]`: there is a walk of length at least 0 from `u` to `v`.
pub fn closure(g: &Digraph, within: &[usize]) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let inside: Vec<bool> = (0..n).map(|v| within.contains(&v)).collect();
    let mut reach = vec![vec![false; n]; n];
    for &v in within {
        reach[v][v] = true;
    }
    for (u, v) in g.edges() {
        if inside[u] && inside[v] {
            reach[u][v] = true;
        }
    }
    for &k in within {
        for &i in within {
            if reach[i][k] {
                for &j in within {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    reach
}

/// `G[set]` is strongly connected and has an edge.
pub fn is_nontrivial_sc(g: &Digraph, set: &[usize]) -> bool {
    if set.is_empty() {
        return false;
    }
    let reach = closure(g, set);
    let sc = set.iter().all(|&u| set.iter().all(|&v| reach[u][v]));
    sc && (set.len() > 1 || g.has_edge(set[0], set[0]))
}

/// `G[set]` contains no cycle, loops included.
pub fn is_acyclic_on(g: &Digraph, set: &[usize]) -> bool {
    let mut rest: Vec<usize> = set.to_vec();
    loop {
        let before = rest.len();
        let snapshot = rest.clone();
        rest.retain(|&v| g.in_neighbors(v).iter().any(|u| snapshot.contains(u)));
        if rest.is_empty() {
            return true;
        }
        if rest.len() == before {
            return false;
        }
    }
}

pub fn subset(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Minimum DFVS size by trying all subsets.
pub fn brute_min_dfvs(g: &Digraph) -> usize {
    let n = g.vertex_count();
    (0..1u64 << n)
        .filter(|&s| {
            let rest: Vec<usize> = (0..n).filter(|v| s >> v & 1 == 0).collect();
            is_acyclic_on(g, &rest)
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

/// All inclusion-maximal acyclic subsets, in lexicographic order.
pub fn brute_maximal_acyclic(g: &Digraph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let acyclic: Vec<u64> = (0..1u64 << n)
        .filter(|&s| is_acyclic_on(g, &subset(s)))
        .collect();
    let mut out: Vec<VertexSet> = acyclic
        .iter()
        .filter(|&&a| !acyclic.iter().any(|&b| b != a && b & a == a))
        .map(|&a| VertexSet::from_mask(a))
        .collect();
    out.sort();
    out
}

/// All inclusion-minimal DFVSs, in lexicographic order.
pub fn brute_minimal_dfvs(g: &Digraph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let all = (1u64 << n) - 1;
    let dfvs: Vec<u64> = (0..1u64 << n)
        .filter(|&s| is_acyclic_on(g, &subset(all & !s)))
        .collect();
    let mut out: Vec<VertexSet> = dfvs
        .iter()
        .filter(|&&s| !dfvs.iter().any(|&t| t != s && t & s == t))
        .map(|&s| VertexSet::from_mask(s))
        .collect();
    out.sort();
    out
}

/// Directed pathwidth by trying every vertex order: a layout's width is the
/// largest number of vertices placed at or before position `i` that still
/// have an in-neighbour placed after `i`, plus the vertex at `i`, minus one.
pub fn brute_dpw(g: &Digraph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    permute(&mut order, 0, &mut |p| {
        let mut pos = vec![0; n];
        for (i, &v) in p.iter().enumerate() {
            pos[v] = i;
        }
        let mut width = 0;
        for i in 0..n {
            let open = p[..i]
                .iter()
                .filter(|&&u| g.in_neighbors(u).iter().any(|&w| pos[w] >= i))
                .count();
            width = width.max(open);
        }
        best = best.min(width);
    });
    best
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Weak separator number by exhaustive search over targets and separators.
pub fn brute_snum(g: &Digraph) -> usize {
    let n = g.vertex_count();
    let mut snum = 0;
    for u in 1..1u64 << n {
        let best = (0..1u64 << n)
            .filter(|&s| s & !u == 0)
            .filter(|&s| {
                let rest = subset(u & !s);
                let limit = rest.len().div_ceil(2);
                let reach = closure(g, &rest);
                rest.iter()
                    .all(|&a| rest.iter().filter(|&&b| reach[a][b] && reach[b][a]).count() <= limit)
            })
            .map(|s| s.count_ones() as usize)
            .min()
            .unwrap();
        snum = snum.max(best);
    }
    snum
}

/// Number of nonempty vertex subsets inducing a strongly connected subgraph
/// (singletons included), and how many of those have an edge.
pub fn brute_sc_count(g: &Digraph) -> (u64, u64) {
    let n = g.vertex_count();
    let mut total = 0;
    let mut nontrivial = 0;
    for s in 1..1u64 << n {
        let set = subset(s);
        let reach = closure(g, &set);
        if set.iter().all(|&u| set.iter().all(|&v| reach[u][v])) {
            total += 1;
            if is_nontrivial_sc(g, &set) {
                nontrivial += 1;
            }
        }
    }
    (nontrivial, total)
}

/// Whether the regular expression matches the word, by Brzozowski derivatives.
pub fn regex_matches(r: &Regex, word: &[char]) -> bool {
    let mut r = r.clone();
    for &c in word {
        r = derivative(&r, c);
    }
    nullable(&r)
}

fn nullable(r: &Regex) -> bool {
    match r {
        Regex::EmptySet | Regex::Symbol(_) => false,
        Regex::EmptyWord | Regex::Star(_) => true,
        Regex::Union(a, b) => nullable(a) || nullable(b),
        Regex::Concat(a, b) => nullable(a) && nullable(b),
    }
}

fn derivative(r: &Regex, c: char) -> Regex {
    match r {
        Regex::EmptySet | Regex::EmptyWord => Regex::EmptySet,
        Regex::Symbol(d) => {
            if *d == c {
                Regex::EmptyWord
            } else {
                Regex::EmptySet
            }
        }
        Regex::Union(a, b) => Regex::union(derivative(a, c), derivative(b, c)),
        Regex::Concat(a, b) => {
            let left = Regex::concat(derivative(a, c), (**b).clone());
            if nullable(a) {
                Regex::union(left, derivative(b, c))
            } else {
                left
            }
        }
        Regex::Star(a) => Regex::concat(derivative(a, c), r.clone()),
    }
}

pub const SYMBOLS: [char; 3] = ['a', 'b', 'c'];

/// A random expression of depth at most `depth` over the first `k` symbols.
pub fn random_regex(rng: &mut impl Rng, depth: usize, k: usize) -> Regex {
    let leaf = depth == 0 || rng.random_bool(0.25);
    if leaf {
        return match rng.random_range(0..10) {
            0 => Regex::EmptySet,
            1 => Regex::EmptyWord,
            _ => Regex::Symbol(SYMBOLS[rng.random_range(0..k)]),
        };
    }
    match rng.random_range(0..3) {
        0 => Regex::union(
            random_regex(rng, depth - 1, k),
            random_regex(rng, depth - 1, k),
        ),
        1 => Regex::concat(
            random_regex(rng, depth - 1, k),
            random_regex(rng, depth - 1, k),
        ),
        _ => Regex::star(random_regex(rng, depth - 1, k)),
    }
}

pub fn random_word(rng: &mut impl Rng, k: usize, max_len: usize) -> Vec<char> {
    let len = rng.random_range(0..=max_len);
    (0..len).map(|_| SYMBOLS[rng.random_range(0..k)]).collect()
}

/// A random trim bideterministic automaton with at most `max_states` states
/// over `r` symbols named `a1..ar`: each symbol acts as a random partial
/// injection on the states.
pub fn random_bidet(rng: &mut impl Rng, max_states: usize, r: usize) -> Dfa {
    loop {
        let n = rng.random_range(1..=max_states);
        let mut transitions = Vec::new();
        for a in 0..r {
            let mut targets: Vec<usize> = (0..n).collect();
            targets.shuffle(rng);
            for (p, &q) in targets.iter().enumerate() {
                if rng.random_bool(0.6) {
                    transitions.push((p, Some(a), q));
                }
            }
        }
        let alphabet = (1..=r).map(|i| format!("a{i}")).collect();
        let f = rng.random_range(0..n);
        let a = Dfa::new(Nfa::new(n, alphabet, 0, vec![f], transitions).unwrap()).unwrap();
        let t = trim(&a);
        if !t.empty_language {
            return t.dfa;
        }
    }
}

/// Proptest strategy: a random digraph on `0..=max_n` vertices.
pub fn arb_digraph(
    max_n: usize,
    loops: bool,
) -> impl proptest::strategy::Strategy<Value = Digraph> {
    use proptest::prelude::*;
    (0..=max_n, any::<u64>()).prop_map(move |(n, seed)| random_digraph(&mut rng(seed), n, loops))
}
