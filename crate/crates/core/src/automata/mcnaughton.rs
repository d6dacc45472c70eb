use crate::cyclerank::crank_exact;
use crate::digraph::Digraph;
use crate::elimination::EliminationForest;
use crate::error::{Error, Result};
use crate::scc::is_strongly_connected;

use super::nfa::{trim, underlying_digraph, Dfa, Nfa};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarHeight {
    pub value: usize,
    /// An elimination forest of the trimmed automaton's digraph, of height `value`.
    pub witness: EliminationForest,
    pub trimmed: Dfa,
}

/// The star height of the language of a bideterministic automaton: the cycle
/// rank of its trimmed transition digraph.
///
/// The empty language has star height 0.
///
/// ```
/// use cyclerank::automata::{star_height_bidet, walk_language_automaton};
/// use cyclerank::Digraph;
///
/// let a = walk_language_automaton(&Digraph::complete(3), 0).unwrap();
/// assert_eq!(star_height_bidet(&a).unwrap().value, 2);
/// ```
pub fn star_height_bidet(a: &Dfa) -> Result<StarHeight> {
    let trimmed = trim(a);
    if !trimmed.empty_language && !trimmed.dfa.is_bideterministic() {
        return Err(Error::domain(
            "the trimmed automaton is not bideterministic, so its cycle rank need not be the star height",
        ));
    }
    let exact = crank_exact(&underlying_digraph(&trimmed.dfa))?;
    Ok(StarHeight {
        value: exact.value,
        witness: exact.witness,
        trimmed: trimmed.dfa,
    })
}

/// The symbol naming edge `(u, v)` in a walk language.
pub fn edge_symbol(u: usize, v: usize) -> String {
    format!("({u},{v})")
}

/// The automaton whose words are the closed walks through `v`, spelled as
/// sequences of edges: states are the vertices, and edge `(x, y)` is a
/// transition from `x` to `y` labelled `(x,y)`. Initial and final state are
/// both `v`.
pub fn walk_language_automaton(g: &Digraph, v: usize) -> Result<Dfa> {
    if v >= g.vertex_count() {
        return Err(Error::input(format!("vertex {v} out of range")));
    }
    if !is_strongly_connected(g) {
        return Err(Error::domain(
            "walk languages are built for strongly connected digraphs",
        ));
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let alphabet = edges.iter().map(|&(x, y)| edge_symbol(x, y)).collect();
    let transitions = edges
        .iter()
        .enumerate()
        .map(|(i, &(x, y))| (x, Some(i), y))
        .collect();
    Dfa::new(Nfa::new(
        g.vertex_count(),
        alphabet,
        v,
        vec![v],
        transitions,
    )?)
}

/// `rho(a_i) = a^i b^(r+1-i)` for symbols numbered from 1, applied to a word
/// of 0-based symbol indices. The result uses 0 for `a` and 1 for `b`.
pub fn rho(word: &[usize], r: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for &s in word {
        let i = s + 1;
        out.extend(std::iter::repeat_n(0, i));
        out.extend(std::iter::repeat_n(1, r + 1 - i));
    }
    out
}

/// Re-encodes a bideterministic automaton over `a_1..a_r` into one over
/// `{a, b}` accepting the image of its language under [`rho`].
///
/// Every state `q` gets companions `q+_1..q+_r` and `q-_1..q-_r`, and a
/// transition `p --a_i--> q` becomes the path
/// `p -a-> p+_1 -a-> .. -a-> p+_i -b-> q-_(r-i) -b-> .. -b-> q-_1 -b-> q`
/// (for `i = r`, straight from `p+_r` to `q`). The result has `(2r+1)|Q|`
/// states, numbered `q`, then `n + 2rq + j - 1` for `q+_j` and
/// `n + 2rq + r + j - 1` for `q-_j`.
pub fn binarize(a: &Dfa) -> Result<Dfa> {
    if !a.is_bideterministic() {
        return Err(Error::domain("binarize needs a bideterministic automaton"));
    }
    let n = a.state_count();
    let r = a.alphabet().len();
    let plus = |q: usize, j: usize| n + 2 * r * q + j - 1;
    let minus = |q: usize, j: usize| n + 2 * r * q + r + j - 1;
    let (sym_a, sym_b) = (Some(0), Some(1));
    let mut transitions = Vec::new();
    for &(p, label, q) in a.transitions() {
        let i = label.expect("deterministic") + 1;
        transitions.push((p, sym_a, plus(p, 1)));
        for j in 1..i {
            transitions.push((plus(p, j), sym_a, plus(p, j + 1)));
        }
        if i == r {
            transitions.push((plus(p, r), sym_b, q));
        } else {
            transitions.push((plus(p, i), sym_b, minus(q, r - i)));
            for j in (2..=r - i).rev() {
                transitions.push((minus(q, j), sym_b, minus(q, j - 1)));
            }
            transitions.push((minus(q, 1), sym_b, q));
        }
    }
    let initial = a
        .initial()
        .ok_or_else(|| Error::domain("the automaton has no states"))?;
    let nfa = Nfa::new(
        (2 * r + 1) * n,
        vec!["a".to_string(), "b".to_string()],
        initial,
        a.finals().to_vec(),
        transitions,
    )?;
    Dfa::new(nfa)
}
