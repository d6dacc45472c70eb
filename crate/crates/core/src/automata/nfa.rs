use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Deref;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// A transition `(from, label, to)`; label `None` is an ε-transition and
/// `Some(i)` reads the `i`-th alphabet symbol.
pub type Transition = (usize, Option<usize>, usize);

/// A nondeterministic finite automaton with a single initial state.
///
/// The automaton with zero states accepts nothing and has no initial state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    states: usize,
    alphabet: Vec<String>,
    initial: Option<usize>,
    finals: Vec<usize>,
    transitions: Vec<Transition>,
}

impl Nfa {
    /// Builds an automaton. Finals and transitions are sorted and deduplicated.
    pub fn new(
        states: usize,
        alphabet: Vec<String>,
        initial: usize,
        finals: Vec<usize>,
        transitions: Vec<Transition>,
    ) -> Result<Self> {
        if initial >= states {
            return Err(Error::input(format!(
                "initial state {initial} out of range"
            )));
        }
        Self::build(states, alphabet, Some(initial), finals, transitions)
    }

    /// The automaton with no states.
    pub fn empty(alphabet: Vec<String>) -> Self {
        Self {
            states: 0,
            alphabet,
            initial: None,
            finals: Vec::new(),
            transitions: Vec::new(),
        }
    }

    fn build(
        states: usize,
        alphabet: Vec<String>,
        initial: Option<usize>,
        mut finals: Vec<usize>,
        mut transitions: Vec<Transition>,
    ) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for a in &alphabet {
            if a.is_empty() || a.chars().any(char::is_whitespace) || a == "eps" {
                return Err(Error::input(format!("invalid symbol `{a}`")));
            }
            if !seen.insert(a) {
                return Err(Error::input(format!("symbol `{a}` declared twice")));
            }
        }
        if let Some(&q) = finals.iter().find(|&&q| q >= states) {
            return Err(Error::input(format!("final state {q} out of range")));
        }
        for &(p, a, q) in &transitions {
            if p >= states || q >= states {
                return Err(Error::input(format!("transition {p} -> {q} out of range")));
            }
            if a.is_some_and(|a| a >= alphabet.len()) {
                return Err(Error::input(format!(
                    "transition {p} -> {q} uses an undeclared symbol"
                )));
            }
        }
        finals.sort_unstable();
        finals.dedup();
        transitions.sort_unstable();
        transitions.dedup();
        Ok(Self {
            states,
            alphabet,
            initial,
            finals,
            transitions,
        })
    }

    pub fn state_count(&self) -> usize {
        self.states
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn initial(&self) -> Option<usize> {
        self.initial
    }

    pub fn finals(&self) -> &[usize] {
        &self.finals
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn symbol_index(&self, symbol: &str) -> Option<usize> {
        self.alphabet.iter().position(|a| a == symbol)
    }

    pub fn has_epsilon(&self) -> bool {
        self.transitions.iter().any(|t| t.1.is_none())
    }

    fn epsilon_closure(&self, set: &mut BTreeSet<usize>) {
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(p) = stack.pop() {
            for &(_, _, q) in self.transitions_from(p).iter().filter(|t| t.1.is_none()) {
                if set.insert(q) {
                    stack.push(q);
                }
            }
        }
    }

    fn transitions_from(&self, p: usize) -> &[Transition] {
        let lo = self.transitions.partition_point(|t| t.0 < p);
        let hi = self.transitions.partition_point(|t| t.0 <= p);
        &self.transitions[lo..hi]
    }

    /// Whether the word, given as symbol indices, is accepted. Indices out of
    /// range are never read and reject the word.
    pub fn accepts(&self, word: &[usize]) -> bool {
        let Some(initial) = self.initial else {
            return false;
        };
        let mut current = BTreeSet::from([initial]);
        self.epsilon_closure(&mut current);
        for &a in word {
            let mut next = BTreeSet::new();
            for &p in &current {
                for &(_, b, q) in self.transitions_from(p) {
                    if b == Some(a) {
                        next.insert(q);
                    }
                }
            }
            self.epsilon_closure(&mut next);
            current = next;
            if current.is_empty() {
                return false;
            }
        }
        current.iter().any(|q| self.finals.binary_search(q).is_ok())
    }

    /// No ε-transitions and at most one transition per state and symbol.
    pub fn is_deterministic(&self) -> bool {
        !self.has_epsilon()
            && self
                .transitions
                .windows(2)
                .all(|w| (w[0].0, w[0].1) != (w[1].0, w[1].1))
    }

    /// Transitions reversed, initial and final roles exchanged. Defined only
    /// for automata with exactly one final state.
    pub fn reverse(&self) -> Option<Nfa> {
        let ([f], Some(initial)) = (self.finals.as_slice(), self.initial) else {
            return None;
        };
        let transitions = self
            .transitions
            .iter()
            .map(|&(p, a, q)| (q, a, p))
            .collect();
        Nfa::build(
            self.states,
            self.alphabet.clone(),
            Some(*f),
            vec![initial],
            transitions,
        )
        .ok()
    }

    /// Deterministic, exactly one final state, and the reverse is deterministic.
    pub fn is_bideterministic(&self) -> bool {
        self.is_deterministic() && self.reverse().is_some_and(|r| r.is_deterministic())
    }
}

/// Checks that every symbol of `word` belongs to the alphabet, then runs the
/// subset simulation.
///
/// ```
/// use cyclerank::automata::{nfa_accepts, parse_regex, regex_to_nfa};
///
/// let a = regex_to_nfa(&parse_regex("a*", None).unwrap());
/// assert!(nfa_accepts(&a, &["a", "a", "a"]).unwrap());
/// assert!(nfa_accepts(&a, &["b"]).is_err());
/// ```
pub fn nfa_accepts<S: AsRef<str>>(a: &Nfa, word: &[S]) -> Result<bool> {
    let indices = word
        .iter()
        .map(|s| {
            a.symbol_index(s.as_ref()).ok_or_else(|| {
                Error::input(format!("symbol `{}` is not in the alphabet", s.as_ref()))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(a.accepts(&indices))
}

/// States as vertices, an edge `(p, q)` whenever some transition leads from
/// `p` to `q`.
pub fn underlying_digraph(a: &Nfa) -> Digraph {
    Digraph::new(a.states, a.transitions.iter().map(|&(p, _, q)| (p, q)))
        .expect("transitions are in range")
}

/// A deterministic automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa(Nfa);

impl Dfa {
    pub fn new(nfa: Nfa) -> Result<Self> {
        if nfa.has_epsilon() {
            return Err(Error::input("a DFA has no ε-transitions"));
        }
        if !nfa.is_deterministic() {
            return Err(Error::input(
                "two transitions leave one state on the same symbol",
            ));
        }
        Ok(Dfa(nfa))
    }

    pub fn into_nfa(self) -> Nfa {
        self.0
    }
}

impl Deref for Dfa {
    type Target = Nfa;

    fn deref(&self) -> &Nfa {
        &self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trimmed {
    pub dfa: Dfa,
    /// The language is empty; `dfa` then has no states.
    pub empty_language: bool,
}

/// Restricts `a` to the states that are reachable from the initial state and
/// can reach a final state. Surviving states keep their relative order.
pub fn trim(a: &Dfa) -> Trimmed {
    let n = a.states;
    let g = underlying_digraph(a);
    let search = |starts: Vec<usize>, forward: bool| {
        let mut seen = vec![false; n];
        let mut stack = starts;
        for &s in &stack {
            seen[s] = true;
        }
        while let Some(p) = stack.pop() {
            let next = if forward {
                g.out_neighbors(p)
            } else {
                g.in_neighbors(p)
            };
            for &q in next {
                if !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
        seen
    };
    let reachable = search(a.initial.into_iter().collect(), true);
    let coreachable = search(a.finals.clone(), false);
    let keep: Vec<bool> = (0..n).map(|q| reachable[q] && coreachable[q]).collect();
    let initial = match a.initial {
        Some(i) if keep[i] => i,
        _ => {
            return Trimmed {
                dfa: Dfa(Nfa::empty(a.alphabet.clone())),
                empty_language: true,
            }
        }
    };
    let mut renumber = vec![usize::MAX; n];
    let mut next = 0;
    for q in 0..n {
        if keep[q] {
            renumber[q] = next;
            next += 1;
        }
    }
    let finals = a
        .finals
        .iter()
        .filter(|&&q| keep[q])
        .map(|&q| renumber[q])
        .collect();
    let transitions = a
        .transitions
        .iter()
        .filter(|&&(p, _, q)| keep[p] && keep[q])
        .map(|&(p, s, q)| (renumber[p], s, renumber[q]))
        .collect();
    let nfa = Nfa::new(
        next,
        a.alphabet.clone(),
        renumber[initial],
        finals,
        transitions,
    )
    .expect("renumbered in range");
    Trimmed {
        dfa: Dfa(nfa),
        empty_language: false,
    }
}

/// Text form:
///
/// ```text
/// states 3
/// alphabet a b
/// initial 0
/// finals 2
/// transitions
/// 0 a 1
/// 1 b 2
/// ```
///
/// `eps` labels an ε-transition. The automaton with no states writes
/// `initial -`. Blank lines and `#` comments are ignored.
impl fmt::Display for Nfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "states {}", self.states)?;
        let mut line = String::from("alphabet");
        for a in &self.alphabet {
            line.push(' ');
            line.push_str(a);
        }
        writeln!(f, "{line}")?;
        match self.initial {
            Some(i) => writeln!(f, "initial {i}")?,
            None => writeln!(f, "initial -")?,
        }
        let mut line = String::from("finals");
        for q in &self.finals {
            line.push_str(&format!(" {q}"));
        }
        writeln!(f, "{line}")?;
        writeln!(f, "transitions")?;
        for &(p, a, q) in &self.transitions {
            let label = a.map_or("eps", |a| &self.alphabet[a]);
            writeln!(f, "{p} {label} {q}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Dfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn parse_nfa(text: &str) -> Result<Nfa> {
    parse(text, true)
}

/// Like [`parse_nfa`], but `eps` transitions and nondeterminism are errors.
pub fn parse_dfa(text: &str) -> Result<Dfa> {
    let nfa = parse(text, false)?;
    Dfa::new(nfa)
}

fn parse(text: &str, allow_eps: bool) -> Result<Nfa> {
    let mut header: BTreeMap<&str, (usize, Vec<&str>)> = BTreeMap::new();
    let mut transitions = Vec::new();
    let mut in_transitions = false;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if in_transitions {
            let [p, a, q] = fields.as_slice() else {
                return Err(Error::parse(line_no, "expected `state symbol state`"));
            };
            transitions.push((line_no, *p, *a, *q));
            continue;
        }
        match fields[0] {
            "transitions" if fields.len() == 1 => in_transitions = true,
            key @ ("states" | "alphabet" | "initial" | "finals") => {
                if header
                    .insert(key, (line_no, fields[1..].to_vec()))
                    .is_some()
                {
                    return Err(Error::parse(line_no, format!("`{key}` given twice")));
                }
            }
            other => return Err(Error::parse(line_no, format!("unknown field `{other}`"))),
        }
    }
    let field = |key: &str| {
        header
            .get(key)
            .cloned()
            .ok_or_else(|| Error::parse(text.lines().count().max(1), format!("missing `{key}`")))
    };
    let number = |line: usize, s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::parse(line, format!("`{s}` is not a state index")))
    };
    let (line, states) = field("states")?;
    let [count] = states.as_slice() else {
        return Err(Error::parse(line, "expected `states <count>`"));
    };
    let states = number(line, count)?;
    let (_, alphabet) = field("alphabet")?;
    let alphabet: Vec<String> = alphabet.iter().map(|s| s.to_string()).collect();
    let (line, initial) = field("initial")?;
    let initial = match initial.as_slice() {
        ["-"] if states == 0 => None,
        [q] => {
            let q = number(line, q)?;
            if q >= states {
                return Err(Error::parse(
                    line,
                    format!("initial state {q} out of range"),
                ));
            }
            Some(q)
        }
        _ => return Err(Error::parse(line, "expected `initial <state>`")),
    };
    let (line, finals) = field("finals")?;
    let finals = finals
        .iter()
        .map(|q| {
            let q = number(line, q)?;
            if q >= states {
                return Err(Error::parse(line, format!("final state {q} out of range")));
            }
            Ok(q)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut parsed = Vec::with_capacity(transitions.len());
    for (line, p, a, q) in transitions {
        let (p, q) = (number(line, p)?, number(line, q)?);
        if p >= states || q >= states {
            return Err(Error::parse(
                line,
                format!("transition {p} -> {q} out of range"),
            ));
        }
        let label = if a == "eps" {
            if !allow_eps {
                return Err(Error::parse(line, "ε-transitions are not allowed in a DFA"));
            }
            None
        } else {
            let i = alphabet.iter().position(|s| s == a).ok_or_else(|| {
                Error::parse(line, format!("symbol `{a}` is not in the alphabet"))
            })?;
            Some(i)
        };
        parsed.push((p, label, q));
    }
    Nfa::build(states, alphabet, initial, finals, parsed)
}
