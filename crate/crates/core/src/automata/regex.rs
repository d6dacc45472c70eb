use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

use super::nfa::Nfa;

/// A regular expression over single-character symbols.
///
/// Surface syntax: `#` is the empty set, `@` the empty word, `+` union,
/// juxtaposition concatenation and `*` the Kleene star. Star binds tighter
/// than concatenation, which binds tighter than union. Symbols are ASCII
/// letters and digits; whitespace is ignored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Regex {
    EmptySet,
    EmptyWord,
    Symbol(char),
    Union(Box<Regex>, Box<Regex>),
    Concat(Box<Regex>, Box<Regex>),
    Star(Box<Regex>),
}

impl Regex {
    pub fn union(a: Regex, b: Regex) -> Self {
        Regex::Union(Box::new(a), Box::new(b))
    }

    pub fn concat(a: Regex, b: Regex) -> Self {
        Regex::Concat(Box::new(a), Box::new(b))
    }

    pub fn star(a: Regex) -> Self {
        Regex::Star(Box::new(a))
    }

    /// The symbols that occur in the expression.
    pub fn symbols(&self) -> BTreeSet<char> {
        fn walk(r: &Regex, out: &mut BTreeSet<char>) {
            match r {
                Regex::EmptySet | Regex::EmptyWord => {}
                Regex::Symbol(c) => {
                    out.insert(*c);
                }
                Regex::Union(a, b) | Regex::Concat(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
                Regex::Star(a) => walk(a, out),
            }
        }
        let mut out = BTreeSet::new();
        walk(self, &mut out);
        out
    }

    /// Syntactic star height: the nesting depth of stars.
    pub fn star_height(&self) -> usize {
        match self {
            Regex::EmptySet | Regex::EmptyWord | Regex::Symbol(_) => 0,
            Regex::Union(a, b) | Regex::Concat(a, b) => a.star_height().max(b.star_height()),
            Regex::Star(a) => 1 + a.star_height(),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Regex::Union(..) => 0,
            Regex::Concat(..) => 1,
            _ => 2,
        }
    }
}

pub fn sh(r: &Regex) -> usize {
    r.star_height()
}

impl fmt::Display for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn wrap(r: &Regex, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if r.precedence() < min {
                write!(f, "({r})")
            } else {
                write!(f, "{r}")
            }
        }
        match self {
            Regex::EmptySet => f.write_str("#"),
            Regex::EmptyWord => f.write_str("@"),
            Regex::Symbol(c) => write!(f, "{c}"),
            Regex::Union(a, b) => {
                wrap(a, 0, f)?;
                f.write_str("+")?;
                wrap(b, 1, f)
            }
            Regex::Concat(a, b) => {
                wrap(a, 1, f)?;
                wrap(b, 2, f)
            }
            Regex::Star(a) => {
                wrap(a, 2, f)?;
                f.write_str("*")
            }
        }
    }
}

/// Parses `text`. If `alphabet` is given, every symbol must belong to it.
///
/// ```
/// use cyclerank::automata::{parse_regex, sh};
///
/// assert_eq!(sh(&parse_regex("(a*b)*", None).unwrap()), 2);
/// assert!(parse_regex("a+", None).is_err());
/// ```
pub fn parse_regex(text: &str, alphabet: Option<&[char]>) -> Result<Regex> {
    let tokens: Vec<(usize, char)> = text
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut parser = Parser {
        tokens: &tokens,
        pos: 0,
        end: text.chars().count(),
        alphabet,
    };
    let r = parser.union()?;
    if let Some(&(at, c)) = parser.peek() {
        return Err(syntax(at, format!("unexpected `{c}`")));
    }
    Ok(r)
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        pos,
        msg: msg.into(),
    }
}

struct Parser<'a> {
    tokens: &'a [(usize, char)],
    pos: usize,
    end: usize,
    alphabet: Option<&'a [char]>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&(usize, char)> {
        self.tokens.get(self.pos)
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.end, |t| t.0)
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some((_, c)) if *c == '(' || *c == '#' || *c == '@' || c.is_ascii_alphanumeric())
    }

    fn union(&mut self) -> Result<Regex> {
        let mut r = self.concat()?;
        while let Some((_, '+')) = self.peek() {
            self.pos += 1;
            r = Regex::union(r, self.concat()?);
        }
        Ok(r)
    }

    fn concat(&mut self) -> Result<Regex> {
        if !self.starts_atom() {
            return Err(match self.peek() {
                Some(&(at, c)) => syntax(at, format!("expected an expression, found `{c}`")),
                None => syntax(self.end, "expected an expression, found end of input"),
            });
        }
        let mut r = self.starred()?;
        while self.starts_atom() {
            r = Regex::concat(r, self.starred()?);
        }
        Ok(r)
    }

    fn starred(&mut self) -> Result<Regex> {
        let mut r = self.atom()?;
        while let Some((_, '*')) = self.peek() {
            self.pos += 1;
            r = Regex::star(r);
        }
        Ok(r)
    }

    fn atom(&mut self) -> Result<Regex> {
        let &(at, c) = self.peek().expect("checked by starts_atom");
        self.pos += 1;
        match c {
            '#' => Ok(Regex::EmptySet),
            '@' => Ok(Regex::EmptyWord),
            '(' => {
                let r = self.union()?;
                match self.peek() {
                    Some((_, ')')) => {
                        self.pos += 1;
                        Ok(r)
                    }
                    _ => Err(syntax(
                        self.here(),
                        format!("unclosed `(` opened at position {at}"),
                    )),
                }
            }
            c => {
                if let Some(alphabet) = self.alphabet {
                    if !alphabet.contains(&c) {
                        return Err(syntax(at, format!("symbol `{c}` is not in the alphabet")));
                    }
                }
                Ok(Regex::Symbol(c))
            }
        }
    }
}

/// Thompson's construction over the symbols occurring in `r`.
///
/// Every star adds one back edge, from the end of its operand to the start of
/// its operand, so the cycle rank of the underlying digraph is at most the
/// star height of `r`.
pub fn regex_to_nfa(r: &Regex) -> Nfa {
    let alphabet: Vec<char> = r.symbols().into_iter().collect();
    regex_to_nfa_over(r, &alphabet).expect("alphabet covers the expression")
}

/// [`regex_to_nfa`] with an explicit alphabet, which must contain every
/// symbol of `r`.
pub fn regex_to_nfa_over(r: &Regex, alphabet: &[char]) -> Result<Nfa> {
    if let Some(c) = r.symbols().into_iter().find(|c| !alphabet.contains(c)) {
        return Err(Error::input(format!("symbol `{c}` is not in the alphabet")));
    }
    let mut t = Thompson {
        alphabet,
        states: 0,
        transitions: Vec::new(),
    };
    let (start, end) = t.build(r);
    Nfa::new(
        t.states,
        alphabet.iter().map(char::to_string).collect(),
        start,
        vec![end],
        t.transitions,
    )
}

struct Thompson<'a> {
    alphabet: &'a [char],
    states: usize,
    transitions: Vec<(usize, Option<usize>, usize)>,
}

impl Thompson<'_> {
    fn state(&mut self) -> usize {
        self.states += 1;
        self.states - 1
    }

    fn build(&mut self, r: &Regex) -> (usize, usize) {
        match r {
            Regex::EmptySet => (self.state(), self.state()),
            Regex::EmptyWord => {
                let (s, e) = (self.state(), self.state());
                self.transitions.push((s, None, e));
                (s, e)
            }
            Regex::Symbol(c) => {
                let (s, e) = (self.state(), self.state());
                let i = self
                    .alphabet
                    .iter()
                    .position(|a| a == c)
                    .expect("symbol in alphabet");
                self.transitions.push((s, Some(i), e));
                (s, e)
            }
            Regex::Union(a, b) => {
                let s = self.state();
                let (s1, e1) = self.build(a);
                let (s2, e2) = self.build(b);
                let e = self.state();
                self.transitions.extend([
                    (s, None, s1),
                    (s, None, s2),
                    (e1, None, e),
                    (e2, None, e),
                ]);
                (s, e)
            }
            Regex::Concat(a, b) => {
                let (s1, e1) = self.build(a);
                let (s2, e2) = self.build(b);
                self.transitions.push((e1, None, s2));
                (s1, e2)
            }
            Regex::Star(a) => {
                let s = self.state();
                let (s1, e1) = self.build(a);
                let e = self.state();
                self.transitions.extend([
                    (s, None, s1),
                    (s, None, e),
                    (e1, None, s1),
                    (e1, None, e),
                ]);
                (s, e)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Regex {
        parse_regex(s, None).unwrap()
    }

    #[test]
    fn star_heights() {
        assert_eq!(sh(&p("a+b")), 0);
        assert_eq!(sh(&p("ab*")), 1);
        assert_eq!(sh(&p("(a*b)*")), 2);
        assert_eq!(sh(&p("#+@")), 0);
    }

    #[test]
    fn precedence() {
        assert_eq!(
            p("a+bc*"),
            Regex::union(
                Regex::Symbol('a'),
                Regex::concat(Regex::Symbol('b'), Regex::star(Regex::Symbol('c')))
            )
        );
        assert_eq!(
            p("ab**"),
            Regex::concat(
                Regex::Symbol('a'),
                Regex::star(Regex::star(Regex::Symbol('b')))
            )
        );
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "a+bc*", "(a+b)*c", "(ab)*", "a(b+c)", "#+@", "(a+b)+c", "a+(b+c)", "a**", "(a*b)*",
        ] {
            let r = p(s);
            assert_eq!(p(&r.to_string()), r, "{s} printed as {r}");
        }
        assert_eq!(p("( a + b ) * c").to_string(), "(a+b)*c");
    }

    #[test]
    fn syntax_errors_have_positions() {
        for (text, pos) in [
            ("a+", 2),
            ("(ab", 3),
            ("a)", 1),
            ("*a", 0),
            ("", 0),
            ("a$", 1),
        ] {
            match parse_regex(text, None) {
                Err(Error::Syntax { pos: got, .. }) => assert_eq!(got, pos, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
        assert!(parse_regex("abc", Some(&['a', 'b'])).is_err());
    }

    #[test]
    fn thompson_sizes() {
        let a = regex_to_nfa(&p("a"));
        assert_eq!(a.state_count(), 2);
        assert!(a.accepts(&[0]));
        assert!(!a.accepts(&[]));
        let star = regex_to_nfa(&p("a*"));
        assert!(star.accepts(&[0, 0, 0]));
        assert!(star.accepts(&[]));
        assert!(regex_to_nfa_over(&p("a"), &['b']).is_err());
    }
}
