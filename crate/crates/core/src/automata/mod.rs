//! Regular expressions, finite automata, and star height.

mod mcnaughton;
mod nfa;
mod regex;

pub use mcnaughton::{
    binarize, edge_symbol, rho, star_height_bidet, walk_language_automaton, StarHeight,
};
pub use nfa::{
    nfa_accepts, parse_dfa, parse_nfa, trim, underlying_digraph, Dfa, Nfa, Transition, Trimmed,
};
pub use regex::{parse_regex, regex_to_nfa, regex_to_nfa_over, sh, Regex};
