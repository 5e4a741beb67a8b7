//! Hand-built reference machines with thoroughly understood behaviour.
//!
//! All expected values asserted against these machines in the test suites
//! were worked out on paper from the transition tables below.

use ridfa_core::{Alphabet, AutomatonError, Dfa, Nfa, StateId, SymbolId};

fn s(i: usize) -> StateId {
    StateId::new(i)
}

fn edges(
    alpha: &Alphabet,
    list: &[(usize, &str, usize)],
) -> Vec<(StateId, SymbolId, StateId)> {
    list.iter()
        .map(|&(from, sym, to)| (s(from), alpha.lookup(sym).expect("symbol in alphabet"), s(to)))
        .collect()
}

/// Three-state cyclic NFA over {a, b, c}.
///
/// State 1 loops on `a`, swings to 2 on `b` and back, and falls back to 0 on
/// every symbol. Initial {0}, final {2}. Its powerset machine from {0} has
/// the four states {0}, {1}, {0,1}, {0,2} and is already minimal.
pub fn cyclic3_nfa() -> Nfa {
    let alpha = Alphabet::from_bytes(*b"abc");
    let e = edges(
        &alpha,
        &[
            (0, "a", 1),
            (0, "c", 1),
            (1, "a", 1),
            (1, "b", 2),
            (2, "b", 1),
            (1, "a", 0),
            (1, "b", 0),
            (1, "c", 0),
        ],
    );
    Nfa::new(alpha, 3, e, [s(0)], [s(2)]).unwrap()
}

/// The minimal DFA equivalent to [`cyclic3_nfa`], hand-built with the state
/// numbering a breadth-first subset construction from {0} produces:
/// 0 = {0}, 1 = {1}, 2 = {0,1}, 3 = {0,2}.
pub fn cyclic3_min_dfa() -> Result<Dfa, AutomatonError> {
    let alpha = Alphabet::from_bytes(*b"abc");
    let e = edges(
        &alpha,
        &[
            (0, "a", 1),
            (0, "c", 1),
            (1, "a", 2),
            (1, "b", 3),
            (1, "c", 0),
            (2, "a", 2),
            (2, "b", 3),
            (2, "c", 2),
            (3, "a", 1),
            (3, "b", 1),
            (3, "c", 1),
        ],
    );
    Dfa::new(alpha, 4, e, s(0), [s(3)], None)
}

/// Two-state DFA over {a, b} for b*a(ab*a | b+a)*: `a` toggles between the
/// states, `b` always lands in state 0. Initial 0, final 1. Both states are
/// total, which makes it a handy source for language-walk generation.
pub fn toggle2_dfa() -> Dfa {
    let alpha = Alphabet::from_bytes(*b"ab");
    let e = edges(&alpha, &[(0, "a", 1), (0, "b", 0), (1, "a", 0), (1, "b", 0)]);
    Dfa::new(alpha, 2, e, s(0), [s(1)], None).unwrap()
}

/// [`toggle2_dfa`] viewed as an NFA.
pub fn toggle2_nfa() -> Nfa {
    let alpha = Alphabet::from_bytes(*b"ab");
    let e = edges(&alpha, &[(0, "a", 1), (0, "b", 0), (1, "a", 0), (1, "b", 0)]);
    Nfa::new(alpha, 2, e, [s(0)], [s(1)]).unwrap()
}

/// Four-state NFA over {a, b, c} whose states 1 and 3 accept the same
/// suffix language without being identical in behaviour structurally.
///
/// Its RI-DFA has eight states and an interface of four singletons, two of
/// which ({1} and {3}) are Nerode-equivalent: the canonical instance for
/// interface reduction and delegation.
pub fn twin4_nfa() -> Nfa {
    let alpha = Alphabet::from_bytes(*b"abc");
    let e = edges(
        &alpha,
        &[
            (0, "a", 1),
            (0, "c", 3),
            (1, "a", 0),
            (1, "a", 3),
            (1, "b", 0),
            (1, "b", 2),
            (1, "c", 0),
            (2, "b", 1),
            (3, "a", 0),
            (3, "a", 1),
            (3, "b", 0),
            (3, "b", 2),
            (3, "c", 0),
        ],
    );
    Nfa::new(alpha, 4, e, [s(0)], [s(2)]).unwrap()
}

/// Maps a byte string through a machine's alphabet; panics on foreign bytes.
pub fn text(alpha: &Alphabet, t: &str) -> Vec<SymbolId> {
    t.bytes().map(|b| alpha.lookup_byte(b).expect("byte in alphabet")).collect()
}
