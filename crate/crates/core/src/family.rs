//! The synthetic benchmark family (a|b)*a(a|b)^k.
//!
//! The k-th member recognizes "the (k+1)-th symbol from the end is `a`". Its
//! canonical NFA has k+2 states while the minimal equivalent DFA needs
//! 2^(k+1): the classic exponential-gap series, which makes it the stress
//! case for speculative recognizers whose start-state count follows the
//! deterministic state count.

use alloc::vec::Vec;

use crate::alphabet::Alphabet;
use crate::ids::StateId;
use crate::nfa::Nfa;

/// Builds the k-th family NFA over {a, b}.
///
/// State 0 loops on both symbols and guesses the marked `a` by also moving
/// to state 1; states 1..=k advance on either symbol; state k+1 is final.
pub fn family_nfa(k: usize) -> Nfa {
    let alphabet = Alphabet::from_bytes(*b"ab");
    let a = alphabet.lookup("a").unwrap();
    let b = alphabet.lookup("b").unwrap();
    let mut edges = Vec::new();
    edges.push((StateId::new(0), a, StateId::new(0)));
    edges.push((StateId::new(0), b, StateId::new(0)));
    edges.push((StateId::new(0), a, StateId::new(1)));
    for i in 1..=k {
        edges.push((StateId::new(i), a, StateId::new(i + 1)));
        edges.push((StateId::new(i), b, StateId::new(i + 1)));
    }
    Nfa::new(alphabet, k + 2, edges, [StateId::new(0)], [StateId::new(k + 1)])
        .expect("family construction yields valid ids")
}
