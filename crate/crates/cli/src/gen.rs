//! Seeded text generation for benchmarks.
//!
//! Both modes draw from a ChaCha stream cipher keyed by the user seed, so a
//! given (mode, length, seed, machine) quadruple always produces the same
//! symbols, on every platform.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

use ridfa_core::{Dfa, StateId, SymbolId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("cannot generate symbols over an empty alphabet")]
    EmptyAlphabet,
    #[error("language walk is stuck: the machine has no transition out of its initial state")]
    EmptyLanguageWalk,
}

/// Independent uniformly random symbols.
pub fn gen_uniform(alphabet_len: usize, len: usize, seed: u64) -> Result<Vec<SymbolId>, GenError> {
    if len > 0 && alphabet_len == 0 {
        return Err(GenError::EmptyAlphabet);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..len).map(|_| SymbolId::new((rng.next_u64() % alphabet_len as u64) as usize)).collect())
}

/// Random walk over a DFA from its initial state, emitting the symbol of
/// each move: the output is a prefix of a valid string as long as the walk
/// never gets stuck. A stuck walk (a state with no outgoing transitions,
/// which a minimal machine only has at word ends) restarts from the initial
/// state and keeps appending; getting stuck at the initial state itself is
/// an error (the language admits no symbol at all).
pub fn gen_walk(dfa: &Dfa, len: usize, seed: u64) -> Result<Vec<SymbolId>, GenError> {
    let options: Vec<Vec<(SymbolId, StateId)>> = dfa
        .states()
        .map(|q| dfa.alphabet().ids().filter_map(|y| dfa.next(q, y).map(|t| (y, t))).collect())
        .collect();
    if len > 0 && options[dfa.initial().index()].is_empty() {
        return Err(GenError::EmptyLanguageWalk);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(len);
    let mut state = dfa.initial();
    while out.len() < len {
        let choices = &options[state.index()];
        if choices.is_empty() {
            state = dfa.initial();
            continue;
        }
        let (sym, target) = choices[(rng.next_u64() % choices.len() as u64) as usize];
        out.push(sym);
        state = target;
    }
    Ok(out)
}
