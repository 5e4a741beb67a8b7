//! Nondeterministic finite automata.
//!
//! Machines are ε-free by construction: the transition relation only holds
//! symbol-consuming moves, so run lengths and transition counts line up with
//! the instrumentation semantics of the recognizer. Multiple initial states
//! are allowed (externally loaded machines may have them); the single-initial
//! case is the common one.

use alloc::vec::Vec;

use crate::alphabet::Alphabet;
use crate::error::AutomatonError;
use crate::ids::{StateId, SymbolId};
use crate::sets;

/// An ε-free NFA. Immutable once built; shared read-only by chunk workers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    state_count: usize,
    /// Successor sets, dense-indexed by `state * |Σ| + symbol`; each set is a
    /// sorted, deduplicated id list.
    transitions: Vec<Vec<StateId>>,
    initials: Vec<StateId>,
    finals: Vec<StateId>,
}

impl Nfa {
    /// Builds and validates an NFA from an edge list.
    pub fn new(
        alphabet: Alphabet,
        state_count: usize,
        edges: impl IntoIterator<Item = (StateId, SymbolId, StateId)>,
        initials: impl IntoIterator<Item = StateId>,
        finals: impl IntoIterator<Item = StateId>,
    ) -> Result<Nfa, AutomatonError> {
        let check = |s: StateId| -> Result<(), AutomatonError> {
            if s.index() >= state_count {
                Err(AutomatonError::InvalidStateId { id: s.index(), state_count })
            } else {
                Ok(())
            }
        };
        let mut transitions = alloc::vec![Vec::new(); state_count * alphabet.len()];
        for (from, sym, to) in edges {
            check(from)?;
            check(to)?;
            if sym.index() >= alphabet.len() {
                return Err(AutomatonError::InvalidSymbolId {
                    id: sym.index(),
                    alphabet_len: alphabet.len(),
                });
            }
            sets::insert(&mut transitions[from.index() * alphabet.len() + sym.index()], to);
        }
        let initials = sets::normalize(initials.into_iter().collect());
        let finals = sets::normalize(finals.into_iter().collect());
        for &s in initials.iter().chain(finals.iter()) {
            check(s)?;
        }
        Ok(Nfa { alphabet, state_count, transitions, initials, finals })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn states(&self) -> impl Iterator<Item = StateId> {
        (0..self.state_count).map(StateId::new)
    }

    /// Initial states, sorted. Loaded collections may have several; machines
    /// built from regular expressions have exactly one.
    pub fn initials(&self) -> &[StateId] {
        &self.initials
    }

    pub fn finals(&self) -> &[StateId] {
        &self.finals
    }

    pub fn is_final(&self, s: StateId) -> bool {
        sets::contains(&self.finals, s)
    }

    /// ρ(state, symbol): the successor set for one move. Empty for
    /// [`SymbolId::SINK`] and other out-of-alphabet symbols.
    pub fn successors(&self, s: StateId, sym: SymbolId) -> &[StateId] {
        if sym.index() >= self.alphabet.len() {
            return &[];
        }
        &self.transitions[s.index() * self.alphabet.len() + sym.index()]
    }

    /// One frontier step: ρ(set, symbol) as a sorted set.
    pub fn step(&self, set: &[StateId], sym: SymbolId) -> Vec<StateId> {
        let mut next = Vec::new();
        for &s in set {
            for &t in self.successors(s, sym) {
                sets::insert(&mut next, t);
            }
        }
        next
    }

    /// Extended relation ρ*(from, text): the set of states reached after
    /// reading the whole text. The empty set means no surviving run. Reading
    /// the empty text returns `from` unchanged.
    pub fn reach(&self, from: &[StateId], text: &[SymbolId]) -> Vec<StateId> {
        let mut frontier = sets::normalize(from.to_vec());
        for &sym in text {
            if frontier.is_empty() {
                break;
            }
            frontier = self.step(&frontier, sym);
        }
        frontier
    }

    /// Acceptance by the source machine: ρ*(initials, text) ∩ F ≠ ∅.
    ///
    /// This is the reference every recognizer variant is checked against.
    pub fn accepts(&self, text: &[SymbolId]) -> bool {
        let end = self.reach(&self.initials, text);
        sets::intersects(&end, &self.finals)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invalid_edges_are_rejected() {
        let alpha = Alphabet::from_bytes(*b"ab");
        let err = Nfa::new(
            alpha,
            2,
            [(StateId::new(0), SymbolId::new(0), StateId::new(5))],
            [StateId::new(0)],
            [],
        )
        .unwrap_err();
        assert_eq!(err, AutomatonError::InvalidStateId { id: 5, state_count: 2 });
    }

    #[test]
    fn reach_basics() {
        let alpha = Alphabet::from_bytes(*b"ab");
        let a = SymbolId::new(0);
        let nfa = Nfa::new(
            alpha,
            2,
            [(StateId::new(0), a, StateId::new(0)), (StateId::new(0), a, StateId::new(1))],
            [StateId::new(0)],
            [StateId::new(1)],
        )
        .unwrap();
        // Empty text leaves the start set unchanged.
        assert_eq!(nfa.reach(&[StateId::new(1)], &[]), [StateId::new(1)]);
        assert_eq!(nfa.reach(&[StateId::new(0)], &[a]), [StateId::new(0), StateId::new(1)]);
        assert!(nfa.accepts(&[a]));
        assert!(!nfa.accepts(&[]));
        // No transitions on 'b' and none on the sink pseudo-symbol.
        assert!(nfa.reach(&[StateId::new(0)], &[SymbolId::new(1)]).is_empty());
        assert!(nfa.reach(&[StateId::new(0)], &[SymbolId::SINK]).is_empty());
    }
}
