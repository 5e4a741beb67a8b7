//! Deterministic automata and the powerset (subset) construction.
//!
//! The transition function is partial: a missing entry means the run exits,
//! which is what the transition-count instrumentation needs (a failed lookup
//! is not a transition). No dead state is ever materialized.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use crate::alphabet::Alphabet;
use crate::error::AutomatonError;
use crate::ids::{StateId, SymbolId};
use crate::nerode::DeterministicTable;
use crate::nfa::Nfa;
use crate::sets;

/// A DFA with a dense, partial transition table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    state_count: usize,
    /// `delta[state * |Σ| + symbol]`; `None` marks "no transition".
    delta: Vec<Option<StateId>>,
    initial: StateId,
    finals: Vec<StateId>,
    /// For subset-construction machines: the NFA state set each DFA state
    /// stands for.
    origin: Option<Vec<Vec<StateId>>>,
}

impl Dfa {
    /// Builds and validates a DFA from an edge list. Rejects duplicate
    /// `(state, symbol)` edges — determinism is an invariant, not a hope.
    pub fn new(
        alphabet: Alphabet,
        state_count: usize,
        edges: impl IntoIterator<Item = (StateId, SymbolId, StateId)>,
        initial: StateId,
        finals: impl IntoIterator<Item = StateId>,
        origin: Option<Vec<Vec<StateId>>>,
    ) -> Result<Dfa, AutomatonError> {
        let check = |s: StateId| -> Result<(), AutomatonError> {
            if s.index() >= state_count {
                Err(AutomatonError::InvalidStateId { id: s.index(), state_count })
            } else {
                Ok(())
            }
        };
        check(initial)?;
        let mut delta = alloc::vec![None; state_count * alphabet.len()];
        for (from, sym, to) in edges {
            check(from)?;
            check(to)?;
            if sym.index() >= alphabet.len() {
                return Err(AutomatonError::InvalidSymbolId {
                    id: sym.index(),
                    alphabet_len: alphabet.len(),
                });
            }
            let slot = &mut delta[from.index() * alphabet.len() + sym.index()];
            if slot.is_some() && *slot != Some(to) {
                return Err(AutomatonError::NondeterministicTransition {
                    state: from.index(),
                    symbol: alloc::string::String::from(alphabet.symbol(sym)),
                });
            }
            *slot = Some(to);
        }
        let finals = sets::normalize(finals.into_iter().collect());
        for &f in &finals {
            check(f)?;
        }
        if let Some(origin) = &origin {
            if origin.len() != state_count {
                return Err(AutomatonError::InvalidStateId {
                    id: origin.len(),
                    state_count,
                });
            }
        }
        Ok(Dfa { alphabet, state_count, delta, initial, finals, origin })
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

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn finals(&self) -> &[StateId] {
        &self.finals
    }

    pub fn is_final(&self, s: StateId) -> bool {
        sets::contains(&self.finals, s)
    }

    /// δ(state, symbol); `None` when the run exits. Out-of-alphabet symbols
    /// (incl. [`SymbolId::SINK`]) have no transition by definition.
    pub fn next(&self, s: StateId, sym: SymbolId) -> Option<StateId> {
        if sym.index() >= self.alphabet.len() {
            return None;
        }
        self.delta[s.index() * self.alphabet.len() + sym.index()]
    }

    /// The NFA subset a state stands for, when this machine came out of a
    /// subset construction.
    pub fn origin(&self, s: StateId) -> Option<&[StateId]> {
        self.origin.as_ref().map(|o| o[s.index()].as_slice())
    }

    pub fn origins(&self) -> Option<&[Vec<StateId>]> {
        self.origin.as_deref()
    }

    /// Runs the machine from `from`, returning the last active state
    /// (`None` if the run exited early) and the number of successful moves.
    pub fn run(&self, from: StateId, text: &[SymbolId]) -> (Option<StateId>, u64) {
        let mut state = from;
        let mut moves = 0u64;
        for &sym in text {
            match self.next(state, sym) {
                Some(t) => {
                    state = t;
                    moves += 1;
                }
                None => return (None, moves),
            }
        }
        (Some(state), moves)
    }

    pub fn accepts(&self, text: &[SymbolId]) -> bool {
        match self.run(self.initial, text) {
            (Some(end), _) => self.is_final(end),
            (None, _) => false,
        }
    }
}

impl DeterministicTable for Dfa {
    fn state_count(&self) -> usize {
        self.state_count
    }

    fn alphabet_len(&self) -> usize {
        self.alphabet.len()
    }

    fn next(&self, s: StateId, sym: SymbolId) -> Option<StateId> {
        Dfa::next(self, s, sym)
    }

    fn is_final(&self, s: StateId) -> bool {
        Dfa::is_final(self, s)
    }
}

/// Accessible subset construction seeded at `start`.
///
/// States are the subsets of NFA states reachable from `start`, numbered in
/// breadth-first discovery order (symbol-ordered), so the numbering is
/// reproducible. Finals are the subsets intersecting the NFA final set. The
/// table stays partial: an empty successor subset produces no transition.
///
/// An empty seed (a machine without initial states rejects everything)
/// yields the one-state empty-language DFA.
pub fn powerset_from(nfa: &Nfa, start: &[StateId]) -> Dfa {
    let alphabet_len = nfa.alphabet().len();
    let start = sets::normalize(start.to_vec());
    for &q in &start {
        assert!(q.index() < nfa.state_count());
    }

    let mut index: BTreeMap<Vec<StateId>, StateId> = BTreeMap::new();
    let mut subsets: Vec<Vec<StateId>> = alloc::vec![start.clone()];
    index.insert(start, StateId::new(0));
    let mut rows: Vec<Vec<Option<StateId>>> = Vec::new();
    let mut work: VecDeque<StateId> = VecDeque::from([StateId::new(0)]);

    while let Some(s) = work.pop_front() {
        let subset = subsets[s.index()].clone();
        let mut row = alloc::vec![None; alphabet_len];
        for (y, slot) in row.iter_mut().enumerate() {
            let next = nfa.step(&subset, SymbolId::new(y));
            if next.is_empty() {
                continue;
            }
            let target = *index.entry(next.clone()).or_insert_with(|| {
                let t = StateId::new(subsets.len());
                subsets.push(next);
                work.push_back(t);
                t
            });
            *slot = Some(target);
        }
        debug_assert_eq!(rows.len(), s.index());
        rows.push(row);
    }

    let finals: Vec<StateId> = subsets
        .iter()
        .enumerate()
        .filter(|(_, subset)| sets::intersects(subset, nfa.finals()))
        .map(|(i, _)| StateId::new(i))
        .collect();
    let delta = rows.into_iter().flatten().collect();

    Dfa {
        alphabet: nfa.alphabet().clone(),
        state_count: subsets.len(),
        delta,
        initial: StateId::new(0),
        finals,
        origin: Some(subsets),
    }
}
