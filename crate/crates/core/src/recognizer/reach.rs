//! The reach phase: speculative chunk scanning.

use alloc::vec::Vec;

use crate::ids::{StateId, SymbolId};
use crate::nerode::DeterministicTable;
use crate::nfa::Nfa;
use crate::sets;

/// The partial mapping λ a chunk scan produces, plus its transition count.
///
/// Entries are an association list keyed by start state, sorted, holding
/// exactly the starts whose run survived the whole chunk (the chunk's PIS).
/// Deterministic scans map each start to its single last active state;
/// nondeterministic scans map it to the set of states its run tree reaches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChunkMapping {
    pub entries: MappingEntries,
    /// Executed moves, summed over all started runs — including the moves a
    /// run made before exiting early.
    pub transitions: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MappingEntries {
    Deterministic(Vec<(StateId, StateId)>),
    Nondeterministic(Vec<(StateId, Vec<StateId>)>),
}

impl ChunkMapping {
    /// The surviving starts (PIS), sorted.
    pub fn domain(&self) -> Vec<StateId> {
        match &self.entries {
            MappingEntries::Deterministic(entries) => {
                entries.iter().map(|&(q, _)| q).collect()
            }
            MappingEntries::Nondeterministic(entries) => {
                entries.iter().map(|&(q, _)| q).collect()
            }
        }
    }

    /// λ applied to a set of starts: the union of the images of those in
    /// the domain.
    pub fn apply(&self, starts: &[StateId]) -> Vec<StateId> {
        let mut out = Vec::new();
        match &self.entries {
            MappingEntries::Deterministic(entries) => {
                for &(q, end) in entries {
                    if sets::contains(starts, q) {
                        sets::insert(&mut out, end);
                    }
                }
            }
            MappingEntries::Nondeterministic(entries) => {
                for (q, ends) in entries {
                    if sets::contains(starts, *q) {
                        for &end in ends {
                            sets::insert(&mut out, end);
                        }
                    }
                }
            }
        }
        out
    }

    /// Every state id mentioned in the mapping, for validation.
    pub(crate) fn max_state(&self) -> Option<usize> {
        let mut max = None;
        let mut note = |s: StateId| {
            max = Some(max.map_or(s.index(), |m: usize| m.max(s.index())));
        };
        match &self.entries {
            MappingEntries::Deterministic(entries) => {
                for &(q, end) in entries {
                    note(q);
                    note(end);
                }
            }
            MappingEntries::Nondeterministic(entries) => {
                for (q, ends) in entries {
                    note(*q);
                    ends.iter().for_each(|&e| note(e));
                }
            }
        }
        max
    }
}

/// Scans one chunk on a deterministic table (DFA or RI-DFA), one run per
/// start state. A run whose lookup fails exits and contributes no λ entry;
/// the moves it made still count.
pub fn reach_deterministic<T: DeterministicTable + ?Sized>(
    table: &T,
    starts: &[StateId],
    chunk: &[SymbolId],
) -> ChunkMapping {
    let starts = sets::normalize(starts.to_vec());
    let mut entries = Vec::new();
    let mut transitions = 0u64;
    for &start in &starts {
        let mut state = start;
        let mut alive = true;
        for &sym in chunk {
            match table.next(state, sym) {
                Some(t) => {
                    state = t;
                    transitions += 1;
                }
                None => {
                    alive = false;
                    break;
                }
            }
        }
        if alive {
            entries.push((start, state));
        }
    }
    ChunkMapping { entries: MappingEntries::Deterministic(entries), transitions }
}

/// Scans one chunk on an NFA, one frontier simulation per start state.
///
/// The transition count is the number of relation edges the run tree
/// explores: at each step, every (state, symbol, successor) edge leaving
/// the current frontier is one transition.
pub fn reach_nondeterministic(
    nfa: &Nfa,
    starts: &[StateId],
    chunk: &[SymbolId],
) -> ChunkMapping {
    let starts = sets::normalize(starts.to_vec());
    let mut entries = Vec::new();
    let mut transitions = 0u64;
    for &start in &starts {
        let mut frontier = alloc::vec![start];
        for &sym in chunk {
            let mut next = Vec::new();
            for &s in &frontier {
                let successors = nfa.successors(s, sym);
                transitions += successors.len() as u64;
                for &t in successors {
                    sets::insert(&mut next, t);
                }
            }
            frontier = next;
            if frontier.is_empty() {
                break;
            }
        }
        if !frontier.is_empty() {
            entries.push((start, frontier));
        }
    }
    ChunkMapping { entries: MappingEntries::Nondeterministic(entries), transitions }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::dfa::Dfa;

    fn two_state_dfa() -> Dfa {
        // 0 -a-> 1, 1 -a-> 0; no moves on b from state 1.
        let alpha = Alphabet::from_bytes(*b"ab");
        Dfa::new(
            alpha,
            2,
            [
                (StateId::new(0), SymbolId::new(0), StateId::new(1)),
                (StateId::new(1), SymbolId::new(0), StateId::new(0)),
                (StateId::new(0), SymbolId::new(1), StateId::new(0)),
            ],
            StateId::new(0),
            [StateId::new(1)],
            None,
        )
        .unwrap()
    }

    #[test]
    fn empty_chunk_is_the_identity_mapping() {
        let dfa = two_state_dfa();
        let det = reach_deterministic(&dfa, &[StateId::new(1), StateId::new(0)], &[]);
        assert_eq!(det.transitions, 0);
        assert_eq!(
            det.entries,
            MappingEntries::Deterministic(alloc::vec![
                (StateId::new(0), StateId::new(0)),
                (StateId::new(1), StateId::new(1)),
            ])
        );
    }

    #[test]
    fn dying_runs_keep_their_partial_moves_and_lose_their_entry() {
        let dfa = two_state_dfa();
        let a = SymbolId::new(0);
        let b = SymbolId::new(1);
        // From 1: a -> 0, b -> 0, b -> 0 survives. From 0: a -> 1, then b
        // dies after two moves... (0 -a-> 1 -b-> dead after 1 move).
        let mapping = reach_deterministic(&dfa, &[StateId::new(0), StateId::new(1)], &[a, b, b]);
        assert_eq!(mapping.domain(), alloc::vec![StateId::new(1)]);
        // Start 0 contributes its single successful move; start 1 all three.
        assert_eq!(mapping.transitions, 4);
    }
}
