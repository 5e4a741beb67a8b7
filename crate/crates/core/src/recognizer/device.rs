//! Variant dispatch and serial execution.

use alloc::vec::Vec;
use core::time::Duration;

use crate::dfa::Dfa;
use crate::error::RecognizerError;
use crate::ids::{StateId, SymbolId};
use crate::nfa::Nfa;
use crate::ridfa::RiDfa;
use crate::sets;

use super::join::{join_classic, join_rid, JoinOutcome};
use super::reach::{reach_deterministic, reach_nondeterministic, ChunkMapping};
use super::{RecognitionReport, Variant};

/// A borrowed chunk automaton of any flavour. `Copy`, and freely shareable
/// across chunk workers.
#[derive(Clone, Copy, Debug)]
pub enum MachineRef<'a> {
    Dfa(&'a Dfa),
    Nfa(&'a Nfa),
    RiDfa(&'a RiDfa),
}

impl<'a> MachineRef<'a> {
    pub fn variant(self) -> Variant {
        match self {
            MachineRef::Dfa(_) => Variant::Dfa,
            MachineRef::Nfa(_) => Variant::Nfa,
            MachineRef::RiDfa(_) => Variant::RiDfa,
        }
    }

    /// Where the first chunk starts: the designated initials.
    pub fn designated_initials(self) -> Vec<StateId> {
        match self {
            MachineRef::Dfa(dfa) => alloc::vec![dfa.initial()],
            MachineRef::Nfa(nfa) => nfa.initials().to_vec(),
            MachineRef::RiDfa(machine) => machine.designated_initials().to_vec(),
        }
    }

    /// Where every other chunk must speculatively start: all states for the
    /// classic variants, the interface only for the RI-DFA.
    pub fn speculative_starts(self) -> Vec<StateId> {
        match self {
            MachineRef::Dfa(dfa) => dfa.states().collect(),
            MachineRef::Nfa(nfa) => nfa.states().collect(),
            MachineRef::RiDfa(machine) => machine.interface().to_vec(),
        }
    }

    /// Empty-text verdict: accept iff a designated initial is final.
    pub fn empty_text_accepts(self) -> bool {
        match self {
            MachineRef::Dfa(dfa) => dfa.is_final(dfa.initial()),
            MachineRef::Nfa(nfa) => sets::intersects(nfa.initials(), nfa.finals()),
            MachineRef::RiDfa(machine) => {
                machine.designated_initials().iter().any(|&p| machine.is_final(p))
            }
        }
    }
}

/// Scans one chunk with the start set the device prescribes for its
/// position: designated initials for the first chunk, the speculative
/// start set for every other.
pub fn chunk_mapping(machine: MachineRef<'_>, is_first: bool, chunk: &[SymbolId]) -> ChunkMapping {
    let starts = if is_first {
        machine.designated_initials()
    } else {
        machine.speculative_starts()
    };
    match machine {
        MachineRef::Dfa(dfa) => reach_deterministic(dfa, &starts, chunk),
        MachineRef::Nfa(nfa) => reach_nondeterministic(nfa, &starts, chunk),
        MachineRef::RiDfa(m) => reach_deterministic(m, &starts, chunk),
    }
}

/// Joins the mappings with the variant's join rule.
pub fn join_device(
    machine: MachineRef<'_>,
    mappings: &[ChunkMapping],
) -> Result<JoinOutcome, RecognizerError> {
    match machine {
        MachineRef::Dfa(dfa) => join_classic(
            mappings,
            &[dfa.initial()],
            dfa.finals(),
            dfa.state_count(),
        ),
        MachineRef::Nfa(nfa) => {
            join_classic(mappings, nfa.initials(), nfa.finals(), nfa.state_count())
        }
        MachineRef::RiDfa(m) => join_rid(mappings, m),
    }
}

/// Single-pass recognition from the designated initials: the degenerate
/// one-chunk case of the device. Deterministic variants execute exactly
/// `text.len()` transitions when no run dies. Timing fields are zero; the
/// parallel driver in the companion crate measures wall-clock time.
pub fn recognize_serial(machine: MachineRef<'_>, text: &[SymbolId]) -> RecognitionReport {
    if text.is_empty() {
        return RecognitionReport {
            accepted: machine.empty_text_accepts(),
            variant: machine.variant(),
            chunk_count: 0,
            per_chunk_transitions: Vec::new(),
            total_transitions: 0,
            reach_duration: Duration::ZERO,
            join_duration: Duration::ZERO,
        };
    }
    let mapping = chunk_mapping(machine, true, text);
    let transitions = mapping.transitions;
    let outcome = join_device(machine, &[mapping])
        .expect("mapping from the machine's own reach phase is consistent");
    RecognitionReport {
        accepted: outcome.accepted,
        variant: machine.variant(),
        chunk_count: 1,
        per_chunk_transitions: alloc::vec![transitions],
        total_transitions: transitions,
        reach_duration: Duration::ZERO,
        join_duration: Duration::ZERO,
    }
}
