//! Chunked speculative recognition.
//!
//! The device splits the text into chunks, scans every chunk independently
//! (the *reach* phase — one worker per chunk in the parallel driver of the
//! companion crate), and then folds the per-chunk start→end mappings
//! serially (the *join* phase). Chunk 1 always starts from the designated
//! initials only; every other chunk must speculate, starting from the full
//! permitted start set of its machine kind:
//!
//! * DFA: all states,
//! * NFA: all states,
//! * RI-DFA: the interface states only.
//!
//! Executed transitions are counted exactly: only successful moves count,
//! and a run that exits early keeps the moves it made.

mod chunks;
mod device;
mod join;
mod reach;

use core::fmt;
use core::time::Duration;

use alloc::vec::Vec;

pub use chunks::{split_chunks, ChunkPlan};
pub use device::{chunk_mapping, join_device, recognize_serial, MachineRef};
pub use join::{join_classic, join_rid, JoinOutcome, JoinStep};
pub use reach::{reach_deterministic, reach_nondeterministic, ChunkMapping, MappingEntries};

/// Which chunk-automaton flavour a report came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Dfa,
    Nfa,
    RiDfa,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Dfa => "dfa",
            Variant::Nfa => "nfa",
            Variant::RiDfa => "ridfa",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one recognition run, with exact transition counts and
/// informational wall-clock timings (zero where the caller did not
/// measure).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognitionReport {
    pub accepted: bool,
    pub variant: Variant,
    pub chunk_count: usize,
    pub per_chunk_transitions: Vec<u64>,
    pub total_transitions: u64,
    pub reach_duration: Duration,
    pub join_duration: Duration,
}
