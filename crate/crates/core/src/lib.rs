//! Finite-automata kernel for speculative data-parallel recognition of
//! regular texts.
//!
//! The crate provides three chunk-automaton flavours and the machinery to
//! run them over chunked input:
//!
//! * [`Nfa`] — the nondeterministic source machine, which doubles as the
//!   correctness oracle ([`Nfa::accepts`]).
//! * [`Dfa`] — the classic powerset determinization ([`powerset_from`]),
//!   with partition-refinement minimization ([`minimize_dfa`]).
//! * [`RiDfa`] — a deterministic multi-entry machine whose initial
//!   (*interface*) states mirror the NFA states one-for-one
//!   ([`build_ridfa`]), optionally with the interface shrunk further by
//!   delegating language-equivalent entry states ([`RiDfa::reduce_interface`]).
//!
//! Recognition splits the text into chunks ([`split_chunks`]), scans every
//! chunk speculatively from all permitted start states
//! ([`reach_deterministic`] / [`reach_nondeterministic`]), and folds the
//! per-chunk start→end mappings in a serial join ([`join_classic`] /
//! [`join_rid`]). All transition counts are exact and deterministic.
//!
//! The crate is `no_std` (with `alloc`); thread-based parallel execution,
//! file formats and the command-line front end live in the companion
//! `ridfa-cli` crate.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod alphabet;
pub mod dfa;
pub mod error;
pub mod family;
pub mod ids;
pub mod minimize;
pub mod nerode;
pub mod nfa;
pub mod recognizer;
pub mod regex;
pub mod ridfa;
mod sets;

pub use alphabet::Alphabet;
pub use dfa::{powerset_from, Dfa};
pub use error::{AutomatonError, RecognizerError, RegexError};
pub use family::family_nfa;
pub use ids::{StateId, SymbolId};
pub use minimize::minimize_dfa;
pub use nerode::{nerode_partition, DeterministicTable, Partition};
pub use nfa::Nfa;
pub use recognizer::{
    chunk_mapping, join_classic, join_device, join_rid, reach_deterministic,
    reach_nondeterministic, recognize_serial, split_chunks, ChunkMapping, ChunkPlan,
    JoinOutcome, JoinStep, MachineRef, MappingEntries, RecognitionReport, Variant,
};
pub use regex::{parse_regex, regex_to_nfa, AlphabetMode, RegexAst};
pub use ridfa::{build_ridfa, RiDfa};
