//! Std companion to `ridfa-core`: the thread-per-chunk parallel recognizer
//! driver, file formats (external automata collections, the versioned
//! automaton document, texts, reports), seeded text generation, the
//! benchmark sweep harness, and construction statistics.

pub mod bench;
pub mod formats;
pub mod gen;
pub mod parallel;
pub mod stats;

pub use formats::document::{load_automaton, save_automaton, Automaton};
pub use parallel::{recognize_parallel, recognize_serial_timed};
