//! File formats: the versioned automaton document, the external word
//! automata collection format, raw texts and recognition reports.

pub mod document;
pub mod report;
pub mod text;
pub mod timbuk;
