//! Error types shared across the crate.

use alloc::string::String;
use core::fmt;

/// Errors raised while assembling or validating an automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutomatonError {
    /// A state id is outside `0..state_count`.
    InvalidStateId { id: usize, state_count: usize },
    /// A symbol id is outside the alphabet.
    InvalidSymbolId { id: usize, alphabet_len: usize },
    /// The alphabet declares the same symbol twice.
    DuplicateSymbol(String),
    /// Two transitions leave the same state on the same symbol in a
    /// deterministic table.
    NondeterministicTransition { state: usize, symbol: String },
    /// A machine that must have an initial state has none.
    MissingInitialState,
    /// A structural invariant of a loaded machine does not hold.
    InvariantViolation(String),
}

impl fmt::Display for AutomatonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutomatonError::InvalidStateId { id, state_count } => {
                write!(f, "state id {id} out of range (state count {state_count})")
            }
            AutomatonError::InvalidSymbolId { id, alphabet_len } => {
                write!(f, "symbol id {id} out of range (alphabet size {alphabet_len})")
            }
            AutomatonError::DuplicateSymbol(sym) => {
                write!(f, "duplicate alphabet symbol {sym:?}")
            }
            AutomatonError::NondeterministicTransition { state, symbol } => {
                write!(
                    f,
                    "duplicate transition from state {state} on symbol {symbol:?} in a deterministic table"
                )
            }
            AutomatonError::MissingInitialState => write!(f, "automaton has no initial state"),
        }
    }
}

impl core::error::Error for AutomatonError {}

/// Regular-expression parse errors, with the byte offset of the offending
/// character in the pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegexError {
    pub offset: usize,
    pub message: String,
}

impl RegexError {
    pub fn new(offset: usize, message: impl Into<String>) -> RegexError {
        RegexError { offset, message: message.into() }
    }
}

impl fmt::Display for RegexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "regex syntax error at offset {}: {}", self.offset, self.message)
    }
}

impl core::error::Error for RegexError {}

/// Errors raised by chunked recognition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecognizerError {
    /// The input text is empty; the device decides acceptance from the
    /// initial/final sets alone instead of splitting chunks.
    EmptyInput,
    /// A chunk mapping references a state the chunk automaton does not have,
    /// or mixes deterministic and nondeterministic entries.
    InconsistentMapping(String),
}

impl fmt::Display for RecognizerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecognizerError::EmptyInput => write!(f, "cannot split an empty text into chunks"),
            RecognizerError::InconsistentMapping(msg) => {
                write!(f, "inconsistent chunk mapping: {msg}")
            }
        }
    }
}

impl core::error::Error for RecognizerError {}
