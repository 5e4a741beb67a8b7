//! Dense integer identifiers for states and alphabet symbols.

use core::fmt;

/// Index of a state within one automaton. Ids are dense: every id is
/// `< state_count` of the owning machine, and subset-construction machines
/// assign them in discovery order so that reruns produce identical numbering.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateId(u32);

impl StateId {
    pub fn new(index: usize) -> StateId {
        StateId(index as u32)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for StateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.0)
    }
}

impl fmt::Display for StateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Index into an [`Alphabet`](crate::Alphabet).
///
/// A valid id is `< alphabet.len()`. The one exception is [`SymbolId::SINK`],
/// a pseudo-symbol used for foreign input bytes: it is outside every
/// alphabet, so no transition is ever defined on it and any run reading it
/// exits. That makes foreign bytes force rejection without ever producing a
/// false accept.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolId(u32);

impl SymbolId {
    /// Pseudo-symbol for input bytes outside the alphabet.
    pub const SINK: SymbolId = SymbolId(u32::MAX);

    pub fn new(index: usize) -> SymbolId {
        SymbolId(index as u32)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for SymbolId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == SymbolId::SINK {
            write!(f, "sink")
        } else {
            write!(f, "y{}", self.0)
        }
    }
}
