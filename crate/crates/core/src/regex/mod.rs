//! Regular expressions: parsing and position-automaton construction.
//!
//! The supported syntax is deliberately small: literals, `\` escapes for
//! metacharacters, `.` for any alphabet symbol, `|`, `*`, `+`, `?`,
//! grouping with `( )`, and character classes `[abc]` / `[a-z]`. Anything
//! outside that subset is a parse error, never a silent literal.

mod glushkov;
mod parser;

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::alphabet::Alphabet;

pub use glushkov::regex_to_nfa;
pub use parser::parse_regex;

/// Syntax tree of a pattern. Leaves carry concrete bytes; `AnyChar` is
/// resolved against the alphabet only when the NFA is built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegexAst {
    /// Matches only the empty string. Never produced by the parser (an
    /// empty pattern or group is an error); exists for programmatic use.
    Epsilon,
    Literal(u8),
    /// Non-empty set of bytes.
    Class(BTreeSet<u8>),
    /// Any symbol of the alphabet.
    AnyChar,
    /// Two or more factors in sequence.
    Concat(Vec<RegexAst>),
    /// Two or more alternatives.
    Alt(Vec<RegexAst>),
    Star(Box<RegexAst>),
    Plus(Box<RegexAst>),
    Opt(Box<RegexAst>),
}

/// How the alphabet of a pattern is determined.
#[derive(Clone, Debug)]
pub enum AlphabetMode {
    /// The effective alphabet is exactly the set of bytes that occur in the
    /// pattern's literals and classes (sorted by byte value). `.` ranges
    /// over those bytes.
    Bytes,
    /// A caller-supplied alphabet of single-byte symbols. Every literal
    /// must be a member; `.` ranges over the whole alphabet.
    Custom(Alphabet),
}
