//! Input alphabets.
//!
//! Symbols are stored as strings so that both byte alphabets (each symbol a
//! single character) and named-token alphabets (e.g. operator names from
//! external automata collections) fit the same machinery. Symbol ids are
//! dense indexes in storage order.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::AutomatonError;
use crate::ids::SymbolId;

/// An ordered set of distinct concrete symbols with a reverse lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    /// Builds an alphabet from distinct symbols, kept in the given order.
    pub fn from_symbols<I, S>(symbols: I) -> Result<Alphabet, AutomatonError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        for (i, sym) in symbols.iter().enumerate() {
            if symbols[..i].contains(sym) {
                return Err(AutomatonError::DuplicateSymbol(sym.clone()));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// Builds a byte alphabet, deduplicated and sorted by byte value so that
    /// the numbering does not depend on the order bytes were seen in.
    pub fn from_bytes<I: IntoIterator<Item = u8>>(bytes: I) -> Alphabet {
        let mut sorted: Vec<u8> = bytes.into_iter().collect();
        sorted.sort_unstable();
        sorted.dedup();
        let symbols = sorted
            .into_iter()
            .map(|b| {
                if b.is_ascii_graphic() || b == b' ' {
                    String::from(b as char)
                } else {
                    alloc::format!("\\x{b:02x}")
                }
            })
            .collect();
        Alphabet { symbols }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    /// The concrete symbol behind an id. Panics on out-of-range ids
    /// (including [`SymbolId::SINK`], which names no concrete symbol).
    pub fn symbol(&self, id: SymbolId) -> &str {
        &self.symbols[id.index()]
    }

    pub fn lookup(&self, symbol: &str) -> Option<SymbolId> {
        self.symbols.iter().position(|s| s == symbol).map(SymbolId::new)
    }

    /// Lookup for single-byte symbols; used when mapping raw text bytes.
    pub fn lookup_byte(&self, byte: u8) -> Option<SymbolId> {
        let printable = if byte.is_ascii_graphic() || byte == b' ' {
            String::from(byte as char)
        } else {
            alloc::format!("\\x{byte:02x}")
        };
        self.lookup(&printable)
    }

    /// True when every symbol is a single text byte, i.e. raw byte texts can
    /// be mapped onto this alphabet.
    pub fn is_byte_addressable(&self) -> bool {
        self.symbols
            .iter()
            .all(|s| s.len() == 1 || (s.len() == 4 && s.starts_with("\\x")))
    }

    pub fn ids(&self) -> impl Iterator<Item = SymbolId> + '_ {
        (0..self.symbols.len()).map(SymbolId::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn byte_alphabet_is_sorted_and_deduped() {
        let alpha = Alphabet::from_bytes(*b"cabca");
        assert_eq!(alpha.symbols(), &["a", "b", "c"]);
        assert_eq!(alpha.lookup("b"), Some(SymbolId::new(1)));
        assert_eq!(alpha.lookup_byte(b'c'), Some(SymbolId::new(2)));
        assert_eq!(alpha.lookup_byte(b'z'), None);
        assert!(alpha.is_byte_addressable());
    }

    #[test]
    fn duplicate_symbols_rejected() {
        let err = Alphabet::from_symbols(["a", "b", "a"]).unwrap_err();
        assert_eq!(err, AutomatonError::DuplicateSymbol("a".into()));
    }

    #[test]
    fn nonprintable_bytes_are_escaped() {
        let alpha = Alphabet::from_bytes([0x00, b'a', 0xff]);
        assert_eq!(alpha.symbols(), &["\\x00", "a", "\\xff"]);
        assert_eq!(alpha.lookup_byte(0xff), Some(SymbolId::new(2)));
        assert!(alpha.is_byte_addressable());
    }
}
