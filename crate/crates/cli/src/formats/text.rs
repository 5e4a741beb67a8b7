//! Raw input texts: bytes mapped onto a machine's alphabet.

use std::path::Path;

use thiserror::Error;

use ridfa_core::{Alphabet, SymbolId};

#[derive(Debug, Error)]
pub enum TextError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("alphabet contains multi-byte symbols; raw byte texts cannot be mapped onto it")]
    NotByteAddressable,
    #[error("byte 0x{byte:02x} at offset {offset} is not in the alphabet")]
    ForeignByte { offset: usize, byte: u8 },
}

/// What to do with input bytes outside the alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForeignBytePolicy {
    /// Fail on the first foreign byte (the default).
    Strict,
    /// Map foreign bytes to the sink pseudo-symbol, which has no transition
    /// anywhere: the affected runs exit, so foreign input can only cause
    /// rejection, never a false accept.
    Sink,
}

/// Maps text bytes to symbol ids under the given policy.
pub fn map_bytes(
    bytes: &[u8],
    alphabet: &Alphabet,
    policy: ForeignBytePolicy,
) -> Result<Vec<SymbolId>, TextError> {
    if !alphabet.is_byte_addressable() {
        return Err(TextError::NotByteAddressable);
    }
    let mut lookup = [None::<SymbolId>; 256];
    for (slot, byte) in lookup.iter_mut().zip(0u16..=255) {
        *slot = alphabet.lookup_byte(byte as u8);
    }
    bytes
        .iter()
        .enumerate()
        .map(|(offset, &byte)| match lookup[byte as usize] {
            Some(sym) => Ok(sym),
            None => match policy {
                ForeignBytePolicy::Strict => Err(TextError::ForeignByte { offset, byte }),
                ForeignBytePolicy::Sink => Ok(SymbolId::SINK),
            },
        })
        .collect()
}

/// Reads a file and maps its bytes onto the alphabet.
pub fn load_text(
    path: &Path,
    alphabet: &Alphabet,
    policy: ForeignBytePolicy,
) -> Result<Vec<SymbolId>, TextError> {
    let bytes = std::fs::read(path).map_err(|source| TextError::Io {
        path: path.display().to_string(),
        source,
    })?;
    map_bytes(&bytes, alphabet, policy)
}
