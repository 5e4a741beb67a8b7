//! Text segmentation.

use alloc::vec::Vec;
use core::ops::Range;

use crate::error::RecognizerError;

/// Chunk boundaries partitioning a text into non-empty pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChunkPlan {
    bounds: Vec<(usize, usize)>,
}

impl ChunkPlan {
    pub fn chunk_count(&self) -> usize {
        self.bounds.len()
    }

    pub fn ranges(&self) -> impl Iterator<Item = Range<usize>> + '_ {
        self.bounds.iter().map(|&(lo, hi)| lo..hi)
    }

    pub fn range(&self, i: usize) -> Range<usize> {
        let (lo, hi) = self.bounds[i];
        lo..hi
    }
}

/// Splits a text of length `n` into `c` near-equal chunks (sizes differ by
/// at most one; the leading chunks take the remainder). `c` is clamped to
/// `1..=n`, so every chunk is non-empty. The empty text cannot be split —
/// the device decides it from the initial/final sets instead.
pub fn split_chunks(n: usize, c: usize) -> Result<ChunkPlan, RecognizerError> {
    if n == 0 {
        return Err(RecognizerError::EmptyInput);
    }
    let c = c.clamp(1, n);
    let base = n / c;
    let extra = n % c;
    let mut bounds = Vec::with_capacity(c);
    let mut lo = 0;
    for i in 0..c {
        let size = base + usize::from(i < extra);
        bounds.push((lo, lo + size));
        lo += size;
    }
    debug_assert_eq!(lo, n);
    Ok(ChunkPlan { bounds })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn even_split() {
        let plan = split_chunks(6, 2).unwrap();
        assert_eq!(plan.bounds, [(0, 3), (3, 6)]);
    }

    #[test]
    fn single_chunk() {
        let plan = split_chunks(5, 1).unwrap();
        assert_eq!(plan.bounds, [(0, 5)]);
    }

    #[test]
    fn more_chunks_than_symbols_clamps() {
        let plan = split_chunks(3, 8).unwrap();
        assert_eq!(plan.bounds, [(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn remainder_goes_to_leading_chunks() {
        let plan = split_chunks(7, 3).unwrap();
        assert_eq!(plan.bounds, [(0, 3), (3, 5), (5, 7)]);
        assert!(plan.ranges().all(|r| !r.is_empty()));
    }

    #[test]
    fn empty_text_is_an_error() {
        assert_eq!(split_chunks(0, 2).unwrap_err(), RecognizerError::EmptyInput);
    }
}
