//! Seeded random instance generation. A tiny hand-rolled generator keeps
//! test inputs bit-stable across toolchain and dependency updates.

use ridfa_core::{Alphabet, Nfa, StateId, SymbolId};

/// SplitMix64: small, fast, and stable forever.
#[derive(Clone, Debug)]
pub struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-enough value in `0..n` (modulo bias is irrelevant here).
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }

    /// True with probability `percent`/100.
    pub fn chance(&mut self, percent: u32) -> bool {
        self.next_u64() % 100 < u64::from(percent)
    }
}

/// A random NFA over the first `alphabet_len` letters, each possible edge
/// present with probability `edge_percent`/100. Finals are a random subset;
/// initials are a single random state, or a random non-empty subset when
/// `multi_initial` is set.
pub fn random_nfa(
    rng: &mut SplitMix64,
    state_count: usize,
    alphabet_len: usize,
    edge_percent: u32,
    multi_initial: bool,
) -> Nfa {
    assert!(state_count >= 1 && (1..=26).contains(&alphabet_len));
    let alpha = Alphabet::from_bytes((0..alphabet_len).map(|i| b'a' + i as u8));
    let mut edges = Vec::new();
    for q in 0..state_count {
        for y in 0..alphabet_len {
            for t in 0..state_count {
                if rng.chance(edge_percent) {
                    edges.push((StateId::new(q), SymbolId::new(y), StateId::new(t)));
                }
            }
        }
    }
    let initials: Vec<StateId> = if multi_initial {
        let mut set: Vec<StateId> =
            (0..state_count).filter(|_| rng.chance(40)).map(StateId::new).collect();
        if set.is_empty() {
            set.push(StateId::new(rng.below(state_count)));
        }
        set
    } else {
        vec![StateId::new(rng.below(state_count))]
    };
    let finals: Vec<StateId> =
        (0..state_count).filter(|_| rng.chance(50)).map(StateId::new).collect();
    Nfa::new(alpha, state_count, edges, initials, finals).unwrap()
}

pub fn random_text(rng: &mut SplitMix64, alphabet_len: usize, len: usize) -> Vec<SymbolId> {
    (0..len).map(|_| SymbolId::new(rng.below(alphabet_len))).collect()
}
