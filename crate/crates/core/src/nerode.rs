//! Language-equivalence (Nerode) partitioning of deterministic tables.
//!
//! Works for plain DFAs and for RI-DFAs alike: the multi-entry feature is
//! irrelevant here because from every state, initial or not, the outgoing
//! transitions are deterministic.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::ids::{StateId, SymbolId};

/// Read access to a deterministic transition table with partial delta.
pub trait DeterministicTable {
    fn state_count(&self) -> usize;
    fn alphabet_len(&self) -> usize;
    fn next(&self, s: StateId, sym: SymbolId) -> Option<StateId>;
    fn is_final(&self, s: StateId) -> bool;
}

/// A partition of the states of one machine into language-equivalence
/// classes. Classes are numbered by their lowest member id; members are
/// sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<Vec<StateId>>,
    dead_class: Option<usize>,
}

impl Partition {
    pub fn class_of(&self, s: StateId) -> usize {
        self.class_of[s.index()]
    }

    pub fn classes(&self) -> &[Vec<StateId>] {
        &self.classes
    }

    pub fn same_class(&self, a: StateId, b: StateId) -> bool {
        self.class_of(a) == self.class_of(b)
    }

    /// The class of states that accept nothing (language-equivalent to the
    /// conceptual dead state), if any real state is in it.
    pub fn dead_class(&self) -> Option<usize> {
        self.dead_class
    }
}

/// Partition refinement (Moore) over the table, with missing transitions
/// treated as moves into a conceptual dead state. The dead state is seeded
/// into the non-final block, so real states that accept nothing end up
/// equivalent to it — exactly the language-equivalence semantics.
pub fn nerode_partition<T: DeterministicTable + ?Sized>(table: &T) -> Partition {
    let n = table.state_count();
    let k = table.alphabet_len();
    let dead = n; // virtual extra state

    let mut block: Vec<usize> = (0..n)
        .map(|s| if table.is_final(StateId::new(s)) { 0 } else { 1 })
        .collect();
    block.push(1);

    loop {
        let successor = |s: usize, y: usize| -> usize {
            if s == dead {
                dead
            } else {
                table
                    .next(StateId::new(s), SymbolId::new(y))
                    .map_or(dead, StateId::index)
            }
        };
        let mut ids: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let mut refined = Vec::with_capacity(n + 1);
        for s in 0..=n {
            let signature = (block[s], (0..k).map(|y| block[successor(s, y)]).collect());
            let fresh = ids.len();
            refined.push(*ids.entry(signature).or_insert(fresh));
        }
        let before = distinct(&block);
        let after = ids.len();
        block = refined;
        if after == before {
            break;
        }
    }

    // Renumber classes by lowest real member; drop the dead class if it
    // holds no real state.
    let mut members: BTreeMap<usize, Vec<StateId>> = BTreeMap::new();
    for (s, &blk) in block.iter().enumerate().take(n) {
        members.entry(blk).or_default().push(StateId::new(s));
    }
    let mut classes: Vec<(usize, Vec<StateId>)> = members.into_iter().collect();
    classes.sort_by_key(|(_, states)| states[0]);

    let mut class_of = alloc::vec![0usize; n];
    let mut dead_class = None;
    let mut out = Vec::with_capacity(classes.len());
    for (idx, (blk, states)) in classes.into_iter().enumerate() {
        if blk == block[dead] {
            dead_class = Some(idx);
        }
        for &s in &states {
            class_of[s.index()] = idx;
        }
        out.push(states);
    }

    Partition { class_of, classes: out, dead_class }
}

fn distinct(block: &[usize]) -> usize {
    let mut seen: Vec<usize> = block.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_rejecting_state_joins_the_dead_class() {
        // Two non-final states: one with no outgoing edges, one stepping
        // into it. Both accept nothing, so they are equivalent.
        let alpha = crate::Alphabet::from_bytes(*b"a");
        let dfa = crate::Dfa::new(
            alpha,
            3,
            [
                (StateId::new(0), SymbolId::new(0), StateId::new(1)),
                (StateId::new(1), SymbolId::new(0), StateId::new(2)),
            ],
            StateId::new(0),
            [StateId::new(0)],
            None,
        )
        .unwrap();
        let partition = nerode_partition(&dfa);
        assert!(partition.same_class(StateId::new(1), StateId::new(2)));
        assert_eq!(partition.dead_class(), Some(partition.class_of(StateId::new(1))));
        assert!(!partition.same_class(StateId::new(0), StateId::new(1)));
    }
}
