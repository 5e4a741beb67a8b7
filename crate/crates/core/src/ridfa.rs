//! The reduced-interface DFA: a deterministic multi-entry chunk automaton.
//!
//! Built from an NFA by running the subset construction once per NFA state,
//! each run seeded with a singleton and reusing everything earlier runs
//! discovered. The singletons become the machine's *interface* — the only
//! states a speculative chunk run may start from — so the start-state count
//! follows the NFA size instead of the (possibly exponential) DFA size,
//! while every transition stays deterministic.
//!
//! [`RiDfa::reduce_interface`] shrinks the interface further: when two
//! interface states are language-equivalent, one is downgraded to
//! non-initial and *delegates* its entry role to the other. The delegate's
//! content set absorbs the downgraded NFA state so the interface function
//! can keep routing joins correctly. States are never merged; the
//! transition graph does not change.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use crate::alphabet::Alphabet;
use crate::error::AutomatonError;
use crate::ids::{StateId, SymbolId};
use crate::nerode::{nerode_partition, DeterministicTable};
use crate::nfa::Nfa;
use crate::sets;

/// Deterministic machine over powerset states with a set of entry
/// ("interface") states mirroring the NFA states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiDfa {
    alphabet: Alphabet,
    state_count: usize,
    delta: Vec<Option<StateId>>,
    /// Per state: the NFA states it represents, sorted. Reduction appends
    /// the downgraded NFA states to their delegate's content.
    content: Vec<Vec<StateId>>,
    /// Entry states, sorted. Before reduction these are exactly the ℓ
    /// singleton states 0..ℓ.
    interface: Vec<StateId>,
    /// States whose content intersects the NFA final set.
    finals: Vec<StateId>,
    /// Downgraded singleton → its delegate, sorted by source.
    delegation: Vec<(StateId, StateId)>,
    /// The singleton states of the NFA initials (routed through delegation
    /// on reduced machines); where the first chunk starts.
    designated: Vec<StateId>,
    nfa_state_count: usize,
}

/// Incremental subset construction seeded at every NFA state.
///
/// The ℓ singletons are registered first as states 0..ℓ (in NFA state
/// order); each construction run then only adds material earlier runs did
/// not reach, so the union of all runs is built in one pass over a shared
/// worklist. Aggregate states are numbered in breadth-first discovery
/// order.
pub fn build_ridfa(nfa: &Nfa) -> RiDfa {
    let alphabet_len = nfa.alphabet().len();
    let nfa_states = nfa.state_count();

    let mut index: BTreeMap<Vec<StateId>, StateId> = BTreeMap::new();
    let mut content: Vec<Vec<StateId>> = Vec::with_capacity(nfa_states);
    let mut rows: Vec<Vec<Option<StateId>>> = Vec::new();
    let mut expanded: Vec<bool> = Vec::new();
    for q in 0..nfa_states {
        let singleton = alloc::vec![StateId::new(q)];
        index.insert(singleton.clone(), StateId::new(q));
        content.push(singleton);
        rows.push(alloc::vec![None; alphabet_len]);
        expanded.push(false);
    }

    for seed in 0..nfa_states {
        let mut work: VecDeque<StateId> = VecDeque::from([StateId::new(seed)]);
        while let Some(s) = work.pop_front() {
            if expanded[s.index()] {
                continue;
            }
            expanded[s.index()] = true;
            let subset = content[s.index()].clone();
            for y in 0..alphabet_len {
                let next = nfa.step(&subset, SymbolId::new(y));
                if next.is_empty() {
                    continue;
                }
                let target = *index.entry(next.clone()).or_insert_with(|| {
                    let t = StateId::new(content.len());
                    content.push(next);
                    rows.push(alloc::vec![None; alphabet_len]);
                    expanded.push(false);
                    t
                });
                rows[s.index()][y] = Some(target);
                if !expanded[target.index()] {
                    work.push_back(target);
                }
            }
        }
    }

    let finals: Vec<StateId> = content
        .iter()
        .enumerate()
        .filter(|(_, subset)| sets::intersects(subset, nfa.finals()))
        .map(|(i, _)| StateId::new(i))
        .collect();
    let interface: Vec<StateId> = (0..nfa_states).map(StateId::new).collect();
    // The singleton of NFA state q is state q, so initials carry over as-is.
    let designated: Vec<StateId> = nfa.initials().to_vec();
    let state_count = content.len();

    RiDfa {
        alphabet: nfa.alphabet().clone(),
        state_count,
        delta: rows.into_iter().flatten().collect(),
        content,
        interface,
        finals,
        delegation: Vec::new(),
        designated,
        nfa_state_count: nfa_states,
    }
}

impl RiDfa {
    /// Builds and validates a machine from parts (deserialization path).
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        alphabet: Alphabet,
        state_count: usize,
        edges: impl IntoIterator<Item = (StateId, SymbolId, StateId)>,
        content: Vec<Vec<StateId>>,
        interface: impl IntoIterator<Item = StateId>,
        finals: impl IntoIterator<Item = StateId>,
        delegation: impl IntoIterator<Item = (StateId, StateId)>,
        designated: impl IntoIterator<Item = StateId>,
        nfa_state_count: usize,
    ) -> Result<RiDfa, AutomatonError> {
        let check = |s: StateId, bound: usize| -> Result<(), AutomatonError> {
            if s.index() >= bound {
                Err(AutomatonError::InvalidStateId { id: s.index(), state_count: bound })
            } else {
                Ok(())
            }
        };
        let mut delta = alloc::vec![None; state_count * alphabet.len()];
        for (from, sym, to) in edges {
            check(from, state_count)?;
            check(to, state_count)?;
            if sym.index() >= alphabet.len() {
                return Err(AutomatonError::InvalidSymbolId {
                    id: sym.index(),
                    alphabet_len: alphabet.len(),
                });
            }
            let slot = &mut delta[from.index() * alphabet.len() + sym.index()];
            if slot.is_some() && *slot != Some(to) {
                return Err(AutomatonError::NondeterministicTransition {
                    state: from.index(),
                    symbol: alloc::string::String::from(alphabet.symbol(sym)),
                });
            }
            *slot = Some(to);
        }
        if content.len() != state_count {
            return Err(AutomatonError::InvalidStateId {
                id: content.len(),
                state_count,
            });
        }
        // The first ℓ states are the singletons; a machine with fewer
        // states than NFA states cannot have them.
        if state_count < nfa_state_count {
            return Err(AutomatonError::InvalidStateId {
                id: nfa_state_count,
                state_count,
            });
        }
        let content: Vec<Vec<StateId>> =
            content.into_iter().map(sets::normalize).collect();
        for subset in &content {
            for &q in subset {
                check(q, nfa_state_count)?;
            }
        }
        let interface = sets::normalize(interface.into_iter().collect());
        let finals = sets::normalize(finals.into_iter().collect());
        let designated = sets::normalize(designated.into_iter().collect());
        for &s in interface.iter().chain(finals.iter()).chain(designated.iter()) {
            check(s, state_count)?;
        }
        let mut delegation: Vec<(StateId, StateId)> = delegation.into_iter().collect();
        delegation.sort_unstable();
        for &(source, delegate) in &delegation {
            // Sources and delegates are singleton states by construction;
            // a source was downgraded out of the interface, its delegate
            // stayed in.
            check(source, nfa_state_count)?;
            check(delegate, nfa_state_count)?;
            if sets::contains(&interface, source) || !sets::contains(&interface, delegate) {
                return Err(AutomatonError::InvalidStateId {
                    id: source.index(),
                    state_count: nfa_state_count,
                });
            }
        }
        // The first chunk can only start from entry states.
        for &d in &designated {
            if !sets::contains(&interface, d) {
                return Err(AutomatonError::InvalidStateId {
                    id: d.index(),
                    state_count: nfa_state_count,
                });
            }
        }
        Ok(RiDfa {
            alphabet,
            state_count,
            delta,
            content,
            interface,
            finals,
            delegation,
            designated,
            nfa_state_count,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn states(&self) -> impl Iterator<Item = StateId> {
        (0..self.state_count).map(StateId::new)
    }

    /// Number of states of the source NFA (ℓ). States `0..ℓ` are the
    /// singleton states, in NFA state order.
    pub fn nfa_state_count(&self) -> usize {
        self.nfa_state_count
    }

    pub fn interface(&self) -> &[StateId] {
        &self.interface
    }

    pub fn finals(&self) -> &[StateId] {
        &self.finals
    }

    pub fn is_final(&self, s: StateId) -> bool {
        sets::contains(&self.finals, s)
    }

    /// The NFA states represented by state `s` (after reduction, a
    /// delegate's content also lists the NFA states it absorbed).
    pub fn content(&self, s: StateId) -> &[StateId] {
        &self.content[s.index()]
    }

    /// Downgraded singleton → delegate pairs, sorted by source.
    pub fn delegation(&self) -> &[(StateId, StateId)] {
        &self.delegation
    }

    /// Entry states of the first chunk.
    pub fn designated_initials(&self) -> &[StateId] {
        &self.designated
    }

    pub fn next(&self, s: StateId, sym: SymbolId) -> Option<StateId> {
        if sym.index() >= self.alphabet.len() {
            return None;
        }
        self.delta[s.index() * self.alphabet.len() + sym.index()]
    }

    /// Runs the deterministic table from `from`; same contract as
    /// [`Dfa::run`](crate::Dfa::run).
    pub fn run(&self, from: StateId, text: &[SymbolId]) -> (Option<StateId>, u64) {
        let mut state = from;
        let mut moves = 0u64;
        for &sym in text {
            match self.next(state, sym) {
                Some(t) => {
                    state = t;
                    moves += 1;
                }
                None => return (None, moves),
            }
        }
        (Some(state), moves)
    }

    /// Finds the state representing exactly this NFA subset, if present.
    pub fn state_with_content(&self, subset: &[StateId]) -> Option<StateId> {
        let subset = sets::normalize(subset.to_vec());
        self.content
            .iter()
            .position(|c| *c == subset)
            .map(StateId::new)
    }

    /// Union of the contents of `plas`, as NFA state ids. On an unreduced
    /// machine this is the Nst bookkeeping set the join-correctness
    /// argument is built on.
    pub fn content_union(&self, plas: &[StateId]) -> Vec<StateId> {
        let mut out = Vec::new();
        for &p in plas {
            for &q in self.content(p) {
                sets::insert(&mut out, q);
            }
        }
        out
    }

    /// The interface function ι: decomposes the contents of `plas` into
    /// singleton states. The image is a subset of the interface on
    /// unreduced machines; on reduced machines use
    /// [`interface_map_min`](Self::interface_map_min), which routes
    /// downgraded singletons to their delegates.
    pub fn interface_map(&self, plas: &[StateId]) -> Vec<StateId> {
        // Singleton state of NFA state q is state q, so the image is the
        // content union read as machine states.
        self.content_union(plas)
    }

    /// ι adjusted for delegation: every singleton in the ι-image that was
    /// downgraded is replaced by its delegate. Identical to
    /// [`interface_map`](Self::interface_map) when nothing was delegated.
    pub fn interface_map_min(&self, plas: &[StateId]) -> Vec<StateId> {
        let image = self.interface_map(plas);
        let mut out = Vec::new();
        for s in image {
            let routed = match self.delegation.binary_search_by_key(&s, |&(src, _)| src) {
                Ok(i) => self.delegation[i].1,
                Err(_) => s,
            };
            sets::insert(&mut out, routed);
        }
        out
    }

    /// Shrinks the interface by delegation.
    ///
    /// Every language-equivalence class (computed over the transition table
    /// with [`nerode_partition`]) that holds two or more interface states
    /// keeps its lowest-id member as the delegate; the rest are downgraded
    /// to non-initial and recorded in the delegation map, and the delegate's
    /// content absorbs their NFA states. Only the interface changes —
    /// states are never merged and the transition graph is untouched, so
    /// non-interface equivalence classes are deliberately left alone.
    ///
    /// Idempotent: reducing an already-reduced machine changes nothing,
    /// because the surviving interface states are pairwise distinguishable.
    pub fn reduce_interface(&self) -> RiDfa {
        let partition = nerode_partition(self);
        let mut reduced = self.clone();
        for class in partition.classes() {
            let entry_members = sets::intersect(class, &self.interface);
            if entry_members.len() < 2 {
                continue;
            }
            // Lowest-id member, except that a designated initial always
            // wins: downgrading one would make the first chunk run from the
            // delegate, whose run can be longer than the original's —
            // reduction must never add work.
            let delegate = entry_members
                .iter()
                .copied()
                .find(|&p| sets::contains(&self.designated, p))
                .unwrap_or(entry_members[0]);
            for &downgraded in entry_members.iter().filter(|&&p| p != delegate) {
                reduced.interface.retain(|&p| p != downgraded);
                reduced.delegation.push((downgraded, delegate));
                let absorbed = self.content(downgraded).to_vec();
                for q in absorbed {
                    sets::insert(&mut reduced.content[delegate.index()], q);
                }
            }
        }
        reduced.delegation.sort_unstable();
        // A downgraded designated initial hands the first chunk to its
        // delegate (language-equivalent, so verdicts are unchanged).
        reduced.designated = sets::normalize(
            self.designated
                .iter()
                .map(|&s| {
                    match reduced.delegation.binary_search_by_key(&s, |&(src, _)| src) {
                        Ok(i) => reduced.delegation[i].1,
                        Err(_) => s,
                    }
                })
                .collect(),
        );
        reduced
    }
}

impl DeterministicTable for RiDfa {
    fn state_count(&self) -> usize {
        self.state_count
    }

    fn alphabet_len(&self) -> usize {
        self.alphabet.len()
    }

    fn next(&self, s: StateId, sym: SymbolId) -> Option<StateId> {
        RiDfa::next(self, s, sym)
    }

    fn is_final(&self, s: StateId) -> bool {
        RiDfa::is_final(self, s)
    }
}

/// The transition table of an RI-DFA, exposed so tests can assert that
/// interface reduction leaves the graph untouched.
impl RiDfa {
    pub fn table(&self) -> &[Option<StateId>] {
        &self.delta
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_state_nfa_is_its_own_ridfa() {
        let alpha = Alphabet::from_bytes(*b"a");
        let nfa = Nfa::new(alpha, 1, [], [StateId::new(0)], [StateId::new(0)]).unwrap();
        let machine = build_ridfa(&nfa);
        assert_eq!(machine.state_count(), 1);
        assert_eq!(machine.interface(), [StateId::new(0)]);
        assert_eq!(machine.finals(), [StateId::new(0)]);
        assert_eq!(machine.designated_initials(), [StateId::new(0)]);
    }

    #[test]
    fn from_parts_rejects_nondeterminism_and_foreign_ids() {
        let alpha = Alphabet::from_bytes(*b"a");
        let a = SymbolId::new(0);
        let err = RiDfa::from_parts(
            alpha.clone(),
            2,
            [
                (StateId::new(0), a, StateId::new(0)),
                (StateId::new(0), a, StateId::new(1)),
            ],
            alloc::vec![alloc::vec![StateId::new(0)], alloc::vec![StateId::new(1)]],
            [StateId::new(0)],
            [],
            [],
            [StateId::new(0)],
            2,
        )
        .unwrap_err();
        assert!(matches!(err, AutomatonError::NondeterministicTransition { .. }));

        let err = RiDfa::from_parts(
            alpha,
            1,
            [],
            alloc::vec![alloc::vec![StateId::new(7)]],
            [StateId::new(0)],
            [],
            [],
            [StateId::new(0)],
            1,
        )
        .unwrap_err();
        assert!(matches!(err, AutomatonError::InvalidStateId { id: 7, .. }));
    }
}
