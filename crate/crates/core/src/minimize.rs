//! DFA minimization by partition refinement.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::dfa::Dfa;
use crate::ids::{StateId, SymbolId};
use crate::nerode::nerode_partition;

/// Returns the language-equivalent DFA with the minimal state count.
///
/// The result keeps the partial-delta convention: states that accept
/// nothing are dropped together with every transition into them, so the
/// dead state is never materialized. States are renumbered in breadth-first
/// order from the initial state.
pub fn minimize_dfa(dfa: &Dfa) -> Dfa {
    let trimmed = restrict_to_reachable(dfa);
    let partition = nerode_partition(&trimmed);
    let initial_class = partition.class_of(trimmed.initial());

    if partition.dead_class() == Some(initial_class) {
        // Empty language: one non-final state with no transitions.
        return Dfa::new(dfa.alphabet().clone(), 1, [], StateId::new(0), [], None)
            .expect("trivial machine is valid");
    }

    // Number the surviving classes in breadth-first order from the initial
    // class; transitions are read off the lowest-id representative.
    let class_rep: Vec<StateId> = partition.classes().iter().map(|c| c[0]).collect();
    let mut number_of = alloc::vec![usize::MAX; partition.classes().len()];
    let mut order = Vec::new();
    number_of[initial_class] = 0;
    order.push(initial_class);
    let mut work = VecDeque::from([initial_class]);
    while let Some(class) = work.pop_front() {
        for y in 0..trimmed.alphabet().len() {
            let Some(target) = trimmed.next(class_rep[class], SymbolId::new(y)) else {
                continue;
            };
            let target_class = partition.class_of(target);
            if partition.dead_class() == Some(target_class) {
                continue;
            }
            if number_of[target_class] == usize::MAX {
                number_of[target_class] = order.len();
                order.push(target_class);
                work.push_back(target_class);
            }
        }
    }

    let mut edges = Vec::new();
    for (new_id, &class) in order.iter().enumerate() {
        for y in 0..trimmed.alphabet().len() {
            let sym = SymbolId::new(y);
            if let Some(target) = trimmed.next(class_rep[class], sym) {
                let target_class = partition.class_of(target);
                if partition.dead_class() != Some(target_class) {
                    edges.push((
                        StateId::new(new_id),
                        sym,
                        StateId::new(number_of[target_class]),
                    ));
                }
            }
        }
    }
    let finals: Vec<StateId> = order
        .iter()
        .enumerate()
        .filter(|(_, &class)| trimmed.is_final(class_rep[class]))
        .map(|(new_id, _)| StateId::new(new_id))
        .collect();

    Dfa::new(dfa.alphabet().clone(), order.len(), edges, StateId::new(0), finals, None)
        .expect("quotient machine is deterministic")
}

/// The sub-machine of states reachable from the initial state, renumbered
/// in breadth-first order.
fn restrict_to_reachable(dfa: &Dfa) -> Dfa {
    let mut number_of = alloc::vec![usize::MAX; dfa.state_count()];
    let mut order = alloc::vec![dfa.initial()];
    number_of[dfa.initial().index()] = 0;
    let mut work = VecDeque::from([dfa.initial()]);
    while let Some(s) = work.pop_front() {
        for y in 0..dfa.alphabet().len() {
            if let Some(t) = dfa.next(s, SymbolId::new(y)) {
                if number_of[t.index()] == usize::MAX {
                    number_of[t.index()] = order.len();
                    order.push(t);
                    work.push_back(t);
                }
            }
        }
    }
    let mut edges = Vec::new();
    for (new_id, &s) in order.iter().enumerate() {
        for y in 0..dfa.alphabet().len() {
            if let Some(t) = dfa.next(s, SymbolId::new(y)) {
                edges.push((StateId::new(new_id), SymbolId::new(y), StateId::new(number_of[t.index()])));
            }
        }
    }
    let finals: Vec<StateId> = order
        .iter()
        .enumerate()
        .filter(|(_, &s)| dfa.is_final(s))
        .map(|(new_id, _)| StateId::new(new_id))
        .collect();
    Dfa::new(dfa.alphabet().clone(), order.len(), edges, StateId::new(0), finals, None)
        .expect("reachable restriction is deterministic")
}
