//! Small helpers for sorted `Vec<StateId>` sets, the canonical set
//! representation used throughout the crate (deterministic iteration order,
//! cheap hashing/keying).

use alloc::vec::Vec;

use crate::ids::StateId;

pub(crate) fn normalize(mut v: Vec<StateId>) -> Vec<StateId> {
    v.sort_unstable();
    v.dedup();
    v
}

pub(crate) fn contains(set: &[StateId], s: StateId) -> bool {
    set.binary_search(&s).is_ok()
}

pub(crate) fn insert(set: &mut Vec<StateId>, s: StateId) {
    if let Err(pos) = set.binary_search(&s) {
        set.insert(pos, s);
    }
}

pub(crate) fn intersect(a: &[StateId], b: &[StateId]) -> Vec<StateId> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub(crate) fn intersects(a: &[StateId], b: &[StateId]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => return true,
        }
    }
    false
}
