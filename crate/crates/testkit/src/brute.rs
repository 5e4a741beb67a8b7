//! Brute-force oracles.
//!
//! Every function here answers a question the library also answers, but by
//! exhaustive or naive means and through code paths the library does not
//! share: a backtracking regex matcher over the AST, a throwaway subset
//! determinizer on `BTreeSet`s, product-space searches for distinguishing
//! strings, and plain enumeration of all small NFAs.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use ridfa_core::{Alphabet, DeterministicTable, Dfa, Nfa, RegexAst, StateId, SymbolId};

/// Backtracking membership test for a regex AST. `sigma` is the alphabet
/// `AnyChar` ranges over.
pub fn ast_matches(ast: &RegexAst, sigma: &[u8], text: &[u8]) -> bool {
    match ast {
        RegexAst::Epsilon => text.is_empty(),
        RegexAst::Literal(b) => text == [*b],
        RegexAst::Class(set) => text.len() == 1 && set.contains(&text[0]),
        RegexAst::AnyChar => text.len() == 1 && sigma.contains(&text[0]),
        RegexAst::Concat(children) => concat_matches(children, sigma, text),
        RegexAst::Alt(children) => children.iter().any(|c| ast_matches(c, sigma, text)),
        RegexAst::Star(child) => {
            text.is_empty()
                || (1..=text.len()).any(|cut| {
                    ast_matches(child, sigma, &text[..cut])
                        && ast_matches(ast, sigma, &text[cut..])
                })
        }
        RegexAst::Plus(child) => {
            // One iteration over the whole text, or a non-empty first piece
            // followed by more iterations.
            ast_matches(child, sigma, text)
                || (1..=text.len()).any(|cut| {
                    ast_matches(child, sigma, &text[..cut])
                        && ast_matches(ast, sigma, &text[cut..])
                })
        }
        RegexAst::Opt(child) => text.is_empty() || ast_matches(child, sigma, text),
    }
}

fn concat_matches(children: &[RegexAst], sigma: &[u8], text: &[u8]) -> bool {
    match children {
        [] => text.is_empty(),
        [only] => ast_matches(only, sigma, text),
        [head, rest @ ..] => (0..=text.len()).any(|cut| {
            ast_matches(head, sigma, &text[..cut]) && concat_matches(rest, sigma, &text[cut..])
        }),
    }
}

/// All strings over `0..alphabet_len` of length 0..=max_len, shortest first.
pub fn all_strings(alphabet_len: usize, max_len: usize) -> Vec<Vec<SymbolId>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<SymbolId>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for prefix in &layer {
            for y in 0..alphabet_len {
                let mut s = prefix.clone();
                s.push(SymbolId::new(y));
                next.push(s);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// A shortest string telling states `a` and `b` of a deterministic table
/// apart (one accepts it, the other does not), or `None` when the states
/// are language-equivalent. Breadth-first search over the pair space, with
/// the dead state modelled as `None`.
pub fn distinguishing_string<T: DeterministicTable>(
    table: &T,
    a: StateId,
    b: StateId,
) -> Option<Vec<SymbolId>> {
    let accepting = |s: Option<StateId>| s.is_some_and(|x| table.is_final(x));
    let mut seen = BTreeSet::new();
    let mut queue: VecDeque<(Option<StateId>, Option<StateId>, Vec<SymbolId>)> = VecDeque::new();
    queue.push_back((Some(a), Some(b), Vec::new()));
    seen.insert((Some(a), Some(b)));
    while let Some((pa, pb, path)) = queue.pop_front() {
        if accepting(pa) != accepting(pb) {
            return Some(path);
        }
        if pa.is_none() && pb.is_none() {
            continue;
        }
        for y in 0..table.alphabet_len() {
            let sym = SymbolId::new(y);
            let na = pa.and_then(|x| table.next(x, sym));
            let nb = pb.and_then(|x| table.next(x, sym));
            if seen.insert((na, nb)) {
                let mut p = path.clone();
                p.push(sym);
                queue.push_back((na, nb, p));
            }
        }
    }
    None
}

/// Throwaway subset determinization used only to compare NFA languages.
/// Independent of the library's construction: `BTreeSet` subsets, no state
/// numbering guarantees.
pub struct NaiveDfa {
    pub table: Vec<Vec<Option<usize>>>,
    pub finals: Vec<bool>,
    pub initial: usize,
    pub alphabet_len: usize,
}

pub fn determinize_naive(nfa: &Nfa) -> NaiveDfa {
    let alphabet_len = nfa.alphabet().len();
    let start: BTreeSet<StateId> = nfa.initials().iter().copied().collect();
    let mut ids: BTreeMap<BTreeSet<StateId>, usize> = BTreeMap::new();
    let mut subsets = vec![start.clone()];
    ids.insert(start, 0);
    let mut table: Vec<Vec<Option<usize>>> = Vec::new();
    let mut work = VecDeque::from([0usize]);
    while let Some(i) = work.pop_front() {
        let subset = subsets[i].clone();
        let mut row = Vec::with_capacity(alphabet_len);
        for y in 0..alphabet_len {
            let mut next = BTreeSet::new();
            for &q in &subset {
                next.extend(nfa.successors(q, SymbolId::new(y)).iter().copied());
            }
            if next.is_empty() {
                row.push(None);
                continue;
            }
            let id = *ids.entry(next.clone()).or_insert_with(|| {
                subsets.push(next);
                work.push_back(subsets.len() - 1);
                subsets.len() - 1
            });
            row.push(Some(id));
        }
        if table.len() <= i {
            table.resize_with(i + 1, Vec::new);
        }
        table[i] = row;
    }
    let finals = subsets
        .iter()
        .map(|subset| subset.iter().any(|&q| nfa.finals().contains(&q)))
        .collect();
    NaiveDfa { table, finals, initial: 0, alphabet_len }
}

/// Language equality of two NFAs over alphabets of equal size (symbols are
/// matched by index). Product search over the naive determinizations.
pub fn nfa_equiv(a: &Nfa, b: &Nfa) -> bool {
    assert_eq!(a.alphabet().len(), b.alphabet().len());
    let da = determinize_naive(a);
    let db = determinize_naive(b);
    let mut seen = BTreeSet::new();
    let mut queue: VecDeque<(Option<usize>, Option<usize>)> = VecDeque::new();
    queue.push_back((Some(da.initial), Some(db.initial)));
    seen.insert((Some(da.initial), Some(db.initial)));
    while let Some((pa, pb)) = queue.pop_front() {
        let fa = pa.is_some_and(|x| da.finals[x]);
        let fb = pb.is_some_and(|x| db.finals[x]);
        if fa != fb {
            return false;
        }
        if pa.is_none() && pb.is_none() {
            continue;
        }
        for y in 0..da.alphabet_len {
            let na = pa.and_then(|x| da.table[x][y]);
            let nb = pb.and_then(|x| db.table[x][y]);
            if seen.insert((na, nb)) {
                queue.push_back((na, nb));
            }
        }
    }
    true
}

/// Canonical form of the reachable part of a DFA: breadth-first relabelling
/// from the initial state with symbol-ordered edges. Two DFAs are isomorphic
/// on their reachable parts iff their canonical forms are equal.
#[derive(Debug, PartialEq, Eq)]
pub struct CanonicalDfa {
    pub state_count: usize,
    pub table: Vec<Vec<Option<usize>>>,
    pub finals: Vec<bool>,
}

pub fn canonical_dfa(dfa: &Dfa) -> CanonicalDfa {
    let mut relabel: BTreeMap<StateId, usize> = BTreeMap::new();
    let mut order = vec![dfa.initial()];
    relabel.insert(dfa.initial(), 0);
    let mut cursor = 0;
    while cursor < order.len() {
        let s = order[cursor];
        cursor += 1;
        for y in 0..dfa.alphabet().len() {
            if let Some(t) = dfa.next(s, SymbolId::new(y)) {
                relabel.entry(t).or_insert_with(|| {
                    order.push(t);
                    order.len() - 1
                });
            }
        }
    }
    let table = order
        .iter()
        .map(|&s| {
            (0..dfa.alphabet().len())
                .map(|y| dfa.next(s, SymbolId::new(y)).map(|t| relabel[&t]))
                .collect()
        })
        .collect();
    let finals = order.iter().map(|&s| dfa.is_final(s)).collect();
    CanonicalDfa { state_count: order.len(), table, finals }
}

/// Whether some NFA with fewer states accepts the same language.
pub fn has_smaller_equivalent_nfa(nfa: &Nfa) -> bool {
    smallest_equivalent_nfa_below(nfa, nfa.state_count()).is_some()
}

/// The number of states of a state-minimal NFA for the language, found by
/// plain enumeration of all machines with fewer states.
pub fn minimal_nfa_state_count(nfa: &Nfa) -> usize {
    smallest_equivalent_nfa_below(nfa, nfa.state_count())
        .map_or(nfa.state_count(), |machine| machine.state_count())
}

/// The smallest equivalent NFA with fewer than `bound` states, if one
/// exists, by enumerating every relation/initial-set/final-set combination
/// size by size. Only usable for tiny instances; the relation-bit guard
/// keeps runaway calls out of the test suite.
pub fn smallest_equivalent_nfa_below(nfa: &Nfa, bound: usize) -> Option<Nfa> {
    let alphabet_len = nfa.alphabet().len();
    for smaller in 1..bound {
        let bits = smaller * smaller * alphabet_len;
        assert!(bits <= 10, "exhaustive NFA search too large ({bits} relation bits)");
        let alpha = Alphabet::from_bytes(
            nfa.alphabet().symbols().iter().map(|s| s.as_bytes()[0]),
        );
        for relation in 0u32..(1 << bits) {
            let mut edges = Vec::new();
            let mut bit = 0;
            for q in 0..smaller {
                for y in 0..alphabet_len {
                    for t in 0..smaller {
                        if relation >> bit & 1 == 1 {
                            edges.push((StateId::new(q), SymbolId::new(y), StateId::new(t)));
                        }
                        bit += 1;
                    }
                }
            }
            for initials in 0u32..(1 << smaller) {
                for finals in 0u32..(1 << smaller) {
                    let init: Vec<StateId> = (0..smaller)
                        .filter(|&i| initials >> i & 1 == 1)
                        .map(StateId::new)
                        .collect();
                    let fin: Vec<StateId> = (0..smaller)
                        .filter(|&i| finals >> i & 1 == 1)
                        .map(StateId::new)
                        .collect();
                    let candidate =
                        Nfa::new(alpha.clone(), smaller, edges.iter().copied(), init, fin)
                            .unwrap();
                    if nfa_equiv(nfa, &candidate) {
                        return Some(candidate);
                    }
                }
            }
        }
    }
    None
}
