//! Position-automaton construction.
//!
//! Each occurrence of a literal, class or `.` in the pattern becomes one
//! NFA state ("position"); one extra state is the initial. The machine is
//! ε-free by construction and has exactly `#positions + 1` states.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::alphabet::Alphabet;
use crate::ids::{StateId, SymbolId};
use crate::nfa::Nfa;

use super::RegexAst;

/// Builds the position NFA for `ast` over `alphabet`.
///
/// The alphabet must cover every literal in the tree (which the pair
/// returned by [`parse_regex`](super::parse_regex) guarantees).
pub fn regex_to_nfa(ast: &RegexAst, alphabet: &Alphabet) -> Nfa {
    let mut builder = Builder { alphabet, symbols_of: Vec::new(), follow: Vec::new() };
    let info = builder.analyze(ast);

    let position_count = builder.symbols_of.len();
    let initial = StateId::new(0);
    let state_of = |position: usize| StateId::new(position + 1);

    let mut edges = Vec::new();
    for &p in &info.first {
        for &sym in &builder.symbols_of[p] {
            edges.push((initial, sym, state_of(p)));
        }
    }
    for (p, follows) in builder.follow.iter().enumerate() {
        for &q in follows {
            for &sym in &builder.symbols_of[q] {
                edges.push((state_of(p), sym, state_of(q)));
            }
        }
    }

    let mut finals: Vec<StateId> = info.last.iter().map(|&p| state_of(p)).collect();
    if info.nullable {
        finals.push(initial);
    }

    Nfa::new(alphabet.clone(), position_count + 1, edges, [initial], finals)
        .expect("position automaton construction yields valid ids")
}

struct Info {
    nullable: bool,
    first: Vec<usize>,
    last: Vec<usize>,
}

struct Builder<'a> {
    alphabet: &'a Alphabet,
    /// Per position: the symbol ids it matches.
    symbols_of: Vec<Vec<SymbolId>>,
    /// Per position: which positions may follow it.
    follow: Vec<BTreeSet<usize>>,
}

impl Builder<'_> {
    fn position(&mut self, symbols: Vec<SymbolId>) -> Info {
        let p = self.symbols_of.len();
        self.symbols_of.push(symbols);
        self.follow.push(BTreeSet::new());
        Info { nullable: false, first: alloc::vec![p], last: alloc::vec![p] }
    }

    fn lookup(&self, byte: u8) -> SymbolId {
        self.alphabet
            .lookup_byte(byte)
            .expect("alphabet covers every literal of the pattern")
    }

    fn analyze(&mut self, ast: &RegexAst) -> Info {
        match ast {
            RegexAst::Epsilon => Info { nullable: true, first: Vec::new(), last: Vec::new() },
            RegexAst::Literal(b) => {
                let sym = self.lookup(*b);
                self.position(alloc::vec![sym])
            }
            RegexAst::Class(set) => {
                let syms = set.iter().map(|&b| self.lookup(b)).collect();
                self.position(syms)
            }
            RegexAst::AnyChar => {
                let syms = self.alphabet.ids().collect();
                self.position(syms)
            }
            RegexAst::Concat(children) => {
                let mut acc = Info { nullable: true, first: Vec::new(), last: Vec::new() };
                for child in children {
                    let info = self.analyze(child);
                    for &l in &acc.last {
                        self.follow[l].extend(info.first.iter().copied());
                    }
                    if acc.nullable {
                        acc.first.extend(info.first.iter().copied());
                    }
                    acc.last = if info.nullable {
                        let mut last = acc.last;
                        last.extend(info.last.iter().copied());
                        last
                    } else {
                        info.last
                    };
                    acc.nullable &= info.nullable;
                }
                acc
            }
            RegexAst::Alt(children) => {
                let mut acc = Info { nullable: false, first: Vec::new(), last: Vec::new() };
                for child in children {
                    let info = self.analyze(child);
                    acc.nullable |= info.nullable;
                    acc.first.extend(info.first);
                    acc.last.extend(info.last);
                }
                acc
            }
            RegexAst::Star(child) => {
                let info = self.analyze(child);
                for &l in &info.last {
                    self.follow[l].extend(info.first.iter().copied());
                }
                Info { nullable: true, ..info }
            }
            RegexAst::Plus(child) => {
                let info = self.analyze(child);
                for &l in &info.last {
                    self.follow[l].extend(info.first.iter().copied());
                }
                info
            }
            RegexAst::Opt(child) => {
                let info = self.analyze(child);
                Info { nullable: true, ..info }
            }
        }
    }
}
