//! The versioned automaton document: a JSON serialization of NFA, DFA and
//! RI-DFA machines that round-trips losslessly, state ids included.
//!
//! Loading validates everything the in-memory constructors validate, so a
//! corrupted document (duplicate deterministic edges, out-of-range ids,
//! contents referencing unknown NFA states) fails with a diagnostic rather
//! than producing a broken machine.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use ridfa_core::{Alphabet, AutomatonError, Dfa, MachineRef, Nfa, RiDfa, StateId, SymbolId};

pub const FORMAT_VERSION: u32 = 1;

/// An owned machine of any kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Automaton {
    Nfa(Nfa),
    Dfa(Dfa),
    RiDfa(RiDfa),
}

impl Automaton {
    pub fn kind(&self) -> &'static str {
        match self {
            Automaton::Nfa(_) => "nfa",
            Automaton::Dfa(_) => "dfa",
            Automaton::RiDfa(_) => "ridfa",
        }
    }

    pub fn machine_ref(&self) -> MachineRef<'_> {
        match self {
            Automaton::Nfa(nfa) => MachineRef::Nfa(nfa),
            Automaton::Dfa(dfa) => MachineRef::Dfa(dfa),
            Automaton::RiDfa(machine) => MachineRef::RiDfa(machine),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        match self {
            Automaton::Nfa(nfa) => nfa.alphabet(),
            Automaton::Dfa(dfa) => dfa.alphabet(),
            Automaton::RiDfa(machine) => machine.alphabet(),
        }
    }
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("document is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format_version {found} (this build reads version {FORMAT_VERSION})")]
    VersionMismatch { found: u32 },
    #[error("document references symbol {0:?} outside its own alphabet")]
    UnknownSymbol(String),
    #[error("invalid machine: {0}")]
    Validation(#[from] AutomatonError),
}

#[derive(Serialize, Deserialize)]
struct Document {
    format_version: u32,
    #[serde(flatten)]
    machine: MachineDoc,
}

type EdgeDoc = (u32, String, u32);

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum MachineDoc {
    Nfa {
        alphabet: Vec<String>,
        state_count: usize,
        initials: Vec<u32>,
        finals: Vec<u32>,
        transitions: Vec<EdgeDoc>,
    },
    Dfa {
        alphabet: Vec<String>,
        state_count: usize,
        initial: u32,
        finals: Vec<u32>,
        transitions: Vec<EdgeDoc>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        origin: Option<Vec<Vec<u32>>>,
    },
    Ridfa {
        alphabet: Vec<String>,
        state_count: usize,
        nfa_state_count: usize,
        interface: Vec<u32>,
        designated: Vec<u32>,
        finals: Vec<u32>,
        content: Vec<Vec<u32>>,
        delegation: Vec<(u32, u32)>,
        transitions: Vec<EdgeDoc>,
    },
}

fn s(id: u32) -> StateId {
    StateId::new(id as usize)
}

fn edges_out(
    alphabet: &Alphabet,
    next: impl Fn(StateId, SymbolId) -> Option<StateId>,
    state_count: usize,
) -> Vec<EdgeDoc> {
    let mut out = Vec::new();
    for q in 0..state_count {
        for y in alphabet.ids() {
            if let Some(t) = next(StateId::new(q), y) {
                out.push((q as u32, alphabet.symbol(y).to_string(), t.index() as u32));
            }
        }
    }
    out
}

fn edges_in(
    alphabet: &Alphabet,
    edges: Vec<EdgeDoc>,
) -> Result<Vec<(StateId, SymbolId, StateId)>, DocumentError> {
    edges
        .into_iter()
        .map(|(from, sym, to)| {
            let sym = alphabet
                .lookup(&sym)
                .ok_or(DocumentError::UnknownSymbol(sym))?;
            Ok((s(from), sym, s(to)))
        })
        .collect()
}

/// Serializes a machine as a pretty-printed JSON document.
pub fn save_automaton(machine: &Automaton) -> String {
    let doc = match machine {
        Automaton::Nfa(nfa) => MachineDoc::Nfa {
            alphabet: nfa.alphabet().symbols().to_vec(),
            state_count: nfa.state_count(),
            initials: nfa.initials().iter().map(|q| q.index() as u32).collect(),
            finals: nfa.finals().iter().map(|q| q.index() as u32).collect(),
            transitions: (0..nfa.state_count())
                .flat_map(|q| {
                    nfa.alphabet().ids().flat_map(move |y| {
                        nfa.successors(StateId::new(q), y).iter().map(move |t| {
                            (q as u32, nfa.alphabet().symbol(y).to_string(), t.index() as u32)
                        })
                    })
                })
                .collect(),
        },
        Automaton::Dfa(dfa) => MachineDoc::Dfa {
            alphabet: dfa.alphabet().symbols().to_vec(),
            state_count: dfa.state_count(),
            initial: dfa.initial().index() as u32,
            finals: dfa.finals().iter().map(|q| q.index() as u32).collect(),
            transitions: edges_out(dfa.alphabet(), |q, y| dfa.next(q, y), dfa.state_count()),
            origin: dfa.origins().map(|origins| {
                origins
                    .iter()
                    .map(|subset| subset.iter().map(|q| q.index() as u32).collect())
                    .collect()
            }),
        },
        Automaton::RiDfa(m) => MachineDoc::Ridfa {
            alphabet: m.alphabet().symbols().to_vec(),
            state_count: m.state_count(),
            nfa_state_count: m.nfa_state_count(),
            interface: m.interface().iter().map(|q| q.index() as u32).collect(),
            designated: m.designated_initials().iter().map(|q| q.index() as u32).collect(),
            finals: m.finals().iter().map(|q| q.index() as u32).collect(),
            content: m
                .states()
                .map(|p| m.content(p).iter().map(|q| q.index() as u32).collect())
                .collect(),
            delegation: m
                .delegation()
                .iter()
                .map(|&(src, del)| (src.index() as u32, del.index() as u32))
                .collect(),
            transitions: edges_out(m.alphabet(), |q, y| m.next(q, y), m.state_count()),
        },
    };
    let doc = Document { format_version: FORMAT_VERSION, machine: doc };
    let mut out = serde_json::to_string_pretty(&doc).expect("document serialization");
    out.push('\n');
    out
}

/// Parses and validates a machine document.
pub fn load_automaton(input: &str) -> Result<Automaton, DocumentError> {
    let doc: Document = serde_json::from_str(input)?;
    if doc.format_version != FORMAT_VERSION {
        return Err(DocumentError::VersionMismatch { found: doc.format_version });
    }
    match doc.machine {
        MachineDoc::Nfa { alphabet, state_count, initials, finals, transitions } => {
            let alphabet = Alphabet::from_symbols(alphabet)?;
            let edges = edges_in(&alphabet, transitions)?;
            let nfa = Nfa::new(
                alphabet,
                state_count,
                edges,
                initials.into_iter().map(s),
                finals.into_iter().map(s),
            )?;
            Ok(Automaton::Nfa(nfa))
        }
        MachineDoc::Dfa { alphabet, state_count, initial, finals, transitions, origin } => {
            let alphabet = Alphabet::from_symbols(alphabet)?;
            let edges = edges_in(&alphabet, transitions)?;
            let origin = origin.map(|origins| {
                origins
                    .into_iter()
                    .map(|subset| subset.into_iter().map(s).collect())
                    .collect()
            });
            let dfa = Dfa::new(
                alphabet,
                state_count,
                edges,
                s(initial),
                finals.into_iter().map(s),
                origin,
            )?;
            Ok(Automaton::Dfa(dfa))
        }
        MachineDoc::Ridfa {
            alphabet,
            state_count,
            nfa_state_count,
            interface,
            designated,
            finals,
            content,
            delegation,
            transitions,
        } => {
            let alphabet = Alphabet::from_symbols(alphabet)?;
            let edges = edges_in(&alphabet, transitions)?;
            let machine = RiDfa::from_parts(
                alphabet,
                state_count,
                edges,
                content
                    .into_iter()
                    .map(|subset| subset.into_iter().map(s).collect())
                    .collect(),
                interface.into_iter().map(s),
                finals.into_iter().map(s),
                delegation.into_iter().map(|(a, b)| (s(a), s(b))),
                designated.into_iter().map(s),
                nfa_state_count,
            )?;
            Ok(Automaton::RiDfa(machine))
        }
    }
}
