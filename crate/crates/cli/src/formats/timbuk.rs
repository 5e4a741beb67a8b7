//! Loader for word automata in the Timbuk tree-automata text format.
//!
//! Word automata are encoded as unary tree automata: a nullary rule
//! `c -> q` marks `q` as an initial state (the leaf constant carries no
//! input symbol), and a unary rule `a(q) -> q'` is the edge q --a--> q'.
//! `Final States` become the NFA finals and the unary operators form the
//! alphabet (sorted by name, so loading is reproducible). Operators of
//! arity two or more are true tree constructors and are rejected.
//!
//! The syntax is whitespace-insensitive; `%` and `#` start comments that
//! run to the end of the line.

use thiserror::Error;

use ridfa_core::{Alphabet, AutomatonError, Nfa, StateId};

#[derive(Debug, Error)]
pub enum TimbukError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: operator {op:?} has arity {arity}; only word automata (arity 0 or 1) are supported")]
    UnsupportedArity { line: usize, op: String, arity: usize },
    #[error("invalid machine: {0}")]
    Validation(#[from] AutomatonError),
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, TimbukError> {
    Err(TimbukError::Parse { line, message: message.into() })
}

#[derive(Debug, Clone, PartialEq)]
struct Token {
    text: String,
    line: usize,
}

fn tokenize(input: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    for (i, raw_line) in input.lines().enumerate() {
        let line = i + 1;
        let code = raw_line.split(['%', '#']).next().unwrap_or("");
        let mut chars = code.char_indices().peekable();
        while let Some(&(start, c)) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
                continue;
            }
            if "():,".contains(c) {
                chars.next();
                tokens.push(Token { text: c.to_string(), line });
                continue;
            }
            if c == '-' && code[start..].starts_with("->") {
                chars.next();
                chars.next();
                tokens.push(Token { text: "->".into(), line });
                continue;
            }
            let mut end = start;
            while let Some(&(j, d)) = chars.peek() {
                if d.is_whitespace() || "():,".contains(d) || (d == '-' && code[j..].starts_with("->"))
                {
                    break;
                }
                end = j + d.len_utf8();
                chars.next();
            }
            tokens.push(Token { text: code[start..end].to_string(), line });
        }
    }
    tokens
}

struct Cursor {
    tokens: Vec<Token>,
    pos: usize,
}

impl Cursor {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn line(&self) -> usize {
        self.peek().map_or_else(
            || self.tokens.last().map_or(1, |t| t.line),
            |t| t.line,
        )
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, keyword: &str) -> Result<(), TimbukError> {
        match self.next() {
            Some(t) if t.text == keyword => Ok(()),
            Some(t) => err(t.line, format!("expected {keyword:?}, found {:?}", t.text)),
            None => err(self.line(), format!("expected {keyword:?}, found end of file")),
        }
    }

    fn ident(&mut self, what: &str) -> Result<Token, TimbukError> {
        match self.next() {
            Some(t) if !"():,".contains(t.text.as_str()) && t.text != "->" => Ok(t),
            Some(t) => err(t.line, format!("expected {what}, found {:?}", t.text)),
            None => err(self.line(), format!("expected {what}, found end of file")),
        }
    }

    fn eat(&mut self, text: &str) -> bool {
        if self.peek().is_some_and(|t| t.text == text) {
            self.pos += 1;
            true
        } else {
            false
        }
    }
}

/// Parses a document and builds the word NFA. Returns the machine together
/// with non-fatal diagnostics (currently: a machine without initial states
/// rejects every string).
pub fn load_timbuk(input: &str) -> Result<(Nfa, Vec<String>), TimbukError> {
    let mut cursor = Cursor { tokens: tokenize(input), pos: 0 };

    // Ops section: name:arity pairs.
    cursor.expect("Ops")?;
    let mut ops: Vec<(String, usize, usize)> = Vec::new(); // (name, arity, line)
    while cursor.peek().is_some_and(|t| t.text != "Automaton") {
        let name = cursor.ident("operator name")?;
        if !cursor.eat(":") {
            return err(name.line, format!("operator {:?} is missing its \":<arity>\"", name.text));
        }
        let arity_tok = cursor.ident("operator arity")?;
        let arity: usize = match arity_tok.text.parse() {
            Ok(a) => a,
            Err(_) => return err(arity_tok.line, format!("bad arity {:?}", arity_tok.text)),
        };
        if arity > 1 {
            return Err(TimbukError::UnsupportedArity { line: name.line, op: name.text, arity });
        }
        if ops.iter().any(|(n, _, _)| *n == name.text) {
            return err(name.line, format!("operator {:?} declared twice", name.text));
        }
        ops.push((name.text, arity, name.line));
    }

    cursor.expect("Automaton")?;
    let _name = cursor.ident("automaton name")?;

    // States section: names with an optional ":0" suffix. StateIds follow
    // declaration order.
    cursor.expect("States")?;
    let mut states: Vec<String> = Vec::new();
    while cursor.peek().is_some_and(|t| t.text != "Final") {
        let state = cursor.ident("state name")?;
        if cursor.eat(":") {
            cursor.ident("state arity")?;
        }
        if states.contains(&state.text) {
            return err(state.line, format!("state {:?} declared twice", state.text));
        }
        states.push(state.text);
    }
    let state_id = |tok: &Token| -> Result<StateId, TimbukError> {
        states
            .iter()
            .position(|s| *s == tok.text)
            .map(StateId::new)
            .ok_or(TimbukError::Parse {
                line: tok.line,
                message: format!("undeclared state {:?}", tok.text),
            })
    };

    cursor.expect("Final")?;
    cursor.expect("States")?;
    let mut finals: Vec<StateId> = Vec::new();
    while cursor.peek().is_some_and(|t| t.text != "Transitions") {
        let tok = cursor.ident("final state name")?;
        finals.push(state_id(&tok)?);
    }

    // The word alphabet is the unary operators, sorted by name.
    let mut unary: Vec<String> =
        ops.iter().filter(|(_, arity, _)| *arity == 1).map(|(n, _, _)| n.clone()).collect();
    unary.sort();
    let alphabet = Alphabet::from_symbols(unary)?;

    cursor.expect("Transitions")?;
    let mut edges = Vec::new();
    let mut initials = Vec::new();
    while let Some(head) = cursor.peek().cloned() {
        let op = cursor.ident("operator")?;
        let Some((_, declared_arity, _)) = ops.iter().find(|(n, _, _)| *n == op.text) else {
            return err(op.line, format!("undeclared operator {:?} in rule", op.text));
        };
        let mut arguments = Vec::new();
        if cursor.eat("(") {
            loop {
                arguments.push(cursor.ident("argument state")?);
                if cursor.eat(",") {
                    continue;
                }
                break;
            }
            cursor.expect(")")?;
        }
        if arguments.len() > 1 {
            return Err(TimbukError::UnsupportedArity {
                line: head.line,
                op: op.text,
                arity: arguments.len(),
            });
        }
        if arguments.len() != *declared_arity {
            return err(
                op.line,
                format!(
                    "operator {:?} declared with arity {declared_arity} but used with {}",
                    op.text,
                    arguments.len()
                ),
            );
        }
        cursor.expect("->")?;
        let target = state_id(&cursor.ident("target state")?)?;
        if arguments.is_empty() {
            initials.push(target);
        } else {
            let sym = alphabet.lookup(&op.text).expect("unary operator is in the alphabet");
            edges.push((state_id(&arguments[0])?, sym, target));
        }
    }

    let mut warnings = Vec::new();
    if initials.is_empty() {
        warnings.push(String::from(
            "no nullary rules: the machine has no initial states and rejects every string",
        ));
    }
    let nfa = Nfa::new(alphabet, states.len(), edges, initials, finals)?;
    Ok((nfa, warnings))
}
