//! Recursive-descent parser for the supported pattern subset.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::alphabet::Alphabet;
use crate::error::RegexError;

use super::{AlphabetMode, RegexAst};

/// Characters with syntactic meaning outside classes. `{`, `}`, `^` and `$`
/// are reserved (repetition counts and anchors are unsupported) so that
/// they never slip through as literals.
const METACHARACTERS: &[u8] = b"()|*+?[].\\{}^$";

const MAX_NESTING: usize = 1000;

/// Parses a pattern and returns its syntax tree together with the effective
/// alphabet. Errors carry the byte offset of the offending character.
pub fn parse_regex(
    pattern: &str,
    mode: AlphabetMode,
) -> Result<(RegexAst, Alphabet), RegexError> {
    if pattern.is_empty() {
        return Err(RegexError::new(0, "empty pattern"));
    }
    if let Some(pos) = pattern.bytes().position(|b| !b.is_ascii()) {
        return Err(RegexError::new(pos, "non-ASCII byte; patterns are byte regexes"));
    }
    let mut parser = Parser { input: pattern.as_bytes(), pos: 0, depth: 0 };
    let ast = parser.alternation()?;
    if parser.pos < parser.input.len() {
        return Err(parser.error("unexpected character"));
    }

    let alphabet = match mode {
        AlphabetMode::Bytes => {
            let mut bytes = BTreeSet::new();
            collect_bytes(&ast, &mut bytes);
            Alphabet::from_bytes(bytes)
        }
        AlphabetMode::Custom(alphabet) => {
            let mut bytes = BTreeSet::new();
            collect_bytes(&ast, &mut bytes);
            if let Some(&b) = bytes.iter().find(|&&b| alphabet.lookup_byte(b).is_none()) {
                return Err(RegexError::new(
                    0,
                    alloc::format!("literal {:?} is not in the supplied alphabet", b as char),
                ));
            }
            alphabet
        }
    };
    Ok((ast, alphabet))
}

fn collect_bytes(ast: &RegexAst, out: &mut BTreeSet<u8>) {
    match ast {
        RegexAst::Literal(b) => {
            out.insert(*b);
        }
        RegexAst::Class(set) => out.extend(set.iter().copied()),
        RegexAst::Concat(children) | RegexAst::Alt(children) => {
            children.iter().for_each(|c| collect_bytes(c, out))
        }
        RegexAst::Star(c) | RegexAst::Plus(c) | RegexAst::Opt(c) => collect_bytes(c, out),
        RegexAst::Epsilon | RegexAst::AnyChar => {}
    }
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: &str) -> RegexError {
        RegexError::new(self.pos, message)
    }

    fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn alternation(&mut self) -> Result<RegexAst, RegexError> {
        let mut branches = alloc::vec![self.concatenation()?];
        while self.peek() == Some(b'|') {
            self.pos += 1;
            branches.push(self.concatenation()?);
        }
        Ok(if branches.len() == 1 { branches.pop().unwrap() } else { RegexAst::Alt(branches) })
    }

    fn concatenation(&mut self) -> Result<RegexAst, RegexError> {
        let mut factors = Vec::new();
        while let Some(b) = self.peek() {
            if b == b'|' || b == b')' {
                break;
            }
            factors.push(self.repetition()?);
        }
        match factors.len() {
            0 => Err(self.error("empty pattern branch")),
            1 => Ok(factors.pop().unwrap()),
            _ => Ok(RegexAst::Concat(factors)),
        }
    }

    fn repetition(&mut self) -> Result<RegexAst, RegexError> {
        let mut node = self.atom()?;
        while let Some(op) = self.peek() {
            node = match op {
                b'*' => RegexAst::Star(alloc::boxed::Box::new(node)),
                b'+' => RegexAst::Plus(alloc::boxed::Box::new(node)),
                b'?' => RegexAst::Opt(alloc::boxed::Box::new(node)),
                _ => break,
            };
            self.pos += 1;
        }
        Ok(node)
    }

    fn atom(&mut self) -> Result<RegexAst, RegexError> {
        match self.peek() {
            None => Err(self.error("unexpected end of pattern")),
            Some(b'(') => {
                let open = self.pos;
                if self.depth >= MAX_NESTING {
                    return Err(self.error("pattern nesting too deep"));
                }
                self.depth += 1;
                self.pos += 1;
                // An inner failure at end of input means the group was
                // never closed; point at the opening paren.
                let inner = match self.alternation() {
                    Ok(inner) => inner,
                    Err(e) if e.offset >= self.input.len() => {
                        return Err(RegexError::new(open, "unbalanced parenthesis"));
                    }
                    Err(e) => return Err(e),
                };
                if self.peek() != Some(b')') {
                    return Err(RegexError::new(open, "unbalanced parenthesis"));
                }
                self.pos += 1;
                self.depth -= 1;
                Ok(inner)
            }
            Some(b'[') => self.class(),
            Some(b'.') => {
                self.pos += 1;
                Ok(RegexAst::AnyChar)
            }
            Some(b'\\') => Ok(RegexAst::Literal(self.escape()?)),
            Some(b'*') | Some(b'+') | Some(b'?') => {
                Err(self.error("repetition operator with nothing to repeat"))
            }
            Some(b) if METACHARACTERS.contains(&b) => {
                Err(self.error("reserved character; escape it to match literally"))
            }
            Some(b) => {
                self.pos += 1;
                Ok(RegexAst::Literal(b))
            }
        }
    }

    /// `\x` where `x` is a metacharacter; any other escape is an error.
    fn escape(&mut self) -> Result<u8, RegexError> {
        self.pos += 1;
        match self.peek() {
            None => Err(self.error("dangling escape")),
            Some(b) if METACHARACTERS.contains(&b) || b == b'-' => {
                self.pos += 1;
                Ok(b)
            }
            Some(_) => Err(self.error("unsupported escape")),
        }
    }

    fn class(&mut self) -> Result<RegexAst, RegexError> {
        let open = self.pos;
        self.pos += 1;
        let mut set = BTreeSet::new();
        loop {
            match self.peek() {
                None => return Err(RegexError::new(open, "unterminated character class")),
                Some(b']') => {
                    self.pos += 1;
                    break;
                }
                Some(_) => {
                    let lo = self.class_member()?;
                    if self.peek() == Some(b'-') && self.input.get(self.pos + 1) != Some(&b']') {
                        self.pos += 1;
                        let hi_at = self.pos;
                        let hi = self.class_member()?;
                        if lo > hi {
                            return Err(RegexError::new(hi_at, "range is out of order"));
                        }
                        set.extend(lo..=hi);
                    } else {
                        set.insert(lo);
                    }
                }
            }
        }
        if set.is_empty() {
            return Err(RegexError::new(open, "empty character class"));
        }
        Ok(RegexAst::Class(set))
    }

    fn class_member(&mut self) -> Result<u8, RegexError> {
        match self.peek() {
            None => Err(self.error("unterminated character class")),
            Some(b'\\') => self.escape(),
            Some(b @ (b'^' | b'[' | b'-')) => {
                let _ = b;
                Err(self.error("reserved inside class; escape it to match literally"))
            }
            Some(b) => {
                self.pos += 1;
                Ok(b)
            }
        }
    }
}
