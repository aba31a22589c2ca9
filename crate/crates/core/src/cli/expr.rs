//! Space expressions such as `S(1)*S(1)` or `S(0)*Sym2(V(1))`, evaluated
//! to torus characters.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor ('*' factor)*
//! factor := ('S' | 'V') '(' int ')'
//!         | ('Sym2' | 'Wedge2' | 'Dual') '(' expr ')'
//!         | '(' expr ')'
//! ```

use std::fmt;

use crate::rep::{Character, Factor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Zero-based character offset.
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at column {}: {}", self.pos + 1, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => self.err(format!("expected `{c}`, found `{d}`")),
            None => self.err(format!("expected `{c}`, found end of input")),
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.chars.get(self.pos) == Some(&'-') {
            self.pos += 1;
        }
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().or_else(|_| {
            self.pos = start;
            self.err("expected an integer")
        })
    }

    fn expr(&mut self) -> Result<Character, ParseError> {
        let mut acc = self.term()?;
        while self.peek() == Some('+') {
            self.pos += 1;
            acc = acc.add(&self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Character, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Character, ParseError> {
        if self.peek() == Some('(') {
            self.pos += 1;
            let inner = self.expr()?;
            self.expect(')')?;
            return Ok(inner);
        }
        let start = self.pos;
        let name = self.ident();
        let value = match name.as_str() {
            "S" | "V" => {
                self.expect('(')?;
                let m = self.int()?;
                let f = if name == "S" { Factor::s(m) } else { Factor::v(m) };
                f.character()
            }
            "Sym2" | "Wedge2" | "Dual" => {
                self.expect('(')?;
                let inner = self.expr()?;
                match name.as_str() {
                    "Sym2" => inner.sym2(),
                    "Wedge2" => inner.wedge2(),
                    _ => inner.invert_weights(),
                }
            }
            "" => {
                let msg = match self.peek() {
                    Some(c) => format!("unexpected `{c}`"),
                    None => "unexpected end of input".to_string(),
                };
                return self.err(msg);
            }
            _ => {
                self.pos = start;
                self.skip_ws();
                return self.err(format!("unknown space `{name}`"));
            }
        };
        self.expect(')')?;
        Ok(value)
    }
}

/// Parses and evaluates a space expression to its character.
pub fn parse_space(input: &str) -> Result<Character, ParseError> {
    let mut p = Parser {
        chars: input.chars().collect(),
        pos: 0,
    };
    let value = p.expr()?;
    match p.peek() {
        None => Ok(value),
        Some(c) => p.err(format!("unexpected `{c}` after expression")),
    }
}
