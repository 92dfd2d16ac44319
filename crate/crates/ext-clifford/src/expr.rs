//! Parsing and printing of algebra expressions.
//!
//! Grammar (whitespace insensitive, `*` is the tensor product):
//!
//! ```text
//! Expr := Term ("*" Term)*
//! Term := Atom ("^" Nat)?
//! Atom := "Cl(" Nat "," Nat ")"              -- Cl(p,q) = Cl(0,0|p,q)
//!       | "Cl(" Nat "," Nat "|" Nat "," Nat ")"
//!       | "K(" Nat "," Nat ")"               -- K(r,s) = Cl(r,s|0,0)
//!       | "R" | "C" | "H" | "D"              -- R, complexes, quaternions,
//!       | "(" Expr ")"                       --   double numbers R (+) R
//! ```

use std::fmt;

use thiserror::Error;

use crate::signature::{ExtSignature, REAL};
use crate::tensor::TensorList;

/// Abstract syntax of an algebra expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraExpr {
    Atom(ExtSignature),
    Tensor(Vec<AlgebraExpr>),
    Power(Box<AlgebraExpr>, u32),
}

impl AlgebraExpr {
    /// Flatten to the factor list of the tensor product the expression
    /// denotes. A zeroth power is the empty tensor product, i.e. R, so
    /// the result is always nonempty.
    pub fn flatten(&self) -> TensorList {
        let mut factors = Vec::new();
        self.collect(1, &mut factors);
        if factors.is_empty() {
            factors.push(REAL);
        }
        TensorList::new(factors).expect("nonempty by construction")
    }

    fn collect(&self, copies: u32, out: &mut Vec<ExtSignature>) {
        if copies == 0 {
            return;
        }
        match self {
            AlgebraExpr::Atom(sig) => {
                out.extend(std::iter::repeat_n(*sig, copies as usize));
            }
            AlgebraExpr::Tensor(parts) => {
                for _ in 0..copies {
                    for part in parts {
                        part.collect(1, out);
                    }
                }
            }
            AlgebraExpr::Power(base, exp) => {
                for _ in 0..copies {
                    base.collect(*exp, out);
                }
            }
        }
    }
}

impl fmt::Display for AlgebraExpr {
    /// Prints a form that reparses to an equal tree: tensor children that
    /// are themselves tensors get parentheses, as do non-atomic power
    /// bases.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraExpr::Atom(sig) => write!(f, "{sig}"),
            AlgebraExpr::Tensor(parts) => {
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " * ")?;
                    }
                    if matches!(part, AlgebraExpr::Tensor(_)) {
                        write!(f, "({part})")?;
                    } else {
                        write!(f, "{part}")?;
                    }
                }
                Ok(())
            }
            AlgebraExpr::Power(base, exp) => {
                if matches!(**base, AlgebraExpr::Atom(_)) {
                    write!(f, "{base}^{exp}")
                } else {
                    write!(f, "({base})^{exp}")
                }
            }
        }
    }
}

/// A syntax error with the byte offset it occurred at and a description
/// of what was expected there.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: expected {expected}, found {found}")]
pub struct ParseError {
    pub offset: usize,
    pub expected: &'static str,
    pub found: String,
}

/// Parse an algebra expression.
pub fn parse(input: &str) -> Result<AlgebraExpr, ParseError> {
    let mut parser = Parser {
        bytes: input.as_bytes(),
        pos: 0,
    };
    let expr = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.bytes.len() {
        return Err(parser.error("end of input"));
    }
    Ok(expr)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn error(&mut self, expected: &'static str) -> ParseError {
        self.skip_ws();
        let found = match self.bytes.get(self.pos) {
            Some(&b) => format!("{:?}", b as char),
            None => "end of input".to_string(),
        };
        ParseError {
            offset: self.pos,
            expected,
            found,
        }
    }

    fn eat(&mut self, token: u8, expected: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(token) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn nat(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("a number"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        digits.parse().map_err(|_| ParseError {
            offset: start,
            expected: "a number that fits in 32 bits",
            found: digits.to_string(),
        })
    }

    fn expr(&mut self) -> Result<AlgebraExpr, ParseError> {
        let first = self.term()?;
        let mut terms = vec![first];
        while self.peek() == Some(b'*') {
            self.pos += 1;
            terms.push(self.term()?);
        }
        if terms.len() == 1 {
            Ok(terms.pop().unwrap())
        } else {
            Ok(AlgebraExpr::Tensor(terms))
        }
    }

    fn term(&mut self) -> Result<AlgebraExpr, ParseError> {
        let atom = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let exp = self.nat()?;
            Ok(AlgebraExpr::Power(Box::new(atom), exp))
        } else {
            Ok(atom)
        }
    }

    fn atom(&mut self) -> Result<AlgebraExpr, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.eat(b')', "')'")?;
                Ok(inner)
            }
            Some(b'R') => {
                self.pos += 1;
                Ok(AlgebraExpr::Atom(REAL))
            }
            Some(b'H') => {
                self.pos += 1;
                Ok(AlgebraExpr::Atom(ExtSignature::clifford(0, 2)))
            }
            Some(b'D') => {
                self.pos += 1;
                Ok(AlgebraExpr::Atom(ExtSignature::clifford(1, 0)))
            }
            Some(b'C') if self.bytes.get(self.pos + 1) == Some(&b'l') => {
                self.pos += 2;
                self.eat(b'(', "'('")?;
                let a = self.nat()?;
                self.eat(b',', "','")?;
                let b = self.nat()?;
                match self.peek() {
                    Some(b'|') => {
                        self.pos += 1;
                        let p = self.nat()?;
                        self.eat(b',', "','")?;
                        let q = self.nat()?;
                        self.eat(b')', "')'")?;
                        Ok(AlgebraExpr::Atom(ExtSignature::new(a, b, p, q)))
                    }
                    Some(b')') => {
                        self.pos += 1;
                        Ok(AlgebraExpr::Atom(ExtSignature::clifford(a, b)))
                    }
                    _ => Err(self.error("')' or '|'")),
                }
            }
            Some(b'C') => {
                self.pos += 1;
                Ok(AlgebraExpr::Atom(ExtSignature::clifford(0, 1)))
            }
            Some(b'K') => {
                self.pos += 1;
                self.eat(b'(', "'('")?;
                let r = self.nat()?;
                self.eat(b',', "','")?;
                let s = self.nat()?;
                self.eat(b')', "')'")?;
                Ok(AlgebraExpr::Atom(ExtSignature::commutative(r, s)))
            }
            _ => Err(self.error("an atom: Cl(..), K(..), R, C, H, D or '('")),
        }
    }
}
