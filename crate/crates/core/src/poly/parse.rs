//! Polynomial text grammar.
//!
//! ```text
//! expr   := sign? term (("+" | "-") term)*
//! term   := unary ("*" unary)*
//! unary  := "-" unary | power
//! power  := atom ("^" digits)?
//! atom   := number | ident | "(" expr ")"
//! number := digits ("/" digits)?
//! ```
//!
//! Whitespace is ignored between tokens. Juxtaposition (`2x`, `a b`) is rejected.

use super::{Poly, Rational, VarOrder};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;

/// Parses one polynomial; errors report line 1.
pub fn parse_poly(text: &str, order: &VarOrder) -> Result<Poly> {
    parse_poly_line(text, order, 1)
}

/// Parses one polynomial found on line `line` of a larger document.
pub fn parse_poly_line(text: &str, order: &VarOrder, line: usize) -> Result<Poly> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0, line, order };
    p.skip_ws();
    if p.at_end() {
        return Err(p.err("empty polynomial"));
    }
    let e = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        let c = p.chars[p.pos];
        return Err(p.err(&format!("unexpected {c:?}")));
    }
    Ok(e)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    order: &'a VarOrder,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax { line: self.line, col: self.pos + 1, msg: msg.to_string() }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn skip_ws(&mut self) {
        while !self.at_end() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = match self.peek() {
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            Some('-') => {
                self.pos += 1;
                -self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = acc * self.unary()?;
        }
        if let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' || c == '(' {
                return Err(self.err("missing operator (juxtaposition is not allowed)"));
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let d = self.digits().ok_or_else(|| self.err("expected exponent"))?;
            let e: usize = d.parse().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while !self.at_end() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits().unwrap().parse().unwrap();
                if self.peek() == Some('/') {
                    self.pos += 1;
                    self.skip_ws();
                    let d: BigInt = self
                        .digits()
                        .ok_or_else(|| self.err("expected denominator"))?
                        .parse()
                        .unwrap();
                    if d.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    return Ok(Poly::constant(Rational::new(n, d)));
                }
                Ok(Poly::constant(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while !self.at_end() && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                match self.order.index_of(&name) {
                    Some(k) => Ok(Poly::var(k)),
                    None => {
                        self.pos = start;
                        Err(Error::UnknownVariable(format!(
                            "{name} (line {}, column {})",
                            self.line,
                            start + 1
                        )))
                    }
                }
            }
            Some(c) => Err(self.err(&format!("unexpected {c:?}"))),
        }
    }
}
