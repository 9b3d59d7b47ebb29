use std::sync::Arc;

use num_bigint::BigInt;

use crate::exact::Rational;

use super::polynomial::Polynomial;
use super::table::VariableTable;
use super::PolyError;

/// Parse expressions like `-2*x1*y2 + 3/4*l` or `(x+1)^2 - y`.
///
/// Accepted tokens: integer and rational literals (`7`, `3/4`), variable
/// names from the table, `+`, `-`, `*`, `^`, and parentheses.
pub fn parse_polynomial(
    input: &str,
    table: &Arc<VariableTable>,
) -> Result<Polynomial, PolyError> {
    let tokens = tokenize(input)?;
    let mut p = Parser { table, tokens, pos: 0 };
    let poly = p.expression()?;
    if p.pos != p.tokens.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(poly)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    let mut out = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            b'-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            b'*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            b'^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            b'/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            b'(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            b')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = input[start..i].parse().expect("digits parse");
                out.push((start, Tok::Int(n)));
            }
            _ if b.is_ascii_alphabetic() || b == b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((start, Tok::Ident(input[start..i].to_string())));
            }
            _ => {
                return Err(PolyError::Parse {
                    at: i,
                    msg: format!("unexpected character `{}`", b as char),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    table: &'a Arc<VariableTable>,
    tokens: Vec<(usize, Tok)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> PolyError {
        let at = self
            .tokens
            .get(self.pos)
            .map(|(i, _)| *i)
            .unwrap_or(usize::MAX);
        PolyError::Parse { at, msg: msg.to_string() }
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expression(&mut self) -> Result<Polynomial, PolyError> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                negate = true;
            }
            Some(Tok::Plus) => {
                self.pos += 1;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.try_add(&t)?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.try_sub(&t)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.try_mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| self.error("exponent out of range"))?;
                    Ok(base.pow(e))
                }
                _ => Err(self.error("expected integer exponent after `^`")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        match self.next() {
            Some(Tok::Int(n)) => {
                // rational literal: integer immediately followed by `/ integer`
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.next() {
                        Some(Tok::Int(d)) => {
                            if d == BigInt::from(0) {
                                return Err(self.error("zero denominator in literal"));
                            }
                            Ok(Polynomial::constant(
                                self.table.clone(),
                                Rational::new(n, d),
                            ))
                        }
                        _ => Err(self.error("expected integer after `/`")),
                    }
                } else {
                    Ok(Polynomial::constant(
                        self.table.clone(),
                        Rational::from_integer(n),
                    ))
                }
            }
            Some(Tok::Ident(name)) => Polynomial::var_named(self.table, &name),
            Some(Tok::Minus) => {
                let inner = self.atom()?;
                Ok(-&inner)
            }
            Some(Tok::LParen) => {
                let inner = self.expression()?;
                if self.next() != Some(Tok::RParen) {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            _ => Err(self.error("expected a literal, variable, or `(`")),
        }
    }
}
