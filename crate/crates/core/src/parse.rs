//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" factor) | ("/" integer))*
//! unary  := "-" unary | power
//! power  := atom ("^" natural)?
//! atom   := integer | identifier | "(" expr ")"
//! ```
//!
//! Multiplication must be written out; `2x` and `x y` are rejected.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::poly::{Coeff, Poly, VarContext};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    UnexpectedToken(String),
    UnknownVariable(String),
    ExponentNotNatural,
    InvalidDivisor,
    DivisionByZero,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::UnexpectedEnd => f.write_str("unexpected end of input"),
            ParseErrorKind::UnexpectedToken(t) => write!(f, "unexpected token `{t}`"),
            ParseErrorKind::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            ParseErrorKind::ExponentNotNatural => f.write_str("exponent must be a natural number literal"),
            ParseErrorKind::InvalidDivisor => f.write_str("only division by an integer literal is allowed"),
            ParseErrorKind::DivisionByZero => f.write_str("division by zero"),
        }
    }
}

/// Parse failure with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: usize,
}

/// Expression text together with the variables it may use.
#[derive(Debug, Clone)]
pub struct ExprSource<'a> {
    pub text: &'a str,
    pub context: Arc<VarContext>,
}

impl<'a> ExprSource<'a> {
    pub fn new(text: &'a str, context: &Arc<VarContext>) -> Self {
        ExprSource {
            text,
            context: context.clone(),
        }
    }

    pub fn parse(&self) -> Result<Poly, ParseError> {
        parse_poly(self.text, &self.context)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "{n}"),
            Tok::Ident(s) => f.write_str(s),
            Tok::Plus => f.write_str("+"),
            Tok::Minus => f.write_str("-"),
            Tok::Star => f.write_str("*"),
            Tok::Slash => f.write_str("/"),
            Tok::Caret => f.write_str("^"),
            Tok::LParen => f.write_str("("),
            Tok::RParen => f.write_str(")"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                toks.push((Tok::Int(n), start));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                toks.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('\u{fffd}');
                return Err(ParseError {
                    kind: ParseErrorKind::UnexpectedChar(ch),
                    position: start,
                });
            }
        };
        toks.push((tok, start));
        i += 1;
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    ctx: &'a Arc<VarContext>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, p)| *p)
    }

    fn err<T>(&self, kind: ParseErrorKind) -> Result<T, ParseError> {
        Err(ParseError {
            kind,
            position: self.offset(),
        })
    }

    fn unexpected<T>(&self) -> Result<T, ParseError> {
        match self.peek() {
            Some(t) => self.err(ParseErrorKind::UnexpectedToken(t.to_string())),
            None => self.err(ParseErrorKind::UnexpectedEnd),
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    match self.peek() {
                        Some(Tok::Int(n)) if n.is_zero() => return self.err(ParseErrorKind::DivisionByZero),
                        Some(Tok::Int(n)) => {
                            let inv = Coeff::new(BigInt::from(1), n.clone());
                            self.pos += 1;
                            acc = acc.scale(&inv);
                        }
                        None => return self.err(ParseErrorKind::UnexpectedEnd),
                        Some(_) => return self.err(ParseErrorKind::InvalidDivisor),
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let e = match self.peek() {
                Some(Tok::Int(n)) => match u32::try_from(n) {
                    Ok(e) => e,
                    Err(_) => return self.err(ParseErrorKind::ExponentNotNatural),
                },
                None => return self.err(ParseErrorKind::UnexpectedEnd),
                Some(_) => return self.err(ParseErrorKind::ExponentNotNatural),
            };
            self.pos += 1;
            if let Some(Tok::Caret) = self.peek() {
                return self.unexpected();
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Poly::constant(self.ctx, Coeff::from_integer(n)))
            }
            Some(Tok::Ident(name)) => match self.ctx.index_of(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(Poly::var(self.ctx, i).expect("index from context"))
                }
                None => self.err(ParseErrorKind::UnknownVariable(name)),
            },
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.unexpected(),
                }
            }
            _ => self.unexpected(),
        }
    }
}

/// Parses `text` over the variables of `ctx` and returns the expanded polynomial.
pub fn parse_poly(text: &str, ctx: &Arc<VarContext>) -> Result<Poly, ParseError> {
    let toks = tokenize(text)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        end: text.len(),
        ctx,
    };
    let poly = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return parser.unexpected();
    }
    Ok(poly)
}
