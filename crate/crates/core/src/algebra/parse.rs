//! Parser for the polynomial text syntax shared by every file format.
//!
//! Identifiers name parameters, rational literals are `a/b` or integers,
//! operators are `+ - * ^` with `^` restricted to nonnegative integer
//! literals. Whitespace is insignificant.

use num::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::{Poly, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyParseError {
    #[error("unexpected character `{0}` at offset {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected end of input; expected {0}")]
    UnexpectedEnd(&'static str),
    #[error("expected {expected}, found `{found}` at offset {at}")]
    Expected { expected: &'static str, found: String, at: usize },
    #[error("exponent must be a nonnegative integer literal")]
    BadExponent,
    #[error("zero denominator in rational literal")]
    ZeroDenominator,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>, PolyParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => {
                out.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                out.push((Tok::Minus, i));
                i += 1;
            }
            '*' => {
                out.push((Tok::Star, i));
                i += 1;
            }
            '^' => {
                out.push((Tok::Caret, i));
                i += 1;
            }
            '/' => {
                out.push((Tok::Slash, i));
                i += 1;
            }
            '(' => {
                out.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((Tok::Int(s.parse().unwrap()), start));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_alphanumeric() || chars[i] == '_')
                {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((Tok::Ident(s), start));
            }
            other => return Err(PolyParseError::UnexpectedChar(other, i)),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn next(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Poly, PolyParseError> {
        let mut negate = false;
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            negate = true;
        } else if let Some(Tok::Plus) = self.peek() {
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, PolyParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                // Division is restricted to nonzero rational constants, so
                // `p^2/10` works while general quotients stay out of the
                // polynomial grammar.
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    let c = f.as_constant().ok_or(PolyParseError::Expected {
                        expected: "rational constant divisor",
                        found: f.to_string(),
                        at: self.pos,
                    })?;
                    if c.is_zero() {
                        return Err(PolyParseError::ZeroDenominator);
                    }
                    acc = acc.scale(&(Rat::one() / c));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly, PolyParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.next() {
                Some((Tok::Int(e), _)) => {
                    let e: u32 = e.try_into().map_err(|_| PolyParseError::BadExponent)?;
                    Ok(base.pow(e))
                }
                _ => Err(PolyParseError::BadExponent),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly, PolyParseError> {
        match self.next() {
            None => Err(PolyParseError::UnexpectedEnd("a value")),
            Some((Tok::Ident(name), _)) => Ok(Poly::var(&name)),
            Some((Tok::Int(n), _)) => Ok(Poly::constant(Rat::new(n, BigInt::one()))),
            Some((Tok::Minus, _)) => {
                let inner = self.factor()?;
                Ok(-inner)
            }
            Some((Tok::LParen, _)) => {
                let inner = self.expr()?;
                match self.next() {
                    Some((Tok::RParen, _)) => Ok(inner),
                    Some((t, at)) => Err(PolyParseError::Expected {
                        expected: "`)`",
                        found: format!("{t:?}"),
                        at,
                    }),
                    None => Err(PolyParseError::UnexpectedEnd("`)`")),
                }
            }
            Some((t, at)) => Err(PolyParseError::Expected {
                expected: "identifier, number or `(`",
                found: format!("{t:?}"),
                at,
            }),
        }
    }
}

/// Parses the polynomial syntax into canonical form.
pub fn parse_polynomial(input: &str) -> Result<Poly, PolyParseError> {
    let toks = lex(input)?;
    let mut p = Parser { toks, pos: 0 };
    let poly = p.expr()?;
    match p.next() {
        None => Ok(poly),
        Some((t, at)) => Err(PolyParseError::Expected {
            expected: "end of input",
            found: format!("{t:?}"),
            at,
        }),
    }
}

/// Parses a rational constant (rejects anything with parameters).
pub fn parse_rational(input: &str) -> Result<Rat, PolyParseError> {
    let p = parse_polynomial(input)?;
    p.as_constant().ok_or(PolyParseError::Expected {
        expected: "rational constant",
        found: input.to_string(),
        at: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_spec_examples() {
        for s in ["(1-p)^2", "9/10", "p*(1-p)*q"] {
            let p = parse_polynomial(s).unwrap();
            assert!(!p.is_zero());
        }
    }

    #[test]
    fn roundtrips_via_display() {
        for s in ["(1-p)^2", "1 - 2*p + p^2", "p*q - 1/2", "0", "-p"] {
            let p = parse_polynomial(s).unwrap();
            let q = parse_polynomial(&p.to_string()).unwrap();
            assert_eq!(p, q, "roundtrip failed for {s}");
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_polynomial("p +").is_err());
        assert!(parse_polynomial("p ^ q").is_err());
        assert!(parse_polynomial("1/0").is_err());
        assert!(parse_polynomial("p $ q").is_err());
    }
}
