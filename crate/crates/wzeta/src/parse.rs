//! Plain-text polynomial syntax: `x1^2 + 3/2*x2^3 - x1*x2`.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;
use wzeta_core::algebra::Rational;
use wzeta_core::newton::{NewtonError, SparsePoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("column {}: {message}", .pos + 1)]
    Syntax { pos: usize, message: String },
    #[error(transparent)]
    Polynomial(#[from] NewtonError),
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos,
            message: message.into(),
        })
    }

    fn digits(&mut self, what: &str) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error(format!("expected {what}"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn small(&mut self, what: &str) -> Result<u32, ParseError> {
        let start = self.pos;
        let text = self.digits(what)?;
        text.parse().or_else(|_| {
            self.pos = start;
            self.error(format!("{what} is too large"))
        })
    }
}

/// Parses a polynomial in `x1..xd`; `d` is the largest index that occurs.
pub fn parse_polynomial(text: &str) -> Result<SparsePoly, ParseError> {
    let mut lx = Lexer {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut terms: Vec<(BTreeMap<usize, u32>, Rational)> = Vec::new();
    let mut first = true;
    loop {
        let negative = if lx.eat(b'-') {
            true
        } else if lx.eat(b'+') || first {
            false
        } else if lx.peek().is_none() {
            break;
        } else {
            return lx.error("expected `+` or `-`");
        };
        first = false;
        let mut coeff = if negative {
            -Rational::one()
        } else {
            Rational::one()
        };
        let mut powers = BTreeMap::new();
        loop {
            match lx.peek() {
                Some(b'x') => {
                    lx.pos += 1;
                    let start = lx.pos;
                    let index = lx.small("variable index")? as usize;
                    if index == 0 {
                        lx.pos = start;
                        return lx.error("variables are numbered from x1");
                    }
                    let power = if lx.eat(b'^') {
                        lx.small("exponent")?
                    } else {
                        1
                    };
                    *powers.entry(index - 1).or_insert(0u32) += power;
                }
                Some(c) if c.is_ascii_digit() => {
                    let num = BigInt::from_str(lx.digits("number")?).expect("digits");
                    let den = if lx.eat(b'/') {
                        let start = lx.pos;
                        let den = BigInt::from_str(lx.digits("denominator")?).expect("digits");
                        if den.is_zero() {
                            lx.pos = start;
                            return lx.error("zero denominator");
                        }
                        den
                    } else {
                        BigInt::one()
                    };
                    coeff *= Rational::new(num, den);
                }
                None => return lx.error("unexpected end of input"),
                Some(_) => return lx.error("expected a number or a variable"),
            }
            if !lx.eat(b'*') {
                break;
            }
        }
        terms.push((powers, coeff));
    }
    if terms.is_empty() {
        return lx.error("empty polynomial");
    }
    let dim = terms
        .iter()
        .flat_map(|(p, _)| p.keys())
        .max()
        .map_or(1, |&i| i + 1);
    let terms = terms.into_iter().map(|(powers, c)| {
        let mut e = vec![0u32; dim];
        for (i, p) in powers {
            e[i] = p;
        }
        (e, c)
    });
    Ok(SparsePoly::from_terms(dim, terms)?)
}
