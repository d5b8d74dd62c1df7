//! Text syntax for polynomials and rational functions in `t1..tm`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 't' index | '(' expr ')'
//! ```
//!
//! Rational literals are written as quotients, e.g. `3/4*t1`.

use alloc::string::String;

use num_bigint::BigInt;

use crate::error::ParseError;
use crate::poly::QPoly;
use crate::series::RationalFunction;
use crate::Rational;

/// Parses a polynomial. Division is only allowed by nonzero constants.
pub fn parse_poly(text: &str, m: usize) -> Result<QPoly, ParseError> {
    let r = parse_rational(text, m)?;
    match r.den().as_constant() {
        Some(c) => Ok(r.num().scale(&c.recip())),
        None => Err(ParseError::NotAPolynomial),
    }
}

/// Parses a rational function.
pub fn parse_rational(text: &str, m: usize) -> Result<RationalFunction, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        m,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.syntax("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    m: usize,
}

impl Parser<'_> {
    fn syntax(&self, message: &'static str) -> ParseError {
        ParseError::Syntax {
            pos: self.pos,
            message,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            let at = self.pos;
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == b'*' {
                &acc * &rhs
            } else {
                acc.checked_div(&rhs)
                    .map_err(|_| ParseError::ZeroDenominator { pos: at })?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RationalFunction, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RationalFunction, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let at = {
            self.skip_ws();
            self.pos
        };
        if self.peek() == Some(b'-') {
            return Err(ParseError::NegativeExponent { pos: at });
        }
        let k = self.integer()?;
        let k: u32 = u32::try_from(k).map_err(|_| self.syntax("exponent too large"))?;
        Ok(base.pow(k))
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected an integer"));
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits
            .parse()
            .map_err(|_| self.syntax("bad integer literal"))
    }

    fn atom(&mut self) -> Result<RationalFunction, ParseError> {
        match self.peek() {
            None => Err(self.syntax("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.syntax("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RationalFunction::constant(
                    self.m,
                    Rational::from_integer(n),
                ))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name =
                    core::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
                match variable_index(name, self.m) {
                    Some(k) => Ok(RationalFunction::from_poly(QPoly::var(self.m, k))),
                    None => Err(ParseError::UnknownVariable {
                        pos: start,
                        name: String::from(name),
                    }),
                }
            }
            Some(_) => Err(self.syntax("unexpected character")),
        }
    }
}

fn variable_index(name: &str, m: usize) -> Option<usize> {
    let digits = name.strip_prefix('t')?;
    if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let k: usize = digits.parse().ok()?;
    (1..=m).contains(&k).then(|| k - 1)
}

/// The largest variable index `k` such that `tk` occurs in the text, if any.
///
/// Used to infer the ambient dimension of free-standing expressions.
pub fn max_variable_index(text: &str) -> usize {
    let b = text.as_bytes();
    let mut best = 0;
    let mut i = 0;
    while i < b.len() {
        if b[i].is_ascii_alphabetic() || b[i] == b'_' {
            let start = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            if let Some(k) = variable_index(&text[start..i], usize::MAX) {
                best = best.max(k + 1);
            }
        } else {
            i += 1;
        }
    }
    best
}
