//! Text grammar for recurrence equations.
//!
//! ```text
//! equation := expr ('=' expr)?
//! expr     := '-'? term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ('^' posint)?
//! atom     := rational | 'n' | 's(n)' | 's(n+' posint ')' | '(' expr ')'
//! ```
//!
//! Whitespace is ignored everywhere. `lhs = rhs` is read as `lhs - rhs`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use ratrec_core::{DiffPoly, HolonomicEq, MultiPoly, Rational, VarId};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("negative shift at {pos}: only s(n) and s(n+k) with k > 0 are allowed")]
    NegativeShift { pos: usize },
    #[error("unknown symbol '{name}' at {pos}")]
    UnknownSymbol { pos: usize, name: String },
    #[error("not a holonomic equation: {0}")]
    NotHolonomic(String),
}

impl ParseError {
    /// Byte offset into the source, when the error has one.
    pub fn position(&self) -> Option<usize> {
        match self {
            ParseError::Syntax { pos, .. }
            | ParseError::NegativeShift { pos }
            | ParseError::UnknownSymbol { pos, .. } => Some(*pos),
            ParseError::NotHolonomic(_) => None,
        }
    }
}

pub type ParseResult<T> = Result<T, ParseError>;

pub fn parse_equation(text: &str) -> ParseResult<DiffPoly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let lhs = p.expr()?;
    let body = if p.eat(b'=') {
        let rhs = p.expr()?;
        &lhs - &rhs
    } else {
        lhs
    };
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.unexpected());
    }
    Ok(DiffPoly::new(body))
}

/// Parses and checks that the result is linear in the shifts.
pub fn parse_holonomic(text: &str) -> ParseResult<HolonomicEq> {
    let p = parse_equation(text)?;
    HolonomicEq::from_diffpoly(&p).map_err(|e| ParseError::NotHolonomic(e.to_string()))
}

/// A bare polynomial, rejecting `=`.
pub fn parse_polynomial(text: &str) -> ParseResult<MultiPoly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.unexpected());
    }
    Ok(e)
}

/// Comma-separated rationals such as `1, -2, 3/4`.
pub fn parse_rationals(text: &str) -> ParseResult<Vec<Rational>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut offset = 0;
    let mut out = Vec::new();
    for piece in text.split(',') {
        let trimmed = piece.trim();
        let lead = piece.len() - piece.trim_start().len();
        out.push(parse_rational_literal(trimmed).ok_or_else(|| ParseError::Syntax {
            pos: offset + lead,
            message: format!("'{}' is not a rational number", trimmed),
        })?);
        offset += piece.len() + 1;
    }
    Ok(out)
}

fn parse_rational_literal(s: &str) -> Option<Rational> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest.trim_start()),
        None => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (body, "1"),
    };
    if num.is_empty() || !num.bytes().all(|b| b.is_ascii_digit()) || !den.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let num = BigInt::from_str(num).ok()?;
    let den = BigInt::from_str(den).ok()?;
    if den.is_zero() {
        return None;
    }
    let r = Rational::new(num, den);
    Some(if neg { -r } else { r })
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
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

    fn expect(&mut self, c: u8) -> ParseResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.syntax(format!("expected '{}'", c as char)))
        }
    }

    fn syntax(&mut self, message: String) -> ParseError {
        self.skip_ws();
        ParseError::Syntax { pos: self.pos, message }
    }

    fn unexpected(&mut self) -> ParseError {
        match self.peek() {
            Some(c) => self.syntax(format!("unexpected '{}'", c as char)),
            None => self.syntax("unexpected end of input".into()),
        }
    }

    fn expr(&mut self) -> ParseResult<MultiPoly> {
        let negate = self.eat(b'-');
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> ParseResult<MultiPoly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> ParseResult<MultiPoly> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.posint()?;
            let e = u32::try_from(&e).map_err(|_| self.syntax("exponent too large".into()))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Option<(usize, BigInt)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Some((start, BigInt::from_str(text).expect("digits parse")))
    }

    fn posint(&mut self) -> ParseResult<BigInt> {
        match self.digits() {
            Some((start, v)) if v.is_zero() => Err(ParseError::Syntax { pos: start, message: "expected a positive integer".into() }),
            Some((_, v)) => Ok(v),
            None => Err(self.syntax("expected a positive integer".into())),
        }
    }

    fn atom(&mut self) -> ParseResult<MultiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let (_, num) = self.digits().expect("peeked a digit");
                if self.eat(b'/') {
                    let (start, den) = self.digits().ok_or_else(|| self.syntax("expected a denominator".into()))?;
                    if den.is_zero() {
                        return Err(ParseError::Syntax { pos: start, message: "zero denominator".into() });
                    }
                    return Ok(MultiPoly::constant(Rational::new(num, den)));
                }
                Ok(MultiPoly::constant(Rational::from_integer(num)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.symbol(),
            _ => Err(self.unexpected()),
        }
    }

    fn symbol(&mut self) -> ParseResult<MultiPoly> {
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
        match name {
            "n" => Ok(MultiPoly::n()),
            "s" => self.shift_call(),
            _ => Err(ParseError::UnknownSymbol { pos: start, name: name.to_string() }),
        }
    }

    fn shift_call(&mut self) -> ParseResult<MultiPoly> {
        self.expect(b'(')?;
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                let save = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[save..self.pos]).expect("ascii identifier");
                if name != "n" {
                    return Err(ParseError::UnknownSymbol { pos: start, name: name.to_string() });
                }
            }
            _ => return Err(self.syntax("expected 'n' inside s(...)".into())),
        }
        let shift = if self.eat(b'+') {
            let k = self.posint()?;
            u32::try_from(&k).map_err(|_| self.syntax("shift too large".into()))?
        } else if self.peek() == Some(b'-') {
            return Err(ParseError::NegativeShift { pos: self.pos });
        } else {
            0
        };
        self.expect(b')')?;
        Ok(MultiPoly::var(VarId::Shift(shift)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(i: u32) -> MultiPoly {
        MultiPoly::s(i)
    }

    #[test]
    fn catalan_text() {
        let p = parse_equation("(n+2)*s(n+1) - (4*n+2)*s(n)").unwrap();
        let h = HolonomicEq::from_int_coeffs(&[&[-2, -4], &[2, 1]]).unwrap();
        assert_eq!(p, h.to_diffpoly());
    }

    #[test]
    fn equation_form() {
        let a = parse_equation("s(n+1) = (n+1)^3*s(n)").unwrap();
        let b = parse_equation("s(n+1) - (n+1)^3*s(n)").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rationals_and_whitespace() {
        let p = parse_polynomial(" -3/32 * s ( n ) + 11/2*s(n + 5) ").unwrap();
        let expected = &s(5).scale(&Rational::new(11.into(), 2.into())) - &s(0).scale(&Rational::new(3.into(), 32.into()));
        assert_eq!(p, expected);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_equation("s(m)"), Err(ParseError::UnknownSymbol { pos: 2, name: "m".into() }));
        assert_eq!(parse_equation("x*s(n)"), Err(ParseError::UnknownSymbol { pos: 0, name: "x".into() }));
        assert_eq!(parse_equation("s(n-1)"), Err(ParseError::NegativeShift { pos: 3 }));
        assert!(matches!(parse_equation("s(n+1) +"), Err(ParseError::Syntax { pos: 8, .. })));
        assert!(matches!(parse_equation("s(n+0)"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_equation("n^0"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_equation("1/0"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_equation("s(n) = 1 = 2"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_holonomic("s(n)^2"), Err(ParseError::NotHolonomic(_))));
    }

    #[test]
    fn rational_lists() {
        let v = parse_rationals("1, -2,3/4").unwrap();
        assert_eq!(v, vec![Rational::from_integer(1.into()), Rational::from_integer((-2).into()), Rational::new(3.into(), 4.into())]);
        assert!(parse_rationals("").unwrap().is_empty());
        assert_eq!(parse_rationals("1,x").unwrap_err().position(), Some(2));
    }
}
