//! Canonical text form and a recursive-descent parser.
//!
//! Grammar (whitespace is free between tokens):
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := power ('*' power)*
//! power  := atom ['^' exp]
//! exp    := ['-'] digits | '(' ['-'] digits ')'
//! atom   := digits | 'i' | ident | '(' expr ')'
//! ```
//!
//! Negative powers are accepted only for unit monomials.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use super::{is_identifier, GaussInt, LaurentPoly, Monomial, PolyError, Var};

/// Largest positive power applied to a non-unit polynomial.
const MAX_DENSE_POWER: i64 = 256;
/// Largest number of terms any intermediate result may hold.
const MAX_TERMS: usize = 100_000;
/// Longest integer literal, in digits.
const MAX_DIGITS: usize = 4096;
/// Deepest parenthesis nesting.
const MAX_DEPTH: usize = 256;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParsePolyError {
    #[error("unexpected character `{found}` at byte {pos}")]
    Unexpected { found: char, pos: usize },
    #[error("unexpected end of input")]
    Eof,
    #[error("invalid exponent at byte {0}")]
    BadExponent(usize),
    #[error("integer literal too long at byte {0}")]
    LiteralTooLong(usize),
    #[error("expression too large")]
    TooLarge,
    #[error("nesting too deep")]
    TooDeep,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Whether `c` is written with a leading minus sign in isolation.
fn reads_negative(c: &GaussInt) -> bool {
    use num_traits::{Signed, Zero};
    if c.im.is_zero() {
        c.re.is_negative()
    } else {
        c.re.is_zero() && c.im.is_negative()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        Ok(())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, c: &GaussInt, m: &Monomial) -> fmt::Result {
    if m.is_one() {
        write!(f, "{c}")
    } else if c.is_one() {
        write!(f, "{m}")
    } else if (-c).is_one() {
        write!(f, "-{m}")
    } else {
        write!(f, "{c}*{m}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            if k == 0 {
                write_term(f, c, m)?;
            } else if reads_negative(c) {
                f.write_str(" - ")?;
                write_term(f, &-c, m)?;
            } else {
                f.write_str(" + ")?;
                write_term(f, c, m)?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = ParsePolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
            depth: 0,
        };
        let out = p.expr()?;
        p.skip_ws();
        match p.peek() {
            None => Ok(out),
            Some(_) => Err(p.unexpected()),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    depth: usize,
}

fn bounded(p: LaurentPoly) -> Result<LaurentPoly, ParsePolyError> {
    if p.len() > MAX_TERMS {
        Err(ParsePolyError::TooLarge)
    } else {
        Ok(p)
    }
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn unexpected(&self) -> ParsePolyError {
        // `pos` always sits on a char boundary: only ASCII bytes are consumed
        let rest = std::str::from_utf8(&self.src[self.pos..]).ok();
        match rest.and_then(|r| r.chars().next()) {
            Some(found) => ParsePolyError::Unexpected {
                found,
                pos: self.pos,
            },
            None => ParsePolyError::Eof,
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly, ParsePolyError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParsePolyError::TooDeep);
        }
        let negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            if self.eat(b'+') {
                acc = bounded(acc + self.term()?)?;
            } else if self.eat(b'-') {
                acc = bounded(acc - self.term()?)?;
            } else {
                break;
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<LaurentPoly, ParsePolyError> {
        let mut acc = self.power()?;
        while self.eat(b'*') {
            let rhs = self.power()?;
            acc = bounded(acc.try_mul(&rhs)?)?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<LaurentPoly, ParsePolyError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let start = self.pos;
        let paren = self.eat(b'(');
        let neg = self.eat(b'-');
        self.skip_ws();
        let digits = self.digits();
        if digits.is_empty() || (paren && !self.eat(b')')) {
            return Err(ParsePolyError::BadExponent(start));
        }
        let mag: i64 = digits
            .parse()
            .map_err(|_| ParsePolyError::BadExponent(start))?;
        let e = if neg { -mag } else { mag };
        if !base.is_unit() && e > MAX_DENSE_POWER {
            return Err(ParsePolyError::TooLarge);
        }
        bounded(base.try_pow(e)?)
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits")
    }

    fn atom(&mut self) -> Result<LaurentPoly, ParsePolyError> {
        self.skip_ws();
        match self.peek() {
            None => Err(ParsePolyError::Eof),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    self.skip_ws();
                    return Err(self.unexpected());
                }
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() => {
                let start = self.pos;
                let d = self.digits();
                if d.len() > MAX_DIGITS {
                    return Err(ParsePolyError::LiteralTooLong(start));
                }
                let n: BigInt = d.parse().expect("ascii digits");
                Ok(LaurentPoly::constant(GaussInt::from_int(n)))
            }
            Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii ident");
                debug_assert!(is_identifier(name));
                if name == "i" {
                    Ok(LaurentPoly::i())
                } else {
                    let v = Var::try_new(name)?;
                    Ok(LaurentPoly::term(GaussInt::one(), Monomial::var(v, 1)))
                }
            }
            Some(_) => Err(self.unexpected()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn display_canonical() {
        assert_eq!(p("-A^2 - A^-2").to_string(), "-A^2 - A^-2");
        assert_eq!(
            p("a^-1*z^-1 - a*z^-1 + 1").to_string(),
            "-a*z^-1 + 1 + a^-1*z^-1"
        );
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("i*a - i*a^-1").to_string(), "i*a - i*a^-1");
        assert_eq!(p("(1 - 2*i)*a").to_string(), "(1 - 2*i)*a");
        assert_eq!(p("-3 + a").to_string(), "a - 3");
        assert_eq!(p("2*i*b - 2*i").to_string(), "2*i*b - 2*i");
        assert_eq!(p("-i").to_string(), "-i");
    }

    #[test]
    fn parse_nested() {
        let q = p("a*((a - a^-1)*z^-1 + 1)");
        assert_eq!(q, p("a^2*z^-1 - z^-1 + a"));
        assert_eq!(p("(A + A^-1)^2"), p("A^2 + 2 + A^-2"));
        assert_eq!(p("a^(-2)"), p("a^-2"));
        assert_eq!(p("(-i*a)^-1"), p("i*a^-1"));
    }

    #[test]
    fn parse_errors() {
        assert!("a +".parse::<LaurentPoly>().is_err());
        assert!("a b".parse::<LaurentPoly>().is_err());
        assert!("(a".parse::<LaurentPoly>().is_err());
        assert!("a^".parse::<LaurentPoly>().is_err());
        assert!("(a+1)^-1".parse::<LaurentPoly>().is_err());
        assert!("(a+1)^100000".parse::<LaurentPoly>().is_err());
        assert!("a^99999999999999999999".parse::<LaurentPoly>().is_err());
        assert!("a^9223372036854775807*a".parse::<LaurentPoly>().is_err());
        assert!("é".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn round_trip_examples() {
        for s in [
            "0",
            "1",
            "-A^3",
            "-a*z^-1 + 1 + a^-1*z^-1",
            "(3 + 4*i)*x^2*y^-1 - i",
            "A^2 + 2 + A^-2",
        ] {
            let q = p(s);
            assert_eq!(p(&q.to_string()), q, "{s}");
            assert_eq!(q.to_string(), s);
        }
    }
}
