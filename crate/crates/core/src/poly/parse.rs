use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::polynomial::{Coefficient, Polynomial};
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Token::Num(s.parse().expect("digits")));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '.')
                {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ring: &'a Arc<Ring>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn exponent(&mut self) -> Result<u32> {
        match self.next() {
            Some(Token::Num(n)) => n
                .try_into()
                .map_err(|_| Error::Parse("exponent out of range".into())),
            _ => Err(Error::Parse("expected an exponent after `^`".into())),
        }
    }

    fn factor(&mut self, mono: &mut [u32], coeff: &mut Coefficient) -> Result<()> {
        match self.next() {
            Some(Token::Num(n)) => {
                let mut value = Coefficient::from_integer(n);
                if self.peek() == Some(&Token::Slash) {
                    self.pos += 1;
                    match self.next() {
                        Some(Token::Num(d)) if !d.is_zero() => value /= Coefficient::from_integer(d),
                        _ => return Err(Error::Parse("expected a nonzero denominator".into())),
                    }
                }
                if self.peek() == Some(&Token::Caret) {
                    self.pos += 1;
                    let e = self.exponent()?;
                    value = num_traits::pow(value, e as usize);
                }
                *coeff *= value;
            }
            Some(Token::Ident(name)) => {
                let idx = self
                    .ring
                    .index_of(&name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
                let e = if self.peek() == Some(&Token::Caret) {
                    self.pos += 1;
                    self.exponent()?
                } else {
                    1
                };
                mono[idx] += e;
            }
            other => return Err(Error::Parse(format!("expected a factor, found {other:?}"))),
        }
        Ok(())
    }

    fn term(&mut self) -> Result<(Monomial, Coefficient)> {
        let mut mono = vec![0u32; self.ring.nvars()];
        let mut coeff = Coefficient::one();
        self.factor(&mut mono, &mut coeff)?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            self.factor(&mut mono, &mut coeff)?;
        }
        Ok((Monomial::from_exponents(mono), coeff))
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut terms = Vec::new();
        let mut sign = Coefficient::one();
        match self.peek() {
            Some(Token::Minus) => {
                sign = -sign;
                self.pos += 1;
            }
            Some(Token::Plus) => self.pos += 1,
            _ => {}
        }
        loop {
            let (m, c) = self.term()?;
            terms.push((m, c * &sign));
            match self.next() {
                None => break,
                Some(Token::Plus) => sign = Coefficient::one(),
                Some(Token::Minus) => sign = -Coefficient::one(),
                Some(t) => return Err(Error::Parse(format!("unexpected token {t:?}"))),
            }
        }
        Ok(Polynomial::from_terms(self.ring, terms))
    }
}

pub(super) fn parse_polynomial(ring: &Arc<Ring>, text: &str) -> Result<Polynomial> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        ring,
    };
    p.polynomial()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whitespace_is_free() {
        let r = Ring::grevlex(["x", "y", "z"]).unwrap();
        let a = Polynomial::parse(&r, "2*x^2*y-3*z").unwrap();
        let b = Polynomial::parse(&r, "  2 * x ^ 2 * y   -   3 * z ").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn jets_names_parse() {
        let r = Ring::grevlex(["x.0", "x.1"]).unwrap();
        let f = Polynomial::parse(&r, "x.0*x.1 + x.1^2").unwrap();
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn errors() {
        let r = Ring::grevlex(["x"]).unwrap();
        assert!(Polynomial::parse(&r, "y").is_err());
        assert!(Polynomial::parse(&r, "x +").is_err());
        assert!(Polynomial::parse(&r, "1/0").is_err());
        assert!(Polynomial::parse(&r, "").is_err());
        assert!(Polynomial::parse(&r, "x $ 2").is_err());
    }

    #[test]
    fn zero_and_cancellation() {
        let r = Ring::grevlex(["x"]).unwrap();
        assert!(Polynomial::parse(&r, "x - x").unwrap().is_zero());
        assert!(Polynomial::parse(&r, "0").unwrap().is_zero());
    }
}
