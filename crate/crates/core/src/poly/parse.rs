//! Reader for the textual polynomial form produced by `Display`:
//! integers (optionally `a/b`), variables such as `x3` / `y12`, and the
//! operators `+ - * ^` with parentheses.

use super::coeff::Coefficient;
use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(i64),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let n = text
                .parse()
                .map_err(|_| Error::parse(0, format!("integer too large: {text}")))?;
            out.push(Token::Int(n));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*^/()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(Error::parse(0, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: Ring,
    tokens: &'a [Token],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.tokens.get(self.pos) {
                Some(Token::Int(e)) if *e >= 0 && *e <= u32::MAX as i64 => {
                    self.pos += 1;
                    Ok(base.pow(*e as u32))
                }
                _ => Err(Error::parse(0, "exponent must be a non-negative integer")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                if self.eat('/') {
                    let Some(Token::Int(d)) = self.tokens.get(self.pos).cloned() else {
                        return Err(Error::parse(0, "expected denominator after '/'"));
                    };
                    self.pos += 1;
                    let c = Coefficient::from_ratio(self.ring.field(), n, d)
                        .ok_or_else(|| Error::parse(0, format!("denominator {d} vanishes in {}", self.ring.field())))?;
                    Ok(Polynomial::constant(self.ring, c))
                } else {
                    Ok(Polynomial::from_i64(self.ring, n))
                }
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                let v = self
                    .ring
                    .parse_var(&name)
                    .ok_or_else(|| Error::parse(0, format!("unknown variable '{name}' in {}", self.ring)))?;
                Ok(Polynomial::var(self.ring, v))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::parse(0, "missing ')'"));
                }
                Ok(inner)
            }
            Some(t) => Err(Error::parse(0, format!("unexpected token {t:?}"))),
            None => Err(Error::parse(0, "unexpected end of input")),
        }
    }
}

impl Polynomial {
    /// Parses `text` in `ring`, e.g. `"x1*y2 - x2*y1"`.
    pub fn parse(ring: Ring, text: &str) -> Result<Polynomial> {
        let tokens = lex(text)?;
        let mut p = Parser {
            ring,
            tokens: &tokens,
            pos: 0,
        };
        let poly = p.expr()?;
        if p.pos != tokens.len() {
            return Err(Error::parse(0, format!("trailing input at token {}", p.pos)));
        }
        Ok(poly)
    }
}
