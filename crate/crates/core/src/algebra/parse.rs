//! Recursive-descent parser for the expression grammar
//!
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := [scalar '*'] factor ('*' factor)*
//! factor := gen | '(' expr ')'
//! gen    := 'd[' n ',' j ']' | 'x[' n ',' i ']' | 'r[' n ',' j ']' | '1[' n ']'
//! scalar := integer ['/' positive-integer]
//! ```
//!
//! `*` is composition, so `d[1,1]*d[0,0]` is the word `∂¹₁∂⁰₀`. The
//! literal `0` denotes the zero element.

use num_bigint::BigInt;

use super::element::Element;
use super::generator::{GenKind, Generator};
use super::scalar::Scalar;
use super::word::Word;
use crate::error::{Error, Result};

pub fn parse_element(input: &str) -> Result<Element> {
    let mut p = Parser { src: input.as_bytes(), pos: 0 };
    p.skip_ws();
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Element> {
        let mut negate = self.eat(b'-');
        let mut acc = Element::zero();
        loop {
            let t = self.term()?;
            acc += &if negate { -t } else { t };
            if self.eat(b'+') {
                negate = false;
            } else if self.eat(b'-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Element> {
        self.skip_ws();
        let mut coeff = Scalar::one();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) && !self.at_identity_gen() {
            let start = self.pos;
            coeff = self.scalar()?;
            if !self.eat(b'*') {
                if coeff.is_zero() {
                    return Ok(Element::zero());
                }
                self.pos = start;
                return Err(self.err("a scalar must be followed by '*' and a factor"));
            }
        }
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = acc.compose(&f);
        }
        Ok(acc.scale(&coeff))
    }

    fn at_identity_gen(&self) -> bool {
        self.peek() == Some(b'1') && self.src.get(self.pos + 1) == Some(&b'[')
    }

    fn factor(&mut self) -> Result<Element> {
        self.skip_ws();
        if self.eat(b'(') {
            let e = self.expr()?;
            self.expect(b')')?;
            return Ok(e);
        }
        let start = self.pos;
        let kind = match self.peek() {
            Some(b'd') => Some(GenKind::Del),
            Some(b'x') => Some(GenKind::Chi),
            Some(b'r') => Some(GenKind::Rho),
            Some(b'1') => None,
            _ => return Err(self.err("expected a generator or '('")),
        };
        self.pos += 1;
        self.expect(b'[')?;
        let n = self.natural()?;
        let Some(kind) = kind else {
            self.expect(b']')?;
            return Ok(Element::identity(n));
        };
        self.expect(b',')?;
        let j = self.natural()?;
        self.expect(b']')?;
        let g = Generator::new(kind, n, j).map_err(|e| Error::Parse {
            position: start,
            message: e.to_string(),
        })?;
        Ok(Element::from_word(Word::from_gen(g)))
    }

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn natural(&mut self) -> Result<usize> {
        let start = self.pos;
        let s = self.digits()?;
        s.parse().map_err(|_| Error::Parse {
            position: start,
            message: "number too large".into(),
        })
    }

    fn scalar(&mut self) -> Result<Scalar> {
        let num: BigInt = self.digits()?.parse().expect("digits parse");
        if self.eat(b'/') {
            let at = self.pos;
            let den: BigInt = self.digits()?.parse().expect("digits parse");
            return Scalar::new(num, den).map_err(|_| Error::Parse {
                position: at,
                message: "denominator must be positive".into(),
            });
        }
        Ok(Scalar::from_bigint(num))
    }
}
