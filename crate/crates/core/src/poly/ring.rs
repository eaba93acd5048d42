use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::{MonomialOrder, PolyError, Polynomial};
use crate::exact::Scalar;

/// Variable names of a polynomial ring over the rationals.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Ring {
    names: Vec<String>,
}

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Ring, PolyError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(PolyError::BadVariableName(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        Ok(Ring { names })
    }

    /// `x1, ..., xn`.
    pub fn standard(n: usize) -> Ring {
        Ring {
            names: (1..=n).map(|i| format!("x{i}")).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn var(&self, name: &str) -> Option<Polynomial> {
        self.index_of(name).map(|i| Polynomial::var(self.nvars(), i))
    }

    pub fn format(&self, p: &Polynomial) -> String {
        p.to_text(&self.names, MonomialOrder::GrevLex)
    }

    pub fn format_in(&self, p: &Polynomial, order: MonomialOrder) -> String {
        p.to_text(&self.names, order)
    }

    /// Parses expressions such as `3/2*x1^2*x3 - x2` or `(x1 - x2)*(x1 + x2)^2`.
    pub fn parse(&self, text: &str) -> Result<Polynomial, PolyError> {
        let mut p = Parser {
            ring: self,
            src: text.as_bytes(),
            pos: 0,
        };
        let poly = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(poly)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QQ[{}]", self.names.join(", "))
    }
}

struct Parser<'a> {
    ring: &'a Ring,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> PolyError {
        PolyError::Parse {
            position: self.pos,
            message: message.to_string(),
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let n = self.ring.nvars();
        let mut acc = if self.eat(b'-') {
            -&self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                break;
            }
        }
        debug_assert_eq!(acc.nvars(), n);
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.power()?;
            } else if self.eat(b'/') {
                let d = self.integer()?;
                if d == BigInt::from(0) {
                    return Err(self.error("division by zero"));
                }
                acc = acc.scale(&Scalar::new(BigInt::one(), d));
            } else if matches!(self.peek(), Some(b'(')) {
                // implicit multiplication: (a)(b)
                acc = &acc * &self.power()?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.error("exponent out of range"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        let n = self.ring.nvars();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                Ok(Polynomial::constant(n, Scalar::from_integer(v)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                self.ring.var(name).ok_or_else(|| PolyError::Parse {
                    position: start,
                    message: format!("unknown variable `{name}`"),
                })
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(digits.parse().expect("digits"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use crate::poly::Monomial;

    #[test]
    fn parses_canonical_text() {
        let r = Ring::standard(3);
        let p = r.parse("3/2*x1^2*x3 - x2").unwrap();
        assert_eq!(p.coefficient(&Monomial::from_exps(&[2, 0, 1])), ratio(3, 2));
        assert_eq!(p.coefficient(&Monomial::from_exps(&[0, 1, 0])), int(-1));
        assert_eq!(r.format(&p), "3/2*x1^2*x3 - x2");
    }

    #[test]
    fn parses_products_and_powers() {
        let r = Ring::standard(3);
        let a = r.parse("(x1 - x2)*(x1 - x3)").unwrap();
        let b = r.parse("x1^2 - x1*x2 - x1*x3 + x2*x3").unwrap();
        assert_eq!(a, b);
        let c = r.parse("(x1+x2)^2").unwrap();
        assert_eq!(r.format(&c), "x1^2 + 2*x1*x2 + x2^2");
        assert_eq!(r.parse("-(x1)(x2)").unwrap(), r.parse("-x1*x2").unwrap());
    }

    #[test]
    fn custom_names() {
        let r = Ring::new(["w", "x", "y", "z"]).unwrap();
        let q = r.parse("w*z - x*y").unwrap();
        assert_eq!(r.format(&q), "-x*y + w*z");
        assert!(matches!(r.parse("w + t"), Err(PolyError::Parse { .. })));
    }

    #[test]
    fn rejects_bad_input() {
        let r = Ring::standard(2);
        assert!(r.parse("x1 +").is_err());
        assert!(r.parse("x1 )").is_err());
        assert!(r.parse("x1/0").is_err());
        assert!(Ring::new(["x", "x"]).is_err());
        assert!(Ring::new(["1x"]).is_err());
    }

    #[test]
    fn round_trip_through_text() {
        let r = Ring::standard(3);
        for s in ["x1^3 - 7/3*x1*x2*x3 + 2*x3^3", "-x1 + x2", "5"] {
            let p = r.parse(s).unwrap();
            assert_eq!(r.parse(&r.format(&p)).unwrap(), p);
        }
    }
}
