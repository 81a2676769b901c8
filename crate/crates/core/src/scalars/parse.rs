//! Recursive-descent parser for the scalar grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' ['-'] integer)?
//! atom   := integer | identifier | '(' expr ')'
//! identifier := [A-Za-z_][A-Za-z0-9_']*
//! ```
//!
//! Whitespace is insignificant. Everything the `Display` impl prints parses
//! back to the same value.

use num_bigint::BigInt;

use super::{ParamScalar, ScalarError};

pub(super) fn parse_scalar(src: &str) -> Result<ParamScalar, ScalarError> {
    let mut p = Parser { src, pos: 0 };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty expression"));
    }
    let v = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> ScalarError {
        ScalarError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<ParamScalar, ScalarError> {
        let mut acc = self.term()?;
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

    fn term(&mut self) -> Result<ParamScalar, ScalarError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let at = self.pos;
                let d = self.unary()?;
                acc = acc.checked_div(&d).map_err(|_| ScalarError::Parse {
                    pos: at,
                    msg: "division by zero".into(),
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<ParamScalar, ScalarError> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<ParamScalar, ScalarError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        self.skip_ws();
        let at = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        let e: i32 = digits
            .parse()
            .map_err(|_| ScalarError::Parse { pos: at, msg: "expected integer exponent".into() })?;
        let e = if neg { -e } else { e };
        base.pow(e).map_err(|_| ScalarError::Parse {
            pos: at,
            msg: "negative power of zero".into(),
        })
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if f(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.src[start..self.pos]
    }

    fn atom(&mut self) -> Result<ParamScalar, ScalarError> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.take_while(|c| c.is_ascii_digit());
                let n: BigInt = digits.parse().expect("ascii digits");
                Ok(ParamScalar::from_ratio(n.into()))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'');
                Ok(ParamScalar::var(name))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::*;

    #[test]
    fn precedence() {
        let a: ParamScalar = "1 + 2*3^2".parse().unwrap();
        assert_eq!(a, ParamScalar::from_int(19));
        let b: ParamScalar = "-x^2".parse().unwrap();
        assert_eq!(b, -&(&ParamScalar::var("x") * &ParamScalar::var("x")));
        let c: ParamScalar = "1/2*x".parse().unwrap();
        assert_eq!(c, &ParamScalar::frac(1, 2) * &ParamScalar::var("x"));
        let d: ParamScalar = "x^-1".parse().unwrap();
        assert_eq!(d, ParamScalar::var("x").recip().unwrap());
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "1 +", "(x", "x $ y", "1/0", "x/(y - y)", "2 3", "0^-1"] {
            assert!(bad.parse::<ParamScalar>().is_err(), "{bad:?} parsed");
        }
    }

    #[test]
    fn canonical_text() {
        let a: ParamScalar = "q*v*2 - (-u)*p*2 - q*v".parse().unwrap();
        assert_eq!(a.to_string(), "2*p*u + q*v");
        let b: ParamScalar = "(p - q)/(q*u - p*v)".parse().unwrap();
        assert_eq!(b.to_string(), "(-p + q)/(p*v - q*u)");
    }
}
