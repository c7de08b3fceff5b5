//! Parser for scalar text such as `-b/a5` or `(a4 + 1)*lambda1/2`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Polynomial, Scalar};
use crate::Error;

/// Parse scalar text against the declared parameter names.
pub fn parse_scalar(text: &str, params: &[String]) -> Result<Scalar, Error> {
    let mut p = ScalarParser::new(text, 0, params);
    p.skip_ws();
    let s = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(s)
}

/// Recursive-descent scalar parser. Also used by the identity DSL, which
/// embeds scalar coefficients; `offset` keeps error positions absolute.
pub(crate) struct ScalarParser<'a> {
    src: &'a [u8],
    pub(crate) pos: usize,
    offset: usize,
    params: &'a [String],
}

impl<'a> ScalarParser<'a> {
    pub(crate) fn new(text: &'a str, offset: usize, params: &'a [String]) -> Self {
        ScalarParser {
            src: text.as_bytes(),
            pos: 0,
            offset,
            params,
        }
    }

    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            position: self.offset + self.pos,
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    pub(crate) fn expr(&mut self) -> Result<Scalar, Error> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, Error> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.factor()?;
                    acc = acc.checked_div(&d).map_err(|_| Error::Syntax {
                        position: self.offset + at,
                        message: "division by zero".into(),
                    })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Scalar, Error> {
        self.skip_ws();
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(b'(') => {
                self.pos += 1;
                let s = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(s)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n: BigInt = digits.parse().expect("digits");
                Ok(Scalar::from_rational(BigRational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self
                    .peek()
                    .is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.params.iter().position(|p| p == name) {
                    Some(i) => Ok(Scalar::from_polynomial(Polynomial::var(i))),
                    None => Err(Error::UnknownParameter(name.to_string())),
                }
            }
            Some(_) => Err(self.error("expected a number, parameter or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// True if `name` is a valid parameter identifier.
pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> Vec<String> {
        ["a4", "lambda1", "b", "a5"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_fractional_coefficient() {
        let s = parse_scalar("-b/a5", &params()).unwrap();
        assert_eq!(s, -Scalar::param(2) / Scalar::param(3));
    }

    #[test]
    fn field_arithmetic() {
        let s = parse_scalar("a4/2 + a4/2", &params()).unwrap();
        assert_eq!(s, Scalar::param(0));
        assert!(parse_scalar("0", &params()).unwrap().is_zero());
        assert!(parse_scalar("a4*lambda1 - lambda1*a4", &params()).unwrap().is_zero());
    }

    #[test]
    fn errors_carry_position() {
        match parse_scalar("a4 + * 2", &params()) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_scalar("c + 1", &params()),
            Err(Error::UnknownParameter(p)) if p == "c"
        ));
        assert!(matches!(parse_scalar("(a4", &params()), Err(Error::Syntax { .. })));
        assert!(matches!(parse_scalar("1/(a4-a4)", &params()), Err(Error::Syntax { .. })));
    }

    #[test]
    fn render_round_trips() {
        let p = params();
        for text in ["-b/a5", "a4/2", "1/(2*a5)", "(a4 + 1)/(a5*a5 - b)", "-3*b*a4/a5", "7/3"] {
            let s = parse_scalar(text, &p).unwrap();
            assert_eq!(parse_scalar(&s.render(&p), &p).unwrap(), s, "{text}");
        }
    }
}
