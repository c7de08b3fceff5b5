use super::ast::{IdentityExpr, Node, VarDecls};
use crate::exactnum::{is_identifier, Scalar, ScalarParser};
use crate::Error;

/// Parse and validate one identity.
pub fn parse_identity(source: &str, decls: &VarDecls, params: &[String]) -> Result<IdentityExpr, Error> {
    let mut p = Parser {
        src: source,
        pos: 0,
        params,
    };
    let root = p.expr()?;
    p.skip_ws();
    if p.pos < source.len() {
        return Err(p.error("unexpected trailing input"));
    }
    IdentityExpr::new(root, decls, params)
}

/// Parse an identity file: `id: expr` per line, `#` comments and blank lines ignored.
pub fn parse_identity_file(
    text: &str,
    decls: &VarDecls,
    params: &[String],
) -> Result<Vec<(String, IdentityExpr)>, Error> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let Some(colon) = line.find(':') else {
            return Err(Error::Syntax {
                position: start,
                message: "expected `id: expression`".into(),
            });
        };
        let id = line[..colon].trim();
        if id.is_empty() || !id.chars().all(|c| c.is_ascii_alphanumeric() || "_-.:".contains(c)) {
            return Err(Error::Syntax {
                position: start,
                message: format!("bad identity id `{id}`"),
            });
        }
        let body = &line[colon + 1..];
        let expr = parse_identity(body, decls, params).map_err(|e| match e {
            Error::Syntax { position, message } => Error::Syntax {
                position: position + start + colon + 1,
                message,
            },
            other => other,
        })?;
        if out.iter().any(|(k, _)| k == id) {
            return Err(Error::DuplicateLabel(id.to_string()));
        }
        out.push((id.to_string(), expr));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    params: &'a [String],
}

impl<'a> Parser<'a> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> Result<(), Error> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Node, Error> {
        self.skip_ws();
        let mut terms = Vec::new();
        let mut neg = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            neg = true;
        }
        terms.push((neg, self.term()?));
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => neg = false,
                Some(b'-') => neg = true,
                _ => break,
            }
            self.pos += 1;
            terms.push((neg, self.term()?));
        }
        if terms.len() == 1 && !terms[0].0 {
            Ok(terms.pop().unwrap().1)
        } else {
            Ok(Node::Sum(terms))
        }
    }

    fn term(&mut self) -> Result<Node, Error> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let s = self.scalar_until_close()?;
                self.eat(b')')?;
                self.eat(b'*')?;
                Ok(Node::Scale(s, Box::new(self.atom()?)))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let n: num_bigint::BigInt = self.src[start..self.pos].parse().expect("digits");
                self.eat(b'*')?;
                let s = Scalar::from_rational(num_rational::BigRational::from_integer(n));
                Ok(Node::Scale(s, Box::new(self.atom()?)))
            }
            _ => self.atom(),
        }
    }

    /// Scalar text inside `( ... )`, delegated to the scalar parser.
    fn scalar_until_close(&mut self) -> Result<Scalar, Error> {
        let mut depth = 0usize;
        let bytes = self.src.as_bytes();
        let mut end = self.pos;
        while end < bytes.len() {
            match bytes[end] {
                b'(' => depth += 1,
                b')' if depth == 0 => break,
                b')' => depth -= 1,
                _ => {}
            }
            end += 1;
        }
        if end == bytes.len() {
            return Err(self.error("unclosed '('"));
        }
        let text = &self.src[self.pos..end];
        let mut sp = ScalarParser::new(text, self.pos, self.params);
        sp.skip_ws();
        let s = sp.expr()?;
        sp.skip_ws();
        if sp.pos < text.len() {
            return Err(Error::Syntax {
                position: self.pos + sp.pos,
                message: "unexpected input in scalar".into(),
            });
        }
        self.pos = end;
        Ok(s)
    }

    fn ident(&mut self) -> Result<&'a str, Error> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .bytes()
            .take_while(|c| c.is_ascii_alphanumeric() || *c == b'_')
            .count();
        let word = &rest[..len];
        if !is_identifier(word) {
            return Err(self.error("expected an identifier"));
        }
        self.pos += len;
        Ok(word)
    }

    fn atom(&mut self) -> Result<Node, Error> {
        self.skip_ws();
        let start = self.pos;
        let word = self.ident()?;
        self.skip_ws();
        if self.peek() != Some(b'(') {
            return Ok(Node::Var(word.to_string()));
        }
        match word {
            "p" | "act" => {
                self.pos += 1;
                let label = self.ident()?.to_string();
                self.eat(b',')?;
                let left = self.expr()?;
                self.eat(b',')?;
                let right = self.expr()?;
                self.eat(b')')?;
                Ok(if word == "p" {
                    Node::Prod(label, Box::new(left), Box::new(right))
                } else {
                    Node::Act(label, Box::new(left), Box::new(right))
                })
            }
            _ => {
                let (head, digits) = word.split_at(1);
                let k = if digits.is_empty() {
                    Some(1)
                } else if digits.bytes().all(|c| c.is_ascii_digit()) {
                    digits.parse::<u32>().ok()
                } else {
                    None
                };
                let twist_a = head == "A";
                if !(twist_a || head == "B") || k.is_none() {
                    self.pos = start;
                    return Err(self.error(&format!("unknown function `{word}`")));
                }
                self.pos += 1;
                let inner = self.expr()?;
                self.eat(b')')?;
                let k = k.unwrap();
                Ok(if twist_a {
                    Node::TwistA(k, Box::new(inner))
                } else {
                    Node::TwistB(k, Box::new(inner))
                })
            }
        }
    }
}
