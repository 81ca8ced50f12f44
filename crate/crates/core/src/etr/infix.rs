//! Human-readable infix dialect with a parser, so serialized sentences can
//! round-trip back into ASTs.
//!
//! Grammar (fully parenthesized polynomials, bracketed atoms):
//!
//! ```text
//! formula := "exists" IDENT* ":" pred
//! pred    := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := "!" unary | "(" pred ")" | "[" expr CMP "0" "]" | "true" | "false"
//! expr    := INT | "-" INT | IDENT | "(" expr ("+"|"-"|"*") expr ")"
//! ```

use super::ast::{add, mul, sub, var, Cmp, Expr, Formula, Pred, E};
use num_bigint::BigInt;
use std::fmt::Write;
use std::rc::Rc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("infix parse error at byte {at}: {message}")]
pub struct InfixParseError {
    pub at: usize,
    pub message: String,
}

fn write_expr(out: &mut String, e: &Expr) {
    match e {
        Expr::Const(c) => {
            write!(out, "{}", c).unwrap();
        }
        Expr::Var(v) => out.push_str(v),
        Expr::Add(a, b) => {
            out.push('(');
            write_expr(out, a);
            out.push_str(" + ");
            write_expr(out, b);
            out.push(')');
        }
        Expr::Sub(a, b) => {
            out.push('(');
            write_expr(out, a);
            out.push_str(" - ");
            write_expr(out, b);
            out.push(')');
        }
        Expr::Mul(a, b) => {
            out.push('(');
            write_expr(out, a);
            out.push_str(" * ");
            write_expr(out, b);
            out.push(')');
        }
    }
}

fn prec(p: &Pred) -> u8 {
    match p {
        Pred::Or(_) => 1,
        Pred::And(_) => 2,
        Pred::Not(_) => 3,
        _ => 4,
    }
}

fn write_pred(out: &mut String, p: &Pred, min_prec: u8) {
    let needs_parens = prec(p) < min_prec;
    if needs_parens {
        out.push('(');
    }
    match p {
        Pred::True => out.push_str("true"),
        Pred::False => out.push_str("false"),
        Pred::Atom(cmp, e) => {
            out.push('[');
            write_expr(out, e);
            out.push(' ');
            out.push_str(cmp.symbol());
            out.push_str(" 0]");
        }
        Pred::Not(q) => {
            out.push('!');
            write_pred(out, q, 4);
        }
        Pred::And(cs) => {
            for (k, c) in cs.iter().enumerate() {
                if k > 0 {
                    out.push_str(" & ");
                }
                // Same-operator children keep explicit parens so the parse
                // rebuilds the identical tree.
                write_pred(out, c, 3);
            }
        }
        Pred::Or(cs) => {
            for (k, c) in cs.iter().enumerate() {
                if k > 0 {
                    out.push_str(" | ");
                }
                write_pred(out, c, 2);
            }
        }
    }
    if needs_parens {
        out.push(')');
    }
}

/// Deterministic infix dump of the whole sentence.
pub fn to_infix(f: &Formula) -> String {
    let mut out = String::from("exists");
    for v in &f.vars {
        out.push(' ');
        out.push_str(v);
    }
    out.push_str(" :\n");
    write_pred(&mut out, &f.body, 0);
    out.push('\n');
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Amp,
    Pipe,
    Bang,
    Plus,
    Minus,
    Star,
    Colon,
    Cmp(Cmp),
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, InfixParseError> {
        Err(InfixParseError { at: self.pos, message: message.into() })
    }

    fn next_tok(&mut self) -> Result<Option<(usize, Tok)>, InfixParseError> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let at = self.pos;
        let c = self.src[self.pos];
        let tok = match c {
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            b'&' => Tok::Amp,
            b'|' => Tok::Pipe,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b':' => Tok::Colon,
            b'=' => Tok::Cmp(Cmp::Eq),
            b'!' => {
                if self.src.get(self.pos + 1) == Some(&b'=') {
                    self.pos += 1;
                    Tok::Cmp(Cmp::Ne)
                } else {
                    Tok::Bang
                }
            }
            b'<' => {
                if self.src.get(self.pos + 1) == Some(&b'=') {
                    self.pos += 1;
                    Tok::Cmp(Cmp::Le)
                } else {
                    Tok::Cmp(Cmp::Lt)
                }
            }
            b'>' => {
                if self.src.get(self.pos + 1) == Some(&b'=') {
                    self.pos += 1;
                    Tok::Cmp(Cmp::Ge)
                } else {
                    Tok::Cmp(Cmp::Gt)
                }
            }
            _ if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                return Ok(Some((at, Tok::Int(text.parse().unwrap()))));
            }
            _ if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                return Ok(Some((at, Tok::Ident(text.to_string()))));
            }
            _ => return self.err(format!("unexpected byte {:?}", c as char)),
        };
        self.pos += 1;
        Ok(Some((at, tok)))
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, InfixParseError> {
        let at = self.toks.get(self.at).map(|t| t.0).unwrap_or(usize::MAX);
        Err(InfixParseError { at, message: message.into() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn next(&mut self) -> Result<Tok, InfixParseError> {
        match self.toks.get(self.at) {
            Some((_, t)) => {
                self.at += 1;
                Ok(t.clone())
            }
            None => self.err("unexpected end of input"),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), InfixParseError> {
        let got = self.next()?;
        if got == tok {
            Ok(())
        } else {
            self.at -= 1;
            self.err(format!("expected {:?}, got {:?}", tok, got))
        }
    }

    fn parse_expr(&mut self) -> Result<E, InfixParseError> {
        match self.next()? {
            Tok::Int(v) => Ok(Rc::new(Expr::Const(v))),
            Tok::Minus => match self.next()? {
                Tok::Int(v) => Ok(Rc::new(Expr::Const(-v))),
                _ => self.err("expected integer after unary minus"),
            },
            Tok::Ident(name) => Ok(var(name)),
            Tok::LParen => {
                let a = self.parse_expr()?;
                let op = self.next()?;
                let b = self.parse_expr()?;
                self.expect(Tok::RParen)?;
                match op {
                    Tok::Plus => Ok(add(a, b)),
                    Tok::Minus => Ok(sub(a, b)),
                    Tok::Star => Ok(mul(a, b)),
                    other => self.err(format!("expected + - or *, got {:?}", other)),
                }
            }
            other => self.err(format!("expected polynomial, got {:?}", other)),
        }
    }

    fn parse_unary(&mut self) -> Result<Pred, InfixParseError> {
        match self.next()? {
            Tok::Bang => Ok(Pred::not(self.parse_unary()?)),
            Tok::LParen => {
                let p = self.parse_pred()?;
                self.expect(Tok::RParen)?;
                Ok(p)
            }
            Tok::LBracket => {
                let e = self.parse_expr()?;
                let cmp = match self.next()? {
                    Tok::Cmp(c) => c,
                    other => return self.err(format!("expected comparison, got {:?}", other)),
                };
                match self.next()? {
                    Tok::Int(z) if z == BigInt::from(0) => {}
                    other => return self.err(format!("expected 0, got {:?}", other)),
                }
                self.expect(Tok::RBracket)?;
                Ok(Pred::Atom(cmp, e))
            }
            Tok::Ident(w) if w == "true" => Ok(Pred::True),
            Tok::Ident(w) if w == "false" => Ok(Pred::False),
            other => self.err(format!("expected predicate, got {:?}", other)),
        }
    }

    fn parse_and(&mut self) -> Result<Pred, InfixParseError> {
        let mut children = vec![self.parse_unary()?];
        while self.peek() == Some(&Tok::Amp) {
            self.at += 1;
            children.push(self.parse_unary()?);
        }
        Ok(Pred::and(children))
    }

    fn parse_pred(&mut self) -> Result<Pred, InfixParseError> {
        let mut children = vec![self.parse_and()?];
        while self.peek() == Some(&Tok::Pipe) {
            self.at += 1;
            children.push(self.parse_and()?);
        }
        Ok(Pred::or(children))
    }

    fn parse_formula(&mut self) -> Result<Formula, InfixParseError> {
        match self.next()? {
            Tok::Ident(w) if w == "exists" => {}
            other => return self.err(format!("expected 'exists', got {:?}", other)),
        }
        let mut vars = Vec::new();
        loop {
            match self.peek() {
                Some(Tok::Colon) => {
                    self.at += 1;
                    break;
                }
                Some(Tok::Ident(_)) => {
                    if let Tok::Ident(v) = self.next()? {
                        vars.push(v);
                    }
                }
                _ => return self.err("expected variable name or ':'"),
            }
        }
        let body = self.parse_pred()?;
        if self.at != self.toks.len() {
            return self.err("trailing input after formula");
        }
        Ok(Formula { vars, body })
    }
}

/// Parse the infix dialect back into an AST. `to_infix` followed by
/// `parse_infix` is the identity on well-formed formulas.
pub fn parse_infix(text: &str) -> Result<Formula, InfixParseError> {
    let mut lexer = Lexer { src: text.as_bytes(), pos: 0 };
    let mut toks = Vec::new();
    while let Some(t) = lexer.next_tok()? {
        toks.push(t);
    }
    Parser { toks, at: 0 }.parse_formula()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::etr::ast::{int, Cmp};

    #[test]
    fn roundtrip_small() {
        let f = Formula {
            vars: vec!["x1".into(), "y1".into()],
            body: Pred::or(vec![
                Pred::and(vec![
                    Pred::Atom(Cmp::Ne, sub(var("x1"), var("y1"))),
                    Pred::not(Pred::Atom(Cmp::Lt, mul(var("x1"), int(-3)))),
                ]),
                Pred::False,
                Pred::and(vec![
                    Pred::True,
                    Pred::Or(vec![
                        Pred::Atom(Cmp::Ge, var("y1")),
                        Pred::Atom(Cmp::Eq, int(0)),
                    ]),
                ]),
            ]),
        };
        let text = to_infix(&f);
        let parsed = parse_infix(&text).unwrap();
        assert_eq!(parsed, f);
    }

    #[test]
    fn parse_errors_carry_position() {
        assert!(parse_infix("exists x :").is_err());
        assert!(parse_infix("exists x : [x > 1]").is_err());
        assert!(parse_infix("nope").is_err());
    }
}
