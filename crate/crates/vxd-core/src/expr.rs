//! The expression grammar for algebra elements.
//!
//! Integers, declared variable identifiers, binary `+ - * /`, unary `-`,
//! `^` with a nonnegative integer literal exponent, and parentheses; `*` is
//! required (no juxtaposition). Precedence `^` > unary `-` > `* /` > `+ -`,
//! left-associative except `^`, which is right-associative.

use num_bigint::BigInt;

use crate::ambient::Ambient;
use crate::poly::Rat;
use crate::ratfunc::RatFunc;
use crate::{Error, Result};

/// Parse an expression into a canonical [`RatFunc`] over `ambient`.
pub fn parse_expr(input: &str, ambient: &Ambient) -> Result<RatFunc> {
    let tokens = tokenize(input)?;
    let mut parser = Parser { tokens, pos: 0, ambient, input_len: input.len() };
    let value = parser.sum()?;
    match parser.peek() {
        None => Ok(value),
        Some(t) => Err(Error::SyntaxError {
            position: t.pos,
            message: format!("unexpected `{}`", t.kind.describe()),
        }),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum TokKind {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl TokKind {
    fn describe(&self) -> String {
        match self {
            TokKind::Int(n) => n.to_string(),
            TokKind::Ident(s) => s.clone(),
            TokKind::Plus => "+".into(),
            TokKind::Minus => "-".into(),
            TokKind::Star => "*".into(),
            TokKind::Slash => "/".into(),
            TokKind::Caret => "^".into(),
            TokKind::LParen => "(".into(),
            TokKind::RParen => ")".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokKind,
    pos: usize,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let pos = i;
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
            }
            b'+' => {
                tokens.push(Token { kind: TokKind::Plus, pos });
                i += 1;
            }
            b'-' => {
                tokens.push(Token { kind: TokKind::Minus, pos });
                i += 1;
            }
            b'*' => {
                tokens.push(Token { kind: TokKind::Star, pos });
                i += 1;
            }
            b'/' => {
                tokens.push(Token { kind: TokKind::Slash, pos });
                i += 1;
            }
            b'^' => {
                tokens.push(Token { kind: TokKind::Caret, pos });
                i += 1;
            }
            b'(' => {
                tokens.push(Token { kind: TokKind::LParen, pos });
                i += 1;
            }
            b')' => {
                tokens.push(Token { kind: TokKind::RParen, pos });
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = input[start..i].parse().expect("digit run parses");
                tokens.push(Token { kind: TokKind::Int(n), pos });
            }
            b'A'..=b'Z' | b'a'..=b'z' | b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                tokens.push(Token { kind: TokKind::Ident(input[start..i].to_string()), pos });
            }
            _ => {
                return Err(Error::SyntaxError {
                    position: pos,
                    message: format!("unexpected character `{}`", &input[pos..pos + 1]),
                });
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ambient: &'a Ambient,
    input_len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn advance(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eof_error(&self) -> Error {
        Error::SyntaxError { position: self.input_len, message: "unexpected end of input".into() }
    }

    fn sum(&mut self) -> Result<RatFunc> {
        let mut acc = self.product()?;
        while let Some(t) = self.peek() {
            match t.kind {
                TokKind::Plus => {
                    self.advance();
                    acc = acc.add_rf(&self.product()?);
                }
                TokKind::Minus => {
                    self.advance();
                    acc = acc.sub_rf(&self.product()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        while let Some(t) = self.peek() {
            match t.kind {
                TokKind::Star => {
                    self.advance();
                    acc = acc.mul_rf(&self.unary()?);
                }
                TokKind::Slash => {
                    self.advance();
                    acc = acc.div_rf(&self.unary()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFunc> {
        if let Some(t) = self.peek() {
            if t.kind == TokKind::Minus {
                self.advance();
                return Ok(self.unary()?.neg_rf());
            }
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        let mut exponents: Vec<(u32, usize)> = Vec::new();
        while let Some(t) = self.peek() {
            if t.kind != TokKind::Caret {
                break;
            }
            self.advance();
            let t = self.advance().ok_or_else(|| self.eof_error())?;
            match t.kind {
                TokKind::Int(n) => {
                    let e = u32::try_from(&n)
                        .map_err(|_| Error::ExponentOverflow { position: t.pos })?;
                    exponents.push((e, t.pos));
                }
                _ => {
                    return Err(Error::SyntaxError {
                        position: t.pos,
                        message: "exponent must be a nonnegative integer literal".into(),
                    });
                }
            }
        }
        if exponents.is_empty() {
            return Ok(base);
        }
        // ^ is right-associative: fold the literal chain from the right
        let mut e = 1u32;
        for &(k, pos) in exponents.iter().rev() {
            e = k.checked_pow(e).ok_or(Error::ExponentOverflow { position: pos })?;
        }
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<RatFunc> {
        let t = self.advance().ok_or_else(|| self.eof_error())?;
        match t.kind {
            TokKind::Int(n) => Ok(RatFunc::constant(self.ambient.clone(), Rat::from_integer(n))),
            TokKind::Ident(name) => match self.ambient.var_index(&name) {
                Some(i) => Ok(RatFunc::var(self.ambient.clone(), i)),
                None => Err(Error::UnknownVariable { name, position: t.pos }),
            },
            TokKind::LParen => {
                let inner = self.sum()?;
                match self.advance() {
                    Some(Token { kind: TokKind::RParen, .. }) => Ok(inner),
                    Some(t) => Err(Error::SyntaxError {
                        position: t.pos,
                        message: format!("expected `)`, got `{}`", t.kind.describe()),
                    }),
                    None => Err(self.eof_error()),
                }
            }
            other => Err(Error::SyntaxError {
                position: t.pos,
                message: format!("expected a value, got `{}`", other.describe()),
            }),
        }
    }
}
