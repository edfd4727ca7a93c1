//! Polynomial expressions over named generators.
//!
//! Grammar: sums and differences of products, unary minus, `^` with a
//! non-negative integer exponent, parentheses, integer literals and
//! identifiers. `t^{k/2}` (and `t½`) denote half-integer powers of `t`.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Var(String),
    /// `t^{k/2}`
    HalfPowerOfT(u32),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Half(u32),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn is_ident_char(c: char) -> bool {
    c != '½' && (c.is_alphanumeric() || c == '_')
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |position: usize, message: String| ParseError { position, message };
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' | '−' => out.push((start, Tok::Minus)),
            '*' | '·' => out.push((start, Tok::Star)),
            '^' => out.push((start, Tok::Caret)),
            '(' => out.push((start, Tok::LParen)),
            ')' => out.push((start, Tok::RParen)),
            '½' => out.push((start, Tok::Half(1))),
            '{' => {
                // `{k/2}` after a caret
                let close = chars[i..].iter().position(|&ch| ch == '}').map(|p| p + i);
                let Some(close) = close else {
                    return Err(err(start, "unterminated `{`".into()));
                };
                let inner: String = chars[i + 1..close].iter().collect();
                let (num, den) = inner.split_once('/').ok_or_else(|| {
                    err(
                        start,
                        format!("expected k/2 inside braces, found `{inner}`"),
                    )
                })?;
                if den.trim() != "2" {
                    return Err(err(
                        start,
                        format!("only halves are supported, found `{inner}`"),
                    ));
                }
                let k: u32 = num
                    .trim()
                    .parse()
                    .map_err(|_| err(start, format!("bad numerator `{num}`")))?;
                out.push((start, Tok::Half(k)));
                i = close + 1;
                continue;
            }
            _ if c.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((start, Tok::Int(s.parse().expect("digits"))));
                continue;
            }
            _ if c.is_alphabetic() => {
                while i < chars.len() && is_ident_char(chars[i]) {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((start, Tok::Ident(s)));
                continue;
            }
            _ => return Err(err(start, format!("unexpected character `{c}`"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.here(),
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        let base = match (&base, self.peek()) {
            (Expr::Var(name), Some(Tok::Half(k))) if name == "t" => {
                let k = *k;
                self.pos += 1;
                Expr::HalfPowerOfT(k)
            }
            _ => base,
        };
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.toks.get(self.pos).cloned() {
                Some((_, Tok::Int(n))) => {
                    self.pos += 1;
                    let n: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                    return Ok(Expr::Pow(Box::new(base), n));
                }
                Some((_, Tok::Half(k))) => {
                    if base != Expr::Var("t".into()) {
                        return Err(self.err("half-integer exponents apply only to t"));
                    }
                    self.pos += 1;
                    return Ok(Expr::HalfPowerOfT(k));
                }
                _ => return Err(self.err("expected an exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.toks.get(self.pos).cloned() {
            Some((_, Tok::Int(n))) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some((_, Tok::Ident(s))) => {
                self.pos += 1;
                Ok(Expr::Var(s))
            }
            Some((_, Tok::LParen)) => {
                self.pos += 1;
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => Err(self.err("expected `)`")),
                }
            }
            Some(_) => Err(self.err("expected a number, identifier or `(`")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

pub fn parse_expression(text: &str) -> Result<Expr, ParseError> {
    let toks = lex(text)?;
    let end = text.chars().count();
    let mut p = Parser { toks, pos: 0, end };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

/// Something expressions can be evaluated in.
pub trait ExprAlgebra {
    type Elem: Clone;
    type Error: From<ParseError>;

    fn integer(&self, n: &BigInt) -> Self::Elem;
    fn variable(&self, name: &str) -> Result<Self::Elem, Self::Error>;
    fn half_power_of_t(&self, k: u32) -> Result<Self::Elem, Self::Error>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
}

pub fn evaluate<A: ExprAlgebra>(alg: &A, e: &Expr) -> Result<A::Elem, A::Error> {
    Ok(match e {
        Expr::Int(n) => alg.integer(n),
        Expr::Var(name) => alg.variable(name)?,
        Expr::HalfPowerOfT(k) => alg.half_power_of_t(*k)?,
        Expr::Neg(a) => alg.neg(&evaluate(alg, a)?),
        Expr::Add(a, b) => alg.add(&evaluate(alg, a)?, &evaluate(alg, b)?),
        Expr::Sub(a, b) => alg.sub(&evaluate(alg, a)?, &evaluate(alg, b)?),
        Expr::Mul(a, b) => alg.mul(&evaluate(alg, a)?, &evaluate(alg, b)?),
        Expr::Pow(a, n) => {
            let base = evaluate(alg, a)?;
            let mut acc = alg.integer(&BigInt::from(1));
            for _ in 0..*n {
                acc = alg.mul(&acc, &base);
            }
            acc
        }
    })
}

pub fn parse_and_evaluate<A: ExprAlgebra>(alg: &A, text: &str) -> Result<A::Elem, A::Error> {
    let e = parse_expression(text)?;
    evaluate(alg, &e)
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Var(s) => write!(f, "{s}"),
            Expr::HalfPowerOfT(k) => write!(f, "t^{{{k}/2}}"),
            Expr::Neg(a) => write!(f, "-({a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "{a}*{b}"),
            Expr::Pow(a, n) => write!(f, "({a})^{n}"),
        }
    }
}
