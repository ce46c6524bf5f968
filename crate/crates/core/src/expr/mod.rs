//! Expression syntax shared by the command line and presentation files.
//!
//! ```text
//! expr  := tens (('+' | '-') tens)*
//! tens  := prod ('ox' prod)*
//! prod  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' ['-'] INT)?
//! atom  := NUM | IDENT | IDENT '(' expr ')' | '(' expr ')'
//! ```
//!
//! `*` is the noncommutative product in the order written.

mod eval;

pub use eval::{evaluate, Context, MapName, Value};

use num_bigint::BigInt;

use crate::algebra::presentation::{Generator, GeneratorKind};
use crate::algebra::word::{add_term, add_terms_scaled, Letter, Monomial, Terms};
use crate::error::{AlgebraError, Result};
use crate::scalars::CycScalar;

#[derive(Clone, PartialEq, Debug)]
pub enum Expr {
    Num(BigInt),
    Ident { name: String, pos: usize },
    Call { func: String, arg: Box<Expr>, pos: usize },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div { num: Box<Expr>, den: Box<Expr>, pos: usize },
    Pow { base: Box<Expr>, exp: i64, pos: usize },
    Tensor(Vec<Expr>),
}

#[derive(Clone, PartialEq, Debug)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ if c.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Num(src[start..i].parse().expect("digits")), start));
                continue;
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(src[start..i].to_string()), start));
                continue;
            }
            _ => {
                return Err(AlgebraError::Parse {
                    pos: start,
                    message: format!("unexpected character `{c}`"),
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(AlgebraError::Parse {
            pos: self.pos(),
            message: message.into(),
        })
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn is_ox(&self) -> bool {
        matches!(self.peek(), Some(Tok::Ident(s)) if s == "ox")
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.tens()?;
        loop {
            if self.eat(&Tok::Plus) {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.tens()?));
            } else if self.eat(&Tok::Minus) {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.tens()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn tens(&mut self) -> Result<Expr> {
        let first = self.prod()?;
        if !self.is_ox() {
            return Ok(first);
        }
        let mut parts = vec![first];
        while self.is_ox() {
            self.at += 1;
            parts.push(self.prod()?);
        }
        Ok(Expr::Tensor(parts))
    }

    fn prod(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.peek() == Some(&Tok::Slash) {
                let pos = self.pos();
                self.at += 1;
                lhs = Expr::Div {
                    num: Box::new(lhs),
                    den: Box::new(self.unary()?),
                    pos,
                };
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(&Tok::Minus) {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        let pos = self.pos();
        self.at += 1;
        let neg = self.eat(&Tok::Minus);
        let Some(Tok::Num(n)) = self.peek().cloned() else {
            return self.err("expected an integer exponent");
        };
        self.at += 1;
        let exp: i64 = match i64::try_from(n) {
            Ok(e) if e <= 10_000 => e,
            _ => return self.err("exponent too large"),
        };
        Ok(Expr::Pow {
            base: Box::new(base),
            exp: if neg { -exp } else { exp },
            pos,
        })
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Ident(name)) if name == "ox" => self.err("`ox` needs a left operand"),
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if self.eat(&Tok::LParen) {
                    let arg = self.expr()?;
                    if !self.eat(&Tok::RParen) {
                        return self.err("expected `)`");
                    }
                    Ok(Expr::Call {
                        func: name,
                        arg: Box::new(arg),
                        pos,
                    })
                } else {
                    Ok(Expr::Ident { name, pos })
                }
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(t) => self.err(format!("unexpected `{}`", tok_text(&t))),
            None => self.err("unexpected end of input"),
        }
    }
}

fn tok_text(t: &Tok) -> String {
    match t {
        Tok::Num(n) => n.to_string(),
        Tok::Ident(s) => s.clone(),
        Tok::Plus => "+".into(),
        Tok::Minus => "-".into(),
        Tok::Star => "*".into(),
        Tok::Slash => "/".into(),
        Tok::Caret => "^".into(),
        Tok::LParen => "(".into(),
        Tok::RParen => ")".into(),
    }
}

pub fn parse(src: &str) -> Result<Expr> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: src.len(),
    };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err(format!("unexpected `{}`", tok_text(p.peek().unwrap())));
    }
    Ok(e)
}

/// Evaluates an expression to unreduced words over `generators` (free
/// concatenation). Only scalars, generators, `+ - * / ^` are allowed; this is
/// how rule right-hand sides in presentation files are read.
pub fn parse_raw(src: &str, generators: &[Generator]) -> Result<Terms> {
    raw(&parse(src)?, generators)
}

fn scalar_terms(c: CycScalar) -> Terms {
    let mut t = Terms::new();
    add_term(&mut t, Monomial::one(), c);
    t
}

fn as_scalar(t: &Terms) -> Option<CycScalar> {
    match t.len() {
        0 => Some(CycScalar::zero()),
        1 => t.get(&Monomial::one()).cloned(),
        _ => None,
    }
}

fn raw_mul(x: &Terms, y: &Terms) -> Terms {
    let mut out = Terms::new();
    for (m1, c1) in x {
        for (m2, c2) in y {
            add_term(&mut out, m1.concat(m2), c1 * c2);
        }
    }
    out
}

fn raw(e: &Expr, gens: &[Generator]) -> Result<Terms> {
    Ok(match e {
        Expr::Num(n) => scalar_terms(CycScalar::from_rational(num_rational::BigRational::from_integer(n.clone()))),
        Expr::Ident { name, pos } => match name.as_str() {
            "q" => scalar_terms(CycScalar::q()),
            "lambda" => scalar_terms(CycScalar::lambda()),
            _ => match gens.iter().position(|g| &g.name == name) {
                Some(i) => {
                    let mut t = Terms::new();
                    t.insert(Monomial(vec![Letter::new(i)]), CycScalar::one());
                    t
                }
                None => {
                    return Err(AlgebraError::Parse {
                        pos: *pos,
                        message: format!("unknown identifier `{name}`"),
                    })
                }
            },
        },
        Expr::Call { func, pos, .. } => {
            return Err(AlgebraError::Parse {
                pos: *pos,
                message: format!("function `{func}` is not allowed here"),
            })
        }
        Expr::Tensor(_) => {
            return Err(AlgebraError::Parse {
                pos: 0,
                message: "tensor products are not allowed here".into(),
            })
        }
        Expr::Neg(x) => {
            let mut out = Terms::new();
            add_terms_scaled(&mut out, &raw(x, gens)?, &CycScalar::from_int(-1));
            out
        }
        Expr::Add(x, y) | Expr::Sub(x, y) => {
            let mut out = raw(x, gens)?;
            let s = if matches!(e, Expr::Add(..)) { 1 } else { -1 };
            add_terms_scaled(&mut out, &raw(y, gens)?, &CycScalar::from_int(s));
            out
        }
        Expr::Mul(x, y) => raw_mul(&raw(x, gens)?, &raw(y, gens)?),
        Expr::Div { num, den, pos } => {
            let d = as_scalar(&raw(den, gens)?).ok_or_else(|| AlgebraError::Parse {
                pos: *pos,
                message: "can only divide by a scalar here".into(),
            })?;
            let mut out = Terms::new();
            add_terms_scaled(&mut out, &raw(num, gens)?, &d.inv()?);
            out
        }
        Expr::Pow { base, exp, pos } => {
            let b = raw(base, gens)?;
            if let Some(c) = as_scalar(&b) {
                scalar_terms(c.pow(*exp)?)
            } else if *exp >= 0 {
                let mut acc = scalar_terms(CycScalar::one());
                for _ in 0..*exp {
                    acc = raw_mul(&acc, &b);
                }
                acc
            } else {
                let letter = single_letter(&b).filter(|l| gens[l.index()].kind == GeneratorKind::Invertible);
                let Some(l) = letter else {
                    return Err(AlgebraError::Parse {
                        pos: *pos,
                        message: "negative powers need a scalar or an invertible generator".into(),
                    });
                };
                let mut t = Terms::new();
                t.insert(Monomial(vec![l.inverted(); exp.unsigned_abs() as usize]), CycScalar::one());
                t
            }
        }
    })
}

pub(crate) fn single_letter(t: &Terms) -> Option<Letter> {
    match t.iter().next() {
        Some((m, c)) if t.len() == 1 && c.is_one() && m.degree() == 1 => Some(m.0[0]),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_of_ox_and_sum() {
        let e = parse("a ox beta + beta ox d").unwrap();
        assert!(matches!(e, Expr::Add(ref l, ref r) if matches!(**l, Expr::Tensor(_)) && matches!(**r, Expr::Tensor(_))));
        let e = parse("2*a^3").unwrap();
        assert!(matches!(e, Expr::Mul(_, ref r) if matches!(**r, Expr::Pow { exp: 3, .. })));
    }

    #[test]
    fn syntax_errors_have_positions() {
        match parse("a * (b + c") {
            Err(AlgebraError::Parse { pos, .. }) => assert_eq!(pos, 10),
            other => panic!("{other:?}"),
        }
        match parse("a $ b") {
            Err(AlgebraError::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse("").is_err());
        assert!(parse("ox a").is_err());
        assert!(parse("a^b").is_err());
    }
}
