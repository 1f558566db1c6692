//! A small expression language for formal power series.
//!
//! Job files and the command line describe generating functions as text;
//! this module parses that text and evaluates it into an exact [`Series`]
//! over either rational or polynomial coefficients.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr     := term  (('+' | '-') term)*
//! term     := unary (('*' | '/') unary)*
//! unary    := '-' unary | power
//! power    := atom ('^' exponent)?
//! atom     := integer
//!           | 't'                       -- the series variable
//!           | identifier                -- a parameter
//!           | ('exp' | 'log' | 'revert') '(' expr ')'
//!           | '(' expr ')'
//! exponent := '-'? integer              -- x^2, x^-1
//!           | '(' '-'? integer ('/' integer)? ')'   -- x^(-1/2)
//! ```
//!
//! Rational constants are spelled as quotients (`3/2` divides two constant
//! series, which is exact), while rational *exponents* must be
//! parenthesized, so `x^1/2` keeps its conventional reading `(x^1)/2`.
//! `t`, `exp`, `log` and `revert` are reserved words; every other
//! identifier is a parameter supplied at evaluation time, either as a
//! rational value or as a symbolic polynomial variable.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::{Poly, Rational, Ring, VarSet};
use crate::series::Series;
use crate::{Error, Result};

/// Parsed expression tree.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Number(Rational),
    /// The series variable `t`.
    T,
    /// A named parameter.
    Param(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    /// Power with a literal rational exponent.
    Pow(Box<Expr>, Rational),
    Exp(Box<Expr>),
    Log(Box<Expr>),
    Revert(Box<Expr>),
}

impl Expr {
    /// Parses source text into an expression tree.
    pub fn parse(src: &str) -> Result<Expr> {
        let toks = tokenize(src)?;
        let mut p = Parser { toks, pos: 0 };
        let e = p.expr()?;
        match p.peek() {
            None => Ok(e),
            Some(t) => Err(Error::Parse(format!("unexpected trailing '{t}'"))),
        }
    }

    /// The set of parameter names appearing in the expression.
    pub fn params(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_params(&mut out);
        out
    }

    fn collect_params(&self, out: &mut BTreeSet<String>) {
        match self {
            Expr::Number(_) | Expr::T => {}
            Expr::Param(name) => {
                out.insert(name.clone());
            }
            Expr::Neg(a) | Expr::Exp(a) | Expr::Log(a) | Expr::Revert(a) | Expr::Pow(a, _) => {
                a.collect_params(out)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_params(out);
                b.collect_params(out);
            }
        }
    }

    /// Evaluates to a series at the given truncation order; `lookup` supplies
    /// the value of each parameter (a missing parameter is a domain error).
    pub fn eval<R, F>(&self, order: usize, lookup: &mut F) -> Result<Series<R>>
    where
        R: Ring,
        F: FnMut(&str) -> Option<R>,
    {
        match self {
            Expr::Number(r) => Ok(Series::constant(R::from_rational(r), order)),
            Expr::T => {
                if order == 0 {
                    return Err(Error::Domain(
                        "the series variable needs truncation order >= 1".into(),
                    ));
                }
                Ok(Series::t(order))
            }
            Expr::Param(name) => match lookup(name) {
                Some(v) => Ok(Series::constant(v, order)),
                None => Err(Error::Domain(format!("unbound parameter '{name}'"))),
            },
            Expr::Neg(a) => Ok(a.eval(order, lookup)?.neg()),
            Expr::Add(a, b) => Ok(a.eval(order, lookup)?.add(&b.eval(order, lookup)?)),
            Expr::Sub(a, b) => Ok(a.eval(order, lookup)?.sub(&b.eval(order, lookup)?)),
            Expr::Mul(a, b) => Ok(a.eval(order, lookup)?.mul(&b.eval(order, lookup)?)),
            Expr::Div(a, b) => a.eval(order, lookup)?.div(&b.eval(order, lookup)?),
            Expr::Pow(a, e) => {
                let base = a.eval(order, lookup)?;
                if e.is_integer() {
                    let k = e.to_integer().to_i64().ok_or_else(|| {
                        Error::Domain(format!("exponent {e} out of range"))
                    })?;
                    base.pow_int(k)
                } else {
                    base.pow_rational(e)
                }
            }
            Expr::Exp(a) => a.eval(order, lookup)?.exp(),
            Expr::Log(a) => a.eval(order, lookup)?.log(),
            Expr::Revert(a) => a.eval(order, lookup)?.revert(),
        }
    }

    /// Evaluation with every parameter bound to a rational.
    pub fn eval_rational(
        &self,
        order: usize,
        bindings: &BTreeMap<String, Rational>,
    ) -> Result<Series<Rational>> {
        self.eval(order, &mut |name| bindings.get(name).cloned())
    }

    /// Evaluation over polynomial coefficients: parameters present in
    /// `bindings` become rational constants, the rest must be declared in
    /// `vars` and stay symbolic.
    pub fn eval_poly(
        &self,
        order: usize,
        vars: &VarSet,
        bindings: &BTreeMap<String, Rational>,
    ) -> Result<Series<Poly>> {
        self.eval(order, &mut |name| {
            if let Some(v) = bindings.get(name) {
                Some(Poly::from_rational(v))
            } else if vars.index_of(name).is_some() {
                Some(Poly::var(vars, name))
            } else {
                None
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
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

impl std::fmt::Display for Tok {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "{n}"),
            Tok::Ident(s) => write!(f, "{s}"),
            Tok::Plus => write!(f, "+"),
            Tok::Minus => write!(f, "-"),
            Tok::Star => write!(f, "*"),
            Tok::Slash => write!(f, "/"),
            Tok::Caret => write!(f, "^"),
            Tok::LParen => write!(f, "("),
            Tok::RParen => write!(f, ")"),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                chars.next();
                toks.push(match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    _ => Tok::RParen,
                });
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let n: BigInt = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid integer '{digits}'")))?;
                toks.push(Tok::Int(n));
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Ident(name));
            }
            other => {
                return Err(Error::Parse(format!("unexpected character '{other}'")));
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok) -> Result<()> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{t}'")))
        }
    }

    fn unexpected(&self, wanted: &str) -> Error {
        match self.peek() {
            Some(got) => Error::Parse(format!("expected {wanted}, found '{got}'")),
            None => Error::Parse(format!("expected {wanted}, found end of input")),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat(&Tok::Minus) {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
            } else if self.eat(&Tok::Slash) {
                acc = Expr::Div(Box::new(acc), Box::new(self.unary()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(&Tok::Minus) {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat(&Tok::Caret) {
            let e = self.exponent()?;
            Ok(Expr::Pow(Box::new(base), e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(Expr::Number(Rational::from_integer(n))),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(&Tok::RParen)?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => match name.as_str() {
                "t" => Ok(Expr::T),
                "exp" | "log" | "revert" => {
                    self.expect(&Tok::LParen)?;
                    let inner = Box::new(self.expr()?);
                    self.expect(&Tok::RParen)?;
                    Ok(match name.as_str() {
                        "exp" => Expr::Exp(inner),
                        "log" => Expr::Log(inner),
                        _ => Expr::Revert(inner),
                    })
                }
                _ => Ok(Expr::Param(name)),
            },
            Some(got) => Err(Error::Parse(format!("expected a value, found '{got}'"))),
            None => Err(Error::Parse("expected a value, found end of input".into())),
        }
    }

    fn exponent(&mut self) -> Result<Rational> {
        if self.eat(&Tok::LParen) {
            let e = self.signed_rational()?;
            self.expect(&Tok::RParen)?;
            Ok(e)
        } else {
            let neg = self.eat(&Tok::Minus);
            let n = self.integer()?;
            Ok(Rational::from_integer(if neg { -n } else { n }))
        }
    }

    fn signed_rational(&mut self) -> Result<Rational> {
        let neg = self.eat(&Tok::Minus);
        let p = self.integer()?;
        let q = if self.eat(&Tok::Slash) {
            let q = self.integer()?;
            if num_traits::Zero::is_zero(&q) {
                return Err(Error::Parse("zero denominator in exponent".into()));
            }
            q
        } else {
            BigInt::from(1)
        };
        let r = Rational::new(p, q);
        Ok(if neg { -r } else { r })
    }

    fn integer(&mut self) -> Result<BigInt> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(n),
            Some(got) => Err(Error::Parse(format!("expected an integer, found '{got}'"))),
            None => Err(Error::Parse("expected an integer, found end of input".into())),
        }
    }
}
