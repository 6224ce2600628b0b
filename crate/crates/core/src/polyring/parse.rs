//! Expression grammar.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' INT)?
//! atom  := INT | IDENT | '(' expr ')'
//! ```
//!
//! `d` is `∂`; `x`, `y`, `z`, `w`, `x4` … are λ-variables; every other
//! identifier is a parameter. A divisor must be a nonzero polynomial in
//! parameters only.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::monomial::{is_identifier, Param, VarId};
use super::param::ParamField;
use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Ident(String, usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let bytes: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < bytes.len() {
        let (pos, c) = bytes[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = bytes[start..i].iter().map(|(_, c)| *c).collect();
            out.push((Tok::Int(s.parse().unwrap()), pos));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len()
                && (bytes[i].1.is_ascii_alphanumeric() || bytes[i].1 == '_' || bytes[i].1 == '\'')
            {
                i += 1;
            }
            let s: String = bytes[start..i].iter().map(|(_, c)| *c).collect();
            out.push((Tok::Ident(s), pos));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), pos));
            i += 1;
        } else {
            return Err(Error::Syntax {
                pos,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    i: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.peek() == Some(&Tok::Op('/')) {
                let pos = self.pos();
                self.i += 1;
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), pos);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    let e: u32 = match n.try_into() {
                        Ok(e) if e <= 1000 => e,
                        _ => return self.err("exponent too large"),
                    };
                    self.i += 1;
                    Ok(Expr::Pow(Box::new(base), e))
                }
                _ => self.err("expected a nonnegative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.i += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Ident(s)) => {
                self.i += 1;
                Ok(Expr::Ident(s, pos))
            }
            Some(Tok::Op('(')) => {
                self.i += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `src` into an expression tree without resolving names.
pub fn parse_expr(src: &str) -> Result<Expr> {
    let toks = tokenize(src)?;
    let mut p = Parser {
        toks,
        i: 0,
        end: src.len(),
    };
    let e = p.expr()?;
    if p.i != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Which parameter names an expression may mention.
#[derive(Clone, Debug, Default)]
pub struct ParamScope {
    allowed: Option<BTreeSet<String>>,
}

impl ParamScope {
    /// Any non-reserved identifier is accepted as a parameter.
    pub fn open() -> Self {
        ParamScope { allowed: None }
    }

    pub fn declared<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        ParamScope {
            allowed: Some(names.into_iter().map(Into::into).collect()),
        }
    }

    pub fn resolve(&self, name: &str) -> Result<VarId> {
        if !is_identifier(name) {
            return Err(Error::UnknownVariable(name.to_string()));
        }
        let v = VarId::from_name(name)?;
        if let (VarId::Param(_), Some(allowed)) = (&v, &self.allowed) {
            if !allowed.contains(name) {
                return Err(Error::UnknownVariable(name.to_string()));
            }
        }
        Ok(v)
    }
}

fn var_poly(v: VarId) -> Poly {
    match v {
        VarId::Param(p) => Poly::param(p),
        other => Poly::var(other.lam_var().unwrap()),
    }
}

/// Evaluates a tree to a polynomial; identifiers go through `leaf`.
pub(crate) fn eval_with<T: Clone>(
    e: &Expr,
    leaf: &mut impl FnMut(&str, usize) -> Result<T>,
    ops: &impl ValueOps<T>,
) -> Result<T> {
    Ok(match e {
        Expr::Int(n) => ops.scalar(Poly::rational(BigRational::from_integer(n.clone()))),
        Expr::Ident(s, pos) => leaf(s, *pos)?,
        Expr::Neg(a) => ops.neg(eval_with(a, leaf, ops)?),
        Expr::Add(a, b) => ops.add(eval_with(a, leaf, ops)?, eval_with(b, leaf, ops)?)?,
        Expr::Sub(a, b) => {
            let rhs = ops.neg(eval_with(b, leaf, ops)?);
            ops.add(eval_with(a, leaf, ops)?, rhs)?
        }
        Expr::Mul(a, b) => ops.mul(eval_with(a, leaf, ops)?, eval_with(b, leaf, ops)?)?,
        Expr::Div(a, b, pos) => {
            let num = eval_with(a, leaf, ops)?;
            let den = eval_with(b, leaf, ops)?;
            let den = ops
                .as_poly(&den)
                .and_then(|p| p.as_field())
                .ok_or_else(|| Error::Syntax {
                    pos: *pos,
                    msg: "divisor must be a polynomial in parameters only".into(),
                })?;
            if den.is_zero() {
                return Err(Error::Syntax {
                    pos: *pos,
                    msg: "division by zero".into(),
                });
            }
            ops.mul(num, ops.scalar(Poly::from_field(den.inv()?)))?
        }
        Expr::Pow(a, k) => {
            let base = eval_with(a, leaf, ops)?;
            let mut acc = ops.scalar(Poly::one());
            for _ in 0..*k {
                acc = ops.mul(acc, base.clone())?;
            }
            acc
        }
    })
}

/// Arithmetic on whatever values an expression evaluates to.
pub(crate) trait ValueOps<T: Clone> {
    fn scalar(&self, p: Poly) -> T;
    fn as_poly<'a>(&self, v: &'a T) -> Option<&'a Poly>;
    fn neg(&self, v: T) -> T;
    fn add(&self, a: T, b: T) -> Result<T>;
    fn mul(&self, a: T, b: T) -> Result<T>;
}

struct PolyOps;

impl ValueOps<Poly> for PolyOps {
    fn scalar(&self, p: Poly) -> Poly {
        p
    }
    fn as_poly<'a>(&self, v: &'a Poly) -> Option<&'a Poly> {
        Some(v)
    }
    fn neg(&self, v: Poly) -> Poly {
        -v
    }
    fn add(&self, a: Poly, b: Poly) -> Result<Poly> {
        Ok(a + b)
    }
    fn mul(&self, a: Poly, b: Poly) -> Result<Poly> {
        Ok(a * b)
    }
}

/// Parses a polynomial, resolving parameters through `scope`.
pub fn parse_poly_in(src: &str, scope: &ParamScope) -> Result<Poly> {
    let e = parse_expr(src)?;
    eval_with(
        &e,
        &mut |name, _| scope.resolve(name).map(var_poly),
        &PolyOps,
    )
}

/// Parses a polynomial; any non-reserved identifier is a parameter.
pub fn parse_poly(src: &str) -> Result<Poly> {
    parse_poly_in(src, &ParamScope::open())
}

/// Parses a parameter-only expression.
pub fn parse_field(src: &str, scope: &ParamScope) -> Result<ParamField> {
    let p = parse_poly_in(src, scope)?;
    p.as_field()
        .ok_or_else(|| Error::Invalid(format!("`{src}` must not mention d or lambda variables")))
}

/// Interns a parameter after checking it is a legal name.
pub fn param(name: &str) -> Result<Param> {
    Param::new(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_basic_forms() {
        let p = parse_poly("d + 2*x").unwrap();
        assert_eq!(
            p,
            &Poly::del() + &Poly::lam(0).scale(&ParamField::from_i64(2))
        );
        assert!(parse_poly("0").unwrap().is_zero());
        let w = parse_poly("(d + a*x + b)").unwrap();
        assert_eq!(w.to_string(), "d + a*x + b");
    }

    #[test]
    fn precedence_and_rationals() {
        assert_eq!(parse_poly("-x^2").unwrap(), -Poly::lam(0).pow(2));
        assert_eq!(parse_poly("2^3").unwrap(), Poly::int(8));
        let half = parse_poly("1/2*x").unwrap();
        assert_eq!(half.to_string(), "1/2*x");
        assert_eq!(parse_poly("k*m/c0*x").unwrap().to_string(), "k*m/c0*x");
    }

    #[test]
    fn errors_have_positions() {
        match parse_poly("d + * x") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_poly("x/d"),
            Err(Error::Syntax { pos: 1, .. })
        ));
        assert!(matches!(parse_poly("x/0"), Err(Error::Syntax { .. })));
        let scope = ParamScope::declared(["a"]);
        assert!(matches!(
            parse_poly_in("a + q", &scope),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn print_parse_fixed_point() {
        for s in [
            "d^2 - 3*d*x + 2*x^2",
            "(c2/c1)*(d - b)",
            "(a - 2)*x + b/(c0*c1)",
            "k*m/c0*x - k^2/c0*x^2",
            "(a + b)/c*y - 7/3",
        ] {
            let p = parse_poly(s).unwrap();
            let printed = p.to_string();
            let q = parse_poly(&printed).unwrap();
            assert_eq!(p, q, "{s} -> {printed}");
            assert_eq!(printed, q.to_string());
        }
    }
}
