//! Text syntax for polynomials and differential forms.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' (INT | atom))*
//! atom  := NUMBER | IDENT | 'd' '(' IDENT ')' | '(' expr ')'
//! ```
//!
//! `^` followed by an integer is a power; between forms it is the wedge
//! product. There is no implicit multiplication.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};
use crate::scalars::{Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    Ident(String),
    D(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Wedge(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let mut n = num_bigint::BigInt::from(0);
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                n = n * 10 + chars[i].1.to_digit(10).unwrap();
                i += 1;
            }
            out.push((pos, Tok::Num(Rational::from_integer(n))));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_' || chars[i].1 == '\'') {
                i += 1;
            }
            let name: String = chars[start..i].iter().map(|(_, c)| *c).collect();
            out.push((pos, Tok::Ident(name)));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse { pos, msg: alloc::format!("unexpected character '{}'", c) });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.pos(), msg: msg.to_string() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut e = self.term()?;
        loop {
            if self.eat('+') {
                e = Expr::Add(Box::new(e), Box::new(self.term()?));
            } else if self.eat('-') {
                e = Expr::Sub(Box::new(e), Box::new(self.term()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut e = self.unary()?;
        loop {
            if self.eat('*') {
                e = Expr::Mul(Box::new(e), Box::new(self.unary()?));
            } else if self.eat('/') {
                e = Expr::Div(Box::new(e), Box::new(self.unary()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let mut e = self.atom()?;
        while self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.i += 1;
                    let e32 = n.to_integer().try_into().ok().filter(|_| n.is_integer());
                    match e32 {
                        Some(k) => e = Expr::Pow(Box::new(e), k),
                        None => return self.err("exponent too large"),
                    }
                }
                _ => e = Expr::Wedge(Box::new(e), Box::new(self.atom()?)),
            }
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.i += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Ident(name)) => {
                self.i += 1;
                if name == "d" && self.eat('(') {
                    let Some(Tok::Ident(v)) = self.peek().cloned() else {
                        return self.err("expected a variable inside d(...)");
                    };
                    self.i += 1;
                    if !self.eat(')') {
                        return self.err("expected ')'");
                    }
                    return Ok(Expr::D(v));
                }
                Ok(Expr::Ident(name))
            }
            Some(Tok::Op('(')) => {
                self.i += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(_) => self.err("unexpected token"),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse_expr(s: &str) -> Result<Expr> {
    let mut p = Parser { toks: tokenize(s)?, i: 0, end: s.len() };
    let e = p.expr()?;
    if p.i != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Evaluates an expression without differentials as a polynomial. Division
/// is only allowed by nonzero scalars.
pub fn eval_poly(ring: &PolyRing, e: &Expr) -> Result<Poly> {
    let n = ring.nvars();
    let k = &ring.field;
    Ok(match e {
        Expr::Num(q) => Poly::constant(n, Scalar::from_rational(q.clone())),
        Expr::Ident(name) => match ring.var_index(name) {
            Some(i) => Poly::var(n, i),
            None if !k.is_rationals() && name == k.generator_name() => Poly::constant(n, k.generator()),
            None => return Err(Error::InvalidInput(alloc::format!("unknown variable {}", name))),
        },
        Expr::D(_) | Expr::Wedge(..) => {
            return Err(Error::InvalidInput("differential in a polynomial expression".into()))
        }
        Expr::Neg(a) => eval_poly(ring, a)?.neg(),
        Expr::Add(a, b) => eval_poly(ring, a)?.add(&eval_poly(ring, b)?),
        Expr::Sub(a, b) => eval_poly(ring, a)?.sub(&eval_poly(ring, b)?),
        Expr::Mul(a, b) => eval_poly(ring, a)?.mul(k, &eval_poly(ring, b)?),
        Expr::Div(a, b) => {
            let d = eval_poly(ring, b)?;
            let c = d
                .constant_value()
                .ok_or_else(|| Error::InvalidInput("division by a non-constant polynomial".into()))?;
            let inv = k.inv(&c)?;
            eval_poly(ring, a)?.scale(k, &inv)
        }
        Expr::Pow(a, e) => eval_poly(ring, a)?.pow(k, *e),
    })
}

pub fn parse_poly(ring: &PolyRing, s: &str) -> Result<Poly> {
    eval_poly(ring, &parse_expr(s)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;
    use crate::scalars::{rat, Field};
    use alloc::vec;

    fn ring() -> PolyRing {
        PolyRing::new(Field::rationals(), vec!["x".into(), "y".into(), "t'".into()], MonomialOrder::DegRevLex)
    }

    #[test]
    fn polynomials() {
        let r = ring();
        let p = parse_poly(&r, "(x + y)^2 - 2*x*y").unwrap();
        assert_eq!(r.format(&p), "x^2 + y^2");
        assert_eq!(r.format(&parse_poly(&r, "1/2*x - -3").unwrap()), "1/2*x + 3");
        assert_eq!(r.format(&parse_poly(&r, "t'^3/4").unwrap()), "1/4*t'^3");
    }

    #[test]
    fn errors() {
        let r = ring();
        assert!(matches!(parse_poly(&r, "x +"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly(&r, "x $ y"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly(&r, "z"), Err(Error::InvalidInput(_))));
        assert!(matches!(parse_poly(&r, "x/y"), Err(Error::InvalidInput(_))));
        assert!(matches!(parse_poly(&r, "x/0"), Err(Error::DivisionByZero)));
        assert!(matches!(parse_poly(&r, "2 x"), Err(Error::Parse { .. })));
    }

    #[test]
    fn forms_parse() {
        let e = parse_expr("x * d(x)^d(y)").unwrap();
        assert_eq!(
            e,
            Expr::Mul(
                Box::new(Expr::Ident("x".into())),
                Box::new(Expr::Wedge(Box::new(Expr::D("x".into())), Box::new(Expr::D("y".into()))))
            )
        );
    }

    #[test]
    fn field_generator() {
        let k = Field::extension(vec![rat(1), rat(1), rat(1)], "w").unwrap().0;
        let r = PolyRing::new(k, vec!["x".into()], MonomialOrder::DegRevLex);
        assert_eq!(r.format(&parse_poly(&r, "w*w*x").unwrap()), "(-w - 1)*x");
    }
}
