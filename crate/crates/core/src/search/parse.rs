//! Recursive-descent parser for Weierstrass equations.
//!
//! Accepted inputs are either a coefficient list `[a1, a2, a3, a4, a6]` or an
//! equation in `x` and `y` of Weierstrass shape, for example
//! `y^2 + x*y = x^3 + T*x^2 + 1` or `y^2 = x(x-1)(x-T)`. Coefficients are
//! expressions in `T` built from integers, `+ - * / ^`, parentheses and
//! juxtaposition; `z` names the generator of a proper extension field.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::algebra::{Field, RatFunc};
use crate::error::{Error, Result};
use crate::weierstrass::WeierstrassEq;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(char),
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => n.to_string(),
            Tok::Ident(c) | Tok::Sym(c) => c.to_string(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((start, Tok::Int(digits.parse().unwrap())));
        } else if matches!(c, 'T' | 'x' | 'y' | 'z') {
            out.push((i, Tok::Ident(c)));
            i += 1;
        } else if "+-*/^()[],=".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Parse {
                pos: i,
                expected: "a number, T, x, y, an operator or a bracket".into(),
                found: c.to_string(),
            });
        }
    }
    out.push((chars.len(), Tok::End));
    Ok(out)
}

/// Polynomial in `x, y` with coefficients in `k(T)`, keyed by `(deg_x, deg_y)`.
#[derive(Clone, Debug)]
struct XY<F: Field> {
    terms: BTreeMap<(u32, u32), RatFunc<F>>,
}

impl<F: Field> XY<F> {
    fn scalar(c: RatFunc<F>) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        XY { terms }
    }

    fn var(field: &F, key: (u32, u32)) -> Self {
        XY {
            terms: BTreeMap::from([(key, RatFunc::one(field))]),
        }
    }

    fn as_scalar(&self, field: &F) -> Option<RatFunc<F>> {
        match self.terms.len() {
            0 => Some(RatFunc::zero(field)),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    fn coeff(&self, field: &F, key: (u32, u32)) -> RatFunc<F> {
        self.terms
            .get(&key)
            .cloned()
            .unwrap_or_else(|| RatFunc::zero(field))
    }

    fn add(mut self, other: &Self, sign: bool) -> Self {
        for (k, c) in &other.terms {
            let cur = self.terms.remove(k);
            let next = match (cur, sign) {
                (Some(a), true) => &a + c,
                (Some(a), false) => &a - c,
                (None, true) => c.clone(),
                (None, false) => -c,
            };
            if !next.is_zero() {
                self.terms.insert(*k, next);
            }
        }
        self
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = XY {
            terms: BTreeMap::new(),
        };
        for (&(a, b), c) in &self.terms {
            for (&(d, e), f) in &other.terms {
                let part = XY {
                    terms: BTreeMap::from([((a + d, b + e), c * f)]),
                };
                out = out.add(&part, true);
            }
        }
        out
    }
}

struct Parser<'a, F: Field> {
    field: &'a F,
    toks: Vec<(usize, Tok)>,
    at: usize,
}

type PResult<T> = Result<T>;

impl<'a, F: Field> Parser<'a, F> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn error<T>(&self, expected: &str) -> PResult<T> {
        Err(Error::Parse {
            pos: self.pos(),
            expected: expected.into(),
            found: self.peek().describe(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(&format!("'{c}'"))
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Tok::Int(_) | Tok::Ident(_) | Tok::Sym('('))
    }

    fn expr(&mut self) -> PResult<XY<F>> {
        let negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let first = self.term()?;
        let mut acc = if negate {
            XY::scalar(RatFunc::zero(self.field)).add(&first, false)
        } else {
            first
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?, true);
            } else if self.eat('-') {
                acc = acc.add(&self.term()?, false);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> PResult<XY<F>> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if *self.peek() == Tok::Sym('/') {
                let pos = self.pos();
                self.at += 1;
                let den = self.unary()?;
                let Some(d) = den.as_scalar(self.field) else {
                    return Err(Error::Parse {
                        pos,
                        expected: "a divisor free of x and y".into(),
                        found: "x or y".into(),
                    });
                };
                let inv = d.inv().map_err(|_| {
                    Error::NotInField(format!("division by zero at position {pos}"))
                })?;
                acc = acc.mul(&XY::scalar(inv));
            } else if self.starts_atom() {
                acc = acc.mul(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> PResult<XY<F>> {
        if self.eat('-') {
            let inner = self.unary()?;
            return Ok(XY::scalar(RatFunc::zero(self.field)).add(&inner, false));
        }
        self.power()
    }

    fn power(&mut self) -> PResult<XY<F>> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let pos = self.pos();
        let Tok::Int(n) = self.peek().clone() else {
            return self.error("an integer exponent");
        };
        self.at += 1;
        let e: u32 = (&n).try_into().map_err(|_| Error::Parse {
            pos,
            expected: "an exponent below 2^32".into(),
            found: n.to_string(),
        })?;
        if negative {
            let Some(b) = base.as_scalar(self.field) else {
                return Err(Error::Parse {
                    pos,
                    expected: "a nonnegative exponent on an expression in x or y".into(),
                    found: format!("-{e}"),
                });
            };
            let r = b.powi(-(e as i64)).map_err(|_| {
                Error::NotInField(format!("negative power of zero at position {pos}"))
            })?;
            return Ok(XY::scalar(r));
        }
        let mut out = XY::scalar(RatFunc::one(self.field));
        for _ in 0..e {
            out = out.mul(&base);
        }
        Ok(out)
    }

    fn atom(&mut self) -> PResult<XY<F>> {
        let f = self.field;
        match self.peek().clone() {
            Tok::Int(n) => {
                self.at += 1;
                Ok(XY::scalar(RatFunc::constant(f, f.from_int(&n))))
            }
            Tok::Ident('T') => {
                self.at += 1;
                Ok(XY::scalar(RatFunc::t(f)))
            }
            Tok::Ident('x') => {
                self.at += 1;
                Ok(XY::var(f, (1, 0)))
            }
            Tok::Ident('y') => {
                self.at += 1;
                Ok(XY::var(f, (0, 1)))
            }
            Tok::Ident('z') => match f.generator() {
                Some(z) => {
                    self.at += 1;
                    Ok(XY::scalar(RatFunc::constant(f, z)))
                }
                None => self.error("T, x or y (z names the generator of an extension field)"),
            },
            Tok::Sym('(') => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            _ => self.error("a number, T, x, y or '('"),
        }
    }

    fn coefficient(&mut self) -> PResult<RatFunc<F>> {
        let pos = self.pos();
        let e = self.expr()?;
        e.as_scalar(self.field).ok_or(Error::Parse {
            pos,
            expected: "a coefficient in T".into(),
            found: "an expression in x or y".into(),
        })
    }

    fn equation(&mut self) -> PResult<WeierstrassEq<F>> {
        let f = self.field;
        let coeffs = if self.eat('[') {
            let mut a = Vec::with_capacity(5);
            for i in 0..5 {
                if i > 0 {
                    self.expect(',')?;
                }
                a.push(self.coefficient()?);
            }
            self.expect(']')?;
            a
        } else {
            let lhs = self.expr()?;
            self.expect('=')?;
            let rhs = self.expr()?;
            let p = lhs.add(&rhs, false);
            let allowed = [(0, 2), (1, 1), (0, 1), (3, 0), (2, 0), (1, 0), (0, 0)];
            if let Some((&(i, j), _)) = p.terms.iter().find(|(k, _)| !allowed.contains(k)) {
                return Err(Error::Parse {
                    pos: 0,
                    expected: "an equation y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6".into(),
                    found: format!("a term x^{i}*y^{j}"),
                });
            }
            let cy = p.coeff(f, (0, 2));
            let cx = p.coeff(f, (3, 0));
            if !cy.is_constant() || cy.is_zero() || cy != -&cx {
                return Err(Error::Parse {
                    pos: 0,
                    expected: "y^2 and x^3 with opposite constant coefficients across the sides"
                        .into(),
                    found: format!("y^2 coefficient {cy}, x^3 coefficient {}", -&cx),
                });
            }
            let inv = cy.inv()?;
            let c = |k| &p.coeff(f, k) * &inv;
            vec![c((1, 1)), -&c((2, 0)), c((0, 1)), -&c((1, 0)), -&c((0, 0))]
        };
        if *self.peek() != Tok::End {
            return self.error("end of input");
        }
        let a: [RatFunc<F>; 5] = coeffs.try_into().unwrap();
        WeierstrassEq::new(a)
    }
}

/// Parses an equation over `field`. Singular equations give [`Error::Singular`].
pub fn parse_equation<F: Field>(text: &str, field: &F) -> Result<WeierstrassEq<F>> {
    let mut p = Parser {
        field,
        toks: lex(text)?,
        at: 0,
    };
    p.equation()
}

/// Parses an element of `k(T)`.
pub fn parse_ratfunc<F: Field>(text: &str, field: &F) -> Result<RatFunc<F>> {
    let mut p = Parser {
        field,
        toks: lex(text)?,
        at: 0,
    };
    let c = p.coefficient()?;
    if *p.peek() != Tok::End {
        return p.error("end of input");
    }
    Ok(c)
}
