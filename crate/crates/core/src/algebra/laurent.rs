//! Laurent polynomials `P(T) * T^k` with `P(0) != 0`.

use std::fmt;

use super::field::Field;
use super::poly::Poly;
use super::ratfunc::RatFunc;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<F: Field> {
    unit_part: Poly<F>,
    shift: i64,
}

impl<F: Field> LaurentPoly<F> {
    /// `p * T^shift`, renormalized so the unit part has nonzero constant term.
    pub fn new(p: Poly<F>, shift: i64) -> Self {
        if p.is_zero() {
            return LaurentPoly {
                unit_part: p,
                shift: 0,
            };
        }
        let k = p.trailing_zeros();
        LaurentPoly {
            unit_part: p.unshift(k),
            shift: shift + k as i64,
        }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        Self::new(p, 0)
    }

    pub fn zero(field: &F) -> Self {
        Self::new(Poly::zero(field), 0)
    }

    /// `c * T^k`.
    pub fn monomial(field: &F, c: F::Elem, k: i64) -> Self {
        Self::new(Poly::constant(field, c), k)
    }

    pub fn field(&self) -> &F {
        self.unit_part.field()
    }

    pub fn unit_part(&self) -> &Poly<F> {
        &self.unit_part
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn is_zero(&self) -> bool {
        self.unit_part.is_zero()
    }

    /// Units of `k[T, 1/T]` are `c * T^k` with `c != 0`.
    pub fn is_unit(&self) -> bool {
        self.unit_part.degree() == Some(0)
    }

    /// Whether the value lies in `k[T]`.
    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.shift >= 0
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.unit_part * &other.unit_part, self.shift + other.shift)
    }

    pub fn pow(&self, e: u64) -> Self {
        Self::new(self.unit_part.pow(e), self.shift * e as i64)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        Self::new(self.unit_part.scale(c), self.shift)
    }

    fn aligned(&self, other: &Self) -> (Poly<F>, Poly<F>, i64) {
        let base = match (self.is_zero(), other.is_zero()) {
            (true, _) => other.shift,
            (_, true) => self.shift,
            _ => self.shift.min(other.shift),
        };
        let a = self.unit_part.shift((self.shift - base) as usize);
        let b = other.unit_part.shift((other.shift - base) as usize);
        (a, b, base)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b, base) = self.aligned(other);
        Self::new(&a + &b, base)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (a, b, base) = self.aligned(other);
        Self::new(&a - &b, base)
    }

    pub fn to_ratfunc(&self) -> RatFunc<F> {
        let f = self.field();
        if self.shift >= 0 {
            RatFunc::from_poly(self.unit_part.shift(self.shift as usize))
        } else {
            RatFunc::new(
                self.unit_part.clone(),
                Poly::monomial(f, f.one(), self.shift.unsigned_abs() as usize),
            )
            .unwrap()
        }
    }

    /// Inverse of [`to_ratfunc`](Self::to_ratfunc) when the denominator is a power of T.
    pub fn from_ratfunc(x: &RatFunc<F>) -> Option<Self> {
        let d = x.den();
        let k = d.degree()?;
        if d.trailing_zeros() != k {
            return None;
        }
        Some(Self::new(x.num().clone(), -(k as i64)))
    }
}

impl<F: Field> fmt::Display for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        match self.shift {
            0 => write!(f, "{}", self.unit_part),
            k if self.unit_part.is_one() => write!(f, "T^{k}"),
            k => write!(f, "({})*T^{k}", self.unit_part),
        }
    }
}

impl<F: Field> fmt::Debug for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent[{}]({})", self.field().descriptor(), self)
    }
}
