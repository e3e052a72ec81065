//! Changes of variables `x = u^2 x' + r`, `y = u^3 y' + u^2 s x' + t` and the
//! reduced normal forms in characteristics 2 and 3.

use std::fmt;

use crate::algebra::{Field, RatFunc};
use crate::error::{Error, Result};
use crate::weierstrass::WeierstrassEq;

/// `(u, r, s, t)` mapping an equation to the primed one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Transform<F: Field> {
    pub u: RatFunc<F>,
    pub r: RatFunc<F>,
    pub s: RatFunc<F>,
    pub t: RatFunc<F>,
}

impl<F: Field> Transform<F> {
    pub fn new(u: RatFunc<F>, r: RatFunc<F>, s: RatFunc<F>, t: RatFunc<F>) -> Result<Self> {
        if u.is_zero() {
            return Err(Error::ZeroInput("transform with u = 0"));
        }
        Ok(Transform { u, r, s, t })
    }

    pub fn identity(field: &F) -> Self {
        let z = RatFunc::zero(field);
        Transform {
            u: RatFunc::one(field),
            r: z.clone(),
            s: z.clone(),
            t: z,
        }
    }

    pub fn scaling(u: RatFunc<F>) -> Result<Self> {
        let z = RatFunc::zero(u.field());
        Self::new(u, z.clone(), z.clone(), z)
    }

    pub fn field(&self) -> &F {
        self.u.field()
    }

    pub fn is_identity(&self) -> bool {
        self.u.is_one() && self.r.is_zero() && self.s.is_zero() && self.t.is_zero()
    }

    /// The transform equivalent to applying `self` and then `other`.
    pub fn compose(&self, other: &Self) -> Self {
        let u1 = &self.u;
        let u1sq = u1 * u1;
        Transform {
            u: u1 * &other.u,
            r: &self.r + &(&u1sq * &other.r),
            s: &self.s + &(u1 * &other.s),
            t: &(&self.t + &(&(&u1sq * u1) * &other.t)) + &(&(&u1sq * &self.s) * &other.r),
        }
    }

    pub fn invert(&self) -> Self {
        let ui = self.u.inv().expect("u is nonzero");
        let ui2 = &ui * &ui;
        let ui3 = &ui2 * &ui;
        Transform {
            r: -&(&self.r * &ui2),
            s: -&(&self.s * &ui),
            t: &(&(&self.r * &self.s) - &self.t) * &ui3,
            u: ui,
        }
    }
}

impl<F: Field> fmt::Display for Transform<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(u={}, r={}, s={}, t={})",
            self.u, self.r, self.s, self.t
        )
    }
}

impl<F: Field> fmt::Debug for Transform<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Transform{self}")
    }
}

/// Coefficients of the primed equation.
pub fn apply<F: Field>(w: &WeierstrassEq<F>, tr: &Transform<F>) -> Result<WeierstrassEq<F>> {
    if tr.u.is_zero() {
        return Err(Error::ZeroInput("transform with u = 0"));
    }
    Ok(apply_unchecked(w, tr))
}

pub(crate) fn apply_unchecked<F: Field>(
    w: &WeierstrassEq<F>,
    tr: &Transform<F>,
) -> WeierstrassEq<F> {
    if tr.is_identity() {
        return w.clone();
    }
    let field = w.field();
    let k = |n: i64| RatFunc::from_i64(field, n);
    let [a1, a2, a3, a4, a6] = w.coeffs();
    let Transform { u, r, s, t } = tr;
    let ui = u.inv().unwrap();
    let ui2 = &ui * &ui;
    let ui3 = &ui2 * &ui;
    let ui4 = &ui2 * &ui2;
    let ui6 = &ui3 * &ui3;
    let rs = r * s;
    let n1 = a1 + &(&k(2) * s);
    let n2 = &(&(a2 - &(s * a1)) + &(&k(3) * r)) - &(s * s);
    let n3 = &(a3 + &(r * a1)) + &(&k(2) * t);
    let n4 = &(&(&(&(a4 - &(s * a3)) + &(&k(2) * &(r * a2))) - &(&(t + &rs) * a1))
        + &(&k(3) * &(r * r)))
        - &(&k(2) * &(s * t));
    let rr = r * r;
    let n6 = &(&(&(&(&(a6 + &(r * a4)) + &(&rr * a2)) + &(&rr * r)) - &(t * a3)) - &(t * t))
        - &(&(r * t) * a1);
    WeierstrassEq::raw([&n1 * &ui, &n2 * &ui2, &n3 * &ui3, &n4 * &ui4, &n6 * &ui6])
}

/// Normal forms in characteristics 3 and 2, named by the shape of the equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReducedForm<F: Field> {
    /// `y^2 = x^3 + a2 x^2 + a6`, `Δ = -a2^3 a6`, `j = -a2^3/a6`.
    Char3JNonzero { a2: RatFunc<F>, a6: RatFunc<F> },
    /// `y^2 = x^3 + a4 x + a6`, `Δ = -a4^3`.
    Char3JZero { a4: RatFunc<F>, a6: RatFunc<F> },
    /// `y^2 + xy = x^3 + a2 x^2 + a6`, `Δ = a6`, `j = 1/a6`.
    Char2JNonzero { a2: RatFunc<F>, a6: RatFunc<F> },
    /// `y^2 + a3 y = x^3 + a4 x + a6`, `Δ = a3^4`.
    Char2JZero {
        a3: RatFunc<F>,
        a4: RatFunc<F>,
        a6: RatFunc<F>,
    },
}

/// Which reduced shape an equation belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReducedVariant {
    Char3JNonzero,
    Char3JZero,
    Char2JNonzero,
    Char2JZero,
}

impl ReducedVariant {
    pub const ALL: [ReducedVariant; 4] = [
        ReducedVariant::Char3JNonzero,
        ReducedVariant::Char3JZero,
        ReducedVariant::Char2JNonzero,
        ReducedVariant::Char2JZero,
    ];

    pub fn characteristic(self) -> u64 {
        match self {
            ReducedVariant::Char3JNonzero | ReducedVariant::Char3JZero => 3,
            ReducedVariant::Char2JNonzero | ReducedVariant::Char2JZero => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ReducedVariant::Char3JNonzero => "char3-j-nonzero",
            ReducedVariant::Char3JZero => "char3-j-zero",
            ReducedVariant::Char2JNonzero => "char2-j-nonzero",
            ReducedVariant::Char2JZero => "char2-j-zero",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|v| v.name() == s)
    }
}

impl<F: Field> ReducedForm<F> {
    pub fn variant(&self) -> ReducedVariant {
        match self {
            ReducedForm::Char3JNonzero { .. } => ReducedVariant::Char3JNonzero,
            ReducedForm::Char3JZero { .. } => ReducedVariant::Char3JZero,
            ReducedForm::Char2JNonzero { .. } => ReducedVariant::Char2JNonzero,
            ReducedForm::Char2JZero { .. } => ReducedVariant::Char2JZero,
        }
    }

    /// The equation this form stands for.
    pub fn to_equation(&self) -> WeierstrassEq<F> {
        let z = |x: &RatFunc<F>| RatFunc::zero(x.field());
        let one = |x: &RatFunc<F>| RatFunc::one(x.field());
        match self {
            ReducedForm::Char3JNonzero { a2, a6 } => {
                WeierstrassEq::raw([z(a2), a2.clone(), z(a2), z(a2), a6.clone()])
            }
            ReducedForm::Char3JZero { a4, a6 } => {
                WeierstrassEq::raw([z(a4), z(a4), z(a4), a4.clone(), a6.clone()])
            }
            ReducedForm::Char2JNonzero { a2, a6 } => {
                WeierstrassEq::raw([one(a2), a2.clone(), z(a2), z(a2), a6.clone()])
            }
            ReducedForm::Char2JZero { a3, a4, a6 } => {
                WeierstrassEq::raw([z(a3), z(a3), a3.clone(), a4.clone(), a6.clone()])
            }
        }
    }

    /// Reads the form off an equation that already has the right shape.
    pub fn recognize(w: &WeierstrassEq<F>) -> Option<Self> {
        let [a1, a2, a3, a4, a6] = w.coeffs().clone();
        match w.field().characteristic() {
            3 if a1.is_zero() && a3.is_zero() && !a2.is_zero() && a4.is_zero() => {
                Some(ReducedForm::Char3JNonzero { a2, a6 })
            }
            3 if a1.is_zero() && a3.is_zero() && a2.is_zero() => {
                Some(ReducedForm::Char3JZero { a4, a6 })
            }
            2 if a1.is_one() && a3.is_zero() && a4.is_zero() => {
                Some(ReducedForm::Char2JNonzero { a2, a6 })
            }
            2 if a1.is_zero() && a2.is_zero() => Some(ReducedForm::Char2JZero { a3, a4, a6 }),
            _ => None,
        }
    }

    /// Discriminant by the form's closed formula.
    pub fn discriminant(&self) -> RatFunc<F> {
        match self {
            ReducedForm::Char3JNonzero { a2, a6 } => -(&(&(a2 * a2) * a2) * a6),
            ReducedForm::Char3JZero { a4, .. } => -(&(a4 * a4) * a4),
            ReducedForm::Char2JNonzero { a6, .. } => a6.clone(),
            ReducedForm::Char2JZero { a3, .. } => {
                let sq = a3 * a3;
                &sq * &sq
            }
        }
    }

    /// j by the form's closed formula; `None` when singular.
    pub fn j_invariant(&self) -> Option<RatFunc<F>> {
        match self {
            ReducedForm::Char3JNonzero { a2, a6 } => {
                (!a6.is_zero()).then(|| (-(&(a2 * a2) * a2)).div(a6).unwrap())
            }
            ReducedForm::Char2JNonzero { a6, .. } => a6.inv().ok(),
            ReducedForm::Char3JZero { a4, .. } => {
                (!a4.is_zero()).then(|| RatFunc::zero(a4.field()))
            }
            ReducedForm::Char2JZero { a3, .. } => {
                (!a3.is_zero()).then(|| RatFunc::zero(a3.field()))
            }
        }
    }
}

/// Brings a nonsingular equation in characteristic 2 or 3 to its reduced form.
/// Applying the returned transform to `w` yields exactly the form's equation.
pub fn to_reduced_form<F: Field>(w: &WeierstrassEq<F>) -> Result<(ReducedForm<F>, Transform<F>)> {
    let field = w.field().clone();
    let p = field.characteristic();
    if p != 2 && p != 3 {
        return Err(Error::WrongCharacteristic(format!(
            "reduced forms exist in characteristic 2 and 3, not {p}"
        )));
    }
    if w.is_singular() {
        return Err(Error::Singular);
    }
    let zero = RatFunc::zero(&field);
    let one = RatFunc::one(&field);
    let mut total = Transform::identity(&field);
    let mut cur = w.clone();
    let mut step = |cur: &mut WeierstrassEq<F>, tr: Transform<F>| {
        *cur = apply_unchecked(cur, &tr);
        total = total.compose(&tr);
    };
    if p == 3 {
        // complete the square: s = -a1/2 = a1, t = -a3/2 = a3
        if !cur.a1().is_zero() || !cur.a3().is_zero() {
            let tr = Transform::new(
                one.clone(),
                zero.clone(),
                cur.a1().clone(),
                cur.a3().clone(),
            )?;
            step(&mut cur, tr);
        }
        if !cur.a2().is_zero() && !cur.a4().is_zero() {
            // a4' = a4 - r a2 in characteristic 3
            let r = cur.a4().div(cur.a2())?;
            step(
                &mut cur,
                Transform::new(one.clone(), r, zero.clone(), zero.clone())?,
            );
        }
    } else if !cur.a1().is_zero() {
        let u = cur.a1().clone();
        step(&mut cur, Transform::scaling(u)?);
        if !cur.a3().is_zero() {
            let r = cur.a3().clone();
            step(
                &mut cur,
                Transform::new(one.clone(), r, zero.clone(), zero.clone())?,
            );
        }
        if !cur.a4().is_zero() {
            let t = cur.a4().clone();
            step(
                &mut cur,
                Transform::new(one.clone(), zero.clone(), zero.clone(), t)?,
            );
        }
    } else if !cur.a2().is_zero() {
        let r = cur.a2().clone();
        step(
            &mut cur,
            Transform::new(one.clone(), r, zero.clone(), zero.clone())?,
        );
    }
    let form = ReducedForm::recognize(&cur).expect("reduction recipe reaches a reduced shape");
    Ok((form, total))
}

/// `y^2 = x^3 + a4 x + a6` in characteristic other than 2 and 3.
pub fn to_short_form<F: Field>(w: &WeierstrassEq<F>) -> Result<(WeierstrassEq<F>, Transform<F>)> {
    let field = w.field().clone();
    let p = field.characteristic();
    if p == 2 || p == 3 {
        return Err(Error::WrongCharacteristic(format!(
            "short form needs characteristic not 2 or 3, got {p}"
        )));
    }
    let half = RatFunc::from_i64(&field, 2).inv()?;
    let third = RatFunc::from_i64(&field, 3).inv()?;
    let zero = RatFunc::zero(&field);
    let one = RatFunc::one(&field);
    let s = -(w.a1() * &half);
    let t = -(w.a3() * &half);
    let t1 = Transform::new(one.clone(), zero.clone(), s, t)?;
    let w1 = apply_unchecked(w, &t1);
    let r = -(w1.a2() * &third);
    let t2 = Transform::new(one, r, zero.clone(), zero)?;
    let w2 = apply_unchecked(&w1, &t2);
    Ok((w2, t1.compose(&t2)))
}

/// Whether `tr` has the shape of the substitutions preserving `form`:
/// `(u,0,0,0)`, `(u,r,0,0)`, `(1,0,s,0)` or `(u,s^2,s,t)`.
pub fn stabilizer_check<F: Field>(form: &ReducedForm<F>, tr: &Transform<F>) -> bool {
    if tr.u.is_zero() {
        return false;
    }
    match form {
        ReducedForm::Char3JNonzero { .. } => tr.r.is_zero() && tr.s.is_zero() && tr.t.is_zero(),
        ReducedForm::Char3JZero { .. } => tr.s.is_zero() && tr.t.is_zero(),
        ReducedForm::Char2JNonzero { .. } => tr.u.is_one() && tr.r.is_zero() && tr.t.is_zero(),
        ReducedForm::Char2JZero { .. } => tr.r == &tr.s * &tr.s,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Poly, PrimeField, Rationals};
    use crate::weierstrass::{named_example, AnyCurve, NamedExample};

    fn q(c: &[i64]) -> RatFunc<Rationals> {
        RatFunc::from_poly(Poly::from_ints(&Rationals, c))
    }

    #[test]
    fn scaling_clears_t6() {
        let w = WeierstrassEq::raw([q(&[]), q(&[]), q(&[]), q(&[]), q(&[0, 0, 0, 0, 0, 0, 1])]);
        let w2 = apply(&w, &Transform::scaling(q(&[0, 1])).unwrap()).unwrap();
        assert_eq!(w2, WeierstrassEq::from_ints(&Rationals, [0, 0, 0, 0, 1]));
        let d = w.discriminant();
        assert_eq!(w2.discriminant(), d.div(&q(&[0, 1]).pow(12)).unwrap());
    }

    #[test]
    fn legendre_completing_the_cube() {
        let AnyCurve::Rational(w) = named_example(NamedExample::Legendre) else {
            panic!()
        };
        let r = RatFunc::new(
            Poly::from_ints(&Rationals, &[1, 1]),
            Poly::from_ints(&Rationals, &[3]),
        )
        .unwrap();
        let tr = Transform::new(q(&[1]), r, q(&[]), q(&[])).unwrap();
        let w2 = apply(&w, &tr).unwrap();
        assert!(w2.a2().is_zero());
        assert_eq!(w2.j_invariant(), w.j_invariant());
        let (short, _) = to_short_form(&w).unwrap();
        assert_eq!(short, w2);
    }

    #[test]
    fn group_laws() {
        let w = WeierstrassEq::raw([q(&[1]), q(&[0, 1]), q(&[2]), q(&[1, 1]), q(&[0, 0, 3])]);
        let t1 = Transform::new(q(&[0, 1]), q(&[1]), q(&[0, 2]), q(&[-1, 0, 1])).unwrap();
        let t2 = Transform::new(q(&[2]), q(&[1, 1]), q(&[3]), q(&[0, 1])).unwrap();
        let seq = apply(&apply(&w, &t1).unwrap(), &t2).unwrap();
        assert_eq!(apply(&w, &t1.compose(&t2)).unwrap(), seq);
        assert_eq!(apply(&apply(&w, &t1).unwrap(), &t1.invert()).unwrap(), w);
        assert!(Transform::identity(&Rationals).invert().is_identity());
        let inv = Transform::scaling(q(&[0, 1])).unwrap().invert();
        assert_eq!(inv.u, q(&[0, 1]).inv().unwrap());
        let tt = Transform::scaling(q(&[0, 1]))
            .unwrap()
            .compose(&Transform::new(q(&[1]), q(&[1]), q(&[]), q(&[])).unwrap());
        let w3 = apply(
            &apply(&w, &Transform::scaling(q(&[0, 1])).unwrap()).unwrap(),
            &Transform::new(q(&[1]), q(&[1]), q(&[]), q(&[])).unwrap(),
        )
        .unwrap();
        assert_eq!(apply(&w, &tt).unwrap(), w3);
    }

    #[test]
    fn reduced_form_examples() {
        let AnyCurve::Prime(w) = named_example(NamedExample::Char2TwoBad) else {
            panic!()
        };
        let (form, tr) = to_reduced_form(&w).unwrap();
        assert_eq!(form.variant(), ReducedVariant::Char2JNonzero);
        assert!(tr.is_identity());
        assert_eq!(form.to_equation(), w);
        let AnyCurve::Prime(w) = named_example(NamedExample::Char3TwoBad) else {
            panic!()
        };
        let (form, tr) = to_reduced_form(&w).unwrap();
        assert_eq!(form.variant(), ReducedVariant::Char3JNonzero);
        assert!(tr.is_identity());
        let f2 = PrimeField::new(2).unwrap();
        let p = |c: &[i64]| RatFunc::from_poly(Poly::from_ints(&f2, c));
        let w = WeierstrassEq::raw([p(&[]), p(&[0, 1]), p(&[1, 1]), p(&[1]), p(&[0, 0, 1])]);
        let (form, tr) = to_reduced_form(&w).unwrap();
        assert_eq!(form.variant(), ReducedVariant::Char2JZero);
        assert_eq!(apply(&w, &tr).unwrap(), form.to_equation());
        assert!(to_reduced_form(&WeierstrassEq::from_ints(&Rationals, [0, 0, 0, 1, 0])).is_err());
    }

    #[test]
    fn stabilizer_shapes() {
        let f2 = PrimeField::new(2).unwrap();
        let p = |c: &[i64]| RatFunc::from_poly(Poly::from_ints(&f2, c));
        let form = ReducedForm::Char2JNonzero {
            a2: p(&[1]),
            a6: p(&[0, 1]),
        };
        let third = ReducedForm::Char2JZero {
            a3: p(&[1]),
            a4: p(&[]),
            a6: p(&[0, 1]),
        };
        assert!(stabilizer_check(
            &form,
            &Transform::new(p(&[1]), p(&[]), p(&[0, 1]), p(&[])).unwrap()
        ));
        let f3 = PrimeField::new(3).unwrap();
        let u2 = RatFunc::from_i64(&f3, 2);
        let form3 = ReducedForm::Char3JNonzero {
            a2: RatFunc::t(&f3),
            a6: RatFunc::from_i64(&f3, 1),
        };
        assert!(stabilizer_check(
            &form3,
            &Transform::scaling(u2.clone()).unwrap()
        ));
        // the j != 0 shape in characteristic 2 only allows u = 1
        assert!(!stabilizer_check(
            &form,
            &Transform::scaling(p(&[0, 1])).unwrap()
        ));
        let s = p(&[0, 1]);
        let tr = Transform::new(p(&[0, 1]), &s * &s, s.clone(), p(&[1])).unwrap();
        assert!(stabilizer_check(&third, &tr));
        assert!(!stabilizer_check(
            &third,
            &Transform::new(p(&[1]), p(&[]), s, p(&[])).unwrap()
        ));
    }
}
