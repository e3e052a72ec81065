//! Weierstrass equations `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6` over `k(T)`.

use std::fmt;

use crate::algebra::{Field, Poly, PrimeField, RatFunc, Rationals};
use crate::error::{Error, Result};

/// Coefficients `[a1, a2, a3, a4, a6]`. The raw constructor allows `Δ = 0`;
/// [`WeierstrassEq::new`] rejects it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeierstrassEq<F: Field> {
    a: [RatFunc<F>; 5],
}

/// `b2, b4, b6, b8, c4, c6, Δ` and `j` when `Δ != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSet<F: Field> {
    pub b2: RatFunc<F>,
    pub b4: RatFunc<F>,
    pub b6: RatFunc<F>,
    pub b8: RatFunc<F>,
    pub c4: RatFunc<F>,
    pub c6: RatFunc<F>,
    pub delta: RatFunc<F>,
    pub j: Option<RatFunc<F>>,
}

impl<F: Field> WeierstrassEq<F> {
    pub fn raw(a: [RatFunc<F>; 5]) -> Self {
        WeierstrassEq { a }
    }

    /// Validated equation with nonzero discriminant.
    pub fn new(a: [RatFunc<F>; 5]) -> Result<Self> {
        let w = Self::raw(a);
        if w.discriminant().is_zero() {
            return Err(Error::Singular);
        }
        Ok(w)
    }

    pub fn from_polys(a: [Poly<F>; 5]) -> Self {
        Self::raw(a.map(RatFunc::from_poly))
    }

    /// Constant integer coefficients.
    pub fn from_ints(field: &F, a: [i64; 5]) -> Self {
        Self::raw(a.map(|c| RatFunc::from_i64(field, c)))
    }

    pub fn field(&self) -> &F {
        self.a[0].field()
    }

    pub fn coeffs(&self) -> &[RatFunc<F>; 5] {
        &self.a
    }

    pub fn a1(&self) -> &RatFunc<F> {
        &self.a[0]
    }
    pub fn a2(&self) -> &RatFunc<F> {
        &self.a[1]
    }
    pub fn a3(&self) -> &RatFunc<F> {
        &self.a[2]
    }
    pub fn a4(&self) -> &RatFunc<F> {
        &self.a[3]
    }
    pub fn a6(&self) -> &RatFunc<F> {
        &self.a[4]
    }

    fn k(&self, n: i64) -> RatFunc<F> {
        RatFunc::from_i64(self.field(), n)
    }

    pub fn b_invariants(&self) -> [RatFunc<F>; 4] {
        let [a1, a2, a3, a4, a6] = &self.a;
        let b2 = &(a1 * a1) + &(&self.k(4) * a2);
        let b4 = &(&self.k(2) * a4) + &(a1 * a3);
        let b6 = &(a3 * a3) + &(&self.k(4) * a6);
        let a1sq = a1 * a1;
        let b8 = &(&(&(&(&a1sq * a6) + &(&(&self.k(4) * a2) * a6)) - &(&(a1 * a3) * a4))
            + &(&(a2 * a3) * a3))
            - &(a4 * a4);
        [b2, b4, b6, b8]
    }

    pub fn discriminant(&self) -> RatFunc<F> {
        let [b2, b4, b6, b8] = self.b_invariants();
        delta_from_b(&b2, &b4, &b6, &b8, |n| self.k(n))
    }

    pub fn invariants(&self) -> InvariantSet<F> {
        let [b2, b4, b6, b8] = self.b_invariants();
        let k = |n| self.k(n);
        let c4 = &(&b2 * &b2) - &(&k(24) * &b4);
        let c6 = &(&(&k(36) * &(&b2 * &b4)) - &(&(&b2 * &b2) * &b2)) - &(&k(216) * &b6);
        let delta = delta_from_b(&b2, &b4, &b6, &b8, k);
        let j = (!delta.is_zero()).then(|| (&(&c4 * &c4) * &c4).div(&delta).unwrap());
        InvariantSet {
            b2,
            b4,
            b6,
            b8,
            c4,
            c6,
            delta,
            j,
        }
    }

    /// `j = c4^3 / Δ`; `None` for singular equations.
    pub fn j_invariant(&self) -> Option<RatFunc<F>> {
        self.invariants().j
    }

    pub fn is_singular(&self) -> bool {
        self.discriminant().is_zero()
    }

    /// All coefficients polynomial in `T`.
    pub fn is_integral(&self) -> bool {
        self.a.iter().all(|c| c.is_polynomial())
    }

    /// All coefficients constant.
    pub fn is_constant_model(&self) -> bool {
        self.a.iter().all(|c| c.is_constant())
    }

    /// Substitutes `T -> 1/T` in every coefficient.
    pub fn flip(&self) -> Self {
        Self::raw(self.a.clone().map(|c| c.flip()))
    }

    /// Maximum degree over numerators and denominators of the coefficients.
    pub fn max_degree(&self) -> usize {
        self.a.iter().map(|c| c.max_degree()).max().unwrap()
    }

    /// Text accepted by the equation parser.
    pub fn equation_string(&self) -> String {
        let term = |c: &RatFunc<F>, mono: &str| -> Option<String> {
            if c.is_zero() {
                return None;
            }
            let s = c.to_string();
            if mono.is_empty() {
                return Some(s);
            }
            Some(if c.is_one() {
                mono.to_string()
            } else {
                format!("({s})*{mono}")
            })
        };
        let [a1, a2, a3, a4, a6] = &self.a;
        let lhs: Vec<String> = [Some("y^2".to_string()), term(a1, "x*y"), term(a3, "y")]
            .into_iter()
            .flatten()
            .collect();
        let rhs: Vec<String> = [
            Some("x^3".to_string()),
            term(a2, "x^2"),
            term(a4, "x"),
            term(a6, ""),
        ]
        .into_iter()
        .flatten()
        .collect();
        format!("{} = {}", lhs.join(" + "), rhs.join(" + "))
    }
}

fn delta_from_b<F: Field>(
    b2: &RatFunc<F>,
    b4: &RatFunc<F>,
    b6: &RatFunc<F>,
    b8: &RatFunc<F>,
    k: impl Fn(i64) -> RatFunc<F>,
) -> RatFunc<F> {
    let t1 = &(b2 * b2) * b8;
    let t2 = &k(8) * &(&(b4 * b4) * b4);
    let t3 = &k(27) * &(b6 * b6);
    let t4 = &k(9) * &(&(b2 * b4) * b6);
    &(&(&(-&t1) - &t2) - &t3) + &t4
}

impl<F: Field> fmt::Display for WeierstrassEq<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl<F: Field> fmt::Debug for WeierstrassEq<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W[{}]{}", self.field().descriptor(), self)
    }
}

/// `a3^4 + a1^3 a3^3 + a1^4 (a1^2 a6 + a1 a3 a4 + a2 a3^2 + a4^2)`, valid in characteristic 2.
pub fn discriminant_char2<F: Field>(w: &WeierstrassEq<F>) -> Result<RatFunc<F>> {
    if w.field().characteristic() != 2 {
        return Err(Error::WrongCharacteristic(
            "expected characteristic 2".into(),
        ));
    }
    let [a1, a2, a3, a4, a6] = w.coeffs();
    let a1sq = a1 * a1;
    let a3sq = a3 * a3;
    let inner = &(&(&(&a1sq * a6) + &(&(a1 * a3) * a4)) + &(a2 * &a3sq)) + &(a4 * a4);
    let a1cube = &a1sq * a1;
    Ok(&(&(&a3sq * &a3sq) + &(&a1cube * &(&a3sq * a3))) + &(&(&a1sq * &a1sq) * &inner))
}

/// `-a4^3 + a2^2 a4^2 - a2^3 a6` for `a1 = a3 = 0` in characteristic 3.
pub fn discriminant_char3_reduced<F: Field>(w: &WeierstrassEq<F>) -> Result<RatFunc<F>> {
    if w.field().characteristic() != 3 {
        return Err(Error::WrongCharacteristic(
            "expected characteristic 3".into(),
        ));
    }
    if !w.a1().is_zero() || !w.a3().is_zero() {
        return Err(Error::Precondition("a1 and a3 must vanish".into()));
    }
    let (a2, a4, a6) = (w.a2(), w.a4(), w.a6());
    let a2sq = a2 * a2;
    let a4sq = a4 * a4;
    Ok(&(&(-&(&a4sq * a4)) + &(&a2sq * &a4sq)) - &(&(&a2sq * a2) * a6))
}

/// Equation over one of the concrete base fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyCurve {
    Rational(WeierstrassEq<Rationals>),
    Prime(WeierstrassEq<PrimeField>),
}

impl AnyCurve {
    pub fn descriptor(&self) -> String {
        match self {
            AnyCurve::Rational(w) => w.field().descriptor(),
            AnyCurve::Prime(w) => w.field().descriptor(),
        }
    }
}

/// The six example equations used throughout the documentation and tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedExample {
    /// `y^2 = x(x-1)(x-T)` over Q.
    Legendre,
    /// `y^2 = x^3 - 3T^2 x` over Q.
    J1728,
    /// `y^2 + xy = x^3 + x^2 + T` over F_2.
    Char2TwoBad,
    /// `y^2 = x^3 + T x^2 - T` over F_3.
    Char3TwoBad,
    /// `y^2 + xy = x^3 + T x^2 + 1` over F_2.
    Char2GoodA1,
    /// `y^2 = x^3 - x + T` over F_3.
    Char3GoodEverywhereA1,
}

impl NamedExample {
    pub const ALL: [NamedExample; 6] = [
        NamedExample::Legendre,
        NamedExample::J1728,
        NamedExample::Char2TwoBad,
        NamedExample::Char3TwoBad,
        NamedExample::Char2GoodA1,
        NamedExample::Char3GoodEverywhereA1,
    ];

    pub fn id(self) -> &'static str {
        match self {
            NamedExample::Legendre => "LEGENDRE",
            NamedExample::J1728 => "J1728",
            NamedExample::Char2TwoBad => "CHAR2_TWO_BAD",
            NamedExample::Char3TwoBad => "CHAR3_TWO_BAD",
            NamedExample::Char2GoodA1 => "CHAR2_GOOD_A1",
            NamedExample::Char3GoodEverywhereA1 => "CHAR3_GOOD_EVERYWHERE_A1",
        }
    }

    pub fn from_id(id: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|e| e.id().eq_ignore_ascii_case(id))
            .ok_or_else(|| Error::UnknownExample(id.to_string()))
    }
}

/// The exact equation for a named example.
pub fn named_example(id: NamedExample) -> AnyCurve {
    let q = Rationals;
    let qp = |c: &[i64]| RatFunc::from_poly(Poly::from_ints(&q, c));
    let fp = |p: u64, cs: [&[i64]; 5]| {
        let f = PrimeField::new(p).unwrap();
        AnyCurve::Prime(WeierstrassEq::from_polys(
            cs.map(|c| Poly::from_ints(&f, c)),
        ))
    };
    match id {
        NamedExample::Legendre => AnyCurve::Rational(WeierstrassEq::raw([
            qp(&[]),
            qp(&[-1, -1]),
            qp(&[]),
            qp(&[0, 1]),
            qp(&[]),
        ])),
        NamedExample::J1728 => AnyCurve::Rational(WeierstrassEq::raw([
            qp(&[]),
            qp(&[]),
            qp(&[]),
            qp(&[0, 0, -3]),
            qp(&[]),
        ])),
        NamedExample::Char2TwoBad => fp(2, [&[1], &[1], &[], &[], &[0, 1]]),
        NamedExample::Char3TwoBad => fp(3, [&[], &[0, 1], &[], &[], &[0, -1]]),
        NamedExample::Char2GoodA1 => fp(2, [&[1], &[0, 1], &[], &[], &[1]]),
        NamedExample::Char3GoodEverywhereA1 => fp(3, [&[], &[], &[], &[-1], &[0, 1]]),
    }
}
