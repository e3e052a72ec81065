//! Integral and minimal models on the two affine charts of `P^1` and the
//! bad-reduction report.
//!
//! The chart `AtZero` has coordinate `T` and ring `k[T]`; the chart
//! `AtInfinity` has coordinate `S = 1/T` and ring `k[S]`. Equations and
//! transforms attached to a chart are written in that chart's coordinate, so
//! the place at infinity is simply the place `S` of the flipped chart.

use std::fmt;

use num_bigint::BigUint;

use crate::algebra::factor::{
    coprime_refinement, factor_irreducible, split_rational_roots, squarefree_decomposition,
    DEFAULT_SEED,
};
use crate::algebra::place::poly_valuation;
use crate::algebra::{Field, Place, Poly, RatFunc};
use crate::error::{Error, Result};
use crate::transform::{apply_unchecked, to_short_form, Transform};
use crate::weierstrass::WeierstrassEq;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chart {
    AtZero,
    AtInfinity,
}

impl Chart {
    pub fn coordinate(self) -> &'static str {
        match self {
            Chart::AtZero => "T",
            Chart::AtInfinity => "S",
        }
    }

    /// The equation written in this chart's coordinate.
    pub fn view<F: Field>(self, w: &WeierstrassEq<F>) -> WeierstrassEq<F> {
        match self {
            Chart::AtZero => w.clone(),
            Chart::AtInfinity => w.flip(),
        }
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Chart::AtZero => "0",
            Chart::AtInfinity => "inf",
        })
    }
}

/// Minimal discriminant valuation at one place and a transform achieving it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalData<F: Field> {
    pub place: Place<F>,
    pub v_delta_min: usize,
    pub minimizing_transform: Transform<F>,
}

/// A place of bad reduction (`v_delta_min >= 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadPlace<F: Field> {
    pub place: Place<F>,
    pub v_delta_min: usize,
    pub residue_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport<F: Field> {
    /// Finite places sorted by degree then coefficients, infinity last.
    pub bad_places: Vec<BadPlace<F>>,
    /// Sum of residue degrees of the bad places.
    pub geometric_bad_count: usize,
    pub minimal_model_at_zero: WeierstrassEq<F>,
    /// In the coordinate `S = 1/T`.
    pub minimal_model_at_infinity: WeierstrassEq<F>,
    /// Discriminant of the minimal model at zero, a polynomial in `T`.
    pub delta_min: Poly<F>,
    pub infinity_bad: bool,
}

impl<F: Field> ReductionReport<F> {
    /// `Δ_min` written as `c * g1^e1 * ...` over the reported finite places.
    pub fn delta_min_factored(&self) -> String {
        let f = self.delta_min.field();
        let lead = self
            .delta_min
            .leading()
            .cloned()
            .unwrap_or_else(|| f.zero());
        let mut parts = Vec::new();
        let finite: Vec<&BadPlace<F>> = self
            .bad_places
            .iter()
            .filter(|b| !b.place.is_infinity())
            .collect();
        if !f.is_one(&lead) || finite.is_empty() {
            let s = f.format_elem(&lead);
            parts.push(if f.is_compound(&lead) {
                format!("({s})")
            } else {
                s
            });
        }
        for b in finite {
            let g = b.place.generator().unwrap();
            let gs = if g.coeffs().iter().filter(|c| !f.is_zero(c)).count() > 1 {
                format!("({g})")
            } else {
                g.to_string()
            };
            parts.push(if b.v_delta_min == 1 {
                gs
            } else {
                format!("{gs}^{}", b.v_delta_min)
            });
        }
        parts.join("*")
    }
}

/// Options for the report: the factorization seed and whether finite places
/// are resolved into irreducibles (finite fields) or kept as squarefree
/// clusters (always the case over Q).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    pub seed: u64,
    pub resolve_places: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            seed: DEFAULT_SEED,
            resolve_places: true,
        }
    }
}

fn pval<F: Field>(x: &Poly<F>, g: &Poly<F>) -> usize {
    if x.is_zero() {
        usize::MAX
    } else {
        poly_valuation(x, g)
    }
}

fn poly_of<F: Field>(x: &RatFunc<F>) -> &Poly<F> {
    debug_assert!(x.is_polynomial());
    x.num()
}

/// Clears denominators on the chart with a scaling `u = 1/d`.
pub fn integralize<F: Field>(
    w: &WeierstrassEq<F>,
    chart: Chart,
) -> Result<(WeierstrassEq<F>, Transform<F>)> {
    if w.is_singular() {
        return Err(Error::Singular);
    }
    let w = chart.view(w);
    let field = w.field().clone();
    let dens: Vec<Poly<F>> = w
        .coeffs()
        .iter()
        .map(|c| c.den().clone())
        .filter(|d| !d.is_constant())
        .collect();
    if dens.is_empty() {
        return Ok((w, Transform::identity(&field)));
    }
    const WEIGHTS: [usize; 5] = [1, 2, 3, 4, 6];
    let mut d = Poly::one(&field);
    for h in coprime_refinement(&dens)? {
        let e = w
            .coeffs()
            .iter()
            .zip(WEIGHTS)
            .map(|(c, i)| poly_valuation(c.den(), &h).div_ceil(i))
            .max()
            .unwrap();
        d = &d * &h.pow(e as u64);
    }
    let tr = Transform::scaling(RatFunc::new(Poly::one(&field), d)?)?;
    let out = apply_unchecked(&w, &tr);
    debug_assert!(out.is_integral());
    Ok((out, tr))
}

/// Minimal discriminant valuation at a place of an integral equation written
/// in the chart's coordinate. `Place::Infinity` is accepted on the chart
/// `AtInfinity`, where it is the place `S`.
pub fn local_minimal<F: Field>(
    w: &WeierstrassEq<F>,
    place: &Place<F>,
    chart: Chart,
) -> Result<LocalData<F>> {
    if w.is_singular() {
        return Err(Error::Singular);
    }
    if !w.is_integral() {
        return Err(Error::Precondition(
            "local minimization needs an integral equation".into(),
        ));
    }
    let g = match (place, chart) {
        (Place::Finite(g), _) => g.clone(),
        (Place::Infinity, Chart::AtInfinity) => Poly::t(w.field()),
        (Place::Infinity, Chart::AtZero) => {
            return Err(Error::Precondition(
                "the place at infinity lives on the chart at infinity".into(),
            ))
        }
    };
    let (_, tr, v) = minimize_at(w, &g)?;
    Ok(LocalData {
        place: place.clone(),
        v_delta_min: v,
        minimizing_transform: tr,
    })
}

/// Minimizes an integral equation at `g` (irreducible in characteristic 2 and
/// 3, a squarefree cluster otherwise). Returns the model, the transform and
/// the minimal valuation of the discriminant.
pub(crate) fn minimize_at<F: Field>(
    w: &WeierstrassEq<F>,
    g: &Poly<F>,
) -> Result<(WeierstrassEq<F>, Transform<F>, usize)> {
    match w.field().characteristic() {
        2 | 3 => tate_minimize(w, g),
        _ => kraus_laska(w, g),
    }
}

fn kraus_laska<F: Field>(
    w: &WeierstrassEq<F>,
    g: &Poly<F>,
) -> Result<(WeierstrassEq<F>, Transform<F>, usize)> {
    let field = w.field().clone();
    let inv = w.invariants();
    let vd = pval(poly_of(&inv.delta), g);
    if vd < 12 {
        return Ok((w.clone(), Transform::identity(&field), vd));
    }
    let vc4 = pval(poly_of(&inv.c4), g);
    if vc4 < 4 {
        return Ok((w.clone(), Transform::identity(&field), vd));
    }
    let vc6 = pval(poly_of(&inv.c6), g);
    let e = (vc4 / 4).min(vc6 / 6).min(vd / 12);
    let (short, t1) = to_short_form(w)?;
    let t2 = Transform::scaling(RatFunc::from_poly(g.pow(e as u64)))?;
    let out = apply_unchecked(&short, &t2);
    debug_assert!(out.is_integral());
    Ok((out, t1.compose(&t2), vd - 12 * e))
}

/// Arithmetic in the residue field `k[T]/(g)` with minimal-degree lifts.
struct Residue<'a, F: Field> {
    g: &'a Poly<F>,
    root_exp: BigUint,
}

impl<'a, F: Field> Residue<'a, F> {
    fn new(g: &'a Poly<F>) -> Self {
        let f = g.field();
        let p = f.characteristic();
        let n = f.degree() * g.degree().unwrap();
        Residue {
            g,
            root_exp: BigUint::from(p).pow(n as u32 - 1),
        }
    }

    fn red(&self, x: &Poly<F>) -> Poly<F> {
        x.rem(self.g)
    }

    fn is_zero(&self, x: &Poly<F>) -> bool {
        self.red(x).is_zero()
    }

    fn mul(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        a.mul_mod(b, self.g)
    }

    fn inv(&self, a: &Poly<F>) -> Poly<F> {
        a.inverse_mod(self.g).expect("unit in the residue field")
    }

    /// The p-th root (Frobenius is bijective on the finite residue field).
    fn pth_root(&self, a: &Poly<F>) -> Poly<F> {
        a.pow_mod(&self.root_exp, self.g)
    }

    /// `x / g^k mod g` for `x` divisible by `g^k`.
    fn digit(&self, x: &Poly<F>, k: u32) -> Poly<F> {
        let q = x
            .exact_div(&self.g.pow(k as u64))
            .expect("divisible by g^k");
        self.red(&q)
    }
}

fn tate_minimize<F: Field>(
    w: &WeierstrassEq<F>,
    g: &Poly<F>,
) -> Result<(WeierstrassEq<F>, Transform<F>, usize)> {
    let field = w.field().clone();
    let p = field.characteristic();
    let res = Residue::new(g);
    let zero = Poly::zero(&field);
    let rst = |r: &Poly<F>, s: &Poly<F>, t: &Poly<F>| Transform {
        u: RatFunc::one(&field),
        r: RatFunc::from_poly(r.clone()),
        s: RatFunc::from_poly(s.clone()),
        t: RatFunc::from_poly(t.clone()),
    };
    let mut committed_model = w.clone();
    let mut committed = Transform::identity(&field);
    loop {
        let vd = pval(poly_of(&committed_model.discriminant()), g);
        if vd < 12 {
            return Ok((committed_model, committed, vd));
        }
        let minimal = Ok((committed_model.clone(), committed.clone(), vd));
        let mut cur = committed_model.clone();
        let mut acc = Transform::identity(&field);
        let mut step = |cur: &mut WeierstrassEq<F>, tr: Transform<F>| {
            *cur = apply_unchecked(cur, &tr);
            acc = acc.compose(&tr);
        };
        let a = |w: &WeierstrassEq<F>, i: usize| poly_of(&w.coeffs()[i]).clone();

        // move the singular point of the reduction to (0, 0)
        let [b2, b4, b6, _] = cur.b_invariants().map(|b| poly_of(&b).clone());
        let (r, t) = if p == 2 {
            if res.is_zero(&a(&cur, 0)) {
                let r = res.pth_root(&res.red(&a(&cur, 3)));
                // r^3 + a2 r^2 + a4 r + a6
                let f = &(&(&(&r.pow(3) + &(&a(&cur, 1) * &r.pow(2))) + &(&a(&cur, 3) * &r))
                    + &a(&cur, 4));
                let t = res.pth_root(&res.red(f));
                (r, t)
            } else {
                let a1inv = res.inv(&a(&cur, 0));
                let r = res.mul(&a1inv, &a(&cur, 2));
                let t = res.mul(&a1inv, &(&a(&cur, 3) + &r.pow(2)));
                (r, t)
            }
        } else {
            let r = if res.is_zero(&b2) {
                res.pth_root(&res.red(&-&b6))
            } else {
                res.red(&-(res.mul(&b4, &res.inv(&b2))))
            };
            let t = res.red(&(&(&a(&cur, 0) * &r) + &a(&cur, 2)));
            (r, t)
        };
        step(&mut cur, rst(&r, &zero, &t));
        debug_assert!((2..5).all(|i| res.is_zero(&a(&cur, i))));

        let [b2, _, b6, b8] = cur.b_invariants().map(|b| poly_of(&b).clone());
        if pval(&b2, g) == 0 || pval(&a(&cur, 4), g) < 2 || pval(&b8, g) < 3 || pval(&b6, g) < 3 {
            return minimal;
        }

        // pi | a1, a2; pi^2 | a3, a4; pi^3 | a6
        let (s, t) = if p == 2 {
            let s = res.pth_root(&res.red(&a(&cur, 1)));
            let t = g * &res.pth_root(&res.digit(&a(&cur, 4), 2));
            (s, t)
        } else {
            (a(&cur, 0), a(&cur, 2))
        };
        step(&mut cur, rst(&zero, &s, &t));
        debug_assert!(pval(&a(&cur, 0), g) >= 1 && pval(&a(&cur, 1), g) >= 1);
        debug_assert!(
            pval(&a(&cur, 2), g) >= 2 && pval(&a(&cur, 3), g) >= 2 && pval(&a(&cur, 4), g) >= 3
        );

        // the cubic X^3 + b X^2 + c X + d must have a triple root
        let b = res.digit(&a(&cur, 1), 1);
        let c = res.digit(&a(&cur, 3), 2);
        let d = res.digit(&a(&cur, 4), 3);
        let alpha = if p == 2 {
            let bb = res.mul(&b, &b);
            if res.red(&(&c - &bb)).is_zero() && res.red(&(&d - &res.mul(&bb, &b))).is_zero() {
                Some(b)
            } else {
                None
            }
        } else if b.is_zero() && c.is_zero() {
            Some(res.pth_root(&res.red(&-&d)))
        } else {
            None
        };
        let Some(alpha) = alpha else { return minimal };
        step(&mut cur, rst(&(g * &alpha), &zero, &zero));
        debug_assert!(
            pval(&a(&cur, 1), g) >= 2 && pval(&a(&cur, 3), g) >= 3 && pval(&a(&cur, 4), g) >= 4
        );

        // Y^2 + a3,2 Y - a6,4 must have a double root
        let a32 = res.digit(&a(&cur, 2), 2);
        let a64 = res.digit(&a(&cur, 4), 4);
        let disc = if p == 2 {
            res.mul(&a32, &a32)
        } else {
            res.red(&(&res.mul(&a32, &a32) + &a64))
        };
        if !disc.is_zero() {
            return minimal;
        }
        let beta = if p == 2 { res.pth_root(&a64) } else { a32 };
        step(&mut cur, rst(&zero, &zero, &(&g.pow(2) * &beta)));
        if pval(&a(&cur, 3), g) < 4 || pval(&a(&cur, 4), g) < 6 {
            return minimal;
        }
        let scale = Transform::scaling(RatFunc::from_poly(g.clone()))?;
        step(&mut cur, scale);
        debug_assert!(cur.is_integral());
        committed = committed.compose(&acc);
        committed_model = cur;
    }
}

/// Places (or clusters) where an integral equation may fail to be minimal:
/// those with `ν(Δ) >= 12`.
fn candidate_places<F: Field>(w: &WeierstrassEq<F>, seed: u64) -> Result<Vec<Poly<F>>> {
    let inv = w.invariants();
    let delta = poly_of(&inv.delta).clone();
    let heavy: Vec<Poly<F>> = squarefree_decomposition(&delta)?
        .into_iter()
        .filter(|(_, m)| *m >= 12)
        .map(|(g, _)| g)
        .collect();
    if heavy.is_empty() {
        return Ok(Vec::new());
    }
    let p = w.field().characteristic();
    if p == 2 || p == 3 {
        let mut out = Vec::new();
        for h in heavy {
            out.extend(factor_irreducible(&h, seed)?.into_iter().map(|(g, _)| g));
        }
        out.sort();
        return Ok(out);
    }
    let mut polys = heavy.clone();
    for c in [&inv.c4, &inv.c6] {
        if !c.is_zero() {
            polys.push(poly_of(c).clone());
        }
    }
    Ok(coprime_refinement(&polys)?
        .into_iter()
        .filter(|g| heavy.iter().any(|h| g.divides(h)))
        .collect())
}

/// An integral model on the chart that is minimal at every finite place of
/// the chart, with the transform from the chart view of `w`.
pub fn global_minimal<F: Field>(
    w: &WeierstrassEq<F>,
    chart: Chart,
) -> Result<(WeierstrassEq<F>, Transform<F>)> {
    global_minimal_seeded(w, chart, DEFAULT_SEED)
}

pub fn global_minimal_seeded<F: Field>(
    w: &WeierstrassEq<F>,
    chart: Chart,
    seed: u64,
) -> Result<(WeierstrassEq<F>, Transform<F>)> {
    let (mut cur, mut total) = integralize(w, chart)?;
    for g in candidate_places(&cur, seed)? {
        let (next, tr, _) = minimize_at(&cur, &g)?;
        cur = next;
        total = total.compose(&tr);
    }
    Ok((cur, total))
}

/// Bad places over `P^1` of a nonsingular equation, counted geometrically.
pub fn reduction_report<F: Field>(w: &WeierstrassEq<F>) -> Result<ReductionReport<F>> {
    reduction_report_with(w, ReportOptions::default())
}

pub fn reduction_report_with<F: Field>(
    w: &WeierstrassEq<F>,
    opts: ReportOptions,
) -> Result<ReductionReport<F>> {
    if w.is_singular() {
        return Err(Error::Singular);
    }
    let (m0, _) = global_minimal_seeded(w, Chart::AtZero, opts.seed)?;
    let (minf, _) = global_minimal_seeded(w, Chart::AtInfinity, opts.seed)?;
    let delta_min = poly_of(&m0.discriminant()).clone();
    let v_inf = poly_of(&minf.discriminant()).trailing_zeros();
    let finite: Vec<(Poly<F>, usize)> = if opts.resolve_places && w.field().is_finite() {
        if delta_min.is_constant() {
            Vec::new()
        } else {
            factor_irreducible(&delta_min, opts.seed)?
        }
    } else {
        let mut parts: Vec<(Poly<F>, usize)> = squarefree_decomposition(&delta_min)?
            .into_iter()
            .flat_map(|(g, m)| split_rational_roots(&g).into_iter().map(move |h| (h, m)))
            .collect();
        parts.sort();
        parts
    };
    let mut bad_places: Vec<BadPlace<F>> = finite
        .into_iter()
        .map(|(g, m)| BadPlace {
            residue_degree: g.degree().unwrap(),
            place: Place::cluster(g),
            v_delta_min: m,
        })
        .collect();
    if v_inf > 0 {
        bad_places.push(BadPlace {
            place: Place::Infinity,
            v_delta_min: v_inf,
            residue_degree: 1,
        });
    }
    let geometric_bad_count = bad_places.iter().map(|b| b.residue_degree).sum();
    Ok(ReductionReport {
        bad_places,
        geometric_bad_count,
        minimal_model_at_zero: m0,
        minimal_model_at_infinity: minf,
        delta_min,
        infinity_bad: v_inf > 0,
    })
}

/// Geometric bad-point count alone, skipping irreducible factorization and
/// the full model at infinity (only the place `S` is minimized there).
pub fn geometric_bad_count<F: Field>(w: &WeierstrassEq<F>) -> Result<usize> {
    if w.is_singular() {
        return Err(Error::Singular);
    }
    let (m0, _) = global_minimal(w, Chart::AtZero)?;
    let delta_min = poly_of(&m0.discriminant()).clone();
    let finite: usize = squarefree_decomposition(&delta_min)?
        .iter()
        .map(|(g, _)| g.degree().unwrap())
        .sum();
    Ok(finite + usize::from(infinity_valuation(w)? > 0))
}

/// `ν_S` of the minimal discriminant at the place at infinity.
pub fn infinity_valuation<F: Field>(w: &WeierstrassEq<F>) -> Result<usize> {
    let (wi, _) = integralize(w, Chart::AtInfinity)?;
    let s = Poly::t(w.field());
    Ok(minimize_at(&wi, &s)?.2)
}

/// Consistency of the minimal models of one equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinimalModelCheck {
    /// Minimizing the minimal model at zero again changes nothing.
    pub idempotent_at_zero: bool,
    /// Same for the model at infinity.
    pub idempotent_at_infinity: bool,
    /// The two charts give the same minimal valuations at the places they share.
    pub chart_consistent: bool,
}

impl MinimalModelCheck {
    pub fn ok(&self) -> bool {
        self.idempotent_at_zero && self.idempotent_at_infinity && self.chart_consistent
    }
}

/// Recomputes both minimal models and compares them on the overlap of the
/// charts, where a place `g(T)` with `g(0) != 0` appears as the reversed
/// polynomial in `S`.
pub fn check_minimal_models<F: Field>(w: &WeierstrassEq<F>) -> Result<MinimalModelCheck> {
    let (m0, _) = global_minimal(w, Chart::AtZero)?;
    let (minf, _) = global_minimal(w, Chart::AtInfinity)?;
    let idempotent_at_zero = global_minimal(&m0, Chart::AtZero)?.0 == m0;
    let idempotent_at_infinity = global_minimal(&minf, Chart::AtZero)?.0 == minf;
    let strip = |d: &Poly<F>| d.unshift(d.trailing_zeros());
    let d0 = strip(poly_of(&m0.discriminant()));
    let dinf = strip(poly_of(&minf.discriminant()));
    let chart_consistent = d0.reverse().monic() == dinf.monic();
    Ok(MinimalModelCheck {
        idempotent_at_zero,
        idempotent_at_infinity,
        chart_consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PrimeField, Rationals};
    use crate::weierstrass::{named_example, AnyCurve, NamedExample};

    fn q(c: &[i64]) -> RatFunc<Rationals> {
        RatFunc::from_poly(Poly::from_ints(&Rationals, c))
    }

    #[test]
    fn integralize_examples() {
        let w = WeierstrassEq::raw([
            q(&[]),
            q(&[]),
            q(&[]),
            q(&[1]).div(&q(&[0, 1])).unwrap(),
            q(&[1]),
        ]);
        let (wi, tr) = integralize(&w, Chart::AtZero).unwrap();
        assert_eq!(tr.u, q(&[0, 1]).inv().unwrap());
        assert_eq!(wi.a4(), &q(&[0, 0, 0, 1]));
        assert_eq!(wi.discriminant(), &w.discriminant() * &q(&[0, 1]).pow(12));
        let AnyCurve::Rational(leg) = named_example(NamedExample::Legendre) else {
            panic!()
        };
        let (wi, _) = integralize(&leg, Chart::AtInfinity).unwrap();
        assert!(wi.is_integral());
        let (same, tr) = integralize(&leg, Chart::AtZero).unwrap();
        assert_eq!(same, leg);
        assert!(tr.is_identity());
    }

    #[test]
    fn local_examples() {
        let w = WeierstrassEq::raw([q(&[]), q(&[]), q(&[]), q(&[]), q(&[0, 0, 0, 0, 0, 0, 1])]);
        let ld = local_minimal(&w, &Place::t(&Rationals), Chart::AtZero).unwrap();
        assert_eq!(ld.v_delta_min, 0);
        let (gm, _) = global_minimal(&w, Chart::AtZero).unwrap();
        assert_eq!(gm, WeierstrassEq::from_ints(&Rationals, [0, 0, 0, 0, 1]));
        let AnyCurve::Rational(leg) = named_example(NamedExample::Legendre) else {
            panic!()
        };
        assert_eq!(
            local_minimal(&leg, &Place::t(&Rationals), Chart::AtZero)
                .unwrap()
                .v_delta_min,
            2
        );
        let AnyCurve::Prime(w2) = named_example(NamedExample::Char2TwoBad) else {
            panic!()
        };
        let f2 = *w2.field();
        assert_eq!(
            local_minimal(&w2, &Place::t(&f2), Chart::AtZero)
                .unwrap()
                .v_delta_min,
            1
        );
        assert_eq!(global_minimal(&w2, Chart::AtZero).unwrap().0, w2);
        let AnyCurve::Prime(w3) = named_example(NamedExample::Char3TwoBad) else {
            panic!()
        };
        let (gm, _) = global_minimal(&w3, Chart::AtZero).unwrap();
        assert_eq!(gm, w3);
        assert_eq!(gm.discriminant().to_string(), "T^4");
    }

    fn bad_set<F: Field>(r: &ReductionReport<F>) -> Vec<String> {
        r.bad_places.iter().map(|b| b.place.to_string()).collect()
    }

    #[test]
    fn reports_for_examples() {
        let AnyCurve::Rational(leg) = named_example(NamedExample::Legendre) else {
            panic!()
        };
        let r = reduction_report(&leg).unwrap();
        assert_eq!(r.geometric_bad_count, 3);
        assert_eq!(bad_set(&r), vec!["T - 1", "T", "inf"]);
        let AnyCurve::Rational(w) = named_example(NamedExample::J1728) else {
            panic!()
        };
        let r = reduction_report(&w).unwrap();
        assert_eq!(bad_set(&r), vec!["T", "inf"]);
        assert_eq!(r.geometric_bad_count, 2);
        let AnyCurve::Prime(w) = named_example(NamedExample::Char2GoodA1) else {
            panic!()
        };
        let r = reduction_report(&w).unwrap();
        assert_eq!(bad_set(&r), vec!["inf"]);
        assert_eq!(geometric_bad_count(&w).unwrap(), 1);
        let AnyCurve::Prime(w) = named_example(NamedExample::Char3GoodEverywhereA1) else {
            panic!()
        };
        let r = reduction_report(&w).unwrap();
        assert_eq!(bad_set(&r), vec!["inf"]);
        for e in NamedExample::ALL {
            let ok = match named_example(e) {
                AnyCurve::Rational(w) => check_minimal_models(&w).unwrap().ok(),
                AnyCurve::Prime(w) => check_minimal_models(&w).unwrap().ok(),
            };
            assert!(ok, "{e:?}");
        }
    }

    #[test]
    fn tate_scales_a_twelfth_power() {
        // a good model pushed to nu(delta) = 12 at T and disguised by a translation
        let f2 = PrimeField::new(2).unwrap();
        let base = WeierstrassEq::from_polys([
            Poly::one(&f2),
            Poly::zero(&f2),
            Poly::zero(&f2),
            Poly::zero(&f2),
            Poly::from_ints(&f2, &[1, 1]),
        ]);
        let tr = Transform::scaling(RatFunc::from_poly(Poly::t(&f2)).inv().unwrap()).unwrap();
        let scrambled = apply_unchecked(&base, &tr);
        let tr2 = Transform {
            u: RatFunc::one(&f2),
            r: RatFunc::from_poly(Poly::from_ints(&f2, &[1, 0, 1])),
            s: RatFunc::t(&f2),
            t: RatFunc::from_poly(Poly::from_ints(&f2, &[0, 1, 1])),
        };
        let scrambled = apply_unchecked(&scrambled, &tr2);
        assert!(scrambled.is_integral());
        let before = poly_of(&scrambled.discriminant()).trailing_zeros();
        assert_eq!(before, 12);
        let (gm, _) = global_minimal(&scrambled, Chart::AtZero).unwrap();
        assert_eq!(poly_of(&gm.discriminant()).trailing_zeros(), 0);
        assert_eq!(gm.discriminant(), base.discriminant());
    }
}
