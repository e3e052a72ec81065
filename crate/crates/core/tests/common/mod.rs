//! Shared builders for the integration tests: field elements are drawn by
//! their index in the field's canonical enumeration.

#![allow(dead_code)]

use ecff::algebra::{ExtensionField, Field, Poly, PrimeField, RatFunc};
use ecff::transform::Transform;
use ecff::weierstrass::WeierstrassEq;
use proptest::prelude::*;

pub fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

pub fn gf_ext(p: u64, n: usize) -> ExtensionField {
    ExtensionField::with_degree(p, n).unwrap()
}

/// Number of distinct elements the strategies draw from (small integers over Q).
pub fn draw_size<F: Field>(f: &F) -> u64 {
    f.order()
        .map_or(9, |o| u64::try_from(o).unwrap().min(1 << 20))
}

pub fn poly<F: Field>(f: &F, idx: &[u64]) -> Poly<F> {
    Poly::new(f.clone(), idx.iter().map(|&i| f.element(i)).collect())
}

/// Coefficient indices of a polynomial of degree at most `max_deg`.
pub fn poly_idx(q: u64, max_deg: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0..q, 0..=max_deg + 1)
}

pub fn nonzero_poly<F: Field>(f: &F, idx: &[u64]) -> Option<Poly<F>> {
    Some(poly(f, idx)).filter(|p| !p.is_zero())
}

/// `num / den`, or `None` when either part is zero.
pub fn ratfunc<F: Field>(f: &F, num: &[u64], den: &[u64]) -> Option<RatFunc<F>> {
    let den = nonzero_poly(f, den)?;
    let x = RatFunc::new(poly(f, num), den).ok()?;
    Some(x).filter(|x| !x.is_zero())
}

pub fn equation<F: Field>(f: &F, idx: &[Vec<u64>]) -> Option<WeierstrassEq<F>> {
    let a: [Poly<F>; 5] = std::array::from_fn(|i| poly(f, &idx[i]));
    WeierstrassEq::new(a.map(RatFunc::from_poly)).ok()
}

pub fn equation_idx(q: u64, max_deg: usize) -> impl Strategy<Value = Vec<Vec<u64>>> {
    prop::collection::vec(poly_idx(q, max_deg), 5)
}

/// Transform with `u = c * T^k * (T + a)^e` and polynomial `r, s, t`.
pub fn transform<F: Field>(
    f: &F,
    u: &(u64, i64, u64, i64),
    rst: &[Vec<u64>],
) -> Option<Transform<F>> {
    let (c, k, a, e) = *u;
    let c = f.element(c);
    if f.is_zero(&c) {
        return None;
    }
    let ta = RatFunc::from_poly(Poly::new(f.clone(), vec![f.element(a), f.one()]));
    let u = RatFunc::constant(f, c);
    let u = &(&u * &RatFunc::t(f).powi(k).unwrap()) * &ta.powi(e).unwrap();
    let [r, s, t] = [0, 1, 2].map(|i| RatFunc::from_poly(poly(f, &rst[i])));
    Transform::new(u, r, s, t).ok()
}

pub fn transform_idx(
    q: u64,
    max_deg: usize,
) -> impl Strategy<Value = ((u64, i64, u64, i64), Vec<Vec<u64>>)> {
    (
        (1..q, -1i64..=1, 0..q, -1i64..=1),
        prop::collection::vec(poly_idx(q, max_deg), 3),
    )
}

/// Every polynomial over a finite field with degree at most `max_deg`, zero first.
pub fn all_polys<F: Field>(f: &F, max_deg: usize) -> Vec<Poly<F>> {
    let q = draw_size(f);
    let n = q.pow(max_deg as u32 + 1);
    (0..n)
        .map(|mut i| {
            let mut idx = Vec::new();
            for _ in 0..=max_deg {
                idx.push(i % q);
                i /= q;
            }
            poly(f, &idx)
        })
        .collect()
}

/// Every element of a finite field.
pub fn all_elems<F: Field>(f: &F) -> Vec<F::Elem> {
    (0..draw_size(f)).map(|i| f.element(i)).collect()
}
