//! p-th power levels of rational functions and m-th roots of constants,
//! constructing an extension of a finite field when the root is not rational.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::factor::{factor_irreducible, roots, DEFAULT_SEED};
use super::field::{ExtensionField, Field, PrimeField};
use super::poly::Poly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// `sup { s : x in k(T)^(p^s) }`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PthLevel {
    Finite(u32),
    Infinite,
}

pub fn pth_power_level<F: Field>(x: &RatFunc<F>) -> Result<PthLevel> {
    if !x.field().is_finite() {
        return Err(Error::CharacteristicZero);
    }
    if x.is_zero() {
        return Err(Error::ZeroInput("p-th power level of 0"));
    }
    if x.is_constant() {
        return Ok(PthLevel::Infinite);
    }
    let mut level = 0;
    let mut cur = x.clone();
    while let Ok(root) = cur.pth_root() {
        cur = root;
        level += 1;
    }
    Ok(PthLevel::Finite(level))
}

/// An m-th root of a constant, either in the base field or in a finite extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstantRoot<F: Field> {
    Base(F::Elem),
    Extension(ExtendedRoot),
}

/// A root living in `F_{p^(n e)}`, with the embedding of the base field
/// `F_{p^n}` given by the image of its generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedRoot {
    pub field: ExtensionField,
    pub root: Vec<u64>,
    pub generator_image: Vec<u64>,
}

impl ExtendedRoot {
    /// Image of a base-field element under the embedding.
    pub fn embed<F: Field>(&self, base: &F, a: &F::Elem) -> Vec<u64> {
        embed_with(&self.field, &self.generator_image, &base.to_prime_coords(a))
    }
}

fn embed_with(k: &ExtensionField, gen_image: &[u64], coords: &[u64]) -> Vec<u64> {
    let mut acc = k.zero();
    let mut power = k.one();
    for &c in coords {
        acc = k.add(&acc, &k.mul(&power, &k.from_i64(c as i64)));
        power = k.mul(&power, &gen_image.to_vec());
    }
    acc
}

/// Minimal polynomial of the power-basis generator of a finite field, over F_p.
pub fn base_modulus<F: Field>(field: &F) -> Poly<PrimeField> {
    let fp = PrimeField::new(field.characteristic()).unwrap();
    let n = field.degree();
    match field.generator() {
        None => Poly::t(&fp),
        Some(z) => {
            // z^n = sum b_i z^i, so the modulus is X^n - sum b_i X^i
            let zn = field.pow(&z, n as u64);
            let b = field.to_prime_coords(&zn);
            let mut coeffs: Vec<u64> = (0..n)
                .map(|i| fp.neg(&b.get(i).copied().unwrap_or(0)))
                .collect();
            coeffs.push(1);
            Poly::new(fp, coeffs)
        }
    }
}

/// An m-th root of `c != 0`. Over a finite field the root always exists in
/// an extension of degree at most m; over Q only rational roots are returned.
pub fn constant_root<F: Field>(field: &F, c: &F::Elem, m: u32) -> Result<ConstantRoot<F>> {
    if field.is_zero(c) {
        return Err(Error::ZeroInput("root of 0"));
    }
    if m == 0 {
        return Err(Error::Precondition("root index must be positive".into()));
    }
    if !field.is_finite() {
        let q = field.as_rational(c).unwrap();
        return rational_root(&q, m)
            .map(|r| ConstantRoot::Base(field.from_ratio(r.numer(), r.denom()).unwrap()))
            .ok_or_else(|| Error::RequiresAlgebraicExtension(format!("{m}-th root of {q}")));
    }
    let mut coeffs = vec![field.neg(c)];
    coeffs.resize(m as usize, field.zero());
    coeffs.push(field.one());
    let f = Poly::new(field.clone(), coeffs);
    if let Some(r) = roots(&f, DEFAULT_SEED)?.into_iter().next() {
        return Ok(ConstantRoot::Base(r));
    }
    let factors = factor_irreducible(&f, DEFAULT_SEED)?;
    let (g, _) = &factors[0];
    let e = g.degree().unwrap();
    let p = field.characteristic();
    let n = field.degree();
    let k = ExtensionField::with_degree(p, n * e)?;
    let generator_image = if n == 1 {
        k.one()
    } else {
        let m_base = base_modulus(field);
        let lifted = Poly::new(
            k.clone(),
            m_base
                .coeffs()
                .iter()
                .map(|&a| k.from_i64(a as i64))
                .collect(),
        );
        roots(&lifted, DEFAULT_SEED)?
            .into_iter()
            .next()
            .expect("base field embeds")
    };
    let c_k = embed_with(&k, &generator_image, &field.to_prime_coords(c));
    let mut kc = vec![k.neg(&c_k)];
    kc.resize(m as usize, k.zero());
    kc.push(k.one());
    let root = roots(&Poly::new(k.clone(), kc), DEFAULT_SEED)?
        .into_iter()
        .next()
        .expect("root exists in the splitting extension");
    Ok(ConstantRoot::Extension(ExtendedRoot {
        field: k,
        root,
        generator_image,
    }))
}

fn rational_root(q: &BigRational, m: u32) -> Option<BigRational> {
    let exact = |n: &BigInt| -> Option<BigInt> {
        if n.is_negative() {
            if m.is_multiple_of(2) {
                return None;
            }
            let r = (-n).nth_root(m);
            (r.pow(m) == -n).then(|| -r)
        } else {
            let r = n.nth_root(m);
            (r.pow(m) == *n).then_some(r)
        }
    };
    let num = exact(q.numer())?;
    let den = exact(q.denom())?;
    debug_assert!(den.sign() == Sign::Plus || den.is_one());
    Some(BigRational::new(num, den))
}
