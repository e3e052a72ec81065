//! Exact coefficient fields: the rationals, prime fields `F_p` and extensions `F_{p^n}`.
//!
//! Everything above this module is generic over [`Field`]. A field value is a
//! small runtime context (the prime, the modulus); elements are plain data and
//! all arithmetic goes through the context.

use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

pub trait Field: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Ord + Hash + fmt::Debug + Send + Sync;

    /// 0 for Q, p otherwise.
    fn characteristic(&self) -> u64;
    /// Degree over the prime field (1 for Q and F_p).
    fn degree(&self) -> usize;
    /// Text tag understood by [`FieldTag`]: `Q`, `GF(p)` or `GF(p^n)`.
    fn descriptor(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` exactly for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Image of an integer.
    fn from_int(&self, n: &BigInt) -> Self::Elem;
    /// p-th root (inverse Frobenius); `None` in characteristic 0.
    fn frobenius_inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Number of elements, `None` for Q.
    fn order(&self) -> Option<BigUint>;
    /// Canonical enumeration of the field: index `i` maps to the element whose
    /// base-p digits (over the prime-field basis) are those of `i`. For Q the
    /// integers are enumerated as 0, 1, -1, 2, -2, ...
    fn element(&self, index: u64) -> Self::Elem;
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    /// The adjoined generator `z` of a proper extension.
    fn generator(&self) -> Option<Self::Elem>;
    /// Coordinates over the prime field (finite fields only).
    fn to_prime_coords(&self, a: &Self::Elem) -> Vec<u64>;
    fn from_prime_coords(&self, coords: &[u64]) -> Self::Elem;
    fn format_elem(&self, a: &Self::Elem) -> String;
    /// Whether the printed form needs parentheses inside a product.
    fn is_compound(&self, a: &Self::Elem) -> bool;
    /// Printed sign, only meaningful for Q.
    fn is_negative(&self, _a: &Self::Elem) -> bool {
        false
    }
    /// The element as a rational number, when the field is Q.
    fn as_rational(&self, _a: &Self::Elem) -> Option<BigRational> {
        None
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&BigInt::from(n))
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem> {
        let d = self.from_int(den);
        let d_inv = self
            .inv(&d)
            .ok_or_else(|| Error::NotInField(format!("{num}/{den}")))?;
        Ok(self.mul(&self.from_int(num), &d_inv))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn pow_big(&self, a: &Self::Elem, e: &BigUint) -> Self::Elem {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    fn is_finite(&self) -> bool {
        self.characteristic() != 0
    }
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let (s, overflow) = a.overflowing_add(b);
    if overflow || s >= p {
        s.wrapping_sub(p)
    } else {
        s
    }
}

#[inline]
fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a.wrapping_sub(b).wrapping_add(p)
    }
}

fn pow_mod_u64(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn inv_mod_u64(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        return None;
    }
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    Some(s0.rem_euclid(p as i128) as u64)
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = ((n % &m) + &m) % &m;
    r.to_u64().expect("residue fits in u64")
}

// ---------------------------------------------------------------------------
// Q
// ---------------------------------------------------------------------------

/// The field of rational numbers with arbitrary-precision integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn characteristic(&self) -> u64 {
        0
    }
    fn degree(&self) -> usize {
        1
    }
    fn descriptor(&self) -> String {
        "Q".to_string()
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_int(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn frobenius_inverse(&self, _a: &BigRational) -> Option<BigRational> {
        None
    }
    fn order(&self) -> Option<BigUint> {
        None
    }
    fn element(&self, index: u64) -> BigRational {
        let k = index.div_ceil(2) as i64;
        let v = if index % 2 == 1 { k } else { -k };
        BigRational::from_integer(BigInt::from(v))
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        let n: i64 = rng.gen_range(-9..=9);
        let d: i64 = if rng.gen_bool(0.7) {
            1
        } else {
            rng.gen_range(1..=5)
        };
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }
    fn generator(&self) -> Option<BigRational> {
        None
    }
    fn to_prime_coords(&self, _a: &BigRational) -> Vec<u64> {
        panic!("Q has no prime-field coordinates")
    }
    fn from_prime_coords(&self, _coords: &[u64]) -> BigRational {
        panic!("Q has no prime-field coordinates")
    }
    fn format_elem(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn is_compound(&self, _a: &BigRational) -> bool {
        false
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
    fn as_rational(&self, a: &BigRational) -> Option<BigRational> {
        Some(a.clone())
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational> {
        if den.is_zero() {
            return Err(Error::NotInField(format!("{num}/0")));
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }
}

// ---------------------------------------------------------------------------
// F_p
// ---------------------------------------------------------------------------

/// The prime field `F_p`, `p < 2^64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn degree(&self) -> usize {
        1
    }
    fn descriptor(&self) -> String {
        format!("GF({})", self.p)
    }
    #[inline]
    fn zero(&self) -> u64 {
        0
    }
    #[inline]
    fn one(&self) -> u64 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        add_mod(*a, *b, self.p)
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        sub_mod(*a, *b, self.p)
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        if self.p < (1 << 32) {
            (a * b) % self.p
        } else {
            mul_mod(*a, *b, self.p)
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        inv_mod_u64(*a, self.p)
    }
    fn from_int(&self, n: &BigInt) -> u64 {
        reduce_bigint(n, self.p)
    }
    fn from_i64(&self, n: i64) -> u64 {
        (n as i128).rem_euclid(self.p as i128) as u64
    }
    fn frobenius_inverse(&self, a: &u64) -> Option<u64> {
        Some(*a)
    }
    fn order(&self) -> Option<BigUint> {
        Some(BigUint::from(self.p))
    }
    fn element(&self, index: u64) -> u64 {
        index % self.p
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn generator(&self) -> Option<u64> {
        None
    }
    fn to_prime_coords(&self, a: &u64) -> Vec<u64> {
        vec![*a]
    }
    fn from_prime_coords(&self, coords: &[u64]) -> u64 {
        coords.first().copied().unwrap_or(0) % self.p
    }
    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }
    fn is_compound(&self, _a: &u64) -> bool {
        false
    }
}

// ---------------------------------------------------------------------------
// F_{p^n}
// ---------------------------------------------------------------------------

#[derive(Debug, PartialEq, Eq)]
struct ExtInner {
    p: u64,
    /// Monic irreducible modulus, lowest degree first, length n + 1.
    modulus: Vec<u64>,
}

/// `F_p[z]/(m(z))` for a monic irreducible `m` of degree `n >= 1`.
///
/// Elements are coefficient vectors of length `n`, lowest degree first.
#[derive(Clone, Debug)]
pub struct ExtensionField {
    inner: Arc<ExtInner>,
}

impl PartialEq for ExtensionField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}
impl Eq for ExtensionField {}

impl ExtensionField {
    /// Builds the extension, checking that `modulus` is monic and irreducible over F_p.
    pub fn new(p: u64, modulus: Vec<u64>) -> Result<Self> {
        let fp = PrimeField::new(p)?;
        let mut m: Vec<u64> = modulus.into_iter().map(|c| c % p).collect();
        while m.last() == Some(&0) {
            m.pop();
        }
        if m.len() < 2 || *m.last().unwrap() != 1 {
            return Err(Error::Precondition(
                "extension modulus must be monic of degree >= 1".into(),
            ));
        }
        let poly = crate::algebra::poly::Poly::new(fp, m.clone());
        if !crate::algebra::factor::is_irreducible(&poly) {
            return Err(Error::NotIrreducible);
        }
        Ok(ExtensionField {
            inner: Arc::new(ExtInner { p, modulus: m }),
        })
    }

    /// `F_{p^n}` defined by the first monic irreducible of degree `n` in
    /// lexicographic order of its lower coefficients (constant term most significant).
    pub fn with_degree(p: u64, n: usize) -> Result<Self> {
        let fp = PrimeField::new(p)?;
        if n == 0 {
            return Err(Error::Precondition("extension degree must be >= 1".into()));
        }
        let total = (p as u128).checked_pow(n as u32).ok_or_else(|| {
            Error::Precondition(format!("GF({p}^{n}) is too large to search for a modulus"))
        })?;
        for idx in 0..total {
            let mut coeffs = vec![0u64; n + 1];
            let mut rest = idx;
            for i in (0..n).rev() {
                coeffs[i] = (rest % p as u128) as u64;
                rest /= p as u128;
            }
            coeffs[n] = 1;
            if n > 1 && coeffs[0] == 0 {
                continue;
            }
            let poly = crate::algebra::poly::Poly::new(fp, coeffs.clone());
            if crate::algebra::factor::is_irreducible(&poly) {
                return Ok(ExtensionField {
                    inner: Arc::new(ExtInner { p, modulus: coeffs }),
                });
            }
        }
        Err(Error::NotIrreducible)
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    fn n(&self) -> usize {
        self.inner.modulus.len() - 1
    }

    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        let p = self.inner.p;
        let n = self.n();
        let m = &self.inner.modulus;
        for i in (n..v.len()).rev() {
            let c = v[i];
            if c == 0 {
                continue;
            }
            for j in 0..n {
                v[i - n + j] = sub_mod(v[i - n + j], mul_mod(c, m[j], p), p);
            }
            v[i] = 0;
        }
        v.resize(n, 0);
        v
    }
}

/// Extended Euclid over F_p on coefficient vectors; returns the inverse of `a` mod `m`.
fn fp_poly_inverse(a: &[u64], m: &[u64], p: u64) -> Option<Vec<u64>> {
    fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }
    fn sub_scaled(a: &mut Vec<u64>, b: &[u64], c: u64, shift: usize, p: u64) {
        if a.len() < b.len() + shift {
            a.resize(b.len() + shift, 0);
        }
        for (i, &bi) in b.iter().enumerate() {
            a[i + shift] = sub_mod(a[i + shift], mul_mod(c, bi, p), p);
        }
    }
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: Vec<u64> = vec![];
    let mut s1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        // r0 = q r1 + r, s0 - q s1
        let lead_inv = inv_mod_u64(*r1.last().unwrap(), p)?;
        let mut q = vec![0u64; r0.len().saturating_sub(r1.len()) + 1];
        let mut r = r0.clone();
        while r.len() >= r1.len() && !r.is_empty() {
            let shift = r.len() - r1.len();
            let c = mul_mod(*r.last().unwrap(), lead_inv, p);
            q[shift] = c;
            sub_scaled(&mut r, &r1, c, shift, p);
            trim(&mut r);
        }
        let mut s = s0.clone();
        for (k, &qk) in q.iter().enumerate() {
            if qk != 0 {
                sub_scaled(&mut s, &s1, qk, k, p);
            }
        }
        trim(&mut s);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = inv_mod_u64(r0[0], p)?;
    Some(s0.iter().map(|&x| mul_mod(x, c, p)).collect())
}

impl Field for ExtensionField {
    type Elem = Vec<u64>;

    fn characteristic(&self) -> u64 {
        self.inner.p
    }
    fn degree(&self) -> usize {
        self.n()
    }
    fn descriptor(&self) -> String {
        format!("GF({}^{})", self.inner.p, self.n())
    }
    fn zero(&self) -> Vec<u64> {
        vec![0; self.n()]
    }
    fn one(&self) -> Vec<u64> {
        let mut v = vec![0; self.n()];
        v[0] = 1;
        v
    }
    fn is_zero(&self, a: &Vec<u64>) -> bool {
        a.iter().all(|&c| c == 0)
    }
    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| add_mod(x, y, self.inner.p))
            .collect()
    }
    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| sub_mod(x, y, self.inner.p))
            .collect()
    }
    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        a.iter().map(|&x| sub_mod(0, x, self.inner.p)).collect()
    }
    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let p = self.inner.p;
        let n = self.n();
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = add_mod(prod[i + j], mul_mod(x, y, p), p);
            }
        }
        self.reduce(prod)
    }
    fn inv(&self, a: &Vec<u64>) -> Option<Vec<u64>> {
        if self.is_zero(a) {
            return None;
        }
        let inv = fp_poly_inverse(a, &self.inner.modulus, self.inner.p)?;
        Some(self.reduce(inv))
    }
    fn from_int(&self, n: &BigInt) -> Vec<u64> {
        let mut v = self.zero();
        v[0] = reduce_bigint(n, self.inner.p);
        v
    }
    fn from_i64(&self, n: i64) -> Vec<u64> {
        let mut v = self.zero();
        v[0] = (n as i128).rem_euclid(self.inner.p as i128) as u64;
        v
    }
    fn frobenius_inverse(&self, a: &Vec<u64>) -> Option<Vec<u64>> {
        // a^(p^(n-1))
        let mut x = a.clone();
        for _ in 1..self.n() {
            x = self.pow(&x, self.inner.p);
        }
        Some(x)
    }
    fn order(&self) -> Option<BigUint> {
        Some(BigUint::from(self.inner.p).pow(self.n() as u32))
    }
    fn element(&self, index: u64) -> Vec<u64> {
        let p = self.inner.p;
        let mut rest = index;
        let mut v = self.zero();
        for c in v.iter_mut() {
            *c = rest % p;
            rest /= p;
        }
        v
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u64> {
        (0..self.n())
            .map(|_| rng.gen_range(0..self.inner.p))
            .collect()
    }
    fn generator(&self) -> Option<Vec<u64>> {
        let mut v = self.zero();
        if self.n() == 1 {
            // z is the root of a linear modulus z + m0, i.e. -m0
            v[0] = sub_mod(0, self.inner.modulus[0], self.inner.p);
        } else {
            v[1] = 1;
        }
        Some(v)
    }
    fn to_prime_coords(&self, a: &Vec<u64>) -> Vec<u64> {
        a.clone()
    }
    fn from_prime_coords(&self, coords: &[u64]) -> Vec<u64> {
        let mut v: Vec<u64> = coords.iter().map(|c| c % self.inner.p).collect();
        v.resize(self.n(), 0);
        v
    }
    fn format_elem(&self, a: &Vec<u64>) -> String {
        let mut terms = Vec::new();
        for (i, &c) in a.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let t = match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "z".to_string(),
                (1, c) => format!("{c}*z"),
                (i, 1) => format!("z^{i}"),
                (i, c) => format!("{c}*z^{i}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
    fn is_compound(&self, a: &Vec<u64>) -> bool {
        a.iter().filter(|&&c| c != 0).count() > 1
    }
}

/// Parsed field tag: `Q`, `GF(p)` or `GF(p^n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldTag {
    Rationals,
    Prime(u64),
    Extension(u64, usize),
}

impl FieldTag {
    pub fn parse(tag: &str) -> Result<Self> {
        let t: String = tag.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse {
            pos: 0,
            expected: "Q, GF(p) or GF(p^n)".into(),
            found: tag.to_string(),
        };
        if t == "Q" || t == "QQ" {
            return Ok(FieldTag::Rationals);
        }
        let inner = t
            .strip_prefix("GF(")
            .or_else(|| t.strip_prefix("F("))
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (p, n) = match inner.split_once('^') {
            Some((p, n)) => (p, n.parse::<usize>().map_err(|_| bad())?),
            None => (inner, 1),
        };
        let p: u64 = p.parse().map_err(|_| bad())?;
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(match n {
            0 => return Err(bad()),
            1 => FieldTag::Prime(p),
            n => FieldTag::Extension(p, n),
        })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldTag::Rationals => 0,
            FieldTag::Prime(p) | FieldTag::Extension(p, _) => *p,
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rationals => write!(f, "Q"),
            FieldTag::Prime(p) => write!(f, "GF({p})"),
            FieldTag::Extension(p, n) => write!(f, "GF({p}^{n})"),
        }
    }
}

impl std::str::FromStr for FieldTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FieldTag::parse(s)
    }
}
