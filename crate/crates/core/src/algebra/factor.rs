//! Squarefree decomposition, irreducible factorization over finite fields
//! (distinct-degree then Cantor-Zassenhaus equal-degree splitting) and
//! coprime refinement, which stands in for factorization over Q.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::Field;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Seed used when callers do not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed_0f_e11c;

/// Pairwise-coprime squarefree monic factors with multiplicities, sorted by
/// multiplicity. The product of `g^m` times the leading coefficient of `f` is `f`.
pub fn squarefree_decomposition<F: Field>(f: &Poly<F>) -> Result<Vec<(Poly<F>, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroInput("squarefree decomposition of 0"));
    }
    let mut out = Vec::new();
    sqf_rec(&f.monic(), 1, &mut out);
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    Ok(out)
}

fn sqf_rec<F: Field>(f: &Poly<F>, scale: usize, out: &mut Vec<(Poly<F>, usize)>) {
    if f.is_constant() {
        return;
    }
    let field = f.field().clone();
    let p = field.characteristic() as usize;
    let df = f.derivative();
    let mut c = f.gcd(&df);
    let mut w = f.exact_div(&c).unwrap();
    let mut i = 1;
    while !w.is_constant() {
        let y = w.gcd(&c);
        let fac = w.exact_div(&y).unwrap();
        if !fac.is_constant() {
            out.push((fac, i * scale));
        }
        w = y;
        c = c.exact_div(&w).unwrap();
        i += 1;
    }
    if !c.is_constant() {
        debug_assert!(p > 0, "leftover cofactor in characteristic 0");
        let root = c.pth_root().expect("leftover cofactor is a p-th power");
        sqf_rec(&root.monic(), scale * p, out);
    }
}

/// Radical (product of distinct monic irreducible factors).
pub fn radical<F: Field>(f: &Poly<F>) -> Result<Poly<F>> {
    let parts = squarefree_decomposition(f)?;
    Ok(parts
        .iter()
        .fold(Poly::one(f.field()), |acc, (g, _)| &acc * g))
}

/// Complete monic irreducible factorization over a finite field, sorted by
/// degree and then coefficients. The result does not depend on `seed`.
pub fn factor_irreducible<F: Field>(f: &Poly<F>, seed: u64) -> Result<Vec<(Poly<F>, usize)>> {
    if !f.field().is_finite() {
        return Err(Error::WrongBackend);
    }
    if f.is_zero() {
        return Err(Error::ZeroInput("factorization of 0"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(f)? {
        for (block, d) in distinct_degree(&part) {
            for g in equal_degree(&block, d, &mut rng) {
                out.push((g, mult));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Roots in the base field of a nonzero polynomial over a finite field, sorted.
pub fn roots<F: Field>(f: &Poly<F>, seed: u64) -> Result<Vec<F::Elem>> {
    if !f.field().is_finite() {
        return Err(Error::WrongBackend);
    }
    if f.is_zero() {
        return Err(Error::ZeroInput("roots of 0"));
    }
    let field = f.field();
    let q = field.order().unwrap();
    let fm = f.monic();
    let t = Poly::t(field);
    let tq = t.pow_mod(&q, &fm);
    let linear = fm.gcd(&(&tq - &t));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<F::Elem> = equal_degree(&linear, 1, &mut rng)
        .into_iter()
        .map(|g| field.neg(&g.coeff(0)))
        .collect();
    out.sort();
    Ok(out)
}

fn distinct_degree<F: Field>(f: &Poly<F>) -> Vec<(Poly<F>, usize)> {
    let field = f.field();
    let q = field.order().unwrap();
    let t = Poly::t(field);
    let mut rest = f.monic();
    let mut h = t.rem(&rest);
    let mut out = Vec::new();
    let mut i = 1;
    while rest.deg_i64() >= 2 * i as i64 {
        h = h.pow_mod(&q, &rest);
        let g = rest.gcd(&(&h - &t));
        if !g.is_one() {
            rest = rest.exact_div(&g).unwrap();
            h = h.rem(&rest);
            out.push((g, i));
        }
        i += 1;
    }
    if !rest.is_constant() {
        let d = rest.degree().unwrap();
        out.push((rest, d));
    }
    out
}

fn random_poly<F: Field, R: rand::Rng>(field: &F, below: usize, rng: &mut R) -> Poly<F> {
    Poly::new(
        field.clone(),
        (0..below).map(|_| field.random(rng)).collect(),
    )
}

fn equal_degree<F: Field, R: rand::Rng>(g: &Poly<F>, d: usize, rng: &mut R) -> Vec<Poly<F>> {
    if g.is_constant() {
        return Vec::new();
    }
    let n = g.degree().unwrap();
    if n == d {
        return vec![g.monic()];
    }
    let field = g.field();
    let q = field.order().unwrap();
    let p = field.characteristic();
    loop {
        let a = random_poly(field, n, rng);
        if a.is_constant() {
            continue;
        }
        let b = if p == 2 {
            // absolute trace to F_2: a + a^2 + ... + a^(2^(k d - 1)), q = 2^k
            let k = field.degree();
            let mut term = a.clone();
            let mut acc = a.clone();
            for _ in 1..k * d {
                term = term.mul_mod(&term, g);
                acc = &acc + &term;
            }
            acc
        } else {
            let e = (q.pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            &a.pow_mod(&e, g) - &Poly::one(field)
        };
        let h = g.gcd(&b);
        if !h.is_constant() && h.deg_i64() < g.deg_i64() {
            let other = g.exact_div(&h).unwrap();
            let mut out = equal_degree(&h, d, rng);
            out.extend(equal_degree(&other, d, rng));
            return out;
        }
    }
}

/// Rabin's irreducibility test over a finite field.
pub fn is_irreducible<F: Field>(f: &Poly<F>) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let field = f.field();
    let q = field
        .order()
        .expect("irreducibility test needs a finite field");
    let fm = f.monic();
    let t = Poly::t(field);
    // T^(q^i) mod f for i = 1..n
    let mut powers = Vec::with_capacity(n);
    let mut h = t.rem(&fm);
    for _ in 0..n {
        h = h.pow_mod(&q, &fm);
        powers.push(h.clone());
    }
    if powers[n - 1] != t.rem(&fm) {
        return false;
    }
    prime_divisors(n).into_iter().all(|r| {
        let hi = &powers[n / r - 1];
        fm.gcd(&(hi - &t)).is_one()
    })
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Pairwise-coprime squarefree monic basis such that every input is, up to a
/// constant, a product of powers of basis elements, and every basis element
/// divides some input. Sorted by degree then coefficients.
pub fn coprime_refinement<F: Field>(fs: &[Poly<F>]) -> Result<Vec<Poly<F>>> {
    if fs.iter().any(|f| f.is_zero()) {
        return Err(Error::ZeroInput("coprime refinement of 0"));
    }
    let mut list: Vec<Poly<F>> = fs
        .iter()
        .filter(|f| !f.is_constant())
        .map(|f| f.monic())
        .collect();
    'outer: loop {
        for i in 0..list.len() {
            for j in (i + 1)..list.len() {
                let g = list[i].gcd(&list[j]);
                if g.is_constant() {
                    continue;
                }
                let a = list[i].exact_div(&g).unwrap();
                let b = list[j].exact_div(&g).unwrap();
                list.swap_remove(j);
                list.swap_remove(i);
                for x in [g, a, b] {
                    if !x.is_constant() {
                        list.push(x);
                    }
                }
                continue 'outer;
            }
        }
        break;
    }
    let mut basis = Vec::new();
    for e in &list {
        for (s, _) in squarefree_decomposition(e)? {
            basis.push(s);
        }
    }
    basis.sort();
    basis.dedup();
    Ok(basis)
}

/// Splits a squarefree polynomial over Q into its rational linear factors and
/// the product of the rest, sorted. Candidates come from the rational root
/// test; when the end coefficients are too large to enumerate divisors the
/// polynomial is returned whole.
pub fn split_rational_roots<F: Field>(f: &Poly<F>) -> Vec<Poly<F>> {
    const LIMIT: u64 = 1_000_000_000_000;
    let field = f.field();
    if f.is_constant() || field.characteristic() != 0 {
        return vec![f.monic()];
    }
    let mut rest = f.monic();
    let mut out = Vec::new();
    if rest.trailing_zeros() > 0 {
        out.push(Poly::t(field));
        rest = rest.unshift(1);
    }
    let ints = integer_coefficients(&rest);
    let ends = (
        ints.first().and_then(|a| a.to_u64()),
        ints.last().and_then(|a| a.to_u64()),
    );
    if let (Some(a0), Some(an)) = ends {
        if a0 <= LIMIT && an <= LIMIT && !rest.is_constant() {
            'cand: for p in divisors(a0) {
                for q in divisors(an) {
                    if num_integer::gcd(p, q) != 1 {
                        continue;
                    }
                    for sign in [1i64, -1] {
                        let root = field
                            .from_ratio(&(BigInt::from(p) * sign), &BigInt::from(q))
                            .expect("nonzero denominator");
                        if field.is_zero(&rest.eval(&root)) {
                            let lin = Poly::new(field.clone(), vec![field.neg(&root), field.one()]);
                            rest = rest.exact_div(&lin).unwrap();
                            out.push(lin);
                            if rest.is_constant() {
                                break 'cand;
                            }
                        }
                    }
                }
            }
        }
    }
    if !rest.is_constant() {
        out.push(rest);
    }
    out.sort();
    out
}

/// Absolute values of the coefficients of a primitive integer multiple.
fn integer_coefficients<F: Field>(f: &Poly<F>) -> Vec<BigUint> {
    let qs: Vec<BigRational> = f
        .coeffs()
        .iter()
        .map(|c| f.field().as_rational(c).unwrap())
        .collect();
    let lcm = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = qs
        .iter()
        .map(|q| (q * BigRational::from(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a));
    ints.iter().map(|a| (a / &g).magnitude().clone()).collect()
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
