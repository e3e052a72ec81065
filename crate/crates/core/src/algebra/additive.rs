//! Additive (Frobenius-linear) polynomial equations `sum_j c_j r^(p^e_j) = h`
//! in an unknown `r` of `k[T]`, solved as linear systems over the prime field.

use super::field::{Field, PrimeField};
use super::linalg::solve;
use super::poly::Poly;
use crate::error::{Error, Result};

/// One term `c * r^(p^e)` of an additive operator.
#[derive(Clone, Debug)]
pub struct AdditiveTerm<F: Field> {
    pub coeff: Poly<F>,
    pub frobenius: u32,
}

/// Every solution is `particular + an F_p-combination of kernel`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditiveSolution<F: Field> {
    pub particular: Poly<F>,
    pub kernel: Vec<Poly<F>>,
}

fn frobenius_power<F: Field>(r: &Poly<F>, e: u32) -> Poly<F> {
    let f = r.field();
    let p = f.characteristic();
    let mut cur = r.clone();
    for _ in 0..e {
        let coeffs = cur.coeffs().iter().map(|c| f.pow(c, p)).collect();
        cur = Poly::new(f.clone(), coeffs).inflate(p as usize);
    }
    cur
}

/// Applies the operator to `r`.
pub fn apply_additive<F: Field>(terms: &[AdditiveTerm<F>], r: &Poly<F>) -> Poly<F> {
    terms.iter().fold(Poly::zero(r.field()), |acc, t| {
        &acc + &(&t.coeff * &frobenius_power(r, t.frobenius))
    })
}

/// Largest degree a solution can have: beyond it one term strictly dominates
/// the degree of the left side and exceeds `deg h`.
pub fn additive_degree_bound<F: Field>(terms: &[AdditiveTerm<F>], rhs: &Poly<F>) -> usize {
    let p = terms[0].coeff.field().characteristic();
    let live: Vec<(u64, i64)> = terms
        .iter()
        .filter(|t| !t.coeff.is_zero())
        .map(|t| (p.pow(t.frobenius), t.coeff.deg_i64()))
        .collect();
    let limit = rhs
        .deg_i64()
        .max(live.iter().map(|&(_, c)| c).max().unwrap_or(0))
        .max(0) as usize;
    let possible = |d: usize| {
        let degs: Vec<i64> = live.iter().map(|&(q, c)| q as i64 * d as i64 + c).collect();
        let top = *degs.iter().max().unwrap();
        let unique = degs.iter().filter(|&&x| x == top).count() == 1;
        !(unique && top > rhs.deg_i64())
    };
    (0..=limit).rev().find(|&d| possible(d)).unwrap_or(0)
}

/// Solves `L(r) = h` with `deg r <= degree_bound`. With `modulo_constants`,
/// equality is only required up to an additive constant.
pub fn solve_additive_bounded<F: Field>(
    terms: &[AdditiveTerm<F>],
    rhs: &Poly<F>,
    modulo_constants: bool,
    degree_bound: usize,
) -> Result<Option<AdditiveSolution<F>>> {
    let field = rhs.field().clone();
    if !field.is_finite() {
        return Err(Error::CharacteristicZero);
    }
    if terms.is_empty() {
        return Err(Error::Precondition("additive operator needs a term".into()));
    }
    let p = field.characteristic();
    let fp = PrimeField::new(p)?;
    let n = field.degree();
    let unknowns = (degree_bound + 1) * n;
    let basis = |k: usize| {
        let mut coords = vec![0u64; n];
        coords[k % n] = 1;
        Poly::monomial(&field, field.from_prime_coords(&coords), k / n)
    };
    let images: Vec<Poly<F>> = (0..unknowns)
        .map(|k| apply_additive(terms, &basis(k)))
        .collect();
    let top = images
        .iter()
        .map(|q| q.deg_i64())
        .chain([rhs.deg_i64()])
        .max()
        .unwrap()
        .max(0) as usize;
    let first = usize::from(modulo_constants);
    let coords_of = |q: &Poly<F>, i: usize| field.to_prime_coords(&q.coeff(i));
    let mut a = Vec::new();
    let mut b = Vec::new();
    for i in first..=top {
        let cols: Vec<Vec<u64>> = images.iter().map(|q| coords_of(q, i)).collect();
        let rc = coords_of(rhs, i);
        for j in 0..n {
            a.push(
                cols.iter()
                    .map(|c| c.get(j).copied().unwrap_or(0))
                    .collect::<Vec<u64>>(),
            );
            b.push(rc.get(j).copied().unwrap_or(0));
        }
    }
    let Some(sol) = solve(&fp, &a, &b) else {
        return Ok(None);
    };
    let to_poly = |v: &[u64]| {
        let coeffs = v.chunks(n).map(|c| field.from_prime_coords(c)).collect();
        Poly::new(field.clone(), coeffs)
    };
    Ok(Some(AdditiveSolution {
        particular: to_poly(&sol.particular),
        kernel: sol.kernel.iter().map(|k| to_poly(k)).collect(),
    }))
}

/// [`solve_additive_bounded`] with the degree bound from [`additive_degree_bound`].
pub fn solve_additive<F: Field>(
    terms: &[AdditiveTerm<F>],
    rhs: &Poly<F>,
    modulo_constants: bool,
) -> Result<Option<AdditiveSolution<F>>> {
    if terms.is_empty() {
        return Err(Error::Precondition("additive operator needs a term".into()));
    }
    let bound = additive_degree_bound(terms, rhs);
    solve_additive_bounded(terms, rhs, modulo_constants, bound)
}
