//! Places of `P^1` over the base field and their valuations.

use std::cmp::Ordering;
use std::fmt;

use super::factor::{coprime_refinement, factor_irreducible, is_irreducible, split_rational_roots};
use super::field::Field;
use super::poly::Poly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// A closed point of `P^1`: a monic irreducible polynomial or the point at infinity.
///
/// Over Q a finite place may also be a squarefree *cluster* of places coming
/// from [`coprime_refinement`]; all the places in a cluster share every
/// valuation the caller cares about, and the residue degree is the cluster's degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Place<F: Field> {
    Finite(Poly<F>),
    Infinity,
}

impl<F: Field> Place<F> {
    /// Finite place; checks monic irreducibility over finite fields.
    pub fn finite(g: Poly<F>) -> Result<Self> {
        if g.deg_i64() < 1 || !g.is_monic() {
            return Err(Error::Precondition(format!(
                "place generator {g} must be monic of degree >= 1"
            )));
        }
        if g.field().is_finite() && !is_irreducible(&g) {
            return Err(Error::NotIrreducible);
        }
        Ok(Place::Finite(g))
    }

    /// Finite place or cluster without the irreducibility check.
    pub fn cluster(g: Poly<F>) -> Self {
        debug_assert!(g.is_monic() && g.deg_i64() >= 1);
        Place::Finite(g)
    }

    pub fn t(field: &F) -> Self {
        Place::Finite(Poly::t(field))
    }

    pub fn residue_degree(&self) -> usize {
        match self {
            Place::Finite(g) => g.degree().unwrap(),
            Place::Infinity => 1,
        }
    }

    pub fn generator(&self) -> Option<&Poly<F>> {
        match self {
            Place::Finite(g) => Some(g),
            Place::Infinity => None,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Place::Infinity)
    }
}

/// Finite places by degree then coefficients; infinity last.
impl<F: Field> Ord for Place<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Place::Finite(a), Place::Finite(b)) => a.cmp(b),
            (Place::Finite(_), Place::Infinity) => Ordering::Less,
            (Place::Infinity, Place::Finite(_)) => Ordering::Greater,
            (Place::Infinity, Place::Infinity) => Ordering::Equal,
        }
    }
}

impl<F: Field> PartialOrd for Place<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Field> fmt::Display for Place<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(g) => write!(f, "{g}"),
            Place::Infinity => f.write_str("inf"),
        }
    }
}

/// Valuation of a nonzero polynomial at a finite place.
pub fn poly_valuation<F: Field>(p: &Poly<F>, g: &Poly<F>) -> usize {
    if g.degree() == Some(1) && g.coeff(0) == g.field().zero() {
        return p.trailing_zeros();
    }
    p.multiplicity(g)
}

/// `nu_g(x)`; the zero function has infinite valuation and is rejected.
pub fn valuation<F: Field>(x: &RatFunc<F>, v: &Place<F>) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::ZeroInput("valuation of 0 is infinite"));
    }
    Ok(match v {
        Place::Finite(g) => poly_valuation(x.num(), g) as i64 - poly_valuation(x.den(), g) as i64,
        Place::Infinity => x.den().deg_i64() - x.num().deg_i64(),
    })
}

/// The places (or clusters over Q, split off at rational roots) where some of the given nonzero functions
/// has nonzero valuation, plus infinity, sorted.
pub fn support<F: Field>(xs: &[&RatFunc<F>], seed: u64) -> Result<Vec<Place<F>>> {
    let mut polys = Vec::new();
    for x in xs {
        if x.is_zero() {
            return Err(Error::ZeroInput("support of 0"));
        }
        polys.push(x.num().clone());
        polys.push(x.den().clone());
    }
    let mut places: Vec<Place<F>> = if polys.first().is_some_and(|p| p.field().is_finite()) {
        let mut gs = Vec::new();
        for p in polys.iter().filter(|p| !p.is_constant()) {
            for (g, _) in factor_irreducible(p, seed)? {
                gs.push(g);
            }
        }
        gs.sort();
        gs.dedup();
        gs.into_iter().map(Place::Finite).collect()
    } else {
        let mut gs: Vec<Poly<F>> = coprime_refinement(&polys)?
            .iter()
            .flat_map(split_rational_roots)
            .collect();
        gs.sort();
        gs.into_iter().map(Place::Finite).collect()
    };
    places.push(Place::Infinity);
    Ok(places)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{PrimeField, Rationals};

    #[test]
    fn valuation_examples() {
        let q = Rationals;
        let x = RatFunc::new(
            Poly::from_ints(&q, &[0, 0, 0, 1]),
            Poly::from_ints(&q, &[-1, 1]),
        )
        .unwrap();
        assert_eq!(valuation(&x, &Place::t(&q)).unwrap(), 3);
        assert_eq!(valuation(&x, &Place::Infinity).unwrap(), -2);
        let f3 = PrimeField::new(3).unwrap();
        let g = Poly::from_ints(&f3, &[1, 0, 1]);
        let y = RatFunc::new(g.pow(2), Poly::t(&f3)).unwrap();
        assert_eq!(valuation(&y, &Place::finite(g).unwrap()).unwrap(), 2);
        assert!(valuation(&RatFunc::zero(&q), &Place::Infinity).is_err());
    }

    #[test]
    fn place_construction() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(
            Place::finite(Poly::from_ints(&f5, &[1, 0, 1])).unwrap_err(),
            Error::NotIrreducible
        );
        assert_eq!(
            Place::finite(Poly::from_ints(&f5, &[2, 0, 1]))
                .unwrap()
                .residue_degree(),
            2
        );
        assert_eq!(Place::<PrimeField>::Infinity.residue_degree(), 1);
    }

    #[test]
    fn degree_formula() {
        let f5 = PrimeField::new(5).unwrap();
        let x = RatFunc::new(
            Poly::from_ints(&f5, &[1, 2, 0, 3, 1]),
            Poly::from_ints(&f5, &[0, 0, 4, 1]),
        )
        .unwrap();
        let total: i64 = support(&[&x], 7)
            .unwrap()
            .iter()
            .map(|v| valuation(&x, v).unwrap() * v.residue_degree() as i64)
            .sum();
        assert_eq!(total, 0);
    }
}
