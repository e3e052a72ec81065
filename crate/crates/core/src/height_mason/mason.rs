use crate::algebra::{
    pth_power_level, support, valuation, Field, Place, PthLevel, RatFunc, DEFAULT_SEED,
};
use crate::error::{Error, Result};

use super::height::height;

/// Nonzero `γ1, γ2, γ3` with `γ1 + γ2 + γ3 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MasonTriple<F: Field> {
    pub gamma1: RatFunc<F>,
    pub gamma2: RatFunc<F>,
    pub gamma3: RatFunc<F>,
}

impl<F: Field> MasonTriple<F> {
    pub fn new(gamma1: RatFunc<F>, gamma2: RatFunc<F>, gamma3: RatFunc<F>) -> Result<Self> {
        if gamma1.is_zero() || gamma2.is_zero() || gamma3.is_zero() {
            return Err(Error::Precondition(
                "the three terms must be nonzero".into(),
            ));
        }
        if !(&(&gamma1 + &gamma2) + &gamma3).is_zero() {
            return Err(Error::Precondition(
                "the three terms must sum to zero".into(),
            ));
        }
        Ok(MasonTriple {
            gamma1,
            gamma2,
            gamma3,
        })
    }

    /// Completes `γ1, γ2` with `γ3 = -γ1 - γ2`.
    pub fn from_pair(gamma1: RatFunc<F>, gamma2: RatFunc<F>) -> Result<Self> {
        let gamma3 = -&(&gamma1 + &gamma2);
        Self::new(gamma1, gamma2, gamma3)
    }

    fn terms(&self) -> [&RatFunc<F>; 3] {
        [&self.gamma1, &self.gamma2, &self.gamma3]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exemption {
    RatioConstant,
    RatioPthPower,
    NotExempt,
}

impl Exemption {
    pub fn name(self) -> &'static str {
        match self {
            Exemption::RatioConstant => "ratio-constant",
            Exemption::RatioPthPower => "ratio-pth-power",
            Exemption::NotExempt => "not-exempt",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MasonVerdict<F: Field> {
    pub exempt: Exemption,
    /// The valuation set used, sorted.
    pub places: Vec<Place<F>>,
    /// Number of geometric points in `places`.
    pub v_size: usize,
    /// `H(γ1/γ2)`.
    pub height: usize,
    /// `v_size - 2 - height`; never negative when not exempt.
    pub slack: i64,
}

fn exemption<F: Field>(t: &MasonTriple<F>) -> Result<(Exemption, RatFunc<F>)> {
    let ratio = t.gamma1.div(&t.gamma2)?;
    let ex = if ratio.is_constant() {
        Exemption::RatioConstant
    } else if ratio.field().characteristic() != 0 && pth_power_level(&ratio)? != PthLevel::Finite(0)
    {
        Exemption::RatioPthPower
    } else {
        Exemption::NotExempt
    };
    Ok((ex, ratio))
}

fn disagreement_places<F: Field>(t: &MasonTriple<F>) -> Result<Vec<Place<F>>> {
    let mut out = Vec::new();
    for v in support(&t.terms(), DEFAULT_SEED)? {
        let vals = t.terms().map(|g| valuation(g, &v));
        let [a, b, c] = [vals[0].clone()?, vals[1].clone()?, vals[2].clone()?];
        if !(a == b && b == c) {
            out.push(v);
        }
    }
    Ok(out)
}

fn verdict<F: Field>(t: &MasonTriple<F>, places: Vec<Place<F>>) -> Result<MasonVerdict<F>> {
    let (exempt, ratio) = exemption(t)?;
    let v_size: usize = places.iter().map(|v| v.residue_degree()).sum();
    let height = height(&ratio)?;
    let slack = v_size as i64 - 2 - height as i64;
    if exempt == Exemption::NotExempt && slack < 0 {
        return Err(Error::Counterexample(format!(
            "H(g1/g2) = {height} exceeds |V| - 2 = {} for ({}, {}, {})",
            v_size as i64 - 2,
            t.gamma1,
            t.gamma2,
            t.gamma3
        )));
    }
    Ok(MasonVerdict {
        exempt,
        places,
        v_size,
        height,
        slack,
    })
}

/// Mason's inequality with the smallest admissible valuation set: the places
/// where the three valuations do not all agree.
pub fn mason_check<F: Field>(t: &MasonTriple<F>) -> Result<MasonVerdict<F>> {
    let places = disagreement_places(t)?;
    verdict(t, places)
}

/// Mason's inequality with a caller-supplied valuation set, which must contain
/// every place where the three valuations disagree.
pub fn mason_check_with_places<F: Field>(
    t: &MasonTriple<F>,
    places: &[Place<F>],
) -> Result<MasonVerdict<F>> {
    let mut places = places.to_vec();
    places.sort();
    places.dedup();
    for v in disagreement_places(t)? {
        if places.binary_search(&v).is_err() {
            return Err(Error::Precondition(format!(
                "valuation set misses the place {v}"
            )));
        }
    }
    verdict(t, places)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Poly, PrimeField, Rationals};

    fn triple<F: Field>(f: &F) -> MasonTriple<F> {
        let p = |c: &[i64]| RatFunc::from_poly(Poly::from_ints(f, c));
        MasonTriple::new(p(&[0, 0, 1]), p(&[1, 0, -1]), p(&[-1])).unwrap()
    }

    #[test]
    fn tight_over_q() {
        let v = mason_check(&triple(&Rationals)).unwrap();
        assert_eq!(v.exempt, Exemption::NotExempt);
        let names: Vec<String> = v.places.iter().map(|p| p.to_string()).collect();
        assert_eq!(names, vec!["T - 1", "T", "T + 1", "inf"]);
        assert_eq!((v.v_size, v.height, v.slack), (4, 2, 0));
    }

    #[test]
    fn pth_power_in_char_two() {
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(
            mason_check(&triple(&f2)).unwrap().exempt,
            Exemption::RatioPthPower
        );
    }

    #[test]
    fn constants_and_preconditions() {
        let q = Rationals;
        let c = |n| RatFunc::from_i64(&q, n);
        let v = mason_check(&MasonTriple::new(c(2), c(3), c(-5)).unwrap()).unwrap();
        assert_eq!(v.exempt, Exemption::RatioConstant);
        assert!(MasonTriple::new(c(2), c(3), c(-4)).is_err());
        assert!(MasonTriple::new(c(2), c(-2), c(0)).is_err());
    }

    #[test]
    fn explicit_places() {
        let q = Rationals;
        let t = triple(&q);
        let mut places = mason_check(&t).unwrap().places;
        places.push(Place::finite(Poly::from_ints(&q, &[2, 1])).unwrap());
        assert_eq!(mason_check_with_places(&t, &places).unwrap().slack, 1);
        assert!(mason_check_with_places(&t, &places[1..]).is_err());
    }
}
