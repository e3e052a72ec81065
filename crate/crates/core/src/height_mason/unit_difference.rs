use crate::algebra::{Field, LaurentPoly, Poly};
use crate::error::{Error, Result};
use crate::shard::Shard;

/// Shapes of Laurent pairs `(A, B)` with `A^3 - B^2 = u T^l`, `u` a nonzero constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnitDifferenceClass<F: Field> {
    /// `(a T^(2n), b T^(3n))`.
    BothPowers {
        a: F::Elem,
        b: F::Elem,
        n: i64,
    },
    /// `(0, b T^n)`.
    AZero {
        b: F::Elem,
        n: i64,
    },
    /// `(a T^n, 0)`.
    BZero {
        a: F::Elem,
        n: i64,
    },
    NotUnitDifference,
}

impl<F: Field> UnitDifferenceClass<F> {
    /// The pair a positive class stands for.
    pub fn reconstruct(&self, field: &F) -> Option<(LaurentPoly<F>, LaurentPoly<F>)> {
        let mono = |c: &F::Elem, k| LaurentPoly::monomial(field, c.clone(), k);
        match self {
            UnitDifferenceClass::BothPowers { a, b, n } => Some((mono(a, 2 * n), mono(b, 3 * n))),
            UnitDifferenceClass::AZero { b, n } => Some((LaurentPoly::zero(field), mono(b, *n))),
            UnitDifferenceClass::BZero { a, n } => Some((mono(a, *n), LaurentPoly::zero(field))),
            UnitDifferenceClass::NotUnitDifference => None,
        }
    }

    pub fn is_positive(&self) -> bool {
        !matches!(self, UnitDifferenceClass::NotUnitDifference)
    }

    /// Whether both members of the pair are constants.
    pub fn is_constant(&self) -> bool {
        match self {
            UnitDifferenceClass::BothPowers { n, .. }
            | UnitDifferenceClass::AZero { n, .. }
            | UnitDifferenceClass::BZero { n, .. } => *n == 0,
            UnitDifferenceClass::NotUnitDifference => false,
        }
    }
}

/// `(c, k)` when `x = c T^k` with `c != 0`.
fn as_monomial<F: Field>(x: &LaurentPoly<F>) -> Option<(F::Elem, i64)> {
    let u = x.unit_part();
    (!u.is_zero() && u.is_constant()).then(|| (u.coeff(0), x.shift()))
}

/// Classifies `(A, B)` by the shape forced when `A^3 - B^2` is a unit of
/// `k[T, 1/T]`. A unit difference that fits none of the three families, or a
/// polynomial pair with constant difference that is not constant, is reported
/// as [`Error::Counterexample`]. Characteristics 2 and 3 are rejected: there
/// Frobenius gives non-monomial unit differences such as `(1 + 1/T, 1)` over `F_3`.
pub fn classify_unit_difference<F: Field>(
    a: &LaurentPoly<F>,
    b: &LaurentPoly<F>,
) -> Result<UnitDifferenceClass<F>> {
    check_characteristic(a.field())?;
    let d = a.pow(3).sub(&b.pow(2));
    classify_with_difference(a, b, &d)
}

fn check_characteristic<F: Field>(field: &F) -> Result<()> {
    match field.characteristic() {
        2 | 3 => Err(Error::WrongCharacteristic(format!(
            "unit differences are classified away from characteristics 2 and 3, got {}",
            field.descriptor()
        ))),
        _ => Ok(()),
    }
}

fn classify_with_difference<F: Field>(
    a: &LaurentPoly<F>,
    b: &LaurentPoly<F>,
    d: &LaurentPoly<F>,
) -> Result<UnitDifferenceClass<F>> {
    if as_monomial(d).is_none() {
        return Ok(UnitDifferenceClass::NotUnitDifference);
    }
    let class = match (a.is_zero(), b.is_zero(), as_monomial(a), as_monomial(b)) {
        (true, false, _, Some((c, n))) => Some(UnitDifferenceClass::AZero { b: c, n }),
        (false, true, Some((c, n)), _) => Some(UnitDifferenceClass::BZero { a: c, n }),
        (false, false, Some((ca, ka)), Some((cb, kb))) if ka % 2 == 0 && kb == 3 * (ka / 2) => {
            Some(UnitDifferenceClass::BothPowers {
                a: ca,
                b: cb,
                n: ka / 2,
            })
        }
        _ => None,
    };
    let Some(class) = class else {
        return Err(Error::Counterexample(format!(
            "A = {a}, B = {b}: A^3 - B^2 = {d} fits no family"
        )));
    };
    if a.is_polynomial() && b.is_polynomial() && d.shift() == 0 && !class.is_constant() {
        return Err(Error::Counterexample(format!(
            "A = {a}, B = {b} are polynomials with constant A^3 - B^2 but are not constant"
        )));
    }
    Ok(class)
}

/// Tallies of an exhaustive classification run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UnitDifferenceSummary {
    pub pairs: u64,
    pub unit_differences: u64,
    pub both_powers: u64,
    pub a_zero: u64,
    pub b_zero: u64,
    /// Polynomial pairs with constant nonzero difference (all found constant).
    pub polynomial_constant: u64,
}

impl UnitDifferenceSummary {
    pub fn merge(&mut self, other: &UnitDifferenceSummary) {
        self.pairs += other.pairs;
        self.unit_differences += other.unit_differences;
        self.both_powers += other.both_powers;
        self.a_zero += other.a_zero;
        self.b_zero += other.b_zero;
        self.polynomial_constant += other.polynomial_constant;
    }
}

/// Every Laurent polynomial `P * T^k` with `deg P <= max_degree`, `P(0) != 0`
/// and `|k| <= max_shift`, plus zero.
fn laurent_space<F: Field>(
    field: &F,
    max_degree: usize,
    max_shift: i64,
) -> Result<Vec<LaurentPoly<F>>> {
    let q = field
        .order()
        .and_then(|o| u64::try_from(o).ok())
        .ok_or_else(|| {
            Error::Precondition("exhaustive classification needs a finite field".into())
        })?;
    let count = q
        .checked_pow(max_degree as u32 + 1)
        .filter(|&c| c <= 1 << 24)
        .ok_or(Error::SearchTooLarge {
            size: (q as u128).saturating_pow(max_degree as u32 + 1),
            cap: 1 << 24,
        })?;
    let mut units = Vec::new();
    for i in 0..count {
        let mut coeffs = Vec::with_capacity(max_degree + 1);
        let mut rest = i;
        for _ in 0..=max_degree {
            coeffs.push(field.element(rest % q));
            rest /= q;
        }
        if field.is_zero(&coeffs[0]) {
            continue;
        }
        units.push(Poly::new(field.clone(), coeffs));
    }
    let mut out = vec![LaurentPoly::zero(field)];
    for k in -max_shift..=max_shift {
        out.extend(units.iter().map(|u| LaurentPoly::new(u.clone(), k)));
    }
    Ok(out)
}

/// Classifies every pair from the Laurent space over a finite field, checking
/// that each positive class reconstructs its input.
pub fn unit_difference_exhaustive<F: Field>(
    field: &F,
    max_degree: usize,
    max_shift: i64,
    shard: Shard,
) -> Result<UnitDifferenceSummary> {
    check_characteristic(field)?;
    let space = laurent_space(field, max_degree, max_shift)?;
    let cubes: Vec<LaurentPoly<F>> = space.iter().map(|a| a.pow(3)).collect();
    let squares: Vec<LaurentPoly<F>> = space.iter().map(|b| b.pow(2)).collect();
    let n = space.len() as u128;
    let mut summary = UnitDifferenceSummary::default();
    for (i, a) in space.iter().enumerate() {
        for (j, b) in space.iter().enumerate() {
            if !shard.contains(i as u128 * n + j as u128) {
                continue;
            }
            summary.pairs += 1;
            let d = cubes[i].sub(&squares[j]);
            let class = classify_with_difference(a, b, &d)?;
            if !class.is_positive() {
                continue;
            }
            if class.reconstruct(field).as_ref() != Some(&(a.clone(), b.clone())) {
                return Err(Error::Counterexample(format!(
                    "class of ({a}, {b}) does not reconstruct it"
                )));
            }
            summary.unit_differences += 1;
            match class {
                UnitDifferenceClass::BothPowers { .. } => summary.both_powers += 1,
                UnitDifferenceClass::AZero { .. } => summary.a_zero += 1,
                UnitDifferenceClass::BZero { .. } => summary.b_zero += 1,
                UnitDifferenceClass::NotUnitDifference => unreachable!(),
            }
            if a.is_polynomial() && b.is_polynomial() && d.shift() == 0 {
                summary.polynomial_constant += 1;
            }
        }
    }
    Ok(summary)
}
