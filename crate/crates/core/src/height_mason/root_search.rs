use num_integer::Integer;

use crate::algebra::{Field, Poly};
use crate::error::{Error, Result};
use crate::shard::Shard;

/// Largest candidate space searched.
pub const ROOT_SEARCH_CAP: u128 = 10_000_000;

/// `f(Y) = Y^(p^r) - Y^n Q1^m - Q1^(m+1) Q - c` over a finite field of characteristic `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSearchParams<F: Field> {
    pub p: u64,
    pub r: u32,
    pub m: u32,
    pub n: u32,
    pub q1: Poly<F>,
    pub q: Poly<F>,
    pub c: F::Elem,
    pub degree_bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSearchOutcome<F: Field> {
    /// First root in enumeration order, with its index.
    pub root: Option<(u128, Poly<F>)>,
    /// Candidates examined by this shard.
    pub checked: u128,
}

impl<F: Field> RootSearchParams<F> {
    fn validate(&self) -> Result<u64> {
        let field = self.q1.field();
        let bad = |msg: &str| Err(Error::Precondition(msg.into()));
        let Some(q) = field.order().and_then(|o| u64::try_from(o).ok()) else {
            return bad("the base field must be finite");
        };
        if field.characteristic() != self.p {
            return bad("p must be the characteristic of the base field");
        }
        if self.q1.is_constant() {
            return bad("Q1 must be nonconstant");
        }
        if field.is_zero(&self.c) {
            return bad("c must be nonzero");
        }
        if self.r == 0 || self.m == 0 || self.n == 0 {
            return bad("r, m and n must be at least 1");
        }
        let pr = self
            .p
            .checked_pow(self.r)
            .ok_or_else(|| Error::Precondition("p^r overflows".into()))?;
        if self.m as u64 >= pr {
            return bad("m must be smaller than p^r");
        }
        if (self.m as u64).gcd(&self.p) != 1 || (self.n as u64).gcd(&self.p) != 1 {
            return bad("m and n must be prime to p");
        }
        Ok(q)
    }

    /// `f(y)`.
    pub fn evaluate(&self, y: &Poly<F>) -> Poly<F> {
        let field = self.q1.field();
        let pr = self.p.pow(self.r);
        let tail =
            &(&self.q1.pow(self.m as u64 + 1) * &self.q) + &Poly::constant(field, self.c.clone());
        &(&y.pow(pr) - &(&y.pow(self.n as u64) * &self.q1.pow(self.m as u64))) - &tail
    }
}

/// Tries every `A` with `deg A <= degree_bound` in the shard as a root of `f`.
pub fn root_search<F: Field>(
    params: &RootSearchParams<F>,
    shard: Shard,
) -> Result<RootSearchOutcome<F>> {
    let q = params.validate()?;
    let field = params.q1.field().clone();
    let slots = params.degree_bound as u32 + 1;
    let size = (q as u128)
        .checked_pow(slots)
        .filter(|&s| s <= ROOT_SEARCH_CAP);
    let Some(size) = size else {
        return Err(Error::SearchTooLarge {
            size: (q as u128).saturating_pow(slots),
            cap: ROOT_SEARCH_CAP,
        });
    };
    let pr = params.p.pow(params.r);
    let k = params.q1.pow(params.m as u64);
    let tail = &(&params.q1.pow(params.m as u64 + 1) * &params.q)
        + &Poly::constant(&field, params.c.clone());
    let mut checked = 0;
    for i in 0..size {
        if !shard.contains(i) {
            continue;
        }
        checked += 1;
        let mut rest = i;
        let mut coeffs = Vec::with_capacity(slots as usize);
        for _ in 0..slots {
            coeffs.push(field.element((rest % q as u128) as u64));
            rest /= q as u128;
        }
        let a = Poly::new(field.clone(), coeffs);
        let value = &(&a.pow(pr) - &(&a.pow(params.n as u64) * &k)) - &tail;
        if value.is_zero() {
            return Ok(RootSearchOutcome {
                root: Some((i, a)),
                checked,
            });
        }
    }
    Ok(RootSearchOutcome {
        root: None,
        checked,
    })
}
