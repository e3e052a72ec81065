use crate::algebra::{support, valuation, Field, RatFunc};
use crate::error::{Error, Result};

/// `H(x) = max(deg num, deg den)`.
pub fn height<F: Field>(x: &RatFunc<F>) -> Result<usize> {
    if x.is_zero() {
        return Err(Error::ZeroInput("height of 0"));
    }
    Ok(x.max_degree())
}

/// `H(x)` as the sum over places of `-min(0, v(x))` weighted by residue degree.
pub fn height_by_places<F: Field>(x: &RatFunc<F>, seed: u64) -> Result<usize> {
    if x.is_zero() {
        return Err(Error::ZeroInput("height of 0"));
    }
    let mut h = 0;
    for v in support(&[x], seed)? {
        let nu = valuation(x, &v)?;
        if nu < 0 {
            h += (-nu) as usize * v.residue_degree();
        }
    }
    Ok(h)
}
