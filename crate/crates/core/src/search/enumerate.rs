//! Deterministic enumeration of Weierstrass equations with bounded
//! coefficient degrees over a finite field.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Field, Poly, RatFunc};
use crate::error::{Error, Result};
use crate::shard::Shard;
use crate::transform::ReducedVariant;
use crate::weierstrass::WeierstrassEq;

/// Largest number of tuples a configuration may describe.
pub const ENUMERATION_CAP: u128 = 1 << 40;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SearchForm {
    /// All five coefficients free.
    General,
    /// One reduced shape of characteristic 2 or 3.
    Reduced(ReducedVariant),
    /// Both reduced shapes of the field's characteristic, j ≠ 0 first.
    ReducedBoth,
    /// `y^2 = x^3 - 3A x + 2B` with `deg A <= deg_a`, `deg B <= deg_b`.
    Short { deg_a: usize, deg_b: usize },
}

impl SearchForm {
    /// Names used on the command line: `general`, `reduced`, a reduced variant
    /// such as `char2-j-zero`, or `short`.
    pub fn name(&self) -> String {
        match self {
            SearchForm::General => "general".into(),
            SearchForm::Reduced(v) => v.name().into(),
            SearchForm::ReducedBoth => "reduced".into(),
            SearchForm::Short { deg_a, deg_b } => format!("short(A<={deg_a},B<={deg_b})"),
        }
    }
}

impl fmt::Display for SearchForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for SearchForm {
    type Err = Error;

    /// `short` takes its degrees from the configuration's bound; use
    /// [`SearchForm::Short`] directly for separate degrees.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(SearchForm::General),
            "reduced" => Ok(SearchForm::ReducedBoth),
            "short" => Ok(SearchForm::Short { deg_a: 0, deg_b: 0 }),
            _ => ReducedVariant::from_name(s).map(SearchForm::Reduced).ok_or_else(|| Error::Parse {
                pos: 0,
                expected: "general, reduced, short, char2-j-nonzero, char2-j-zero, char3-j-nonzero or char3-j-zero"
                    .into(),
                found: s.to_string(),
            }),
        }
    }
}

/// One block of the enumeration: a shape with per-slot degree bounds.
#[derive(Clone, Debug)]
struct Block {
    /// `(slot in a1..a6, degree bound)` for the free coefficients.
    slots: Vec<(usize, usize)>,
    fixed: [Option<i64>; 5],
    /// Multipliers for short forms (`a4 = -3A`, `a6 = 2B`).
    scale: [i64; 5],
    size: u128,
}

#[derive(Clone, Debug)]
pub struct SearchConfig<F: Field> {
    pub field: F,
    pub form: SearchForm,
    /// Degree bound for every free coefficient (ignored by `Short`).
    pub degree_bound: usize,
    pub shard: Shard,
}

impl<F: Field> SearchConfig<F> {
    pub fn new(field: F, form: SearchForm, degree_bound: usize) -> Self {
        SearchConfig {
            field,
            form,
            degree_bound,
            shard: Shard::WHOLE,
        }
    }

    pub fn with_shard(mut self, shard: Shard) -> Self {
        self.shard = shard;
        self
    }

    fn field_order(&self) -> Result<u64> {
        self.field
            .order()
            .and_then(|o| u64::try_from(o).ok())
            .ok_or_else(|| {
                Error::Precondition("exhaustive enumeration needs a finite field".into())
            })
    }

    fn blocks(&self) -> Result<Vec<Block>> {
        let q = self.field_order()? as u128;
        let p = self.field.characteristic();
        let d = self.degree_bound;
        let reduced = |v: ReducedVariant| -> Result<Block> {
            if v.characteristic() != p {
                return Err(Error::WrongCharacteristic(format!(
                    "{} needs characteristic {}, got {}",
                    v.name(),
                    v.characteristic(),
                    self.field.descriptor()
                )));
            }
            let (slots, fixed): (Vec<usize>, [Option<i64>; 5]) = match v {
                ReducedVariant::Char3JNonzero => {
                    (vec![1, 4], [Some(0), None, Some(0), Some(0), None])
                }
                ReducedVariant::Char3JZero => (vec![3, 4], [Some(0), Some(0), Some(0), None, None]),
                ReducedVariant::Char2JNonzero => {
                    (vec![1, 4], [Some(1), None, Some(0), Some(0), None])
                }
                ReducedVariant::Char2JZero => (vec![2, 3, 4], [Some(0), Some(0), None, None, None]),
            };
            Ok(Block {
                slots: slots.into_iter().map(|s| (s, d)).collect(),
                fixed,
                scale: [1; 5],
                size: 0,
            })
        };
        let mut blocks = match &self.form {
            SearchForm::General => vec![Block {
                slots: (0..5).map(|s| (s, d)).collect(),
                fixed: [None; 5],
                scale: [1; 5],
                size: 0,
            }],
            SearchForm::Reduced(v) => vec![reduced(*v)?],
            SearchForm::ReducedBoth => match p {
                2 => vec![
                    reduced(ReducedVariant::Char2JNonzero)?,
                    reduced(ReducedVariant::Char2JZero)?,
                ],
                3 => vec![
                    reduced(ReducedVariant::Char3JNonzero)?,
                    reduced(ReducedVariant::Char3JZero)?,
                ],
                _ => {
                    return Err(Error::WrongCharacteristic(
                        "reduced forms need characteristic 2 or 3".into(),
                    ))
                }
            },
            SearchForm::Short { deg_a, deg_b } => {
                if p == 2 || p == 3 {
                    return Err(Error::WrongCharacteristic(
                        "short forms need characteristic at least 5".into(),
                    ));
                }
                vec![Block {
                    slots: vec![(3, *deg_a), (4, *deg_b)],
                    fixed: [Some(0), Some(0), Some(0), None, None],
                    scale: [1, 1, 1, -3, 2],
                    size: 0,
                }]
            }
        };
        for b in &mut blocks {
            let digits: u32 = b.slots.iter().map(|&(_, d)| d as u32 + 1).sum();
            b.size = q
                .checked_pow(digits)
                .filter(|&s| s <= ENUMERATION_CAP)
                .ok_or(Error::SearchTooLarge {
                    size: q.saturating_pow(digits),
                    cap: ENUMERATION_CAP,
                })?;
        }
        Ok(blocks)
    }

    /// Number of coefficient tuples, singular ones included.
    pub fn tuple_count(&self) -> Result<u128> {
        Ok(self.blocks()?.iter().map(|b| b.size).sum())
    }

    /// Iterator over `(index, equation)` for nonsingular tuples in this shard.
    pub fn curves(&self) -> Result<CurveIter<F>> {
        Ok(CurveIter {
            field: self.field.clone(),
            q: self.field_order()?,
            blocks: self.blocks()?,
            shard: self.shard,
            block: 0,
            offset: 0,
            index: self.shard.index() as u128,
            singular: 0,
        })
    }
}

/// Enumerates a configuration. Singular tuples are skipped and counted.
pub struct CurveIter<F: Field> {
    field: F,
    q: u64,
    blocks: Vec<Block>,
    shard: Shard,
    block: usize,
    /// Global index of the first tuple of the current block.
    offset: u128,
    index: u128,
    singular: u64,
}

impl<F: Field> CurveIter<F> {
    /// Singular tuples skipped so far.
    pub fn singular_skipped(&self) -> u64 {
        self.singular
    }

    /// Coefficients of tuple `local` in a block: slots in order, constant terms
    /// first, with the first slot most significant.
    fn build(&self, b: &Block, local: u128) -> WeierstrassEq<F> {
        let f = &self.field;
        let q = self.q as u128;
        let mut digits = Vec::new();
        let mut rest = local;
        let total: usize = b.slots.iter().map(|&(_, d)| d + 1).sum();
        for _ in 0..total {
            digits.push((rest % q) as u64);
            rest /= q;
        }
        digits.reverse();
        let mut a: [RatFunc<F>; 5] =
            std::array::from_fn(|i| RatFunc::from_i64(f, b.fixed[i].unwrap_or(0)));
        let mut pos = 0;
        for &(slot, d) in &b.slots {
            let coeffs: Vec<F::Elem> = digits[pos..pos + d + 1]
                .iter()
                .map(|&i| f.element(i))
                .collect();
            pos += d + 1;
            let p = Poly::new(f.clone(), coeffs);
            a[slot] = RatFunc::from_poly(if b.scale[slot] == 1 {
                p
            } else {
                p.scale(&f.from_i64(b.scale[slot]))
            });
        }
        WeierstrassEq::raw(a)
    }
}

impl<F: Field> Iterator for CurveIter<F> {
    type Item = (u128, WeierstrassEq<F>);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let b = self.blocks.get(self.block)?;
            let local = self.index - self.offset;
            if local >= b.size {
                self.offset += b.size;
                self.block += 1;
                continue;
            }
            let i = self.index;
            self.index += self.shard.count() as u128;
            let w = self.build(b, local);
            if w.is_singular() {
                self.singular += 1;
                continue;
            }
            return Some((i, w));
        }
    }
}
