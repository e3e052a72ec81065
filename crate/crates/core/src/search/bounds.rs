//! The bound-verification harness: lower bounds on the number of geometric
//! bad points for non-constant curves and for curves with non-constant `j`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::Field;
use crate::error::Result;
use crate::moduli::{is_constant_with_count, ConstancyOptions, ConstancyResult};
use crate::reduction::{check_minimal_models, geometric_bad_count};
use crate::weierstrass::WeierstrassEq;

use super::enumerate::SearchConfig;

/// `(non-constant, non-constant j)` lower bounds for a characteristic.
pub fn lower_bounds(characteristic: u64) -> (usize, usize) {
    match characteristic {
        2 | 3 => (1, 2),
        _ => (2, 3),
    }
}

/// Everything the harness needs to know about one curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveAnalysis<F: Field> {
    pub index: u128,
    pub equation: WeierstrassEq<F>,
    pub geometric_bad_count: usize,
    pub j_constant: bool,
    pub constancy: ConstancyResult<F>,
    /// Present when structural checks were requested.
    pub minimal_models_ok: Option<bool>,
}

pub fn analyze_curve<F: Field>(
    index: u128,
    w: &WeierstrassEq<F>,
    settings: &BoundsSettings,
) -> Result<CurveAnalysis<F>> {
    let count = geometric_bad_count(w)?;
    let constancy = is_constant_with_count(w, count, settings.constancy)?;
    let j_constant = !matches!(
        constancy,
        ConstancyResult::NonConstant(crate::moduli::NonConstantReason::JNonConstant)
    );
    let minimal_models_ok = if settings.structural_checks {
        Some(check_minimal_models(w)?.ok())
    } else {
        None
    };
    Ok(CurveAnalysis {
        index,
        equation: w.clone(),
        geometric_bad_count: count,
        j_constant,
        constancy,
        minimal_models_ok,
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BoundsSettings {
    pub constancy: ConstancyOptions,
    /// Also check idempotence and chart consistency of the minimal models.
    pub structural_checks: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub index: u64,
    pub equation: String,
    pub geometric_bad_count: usize,
    pub constancy_reason: String,
}

impl Witness {
    fn of<F: Field>(a: &CurveAnalysis<F>) -> Self {
        Witness {
            index: a.index as u64,
            equation: a.equation.to_string(),
            geometric_bad_count: a.geometric_bad_count,
            constancy_reason: a.constancy.reason(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: String,
    pub witness: Witness,
}

/// Minimum of a category together with every curve attaining it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Minimum {
    pub value: Option<usize>,
    pub witnesses: Vec<Witness>,
}

impl Minimum {
    fn offer(&mut self, w: Witness) {
        match self.value {
            Some(v) if w.geometric_bad_count > v => {}
            Some(v) if w.geometric_bad_count == v => self.witnesses.push(w),
            _ => {
                self.value = Some(w.geometric_bad_count);
                self.witnesses = vec![w];
            }
        }
    }

    fn merge(&mut self, other: &Minimum) {
        match (self.value, other.value) {
            (_, None) => {}
            (Some(a), Some(b)) if b > a => {}
            (Some(a), Some(b)) if a == b => {
                self.witnesses.extend(other.witnesses.iter().cloned());
                self.witnesses.sort_by_key(|w| w.index);
            }
            _ => *self = other.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsSummary {
    pub field: String,
    pub form: String,
    pub degree_bound: usize,
    pub tuples: u64,
    pub curves_scanned: u64,
    pub singular_skipped: u64,
    pub j_nonconstant: u64,
    pub nonconstant: u64,
    pub constant: u64,
    pub undecided: u64,
    pub bound_nonconstant: usize,
    pub bound_j_nonconstant: usize,
    pub min_bad_nonconstant: Minimum,
    pub min_bad_j_nonconstant: Minimum,
    /// Curves per geometric bad count, all categories.
    pub bad_count_histogram: BTreeMap<usize, u64>,
    pub structural_checked: u64,
    pub structural_failures: Vec<Witness>,
    pub violations: Vec<Violation>,
}

impl BoundsSummary {
    fn empty<F: Field>(cfg: &SearchConfig<F>) -> Self {
        let (bn, bj) = lower_bounds(cfg.field.characteristic());
        BoundsSummary {
            field: cfg.field.descriptor(),
            form: cfg.form.name(),
            degree_bound: cfg.degree_bound,
            tuples: 0,
            curves_scanned: 0,
            singular_skipped: 0,
            j_nonconstant: 0,
            nonconstant: 0,
            constant: 0,
            undecided: 0,
            bound_nonconstant: bn,
            bound_j_nonconstant: bj,
            min_bad_nonconstant: Minimum::default(),
            min_bad_j_nonconstant: Minimum::default(),
            bad_count_histogram: BTreeMap::new(),
            structural_checked: 0,
            structural_failures: Vec::new(),
            violations: Vec::new(),
        }
    }

    /// Folds one curve into the summary.
    pub fn record<F: Field>(&mut self, a: &CurveAnalysis<F>) {
        self.curves_scanned += 1;
        *self
            .bad_count_histogram
            .entry(a.geometric_bad_count)
            .or_default() += 1;
        let witness = Witness::of(a);
        let mut violate = |kind: &str, w: &Witness| {
            self.violations.push(Violation {
                kind: kind.into(),
                witness: w.clone(),
            })
        };
        match &a.constancy {
            ConstancyResult::Constant { .. } => {
                self.constant += 1;
                if a.geometric_bad_count > 0 {
                    violate("constant-with-bad-reduction", &witness);
                }
            }
            ConstancyResult::Undecided { .. } => self.undecided += 1,
            ConstancyResult::NonConstant(_) => {
                self.nonconstant += 1;
                if a.geometric_bad_count < self.bound_nonconstant {
                    violate("nonconstant-below-bound", &witness);
                }
                if !a.j_constant {
                    self.j_nonconstant += 1;
                    if a.geometric_bad_count < self.bound_j_nonconstant {
                        violate("j-nonconstant-below-bound", &witness);
                    }
                    self.min_bad_j_nonconstant.offer(witness.clone());
                }
                self.min_bad_nonconstant.offer(witness.clone());
            }
        }
        if let Some(ok) = a.minimal_models_ok {
            self.structural_checked += 1;
            if !ok {
                self.structural_failures.push(witness);
            }
        }
    }

    /// Combines the summaries of disjoint shards of one configuration.
    pub fn merge(&mut self, other: &BoundsSummary) {
        self.tuples += other.tuples;
        self.curves_scanned += other.curves_scanned;
        self.singular_skipped += other.singular_skipped;
        self.j_nonconstant += other.j_nonconstant;
        self.nonconstant += other.nonconstant;
        self.constant += other.constant;
        self.undecided += other.undecided;
        self.min_bad_nonconstant.merge(&other.min_bad_nonconstant);
        self.min_bad_j_nonconstant
            .merge(&other.min_bad_j_nonconstant);
        for (k, v) in &other.bad_count_histogram {
            *self.bad_count_histogram.entry(*k).or_default() += v;
        }
        self.structural_checked += other.structural_checked;
        self.structural_failures
            .extend(other.structural_failures.iter().cloned());
        self.structural_failures.sort_by_key(|w| w.index);
        self.violations.extend(other.violations.iter().cloned());
        self.violations.sort_by_key(|v| v.witness.index);
    }

    /// 0 when every bound holds, 2 on a violation, 3 when only undecided
    /// verdicts stand in the way.
    pub fn exit_code(&self) -> i32 {
        if !self.violations.is_empty() || !self.structural_failures.is_empty() {
            2
        } else if self.undecided > 0 {
            3
        } else {
            0
        }
    }
}

/// Scans the configuration's shard, calling `on_curve` for each analyzed curve.
pub fn verify_bounds_with<F: Field>(
    cfg: &SearchConfig<F>,
    settings: &BoundsSettings,
    mut on_curve: impl FnMut(&CurveAnalysis<F>) -> Result<()>,
) -> Result<BoundsSummary> {
    let mut summary = BoundsSummary::empty(cfg);
    let total = cfg.tuple_count()?;
    let (i, n) = (cfg.shard.index() as u128, cfg.shard.count() as u128);
    summary.tuples = if total > i {
        ((total - i - 1) / n + 1) as u64
    } else {
        0
    };
    let mut curves = cfg.curves()?;
    for (index, w) in curves.by_ref() {
        let a = analyze_curve(index, &w, settings)?;
        summary.record(&a);
        on_curve(&a)?;
    }
    summary.singular_skipped = curves.singular_skipped();
    Ok(summary)
}

pub fn verify_bounds<F: Field>(
    cfg: &SearchConfig<F>,
    settings: &BoundsSettings,
) -> Result<BoundsSummary> {
    verify_bounds_with(cfg, settings, |_| Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;
    use crate::search::enumerate::SearchForm;
    use crate::shard::Shard;

    #[test]
    fn small_scans_respect_bounds_and_merge() {
        let f2 = PrimeField::new(2).unwrap();
        let cfg = SearchConfig::new(f2, SearchForm::ReducedBoth, 1);
        let settings = BoundsSettings {
            structural_checks: true,
            ..Default::default()
        };
        let whole = verify_bounds(&cfg, &settings).unwrap();
        assert_eq!(whole.exit_code(), 0, "{whole:?}");
        assert_eq!(whole.min_bad_j_nonconstant.value, Some(2));
        assert_eq!(whole.curves_scanned + whole.singular_skipped, whole.tuples);
        let mut merged: Option<BoundsSummary> = None;
        for s in Shard::all(3).unwrap() {
            let part = verify_bounds(&cfg.clone().with_shard(s), &settings).unwrap();
            match merged.as_mut() {
                None => merged = Some(part),
                Some(m) => m.merge(&part),
            }
        }
        assert_eq!(merged.unwrap(), whole);
    }
}
