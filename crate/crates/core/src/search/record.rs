//! Line-oriented records describing one analyzed curve.

use serde::Serialize;

use crate::algebra::Field;
use crate::error::Result;
use crate::moduli::{is_constant_with_count, ConstancyOptions};
use crate::reduction::{reduction_report_with, ReportOptions};
use crate::weierstrass::WeierstrassEq;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BadPlaceRecord {
    /// Monic generator in `T`, or `inf`.
    pub generator: String,
    pub degree: usize,
    pub v_delta: usize,
}

/// One curve; fields serialize in declaration order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveRecord {
    pub index: Option<u64>,
    pub field: String,
    pub coefficients: [String; 5],
    pub delta_min_factored: String,
    pub bad_places: Vec<BadPlaceRecord>,
    pub infinity_bad: bool,
    pub geometric_bad_count: usize,
    pub j: String,
    pub j_constant: bool,
    pub constant: String,
    pub constancy_reason: String,
}

pub fn curve_record<F: Field>(
    index: Option<u128>,
    w: &WeierstrassEq<F>,
    report_opts: ReportOptions,
    constancy_opts: ConstancyOptions,
) -> Result<CurveRecord> {
    let report = reduction_report_with(w, report_opts)?;
    let constancy = is_constant_with_count(w, report.geometric_bad_count, constancy_opts)?;
    let j = w.j_invariant().expect("nonsingular");
    Ok(CurveRecord {
        index: index.map(|i| i as u64),
        field: w.field().descriptor(),
        coefficients: w.coeffs().clone().map(|c| c.to_string()),
        delta_min_factored: report.delta_min_factored(),
        bad_places: report
            .bad_places
            .iter()
            .map(|b| BadPlaceRecord {
                generator: b.place.to_string(),
                degree: b.residue_degree,
                v_delta: b.v_delta_min,
            })
            .collect(),
        infinity_bad: report.infinity_bad,
        geometric_bad_count: report.geometric_bad_count,
        j_constant: j.is_constant(),
        j: j.to_string(),
        constant: constancy.kind().into(),
        constancy_reason: constancy.reason(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weierstrass::{named_example, AnyCurve, NamedExample};

    #[test]
    fn legendre_record() {
        let AnyCurve::Rational(w) = named_example(NamedExample::Legendre) else {
            panic!()
        };
        let r = curve_record(
            None,
            &w,
            ReportOptions::default(),
            ConstancyOptions::default(),
        )
        .unwrap();
        assert_eq!(r.delta_min_factored, "16*(T - 1)^2*T^2");
        assert_eq!(r.geometric_bad_count, 3);
        assert_eq!(r.constant, "non-constant");
        assert_eq!(r.constancy_reason, "j-nonconstant");
        let gens: Vec<&str> = r.bad_places.iter().map(|b| b.generator.as_str()).collect();
        assert_eq!(gens, vec!["T - 1", "T", "inf"]);
    }
}
