//! Equation parsing, exhaustive enumeration and the bound-verification harness.

mod bounds;
mod enumerate;
mod examples;
mod parse;
mod record;

pub use bounds::{
    analyze_curve, lower_bounds, verify_bounds, verify_bounds_with, BoundsSettings, BoundsSummary,
    CurveAnalysis, Minimum, Violation, Witness,
};
pub use enumerate::{CurveIter, SearchConfig, SearchForm, ENUMERATION_CAP};
pub use examples::{run_example, run_examples, ExampleCheck};
pub use parse::{parse_equation, parse_ratfunc};
pub use record::{curve_record, BadPlaceRecord, CurveRecord};

/// Runs `$body` with `$f` bound to the field named by a [`FieldTag`](crate::algebra::FieldTag).
/// The enclosing function must return a `Result` whose error converts from
/// [`Error`](crate::Error).
#[macro_export]
macro_rules! with_field {
    ($tag:expr, |$f:ident| $body:expr) => {
        match $tag {
            $crate::algebra::FieldTag::Rationals => {
                let $f = $crate::algebra::Rationals;
                $body
            }
            $crate::algebra::FieldTag::Prime(p) => {
                let $f = $crate::algebra::PrimeField::new(*p)?;
                $body
            }
            $crate::algebra::FieldTag::Extension(p, n) => {
                let $f = $crate::algebra::ExtensionField::with_degree(*p, *n)?;
                $body
            }
        }
    };
}
