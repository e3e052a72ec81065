//! Re-analysis of the six named example curves against their known
//! discriminants, j-invariants and bad places.

use serde::Serialize;

use crate::algebra::{Field, Place, Poly, RatFunc};
use crate::error::Result;
use crate::moduli::{is_constant, ConstancyOptions};
use crate::reduction::{global_minimal, reduction_report, Chart};
use crate::weierstrass::{named_example, AnyCurve, NamedExample, WeierstrassEq};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExampleCheck {
    pub id: String,
    pub field: String,
    pub equation: String,
    pub delta: String,
    pub j: String,
    /// Bad points: `a` for the place `T - a`, the generator otherwise, and `inf`.
    pub bad_set: Vec<String>,
    pub minimal_over_a1: bool,
    pub constant: String,
    pub mismatches: Vec<String>,
}

impl ExampleCheck {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

struct Expected {
    delta: (i64, Vec<(Vec<i64>, u64)>),
    j: ((i64, Vec<(Vec<i64>, u64)>), Vec<(Vec<i64>, u64)>),
    bad_set: &'static [&'static str],
    constant: &'static str,
}

fn expected(e: NamedExample) -> Expected {
    let t = vec![0, 1];
    let t1 = vec![-1, 1];
    match e {
        NamedExample::Legendre => Expected {
            delta: (16, vec![(t.clone(), 2), (t1.clone(), 2)]),
            j: ((256, vec![(vec![1, -1, 1], 3)]), vec![(t, 2), (t1, 2)]),
            bad_set: &["0", "1", "inf"],
            constant: "non-constant",
        },
        NamedExample::J1728 => Expected {
            delta: (1728, vec![(t, 6)]),
            j: ((1728, vec![]), vec![]),
            bad_set: &["0", "inf"],
            constant: "non-constant",
        },
        NamedExample::Char2TwoBad => Expected {
            delta: (1, vec![(t.clone(), 1)]),
            j: ((1, vec![]), vec![(t, 1)]),
            bad_set: &["0", "inf"],
            constant: "non-constant",
        },
        NamedExample::Char3TwoBad => Expected {
            delta: (1, vec![(t.clone(), 4)]),
            j: ((1, vec![(t, 2)]), vec![]),
            bad_set: &["0", "inf"],
            constant: "non-constant",
        },
        NamedExample::Char2GoodA1 => Expected {
            delta: (1, vec![]),
            j: ((1, vec![]), vec![]),
            bad_set: &["inf"],
            constant: "non-constant",
        },
        NamedExample::Char3GoodEverywhereA1 => Expected {
            delta: (1, vec![]),
            j: ((0, vec![]), vec![]),
            bad_set: &["inf"],
            constant: "non-constant",
        },
    }
}

fn product<F: Field>(field: &F, c: i64, factors: &[(Vec<i64>, u64)]) -> Poly<F> {
    factors
        .iter()
        .fold(Poly::constant(field, field.from_i64(c)), |acc, (g, e)| {
            &acc * &Poly::from_ints(field, g).pow(*e)
        })
}

fn point_name<F: Field>(place: &Place<F>) -> String {
    match place.generator() {
        Some(g) if g.degree() == Some(1) => g.field().format_elem(&g.field().neg(&g.coeff(0))),
        _ => place.to_string(),
    }
}

fn check<F: Field>(id: NamedExample, w: &WeierstrassEq<F>) -> Result<ExampleCheck> {
    let field = w.field();
    let exp = expected(id);
    let mut mismatches = Vec::new();
    let delta = w.discriminant();
    let want_delta = RatFunc::from_poly(product(field, exp.delta.0, &exp.delta.1));
    if delta != want_delta {
        mismatches.push(format!("delta {delta}, expected {want_delta}"));
    }
    let j = w.j_invariant().expect("nonsingular");
    let ((c, num), den) = &exp.j;
    let want_j = RatFunc::new(product(field, *c, num), product(field, 1, den))?;
    if j != want_j {
        mismatches.push(format!("j {j}, expected {want_j}"));
    }
    let report = reduction_report(w)?;
    let bad_set: Vec<String> = report
        .bad_places
        .iter()
        .map(|b| point_name(&b.place))
        .collect();
    let mut sorted = bad_set.clone();
    sorted.sort();
    let mut want: Vec<String> = exp.bad_set.iter().map(|s| s.to_string()).collect();
    want.sort();
    if sorted != want {
        mismatches.push(format!(
            "bad set {{{}}}, expected {{{}}}",
            bad_set.join(", "),
            want.join(", ")
        ));
    }
    let minimal_over_a1 = global_minimal(w, Chart::AtZero)?.0 == *w;
    if !minimal_over_a1 {
        mismatches.push("the given equation is not minimal over A^1".into());
    }
    let constant = is_constant(w, ConstancyOptions::default())?;
    if constant.kind() != exp.constant {
        mismatches.push(format!(
            "constancy {}, expected {}",
            constant.kind(),
            exp.constant
        ));
    }
    Ok(ExampleCheck {
        id: id.id().into(),
        field: field.descriptor(),
        equation: w.equation_string(),
        delta: delta.to_string(),
        j: j.to_string(),
        bad_set,
        minimal_over_a1,
        constant: constant.kind().into(),
        mismatches,
    })
}

pub fn run_example(id: NamedExample) -> Result<ExampleCheck> {
    match named_example(id) {
        AnyCurve::Rational(w) => check(id, &w),
        AnyCurve::Prime(w) => check(id, &w),
    }
}

/// Checks all six examples.
pub fn run_examples() -> Result<Vec<ExampleCheck>> {
    NamedExample::ALL.into_iter().map(run_example).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_examples_match() {
        for c in run_examples().unwrap() {
            assert!(c.ok(), "{}: {:?}", c.id, c.mismatches);
        }
    }
}
