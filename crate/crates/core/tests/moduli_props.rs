mod common;

use common::*;
use ecff::algebra::{Field, Poly, RatFunc, Rationals};
use ecff::moduli::{constancy_char23, is_constant, ConstancyOptions, ConstancyResult};
use ecff::reduction::geometric_bad_count;
use ecff::transform::{apply, ReducedForm};
use ecff::weierstrass::WeierstrassEq;
use proptest::prelude::*;

fn verdict<F: Field>(w: &WeierstrassEq<F>) -> ConstancyResult<F> {
    let c = is_constant(w, ConstancyOptions::default()).unwrap();
    if let ConstancyResult::Constant { model, witness } = &c {
        assert!(model.is_constant_model(), "{model}");
        assert_eq!(apply(w, witness).unwrap(), *model, "witness for {w}");
    }
    c
}

/// Verdict kinds agree for `w` and every scrambled copy.
fn check_stable<F: Field>(
    w: &WeierstrassEq<F>,
    ts: &[((u64, i64, u64, i64), Vec<Vec<u64>>)],
) -> &'static str {
    let kind = verdict(w).kind();
    for (u, rst) in ts {
        let Some(t) = transform(w.field(), u, rst) else {
            continue;
        };
        let image = apply(w, &t).unwrap();
        assert_eq!(verdict(&image).kind(), kind, "{w} vs {image}");
    }
    kind
}

/// `y^2 = x^3 + a h^2 x + b h^3`: the quadratic twist of a constant curve by `h`.
fn twist<F: Field>(
    f: &F,
    a: u64,
    b: u64,
    h: &Poly<F>,
    power: (u64, u64),
) -> Option<WeierstrassEq<F>> {
    let h = RatFunc::from_poly(h.clone());
    let z = RatFunc::zero(f);
    let a = &RatFunc::constant(f, f.element(a)) * &h.pow(power.0);
    let b = &RatFunc::constant(f, f.element(b)) * &h.pow(power.1);
    WeierstrassEq::new([z.clone(), z.clone(), z, a, b]).ok()
}

macro_rules! twist_props {
    ($name:ident, $field:expr, $q:expr) => {
        mod $name {
            use super::*;
            proptest! {
                #![proptest_config(ProptestConfig::with_cases(64))]
                #[test]
                fn twists_are_stable(
                    a in 0..$q as u64, b in 0..$q as u64, h in poly_idx($q, 2),
                    power in prop::sample::select(vec![(2u64, 3u64), (4, 6), (1, 0), (0, 1), (2, 0), (0, 2), (0, 3)]),
                    ts in prop::collection::vec(transform_idx($q, 1), 3)
                ) {
                    let f = $field;
                    let Some(h) = nonzero_poly(&f, &h) else { return Ok(()) };
                    let Some(w) = twist(&f, a, b, &h, power) else { return Ok(()) };
                    let kind = check_stable(&w, &ts);
                    if power == (4, 6) || h.is_constant() {
                        prop_assert_eq!(kind, "constant");
                    }
                }

                #[test]
                fn random_curves_are_stable(e in equation_idx($q, 1), ts in prop::collection::vec(transform_idx($q, 1), 2)) {
                    let f = $field;
                    let Some(w) = equation(&f, &e) else { return Ok(()) };
                    check_stable(&w, &ts);
                }
            }
        }
    };
}

twist_props!(over_q, Rationals, 9);
twist_props!(over_f5, gf(5), 5);
twist_props!(over_f7, gf(7), 7);

macro_rules! char23_props {
    ($name:ident, $field:expr, $q:expr) => {
        mod $name {
            use super::*;
            proptest! {
                #![proptest_config(ProptestConfig::with_cases(64))]
                #[test]
                fn scrambled_constant_curves(c in prop::collection::vec(0..$q as u64, 5), ts in prop::collection::vec(transform_idx($q, 2), 2)) {
                    let f = $field;
                    let Some(w) = equation(&f, &c.iter().map(|&i| vec![i]).collect::<Vec<_>>()) else { return Ok(()) };
                    prop_assert_eq!(check_stable(&w, &ts), "constant");
                }

                #[test]
                fn random_curves_are_stable(e in equation_idx($q, 1), ts in prop::collection::vec(transform_idx($q, 1), 2)) {
                    let f = $field;
                    let Some(w) = equation(&f, &e) else { return Ok(()) };
                    check_stable(&w, &ts);
                }
            }
        }
    };
}

char23_props!(over_f2, gf(2), 2);
char23_props!(over_f3, gf(3), 3);
char23_props!(over_gf4, gf_ext(2, 2), 4);

/// In characteristic 3 with `j != 0`, good reduction everywhere forces the
/// reduced coefficients to be constant; both entry points agree.
#[test]
fn char3_j_nonzero_good_everywhere() {
    let f = gf(3);
    let polys = all_polys(&f, 2);
    let mut good = 0;
    for a2 in &polys {
        for a6 in &polys {
            let form = ReducedForm::Char3JNonzero {
                a2: RatFunc::from_poly(a2.clone()),
                a6: RatFunc::from_poly(a6.clone()),
            };
            let w = form.to_equation();
            if w.is_singular() || geometric_bad_count(&w).unwrap() > 0 {
                continue;
            }
            good += 1;
            assert!(a2.is_constant() && a6.is_constant(), "{w}");
            let generic = constancy_char23(&w, 12).unwrap();
            let shortcut = verdict(&w);
            assert!(shortcut.is_constant());
            assert_eq!(generic, shortcut);
        }
    }
    assert_eq!(good, 4);
}
