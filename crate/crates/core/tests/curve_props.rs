mod common;

use common::*;
use ecff::algebra::{Field, Poly, RatFunc, Rationals};
use ecff::transform::{
    apply, stabilizer_check, to_reduced_form, to_short_form, ReducedForm, Transform,
};
use ecff::weierstrass::{discriminant_char2, discriminant_char3_reduced, WeierstrassEq};
use proptest::prelude::*;

fn check_b8<F: Field>(w: &WeierstrassEq<F>) {
    let [b2, b4, b6, b8] = w.b_invariants();
    assert_eq!(
        &RatFunc::from_i64(w.field(), 4) * &b8,
        &(&b2 * &b6) - &(&b4 * &b4)
    );
}

fn check_transform<F: Field>(w: &WeierstrassEq<F>, t1: &Transform<F>, t2: &Transform<F>) {
    let w1 = apply(w, t1).unwrap();
    let u12 = t1.u.powi(-12).unwrap();
    assert_eq!(w1.discriminant(), &u12 * &w.discriminant());
    assert_eq!(w1.j_invariant(), w.j_invariant());
    let w12 = apply(&w1, t2).unwrap();
    assert_eq!(apply(w, &t1.compose(t2)).unwrap(), w12);
    assert_eq!(apply(&w1, &t1.invert()).unwrap(), *w);
    assert_eq!(t1.compose(&t1.invert()), Transform::identity(w.field()));
}

fn check_reduced<F: Field>(w: &WeierstrassEq<F>) {
    let (form, tr) = to_reduced_form(w).unwrap();
    let eq = form.to_equation();
    assert_eq!(apply(w, &tr).unwrap(), eq);
    assert_eq!(form.discriminant(), eq.discriminant());
    assert_eq!(form.j_invariant(), eq.j_invariant());
    assert_eq!(eq.j_invariant(), w.j_invariant());
    let (a, d) = match &form {
        ReducedForm::Char3JNonzero { a2, a6 } => (a2.pow(3), -(&a2.pow(3) * a6)),
        ReducedForm::Char3JZero { a4, .. } => (RatFunc::zero(w.field()), -a4.pow(3)),
        ReducedForm::Char2JNonzero { a6, .. } => (RatFunc::one(w.field()), a6.clone()),
        ReducedForm::Char2JZero { a3, .. } => (RatFunc::zero(w.field()), a3.pow(4)),
    };
    assert_eq!(eq.discriminant(), d);
    let j = eq.j_invariant().unwrap();
    match &form {
        ReducedForm::Char3JNonzero { a6, .. } => assert_eq!(j, -(a.div(a6).unwrap())),
        ReducedForm::Char2JNonzero { a6, .. } => assert_eq!(j, a.div(a6).unwrap()),
        _ => assert!(j.is_zero()),
    }
}

macro_rules! field_props {
    ($name:ident, $field:expr, $q:expr) => {
        mod $name {
            use super::*;
            proptest! {
                #![proptest_config(ProptestConfig::with_cases(500))]
                #[test]
                fn identities(e in equation_idx($q, 2), t1 in transform_idx($q, 2), t2 in transform_idx($q, 1)) {
                    let f = $field;
                    let Some(w) = equation(&f, &e) else { return Ok(()) };
                    check_b8(&w);
                    let (Some(t1), Some(t2)) = (transform(&f, &t1.0, &t1.1), transform(&f, &t2.0, &t2.1)) else {
                        return Ok(());
                    };
                    check_transform(&w, &t1, &t2);
                    if matches!(f.characteristic(), 2 | 3) {
                        check_reduced(&w);
                    } else {
                        let (s, tr) = to_short_form(&w).unwrap();
                        prop_assert_eq!(apply(&w, &tr).unwrap(), s.clone());
                        prop_assert!(s.a1().is_zero() && s.a2().is_zero() && s.a3().is_zero());
                    }
                }
            }
        }
    };
}

field_props!(over_q, Rationals, 9);
field_props!(over_f2, gf(2), 2);
field_props!(over_f3, gf(3), 3);
field_props!(over_f5, gf(5), 5);
field_props!(over_f7, gf(7), 7);
field_props!(over_gf4, gf_ext(2, 2), 4);
field_props!(over_gf9, gf_ext(3, 2), 9);

#[test]
fn char2_discriminant_exhaustive() {
    let f = gf(2);
    let polys = all_polys(&f, 1);
    let mut checked = 0;
    for i in 0..polys.len().pow(5) {
        let a: [Poly<_>; 5] =
            std::array::from_fn(|k| polys[(i / polys.len().pow(k as u32)) % polys.len()].clone());
        let w = WeierstrassEq::from_polys(a);
        assert_eq!(discriminant_char2(&w).unwrap(), w.invariants().delta);
        checked += 1;
    }
    assert_eq!(checked, 1 << 10);
}

#[test]
fn char3_discriminant_exhaustive() {
    let f = gf(3);
    let polys = all_polys(&f, 1);
    let z = Poly::zero(&f);
    for a in &polys {
        for b in &polys {
            for (x, y) in [(a, &z), (&z, a)] {
                let w = WeierstrassEq::from_polys([
                    z.clone(),
                    x.clone(),
                    z.clone(),
                    y.clone(),
                    b.clone(),
                ]);
                assert_eq!(
                    discriminant_char3_reduced(&w).unwrap(),
                    w.invariants().delta
                );
            }
        }
    }
}

/// Every transform passing the stabilizer check keeps the reduced shape.
fn check_stabilizers<F: Field>(f: &F, coeff_deg: usize) {
    let polys = all_polys(f, coeff_deg);
    let small = all_polys(f, 1);
    let r = |p: &Poly<F>| RatFunc::from_poly(p.clone());
    let mut units: Vec<RatFunc<F>> = all_elems(f)
        .into_iter()
        .filter(|c| !f.is_zero(c))
        .map(|c| RatFunc::constant(f, c))
        .collect();
    units.push(RatFunc::t(f));
    let mut forms = Vec::new();
    for a in &polys {
        for b in &polys {
            match f.characteristic() {
                3 => {
                    forms.push(ReducedForm::Char3JNonzero { a2: r(a), a6: r(b) });
                    forms.push(ReducedForm::Char3JZero { a4: r(a), a6: r(b) });
                }
                _ => {
                    forms.push(ReducedForm::Char2JNonzero { a2: r(a), a6: r(b) });
                    forms.push(ReducedForm::Char2JZero {
                        a3: RatFunc::one(f),
                        a4: r(a),
                        a6: r(b),
                    });
                }
            }
        }
    }
    let mut kept = 0;
    for form in &forms {
        let w = form.to_equation();
        if w.is_singular() {
            continue;
        }
        for u in &units {
            for rr in &small {
                for s in &small {
                    for t in &small {
                        let tr = Transform::new(u.clone(), r(rr), r(s), r(t)).unwrap();
                        if !stabilizer_check(form, &tr) {
                            continue;
                        }
                        let image = ReducedForm::recognize(&apply(&w, &tr).unwrap());
                        assert_eq!(
                            image.map(|g| g.variant()),
                            Some(form.variant()),
                            "{w} under {tr}"
                        );
                        kept += 1;
                    }
                }
            }
        }
    }
    assert!(kept > 0);
}

#[test]
fn stabilizers_preserve_shape_f2() {
    check_stabilizers(&gf(2), 1);
}

#[test]
fn stabilizers_preserve_shape_f3() {
    check_stabilizers(&gf(3), 1);
}
