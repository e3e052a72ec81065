mod common;

use common::*;
use ecff::algebra::{support, valuation, Field, RatFunc, Rationals, DEFAULT_SEED};
use ecff::height_mason::{height, mason_check, unit_difference_exhaustive, Exemption, MasonTriple};
use ecff::shard::Shard;
use proptest::prelude::*;

/// Degree of the zero divisor, summed over every place including infinity.
fn zero_count<F: Field>(x: &RatFunc<F>) -> usize {
    support(&[x], DEFAULT_SEED)
        .unwrap()
        .iter()
        .map(|v| valuation(x, v).unwrap().max(0) as usize * v.residue_degree())
        .sum()
}

fn check_height<F: Field>(x: &RatFunc<F>, n: u64) {
    let h = height(x).unwrap();
    assert_eq!(h, x.num().deg_i64().max(x.den().deg_i64()) as usize);
    assert_eq!(zero_count(x), h, "definitional sum for {x}");
    assert_eq!(height(&x.inv().unwrap()).unwrap(), h);
    assert_eq!(height(&x.pow(n)).unwrap(), n as usize * h);
}

fn check_mason<F: Field>(g1: &RatFunc<F>, g2: &RatFunc<F>) {
    let Ok(triple) = MasonTriple::from_pair(g1.clone(), g2.clone()) else {
        return;
    };
    let v = mason_check(&triple).unwrap_or_else(|e| panic!("{e}"));
    if v.exempt == Exemption::NotExempt {
        assert!(v.slack >= 0);
    }
    let ratio = g1.div(g2).unwrap();
    assert_eq!(
        v.slack,
        v.v_size as i64 - 2 - height(&ratio).unwrap() as i64
    );
    // every place where the three valuations differ is in the set
    for p in support(
        &[&triple.gamma1, &triple.gamma2, &triple.gamma3],
        DEFAULT_SEED,
    )
    .unwrap()
    {
        let vals =
            [&triple.gamma1, &triple.gamma2, &triple.gamma3].map(|g| valuation(g, &p).unwrap());
        if vals[0] != vals[1] || vals[1] != vals[2] {
            assert!(v.places.contains(&p), "{p} missing");
        }
    }
}

proptest! {
    #[test]
    fn height_over_f5(a in poly_idx(5, 5), b in poly_idx(5, 5), n in 1u64..5) {
        let Some(x) = ratfunc(&gf(5), &a, &b) else { return Ok(()) };
        check_height(&x, n);
    }

    #[test]
    fn height_over_q(a in poly_idx(9, 4), b in poly_idx(9, 4), n in 1u64..4) {
        let Some(x) = ratfunc(&Rationals, &a, &b) else { return Ok(()) };
        check_height(&x, n);
    }

    #[test]
    fn mason_never_fails(
        a in poly_idx(9, 4), b in poly_idx(9, 2), c in poly_idx(9, 4), d in poly_idx(9, 2),
        p in prop::sample::select(vec![0u64, 2, 3, 5])
    ) {
        if p == 0 {
            let f = Rationals;
            if let (Some(x), Some(y)) = (ratfunc(&f, &a, &b), ratfunc(&f, &c, &d)) {
                check_mason(&x, &y);
            }
        } else {
            let f = gf(p);
            let m = |v: &Vec<u64>| v.iter().map(|i| i % p).collect::<Vec<_>>();
            if let (Some(x), Some(y)) = (ratfunc(&f, &m(&a), &m(&b)), ratfunc(&f, &m(&c), &m(&d))) {
                check_mason(&x, &y);
            }
        }
    }
}

#[test]
fn unit_differences_small_exhaustive() {
    let f = gf(5);
    let whole = unit_difference_exhaustive(&f, 1, 1, Shard::WHOLE).unwrap();
    assert_eq!(whole.pairs, 61 * 61);
    assert_eq!(
        whole.unit_differences,
        whole.both_powers + whole.a_zero + whole.b_zero
    );
    let mut merged = unit_difference_exhaustive(&f, 1, 1, Shard::new(0, 4).unwrap()).unwrap();
    for i in 1..4 {
        merged.merge(&unit_difference_exhaustive(&f, 1, 1, Shard::new(i, 4).unwrap()).unwrap());
    }
    assert_eq!(merged, whole);
}
