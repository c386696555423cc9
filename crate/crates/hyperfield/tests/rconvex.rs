mod common;

use common::{ratio, samples_between, TestRng};
use hyperfield::rconvex::{c_add, c_add_membership_oracle, c_add_set, theta_int, theta_set, Atom, OracleVerdict, SignConvexSet};
use hyperfield::{RatSet, Rational};
use num_traits::Zero;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    prop_oneof![
        1 => Just(ratio(0, 1)),
        12 => (-30i64..=30, 1i64..=12).prop_map(|(n, d)| ratio(n, d)),
    ]
}

/// Pairs with `y = x` and `y = -x` weighted up, since those hit the
/// degenerate rows of the table.
fn pair() -> impl Strategy<Value = (Rational, Rational)> {
    prop_oneof![
        1 => rational().prop_map(|x| (x.clone(), x)),
        1 => rational().prop_map(|x| (x.clone(), -x)),
        2 => (rational(), rational()),
    ]
}

fn members(rng: &mut TestRng, set: &RatSet) -> Vec<Rational> {
    let mut out = Vec::new();
    for atom in set.atoms() {
        match atom {
            Atom::Point(p) => out.push(p.clone()),
            Atom::Open(lo, hi) => out.extend(samples_between(rng, lo.finite(), hi.finite(), 3)),
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn distributive(a in rational(), (x, y) in pair()) {
        prop_assert_eq!(c_add(&x, &y).scale(&a), c_add(&(&a * &x), &(&a * &y)));
    }

    #[test]
    fn commutative_and_nonempty((x, y) in pair()) {
        let s = c_add(&x, &y);
        prop_assert!(!s.is_empty());
        prop_assert_eq!(s, c_add(&y, &x));
    }

    #[test]
    fn zero_is_neutral(x in rational()) {
        prop_assert_eq!(c_add(&x, &Rational::zero()), SignConvexSet::point(x));
    }

    #[test]
    fn negation_commutes((x, y) in pair()) {
        prop_assert_eq!(c_add(&x, &y).neg(), c_add(&-x, &-y));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn associative((x, y) in pair(), z in rational()) {
        let left = c_add_set(&c_add(&x, &y), &SignConvexSet::point(z.clone()));
        let right = c_add_set(&SignConvexSet::point(x), &c_add(&y, &z));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn reversible((x, y) in pair(), seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        for z in members(&mut rng, &c_add(&x, &y)) {
            prop_assert!(c_add(&z, &-x.clone()).contains(&y), "z = {z}");
        }
    }

    #[test]
    fn theta_is_an_automorphism((x, y) in pair(), l in prop::sample::select(vec![-1i64, 2, 3])) {
        prop_assume!(l > 0 || (!x.is_zero() && !y.is_zero()));
        let image = theta_set(l, &c_add(&x, &y)).unwrap();
        let sum = c_add(&theta_int(l, &x).unwrap(), &theta_int(l, &y).unwrap());
        prop_assert_eq!(image, sum);
    }
}

proptest! {
    // Nonmembers with x = y cost a full grid search each, so fewer cases.
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn oracle_and_table_agree((x, y) in pair(), seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let table = c_add(&x, &y);
        let mut probes = members(&mut rng, &table);
        probes.extend(samples_between(&mut rng, None, None, 2));
        for z in probes {
            let member = matches!(c_add_membership_oracle(&x, &y, &z, 200), OracleVerdict::Member { .. });
            if member {
                prop_assert!(table.contains(&z), "oracle puts {z} in {x} + {y}");
            }
            if table.contains(&z) && z.denom() <= &50.into() {
                prop_assert!(member, "oracle misses {z} in {x} + {y}");
            }
        }
    }
}

#[test]
fn oracle_witness_is_exact() {
    let (x, y, z) = (ratio(3, 1), ratio(-1, 2), ratio(4, 1));
    match c_add_membership_oracle(&x, &y, &z, 200) {
        OracleVerdict::Member { alpha, beta } => {
            assert_eq!((alpha.clone(), beta.clone()), (ratio(7, 5), ratio(2, 5)));
            assert_eq!(&alpha * &x + &beta * &y, z);
        }
        v => panic!("{v:?}"),
    }
    assert_eq!(c_add_membership_oracle(&x, &y, &ratio(1, 3), 200), OracleVerdict::NonmemberAtResolution);
}
