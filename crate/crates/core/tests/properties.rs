//! Property tests for the exact series ring.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use spinc_bounds::series::{exp_halfk, Coeff, LaurentSeries, RationalSeries};

fn coeff_strategy() -> impl Strategy<Value = Coeff> {
    (-24i64..=24, 1i64..=8)
        .prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn series_of_order(order: usize) -> impl Strategy<Value = RationalSeries> {
    proptest::collection::vec(coeff_strategy(), order + 1).prop_map(RationalSeries::from_coeffs)
}

/// Series triples of one shared order <= 12.
fn series_triple() -> impl Strategy<Value = (RationalSeries, RationalSeries, RationalSeries)> {
    (0usize..=12).prop_flat_map(|order| {
        (
            series_of_order(order),
            series_of_order(order),
            series_of_order(order),
        )
    })
}

fn unit_series() -> impl Strategy<Value = RationalSeries> {
    (0usize..=12)
        .prop_flat_map(series_of_order)
        .prop_map(|mut s| {
            if s.coeff(0).is_zero() {
                let mut coeffs = s.coeffs().to_vec();
                coeffs[0] = Coeff::one();
                s = RationalSeries::from_coeffs(coeffs);
            }
            s
        })
}

fn laurent_strategy() -> impl Strategy<Value = LaurentSeries> {
    (-6i64..=3, proptest::collection::vec(coeff_strategy(), 1..=10))
        .prop_map(|(valuation, coeffs)| LaurentSeries::from_parts(valuation, coeffs))
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative((a, b, c) in series_triple()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn multiplication_is_commutative_and_associative((a, b, c) in series_triple()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn multiplication_distributes((a, b, c) in series_triple()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn inverse_is_right_inverse(s in unit_series()) {
        let inv = s.invert().unwrap();
        prop_assert_eq!(s.mul(&inv), RationalSeries::one(s.order()));
    }

    #[test]
    fn exp_halfk_is_additive_in_k(j in -6i64..=6, k in -6i64..=6) {
        let order = 10;
        let product = exp_halfk(j, order).mul(&exp_halfk(k, order));
        prop_assert_eq!(product, exp_halfk(j + k, order));
    }

    #[test]
    fn residue_of_derivative_vanishes(s in laurent_strategy()) {
        let d = s.derivative();
        if d.order() >= -1 {
            prop_assert!(d.residue().unwrap().is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]
    #[test]
    fn hundred_random_unit_inverses(s in unit_series()) {
        let inv = s.invert().unwrap();
        prop_assert_eq!(s.mul(&inv), RationalSeries::one(s.order()));
        prop_assert_eq!(inv.invert().unwrap(), s);
    }
}
