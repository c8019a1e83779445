//! Ring laws for sparse polynomial arithmetic, parse/print round-trips, and
//! weight-homogeneous decomposition, on randomly generated inputs.

use darboux::{
    homogeneous_components, homogeneous_degree, parse_poly, Monomial, Poly, Rational, VarContext,
    WeightVector,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=9).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn poly() -> impl Strategy<Value = Poly<Rational>> {
    proptest::collection::vec((proptest::array::uniform4(0u16..4), rat()), 0..6).prop_map(
        |terms| {
            let ctx = VarContext::xyzt();
            terms.into_iter().fold(Poly::zero(&ctx), |acc, (exps, c)| {
                acc.add(&Poly::from_term(
                    &ctx,
                    Monomial::from_exponents(exps.to_vec()),
                    c,
                ))
            })
        },
    )
}

fn weight_vector() -> impl Strategy<Value = WeightVector> {
    (proptest::array::uniform4(-5i64..=5), 0u32..=8)
        .prop_map(|(w, m)| WeightVector::new(w.to_vec(), m))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn addition_commutes(a in poly(), b in poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
    }

    #[test]
    fn addition_associates(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn zero_is_the_additive_identity(a in poly()) {
        let zero = Poly::zero(a.context());
        prop_assert_eq!(a.add(&zero), a.clone());
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn subtraction_adds_the_negation(a in poly(), b in poly()) {
        prop_assert_eq!(a.sub(&b), a.add(&b.neg()));
    }

    #[test]
    fn multiplication_commutes(a in poly(), b in poly()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn multiplication_associates(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn one_is_the_multiplicative_identity(a in poly()) {
        let one = Poly::one(a.context());
        prop_assert_eq!(a.mul(&one), a.clone());
        prop_assert!(a.mul(&Poly::zero(a.context())).is_zero());
    }

    #[test]
    fn multiplication_distributes(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn scaling_is_constant_multiplication(a in poly(), u in rat()) {
        let c = Poly::constant(a.context(), u.clone());
        prop_assert_eq!(a.scale(&u), a.mul(&c));
    }

    #[test]
    fn powers_are_repeated_products(a in poly()) {
        prop_assert_eq!(a.pow(0), Poly::one(a.context()));
        prop_assert_eq!(a.pow(1), a.clone());
        prop_assert_eq!(a.pow(3), a.mul(&a).mul(&a));
    }

    #[test]
    fn printing_round_trips(a in poly()) {
        let text = a.to_string();
        let back: Poly<Rational> = parse_poly(&text, a.context()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn homogeneous_components_partition(a in poly(), w in weight_vector()) {
        let parts = homogeneous_components(&a, &w);
        let mut sum = Poly::zero(a.context());
        for (degree, part) in &parts {
            prop_assert!(!part.is_zero());
            prop_assert_eq!(homogeneous_degree(part, &w), Some(*degree));
            sum = sum.add(part);
        }
        prop_assert_eq!(sum, a.clone());
        prop_assert_eq!(parts.is_empty(), a.is_zero());
    }

    #[test]
    fn partial_derivatives_commute(a in poly(), i in 0usize..4, j in 0usize..4) {
        prop_assert_eq!(
            a.partial_derivative(i).partial_derivative(j),
            a.partial_derivative(j).partial_derivative(i)
        );
    }
}
