//! Diagonal automorphisms over the eighth cyclotomic field on random inputs:
//! ring-homomorphism laws, inverse and composition laws, and the defining
//! identity of conjugation extended from generators to arbitrary polynomials.

use darboux::{Cyc8, Derivation, DiagonalAutomorphism, Field, Monomial, Poly, VarContext};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Cyc8> {
    (0i64..8).prop_map(Cyc8::zeta_pow)
}

fn automorphism() -> impl Strategy<Value = DiagonalAutomorphism> {
    proptest::array::uniform4(scalar()).prop_map(|scalars| {
        DiagonalAutomorphism::new(&VarContext::xyzt(), scalars.to_vec()).unwrap()
    })
}

fn coeff() -> impl Strategy<Value = Cyc8> {
    (proptest::array::uniform4(-5i64..=5), scalar()).prop_map(|(coords, unit)| {
        let rational_part = coords
            .iter()
            .enumerate()
            .fold(Cyc8::zero(), |acc, (j, &c)| {
                Field::add(
                    &acc,
                    &Field::mul(&Cyc8::zeta_pow(j as i64), &Field::from_integer(c)),
                )
            });
        Field::mul(&rational_part, &unit)
    })
}

fn poly() -> impl Strategy<Value = Poly<Cyc8>> {
    proptest::collection::vec((proptest::array::uniform4(0u16..4), coeff()), 0..5).prop_map(
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

fn derivation() -> impl Strategy<Value = Derivation<Cyc8>> {
    proptest::array::uniform4(poly())
        .prop_map(|images| Derivation::new(&VarContext::xyzt(), images.to_vec()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn application_is_a_ring_homomorphism(s in automorphism(), f in poly(), g in poly()) {
        prop_assert_eq!(s.apply(&f.add(&g)), s.apply(&f).add(&s.apply(&g)));
        prop_assert_eq!(s.apply(&f.mul(&g)), s.apply(&f).mul(&s.apply(&g)));
    }

    #[test]
    fn inverse_undoes_application(s in automorphism(), f in poly()) {
        prop_assert_eq!(s.inverse().apply(&s.apply(&f)), f.clone());
        prop_assert!(s.compose(&s.inverse()).is_identity());
    }

    #[test]
    fn composition_applies_right_to_left(s in automorphism(), t in automorphism(), f in poly()) {
        prop_assert_eq!(s.compose(&t).apply(&f), s.apply(&t.apply(&f)));
    }

    #[test]
    fn eighth_powers_of_root_scalings_are_trivial(s in automorphism()) {
        prop_assert!(s.power(8).is_identity());
    }

    #[test]
    fn conjugation_satisfies_its_defining_identity(
        s in automorphism(),
        d in derivation(),
        f in poly(),
    ) {
        // The conjugate is defined on generators; the same identity must hold
        // for every polynomial because both sides are derivations.
        let conjugated = s.conjugate(&d);
        let direct = s.inverse().apply(&d.apply(&s.apply(&f)));
        prop_assert_eq!(conjugated.apply(&f), direct);
    }
}
