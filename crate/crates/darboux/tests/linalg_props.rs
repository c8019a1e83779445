//! The sparse nullspace solver against the independently coded dense oracle,
//! on random matrices: identical bases, genuine kernel vectors, and the
//! rank-nullity count.

use darboux::{dense_nullspace, ExactMatrix, Field, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

fn entry() -> impl Strategy<Value = Rational> {
    prop_oneof![
        3 => Just(Rational::from_integer(BigInt::from(0))),
        2 => (-9i64..=9, 1i64..=4)
            .prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d))),
    ]
}

fn matrix() -> impl Strategy<Value = Vec<Vec<Rational>>> {
    (1usize..=7, 1usize..=7).prop_flat_map(|(nrows, ncols)| {
        proptest::collection::vec(proptest::collection::vec(entry(), ncols), nrows)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn sparse_and_dense_nullspaces_agree(rows in matrix()) {
        let ncols = rows[0].len();
        let sparse = ExactMatrix::from_dense(&rows).nullspace();
        let dense = dense_nullspace(&rows, ncols);
        prop_assert_eq!(sparse, dense);
    }

    #[test]
    fn nullspace_vectors_are_annihilated(rows in matrix()) {
        let ncols = rows[0].len();
        let basis = ExactMatrix::from_dense(&rows).nullspace();
        for v in &basis {
            prop_assert_eq!(v.len(), ncols);
            for row in &rows {
                let dot = row
                    .iter()
                    .zip(v)
                    .fold(<Rational as Field>::zero(), |acc, (a, b)| {
                        Field::add(&acc, &Field::mul(a, b))
                    });
                prop_assert!(Field::is_zero(&dot));
            }
        }
    }

    #[test]
    fn rank_plus_nullity_is_the_column_count(rows in matrix()) {
        let ncols = rows[0].len();
        let m = ExactMatrix::from_dense(&rows);
        prop_assert_eq!(m.rank() + m.nullspace().len(), ncols);
    }
}
