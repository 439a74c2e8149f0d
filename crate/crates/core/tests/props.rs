//! Property tests for the exact linear algebra invariants.

use proptest::prelude::*;
use zpdlab_core::linalg::{int, RatMatrix, Subspace};

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = RatMatrix> {
    proptest::collection::vec(-6i64..=6, rows * cols).prop_map(move |entries| {
        RatMatrix::from_fn(rows, cols, |i, j| int(entries[i * cols + j]))
    })
}

fn small_vectors(count: usize, dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec(proptest::collection::vec(-4i64..=4, dim), count)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in small_matrix(4, 5)) {
        let first = m.rref();
        let second = first.reduced.rref();
        prop_assert_eq!(first.reduced, second.reduced);
        prop_assert_eq!(first.pivots, second.pivots);
    }

    #[test]
    fn rank_nullity(m in small_matrix(4, 6)) {
        let rank = m.rank();
        let kernel = m.kernel();
        prop_assert_eq!(rank + kernel.dim(), 6);
        for v in kernel.basis() {
            let image = m.mul_vec(v);
            prop_assert!(image.iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn mutual_inclusion_is_equality(
        a in small_vectors(3, 4),
        b in small_vectors(3, 4),
    ) {
        let to_sub = |rows: &Vec<Vec<i64>>| {
            Subspace::from_spanning(
                4,
                rows.iter()
                    .map(|r| r.iter().map(|&c| int(c)).collect())
                    .collect(),
            )
        };
        let (sa, sb) = (to_sub(&a), to_sub(&b));
        let mutual = sa.is_subset(&sb).unwrap() && sb.is_subset(&sa).unwrap();
        prop_assert_eq!(mutual, sa == sb);
        prop_assert_eq!(mutual, sa.equals(&sb).unwrap());
    }

    #[test]
    fn dimension_formula_for_sum_and_intersection(
        a in small_vectors(3, 5),
        b in small_vectors(3, 5),
    ) {
        let to_sub = |rows: &Vec<Vec<i64>>| {
            Subspace::from_spanning(
                5,
                rows.iter()
                    .map(|r| r.iter().map(|&c| int(c)).collect())
                    .collect(),
            )
        };
        let (sa, sb) = (to_sub(&a), to_sub(&b));
        let sum = sa.sum(&sb).unwrap();
        let meet = sa.intersect(&sb).unwrap();
        prop_assert_eq!(sa.dim() + sb.dim(), sum.dim() + meet.dim());
        prop_assert!(meet.is_subset(&sa).unwrap());
        prop_assert!(meet.is_subset(&sb).unwrap());
        prop_assert!(sa.is_subset(&sum).unwrap());
    }

    #[test]
    fn solve_agrees_with_multiplication(m in small_matrix(4, 4), rhs in proptest::collection::vec(-6i64..=6, 4)) {
        let rhs: Vec<_> = rhs.into_iter().map(int).collect();
        if let Some(x) = m.solve(&rhs) {
            prop_assert_eq!(m.mul_vec(&x), rhs);
        }
    }
}
