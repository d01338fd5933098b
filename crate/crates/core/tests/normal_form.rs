use jetloci::census::snf_is_sound;
use jetloci::format::{emit_matrix, parse_matrix};
use jetloci::jetlinalg::{smith_normal_form, type_of};
use jetloci::{Field, JetMatrix, JetScalar};
use proptest::prelude::*;

fn matrix(p: u64, m: u32, max_dim: usize) -> impl Strategy<Value = JetMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(0..p as i64, r * c * (m as usize + 1)).prop_map(move |v| {
            let f = Field::Prime(p);
            let n = m as usize + 1;
            JetMatrix::from_fn(r, c, f, m, |i, j| {
                let k = (i * c + j) * n;
                JetScalar::from_ints(f, &v[k..k + n]).unwrap()
            })
        })
    })
}

fn unit_matrix(p: u64, m: u32, n: usize) -> impl Strategy<Value = JetMatrix> {
    prop::collection::vec(0..p as i64, n * n * (m as usize + 1))
        .prop_map(move |v| {
            let f = Field::Prime(p);
            let k = m as usize + 1;
            JetMatrix::from_fn(n, n, f, m, |i, j| {
                let s = (i * n + j) * k;
                JetScalar::from_ints(f, &v[s..s + k]).unwrap()
            })
        })
        .prop_filter("unit", |u| u.is_unit())
}

proptest! {
    #[test]
    fn normal_form_is_sound(a in matrix(3, 3, 4)) {
        prop_assert!(snf_is_sound(&a, &smith_normal_form(&a)));
    }

    #[test]
    fn type_is_invariant_under_units(
        (a, u, v) in matrix(5, 2, 3).prop_flat_map(|a| {
            let (r, c) = (a.rows(), a.cols());
            (Just(a), unit_matrix(5, 2, r), unit_matrix(5, 2, c))
        })
    ) {
        let b = u.mul(&a).unwrap().mul(&v).unwrap();
        prop_assert_eq!(type_of(&b), type_of(&a));
    }

    #[test]
    fn type_is_invariant_under_transpose(a in matrix(2, 3, 4)) {
        prop_assert_eq!(type_of(&a.transpose()), type_of(&a));
    }

    #[test]
    fn truncation_compatibility(a in matrix(3, 4, 3), j in 0u32..4) {
        let lambda = type_of(&a);
        prop_assert_eq!(type_of(&a.truncate(j).unwrap()), lambda.truncate(j + 1).unwrap());
    }

    #[test]
    fn emit_parse_round_trip(a in matrix(7, 3, 3)) {
        let text = emit_matrix(&a);
        let back = parse_matrix(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(emit_matrix(&back), text);
    }
}
