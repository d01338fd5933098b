use jetloci::{ArithOp, Field, JetScalar};
use proptest::prelude::*;

const P: u64 = 7;
const M: u32 = 4;

fn jet() -> impl Strategy<Value = JetScalar> {
    prop::collection::vec(0i64..P as i64, (M + 1) as usize)
        .prop_map(|c| JetScalar::from_ints(Field::Prime(P), &c).unwrap())
}

fn rational_jet() -> impl Strategy<Value = JetScalar> {
    prop::collection::vec(-20i64..20, 3).prop_map(|c| JetScalar::from_ints(Field::Rational, &c).unwrap())
}

proptest! {
    #[test]
    fn commutative_ring_axioms(a in jet(), b in jet(), c in jet()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), JetScalar::zero(Field::Prime(P), M));
        prop_assert_eq!(a.mul(&JetScalar::one(Field::Prime(P), M)), a.clone());
        prop_assert_eq!(a.arith(&b, ArithOp::Sub).unwrap(), a.add(&b.neg()));
    }

    #[test]
    fn inverse_law(a in jet()) {
        if a.is_unit() {
            let inv = a.invert().unwrap();
            prop_assert!(a.mul(&inv).coeffs() == JetScalar::one(Field::Prime(P), M).coeffs());
        } else {
            prop_assert!(a.invert().is_err());
        }
    }

    #[test]
    fn inverse_law_over_q(a in rational_jet()) {
        if let Ok(inv) = a.invert() {
            prop_assert_eq!(a.mul(&inv), JetScalar::one(Field::Rational, 2));
        } else {
            prop_assert!(a.coeff(0).is_zero());
        }
    }

    #[test]
    fn order_of_product(a in jet(), b in jet()) {
        let expect = (a.t_order() + b.t_order()).min(M + 1);
        prop_assert_eq!(a.mul(&b).t_order(), expect);
    }

    #[test]
    fn truncation_is_a_ring_map(a in jet(), b in jet(), j in 0u32..=M) {
        let t = |x: &JetScalar| x.truncate(j).unwrap();
        prop_assert_eq!(t(&a.add(&b)), t(&a).add(&t(&b)));
        prop_assert_eq!(t(&a.mul(&b)), t(&a).mul(&t(&b)));
    }
}

#[test]
fn mixed_orders_are_rejected() {
    let f = Field::Prime(3);
    let a = JetScalar::one(f, 2);
    let b = JetScalar::one(f, 3);
    assert!(a.arith(&b, ArithOp::Add).is_err());
    let c = JetScalar::one(Field::Prime(5), 2);
    assert!(a.arith(&c, ArithOp::Mul).is_err());
}
