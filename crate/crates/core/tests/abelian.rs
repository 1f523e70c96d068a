use proptest::prelude::*;

use ptensor::abelian::ab_from_presentation;
use ptensor::catalog::{family, Params};
use ptensor::{AbelianType, BigIntMatrix, Error, SmallIntMatrix};

fn t(e: &[u32]) -> AbelianType {
    AbelianType::new(e.iter().copied())
}

#[test]
fn direct_sum_examples() {
    assert_eq!(AbelianType::trivial().direct_sum(&t(&[3, 1])), t(&[3, 1]));
    assert_eq!(t(&[2, 2]).direct_sum(&t(&[1, 1])), t(&[2, 2, 1, 1]));
    let g = AbelianType::elementary(4).gamma(5).unwrap();
    assert_eq!(g.direct_sum(&AbelianType::elementary(8)), AbelianType::elementary(18));
}

#[test]
fn tensor_examples() {
    assert_eq!(t(&[3]).tensor(&t(&[2])), t(&[2]));
    assert_eq!(t(&[1, 1]).tensor(&t(&[1, 1])), AbelianType::elementary(4));
    assert!(AbelianType::trivial().tensor(&t(&[4, 1])).is_trivial());
}

#[test]
fn gamma_examples() {
    assert_eq!(t(&[5]).gamma(5).unwrap(), t(&[5]));
    assert_eq!(t(&[1, 1]).gamma(7).unwrap(), AbelianType::elementary(3));
    assert_eq!(t(&[3, 2]).gamma(5).unwrap(), t(&[3, 2, 2]));
    assert_eq!(t(&[1]).gamma(2), Err(Error::EvenOrderUnsupported(2)));
}

#[test]
fn wedge_examples() {
    assert!(t(&[5]).exterior_square().is_trivial());
    assert_eq!(t(&[3, 2]).exterior_square(), t(&[2]));
    assert_eq!(AbelianType::elementary(5).exterior_square(), AbelianType::elementary(10));
}

#[test]
fn snf_examples() {
    let id = SmallIntMatrix::identity(3);
    assert!(id.cokernel_type(5).unwrap().is_trivial());
    let d = BigIntMatrix::from_i64_rows(&[vec![5, 0], vec![0, 25]], 2);
    assert_eq!(d.cokernel_type(5).unwrap(), t(&[2, 1]));
    let free = SmallIntMatrix::from_i64_rows(&[vec![5, 0]], 2);
    assert_eq!(free.cokernel_type(5), Err(Error::InfiniteCokernel(1)));
    let mixed = SmallIntMatrix::from_i64_rows(&[vec![15]], 1);
    assert!(matches!(mixed.cokernel_type(5), Err(Error::NotPrimePower { .. })));
}

#[test]
fn abelianization_examples() {
    let ab = |f: u8| ab_from_presentation(&family(f).unwrap().build(5, &Params::default()).unwrap()).unwrap();
    assert_eq!(ab(3), AbelianType::elementary(2));
    assert_eq!(ab(2), t(&[2, 2]));
    assert_eq!(ab(15), t(&[3, 1]));
}

#[test]
fn text_forms() {
    assert_eq!(t(&[2, 2, 1, 1, 1]).to_string(), "Z_{p^2}^2 + Z_p^3");
    assert_eq!("Z_{p^2}^2 + Z_p^3".parse::<AbelianType>().unwrap(), t(&[2, 2, 1, 1, 1]));
    assert_eq!("1".parse::<AbelianType>().unwrap(), AbelianType::trivial());
    assert_eq!(t(&[2, 1]).display_at(7), "Z_49 + Z_7");
    assert_eq!(serde_json::to_string(&t(&[2, 1])).unwrap(), "[2,1]");
}

fn arb_type() -> impl Strategy<Value = AbelianType> {
    prop::collection::vec(1u32..=4, 0..5).prop_map(AbelianType::new)
}

proptest! {
    #[test]
    fn tensor_is_symmetric(a in arb_type(), b in arb_type()) {
        prop_assert_eq!(a.tensor(&b), b.tensor(&a));
    }

    #[test]
    fn gamma_order_identity(a in arb_type()) {
        let g = a.gamma(5).unwrap();
        prop_assert_eq!(g.log_order(), a.log_order() + a.exterior_square().log_order());
    }

    #[test]
    fn gamma_of_a_sum(a in arb_type(), b in arb_type()) {
        let lhs = a.direct_sum(&b).gamma(7).unwrap();
        let rhs = a.gamma(7).unwrap().direct_sum(&b.gamma(7).unwrap()).direct_sum(&a.tensor(&b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn factor_order_does_not_matter(mut e in prop::collection::vec(1u32..=4, 0..5)) {
        let a = AbelianType::new(e.clone());
        e.reverse();
        let b = AbelianType::new(e);
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.gamma(5).unwrap(), b.gamma(5).unwrap());
        prop_assert_eq!(a.exterior_square(), b.exterior_square());
        prop_assert!(a.exponents().windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn text_round_trip(a in arb_type()) {
        prop_assert_eq!(a.to_string().parse::<AbelianType>().unwrap(), a);
    }
}
