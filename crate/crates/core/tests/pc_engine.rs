use proptest::prelude::*;
use rand::Rng;

use ptensor::catalog::{all_rows, family, FamilySpec, Params, RowId};
use ptensor::oracle::trial_rng;
use ptensor::pc_engine::{abelian_invariants_of, normal_closure, quotient, subgroup_closure, FiniteGroup};
use ptensor::{AbelianType, Element, Error, PcPresentation};

fn build(f: u8, p: u32) -> PcPresentation {
    family(f).unwrap().build(p, &Params::default()).unwrap()
}

fn el(e: [u8; 5]) -> Element {
    let pc = PcPresentation::new(5).unwrap();
    pc.normalize(&e.iter().enumerate().map(|(i, &x)| (i + 1, i64::from(x))).collect::<Vec<_>>())
}

#[test]
fn normalize_examples() {
    let g1 = build(1, 5);
    assert!(g1.normalize(&[]).is_identity());
    assert_eq!(g1.normalize(&[(1, 1), (1, 4)]), el([0, 1, 0, 0, 0]));
    let g3 = build(3, 5);
    assert_eq!(g3.normalize(&[(2, 1), (1, 1)]), el([1, 1, 1, 0, 0]));
}

#[test]
fn arithmetic_examples() {
    let g3 = build(3, 5);
    let x = |i| Element::generator(i);
    assert_eq!(g3.commutator(&x(3), &x(1)), x(4));
    let g4 = build(4, 5);
    assert_eq!(g4.power(&x(2), 5), x(5));

    let mut rng = trial_rng(11, 0);
    for _ in 0..1000 {
        let word: Vec<(usize, i64)> = (1..=5).map(|i| (i, rng.gen_range(0..5))).collect();
        let a = g3.normalize(&word);
        assert_eq!(g3.multiply(&Element::IDENTITY, &a), a);
    }
}

#[test]
fn enumeration_examples() {
    assert_eq!(build(70, 5).enumerate().unwrap().order(), 3125);
    assert_eq!(build(3, 5).enumerate().unwrap().order(), 3125);
    assert_eq!(build(24, 7).enumerate().unwrap().order(), 16807);
}

#[test]
fn catalog_presentations_are_consistent() {
    for p in [5, 7] {
        for row in all_rows() {
            let pc = row.spec().build(p, &FamilySpec::params_for_row(row, p)).unwrap();
            let report = pc.consistency_check();
            assert!(report.is_consistent(), "{row} at {p}: {:?}", report.failures);
            assert_eq!(pc.enumerate().unwrap().order(), (p as usize).pow(5), "{row} at {p}");
        }
    }
    assert!(build(1, 5).consistency_check().is_consistent());
    assert!(build(12, 5).consistency_check().is_consistent());
}

#[test]
fn swapping_the_target_of_one_commutator_stays_consistent() {
    // G3 with [g3,g2] = g4 in place of g5 is still a consistent presentation:
    // g4 and g5 are central, so no overlap can tell the difference. g5 just
    // splits off as a direct factor.
    let mut pc = build(3, 5);
    pc.set_commutator(3, 2, [0, 0, 0, 1, 0]).unwrap();
    assert!(pc.consistency_check().is_consistent());
    assert_eq!(pc.enumerate().unwrap().order(), 3125);
    let all = pc.validate().unwrap();
    let z = abelian_invariants_of(&pc, &pc.center(&all), 5).unwrap();
    assert_eq!(z, AbelianType::elementary(2));
}

#[test]
fn a_power_clashing_with_a_commutator_is_rejected() {
    // g1^p = g3 while [g3,g1] = g4: g1^p must commute with g1.
    let mut pc = build(3, 5);
    pc.set_power(1, [0, 0, 1, 0, 0]).unwrap();
    let report = pc.consistency_check();
    assert!(!report.is_consistent());
    assert!(report.failures.iter().any(|f| f.test.contains("(g1^p) g1")));
    assert!(matches!(pc.validate(), Err(Error::InconsistentPresentation(_))));
}

#[test]
fn closure_examples() {
    let pc = build(3, 5);
    assert_eq!(subgroup_closure(&pc, &[Element::IDENTITY]).order(), 1);
    assert_eq!(subgroup_closure(&pc, &[Element::generator(3)]).order(), 5);
    assert_eq!(normal_closure(&pc, &[Element::generator(3)]).order(), 125);
}

#[test]
fn series_examples() {
    let g70 = build(70, 5);
    let all = g70.enumerate().unwrap();
    assert!(g70.derived_subgroup().is_trivial());
    assert_eq!(g70.center(&all).order(), 3125);
    assert_eq!(g70.nilpotency_class(), 1);

    let g3 = build(3, 5);
    let all = g3.enumerate().unwrap();
    assert_eq!(g3.derived_subgroup().order(), 125);
    assert_eq!(g3.center(&all).order(), 25);
    assert_eq!(g3.nilpotency_class(), 3);

    assert_eq!(build(28, 5).nilpotency_class(), 4);
}

#[test]
fn quotient_examples() {
    let g3 = build(3, 5);
    let all = g3.enumerate().unwrap();
    let trivial = subgroup_closure(&g3, &[]);
    assert_eq!(quotient(&g3, &all, &trivial).unwrap().order(), 3125);

    let q = quotient(&g3, &all, &g3.derived_subgroup()).unwrap();
    assert_eq!(q.order(), 25);
    assert_eq!(abelian_invariants_of(&q, &q.as_subgroup(), 5).unwrap(), AbelianType::elementary(2));

    let g1 = build(1, 5);
    let all = g1.enumerate().unwrap();
    let q = quotient(&g1, &all, &subgroup_closure(&g1, &[Element::generator(5)])).unwrap();
    assert_eq!(abelian_invariants_of(&q, &q.as_subgroup(), 5).unwrap(), AbelianType::cyclic(4));

    // <g3> is not normal in G3.
    let h = subgroup_closure(&g3, &[Element::generator(3)]);
    assert!(matches!(quotient(&g3, &all, &h), Err(Error::NotNormal(_))));
}

#[test]
fn counting_examples() {
    let g70 = build(70, 5);
    assert!(abelian_invariants_of(&g70, &subgroup_closure(&g70, &[]), 5).unwrap().is_trivial());

    let g13 = build(13, 5);
    let all = g13.enumerate().unwrap();
    assert_eq!(abelian_invariants_of(&g13, &all, 5).unwrap(), AbelianType::new([3, 2]));

    let g14 = build(14, 5);
    let all = g14.enumerate().unwrap();
    assert_eq!(abelian_invariants_of(&g14, &g14.center(&all), 5).unwrap(), AbelianType::new([2, 1]));

    let g3 = build(3, 5);
    let all = g3.enumerate().unwrap();
    assert!(matches!(abelian_invariants_of(&g3, &all, 5), Err(Error::NotAbelian(_))));
}

#[test]
fn associativity_on_random_triples() {
    for row in all_rows() {
        let pc = row.spec().build(5, &FamilySpec::params_for_row(row, 5)).unwrap();
        let mut rng = trial_rng(2024, u64::from(row.family) * 4 + u64::from(row.subcase.unwrap_or(0)));
        let mut rand_el = || {
            let word: Vec<(usize, i64)> = (1..=5).map(|i| (i, rng.gen_range(0..5))).collect();
            pc.normalize(&word)
        };
        for _ in 0..10_000 {
            let (a, b, c) = (rand_el(), rand_el(), rand_el());
            assert_eq!(
                pc.multiply(&a, &pc.multiply(&b, &c)),
                pc.multiply(&pc.multiply(&a, &b), &c),
                "{row}"
            );
        }
    }
}

#[test]
fn inverse_law_and_lagrange() {
    for p in [5, 7] {
        for row in all_rows() {
            let pc = row.spec().build(p, &FamilySpec::params_for_row(row, p)).unwrap();
            let all = pc.enumerate().unwrap();
            for a in all.elements() {
                assert!(pc.multiply(a, &pc.inverse(a)).is_identity(), "{row} {a:?}");
            }
            let n = (p as usize).pow(5);
            for s in [pc.derived_subgroup(), pc.center(&all)]
                .into_iter()
                .chain(pc.lower_central_series())
            {
                assert_eq!(n % s.order(), 0, "{row}");
            }
            let e = pc.log_exponent(&all);
            assert!(e <= 5);
            for a in all.elements().iter().step_by(97) {
                assert!(pc.log_order_of(a) <= e);
            }
        }
    }
}

#[test]
fn abelianization_routes_agree() {
    for p in [5, 7] {
        for row in all_rows() {
            let pc = row.spec().build(p, &FamilySpec::params_for_row(row, p)).unwrap();
            let all = pc.enumerate().unwrap();
            let q = quotient(&pc, &all, &pc.derived_subgroup()).unwrap();
            let counted = abelian_invariants_of(&q, &q.as_subgroup(), p.into()).unwrap();
            assert_eq!(ptensor::abelian::ab_from_presentation(&pc).unwrap(), counted, "{row} at {p}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normalize_is_idempotent(
        fam in 1u8..=70,
        word in prop::collection::vec((1usize..=5, -12i64..12), 0..24),
    ) {
        let row: RowId = family(fam).unwrap().row(5, &Params::default());
        let pc = row.spec().build(5, &Params::default()).unwrap();
        let once = pc.normalize(&word);
        let again: Vec<(usize, i64)> = once.exps().iter().enumerate().map(|(i, &e)| (i + 1, i64::from(e))).collect();
        prop_assert_eq!(pc.normalize(&again), once);
        let inv = pc.inverse(&once);
        prop_assert!(pc.multiply(&inv, &once).is_identity());
        prop_assert!(FiniteGroup::pow(&pc, &once, 3125).is_identity());
    }
}
