use fullsupport::cartan::{admissible_types, CartanType, LengthClass, RootSystem};
use fullsupport::counting::{self, normalizer_index_formula};
use fullsupport::invariants;
use fullsupport::oracle::{self, DEFAULT_GROUP_CAP};
use fullsupport::poset::{leq, RootPoset};
use num_bigint::BigUint;
use proptest::prelude::*;

fn any_type(max_rank: usize) -> impl Strategy<Value = CartanType> {
    let types = admissible_types(max_rank);
    (0..types.len()).prop_map(move |i| types[i])
}

#[test]
fn normalizer_direct_matches_formula_for_both_lengths() {
    let mut types = admissible_types(4);
    types.extend(["A5", "D5"].map(|s| s.parse::<CartanType>().unwrap()));
    for t in types {
        let rs = RootSystem::from_type(t);
        let (ev, gi) = invariants::compute(&rs).unwrap();
        let group = oracle::generate_weyl_group(&rs, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(BigUint::from(group.len()), gi.weyl_order, "{t}");
        for (i, simple) in rs.simple_roots().iter().enumerate() {
            let class_size = gi.class_size(simple.length_class());
            let direct = oracle::normalizer_index_direct(&group, &rs, i).unwrap();
            assert_eq!(
                direct,
                normalizer_index_formula(&ev, class_size).unwrap(),
                "{t} at α{} ({})",
                i + 1,
                simple.length_class()
            );
        }
    }
}

#[test]
fn b5_group_fits_default_cap() {
    let b5 = RootSystem::from_type("B5".parse().unwrap());
    assert!(oracle::generate_weyl_group(&b5, DEFAULT_GROUP_CAP).is_ok());
    assert!(oracle::generate_weyl_group(&b5, 1000).is_err());
}

#[test]
fn census_agrees_through_rank_eight() {
    for t in admissible_types(8) {
        let report = counting::full_census(&RootSystem::from_type(t)).unwrap();
        assert!(report.agree, "{t}: {report:?}");
    }
}

#[test]
fn spot_anchors() {
    let cases: [(&str, (u64, u64)); 6] = [
        ("A6", (1, 0)),
        ("B6", (5, 1)),
        ("C6", (1, 5)),
        ("G2", (2, 2)),
        ("F4", (5, 5)),
        ("E8", (44, 0)),
    ];
    for (t, expected) in cases {
        let (_, long, short) =
            counting::brute_full_support_census(&RootSystem::from_type(t.parse().unwrap()));
        assert_eq!((long, short), expected, "{t}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn root_poset_is_a_partial_order(t in any_type(6), seed in any::<u64>()) {
        let rs = RootSystem::from_type(t);
        let roots = rs.positive_roots();
        let n = roots.len();
        let pick = |k: u64| roots[(seed.rotate_left(k as u32 * 17) % n as u64) as usize].clone();
        let (a, b, c) = (pick(0), pick(1), pick(2));
        prop_assert!(leq(&a, &a));
        if leq(&a, &b) && leq(&b, &a) {
            prop_assert_eq!(&a, &b);
        }
        if leq(&a, &b) && leq(&b, &c) {
            prop_assert!(leq(&a, &c));
        }
        prop_assert!(leq(&a, rs.highest_root()));
    }

    #[test]
    fn chapoton_count_is_deterministic(t in any_type(8)) {
        let once = counting::full_census(&RootSystem::from_type(t)).unwrap();
        let twice = counting::full_census(&RootSystem::from_type(t)).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn refined_counts_sum_to_total(t in any_type(8)) {
        let rs = RootSystem::from_type(t);
        let (ev, gi) = invariants::compute(&rs).unwrap();
        let (long, short) = counting::refined_counts(&gi, &ev).unwrap();
        prop_assert_eq!(long + short, counting::chapoton_count(&gi, &ev).unwrap());
    }

    #[test]
    fn support_is_full_for_the_highest_root(t in any_type(8)) {
        let rs = RootSystem::from_type(t);
        prop_assert!(rs.highest_root().has_full_support());
        prop_assert_eq!(rs.highest_root().length_class(), LengthClass::Long);
        let poset = RootPoset::new(&rs);
        prop_assert_eq!(poset.principal_ideal(rs.highest_root_index()).len(), rs.len());
    }
}
