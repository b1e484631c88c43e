use proptest::prelude::*;
use ucurve::lattice::{adjacent_elements, maximal_element, minimal_element, ElementSet, RestrictionSet};

fn element(n: usize) -> impl Strategy<Value = ElementSet> {
    (0u64..1 << n).prop_map(move |b| ElementSet::from_bits(b, n))
}

fn elements(n: usize) -> impl Strategy<Value = Vec<ElementSet>> {
    prop::collection::vec(element(n), 0..8)
}

proptest! {
    #[test]
    fn text_round_trip(x in element(9)) {
        prop_assert_eq!(x.to_string().parse::<ElementSet>().unwrap(), x);
    }

    #[test]
    fn neighbours_differ_in_one_feature(x in element(7)) {
        let adj = adjacent_elements(x);
        prop_assert_eq!(adj.len(), 7);
        for y in adj {
            prop_assert_eq!((x.bits() ^ y.bits()).count_ones(), 1);
            prop_assert!(x.is_adjacent(y));
        }
    }

    #[test]
    fn restriction_members_form_an_antichain(items in elements(6)) {
        let mut lower = RestrictionSet::lower(6);
        for &x in &items {
            lower.update(x);
        }
        let members: Vec<ElementSet> = lower.members().collect();
        for &a in &members {
            for &b in &members {
                prop_assert!(a == b || !a.is_subset(b));
            }
        }
        for &x in &items {
            prop_assert!(lower.covers(x));
        }
        for b in 0u64..64 {
            let y = ElementSet::from_bits(b, 6);
            prop_assert_eq!(lower.covers(y), items.iter().any(|&x| y.is_subset(x)));
        }
    }

    #[test]
    fn minimal_element_is_minimal_and_uncovered(items in elements(6)) {
        let mut lower = RestrictionSet::lower(6);
        for &x in &items {
            lower.update(x);
        }
        match minimal_element(&lower) {
            None => prop_assert!(lower.covers(ElementSet::full(6))),
            Some(m) => {
                prop_assert!(!lower.covers(m));
                for i in m.iter() {
                    prop_assert!(lower.covers(m.without(i)));
                }
            }
        }
    }

    #[test]
    fn maximal_element_is_maximal_and_uncovered(items in elements(6)) {
        let mut upper = RestrictionSet::upper(6);
        for &x in &items {
            upper.update(x);
        }
        match maximal_element(&upper) {
            None => prop_assert!(upper.covers(ElementSet::empty(6))),
            Some(m) => {
                prop_assert!(!upper.covers(m));
                for i in m.complement().iter() {
                    prop_assert!(upper.covers(m.with(i)));
                }
            }
        }
    }
}
