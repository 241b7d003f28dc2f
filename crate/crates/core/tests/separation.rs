mod common;

use common::{arb_graph, arb_system};
use coxcarpet::nerve::{nerve, nerve_of_racg};
use coxcarpet::separation::{all_separations, is_unseparable, is_unseparable_brute_force, SeparationKind};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn agrees_with_subset_scan(m in arb_system(8)) {
        let l = nerve(&m);
        let (u, w) = is_unseparable(&l);
        prop_assert_eq!(u, is_unseparable_brute_force(&l));
        prop_assert_eq!(u, w.is_none());
    }

    #[test]
    fn witnesses_verify_and_are_ordered((names, edges) in arb_graph(8)) {
        let l = nerve_of_racg(&names, &edges).unwrap();
        let all = all_separations(&l);
        for w in &all {
            prop_assert!(w.verify(&l), "{:?}", w);
        }
        let (_, first) = is_unseparable(&l);
        if let Some(first) = first {
            prop_assert!(first.verify(&l));
            let least = all.iter().map(|w| w.kind).min();
            if first.kind != SeparationKind::Disconnected {
                prop_assert_eq!(Some(first.kind), least);
            }
        }
    }
}
