mod common;

use common::arb_system;
use coxcarpet::classify::{diagram_components, is_affine_irreducible, is_finite};
use coxcarpet::coxeter::{CoxeterMatrix, Exponent, GenSet};
use coxcarpet::cosine::{cosine_matrix, definiteness, DefinitenessClass};
use coxcarpet::hyperbolicity::{is_hyperbolic, is_hyperbolic_brute_force};
use coxcarpet::nerve::{check_nerve, nerve};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn finiteness_is_positive_definiteness(m in arb_system(7), mask in any::<u64>()) {
        let t = GenSet(mask & m.all().0);
        prop_assume!(!t.is_empty());
        let d = definiteness(&cosine_matrix(&m, t)).unwrap();
        prop_assert_eq!(is_finite(&m, t), d.is_positive_definite());
    }

    #[test]
    fn affine_components_are_singular_with_nullity_one(m in arb_system(7)) {
        let t = m.all();
        if diagram_components(&m, t).len() == 1 {
            match definiteness(&cosine_matrix(&m, t)) {
                Ok(d) => {
                    let oracle = d.class == DefinitenessClass::PsdSingular && d.nullity == 1;
                    prop_assert_eq!(is_affine_irreducible(&m, t), oracle);
                }
                // Intervals cannot certify a singular matrix. Only labels
                // outside {2,3,4,5,6,inf} take that path, and no affine
                // diagram carries them.
                Err(_) => {
                    prop_assert!(m.pairs().any(|(_, _, e)| matches!(e.finite(), Some(k) if k > 6)));
                    prop_assert!(!is_affine_irreducible(&m, t));
                }
            }
        }
    }

    #[test]
    fn hyperbolicity_matches_brute_force(m in arb_system(7)) {
        let (h, w) = is_hyperbolic(&m);
        prop_assert_eq!(h, is_hyperbolic_brute_force(&m));
        prop_assert_eq!(h, w.is_none());
        if let Some(w) = w {
            prop_assert!(w.verify(&m));
        }
    }

    #[test]
    fn nerve_faces_are_finite_subsets(m in arb_system(7)) {
        let l = nerve(&m);
        prop_assert!(check_nerve(&m, &l));
        for f in l.complex().all_faces() {
            prop_assert!(is_finite(&m, GenSet::from_indices(f.iter().copied())));
        }
    }
}

#[test]
fn large_finite_types() {
    // E8: a branch of lengths 1, 2, 4 at one node.
    let names: Vec<String> = (0..8).map(|i| format!("e{i}")).collect();
    let chain = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)];
    let rels: Vec<_> = chain.iter().map(|&(i, j)| (i, j, Exponent::Finite(3))).collect();
    let m = CoxeterMatrix::new(&names, &rels, Exponent::Finite(2)).unwrap();
    assert!(is_finite(&m, m.all()));
    // Extending the long arm by one gives affine E8.
    let mut names9 = names.clone();
    names9.push("e8".into());
    let mut rels9 = rels.clone();
    rels9.push((6, 8, Exponent::Finite(3)));
    let m9 = CoxeterMatrix::new(&names9, &rels9, Exponent::Finite(2)).unwrap();
    assert!(!is_finite(&m9, m9.all()));
    assert!(is_affine_irreducible(&m9, m9.all()));
}
