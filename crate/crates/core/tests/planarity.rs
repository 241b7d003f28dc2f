use coxcarpet::complex::{LabelledNerve, SimplicialComplex};
use coxcarpet::planarity::{
    is_planar_by_augmentation, is_planar_complex, planarity_oracle_small, sphere_completion,
    PlanarityError,
};
use coxcarpet::topology::is_sphere_triangulation;
use proptest::prelude::*;

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// Random 2-complexes: a random edge set plus a random subset of its
/// triangles filled.
fn arb_complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let m = pairs.len();
        (Just(n), Just(pairs), proptest::collection::vec(any::<bool>(), m), any::<u64>())
    })
    .prop_map(|(n, pairs, keep, seed)| {
        let edges: Vec<(usize, usize)> =
            pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
        let adj = |a: usize, b: usize| edges.contains(&(a.min(b), a.max(b)));
        let mut faces: Vec<Vec<usize>> = edges.iter().map(|&(a, b)| vec![a, b]).collect();
        let mut bit = 0;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if adj(a, b) && adj(b, c) && adj(a, c) {
                        if seed >> (bit % 64) & 1 == 1 {
                            faces.push(vec![a, b, c]);
                        }
                        bit += 1;
                    }
                }
            }
        }
        SimplicialComplex::from_faces(&names(n), &faces).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn augmentation_agrees_with_rotation_search(k in arb_complex(8)) {
        prop_assert_eq!(is_planar_by_augmentation(&k), planarity_oracle_small(&k).unwrap());
    }

    #[test]
    fn completion_postconditions(k in arb_complex(9)) {
        let l = LabelledNerve::uniform(k.clone(), 2);
        match sphere_completion(&l) {
            Ok(n) => {
                prop_assert!(is_sphere_triangulation(&n));
                let old: Vec<usize> = (0..k.vertex_count()).collect();
                prop_assert_eq!(n.complex().full_subcomplex(&old).unwrap(), k);
            }
            Err(PlanarityError::Nonplanar) => prop_assert!(!is_planar_by_augmentation(&k)),
            Err(PlanarityError::AlreadySphere) => prop_assert!(is_sphere_triangulation(&k)),
            Err(e) => prop_assert!(false, "completion failed: {e}"),
        }
    }

    #[test]
    fn full_subcomplexes_of_planar_complexes_are_planar(k in arb_complex(8), mask in any::<u16>()) {
        if is_planar_complex(&k) {
            let keep: Vec<usize> = (0..k.vertex_count()).filter(|i| mask >> i & 1 == 1).collect();
            let sub = k.full_subcomplex(&keep).unwrap();
            if !sub.is_empty() {
                prop_assert!(is_planar_complex(&sub));
            }
        }
    }
}

#[test]
fn all_flag_complexes_on_six_vertices() {
    let pairs: Vec<(usize, usize)> = (0..6).flat_map(|i| (i + 1..6).map(move |j| (i, j))).collect();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let k = SimplicialComplex::flag_complex(&names(6), &edges).unwrap();
        assert_eq!(is_planar_by_augmentation(&k), planarity_oracle_small(&k).unwrap(), "{edges:?}");
    }
}
