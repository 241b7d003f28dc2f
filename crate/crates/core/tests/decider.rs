mod common;

use common::{arb_graph, arb_system};
use coxcarpet::coxeter::CoxeterMatrix;
use coxcarpet::decider::{classify_boundary, theorem1_racg, Boundary, Mode};
use coxcarpet::nerve::nerve;
use coxcarpet::planarity::is_planar_complex;
use coxcarpet::separation::is_unseparable;
use coxcarpet::topology::{is_circle_triangulation, is_labelled_wheel, vcd};
use proptest::prelude::*;

fn check_invariants(m: &CoxeterMatrix, mode: Mode) -> Result<(), TestCaseError> {
    let v = classify_boundary(m, mode);
    let d = &v.diagnostics;
    prop_assert_eq!(&v, &classify_boundary(m, mode));
    if v.boundary == Boundary::SierpinskiCarpet {
        let l = nerve(m);
        prop_assert!(is_unseparable(&l).0 && is_planar_complex(&l));
        prop_assert_eq!(vcd(&l), 2);
        prop_assert_eq!(d.nerve_planar, Some(true));
        prop_assert_eq!(d.unseparable, Some(true));
        prop_assert_eq!((d.wheel, d.simplex, d.circle_tri, d.sphere_tri), (Some(false), Some(false), Some(false), Some(false)));
        prop_assert!(v.witnesses.is_empty());
        if mode != Mode::Conjectural {
            prop_assert_eq!(d.hyperbolic, Some(true));
        }
    } else {
        prop_assert!(!v.witnesses.is_empty());
    }
    prop_assert_eq!(v.conjectural, mode == Mode::Conjectural && d.hyperbolic == Some(false) && v.boundary != Boundary::Sphere && v.boundary != Boundary::Empty && v.boundary != Boundary::OutOfScope);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn verdict_invariants(m in arb_system(8)) {
        check_invariants(&m, Mode::Theorem2)?;
        check_invariants(&m, Mode::Conjectural)?;
    }

    #[test]
    fn theorem1_agrees_with_theorem2((names, edges) in arb_graph(9)) {
        let m = CoxeterMatrix::right_angled(&names, &edges).unwrap();
        let mut t1 = theorem1_racg(&names, &edges).unwrap();
        prop_assert_eq!(t1.mode, Mode::Theorem1);
        t1.mode = Mode::Theorem2;
        prop_assert_eq!(t1, classify_boundary(&m, Mode::Theorem2));
    }

    #[test]
    fn excluded_forms_cannot_be_unseparable_flag_no_square((names, edges) in arb_graph(9)) {
        let m = CoxeterMatrix::right_angled(&names, &edges).unwrap();
        let v = classify_boundary(&m, Mode::Theorem2);
        let l = nerve(&m);
        if v.diagnostics.hyperbolic == Some(true) && v.diagnostics.simplex == Some(false) && is_unseparable(&l).0 {
            prop_assert!(!is_circle_triangulation(&l));
            prop_assert!(!is_labelled_wheel(&l));
        }
    }

    #[test]
    fn non_hyperbolic_is_never_a_bare_carpet(m in arb_system(8)) {
        let v = classify_boundary(&m, Mode::Theorem2);
        if v.diagnostics.hyperbolic == Some(false) {
            prop_assert!(matches!(v.boundary, Boundary::OutOfScope | Boundary::Sphere));
        }
    }
}
