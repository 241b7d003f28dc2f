#![allow(dead_code)]

use coxcarpet::coxeter::{CoxeterMatrix, Exponent};
use proptest::prelude::*;

pub fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("s{i}")).collect()
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Labels weighted towards 2 and inf, so nerves are neither empty nor full.
fn arb_exponent() -> impl Strategy<Value = Exponent> {
    prop_oneof![
        4 => Just(Exponent::Finite(2)),
        3 => Just(Exponent::Infinite),
        1 => Just(Exponent::Finite(3)),
        1 => (4u32..=7).prop_map(Exponent::Finite),
    ]
}

pub fn arb_system(max_n: usize) -> impl Strategy<Value = CoxeterMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(arb_exponent(), n * (n - 1) / 2).prop_map(move |es| {
            let rels: Vec<_> = pairs(n).into_iter().zip(es).map(|((i, j), e)| (i, j, e)).collect();
            CoxeterMatrix::new(&names(n), &rels, Exponent::Infinite).unwrap()
        })
    })
}

/// A random simple graph on `1..=max_n` vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = (Vec<String>, Vec<(usize, usize)>)> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |keep| {
            let e = pairs(n).into_iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| e).collect();
            (names(n), e)
        })
    })
}
