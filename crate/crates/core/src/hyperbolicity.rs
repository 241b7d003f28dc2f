//! Word-hyperbolicity of Coxeter groups (Moussong's criterion).
//!
//! `W` is hyperbolic iff no special subgroup is affine irreducible of rank at
//! least 3 and no special subgroup is a direct product of two infinite
//! special subgroups.

use std::collections::HashSet;

use thiserror::Error;

use crate::classify::{diagram_components, is_affine_irreducible, is_finite};
use crate::complex::LabelledNerve;
use crate::coxeter::{CoxeterMatrix, Exponent, GenSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HyperbolicityWitness {
    AffineSubset(GenSet),
    ProductOfInfinites(GenSet, GenSet),
    /// A 4-cycle `v1 v2 v3 v4` of the nerve with neither diagonal.
    EmptySquare([usize; 4]),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HyperbolicityError {
    #[error("the nerve has an edge labelled {0}; expected a right-angled nerve")]
    NotRightAngled(u32),
}

impl HyperbolicityWitness {
    /// Re-checks the witness against its defining property.
    pub fn verify(&self, m: &CoxeterMatrix) -> bool {
        match *self {
            HyperbolicityWitness::AffineSubset(t) => t.len() >= 3 && is_affine_irreducible(m, t),
            HyperbolicityWitness::ProductOfInfinites(a, b) => {
                a.is_disjoint(b)
                    && !a.is_empty()
                    && !b.is_empty()
                    && a.iter().all(|i| b.iter().all(|j| m.m(i, j) == Exponent::Finite(2)))
                    && !is_finite(m, a)
                    && !is_finite(m, b)
            }
            HyperbolicityWitness::EmptySquare(c) => {
                let edge = |i: usize, j: usize| m.m(c[i], c[j]).is_finite();
                edge(0, 1) && edge(1, 2) && edge(2, 3) && edge(3, 0) && !edge(0, 2) && !edge(1, 3)
            }
        }
    }
}

/// Affine-irreducible subsets of rank >= 3 and minimal infinite subsets,
/// found by growing connected finite diagram subsets one generator at a time.
struct Search {
    affine: Vec<GenSet>,
    minimal_infinite: Vec<GenSet>,
}

fn search(m: &CoxeterMatrix) -> Search {
    let mut seen: HashSet<GenSet> = HashSet::new();
    let mut stack: Vec<GenSet> = (0..m.rank()).map(GenSet::singleton).collect();
    seen.extend(stack.iter().copied());
    let mut affine = HashSet::new();
    let mut minimal = HashSet::new();
    while let Some(s) = stack.pop() {
        let mut nbrs = GenSet::EMPTY;
        for i in s.iter() {
            for j in m.all().difference(s).iter() {
                if m.m(i, j).is_diagram_edge() {
                    nbrs = nbrs.with(j);
                }
            }
        }
        for v in nbrs.iter() {
            let t = s.with(v);
            if !seen.insert(t) {
                continue;
            }
            if is_finite(m, t) {
                stack.push(t);
            } else {
                if t.len() >= 3 && is_affine_irreducible(m, t) {
                    affine.insert(t);
                }
                if t.iter().all(|i| is_finite(m, t.without(i))) {
                    minimal.insert(t);
                }
            }
        }
    }
    let mut affine: Vec<GenSet> = affine.into_iter().collect();
    affine.sort_by(|a, b| a.lex_cmp(*b));
    let mut minimal_infinite: Vec<GenSet> = minimal.into_iter().collect();
    minimal_infinite.sort_by(|a, b| a.lex_cmp(*b));
    Search { affine, minimal_infinite }
}

/// Decides hyperbolicity; on failure returns the lexicographically least
/// affine witness, else the least product witness.
pub fn is_hyperbolic(m: &CoxeterMatrix) -> (bool, Option<HyperbolicityWitness>) {
    let s = search(m);
    if let Some(&t) = s.affine.first() {
        return (false, Some(HyperbolicityWitness::AffineSubset(t)));
    }
    let mins = &s.minimal_infinite;
    for (i, &a) in mins.iter().enumerate() {
        let commuting = m.commuting_with(a);
        for &b in &mins[i + 1..] {
            if b.is_subset(commuting) {
                return (false, Some(HyperbolicityWitness::ProductOfInfinites(a, b)));
            }
        }
    }
    (true, None)
}

/// First 4-cycle without diagonals, scanning 4-subsets in lexicographic
/// order.
pub fn has_empty_square(l: &LabelledNerve) -> Result<Option<[usize; 4]>, HyperbolicityError> {
    if let Some(&m) = l.labels().values().find(|&&m| m != 2) {
        return Err(HyperbolicityError::NotRightAngled(m));
    }
    let n = l.vertex_count();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    for cyc in [[a, b, c, d], [a, b, d, c], [a, c, b, d]] {
                        let e = |i: usize, j: usize| l.adjacent(cyc[i], cyc[j]);
                        if e(0, 1) && e(1, 2) && e(2, 3) && e(3, 0) && !e(0, 2) && !e(1, 3) {
                            return Ok(Some(cyc));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Slow reference: every subset is examined directly.
pub fn is_hyperbolic_brute_force(m: &CoxeterMatrix) -> bool {
    let n = m.rank();
    assert!(n <= 12, "brute-force hyperbolicity is limited to 12 generators");
    let subsets: Vec<GenSet> = (1u64..1 << n).map(GenSet).collect();
    let infinite: Vec<GenSet> = subsets.iter().copied().filter(|&t| !is_finite(m, t)).collect();
    for &t in &infinite {
        if t.len() >= 3 && diagram_components(m, t).len() == 1 && is_affine_irreducible(m, t) {
            return false;
        }
    }
    for &a in &infinite {
        for &b in &infinite {
            if a.is_disjoint(b) && b.is_subset(m.commuting_with(a)) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nerve::nerve_of_racg;

    fn square() -> CoxeterMatrix {
        CoxeterMatrix::right_angled(&["a", "b", "c", "d"], &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn affine_triangle() {
        let m = CoxeterMatrix::new(&["s", "t", "u"], &[], Exponent::Finite(3)).unwrap();
        let (h, w) = is_hyperbolic(&m);
        assert!(!h);
        assert_eq!(w, Some(HyperbolicityWitness::AffineSubset(m.all())));
        assert!(w.unwrap().verify(&m));
    }

    #[test]
    fn product_of_infinite_dihedrals() {
        let m = square();
        let (h, w) = is_hyperbolic(&m);
        assert!(!h);
        let w = w.unwrap();
        assert_eq!(
            w,
            HyperbolicityWitness::ProductOfInfinites(GenSet::from_indices([0, 2]), GenSet::from_indices([1, 3]))
        );
        assert!(w.verify(&m));
    }

    #[test]
    fn pentagon_is_hyperbolic() {
        let names = ["v1", "v2", "v3", "v4", "v5"];
        let m = CoxeterMatrix::right_angled(&names, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(is_hyperbolic(&m), (true, None));
        assert!(is_hyperbolic_brute_force(&m));
    }

    #[test]
    fn empty_square_examples() {
        let names = ["a", "b", "c", "d"];
        let sq = nerve_of_racg(&names, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(has_empty_square(&sq), Ok(Some([0, 1, 2, 3])));
        let diag = nerve_of_racg(&names, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(has_empty_square(&diag), Ok(None));
        // Octahedron: antipodal pairs (0,1), (2,3), (4,5) are the non-edges.
        let oct_names = ["p0", "p1", "q0", "q1", "r0", "r1"];
        let mut edges = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                if i / 2 != j / 2 {
                    edges.push((i, j));
                }
            }
        }
        let oct = nerve_of_racg(&oct_names, &edges).unwrap();
        let sq = has_empty_square(&oct).unwrap().unwrap();
        assert_eq!(sq, [0, 2, 1, 3]);
        assert!(HyperbolicityWitness::EmptySquare(sq).verify(oct.origin().unwrap()));
    }

    #[test]
    fn rejects_labelled_nerve() {
        let m = CoxeterMatrix::new(&["a", "b"], &[(0, 1, Exponent::Finite(3))], Exponent::Infinite).unwrap();
        let l = crate::nerve::nerve(&m);
        assert_eq!(has_empty_square(&l), Err(HyperbolicityError::NotRightAngled(3)));
    }

    #[test]
    fn hyperbolic_simplex_is_not_a_witness() {
        // (3,3,4) triangle is infinite but hyperbolic, not affine.
        let m = CoxeterMatrix::new(
            &["s", "t", "u"],
            &[(0, 1, Exponent::Finite(3)), (1, 2, Exponent::Finite(3)), (0, 2, Exponent::Finite(4))],
            Exponent::Infinite,
        )
        .unwrap();
        assert!(is_hyperbolic(&m).0);
    }
}
