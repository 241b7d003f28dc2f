//! The labelled nerve of a Coxeter system.

use std::collections::HashMap;

use crate::classify::is_finite;
use crate::complex::{maximal_cliques, LabelledNerve, SimplicialComplex};
use crate::coxeter::{CoxeterError, CoxeterMatrix, Exponent, GenSet};

/// The nerve: nonempty `T` is a face iff `W_T` is finite. Edges carry `m_st`.
///
/// Faces are cliques of the graph `{m_st < inf}`; inside each maximal clique
/// the maximal finite subsets are found top-down, since finiteness is
/// inherited by subsets but a clique need not be finite.
pub fn nerve(m: &CoxeterMatrix) -> LabelledNerve {
    let n = m.rank();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && m.m(i, j).is_finite()).collect())
        .collect();
    let mut memo = HashMap::new();
    let mut faces = Vec::new();
    for clique in maximal_cliques(&adj) {
        let c = GenSet::from_indices(clique);
        faces.extend(maximal_finite_subsets(m, c, &mut memo));
    }
    faces.sort();
    faces.dedup();
    let faces: Vec<Vec<usize>> = faces.into_iter().map(GenSet::to_vec).collect();
    let complex = SimplicialComplex::from_faces(m.generators(), &faces)
        .expect("generators are distinct and nonempty");
    let labels: Vec<_> = complex
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let label = m.m(u, v).finite().expect("nerve edges have finite exponent");
            ((u, v), label)
        })
        .collect();
    LabelledNerve::new(complex, labels)
        .expect("every nerve edge is labelled")
        .with_origin(m.clone())
}

/// Inclusion-maximal finite subsets of `c`.
fn maximal_finite_subsets(
    m: &CoxeterMatrix,
    c: GenSet,
    memo: &mut HashMap<GenSet, Vec<GenSet>>,
) -> Vec<GenSet> {
    if let Some(v) = memo.get(&c) {
        return v.clone();
    }
    let out = if is_finite(m, c) {
        vec![c]
    } else {
        let mut all = Vec::new();
        for i in c.iter() {
            all.extend(maximal_finite_subsets(m, c.without(i), memo));
        }
        all.sort();
        all.dedup();
        let maximal: Vec<GenSet> = all
            .iter()
            .copied()
            .filter(|&s| !all.iter().any(|&t| t != s && s.is_subset(t)))
            .collect();
        maximal
    };
    memo.insert(c, out.clone());
    out
}

/// The nerve of the right-angled system of a simple graph: its flag complex
/// with every edge labelled 2.
pub fn nerve_of_racg<S: AsRef<str>>(
    names: &[S],
    edges: &[(usize, usize)],
) -> Result<LabelledNerve, CoxeterError> {
    let m = CoxeterMatrix::right_angled(names, edges)?;
    let complex = SimplicialComplex::flag_complex(names, edges)
        .map_err(|_| CoxeterError::UnknownGenerator(format!("{edges:?}")))?;
    Ok(LabelledNerve::uniform(complex, 2).with_origin(m))
}

/// True iff `nerve` satisfies the defining property of the nerve of `m`:
/// faces are exactly the nonempty finite subsets and edges carry `m_st`.
pub fn check_nerve(m: &CoxeterMatrix, nerve: &LabelledNerve) -> bool {
    let n = m.rank();
    if nerve.vertex_count() != n {
        return false;
    }
    for (i, j, e) in m.pairs() {
        let expected = match e {
            Exponent::Finite(k) => Some(k),
            Exponent::Infinite => None,
        };
        if nerve.label(i, j) != expected {
            return false;
        }
    }
    if n <= 16 {
        (1u64..1 << n).all(|bits| {
            let t = GenSet(bits);
            nerve.is_face(&t.to_vec()) == is_finite(m, t)
        })
    } else {
        nerve.maximal_faces().iter().all(|f| {
            let t = GenSet::from_indices(f.iter().copied());
            is_finite(m, t) && (m.all().difference(t)).iter().all(|v| !is_finite(m, t.with(v)))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_angled_square() {
        let m = CoxeterMatrix::right_angled(&["a", "b", "c", "d"], &[(0, 1), (1, 2), (2, 3), (3, 0)])
            .unwrap();
        let l = nerve(&m);
        assert_eq!(l.maximal_faces(), &[vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]);
        assert!(check_nerve(&m, &l));
    }

    #[test]
    fn triangles() {
        let affine = CoxeterMatrix::new(&["s", "t", "u"], &[], Exponent::Finite(3)).unwrap();
        let l = nerve(&affine);
        assert_eq!(l.maximal_faces(), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(l.label(0, 2), Some(3));
        let rect = CoxeterMatrix::new(&["s", "t", "u"], &[], Exponent::Finite(2)).unwrap();
        assert_eq!(nerve(&rect).maximal_faces(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn racg_examples() {
        let names: Vec<String> = (1..=5).map(|i| format!("v{i}")).collect();
        let c5: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let l = nerve_of_racg(&names, &c5).unwrap();
        assert_eq!(l.dimension(), 1);
        assert_eq!(l.edges().len(), 5);
        let k4 = nerve_of_racg(&["a", "b", "c", "d"], &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        assert_eq!(k4.maximal_faces(), &[vec![0, 1, 2, 3]]);
    }

    #[test]
    fn antiprism_has_ten_triangles() {
        let mut names = Vec::new();
        for i in 1..=5 {
            names.push(format!("t{i}"));
        }
        for i in 1..=5 {
            names.push(format!("b{i}"));
        }
        let mut edges = Vec::new();
        for i in 0..5 {
            let j = (i + 1) % 5;
            edges.extend([(i, j), (5 + i, 5 + j), (i, 5 + i), (i, 5 + j)]);
        }
        let l = nerve_of_racg(&names, &edges).unwrap();
        assert_eq!(l.faces_of_dim(2).len(), 10);
        assert!(l.faces_of_dim(3).is_empty());
        assert_eq!(l, nerve(l.origin().unwrap()));
    }

    #[test]
    fn non_flag_nerve() {
        // Every pair is finite, {a,b,c} has type ~A2 and {b,c,d} type H3.
        let m = CoxeterMatrix::new(
            &["a", "b", "c", "d"],
            &[
                (0, 1, Exponent::Finite(3)),
                (1, 2, Exponent::Finite(3)),
                (0, 2, Exponent::Finite(3)),
                (2, 3, Exponent::Finite(5)),
                (0, 3, Exponent::Finite(2)),
                (1, 3, Exponent::Finite(2)),
            ],
            Exponent::Infinite,
        )
        .unwrap();
        let l = nerve(&m);
        assert!(!l.is_face(&[0, 1, 2]));
        assert!(l.is_face(&[1, 2, 3]));
        assert!(check_nerve(&m, &l));
    }
}
