//! Piecewise spherical structure on a labelled nerve, metric flagness, and
//! the double of a complex along a full subcomplex.
//!
//! Edge lengths are stored as rational multiples of pi.

use std::collections::{BTreeMap, HashSet};

use num_rational::Ratio;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::complex::{maximal_cliques, LabelledNerve, SimplicialComplex, Vertex};
use crate::cosine::{definiteness, CosineError, CosineMatrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MetricError {
    #[error("edge {0}-{1} has length {2} pi, outside (0, pi)")]
    LengthOutOfRange(String, String, Ratio<i64>),
    #[error("edge {0}-{1} has no length")]
    MissingLength(String, String),
    #[error("edge {0}-{1} is shorter than pi/2")]
    ShortEdge(String, String),
    #[error(transparent)]
    Cosine(#[from] CosineError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphericalComplex {
    complex: SimplicialComplex,
    lengths: BTreeMap<(Vertex, Vertex), Ratio<i64>>,
}

impl SphericalComplex {
    /// Every edge needs a length in `(0, 1)` (units of pi).
    pub fn new(
        complex: SimplicialComplex,
        lengths: impl IntoIterator<Item = ((Vertex, Vertex), Ratio<i64>)>,
    ) -> Result<Self, MetricError> {
        let lengths: BTreeMap<_, _> =
            lengths.into_iter().map(|((u, v), r)| ((u.min(v), u.max(v)), r)).collect();
        for (u, v) in complex.edges() {
            let name = |x: Vertex| complex.name(x).to_owned();
            match lengths.get(&(u, v)) {
                None => return Err(MetricError::MissingLength(name(u), name(v))),
                Some(&r) if r <= Ratio::zero() || r >= Ratio::one() => {
                    return Err(MetricError::LengthOutOfRange(name(u), name(v), r))
                }
                Some(_) => {}
            }
        }
        Ok(SphericalComplex { complex, lengths })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// Length of edge `uv` in units of pi.
    pub fn length(&self, u: Vertex, v: Vertex) -> Option<Ratio<i64>> {
        self.lengths.get(&(u.min(v), u.max(v))).copied()
    }

    /// Cosine matrix of a vertex set whose pairs are all edges.
    fn cosine_matrix(&self, t: &[Vertex]) -> CosineMatrix {
        let n = t.len();
        let mut angles = vec![Ratio::zero(); n * n];
        for a in 0..n {
            for b in 0..n {
                if a != b {
                    angles[a * n + b] = self.length(t[a], t[b]).expect("clique edges have lengths");
                }
            }
        }
        CosineMatrix::from_angles(t.iter().map(|&v| self.complex.name(v).to_owned()).collect(), angles)
    }
}

/// Edge `{s, t}` gets length `pi - pi/m_st`.
pub fn spherical_structure(l: &LabelledNerve) -> SphericalComplex {
    let lengths = l.labels().iter().map(|(&e, &m)| (e, Ratio::one() - Ratio::new(1, m as i64)));
    SphericalComplex::new(l.complex().clone(), lengths).expect("labels are at least 2")
}

pub fn has_size_ge_half_pi(x: &SphericalComplex) -> bool {
    x.lengths.values().all(|&r| r >= Ratio::new(1, 2))
}

/// Every clique with positive definite cosine matrix spans a face, and every
/// face has a positive definite cosine matrix. Returns the first violating
/// vertex set, if any.
pub fn is_metrically_flag(x: &SphericalComplex) -> Result<(bool, Option<Vec<Vertex>>), MetricError> {
    if let Some((&(u, v), _)) = x.lengths.iter().find(|(_, &r)| r < Ratio::new(1, 2)) {
        return Err(MetricError::ShortEdge(x.complex.name(u).into(), x.complex.name(v).into()));
    }
    let k = &x.complex;
    for f in k.all_faces() {
        if !definiteness(&x.cosine_matrix(&f))?.is_positive_definite() {
            return Ok((false, Some(f)));
        }
    }
    let adj: Vec<Vec<Vertex>> = (0..k.vertex_count()).map(|v| k.neighbors(v).to_vec()).collect();
    let mut seen = HashSet::new();
    let mut cliques = maximal_cliques(&adj);
    cliques.sort();
    for clique in cliques {
        if k.is_face(&clique) {
            continue;
        }
        let c = clique.len();
        for bits in 1u64..1 << c {
            let t: Vec<Vertex> = (0..c).filter(|i| bits >> i & 1 == 1).map(|i| clique[i]).collect();
            if k.is_face(&t) || !seen.insert(t.clone()) {
                continue;
            }
            if definiteness(&x.cosine_matrix(&t))?.is_positive_definite() {
                return Ok((false, Some(t)));
            }
        }
    }
    Ok((true, None))
}

/// Two copies of a complex glued along the full subcomplex on `k`, with the
/// involution exchanging the copies.
#[derive(Clone, Debug)]
pub struct Double<T> {
    pub space: T,
    /// `swap[v]` is the image of vertex `v`.
    pub swap: Vec<Vertex>,
    /// Vertices of the first copy, that is the original vertex indices.
    pub original: usize,
}

/// Returns the doubled complex and the map from original vertices to their
/// copies. Copies of vertices outside `k` are appended in order and named
/// with a trailing prime.
fn double_complex(x: &SimplicialComplex, k: &[Vertex]) -> (SimplicialComplex, Vec<Vertex>) {
    let n = x.vertex_count();
    let in_k: HashSet<Vertex> = k.iter().copied().collect();
    let taken: HashSet<&str> = x.names().iter().map(String::as_str).collect();
    let mut names: Vec<String> = x.names().to_vec();
    let mut copy = (0..n).collect::<Vec<_>>();
    for v in 0..n {
        if !in_k.contains(&v) {
            let mut name = format!("{}'", x.name(v));
            while taken.contains(name.as_str()) || names.contains(&name) {
                name.push('\'');
            }
            copy[v] = names.len();
            names.push(name);
        }
    }
    let mut faces: Vec<Vec<Vertex>> = x.maximal_faces().to_vec();
    faces.extend(x.maximal_faces().iter().map(|f| f.iter().map(|&v| copy[v]).collect()));
    let doubled = SimplicialComplex::from_faces(&names, &faces).expect("fresh names");
    (doubled, copy)
}

fn swap_of(copy: &[Vertex], total: usize) -> Vec<Vertex> {
    let mut swap: Vec<Vertex> = (0..total).collect();
    for (v, &c) in copy.iter().enumerate() {
        swap[v] = c;
        swap[c] = v;
    }
    swap
}

pub fn double_along(x: &SphericalComplex, k: &[Vertex]) -> Double<SphericalComplex> {
    let (complex, copy) = double_complex(&x.complex, k);
    let mut lengths = BTreeMap::new();
    for (&(u, v), &r) in &x.lengths {
        lengths.insert((u, v), r);
        lengths.insert((copy[u].min(copy[v]), copy[u].max(copy[v])), r);
    }
    let swap = swap_of(&copy, complex.vertex_count());
    let space = SphericalComplex::new(complex, lengths).expect("lengths are inherited");
    Double { space, swap, original: x.complex.vertex_count() }
}

pub fn double_nerve_along(l: &LabelledNerve, k: &[Vertex]) -> Double<LabelledNerve> {
    let (complex, copy) = double_complex(l.complex(), k);
    let mut labels = BTreeMap::new();
    for (&(u, v), &m) in l.labels() {
        labels.insert((u, v), m);
        labels.insert((copy[u].min(copy[v]), copy[u].max(copy[v])), m);
    }
    let swap = swap_of(&copy, complex.vertex_count());
    let space = LabelledNerve::new(complex, labels).expect("labels are inherited");
    Double { space, swap, original: l.vertex_count() }
}

/// True iff `perm` maps maximal faces onto maximal faces and preserves
/// lengths.
pub fn is_automorphism(x: &SphericalComplex, perm: &[Vertex]) -> bool {
    let k = &x.complex;
    if perm.len() != k.vertex_count() {
        return false;
    }
    let mut image: Vec<Vec<Vertex>> = k
        .maximal_faces()
        .iter()
        .map(|f| {
            let mut g: Vec<Vertex> = f.iter().map(|&v| perm[v]).collect();
            g.sort_unstable();
            g
        })
        .collect();
    image.sort();
    image == k.maximal_faces()
        && x.lengths.iter().all(|(&(u, v), &r)| x.length(perm[u], perm[v]) == Some(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nerve::{nerve, nerve_of_racg};
    use crate::coxeter::{CoxeterMatrix, Exponent};

    fn r(a: i64, b: i64) -> Ratio<i64> {
        Ratio::new(a, b)
    }

    fn hollow(len: Ratio<i64>) -> SphericalComplex {
        let k = SimplicialComplex::from_named(&["a", "b", "c"], &[&["a", "b"], &["b", "c"], &["a", "c"]]).unwrap();
        SphericalComplex::new(k, [((0, 1), len), ((1, 2), len), ((0, 2), len)]).unwrap()
    }

    #[test]
    fn lengths_from_labels() {
        let l = nerve_of_racg(&["a", "b"], &[(0, 1)]).unwrap();
        assert_eq!(spherical_structure(&l).length(0, 1), Some(r(1, 2)));
        assert_eq!(spherical_structure(&l.relabel(0, 1, 3).unwrap()).length(0, 1), Some(r(2, 3)));
        assert_eq!(spherical_structure(&l.relabel(0, 1, 6).unwrap()).length(1, 0), Some(r(5, 6)));
    }

    #[test]
    fn size_at_least_half_pi() {
        assert!(has_size_ge_half_pi(&hollow(r(1, 2))));
        assert!(!has_size_ge_half_pi(&hollow(r(1, 3))));
        let edgeless = SphericalComplex::new(SimplicialComplex::from_named(&["a"], &[]).unwrap(), []).unwrap();
        assert!(has_size_ge_half_pi(&edgeless));
        assert!(matches!(is_metrically_flag(&hollow(r(1, 3))), Err(MetricError::ShortEdge(..))));
    }

    #[test]
    fn hollow_triangles() {
        assert_eq!(is_metrically_flag(&hollow(r(1, 2))).unwrap(), (false, Some(vec![0, 1, 2])));
        assert_eq!(is_metrically_flag(&hollow(r(2, 3))).unwrap(), (true, None));
    }

    #[test]
    fn nerves_are_metrically_flag() {
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
        assert_eq!(is_metrically_flag(&spherical_structure(&nerve(&m))).unwrap(), (true, None));
    }

    #[test]
    fn doubling_a_path_gives_a_square() {
        let l = nerve_of_racg(&["a", "b", "c"], &[(0, 1), (1, 2)]).unwrap();
        let d = double_along(&spherical_structure(&l), &[0, 2]);
        assert_eq!(d.space.complex().names(), &["a", "b", "c", "b'"]);
        assert_eq!(d.space.complex().edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(d.swap, vec![0, 3, 2, 1]);
        assert!(is_automorphism(&d.space, &d.swap));
        // A square of right angles is metrically flag (no cliques beyond edges).
        assert!(is_metrically_flag(&d.space).unwrap().0);
    }

    #[test]
    fn doubling_a_triangle_along_an_edge() {
        let k = SimplicialComplex::from_named(&["a", "b", "c"], &[&["a", "b", "c"]]).unwrap();
        let l = LabelledNerve::uniform(k, 2);
        let d = double_nerve_along(&l, &[0, 1]);
        assert_eq!(d.space.maximal_faces(), &[vec![0, 1, 2], vec![0, 1, 3]]);
        assert_eq!(d.original, 3);
    }
}
