//! Separating simplices, nonadjacent pairs and labelled suspensions, and
//! the unseparability test built from them.
//!
//! A vertex set separates when the full subcomplex on its complement has at
//! least two components. An empty complement never separates.

use serde::{Deserialize, Serialize};

use crate::complex::{LabelledNerve, SimplicialComplex, Vertex};

/// The labelled suspension `{s, t} * base`: nonadjacent poles, a nonempty
/// face as base, both cones on the base are faces, and every pole-to-base
/// edge is labelled 2.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelledSuspensionWitness {
    pub poles: (Vertex, Vertex),
    pub base: Vec<Vertex>,
}

impl LabelledSuspensionWitness {
    /// Poles and base, sorted.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut v = self.base.clone();
        v.extend([self.poles.0, self.poles.1]);
        v.sort_unstable();
        v
    }

    pub fn verify(&self, l: &LabelledNerve) -> bool {
        let (s, t) = self.poles;
        let n = l.vertex_count();
        if s == t || s >= n || t >= n || self.base.is_empty() || l.adjacent(s, t) {
            return false;
        }
        if self.base.iter().any(|&x| x >= n || x == s || x == t) {
            return false;
        }
        let mut with_s = self.base.clone();
        with_s.push(s);
        let mut with_t = self.base.clone();
        with_t.push(t);
        l.is_face(&with_s)
            && l.is_face(&with_t)
            && self.base.iter().all(|&x| l.label(s, x) == Some(2) && l.label(t, x) == Some(2))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SeparationKind {
    /// The complex itself is disconnected; nothing is removed.
    Disconnected,
    Simplex,
    NonadjacentPair,
    LabelledSuspension,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationWitness {
    pub kind: SeparationKind,
    pub removed: Vec<Vertex>,
    pub components: Vec<Vec<Vertex>>,
    pub suspension: Option<LabelledSuspensionWitness>,
}

impl SeparationWitness {
    /// Recomputes the components and checks the kind's defining property.
    pub fn verify(&self, l: &LabelledNerve) -> bool {
        if self.removed.iter().any(|&v| v >= l.vertex_count()) {
            return false;
        }
        let comps = l.components_avoiding(&self.removed);
        if comps.len() < 2 || comps != self.components {
            return false;
        }
        match self.kind {
            SeparationKind::Disconnected => self.removed.is_empty() && self.suspension.is_none(),
            SeparationKind::Simplex => {
                !self.removed.is_empty() && l.is_face(&self.removed) && self.suspension.is_none()
            }
            SeparationKind::NonadjacentPair => {
                self.removed.len() == 2
                    && !l.adjacent(self.removed[0], self.removed[1])
                    && self.suspension.is_none()
            }
            SeparationKind::LabelledSuspension => match &self.suspension {
                Some(s) => s.verify(l) && s.vertices() == self.removed,
                None => false,
            },
        }
    }
}

fn separating(k: &SimplicialComplex, removed: &[Vertex]) -> Option<Vec<Vec<Vertex>>> {
    let comps = k.components_avoiding(removed);
    (comps.len() >= 2).then_some(comps)
}

fn witness(
    k: &SimplicialComplex,
    kind: SeparationKind,
    removed: Vec<Vertex>,
    suspension: Option<LabelledSuspensionWitness>,
) -> Option<SeparationWitness> {
    separating(k, &removed).map(|components| SeparationWitness { kind, removed, components, suspension })
}

/// Every nonempty face whose removal disconnects, by size then
/// lexicographically.
pub fn separating_simplices(k: &SimplicialComplex) -> Vec<SeparationWitness> {
    k.all_faces()
        .into_iter()
        .filter_map(|f| witness(k, SeparationKind::Simplex, f, None))
        .collect()
}

/// Every nonadjacent pair whose removal disconnects.
pub fn separating_nonadjacent_pairs(k: &SimplicialComplex) -> Vec<SeparationWitness> {
    let n = k.vertex_count();
    let mut out = Vec::new();
    for s in 0..n {
        for t in s + 1..n {
            if !k.adjacent(s, t) {
                out.extend(witness(k, SeparationKind::NonadjacentPair, vec![s, t], None));
            }
        }
    }
    out
}

/// All labelled suspensions with nonempty base, ordered by poles then base.
pub fn labelled_suspensions(l: &LabelledNerve) -> Vec<LabelledSuspensionWitness> {
    let n = l.vertex_count();
    let faces = l.all_faces();
    let mut out = Vec::new();
    for s in 0..n {
        for t in s + 1..n {
            if l.adjacent(s, t) {
                continue;
            }
            let ok = |x: Vertex| l.label(s, x) == Some(2) && l.label(t, x) == Some(2);
            for f in &faces {
                if !f.iter().all(|&x| ok(x)) {
                    continue;
                }
                let candidate = LabelledSuspensionWitness { poles: (s, t), base: f.clone() };
                if candidate.verify(l) {
                    out.push(candidate);
                }
            }
        }
    }
    out.sort();
    out
}

/// Labelled suspensions whose vertex set disconnects, ordered by removed
/// set then poles.
pub fn separating_suspensions(l: &LabelledNerve) -> Vec<SeparationWitness> {
    let mut out: Vec<SeparationWitness> = labelled_suspensions(l)
        .into_iter()
        .filter_map(|s| witness(l, SeparationKind::LabelledSuspension, s.vertices(), Some(s)))
        .collect();
    out.sort_by(|a, b| a.removed.cmp(&b.removed).then_with(|| a.suspension.cmp(&b.suspension)));
    out
}

/// Every separation of `l`, ordered by kind then removed set.
pub fn all_separations(l: &LabelledNerve) -> Vec<SeparationWitness> {
    let mut out = Vec::new();
    if l.is_empty() {
        return out;
    }
    out.extend(witness(l, SeparationKind::Disconnected, Vec::new(), None));
    let mut simplices = separating_simplices(l);
    simplices.sort_by(|a, b| a.removed.cmp(&b.removed));
    out.extend(simplices);
    out.extend(separating_nonadjacent_pairs(l));
    out.extend(separating_suspensions(l));
    out
}

/// Connected, with no separating simplex, nonadjacent pair or labelled
/// suspension. Otherwise the first witness in (kind, removed set) order.
pub fn is_unseparable(l: &LabelledNerve) -> (bool, Option<SeparationWitness>) {
    if l.is_empty() {
        return (false, None);
    }
    if let Some(w) = witness(l, SeparationKind::Disconnected, Vec::new(), None) {
        return (false, Some(w));
    }
    let mut simplices = separating_simplices(l);
    simplices.sort_by(|a, b| a.removed.cmp(&b.removed));
    if let Some(w) = simplices.into_iter().next() {
        return (false, Some(w));
    }
    if let Some(w) = separating_nonadjacent_pairs(l).into_iter().next() {
        return (false, Some(w));
    }
    if let Some(w) = separating_suspensions(l).into_iter().next() {
        return (false, Some(w));
    }
    (true, None)
}

/// Reference answer by scanning every vertex subset directly.
pub fn is_unseparable_brute_force(l: &LabelledNerve) -> bool {
    let n = l.vertex_count();
    assert!(n <= 20, "brute-force separation is limited to 20 vertices");
    if n == 0 || l.components().len() != 1 {
        return false;
    }
    for bits in 1u32..1 << n {
        let r: Vec<Vertex> = (0..n).filter(|i| bits >> i & 1 == 1).collect();
        if l.components_avoiding(&r).len() < 2 {
            continue;
        }
        if l.is_face(&r) {
            return false;
        }
        if r.len() == 2 && !l.adjacent(r[0], r[1]) {
            return false;
        }
        // Any nonadjacent pair of r as poles, the rest as base.
        for (i, &s) in r.iter().enumerate() {
            for &t in &r[i + 1..] {
                let base: Vec<Vertex> = r.iter().copied().filter(|&x| x != s && x != t).collect();
                if (LabelledSuspensionWitness { poles: (s, t), base }).verify(l) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nerve::nerve_of_racg;

    fn racg(names: &[&str], edges: &[(usize, usize)]) -> LabelledNerve {
        nerve_of_racg(names, edges).unwrap()
    }

    fn pentagon() -> LabelledNerve {
        racg(&["v1", "v2", "v3", "v4", "v5"], &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    }

    fn antiprism() -> LabelledNerve {
        let names = ["t1", "t2", "t3", "t4", "t5", "b1", "b2", "b3", "b4", "b5"];
        let mut e = Vec::new();
        for i in 0..5 {
            let j = (i + 1) % 5;
            e.extend([(i, j), (5 + i, 5 + j), (i, 5 + i), (i, 5 + j)]);
        }
        racg(&names, &e)
    }

    #[test]
    fn simplices() {
        let path = racg(&["a", "b", "c"], &[(0, 1), (1, 2)]);
        let w = separating_simplices(&path);
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].removed, vec![1]);
        assert!(separating_simplices(&pentagon()).is_empty());
        let k = SimplicialComplex::from_named(&["a", "b", "c", "d"], &[&["a", "b", "c"], &["a", "b", "d"]]).unwrap();
        let w = separating_simplices(&k);
        assert_eq!(w.iter().map(|w| w.removed.clone()).collect::<Vec<_>>(), vec![vec![0, 1]]);
        assert_eq!(w[0].components, vec![vec![2], vec![3]]);
    }

    #[test]
    fn pairs() {
        let w = separating_nonadjacent_pairs(&pentagon());
        let removed: Vec<_> = w.iter().map(|w| w.removed.clone()).collect();
        assert_eq!(removed, vec![vec![0, 2], vec![0, 3], vec![1, 3], vec![1, 4], vec![2, 4]]);
        let tri = racg(&["a", "b", "c"], &[(0, 1), (1, 2), (0, 2)]);
        assert!(separating_nonadjacent_pairs(&tri).is_empty());
        assert!(separating_nonadjacent_pairs(&antiprism()).is_empty());
    }

    #[test]
    fn suspensions_of_square_and_octahedron() {
        let sq = racg(&["a", "b", "c", "d"], &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let s = labelled_suspensions(&sq);
        let got: Vec<_> = s.iter().map(|w| (w.poles, w.base.clone())).collect();
        assert_eq!(got, vec![((0, 2), vec![1]), ((0, 2), vec![3]), ((1, 3), vec![0]), ((1, 3), vec![2])]);
        let mut e = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                if i / 2 != j / 2 {
                    e.push((i, j));
                }
            }
        }
        let oct = racg(&["a", "b", "c", "d", "e", "f"], &e);
        let s = labelled_suspensions(&oct);
        assert_eq!(s.iter().filter(|w| w.base.len() == 2).count(), 12);
        assert_eq!(s.iter().filter(|w| w.base.len() == 1).count(), 12);
        assert_eq!(s.len(), 24);
    }

    #[test]
    fn label_filter() {
        let sq = racg(&["a", "b", "c", "d"], &[(0, 1), (1, 2), (2, 3), (3, 0)]).relabel(0, 1, 3).unwrap();
        let got: Vec<_> = labelled_suspensions(&sq).iter().map(|w| (w.poles, w.base.clone())).collect();
        assert_eq!(got, vec![((0, 2), vec![3]), ((1, 3), vec![2])]);
    }

    #[test]
    fn unseparability_examples() {
        let (u, w) = is_unseparable(&pentagon());
        assert!(!u);
        let w = w.unwrap();
        assert_eq!((w.kind, w.removed.clone()), (SeparationKind::NonadjacentPair, vec![0, 2]));
        assert!(w.verify(&pentagon()));
        let path = racg(&["a", "b", "c"], &[(0, 1), (1, 2)]);
        let (_, w) = is_unseparable(&path);
        assert_eq!(w.unwrap().kind, SeparationKind::Simplex);
        assert_eq!(is_unseparable(&antiprism()), (true, None));
        assert!(is_unseparable_brute_force(&antiprism()));
        let two = racg(&["a", "b"], &[]);
        let (_, w) = is_unseparable(&two);
        let w = w.unwrap();
        assert_eq!(w.kind, SeparationKind::Disconnected);
        assert!(w.verify(&two));
    }

    #[test]
    fn every_witness_verifies_and_none_repeats() {
        let sq = racg(&["a", "b", "c", "d"], &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        for l in [pentagon(), antiprism(), sq] {
            let all = all_separations(&l);
            for w in &all {
                assert!(w.verify(&l));
            }
            let mut keys: Vec<_> = all.iter().map(|w| (w.kind, w.removed.clone(), w.suspension.clone())).collect();
            let before = keys.len();
            keys.dedup();
            assert_eq!(keys.len(), before);
        }
    }
}
