//! Finite abstract simplicial complexes stored by maximal faces, and their
//! edge-labelled variant.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::coxeter::CoxeterMatrix;

pub type Vertex = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("the empty complex is not allowed here")]
    Empty,
    #[error("duplicate vertex symbol {0:?}")]
    DuplicateVertex(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("edge {0:?}-{1:?} has no label")]
    MissingLabel(String, String),
    #[error("label on {0:?}-{1:?}, which is not an edge")]
    LabelOnNonEdge(String, String),
    #[error("label {2} on {0:?}-{1:?} is below 2")]
    LabelTooSmall(String, String, u32),
}

/// A finite abstract simplicial complex.
///
/// Only the inclusion-maximal faces are stored; a vertex set is a face iff
/// it lies inside one of them. Maximal faces are kept sorted so that equal
/// complexes compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialComplex {
    names: Vec<String>,
    maximal: Vec<Vec<Vertex>>,
    #[serde(skip)]
    adjacency: Vec<Vec<Vertex>>,
}

impl SimplicialComplex {
    /// Builds a complex from any generating family of faces. Vertices that
    /// appear in no face become isolated vertices.
    pub fn from_faces<S: AsRef<str>>(
        names: &[S],
        faces: &[Vec<Vertex>],
    ) -> Result<Self, ComplexError> {
        if names.is_empty() {
            return Err(ComplexError::Empty);
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_owned()).collect();
        let mut seen = BTreeSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(ComplexError::DuplicateVertex(n.clone()));
            }
        }
        Self::build(names, faces.to_vec())
    }

    /// Like [`from_faces`](Self::from_faces) but faces are given by symbol.
    pub fn from_named(vertices: &[&str], faces: &[&[&str]]) -> Result<Self, ComplexError> {
        let mut idx = Vec::with_capacity(faces.len());
        for f in faces {
            let mut face = Vec::with_capacity(f.len());
            for s in *f {
                let i = vertices
                    .iter()
                    .position(|v| v == s)
                    .ok_or_else(|| ComplexError::UnknownVertex(s.to_string()))?;
                face.push(i);
            }
            idx.push(face);
        }
        Self::from_faces(vertices, &idx)
    }

    /// The flag (clique) complex of a simple graph.
    pub fn flag_complex<S: AsRef<str>>(
        names: &[S],
        edges: &[(Vertex, Vertex)],
    ) -> Result<Self, ComplexError> {
        let n = names.len();
        let mut adj = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(ComplexError::VertexOutOfRange(u.max(v)));
            }
            if u != v {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        let adj: Vec<Vec<Vertex>> = adj.into_iter().map(|s| s.into_iter().collect()).collect();
        let cliques = maximal_cliques(&adj);
        Self::from_faces(names, &cliques)
    }

    /// Internal constructor: no name validation, empty allowed.
    fn build(names: Vec<String>, faces: Vec<Vec<Vertex>>) -> Result<Self, ComplexError> {
        let n = names.len();
        let mut faces: Vec<Vec<Vertex>> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        for f in &faces {
            if let Some(&v) = f.iter().find(|&&v| v >= n) {
                return Err(ComplexError::VertexOutOfRange(v));
            }
        }
        let mut covered = vec![false; n];
        for f in &faces {
            for &v in f {
                covered[v] = true;
            }
        }
        faces.extend((0..n).filter(|&v| !covered[v]).map(|v| vec![v]));
        faces.retain(|f| !f.is_empty());
        // Larger faces first so containment only needs to look backwards.
        faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        faces.dedup();
        let mut maximal: Vec<Vec<Vertex>> = Vec::new();
        for f in faces {
            if !maximal.iter().any(|m| is_sorted_subset(&f, m)) {
                maximal.push(f);
            }
        }
        maximal.sort();
        let mut adjacency = vec![BTreeSet::new(); n];
        for f in &maximal {
            for (i, &u) in f.iter().enumerate() {
                for &v in &f[i + 1..] {
                    adjacency[u].insert(v);
                    adjacency[v].insert(u);
                }
            }
        }
        let adjacency = adjacency.into_iter().map(|s| s.into_iter().collect()).collect();
        Ok(SimplicialComplex { names, maximal, adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<Vertex> {
        self.names.iter().position(|n| n == name)
    }

    /// Looks up vertices by symbol.
    pub fn vertices_named(&self, names: &[&str]) -> Result<Vec<Vertex>, ComplexError> {
        names
            .iter()
            .map(|s| self.index_of(s).ok_or_else(|| ComplexError::UnknownVertex(s.to_string())))
            .collect()
    }

    pub fn maximal_faces(&self) -> &[Vec<Vertex>] {
        &self.maximal
    }

    /// `-1` for the empty complex.
    pub fn dimension(&self) -> isize {
        self.maximal.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    pub fn is_face(&self, vertices: &[Vertex]) -> bool {
        let mut s = vertices.to_vec();
        s.sort_unstable();
        s.dedup();
        self.is_sorted_face(&s)
    }

    fn is_sorted_face(&self, s: &[Vertex]) -> bool {
        if s.is_empty() {
            return true;
        }
        self.maximal.iter().any(|m| is_sorted_subset(s, m))
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    /// All edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// All faces with exactly `k + 1` vertices, sorted.
    pub fn faces_of_dim(&self, k: usize) -> Vec<Vec<Vertex>> {
        let mut out = BTreeSet::new();
        for m in &self.maximal {
            if m.len() > k {
                for_each_subset_of_size(m, k + 1, &mut |s| {
                    out.insert(s.to_vec());
                });
            }
        }
        out.into_iter().collect()
    }

    /// All nonempty faces, sorted by size then lexicographically.
    pub fn all_faces(&self) -> Vec<Vec<Vertex>> {
        let mut out = BTreeSet::new();
        for m in &self.maximal {
            for size in 1..=m.len() {
                for_each_subset_of_size(m, size, &mut |s| {
                    out.insert(s.to_vec());
                });
            }
        }
        let mut v: Vec<_> = out.into_iter().collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        v
    }

    /// Triangles containing the edge `uv`.
    pub fn triangles_on_edge(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        self.adjacency[u]
            .iter()
            .copied()
            .filter(|&w| w != v && self.adjacent(v, w) && self.is_face(&[u, v, w]))
            .collect()
    }

    fn check_vertices(&self, a: &[Vertex]) -> Result<(), ComplexError> {
        match a.iter().find(|&&v| v >= self.vertex_count()) {
            Some(&v) => Err(ComplexError::VertexOutOfRange(v)),
            None => Ok(()),
        }
    }

    /// The induced subcomplex on `a`. Vertices keep their symbols and
    /// relative order. Restricting to no vertices yields the empty complex.
    pub fn full_subcomplex(&self, a: &[Vertex]) -> Result<SimplicialComplex, ComplexError> {
        self.check_vertices(a)?;
        let mut keep = vec![false; self.vertex_count()];
        for &v in a {
            keep[v] = true;
        }
        let mut new_index = vec![usize::MAX; self.vertex_count()];
        let mut names = Vec::new();
        for v in 0..self.vertex_count() {
            if keep[v] {
                new_index[v] = names.len();
                names.push(self.names[v].clone());
            }
        }
        let faces: Vec<Vec<Vertex>> = self
            .maximal
            .iter()
            .map(|f| f.iter().filter(|&&v| keep[v]).map(|&v| new_index[v]).collect())
            .collect();
        Self::build(names, faces)
    }

    /// The induced subcomplex on the complement of `a`.
    pub fn delete_vertices(&self, a: &[Vertex]) -> Result<SimplicialComplex, ComplexError> {
        self.check_vertices(a)?;
        let rest: Vec<Vertex> = (0..self.vertex_count()).filter(|v| !a.contains(v)).collect();
        self.full_subcomplex(&rest)
    }

    pub fn is_connected(&self) -> Result<bool, ComplexError> {
        if self.is_empty() {
            return Err(ComplexError::Empty);
        }
        Ok(self.components().len() == 1)
    }

    /// Connected components of the 1-skeleton, each sorted, ordered by least
    /// vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.components_avoiding(&[])
    }

    /// Components of the full subcomplex on the vertices not in `removed`,
    /// in this complex's indices.
    pub fn components_avoiding(&self, removed: &[Vertex]) -> Vec<Vec<Vertex>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        for &v in removed {
            seen[v] = true;
        }
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True iff some vertex bijection maps faces onto faces.
    pub fn is_isomorphic(&self, other: &SimplicialComplex) -> bool {
        find_isomorphism(self, other, |_, _, _, _| true).is_some()
    }
}

/// A simplicial complex whose edges carry Coxeter exponents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelledNerve {
    complex: SimplicialComplex,
    #[serde(serialize_with = "serialize_labels")]
    labels: BTreeMap<(Vertex, Vertex), u32>,
    #[serde(skip)]
    origin: Option<CoxeterMatrix>,
}

fn serialize_labels<S: serde::Serializer>(
    labels: &BTreeMap<(Vertex, Vertex), u32>,
    s: S,
) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(labels.len()))?;
    for (&(u, v), &m) in labels {
        seq.serialize_element(&(u, v, m))?;
    }
    seq.end()
}

impl LabelledNerve {
    /// `labels` must cover every edge exactly once; keys may be in either
    /// orientation.
    pub fn new(
        complex: SimplicialComplex,
        labels: impl IntoIterator<Item = ((Vertex, Vertex), u32)>,
    ) -> Result<Self, ComplexError> {
        let mut map = BTreeMap::new();
        for ((u, v), m) in labels {
            let key = (u.min(v), u.max(v));
            if key.1 >= complex.vertex_count() {
                return Err(ComplexError::VertexOutOfRange(key.1));
            }
            if !complex.adjacent(key.0, key.1) {
                return Err(ComplexError::LabelOnNonEdge(
                    complex.name(key.0).into(),
                    complex.name(key.1).into(),
                ));
            }
            if m < 2 {
                return Err(ComplexError::LabelTooSmall(
                    complex.name(key.0).into(),
                    complex.name(key.1).into(),
                    m,
                ));
            }
            map.insert(key, m);
        }
        for (u, v) in complex.edges() {
            if !map.contains_key(&(u, v)) {
                return Err(ComplexError::MissingLabel(
                    complex.name(u).into(),
                    complex.name(v).into(),
                ));
            }
        }
        Ok(LabelledNerve { complex, labels: map, origin: None })
    }

    /// Every edge labelled `label`.
    pub fn uniform(complex: SimplicialComplex, label: u32) -> Self {
        let labels = complex.edges().into_iter().map(|e| (e, label)).collect();
        LabelledNerve { complex, labels, origin: None }
    }

    pub(crate) fn with_origin(mut self, origin: CoxeterMatrix) -> Self {
        self.origin = Some(origin);
        self
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn origin(&self) -> Option<&CoxeterMatrix> {
        self.origin.as_ref()
    }

    pub fn label(&self, u: Vertex, v: Vertex) -> Option<u32> {
        self.labels.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn labels(&self) -> &BTreeMap<(Vertex, Vertex), u32> {
        &self.labels
    }

    pub fn is_right_angled(&self) -> bool {
        self.labels.values().all(|&m| m == 2)
    }

    /// Returns a copy with one edge relabelled.
    pub fn relabel(&self, u: Vertex, v: Vertex, m: u32) -> Result<Self, ComplexError> {
        let mut labels = self.labels.clone();
        labels.insert((u.min(v), u.max(v)), m);
        let mut out = LabelledNerve::new(self.complex.clone(), labels)?;
        out.origin = None;
        Ok(out)
    }

    /// The induced labelled subcomplex on `a`.
    pub fn full_subcomplex(&self, a: &[Vertex]) -> Result<LabelledNerve, ComplexError> {
        let sub = self.complex.full_subcomplex(a)?;
        let mut kept: Vec<Vertex> = a.to_vec();
        kept.sort_unstable();
        kept.dedup();
        let labels: Vec<_> = sub
            .edges()
            .into_iter()
            .map(|(u, v)| ((u, v), self.label(kept[u], kept[v]).expect("edge of a full subcomplex")))
            .collect();
        LabelledNerve::new(sub, labels)
    }
}

impl std::ops::Deref for LabelledNerve {
    type Target = SimplicialComplex;
    fn deref(&self) -> &SimplicialComplex {
        &self.complex
    }
}

/// True iff a vertex bijection maps faces onto faces and preserves labels.
pub fn are_isomorphic_labelled(a: &LabelledNerve, b: &LabelledNerve) -> bool {
    find_isomorphism(&a.complex, &b.complex, |u, v, x, y| a.label(u, v) == b.label(x, y)).is_some()
}

/// Backtracking search for a face-preserving bijection `a -> b` whose edge
/// map satisfies `edge_ok(u, v, f(u), f(v))`.
pub fn find_isomorphism(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    edge_ok: impl Fn(Vertex, Vertex, Vertex, Vertex) -> bool,
) -> Option<Vec<Vertex>> {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.maximal.len() != b.maximal.len() {
        return None;
    }
    let sig = |k: &SimplicialComplex| {
        let mut s: Vec<usize> = k.maximal.iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    };
    if sig(a) != sig(b) {
        return None;
    }
    let profile = |k: &SimplicialComplex, v: Vertex| {
        let mut sizes: Vec<usize> =
            k.maximal.iter().filter(|f| f.contains(&v)).map(Vec::len).collect();
        sizes.sort_unstable();
        (k.degree(v), sizes)
    };
    let pa: Vec<_> = (0..n).map(|v| profile(a, v)).collect();
    let pb: Vec<_> = (0..n).map(|v| profile(b, v)).collect();
    // Map high-degree vertices first for earlier pruning.
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by(|&x, &y| a.degree(y).cmp(&a.degree(x)).then(x.cmp(&y)));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn go(
        depth: usize,
        order: &[Vertex],
        a: &SimplicialComplex,
        b: &SimplicialComplex,
        pa: &[(usize, Vec<usize>)],
        pb: &[(usize, Vec<usize>)],
        map: &mut [Vertex],
        used: &mut [bool],
        edge_ok: &dyn Fn(Vertex, Vertex, Vertex, Vertex) -> bool,
    ) -> bool {
        if depth == order.len() {
            return a.maximal.iter().all(|f| {
                let img: Vec<Vertex> = f.iter().map(|&v| map[v]).collect();
                b.is_face(&img)
            });
        }
        let u = order[depth];
        for x in 0..b.vertex_count() {
            if used[x] || pa[u] != pb[x] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&w| {
                let y = map[w];
                let ea = a.adjacent(u, w);
                ea == b.adjacent(x, y) && (!ea || edge_ok(u, w, x, y))
            });
            if !consistent {
                continue;
            }
            map[u] = x;
            used[x] = true;
            if go(depth + 1, order, a, b, pa, pb, map, used, edge_ok) {
                return true;
            }
            used[x] = false;
            map[u] = usize::MAX;
        }
        false
    }

    go(0, &order, a, b, &pa, &pb, &mut map, &mut used, &edge_ok).then_some(map)
}

pub(crate) fn is_sorted_subset(small: &[Vertex], big: &[Vertex]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

pub(crate) fn for_each_subset_of_size(items: &[Vertex], k: usize, f: &mut dyn FnMut(&[Vertex])) {
    fn rec(items: &[Vertex], k: usize, start: usize, cur: &mut Vec<Vertex>, f: &mut dyn FnMut(&[Vertex])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        let need = k - cur.len();
        for i in start..=items.len().saturating_sub(need) {
            if items.len() < need {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, f);
            cur.pop();
        }
    }
    if k <= items.len() {
        rec(items, k, 0, &mut Vec::with_capacity(k), f);
    }
}

/// Maximal cliques of a graph given by sorted adjacency lists
/// (Bron–Kerbosch with pivoting).
pub fn maximal_cliques(adj: &[Vec<Vertex>]) -> Vec<Vec<Vertex>> {
    fn bk(
        adj: &[Vec<Vertex>],
        r: &mut Vec<Vertex>,
        p: Vec<Vertex>,
        mut x: Vec<Vertex>,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        if p.is_empty() {
            if x.is_empty() {
                let mut c = r.clone();
                c.sort_unstable();
                out.push(c);
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| p.iter().filter(|v| adj[u].binary_search(v).is_ok()).count())
            .expect("p nonempty");
        let candidates: Vec<Vertex> =
            p.iter().copied().filter(|v| adj[pivot].binary_search(v).is_err()).collect();
        let mut p = p;
        for v in candidates {
            let np = p.iter().copied().filter(|w| adj[v].binary_search(w).is_ok()).collect();
            let nx = x.iter().copied().filter(|w| adj[v].binary_search(w).is_ok()).collect();
            r.push(v);
            bk(adj, r, np, nx, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    bk(adj, &mut Vec::new(), (0..adj.len()).collect(), Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimplicialComplex {
        let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimplicialComplex::flag_complex(&names, &edges).unwrap()
    }

    #[test]
    fn one_simplex_faces() {
        let k = SimplicialComplex::from_named(&["a", "b", "c"], &[&["a", "b", "c"]]).unwrap();
        assert_eq!(k.all_faces().len(), 7);
        assert!(k.is_face(&[]));
        assert!(k.is_face(&[0, 2]));
        assert_eq!(k.dimension(), 2);
    }

    #[test]
    fn hollow_triangle_and_isolated() {
        let k = SimplicialComplex::from_named(
            &["a", "b", "c"],
            &[&["a", "b"], &["b", "c"], &["a", "c"]],
        )
        .unwrap();
        assert!(!k.is_face(&[0, 1, 2]));
        assert_eq!(k.dimension(), 1);
        let two = SimplicialComplex::from_named(&["a", "b"], &[&["a"], &["b"]]).unwrap();
        assert_eq!(two.is_connected(), Ok(false));
    }

    #[test]
    fn non_maximal_faces_are_dropped() {
        let k = SimplicialComplex::from_named(&["a", "b", "c"], &[&["a", "b"], &["a", "b", "c"], &["c"]])
            .unwrap();
        assert_eq!(k.maximal_faces(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            SimplicialComplex::from_named(&["a", "a"], &[]),
            Err(ComplexError::DuplicateVertex("a".into()))
        );
        assert_eq!(
            SimplicialComplex::from_named(&["a"], &[&["b"]]),
            Err(ComplexError::UnknownVertex("b".into()))
        );
        assert_eq!(SimplicialComplex::from_named(&[], &[]), Err(ComplexError::Empty));
    }

    #[test]
    fn full_subcomplex_examples() {
        let hollow = SimplicialComplex::from_named(
            &["a", "b", "c"],
            &[&["a", "b"], &["b", "c"], &["a", "c"]],
        )
        .unwrap();
        let e = hollow.full_subcomplex(&[0, 1]).unwrap();
        assert_eq!(e.maximal_faces(), &[vec![0, 1]]);
        let filled = SimplicialComplex::from_named(&["a", "b", "c"], &[&["a", "b", "c"]]).unwrap();
        assert_eq!(filled.full_subcomplex(&[0, 1, 2]).unwrap(), filled);
        let c5 = cycle(5);
        let two = c5.full_subcomplex(&[0, 2]).unwrap();
        assert_eq!(two.maximal_faces(), &[vec![0], vec![1]]);
        assert_eq!(two.names(), &["v1", "v3"]);
        assert_eq!(c5.full_subcomplex(&[9]), Err(ComplexError::VertexOutOfRange(9)));
    }

    #[test]
    fn delete_vertices_examples() {
        let c5 = cycle(5);
        let path = c5.delete_vertices(&[0]).unwrap();
        assert_eq!(path.names(), &["v2", "v3", "v4", "v5"]);
        assert_eq!(path.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        let filled = SimplicialComplex::from_named(&["a", "b", "c"], &[&["a", "b", "c"]]).unwrap();
        assert_eq!(filled.delete_vertices(&[0]).unwrap().maximal_faces(), &[vec![0, 1]]);
        let p3 = SimplicialComplex::from_named(&["a", "b", "c"], &[&["a", "b"], &["b", "c"]]).unwrap();
        assert_eq!(p3.delete_vertices(&[1]).unwrap().components().len(), 2);
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(cycle(5).is_connected(), Ok(true));
        let two_edges =
            SimplicialComplex::from_named(&["a", "b", "c", "d"], &[&["a", "b"], &["c", "d"]]).unwrap();
        assert_eq!(two_edges.is_connected(), Ok(false));
        let one = SimplicialComplex::from_named(&["a"], &[]).unwrap();
        assert_eq!(one.is_connected(), Ok(true));
        let empty = one.delete_vertices(&[0]).unwrap();
        assert_eq!(empty.is_connected(), Err(ComplexError::Empty));
    }

    fn path3(l1: u32, l2: u32) -> LabelledNerve {
        let k = SimplicialComplex::from_named(&["a", "b", "c"], &[&["a", "b"], &["b", "c"]]).unwrap();
        LabelledNerve::new(k, [((0, 1), l1), ((1, 2), l2)]).unwrap()
    }

    #[test]
    fn labelled_isomorphism_examples() {
        assert!(are_isomorphic_labelled(&path3(3, 4), &path3(4, 3)));
        assert!(!are_isomorphic_labelled(&path3(3, 4), &path3(3, 5)));
        let c5 = LabelledNerve::uniform(cycle(5), 2);
        let open = LabelledNerve::uniform(
            SimplicialComplex::from_faces(
                &["v1", "v2", "v3", "v4", "v5"],
                &[vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4]],
            )
            .unwrap(),
            2,
        );
        assert!(!are_isomorphic_labelled(&c5, &open));
    }

    #[test]
    fn isomorphism_sees_two_faces() {
        let hollow = SimplicialComplex::from_named(
            &["a", "b", "c"],
            &[&["a", "b"], &["b", "c"], &["a", "c"]],
        )
        .unwrap();
        let filled = SimplicialComplex::from_named(&["a", "b", "c"], &[&["a", "b", "c"]]).unwrap();
        assert!(!hollow.is_isomorphic(&filled));
    }

    #[test]
    fn label_validation() {
        let k = cycle(4);
        assert!(matches!(
            LabelledNerve::new(k.clone(), [((0, 1), 2)]),
            Err(ComplexError::MissingLabel(..))
        ));
        let p3 = SimplicialComplex::from_named(&["a", "b", "c"], &[&["a", "b"], &["b", "c"]]).unwrap();
        assert!(matches!(
            LabelledNerve::new(p3, [((0, 1), 2), ((1, 2), 2), ((0, 2), 2)]),
            Err(ComplexError::LabelOnNonEdge(..))
        ));
    }
}
