//! Embeddability of simplicial complexes in the 2-sphere.
//!
//! A complex is tested through its wheel augmentation: every edge is
//! subdivided once and every triangle gets an apex joined to its three
//! corners and its three subdivision vertices. The augmentation alone cannot
//! see a vertex whose triangles close up into a disk around it while further
//! simplices hang off it (they would sit in a wedge of some wheel), so the
//! link of every vertex is checked first.

mod completion;
pub mod lr;
mod oracle;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::complex::{SimplicialComplex, Vertex};
use crate::topology::link_graph;

pub use completion::{is_flag_relative_to, sphere_completion};
pub use oracle::{planarity_oracle_small, rotation_search, ORACLE_MAX_VERTICES};

/// Complexes up to this size are cross-checked against the exhaustive
/// oracle on every planarity query.
pub const CROSS_CHECK_MAX_VERTICES: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlanarityError {
    #[error("exhaustive search is limited to {limit} vertices, got {vertices}")]
    TooLarge { vertices: usize, limit: usize },
    #[error("the complex does not embed in the sphere")]
    Nonplanar,
    #[error("the complex already triangulates the sphere")]
    AlreadySphere,
    #[error("sphere completion failed verification: {0}")]
    VerificationFailed(String),
}

/// The wheel augmentation of a complex. Vertices `0..base` are the complex's
/// own vertices.
#[derive(Clone, Debug)]
pub struct Augmentation {
    pub adj: Vec<Vec<usize>>,
    pub base: usize,
    /// Subdivision vertex of each edge `(u, v)`, `u < v`.
    pub subdivision: BTreeMap<(Vertex, Vertex), usize>,
    /// Each triangle with its apex.
    pub apexes: Vec<([Vertex; 3], usize)>,
}

impl Augmentation {
    pub fn is_apex(&self, x: usize) -> bool {
        x >= self.base + self.subdivision.len()
    }

    pub fn is_subdivision(&self, x: usize) -> bool {
        x >= self.base && !self.is_apex(x)
    }
}

pub fn wheel_augmentation(k: &SimplicialComplex) -> Augmentation {
    let base = k.vertex_count();
    let edges = k.edges();
    let triangles = k.faces_of_dim(2);
    let total = base + edges.len() + triangles.len();
    let mut adj = vec![Vec::new(); total];
    let mut link = |a: usize, b: usize| {
        adj[a].push(b);
        adj[b].push(a);
    };
    let mut subdivision = BTreeMap::new();
    for (i, &(u, v)) in edges.iter().enumerate() {
        let s = base + i;
        link(u, s);
        link(s, v);
        subdivision.insert((u, v), s);
    }
    let mut apexes = Vec::new();
    for (i, t) in triangles.iter().enumerate() {
        let a = base + edges.len() + i;
        let tri = [t[0], t[1], t[2]];
        for &x in &tri {
            link(a, x);
        }
        for (p, q) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
            link(a, subdivision[&(p, q)]);
        }
        apexes.push((tri, a));
    }
    Augmentation { adj, base, subdivision, apexes }
}

/// Local obstructions: a face of dimension 3, an edge in 3 triangles, or a
/// vertex whose link contains a cycle and something else.
fn has_local_obstruction(k: &SimplicialComplex) -> bool {
    if k.dimension() >= 3 {
        return true;
    }
    let mut count: BTreeMap<(Vertex, Vertex), usize> = BTreeMap::new();
    for t in k.faces_of_dim(2) {
        for e in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
            let c = count.entry(e).or_default();
            *c += 1;
            if *c >= 3 {
                return true;
            }
        }
    }
    (0..k.vertex_count()).any(|v| link_has_closed_fan_and_more(k, v))
}

/// Link vertices have degree at most 2 here, so a component is a cycle iff
/// all of its vertices have degree 2.
fn link_has_closed_fan_and_more(k: &SimplicialComplex, v: Vertex) -> bool {
    let (nbrs, adj) = link_graph(k, v);
    let n = nbrs.len();
    let mut seen = vec![false; n];
    let mut comps = 0;
    let mut has_cycle = false;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        comps += 1;
        seen[s] = true;
        let mut stack = vec![s];
        let mut all_two = true;
        while let Some(u) = stack.pop() {
            all_two &= adj[u].len() == 2;
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        has_cycle |= all_two;
    }
    has_cycle && comps > 1
}

/// Planarity through the wheel augmentation alone.
pub fn is_planar_by_augmentation(k: &SimplicialComplex) -> bool {
    if has_local_obstruction(k) {
        return false;
    }
    lr::is_planar_graph(&wheel_augmentation(k).adj)
}

/// True iff `k` embeds in the 2-sphere. Small complexes are also run
/// through the exhaustive oracle and any disagreement panics.
pub fn is_planar_complex(k: &SimplicialComplex) -> bool {
    let fast = is_planar_by_augmentation(k);
    if k.vertex_count() <= CROSS_CHECK_MAX_VERTICES {
        let slow = planarity_oracle_small(k).expect("within the oracle's size limit");
        assert_eq!(
            fast, slow,
            "planarity disagreement on {:?}: augmentation says {fast}, rotation search says {slow}",
            k.maximal_faces()
        );
    }
    fast
}
