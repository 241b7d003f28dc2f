//! Recognition of the excluded forms (simplex, circle, 2-sphere, labelled
//! wheel) and reduced cohomology with the vcd formula built on it.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::complex::{LabelledNerve, SimplicialComplex, Vertex};

pub fn is_simplex(k: &SimplicialComplex) -> bool {
    k.maximal_faces().len() == 1
}

/// A cycle graph on at least three vertices.
pub fn is_circle_triangulation(k: &SimplicialComplex) -> bool {
    k.vertex_count() >= 3
        && k.dimension() == 1
        && k.maximal_faces().iter().all(|f| f.len() == 2)
        && (0..k.vertex_count()).all(|v| k.degree(v) == 2)
        && k.components().len() == 1
}

/// The link of `v` as a graph on `v`'s neighbours: `a ~ b` iff `{v, a, b}`
/// is a triangle.
pub(crate) fn link_graph(k: &SimplicialComplex, v: Vertex) -> (Vec<Vertex>, Vec<Vec<usize>>) {
    let nbrs = k.neighbors(v).to_vec();
    let mut adj = vec![Vec::new(); nbrs.len()];
    for i in 0..nbrs.len() {
        for j in i + 1..nbrs.len() {
            if k.is_face(&[v, nbrs[i], nbrs[j]]) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    (nbrs, adj)
}

fn is_cycle_graph(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    if n < 3 || adj.iter().any(|a| a.len() != 2) {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// Pure 2-dimensional, connected, every edge in exactly two triangles, every
/// vertex link a cycle, Euler characteristic 2.
pub fn is_sphere_triangulation(k: &SimplicialComplex) -> bool {
    if k.is_empty() || k.maximal_faces().iter().any(|f| f.len() != 3) {
        return false;
    }
    if k.components().len() != 1 {
        return false;
    }
    let edges = k.edges();
    if edges.iter().any(|&(u, v)| k.triangles_on_edge(u, v).len() != 2) {
        return false;
    }
    if !(0..k.vertex_count()).all(|v| is_cycle_graph(&link_graph(k, v).1)) {
        return false;
    }
    let chi = k.vertex_count() as isize - edges.len() as isize + k.maximal_faces().len() as isize;
    chi == 2
}

/// The cone apex, if `l` is a cone over a circle with every spoke labelled 2.
pub fn labelled_wheel_apex(l: &LabelledNerve) -> Option<Vertex> {
    let n = l.vertex_count();
    (0..n).find(|&c| {
        l.degree(c) == n - 1
            && l.maximal_faces().iter().all(|f| f.binary_search(&c).is_ok())
            && (0..n).filter(|&v| v != c).all(|v| l.label(c, v) == Some(2))
            && l.delete_vertices(&[c]).map(|rim| is_circle_triangulation(&rim)).unwrap_or(false)
    })
}

pub fn is_labelled_wheel(l: &LabelledNerve) -> bool {
    labelled_wheel_apex(l).is_some()
}

/// Ranks of reduced cohomology over the rationals; `ranks[0]` is degree −1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyRanks {
    pub ranks: Vec<usize>,
}

impl CohomologyRanks {
    pub fn rank(&self, degree: isize) -> usize {
        usize::try_from(degree + 1).ok().and_then(|i| self.ranks.get(i).copied()).unwrap_or(0)
    }

    /// Highest degree with nonzero rank.
    pub fn top_nonzero(&self) -> Option<isize> {
        self.ranks.iter().rposition(|&r| r != 0).map(|i| i as isize - 1)
    }
}

/// Faces grouped by size, including the empty face at index 0.
fn faces_by_size(k: &SimplicialComplex) -> Vec<Vec<Vec<Vertex>>> {
    let top = (k.dimension() + 1) as usize;
    let mut out = vec![vec![Vec::new()]];
    for size in 1..=top {
        out.push(k.faces_of_dim(size - 1));
    }
    out
}

/// Boundary matrix from faces of size `s` to faces of size `s - 1`, as rows
/// indexed by the larger faces.
fn boundary(big: &[Vec<Vertex>], small: &[Vec<Vertex>]) -> Vec<Vec<(usize, i8)>> {
    big.iter()
        .map(|f| {
            (0..f.len())
                .map(|i| {
                    let mut g = f.clone();
                    g.remove(i);
                    let col = small.binary_search(&g).expect("faces are downward closed");
                    (col, if i % 2 == 0 { 1 } else { -1 })
                })
                .collect()
        })
        .collect()
}

fn rank_rational(rows: &[Vec<(usize, i8)>], cols: usize) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            let mut row = vec![BigRational::zero(); cols];
            for &(c, s) in r {
                row[c] = BigRational::from_integer(s.into());
            }
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = BigRational::one() / m[rank][col].clone();
        for r in rank + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone() * &inv;
            for c in col..cols {
                let d = m[rank][c].clone() * &f;
                m[r][c] -= d;
            }
        }
        rank += 1;
    }
    rank
}

fn rank_gf2(rows: &[Vec<(usize, i8)>], cols: usize) -> usize {
    let words = cols.div_ceil(64);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            let mut row = vec![0u64; words];
            for &(c, _) in r {
                row[c / 64] ^= 1 << (c % 64);
            }
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let (w, b) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (rank..m.len()).find(|&r| m[r][w] & b != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && m[r][w] & b != 0 {
                for i in 0..words {
                    let x = m[rank][i];
                    m[r][i] ^= x;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn reduced_ranks(k: &SimplicialComplex, rank: fn(&[Vec<(usize, i8)>], usize) -> usize) -> Vec<usize> {
    let faces = faces_by_size(k);
    // bd[s] = rank of the boundary from size s to size s-1.
    let mut bd = vec![0; faces.len() + 1];
    for s in 1..faces.len() {
        bd[s] = rank(&boundary(&faces[s], &faces[s - 1]), faces[s - 1].len());
    }
    (0..faces.len()).map(|s| faces[s].len() - bd[s] - bd[s + 1]).collect()
}

/// Reduced cohomology ranks over the rationals in degrees −1 up to the
/// dimension. Rational cohomology and homology have equal ranks, so this
/// eliminates on boundary matrices.
pub fn reduced_cohomology_ranks(k: &SimplicialComplex) -> CohomologyRanks {
    CohomologyRanks { ranks: reduced_ranks(k, rank_rational) }
}

/// True iff integral homology of `k` has 2-torsion, detected as a mismatch
/// between Betti numbers over GF(2) and over the rationals.
pub fn has_two_torsion(k: &SimplicialComplex) -> bool {
    reduced_ranks(k, rank_gf2) != reduced_ranks(k, rank_rational)
}

/// Faces of `l` whose deletion has 2-torsion in homology, with the empty
/// face standing for `l` itself. Rational ranks may under-report vcd on
/// exactly these.
pub fn two_torsion_deletions(l: &SimplicialComplex) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    if has_two_torsion(l) {
        out.push(Vec::new());
    }
    for f in l.all_faces() {
        let d = l.delete_vertices(&f).expect("faces use known vertices");
        if has_two_torsion(&d) {
            out.push(f);
        }
    }
    out
}

/// The Davis formula: the largest `n` with reduced `H^{n-1}` of `l` or of
/// some `l` minus a face nonzero; 0 when there is none.
pub fn vcd(l: &SimplicialComplex) -> usize {
    let mut best: isize = -1;
    let mut consider = |k: &SimplicialComplex| {
        if let Some(top) = reduced_cohomology_ranks(k).top_nonzero() {
            best = best.max(top + 1);
        }
    };
    consider(l);
    for f in l.all_faces() {
        consider(&l.delete_vertices(&f).expect("faces use known vertices"));
    }
    best.max(0) as usize
}
