//! Exhaustive agreement checks between the fast decision procedures and
//! their independent oracles, shared by the test suites and `coxcarpet
//! oracle`.

use std::collections::HashSet;

use serde::Serialize;

use crate::classify::{diagram_components, is_affine_irreducible, is_finite};
use crate::complex::SimplicialComplex;
use crate::cosine::{cosine_matrix, definiteness, DefinitenessClass};
use crate::coxeter::{CoxeterMatrix, Exponent};
use crate::hyperbolicity::{has_empty_square, is_hyperbolic};
use crate::nerve::nerve_of_racg;
use crate::planarity::{is_planar_by_augmentation, planarity_oracle_small};

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheckReport {
    pub name: String,
    pub cases: usize,
    pub disagreements: Vec<String>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Labels of the diagram enumeration, by colour index.
pub const DIAGRAM_LABELS: [Exponent; 6] = [
    Exponent::Finite(2),
    Exponent::Finite(3),
    Exponent::Finite(4),
    Exponent::Finite(5),
    Exponent::Finite(6),
    Exponent::Infinite,
];

/// Position of pair `i < j` in a code: pairs are listed by `j`, then `i`.
fn pair_index(i: usize, j: usize) -> usize {
    let (i, j) = (i.min(j), i.max(j));
    j * (j - 1) / 2 + i
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

/// Least relabelled code over all vertex permutations.
fn canonical(code: &[u8], pairs: &[(usize, usize)], perms: &[Vec<usize>]) -> Vec<u8> {
    let mut best = code.to_vec();
    let mut cur = vec![0u8; code.len()];
    for p in perms {
        let mut less = false;
        let mut aborted = false;
        for (k, &(i, j)) in pairs.iter().enumerate() {
            let v = code[pair_index(p[i], p[j])];
            if !less {
                if v > best[k] {
                    aborted = true;
                    break;
                }
                less = v < best[k];
            }
            cur[k] = v;
        }
        if less && !aborted {
            best.copy_from_slice(&cur);
        }
    }
    best
}

/// One representative code per isomorphism class of complete graphs on `n`
/// vertices with edges coloured `0..colours`, sorted. Every class on `n`
/// vertices extends some class on `n - 1`, so classes are grown one vertex
/// at a time and deduplicated by canonical code.
pub fn coloured_graph_classes(n: usize, colours: u8) -> Vec<Vec<u8>> {
    let mut classes: Vec<Vec<u8>> = vec![Vec::new()];
    for size in 2..=n {
        let pairs: Vec<(usize, usize)> = (1..size).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let perms = permutations(size);
        let mut seen = HashSet::new();
        let new = size - 1;
        let total = (colours as usize).pow(new as u32);
        for c in &classes {
            for mut x in 0..total {
                let mut code = c.clone();
                for _ in 0..new {
                    code.push((x % colours as usize) as u8);
                    x /= colours as usize;
                }
                seen.insert(canonical(&code, &pairs, &perms));
            }
        }
        classes = seen.into_iter().collect();
        classes.sort();
    }
    if n == 0 {
        return Vec::new();
    }
    classes
}

fn generator_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("s{i}")).collect()
}

/// The Coxeter matrix of a diagram code with colours read through
/// [`DIAGRAM_LABELS`].
pub fn diagram_matrix(n: usize, code: &[u8]) -> CoxeterMatrix {
    let mut rels = Vec::new();
    for j in 1..n {
        for i in 0..j {
            rels.push((i, j, DIAGRAM_LABELS[code[pair_index(i, j)] as usize]));
        }
    }
    CoxeterMatrix::new(&generator_names(n), &rels, Exponent::Infinite).expect("valid diagram")
}

/// Template recognition against the definiteness of the cosine matrix, on
/// every connected diagram with at most `max_n` vertices.
pub fn classification_crosscheck(max_n: usize) -> CrossCheckReport {
    let mut cases = 0;
    let mut disagreements = Vec::new();
    for n in 1..=max_n {
        for code in coloured_graph_classes(n, DIAGRAM_LABELS.len() as u8) {
            let m = diagram_matrix(n, &code);
            let all = m.all();
            if diagram_components(&m, all).len() != 1 {
                continue;
            }
            cases += 1;
            let d = match definiteness(&cosine_matrix(&m, all)) {
                Ok(d) => d,
                Err(e) => {
                    disagreements.push(format!("{code:?}: {e}"));
                    continue;
                }
            };
            let pd = d.is_positive_definite();
            let affine_oracle = d.class == DefinitenessClass::PsdSingular && d.nullity == 1;
            if is_finite(&m, all) != pd {
                disagreements.push(format!("{code:?}: finite-type templates say {}, definiteness {d:?}", !pd));
            }
            if is_affine_irreducible(&m, all) != affine_oracle {
                disagreements.push(format!("{code:?}: affine templates say {}, definiteness {d:?}", !affine_oracle));
            }
        }
    }
    CrossCheckReport { name: "finite/affine recognition vs definiteness".into(), cases, disagreements }
}

fn graph_edges(n: usize, code: &[u8]) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if code[pair_index(i, j)] == 1 {
                e.push((i, j));
            }
        }
    }
    e
}

/// Moussong's criterion against the empty-square test on every graph with
/// at most `max_n` vertices, up to isomorphism.
pub fn racg_hyperbolicity_crosscheck(max_n: usize) -> CrossCheckReport {
    let mut cases = 0;
    let mut disagreements = Vec::new();
    for n in 1..=max_n {
        for code in coloured_graph_classes(n, 2) {
            cases += 1;
            let edges = graph_edges(n, &code);
            let names = generator_names(n);
            let m = CoxeterMatrix::right_angled(&names, &edges).expect("valid graph");
            let l = nerve_of_racg(&names, &edges).expect("valid graph");
            let general = is_hyperbolic(&m).0;
            let square = has_empty_square(&l).expect("right-angled").is_none();
            if general != square {
                disagreements.push(format!("{edges:?}: general criterion {general}, empty squares {square}"));
            }
        }
    }
    CrossCheckReport { name: "right-angled hyperbolicity vs empty squares".into(), cases, disagreements }
}

/// The wheel-augmentation decision against the rotation-system search on
/// every flag complex with at most `max_n` vertices (all labelled graphs)
/// and on [`curated_complexes`].
pub fn planarity_crosscheck(max_n: usize) -> CrossCheckReport {
    let mut cases = 0;
    let mut disagreements = Vec::new();
    let mut check = |label: String, k: &SimplicialComplex| {
        cases += 1;
        match planarity_oracle_small(k) {
            Ok(slow) => {
                let fast = is_planar_by_augmentation(k);
                if fast != slow {
                    disagreements.push(format!("{label}: augmentation {fast}, rotation search {slow}"));
                }
            }
            Err(e) => disagreements.push(format!("{label}: {e}")),
        }
    };
    for n in 1..=max_n {
        let names = generator_names(n);
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<_> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            let k = SimplicialComplex::flag_complex(&names, &edges).expect("valid graph");
            check(format!("flag complex {edges:?}"), &k);
        }
    }
    for (name, k) in curated_complexes() {
        check(name, &k);
    }
    CrossCheckReport { name: "2-complex planarity vs rotation search".into(), cases, disagreements }
}

fn complex(n: usize, faces: &[Vec<usize>]) -> SimplicialComplex {
    SimplicialComplex::from_faces(&generator_names(n), faces).expect("valid faces")
}

fn cycle_edges(n: usize, offset: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| vec![offset + i, offset + (i + 1) % n]).collect()
}

fn cone(apex: usize, base: &[Vec<usize>]) -> Vec<Vec<usize>> {
    base.iter().map(|f| {
        let mut g = f.clone();
        g.push(apex);
        g
    }).collect()
}

fn tetra_boundary(o: usize) -> Vec<Vec<usize>> {
    vec![vec![o, o + 1, o + 2], vec![o, o + 1, o + 3], vec![o, o + 2, o + 3], vec![o + 1, o + 2, o + 3]]
}

fn bipyramid_faces(n: usize) -> Vec<Vec<usize>> {
    let rim = cycle_edges(n, 0);
    let mut f = cone(n, &rim);
    f.extend(cone(n + 1, &rim));
    f
}

fn antiprism_faces(n: usize) -> Vec<Vec<usize>> {
    let mut f = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        f.push(vec![i, j, n + j]);
        f.push(vec![i, n + i, n + j]);
    }
    f
}

fn complete_graph(n: usize) -> Vec<Vec<usize>> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| vec![i, j])).collect()
}

/// Hand-picked 2-complexes, planar and not, within the oracle's size limit.
pub fn curated_complexes() -> Vec<(String, SimplicialComplex)> {
    let mut out: Vec<(String, SimplicialComplex)> = Vec::new();
    let mut add = |name: String, n: usize, faces: Vec<Vec<usize>>| out.push((name, complex(n, &faces)));
    add("boundary of the 3-simplex".into(), 4, tetra_boundary(0));
    add("solid 3-simplex".into(), 4, vec![vec![0, 1, 2, 3]]);
    add("3-page book".into(), 5, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]]);
    add("2-page book".into(), 4, vec![vec![0, 1, 2], vec![0, 1, 3]]);
    add("4-page book".into(), 6, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4], vec![0, 1, 5]]);
    let mut oct = Vec::new();
    for a in [0, 1] {
        for b in [2, 3] {
            for c in [4, 5] {
                oct.push(vec![a, b, c]);
            }
        }
    }
    add("octahedron".into(), 6, oct.clone());
    add("octahedron minus a triangle".into(), 6, oct[1..].to_vec());
    add("octahedron minus two opposite triangles".into(), 6, oct[1..7].to_vec());
    add("octahedron with a whisker".into(), 7, [oct.clone(), vec![vec![0, 6]]].concat());
    add("octahedron with an inner diagonal".into(), 6, [oct.clone(), vec![vec![0, 1]]].concat());
    for n in 4..=5 {
        add(format!("antiprism annulus {n}"), 2 * n, antiprism_faces(n));
    }
    add("antiprism annulus 4 with a whisker".into(), 9, [antiprism_faces(4), vec![vec![0, 8]]].concat());
    for n in 3..=10 {
        add(format!("hollow {n}-cycle"), n, cycle_edges(n, 0));
    }
    for n in 3..=9 {
        add(format!("disk: cone over a {n}-cycle"), n + 1, cone(n, &cycle_edges(n, 0)));
    }
    for n in 3..=8 {
        add(format!("bipyramid over a {n}-cycle"), n + 2, bipyramid_faces(n));
    }
    add("Moebius band on 5 vertices".into(), 5, (0..5).map(|i| vec![i, (i + 1) % 5, (i + 2) % 5]).collect());
    add("cone over the K4 graph".into(), 5, cone(4, &complete_graph(4)));
    add("disk with a whisker at its centre".into(), 6, [cone(4, &cycle_edges(4, 0)), vec![vec![4, 5]]].concat());
    add("disk with a whisker on its rim".into(), 6, [cone(4, &cycle_edges(4, 0)), vec![vec![0, 5]]].concat());
    add(
        "real projective plane on 6 vertices".into(),
        6,
        [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1], [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3]]
            .iter()
            .map(|f| f.to_vec())
            .collect(),
    );
    add(
        "torus on 7 vertices".into(),
        7,
        (0..7).flat_map(|i| [vec![i, (i + 1) % 7, (i + 3) % 7], vec![i, (i + 2) % 7, (i + 3) % 7]]).collect(),
    );
    add("two tetrahedron boundaries sharing a vertex".into(), 7, {
        let mut f = tetra_boundary(0);
        f.extend(tetra_boundary(3).into_iter().map(|t| t.into_iter().map(|v| if v == 3 { 0 } else { v }).collect()));
        f
    });
    add("two disjoint tetrahedron boundaries".into(), 8, [tetra_boundary(0), tetra_boundary(4)].concat());
    add("tetrahedron boundary and a point".into(), 5, tetra_boundary(0));
    add("bowtie".into(), 5, vec![vec![0, 1, 2], vec![0, 3, 4]]);
    add("three triangles at a vertex".into(), 7, vec![vec![0, 1, 2], vec![0, 3, 4], vec![0, 5, 6]]);
    add("strip of four triangles".into(), 6, vec![vec![0, 1, 2], vec![1, 2, 3], vec![2, 3, 4], vec![3, 4, 5]]);
    add("triangle with pendant edges".into(), 6, vec![vec![0, 1, 2], vec![0, 3], vec![1, 4], vec![2, 5]]);
    add("triangle and a disjoint edge".into(), 5, vec![vec![0, 1, 2], vec![3, 4]]);
    add("K4 graph".into(), 4, complete_graph(4));
    add("K5 graph".into(), 5, complete_graph(5));
    add("K3,3 graph".into(), 6, (0..3).flat_map(|i| (3..6).map(move |j| vec![i, j])).collect());
    add("star with five leaves".into(), 6, (1..6).map(|i| vec![0, i]).collect());
    add("path on seven vertices".into(), 7, (0..6).map(|i| vec![i, i + 1]).collect());
    add("triangular prism annulus".into(), 6, vec![
        vec![0, 1, 3], vec![1, 3, 4], vec![1, 2, 4], vec![2, 4, 5], vec![2, 0, 5], vec![0, 5, 3],
    ]);
    add("prism annulus with both ends capped".into(), 6, vec![
        vec![0, 1, 3], vec![1, 3, 4], vec![1, 2, 4], vec![2, 4, 5], vec![2, 0, 5], vec![0, 5, 3],
        vec![0, 1, 2], vec![3, 4, 5],
    ]);
    add("two disks glued along an edge and a vertex".into(), 6, vec![
        vec![0, 1, 2], vec![0, 1, 3], vec![2, 4, 5], vec![3, 4, 5],
    ]);
    add("isolated vertices".into(), 4, Vec::new());
    add("single vertex".into(), 1, Vec::new());
    add("disk plus a triangle sharing its centre".into(), 7, [cone(4, &cycle_edges(4, 0)), vec![vec![4, 5, 6]]].concat());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_known_values() {
        let graphs: Vec<usize> = (1..=6).map(|n| coloured_graph_classes(n, 2).len()).collect();
        assert_eq!(graphs, vec![1, 2, 4, 11, 34, 156]);
        // Complete graphs with 3 edge colours on 3 and 4 vertices.
        assert_eq!(coloured_graph_classes(3, 3).len(), 10);
        assert_eq!(coloured_graph_classes(4, 3).len(), 66);
    }

    #[test]
    fn small_crosschecks_pass() {
        assert!(classification_crosscheck(3).passed());
        assert!(racg_hyperbolicity_crosscheck(5).passed());
        assert!(curated_complexes().len() >= 50);
    }
}
