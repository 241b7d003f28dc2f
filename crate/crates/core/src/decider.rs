//! The boundary classification: is the Gromov boundary of `W` the
//! Sierpinski carpet, and if not, what rules it out.
//!
//! Stages run in order, each guarding the hypotheses of the next: simplex,
//! planarity, 2-sphere, hyperbolicity, circle, labelled wheel,
//! unseparability. The first failing stage decides the verdict and its
//! witnesses.

use serde::{Deserialize, Serialize};

use crate::complex::{LabelledNerve, Vertex};
use crate::coxeter::{CoxeterError, CoxeterMatrix};
use crate::hyperbolicity::{has_empty_square, is_hyperbolic, HyperbolicityWitness};
use crate::nerve::nerve;
use crate::planarity::is_planar_complex;
use crate::separation::{is_unseparable, SeparationKind, SeparationWitness};
use crate::topology::{
    is_circle_triangulation, is_simplex, is_sphere_triangulation, labelled_wheel_apex,
    two_torsion_deletions, vcd,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Boundary {
    SierpinskiCarpet,
    Circle,
    Sphere,
    Empty,
    NotCarpet,
    OutOfScope,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Mode {
    /// Right-angled systems, hyperbolicity read off empty squares.
    Theorem1,
    /// General systems, hyperbolicity by Moussong's criterion.
    Theorem2,
    /// Skips the hyperbolicity hypothesis; such verdicts are marked.
    Conjectural,
}

/// Evidence for a verdict, in generator names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Witness {
    NerveIsSimplex { vertices: Vec<String> },
    Nonplanar { reason: String },
    SphereTriangulation { vertices: usize, triangles: usize },
    AffineSubset { generators: Vec<String> },
    ProductOfInfinites { left: Vec<String>, right: Vec<String> },
    EmptySquare { vertices: Vec<String> },
    CircleTriangulation { cycle: Vec<String> },
    LabelledWheel { apex: String, rim: Vec<String> },
    Disconnected { components: Vec<Vec<String>> },
    Simplex { removed: Vec<String>, components: Vec<Vec<String>> },
    NonadjacentPair { removed: Vec<String>, components: Vec<Vec<String>> },
    LabelledSuspension {
        poles: Vec<String>,
        base: Vec<String>,
        removed: Vec<String>,
        components: Vec<Vec<String>>,
    },
}

/// Per-stage findings. `None` means the stage was not evaluated.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub hyperbolic: Option<bool>,
    pub nerve_planar: Option<bool>,
    /// Connected with no separating simplex: `W` is one-ended.
    pub connected_1ended: Option<bool>,
    /// The nerve is planar, so the boundary embeds in the sphere.
    pub boundary_planar: Option<bool>,
    /// vcd is 2, so the boundary has dimension 1.
    pub dim_one: Option<bool>,
    pub unseparable: Option<bool>,
    pub wheel: Option<bool>,
    pub simplex: Option<bool>,
    pub circle_tri: Option<bool>,
    pub sphere_tri: Option<bool>,
    pub vcd: Option<usize>,
    /// Some deletion of the nerve has 2-torsion, where rational cohomology
    /// may under-report vcd.
    pub torsion_flag: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub boundary: Boundary,
    pub mode: Mode,
    /// The verdict relies on skipping the hyperbolicity hypothesis.
    pub conjectural: bool,
    pub witnesses: Vec<Witness>,
    pub diagnostics: Diagnostics,
    pub notes: Vec<String>,
}

fn names(l: &LabelledNerve, vs: &[Vertex]) -> Vec<String> {
    vs.iter().map(|&v| l.name(v).to_owned()).collect()
}

fn separation_witness(l: &LabelledNerve, w: &SeparationWitness) -> Witness {
    let removed = names(l, &w.removed);
    let components = w.components.iter().map(|c| names(l, c)).collect();
    match w.kind {
        SeparationKind::Disconnected => Witness::Disconnected { components },
        SeparationKind::Simplex => Witness::Simplex { removed, components },
        SeparationKind::NonadjacentPair => Witness::NonadjacentPair { removed, components },
        SeparationKind::LabelledSuspension => {
            let s = w.suspension.as_ref().expect("suspension witnesses carry their suspension");
            Witness::LabelledSuspension {
                poles: names(l, &[s.poles.0, s.poles.1]),
                base: names(l, &s.base),
                removed,
                components,
            }
        }
    }
}

/// Walks a cycle graph from its first vertex.
fn cycle_order(l: &LabelledNerve, vertices: &[Vertex]) -> Vec<Vertex> {
    let mut order = vec![vertices[0]];
    let mut prev = usize::MAX;
    let mut cur = vertices[0];
    loop {
        let next = l
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev && vertices.contains(&w))
            .expect("cycle vertices have two neighbours");
        if next == vertices[0] {
            break;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

fn hyperbolicity_witness(m: &CoxeterMatrix, l: &LabelledNerve, w: HyperbolicityWitness) -> Witness {
    match w {
        HyperbolicityWitness::AffineSubset(t) => Witness::AffineSubset { generators: m.names(t) },
        HyperbolicityWitness::ProductOfInfinites(a, b) => {
            Witness::ProductOfInfinites { left: m.names(a), right: m.names(b) }
        }
        HyperbolicityWitness::EmptySquare(c) => Witness::EmptySquare { vertices: names(l, &c) },
    }
}

/// Hyperbolicity and a witness against it. Right-angled systems use empty
/// squares, cross-checked against the general criterion.
fn hyperbolicity(m: &CoxeterMatrix, l: &LabelledNerve) -> (bool, Option<Witness>) {
    let (h, w) = is_hyperbolic(m);
    if m.is_right_angled() {
        let square = has_empty_square(l).expect("right-angled nerves carry label 2 only");
        assert_eq!(h, square.is_none(), "empty-square test disagrees with the general criterion");
        return (h, square.map(|c| Witness::EmptySquare { vertices: names(l, &c) }));
    }
    (h, w.map(|w| hyperbolicity_witness(m, l, w)))
}

pub fn classify_boundary(m: &CoxeterMatrix, mode: Mode) -> Verdict {
    let l = nerve(m);
    let mut d = Diagnostics::default();
    let mut notes = Vec::new();
    let verdict = |boundary, witnesses, d: Diagnostics, notes: Vec<String>, conjectural| Verdict {
        boundary,
        mode,
        conjectural,
        witnesses,
        diagnostics: d,
        notes,
    };
    let all: Vec<Vertex> = (0..l.vertex_count()).collect();

    let simplex = is_simplex(&l);
    d.simplex = Some(simplex);
    let (hyperbolic, hyp_witness) = hyperbolicity(m, &l);
    d.hyperbolic = Some(hyperbolic);
    if simplex {
        d.vcd = Some(0);
        notes.push("W is finite".into());
        return verdict(Boundary::Empty, vec![Witness::NerveIsSimplex { vertices: names(&l, &all) }], d, notes, false);
    }

    let planar = is_planar_complex(&l);
    d.nerve_planar = Some(planar);
    d.boundary_planar = Some(planar);
    if !planar {
        let reason = if l.dimension() >= 3 {
            format!("the nerve has dimension {}", l.dimension())
        } else {
            "the nerve does not embed in the 2-sphere".to_owned()
        };
        return verdict(Boundary::OutOfScope, vec![Witness::Nonplanar { reason }], d, notes, false);
    }

    let (unseparable, sep) = is_unseparable(&l);
    d.unseparable = Some(unseparable);
    d.connected_1ended = Some(matches!(
        &sep,
        None | Some(SeparationWitness { kind: SeparationKind::NonadjacentPair | SeparationKind::LabelledSuspension, .. })
    ));
    let v = vcd(&l);
    d.vcd = Some(v);
    d.dim_one = Some(v == 2);
    d.torsion_flag = Some(!two_torsion_deletions(&l).is_empty());
    let sphere = is_sphere_triangulation(&l);
    let circle = is_circle_triangulation(&l);
    let apex = labelled_wheel_apex(&l);
    d.sphere_tri = Some(sphere);
    d.circle_tri = Some(circle);
    d.wheel = Some(apex.is_some());

    if sphere {
        let mut witnesses = vec![Witness::SphereTriangulation {
            vertices: l.vertex_count(),
            triangles: l.faces_of_dim(2).len(),
        }];
        if !hyperbolic {
            notes.push("W is not hyperbolic; the sphere is the visual boundary of the Davis complex".into());
            witnesses.extend(hyp_witness);
        }
        return verdict(Boundary::Sphere, witnesses, d, notes, false);
    }

    let conjectural = !hyperbolic && mode == Mode::Conjectural;
    if !hyperbolic {
        if mode != Mode::Conjectural {
            return verdict(Boundary::OutOfScope, hyp_witness.into_iter().collect(), d, notes, false);
        }
        notes.push("W is not hyperbolic; this verdict assumes the conjectural extension".into());
    }

    if circle {
        let cycle = cycle_order(&l, &all);
        return verdict(Boundary::Circle, vec![Witness::CircleTriangulation { cycle: names(&l, &cycle) }], d, notes, conjectural);
    }
    if let Some(c) = apex {
        let rim: Vec<Vertex> = all.iter().copied().filter(|&v| v != c).collect();
        let rim = cycle_order(&l, &rim);
        let w = Witness::LabelledWheel { apex: l.name(c).to_owned(), rim: names(&l, &rim) };
        return verdict(Boundary::Circle, vec![w], d, notes, conjectural);
    }
    match sep {
        None => {
            assert!(!sphere && !circle && apex.is_none() && planar && unseparable);
            verdict(Boundary::SierpinskiCarpet, Vec::new(), d, notes, conjectural)
        }
        Some(w) => {
            debug_assert!(w.verify(&l));
            verdict(Boundary::NotCarpet, vec![separation_witness(&l, &w)], d, notes, conjectural)
        }
    }
}

/// The right-angled system of a graph, classified in right-angled mode.
pub fn theorem1_racg<S: AsRef<str>>(
    names: &[S],
    edges: &[(usize, usize)],
) -> Result<Verdict, CoxeterError> {
    let m = CoxeterMatrix::right_angled(names, edges)?;
    let mut v = classify_boundary(&m, Mode::Theorem2);
    v.mode = Mode::Theorem1;
    // Under the right-angled hypotheses the excluded forms cannot occur.
    let d = &v.diagnostics;
    if d.hyperbolic == Some(true) && d.unseparable == Some(true) && d.simplex == Some(false) {
        assert_eq!(d.circle_tri, Some(false));
        assert_eq!(d.wheel, Some(false));
    }
    Ok(v)
}
