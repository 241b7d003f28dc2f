//! Recognition of finite and affine Coxeter groups from their diagrams.
//!
//! Each connected component of a diagram is matched, up to labelled graph
//! isomorphism, against the finite-type templates `A_n, B_n, D_n, E6, E7,
//! E8, F4, H3, H4, I2(m)` and the affine templates `~A_n, ~B_n, ~C_n, ~D_n,
//! ~E6, ~E7, ~E8, ~F4, ~G2`.

use std::sync::OnceLock;

use crate::coxeter::{CoxeterMatrix, Exponent, GenSet, MAX_GENERATORS};

/// Label code used for `m = inf` on diagram edges.
const INF: u32 = 0;

/// A labelled graph on `0..n`; diagram edges carry `m >= 3` or [`INF`].
#[derive(Clone, Debug)]
struct Diagram {
    n: usize,
    adj: Vec<Vec<(usize, u32)>>,
}

impl Diagram {
    fn from_edges(n: usize, edges: &[(usize, usize, u32)]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v, m) in edges {
            adj[u].push((v, m));
            adj[v].push((u, m));
        }
        Diagram { n, adj }
    }

    fn of_subset(m: &CoxeterMatrix, t: GenSet) -> Self {
        let idx = t.to_vec();
        let mut edges = Vec::new();
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate().skip(a + 1) {
                match m.m(i, j) {
                    Exponent::Finite(2) => {}
                    Exponent::Finite(k) => edges.push((a, b, k)),
                    Exponent::Infinite => edges.push((a, b, INF)),
                }
            }
        }
        Diagram::from_edges(idx.len(), &edges)
    }

    fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    fn label(&self, u: usize, v: usize) -> Option<u32> {
        self.adj[u].iter().find(|&&(w, _)| w == v).map(|&(_, m)| m)
    }

    fn signature(&self) -> (Vec<u32>, Vec<usize>) {
        let mut labels: Vec<u32> = self
            .adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&(v, _)| v > u).map(|&(_, m)| m))
            .collect();
        labels.sort_unstable();
        let mut degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        degrees.sort_unstable();
        (labels, degrees)
    }

    fn isomorphic(&self, other: &Diagram) -> bool {
        if self.n != other.n || self.signature() != other.signature() {
            return false;
        }
        let mut map = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        self.extend_iso(other, 0, &mut map, &mut used)
    }

    fn extend_iso(&self, o: &Diagram, u: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if u == self.n {
            return true;
        }
        for x in 0..o.n {
            if used[x] || self.adj[u].len() != o.adj[x].len() {
                continue;
            }
            let ok = (0..u).all(|w| self.label(u, w) == o.label(x, map[w]));
            if ok {
                map[u] = x;
                used[x] = true;
                if self.extend_iso(o, u + 1, map, used) {
                    return true;
                }
                used[x] = false;
            }
        }
        false
    }
}

struct Template {
    name: String,
    diagram: Diagram,
}

fn path(name: String, labels: &[u32]) -> Template {
    let edges: Vec<_> = labels.iter().enumerate().map(|(i, &m)| (i, i + 1, m)).collect();
    Template { name, diagram: Diagram::from_edges(labels.len() + 1, &edges) }
}

/// A center with simply laced arms of the given lengths.
fn star(name: String, arms: &[usize]) -> Template {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in arms {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next, 3));
            prev = next;
            next += 1;
        }
    }
    Template { name, diagram: Diagram::from_edges(next, &edges) }
}

fn finite_templates_of_rank(n: usize) -> Vec<Template> {
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    out.push(path(format!("A{n}"), &vec![3; n - 1]));
    let mut b = vec![3; n - 1];
    b[n - 2] = 4;
    out.push(path(format!("B{n}"), &b));
    if n >= 4 {
        out.push(star(format!("D{n}"), &[1, 1, n - 3]));
    }
    match n {
        3 => out.push(path("H3".into(), &[5, 3])),
        4 => {
            out.push(path("F4".into(), &[3, 4, 3]));
            out.push(path("H4".into(), &[5, 3, 3]));
        }
        6 => out.push(star("E6".into(), &[1, 2, 2])),
        7 => out.push(star("E7".into(), &[1, 2, 3])),
        8 => out.push(star("E8".into(), &[1, 2, 4])),
        _ => {}
    }
    out
}

/// Affine templates with `n` nodes (the affine type has rank `n - 1`).
fn affine_templates_of_size(n: usize) -> Vec<Template> {
    let mut out = Vec::new();
    if n == 2 {
        out.push(path("~A1".into(), &[INF]));
        return out;
    }
    if n < 3 {
        return out;
    }
    let r = n - 1;
    let cycle: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, 3)).collect();
    out.push(Template { name: format!("~A{r}"), diagram: Diagram::from_edges(n, &cycle) });
    let mut c = vec![3; n - 1];
    c[0] = 4;
    c[n - 2] = 4;
    out.push(path(format!("~C{r}"), &c));
    if n >= 4 {
        // Fork x1, x2 on p0, then the path p0..p_{n-3} ending in a 4.
        let mut edges = vec![(0, 2, 3), (1, 2, 3)];
        for i in 2..n - 1 {
            edges.push((i, i + 1, if i + 1 == n - 1 { 4 } else { 3 }));
        }
        out.push(Template { name: format!("~B{r}"), diagram: Diagram::from_edges(n, &edges) });
    }
    if n >= 5 {
        // Path p0..p_k with two leaves on each end (one center when k = 0).
        let k = n - 5;
        let mut edges: Vec<_> = (0..k).map(|i| (i, i + 1, 3)).collect();
        edges.extend([(0, k + 1, 3), (0, k + 2, 3), (k, k + 3, 3), (k, k + 4, 3)]);
        out.push(Template { name: format!("~D{r}"), diagram: Diagram::from_edges(n, &edges) });
    }
    match n {
        3 => out.push(path("~G2".into(), &[3, 6])),
        5 => out.push(path("~F4".into(), &[3, 3, 4, 3])),
        7 => out.push(star("~E6".into(), &[2, 2, 2])),
        8 => out.push(star("~E7".into(), &[1, 3, 3])),
        9 => out.push(star("~E8".into(), &[1, 2, 5])),
        _ => {}
    }
    out
}

struct Tables {
    finite: Vec<Vec<Template>>,
    affine: Vec<Vec<Template>>,
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| Tables {
        finite: (0..=MAX_GENERATORS).map(finite_templates_of_rank).collect(),
        affine: (0..=MAX_GENERATORS).map(affine_templates_of_size).collect(),
    })
}

/// Connected components of the diagram on `t` (edges: pairs with `m != 2`),
/// ordered by least element.
pub fn diagram_components(m: &CoxeterMatrix, t: GenSet) -> Vec<GenSet> {
    let mut rest = t;
    let mut out = Vec::new();
    while let Some(start) = rest.first() {
        let mut comp = GenSet::singleton(start);
        let mut frontier = comp;
        while let Some(u) = frontier.first() {
            frontier = frontier.without(u);
            for v in rest.difference(comp).iter() {
                if m.m(u, v).is_diagram_edge() {
                    comp = comp.with(v);
                    frontier = frontier.with(v);
                }
            }
        }
        rest = rest.difference(comp);
        out.push(comp);
    }
    out
}

/// Finite-type name of a connected diagram subset, if any.
fn connected_finite_type(m: &CoxeterMatrix, c: GenSet) -> Option<String> {
    let n = c.len();
    if n == 1 {
        return Some("A1".into());
    }
    if n == 2 {
        let v = c.to_vec();
        return match m.m(v[0], v[1]) {
            Exponent::Finite(3) => Some("A2".into()),
            Exponent::Finite(4) => Some("B2".into()),
            Exponent::Finite(6) => Some("G2".into()),
            Exponent::Finite(k) => Some(format!("I2({k})")),
            Exponent::Infinite => None,
        };
    }
    let d = Diagram::of_subset(m, c);
    if d.edge_count() != n - 1 {
        return None;
    }
    tables().finite[n]
        .iter()
        .find(|t| d.isomorphic(&t.diagram))
        .map(|t| t.name.clone())
}

fn connected_affine_type(m: &CoxeterMatrix, c: GenSet) -> Option<String> {
    let n = c.len();
    if n > MAX_GENERATORS {
        return None;
    }
    let d = Diagram::of_subset(m, c);
    tables().affine[n]
        .iter()
        .find(|t| d.isomorphic(&t.diagram))
        .map(|t| t.name.clone())
}

pub fn is_finite(m: &CoxeterMatrix, t: GenSet) -> bool {
    diagram_components(m, t)
        .into_iter()
        .all(|c| connected_finite_type(m, c).is_some())
}

/// The type of a finite `W_T` as a product such as `"A3 x B2"`.
pub fn finite_type_name(m: &CoxeterMatrix, t: GenSet) -> Option<String> {
    if t.is_empty() {
        return Some("trivial".into());
    }
    let names: Option<Vec<String>> = diagram_components(m, t)
        .into_iter()
        .map(|c| connected_finite_type(m, c))
        .collect();
    names.map(|v| v.join(" x "))
}

/// True iff `t` is connected in the diagram and of affine type, including
/// `~A1` (a pair with `m = inf`).
pub fn is_affine_irreducible(m: &CoxeterMatrix, t: GenSet) -> bool {
    affine_type_name(m, t).is_some()
}

pub fn affine_type_name(m: &CoxeterMatrix, t: GenSet) -> Option<String> {
    if t.len() < 2 || diagram_components(m, t).len() != 1 {
        return None;
    }
    connected_affine_type(m, t)
}
