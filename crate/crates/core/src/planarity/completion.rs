//! Extending a planar labelled complex to a triangulated 2-sphere in which it
//! sits as a full subcomplex, flag relative to it.
//!
//! The complex is embedded through its wheel augmentation. Every region of
//! the complement is then filled with new vertices only: a region bounded by
//! a chordless simple cycle gets a cone point, any other region first gets a
//! collar (one new vertex per boundary edge and per corner) and then a cone
//! point over the collar's inner ring. Disconnected complexes are first
//! joined by paths through new vertices so that every region has a single
//! boundary walk.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use super::{lr, wheel_augmentation, Augmentation, PlanarityError};
use crate::complex::{maximal_cliques, LabelledNerve, SimplicialComplex, Vertex};
use crate::topology::is_sphere_triangulation;

/// True iff every clique `T` of the 1-skeleton of `n` with `T ∩ a` a face
/// is itself a face of `n`.
pub fn is_flag_relative_to(n: &SimplicialComplex, a: &[Vertex]) -> bool {
    let inside: HashSet<Vertex> = a.iter().copied().collect();
    let adj: Vec<Vec<Vertex>> = (0..n.vertex_count()).map(|v| n.neighbors(v).to_vec()).collect();
    for clique in maximal_cliques(&adj) {
        if n.is_face(&clique) {
            continue;
        }
        let k = clique.len();
        // Subsets of a face are faces, so only non-faces need a look.
        for bits in 1u64..1 << k {
            let t: Vec<Vertex> = (0..k).filter(|i| bits >> i & 1 == 1).map(|i| clique[i]).collect();
            if n.is_face(&t) {
                continue;
            }
            let meet: Vec<Vertex> = t.iter().copied().filter(|v| inside.contains(v)).collect();
            if n.is_face(&meet) {
                return false;
            }
        }
    }
    true
}

/// Builds a labelled triangulation `N` of the sphere whose first vertices
/// are those of `l`, in order, with `l` full in `N`, `N` flag relative to
/// `l` and every new edge labelled 2. The result is verified before it is
/// returned.
pub fn sphere_completion(l: &LabelledNerve) -> Result<LabelledNerve, PlanarityError> {
    if is_sphere_triangulation(l) {
        return Err(PlanarityError::AlreadySphere);
    }
    if !super::is_planar_by_augmentation(l) {
        return Err(PlanarityError::Nonplanar);
    }
    let n = l.vertex_count();
    let mut b = Builder { next: n, triangles: Vec::new() };
    if n == 1 {
        // A lone vertex: suspend a new square from it and a new cone point.
        let ring: Vec<usize> = (0..4).map(|_| b.fresh()).collect();
        let z = b.fresh();
        for i in 0..4 {
            b.triangles.push([0, ring[i], ring[(i + 1) % 4]]);
            b.triangles.push([z, ring[i], ring[(i + 1) % 4]]);
        }
        return finish(l, b);
    }
    let aug = wheel_augmentation(l);
    let mut rotation = lr::planar_embedding(&aug.adj).ok_or(PlanarityError::Nonplanar)?.rotation;
    repair_wedges(&aug, &mut rotation)?;
    let (mut rot, filled) = skeleton_rotation(&aug, &rotation);
    join_components(l, &mut rot, &filled, &mut b)?;
    let faces = trace(&rot);
    for walk in faces {
        let k = walk.len();
        let corner_filled =
            |i: usize| filled.contains(&(walk[i], walk[(i + k - 1) % k], walk[(i + 1) % k]));
        let count = (0..k).filter(|&i| corner_filled(i)).count();
        if count == k && k == 3 {
            continue;
        }
        if count != 0 {
            return Err(PlanarityError::VerificationFailed(format!(
                "face {walk:?} is partly inside a triangle"
            )));
        }
        if direct_cone_ok(l, &walk) {
            let z = b.fresh();
            for i in 0..k {
                b.triangles.push([z, walk[i], walk[(i + 1) % k]]);
            }
        } else {
            b.collar_and_cone(&walk);
        }
    }
    finish(l, b)
}

struct Builder {
    next: usize,
    triangles: Vec<[usize; 3]>,
}

impl Builder {
    fn fresh(&mut self) -> usize {
        self.next += 1;
        self.next - 1
    }

    /// Triangles between the walk `w` and a ring `q0 p0 q1 p1 ...` of new
    /// vertices, then a cone over the ring.
    fn collar_and_cone(&mut self, w: &[usize]) {
        let k = w.len();
        let p: Vec<usize> = (0..k).map(|_| self.fresh()).collect();
        let q: Vec<usize> = (0..k).map(|_| self.fresh()).collect();
        let z = self.fresh();
        for i in 0..k {
            let next = (i + 1) % k;
            let prev = (i + k - 1) % k;
            self.triangles.push([w[i], w[next], p[i]]);
            self.triangles.push([w[i], p[prev], q[i]]);
            self.triangles.push([w[i], q[i], p[i]]);
            self.triangles.push([z, q[i], p[i]]);
            self.triangles.push([z, p[i], q[next]]);
        }
    }
}

/// A region may be coned directly when its boundary is a simple cycle of
/// original vertices with no chord in `l`, and a 3-cycle bounds no triangle.
fn direct_cone_ok(l: &LabelledNerve, walk: &[usize]) -> bool {
    let k = walk.len();
    let n = l.vertex_count();
    if k < 3 || walk.iter().any(|&v| v >= n) {
        return false;
    }
    let distinct: BTreeSet<usize> = walk.iter().copied().collect();
    if distinct.len() != k {
        return false;
    }
    if k == 3 {
        return !l.is_face(walk);
    }
    (0..k).all(|i| (i + 2..k).all(|j| (i == 0 && j == k - 1) || !l.adjacent(walk[i], walk[j])))
}

/// Moves anything embedded inside a wheel wedge at an original vertex out to
/// a gap between two edges. Blocks hanging off a cut vertex can sit in any
/// corner at it, so each block of the rotation is cut open at a non-wedge gap
/// and the blocks are laid side by side.
fn repair_wedges(aug: &Augmentation, rotation: &mut [Vec<usize>]) -> Result<(), PlanarityError> {
    for a in 0..aug.base {
        if rotation[a].len() <= 1 {
            continue;
        }
        let comp = components_without(&aug.adj, a);
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut group_of: HashMap<usize, usize> = HashMap::new();
        for &x in &rotation[a] {
            let g = *group_of.entry(comp[x]).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[g].push(x);
        }
        if groups.len() == 1 {
            continue;
        }
        let mut out = Vec::with_capacity(rotation[a].len());
        for g in &groups {
            let len = g.len();
            let start = (0..len)
                .find(|&j| !aug.is_apex(g[(j + len - 1) % len]) && !aug.is_apex(g[j]))
                .ok_or_else(|| {
                    PlanarityError::VerificationFailed(format!("no free corner at vertex {a}"))
                })?;
            out.extend((0..len).map(|i| g[(start + i) % len]));
        }
        rotation[a] = out;
    }
    if !lr::is_spherical_rotation(&aug.adj, rotation) {
        return Err(PlanarityError::VerificationFailed("wedge repair broke the embedding".into()));
    }
    Ok(())
}

/// Component index of every vertex of `adj` with `removed` deleted.
fn components_without(adj: &[Vec<usize>], removed: usize) -> Vec<usize> {
    let mut comp = vec![usize::MAX; adj.len()];
    let mut count = 0;
    for s in 0..adj.len() {
        if s == removed || comp[s] != usize::MAX {
            continue;
        }
        comp[s] = count;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if w != removed && comp[w] == usize::MAX {
                    comp[w] = count;
                    queue.push_back(w);
                }
            }
        }
        count += 1;
    }
    comp
}

/// Rotation of the original 1-skeleton read off the augmented rotation, and
/// the corners `(v, x, y)` (with `y` right after `x` at `v`) that lie inside
/// a triangle.
fn skeleton_rotation(
    aug: &Augmentation,
    rotation: &[Vec<usize>],
) -> (Vec<Vec<usize>>, HashSet<(usize, usize, usize)>) {
    let mut endpoints: HashMap<usize, (usize, usize)> = HashMap::new();
    for (&e, &s) in &aug.subdivision {
        endpoints.insert(s, e);
    }
    let mut rot = vec![Vec::new(); aug.base];
    let mut filled = HashSet::new();
    for a in 0..aug.base {
        let r = &rotation[a];
        let Some(first) = r.iter().position(|&x| !aug.is_apex(x)) else {
            continue;
        };
        let mut pending_apex = false;
        let mut gaps = Vec::new();
        for i in 0..r.len() {
            let x = r[(first + i) % r.len()];
            if aug.is_apex(x) {
                pending_apex = true;
                continue;
            }
            let (u, v) = endpoints[&x];
            if !rot[a].is_empty() {
                gaps.push(pending_apex);
            }
            rot[a].push(if u == a { v } else { u });
            pending_apex = false;
        }
        gaps.push(pending_apex);
        let d = rot[a].len();
        for (i, &g) in gaps.iter().enumerate() {
            if g {
                filled.insert((a, rot[a][i], rot[a][(i + 1) % d]));
            }
        }
    }
    (rot, filled)
}

/// Faces of a rotation system as vertex walks: dart `(u, v)` is followed by
/// `(v, w)` with `w` right after `u` at `v`.
fn trace(rot: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let pos: Vec<HashMap<usize, usize>> =
        rot.iter().map(|r| r.iter().enumerate().map(|(i, &w)| (w, i)).collect()).collect();
    let mut used = HashSet::new();
    let mut faces = Vec::new();
    for u in 0..rot.len() {
        for &v in &rot[u] {
            if used.contains(&(u, v)) {
                continue;
            }
            let mut walk = Vec::new();
            let (mut a, mut b) = (u, v);
            while used.insert((a, b)) {
                walk.push(a);
                let r = &rot[b];
                let c = r[(pos[b][&a] + 1) % r.len()];
                a = b;
                b = c;
            }
            faces.push(walk);
        }
    }
    faces
}

/// Joins every component to the first one by a path through one new vertex,
/// drawn inside a region of each.
fn join_components(
    l: &LabelledNerve,
    rot: &mut Vec<Vec<usize>>,
    filled: &HashSet<(usize, usize, usize)>,
    b: &mut Builder,
) -> Result<(), PlanarityError> {
    let comps = l.components();
    if comps.len() == 1 {
        return Ok(());
    }
    let faces = trace(rot);
    // A free corner of each component: (vertex, entry to insert after).
    let corner = |comp: &[usize]| -> Result<(usize, Option<usize>), PlanarityError> {
        if comp.len() == 1 && rot[comp[0]].is_empty() {
            return Ok((comp[0], None));
        }
        for walk in &faces {
            if !comp.contains(&walk[0]) {
                continue;
            }
            let k = walk.len();
            for i in 0..k {
                let (x, v, y) = (walk[(i + k - 1) % k], walk[i], walk[(i + 1) % k]);
                if !filled.contains(&(v, x, y)) {
                    return Ok((v, Some(x)));
                }
            }
        }
        Err(PlanarityError::Nonplanar)
    };
    let (u, after_u) = corner(&comps[0])?;
    let mut spokes = Vec::new();
    let mut links = Vec::new();
    for comp in &comps[1..] {
        let (v, after_v) = corner(comp)?;
        let c = b.fresh();
        spokes.push(c);
        links.push((c, v, after_v));
    }
    rot.resize(b.next, Vec::new());
    insert_after(&mut rot[u], after_u, &spokes);
    for (c, v, after_v) in links {
        insert_after(&mut rot[v], after_v, &[c]);
        rot[c] = vec![u, v];
    }
    Ok(())
}

fn insert_after(r: &mut Vec<usize>, after: Option<usize>, items: &[usize]) {
    let at = match after {
        Some(x) => r.iter().position(|&y| y == x).expect("corner entry") + 1,
        None => r.len(),
    };
    r.splice(at..at, items.iter().copied());
}

fn finish(l: &LabelledNerve, b: Builder) -> Result<LabelledNerve, PlanarityError> {
    let n = l.vertex_count();
    let taken: HashSet<&str> = l.names().iter().map(String::as_str).collect();
    let mut names: Vec<String> = l.names().to_vec();
    let mut counter = 0usize;
    while names.len() < b.next {
        counter += 1;
        let candidate = format!("n{counter}");
        if !taken.contains(candidate.as_str()) {
            names.push(candidate);
        }
    }
    let mut faces: Vec<Vec<usize>> = l.maximal_faces().to_vec();
    faces.extend(b.triangles.iter().map(|t| t.to_vec()));
    let complex = SimplicialComplex::from_faces(&names, &faces)
        .map_err(|e| PlanarityError::VerificationFailed(e.to_string()))?;
    let labels: Vec<_> = complex
        .edges()
        .into_iter()
        .map(|(u, v)| ((u, v), if v < n { l.label(u, v).unwrap_or(2) } else { 2 }))
        .collect();
    let out = LabelledNerve::new(complex, labels)
        .map_err(|e| PlanarityError::VerificationFailed(e.to_string()))?;
    verify(l, &out).map_err(PlanarityError::VerificationFailed)?;
    Ok(out)
}

/// All four postconditions of a completion.
pub(crate) fn verify(l: &LabelledNerve, out: &LabelledNerve) -> Result<(), String> {
    let n = l.vertex_count();
    if out.names()[..n] != l.names()[..] {
        return Err("original vertices are not first".into());
    }
    if !is_sphere_triangulation(out) {
        return Err("not a triangulated sphere".into());
    }
    let old: Vec<usize> = (0..n).collect();
    let restricted = out.complex().full_subcomplex(&old).map_err(|e| e.to_string())?;
    if restricted != *l.complex() {
        return Err("the original complex is not full".into());
    }
    if !is_flag_relative_to(out, &old) {
        return Err("not flag relative to the original complex".into());
    }
    for (&(u, v), &m) in out.labels() {
        let want = if v < n { l.label(u, v) } else { Some(2) };
        if want != Some(m) {
            return Err(format!("edge {u}-{v} has label {m}"));
        }
    }
    Ok(())
}
