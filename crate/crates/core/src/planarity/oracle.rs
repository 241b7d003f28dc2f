//! Exhaustive rotation-system search: an independent planarity check for
//! small 2-complexes.

use crate::complex::SimplicialComplex;

use super::PlanarityError;

/// Largest vertex count the exhaustive search accepts.
pub const ORACLE_MAX_VERTICES: usize = 10;

/// True iff `k` embeds in the sphere: some rotation system of the 1-skeleton
/// has genus 0 on every component and traces every 2-face as a face.
pub fn planarity_oracle_small(k: &SimplicialComplex) -> Result<bool, PlanarityError> {
    let n = k.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(PlanarityError::TooLarge { vertices: n, limit: ORACLE_MAX_VERTICES });
    }
    Ok(rotation_search(k))
}

/// [`planarity_oracle_small`] without the size guard. Exponential in the
/// vertex degrees; meant for sparse complexes such as triangulated
/// surfaces, where triangle partners pin down most rotations.
pub fn rotation_search(k: &SimplicialComplex) -> bool {
    if k.dimension() >= 3 {
        return false;
    }
    let triangles = k.faces_of_dim(2);
    for comp in k.components() {
        let tris: Vec<[usize; 3]> = triangles
            .iter()
            .filter(|t| comp.contains(&t[0]))
            .map(|t| {
                let idx = |v: usize| comp.iter().position(|&c| c == v).expect("same component");
                [idx(t[0]), idx(t[1]), idx(t[2])]
            })
            .collect();
        let adj: Vec<Vec<usize>> = comp
            .iter()
            .map(|&v| {
                k.neighbors(v)
                    .iter()
                    .map(|w| comp.iter().position(|c| c == w).expect("same component"))
                    .collect()
            })
            .collect();
        if !component_planar(&adj, &tris) {
            return false;
        }
    }
    true
}

fn girth(adj: &[Vec<usize>]) -> Option<usize> {
    let n = adj.len();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let c = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(c, |b| b.min(c)));
                }
            }
        }
    }
    best
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    order: Vec<usize>,
    choices: Vec<Vec<Vec<usize>>>,
    /// `rot_pos[v][w]`: position of `w` in the chosen rotation at `v`.
    rot_pos: Vec<Vec<usize>>,
    rotation: Vec<Vec<usize>>,
    assigned: Vec<bool>,
    darts: usize,
    faces_needed: usize,
    min_face: usize,
    triangles: &'a [[usize; 3]],
}

fn component_planar(adj: &[Vec<usize>], triangles: &[[usize; 3]]) -> bool {
    let v = adj.len();
    let e = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if v <= 2 {
        return true;
    }
    if e > 3 * v - 6 {
        return false;
    }
    let Some(g) = girth(adj) else {
        // A tree: one face, no triangles.
        return true;
    };
    let faces_needed = e + 2 - v;
    // Triangle partners at each vertex must be cyclically adjacent.
    let mut partners: Vec<Vec<(usize, usize)>> = vec![Vec::new(); v];
    for t in triangles {
        for i in 0..3 {
            partners[t[i]].push((t[(i + 1) % 3], t[(i + 2) % 3]));
        }
    }
    let mut choices = Vec::with_capacity(v);
    for x in 0..v {
        let c = cyclic_orders(&adj[x], &partners[x]);
        if c.is_empty() {
            return false;
        }
        choices.push(c);
    }
    // BFS order closes faces early.
    let mut order = vec![0];
    let mut seen = vec![false; v];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        i += 1;
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
    }
    let mut s = Search {
        adj,
        order,
        choices,
        rot_pos: vec![vec![usize::MAX; v]; v],
        rotation: vec![Vec::new(); v],
        assigned: vec![false; v],
        darts: 2 * e,
        faces_needed,
        min_face: g,
        triangles,
    };
    s.go(0)
}

/// Cyclic orders of `nbrs` (first element fixed) in which every partner
/// pair is adjacent.
fn cyclic_orders(nbrs: &[usize], pairs: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let d = nbrs.len();
    if d <= 1 {
        return vec![nbrs.to_vec()];
    }
    let linked = |a: usize, b: usize| pairs.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a));
    let mut out = Vec::new();
    let mut cur = vec![nbrs[0]];
    let mut used = vec![false; d];
    used[0] = true;
    fn rec(
        nbrs: &[usize],
        cur: &mut Vec<usize>,
        used: &mut [bool],
        linked: &dyn Fn(usize, usize) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        let d = nbrs.len();
        let k = cur.len();
        if k == d {
            out.push(cur.clone());
            return;
        }
        for i in 0..d {
            if used[i] {
                continue;
            }
            let x = nbrs[i];
            // x goes to position k; any placed partner must sit at k-1, or
            // at 0 when k closes the cycle.
            let ok = cur.iter().enumerate().all(|(p, &y)| {
                !linked(x, y) || p + 1 == k || (p == 0 && k == d - 1)
            });
            if !ok {
                continue;
            }
            used[i] = true;
            cur.push(x);
            rec(nbrs, cur, used, linked, out);
            cur.pop();
            used[i] = false;
        }
    }
    rec(nbrs, &mut cur, &mut used, &linked, &mut out);
    // Partner pairs must also be adjacent when both were placed before the
    // last position; recheck whole cycles.
    out.retain(|r| {
        pairs.iter().all(|&(a, b)| {
            let pa = r.iter().position(|&x| x == a);
            let pb = r.iter().position(|&x| x == b);
            match (pa, pb) {
                (Some(i), Some(j)) => (i + 1) % d == j || (j + 1) % d == i,
                _ => false,
            }
        })
    });
    out
}

impl Search<'_> {
    fn set(&mut self, v: usize, rot: &[usize]) {
        self.rotation[v] = rot.to_vec();
        for (i, &w) in rot.iter().enumerate() {
            self.rot_pos[v][w] = i;
        }
        self.assigned[v] = true;
    }

    fn succ(&self, v: usize, u: usize) -> usize {
        let r = &self.rotation[v];
        r[(self.rot_pos[v][u] + 1) % r.len()]
    }

    /// Closed faces so far and the darts they use.
    fn closed_faces(&self) -> (usize, usize, Vec<Vec<usize>>) {
        let n = self.adj.len();
        let mut done = vec![vec![false; n]; n];
        let mut faces = 0;
        let mut used = 0;
        let mut walks = Vec::new();
        for a in 0..n {
            for &b in &self.adj[a] {
                if done[a][b] {
                    continue;
                }
                let mut walk = vec![];
                let (mut x, mut y) = (a, b);
                let closed = loop {
                    if done[x][y] {
                        break false;
                    }
                    walk.push((x, y));
                    if !self.assigned[y] {
                        break false;
                    }
                    let z = self.succ(y, x);
                    x = y;
                    y = z;
                    if (x, y) == (a, b) {
                        break true;
                    }
                };
                if closed {
                    for &(x, y) in &walk {
                        done[x][y] = true;
                    }
                    faces += 1;
                    used += walk.len();
                    walks.push(walk.iter().map(|&(x, _)| x).collect());
                }
            }
        }
        (faces, used, walks)
    }

    fn go(&mut self, depth: usize) -> bool {
        let (faces, used, walks) = self.closed_faces();
        if faces + (self.darts - used) / self.min_face < self.faces_needed {
            return false;
        }
        if depth == self.order.len() {
            return faces == self.faces_needed
                && self.triangles.iter().all(|t| {
                    walks.iter().any(|w: &Vec<usize>| {
                        w.len() == 3 && t.iter().all(|x| w.contains(x))
                    })
                });
        }
        let v = self.order[depth];
        for i in 0..self.choices[v].len() {
            let rot = self.choices[v][i].clone();
            self.set(v, &rot);
            if self.go(depth + 1) {
                return true;
            }
        }
        self.assigned[v] = false;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flag(n: usize, edges: &[(usize, usize)]) -> SimplicialComplex {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        SimplicialComplex::flag_complex(&names, edges).unwrap()
    }

    #[test]
    fn cycle_and_k5() {
        let c5 = flag(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(planarity_oracle_small(&c5), Ok(true));
        let names = ["a", "b", "c", "d", "e"];
        let mut faces: Vec<Vec<usize>> = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                faces.push(vec![i, j]);
            }
        }
        let k5 = SimplicialComplex::from_faces(&names, &faces).unwrap();
        assert_eq!(planarity_oracle_small(&k5), Ok(false));
    }

    #[test]
    fn octahedron_is_planar() {
        let mut e = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                if i / 2 != j / 2 {
                    e.push((i, j));
                }
            }
        }
        let oct = flag(6, &e);
        assert_eq!(oct.faces_of_dim(2).len(), 8);
        assert_eq!(planarity_oracle_small(&oct), Ok(true));
    }

    #[test]
    fn book_and_solid_simplex() {
        let book = SimplicialComplex::from_named(
            &["a", "b", "x", "y", "z"],
            &[&["a", "b", "x"], &["a", "b", "y"], &["a", "b", "z"]],
        )
        .unwrap();
        assert_eq!(planarity_oracle_small(&book), Ok(false));
        let solid = flag(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(planarity_oracle_small(&solid), Ok(false));
        let hollow = SimplicialComplex::from_named(
            &["a", "b", "c", "d"],
            &[&["a", "b", "c"], &["a", "b", "d"], &["a", "c", "d"], &["b", "c", "d"]],
        )
        .unwrap();
        assert_eq!(planarity_oracle_small(&hollow), Ok(true));
    }

    #[test]
    fn size_guard() {
        let k = flag(11, &[]);
        assert!(matches!(planarity_oracle_small(&k), Err(PlanarityError::TooLarge { .. })));
    }
}
