//! Left-right planarity test (de Fraysseix–Rosenstiehl, in Brandes'
//! formulation) with construction of a combinatorial embedding.

use std::collections::{HashMap, HashSet};

type Edge = (usize, usize);

/// A planar embedding as a clockwise rotation of neighbours at each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub rotation: Vec<Vec<usize>>,
}

impl Embedding {
    /// Number of faces traced by `(u -> v)` followed by `(v -> succ_v(u))`.
    pub fn face_count(&self) -> usize {
        trace_faces(&self.rotation).len()
    }
}

/// Faces of a rotation system as closed dart walks, listed by vertex.
/// A dart `(u, v)` is followed by `(v, w)` where `w` comes right after `u`
/// in the rotation at `v`.
pub fn trace_faces(rotation: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let pos: Vec<HashMap<usize, usize>> = rotation
        .iter()
        .map(|r| r.iter().enumerate().map(|(i, &w)| (w, i)).collect())
        .collect();
    let mut used: HashSet<Edge> = HashSet::new();
    let mut faces = Vec::new();
    for u in 0..rotation.len() {
        for &v in &rotation[u] {
            if used.contains(&(u, v)) {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut b) = (u, v);
            while used.insert((a, b)) {
                face.push(a);
                let r = &rotation[b];
                let next = r[(pos[b][&a] + 1) % r.len()];
                a = b;
                b = next;
            }
            faces.push(face);
        }
    }
    faces
}

fn components(adj: &[Vec<usize>]) -> usize {
    let mut seen = vec![false; adj.len()];
    let mut count = 0;
    for s in 0..adj.len() {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// True iff a rotation system describes a genus-0 embedding of every
/// component: `V - E + F = 2` per component (isolated vertices count one
/// face each).
pub fn is_spherical_rotation(adj: &[Vec<usize>], rotation: &[Vec<usize>]) -> bool {
    let v = adj.len() as i64;
    let e = adj.iter().map(Vec::len).sum::<usize>() as i64 / 2;
    let isolated = adj.iter().filter(|a| a.is_empty()).count() as i64;
    let f = trace_faces(rotation).len() as i64 + isolated;
    let c = components(adj) as i64;
    v - e + f == 2 * c
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Interval {
    low: Option<Edge>,
    high: Option<Edge>,
}

impl Interval {
    fn empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Debug)]
struct ConflictPair {
    id: u64,
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct Lr<'a> {
    adj: &'a [Vec<usize>],
    height: Vec<Option<usize>>,
    lowpt: HashMap<Edge, usize>,
    lowpt2: HashMap<Edge, usize>,
    nesting_depth: HashMap<Edge, i64>,
    parent_edge: Vec<Option<Edge>>,
    oriented: HashSet<Edge>,
    out: Vec<Vec<usize>>,
    ordered_adjs: Vec<Vec<usize>>,
    reference: HashMap<Edge, Edge>,
    side: HashMap<Edge, i64>,
    stack: Vec<ConflictPair>,
    next_id: u64,
    stack_bottom: HashMap<Edge, Option<u64>>,
    lowpt_edge: HashMap<Edge, Edge>,
    left_ref: Vec<usize>,
    right_ref: Vec<usize>,
    roots: Vec<usize>,
    cw: HashMap<Edge, usize>,
    ccw: HashMap<Edge, usize>,
    first_nbr: Vec<Option<usize>>,
}

/// Returns a planar embedding of the simple graph `adj`, or `None` if it is
/// not planar. Adjacency lists must be symmetric and loop-free.
pub fn planar_embedding(adj: &[Vec<usize>]) -> Option<Embedding> {
    let n = adj.len();
    let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if n > 2 && m > 3 * n - 6 {
        return None;
    }
    let mut lr = Lr {
        adj,
        height: vec![None; n],
        lowpt: HashMap::new(),
        lowpt2: HashMap::new(),
        nesting_depth: HashMap::new(),
        parent_edge: vec![None; n],
        oriented: HashSet::new(),
        out: vec![Vec::new(); n],
        ordered_adjs: vec![Vec::new(); n],
        reference: HashMap::new(),
        side: HashMap::new(),
        stack: Vec::new(),
        next_id: 0,
        stack_bottom: HashMap::new(),
        lowpt_edge: HashMap::new(),
        left_ref: vec![usize::MAX; n],
        right_ref: vec![usize::MAX; n],
        roots: Vec::new(),
        cw: HashMap::new(),
        ccw: HashMap::new(),
        first_nbr: vec![None; n],
    };
    for v in 0..n {
        if lr.height[v].is_none() {
            lr.height[v] = Some(0);
            lr.roots.push(v);
            lr.dfs_orientation(v);
        }
    }
    for v in 0..n {
        lr.sort_adjs(v);
    }
    for r in lr.roots.clone() {
        if !lr.dfs_testing(r) {
            return None;
        }
    }
    let edges: Vec<Edge> = (0..n).flat_map(|v| lr.out[v].iter().map(move |&w| (v, w))).collect();
    for e in edges {
        let s = lr.sign(e);
        *lr.nesting_depth.get_mut(&e).expect("oriented edge") *= s;
    }
    for v in 0..n {
        lr.sort_adjs(v);
        let mut previous = None;
        for w in lr.ordered_adjs[v].clone() {
            lr.add_half_edge_cw(v, w, previous);
            previous = Some(w);
        }
    }
    for r in lr.roots.clone() {
        lr.dfs_embedding(r);
    }
    let rotation = (0..n)
        .map(|v| {
            let mut rot = Vec::new();
            if let Some(f) = lr.first_nbr[v] {
                let mut w = f;
                loop {
                    rot.push(w);
                    w = lr.cw[&(v, w)];
                    if w == f {
                        break;
                    }
                }
            }
            rot
        })
        .collect();
    let emb = Embedding { rotation };
    assert!(
        is_spherical_rotation(adj, &emb.rotation),
        "left-right planarity produced an invalid embedding"
    );
    Some(emb)
}

impl Lr<'_> {
    fn sort_adjs(&mut self, v: usize) {
        let mut ws = self.out[v].clone();
        ws.sort_by_key(|&w| self.nesting_depth[&(v, w)]);
        self.ordered_adjs[v] = ws;
    }

    fn dfs_orientation(&mut self, v: usize) {
        let e = self.parent_edge[v];
        for &w in &self.adj[v] {
            if self.oriented.contains(&(v, w)) || self.oriented.contains(&(w, v)) {
                continue;
            }
            let vw = (v, w);
            self.oriented.insert(vw);
            self.out[v].push(w);
            let hv = self.height[v].expect("visited");
            self.lowpt.insert(vw, hv);
            self.lowpt2.insert(vw, hv);
            match self.height[w] {
                None => {
                    self.parent_edge[w] = Some(vw);
                    self.height[w] = Some(hv + 1);
                    self.dfs_orientation(w);
                }
                Some(hw) => {
                    self.lowpt.insert(vw, hw);
                }
            }
            let mut nd = 2 * self.lowpt[&vw] as i64;
            if self.lowpt2[&vw] < hv {
                nd += 1;
            }
            self.nesting_depth.insert(vw, nd);
            if let Some(e) = e {
                let (lvw, l2vw) = (self.lowpt[&vw], self.lowpt2[&vw]);
                let (le, l2e) = (self.lowpt[&e], self.lowpt2[&e]);
                if lvw < le {
                    self.lowpt2.insert(e, le.min(l2vw));
                    self.lowpt.insert(e, lvw);
                } else if lvw > le {
                    self.lowpt2.insert(e, l2e.min(lvw));
                } else {
                    self.lowpt2.insert(e, l2e.min(l2vw));
                }
            }
        }
    }

    fn new_pair(&mut self, left: Interval, right: Interval) -> ConflictPair {
        self.next_id += 1;
        ConflictPair { id: self.next_id, left, right }
    }

    fn conflicting(&self, i: &Interval, b: Edge) -> bool {
        match i.high {
            Some(h) if !i.empty() => self.lowpt[&h] > self.lowpt[&b],
            _ => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[&r],
            (Some(l), None) => self.lowpt[&l],
            (Some(l), Some(r)) => self.lowpt[&l].min(self.lowpt[&r]),
            (None, None) => unreachable!("conflict pairs on the stack are nonempty"),
        }
    }

    fn top_id(&self) -> Option<u64> {
        self.stack.last().map(|p| p.id)
    }

    fn dfs_testing(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let adjs = self.ordered_adjs[v].clone();
        for &w in &adjs {
            let ei = (v, w);
            self.stack_bottom.insert(ei, self.top_id());
            if Some(ei) == self.parent_edge[w] {
                if !self.dfs_testing(w) {
                    return false;
                }
            } else {
                self.lowpt_edge.insert(ei, ei);
                let p = self.new_pair(Interval::default(), Interval { low: Some(ei), high: Some(ei) });
                self.stack.push(p);
            }
            if self.lowpt[&ei] < self.height[v].expect("visited") {
                let e = e.expect("non-root vertex has a parent edge");
                if w == adjs[0] {
                    let le = self.lowpt_edge[&ei];
                    self.lowpt_edge.insert(e, le);
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if let Some(e) = e {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: Edge, e: Edge) -> bool {
        let mut p = self.new_pair(Interval::default(), Interval::default());
        loop {
            let mut q = self.stack.pop().expect("return edges of e_i are on the stack");
            if !q.left.empty() {
                q.swap();
            }
            if !q.left.empty() {
                return false;
            }
            let qrl = q.right.low.expect("nonempty right interval");
            if self.lowpt[&qrl] > self.lowpt[&e] {
                if p.right.empty() {
                    p.right = q.right;
                } else {
                    let prl = p.right.low.expect("nonempty");
                    self.reference.insert(prl, q.right.high.expect("nonempty"));
                }
                p.right.low = q.right.low;
            } else {
                let le = self.lowpt_edge[&e];
                self.reference.insert(qrl, le);
            }
            if self.top_id() == self.stack_bottom[&ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("checked nonempty");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let (Some(prl), Some(qrh)) = (p.right.low, q.right.high) {
                self.reference.insert(prl, qrh);
            } else if let Some(prl) = p.right.low {
                self.reference.remove(&prl);
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.empty() {
                p.left = q.left;
            } else if let Some(pll) = p.left.low {
                match q.left.high {
                    Some(h) => {
                        self.reference.insert(pll, h);
                    }
                    None => {
                        self.reference.remove(&pll);
                    }
                }
            }
            p.left.low = q.left.low;
        }
        if !(p.left.empty() && p.right.empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: Edge) {
        let u = e.0;
        let hu = self.height[u].expect("visited");
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            let p = self.stack.pop().expect("checked nonempty");
            if let Some(l) = p.left.low {
                self.side.insert(l, -1);
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if h.1 != u {
                    break;
                }
                p.left.high = self.reference.get(&h).copied();
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    match p.right.low {
                        Some(r) => {
                            self.reference.insert(l, r);
                        }
                        None => {
                            self.reference.remove(&l);
                        }
                    }
                    self.side.insert(l, -1);
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if h.1 != u {
                    break;
                }
                p.right.high = self.reference.get(&h).copied();
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    match p.left.low {
                        Some(l) => {
                            self.reference.insert(r, l);
                        }
                        None => {
                            self.reference.remove(&r);
                        }
                    }
                    self.side.insert(r, -1);
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[&e] < hu {
            let top = self.stack.last().expect("e has a return edge");
            let (hl, hr) = (top.left.high, top.right.high);
            let chosen = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[&l] > self.lowpt[&r] => Some(l),
                _ => hr,
            };
            match chosen {
                Some(c) => {
                    self.reference.insert(e, c);
                }
                None => {
                    self.reference.remove(&e);
                }
            }
        }
    }

    fn sign(&mut self, e: Edge) -> i64 {
        if let Some(r) = self.reference.remove(&e) {
            let s = self.sign(r);
            let cur = self.side.get(&e).copied().unwrap_or(1);
            self.side.insert(e, cur * s);
        }
        self.side.get(&e).copied().unwrap_or(1)
    }

    fn add_half_edge_cw(&mut self, start: usize, end: usize, reference: Option<usize>) {
        match reference {
            None => {
                self.cw.insert((start, end), end);
                self.ccw.insert((start, end), end);
                self.first_nbr[start] = Some(end);
            }
            Some(r) => {
                let cw_ref = self.cw[&(start, r)];
                self.cw.insert((start, r), end);
                self.cw.insert((start, end), cw_ref);
                self.ccw.insert((start, cw_ref), end);
                self.ccw.insert((start, end), r);
            }
        }
    }

    fn add_half_edge_ccw(&mut self, start: usize, end: usize, reference: Option<usize>) {
        match reference {
            None => self.add_half_edge_cw(start, end, None),
            Some(r) => {
                let ccw_ref = self.ccw[&(start, r)];
                self.add_half_edge_cw(start, end, Some(ccw_ref));
                if self.first_nbr[start] == Some(r) {
                    self.first_nbr[start] = Some(end);
                }
            }
        }
    }

    fn add_half_edge_first(&mut self, start: usize, end: usize) {
        let r = self.first_nbr[start];
        self.add_half_edge_ccw(start, end, r);
    }

    fn dfs_embedding(&mut self, v: usize) {
        for w in self.ordered_adjs[v].clone() {
            let ei = (v, w);
            if Some(ei) == self.parent_edge[w] {
                self.add_half_edge_first(w, v);
                self.left_ref[v] = w;
                self.right_ref[v] = w;
                self.dfs_embedding(w);
            } else if self.side.get(&ei).copied().unwrap_or(1) == 1 {
                let r = self.right_ref[w];
                self.add_half_edge_cw(w, v, Some(r));
            } else {
                let r = self.left_ref[w];
                self.add_half_edge_ccw(w, v, Some(r));
                self.left_ref[w] = v;
            }
        }
    }
}

pub fn is_planar_graph(adj: &[Vec<usize>]) -> bool {
    planar_embedding(adj).is_some()
}
