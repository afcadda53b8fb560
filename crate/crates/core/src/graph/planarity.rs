//! Planarity testing with the left-right (de Fraysseix–Rosenstiehl) criterion
//! and Kuratowski subgraph extraction.
//!
//! The test follows Brandes' formulation: a DFS orients the graph and
//! computes lowpoints, then a second DFS processes edges by nesting depth
//! while maintaining a stack of conflict pairs of return-edge intervals.
//! A conflict that cannot be resolved by flipping sides means the graph is
//! not planar.

use super::SimpleGraph;

type EdgeId = usize;

#[derive(Clone, Copy, Default, PartialEq, Eq, Debug)]
struct Interval {
    low: Option<EdgeId>,
    high: Option<EdgeId>,
}

impl Interval {
    fn is_empty(&self) -> bool {
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

struct LrState<'a> {
    graph: &'a SimpleGraph,
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<EdgeId>>,
    // oriented edges
    source: Vec<usize>,
    target: Vec<usize>,
    out_edges: Vec<Vec<EdgeId>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,
    // testing phase
    reference: Vec<Option<EdgeId>>,
    lowpt_edge: Vec<Option<EdgeId>>,
    stack_bottom: Vec<Option<u64>>,
    stack: Vec<ConflictPair>,
    next_pair_id: u64,
    oriented: Vec<Vec<bool>>,
}

impl<'a> LrState<'a> {
    fn new(graph: &'a SimpleGraph) -> Self {
        let n = graph.vertex_count();
        LrState {
            graph,
            height: vec![None; n],
            parent_edge: vec![None; n],
            source: Vec::new(),
            target: Vec::new(),
            out_edges: vec![Vec::new(); n],
            lowpt: Vec::new(),
            lowpt2: Vec::new(),
            nesting_depth: Vec::new(),
            reference: Vec::new(),
            lowpt_edge: Vec::new(),
            stack_bottom: Vec::new(),
            stack: Vec::new(),
            next_pair_id: 0,
            oriented: (0..n).map(|v| vec![false; graph.degree(v)]).collect(),
        }
    }

    fn mark_oriented(&mut self, v: usize, w: usize) {
        let i = self.graph.neighbors(v).binary_search(&w).unwrap();
        let j = self.graph.neighbors(w).binary_search(&v).unwrap();
        self.oriented[v][i] = true;
        self.oriented[w][j] = true;
    }

    fn orient(&mut self, v: usize) {
        let e = self.parent_edge[v];
        let hv = self.height[v].unwrap();
        for idx in 0..self.graph.degree(v) {
            if self.oriented[v][idx] {
                continue;
            }
            let w = self.graph.neighbors(v)[idx];
            self.mark_oriented(v, w);
            let vw = self.source.len();
            self.source.push(v);
            self.target.push(w);
            self.out_edges[v].push(vw);
            self.lowpt.push(hv);
            self.lowpt2.push(hv);
            self.nesting_depth.push(0);
            match self.height[w] {
                None => {
                    self.parent_edge[w] = Some(vw);
                    self.height[w] = Some(hv + 1);
                    self.orient(w);
                }
                Some(hw) => self.lowpt[vw] = hw,
            }
            self.nesting_depth[vw] = 2 * self.lowpt[vw];
            if self.lowpt2[vw] < hv {
                // chordal
                self.nesting_depth[vw] += 1;
            }
            if let Some(e) = e {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn new_pair(&mut self, left: Interval, right: Interval) -> ConflictPair {
        self.next_pair_id += 1;
        ConflictPair {
            id: self.next_pair_id,
            left,
            right,
        }
    }

    fn top_id(&self) -> Option<u64> {
        self.stack.last().map(|p| p.id)
    }

    fn conflicting(&self, interval: &Interval, b: EdgeId) -> bool {
        !interval.is_empty() && self.lowpt[interval.high.unwrap()] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low.unwrap()];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low.unwrap()];
        }
        self.lowpt[p.left.low.unwrap()].min(self.lowpt[p.right.low.unwrap()])
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let hv = self.height[v].unwrap();
        let edges = self.out_edges[v].clone();
        for &ei in &edges {
            let w = self.target[ei];
            self.stack_bottom[ei] = self.top_id();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = Some(ei);
                let pair = self.new_pair(
                    Interval::default(),
                    Interval {
                        low: Some(ei),
                        high: Some(ei),
                    },
                );
                self.stack.push(pair);
            }
            if self.lowpt[ei] < hv {
                let e = e.expect("a return edge below v implies v has a parent");
                if ei == edges[0] {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
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

    fn add_constraints(&mut self, ei: EdgeId, e: EdgeId) -> bool {
        let mut p = self.new_pair(Interval::default(), Interval::default());
        loop {
            let mut q = self
                .stack
                .pop()
                .expect("stack holds the return edges of ei");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low.unwrap()] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low.unwrap()] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[q.right.low.unwrap()] = self.lowpt_edge[e];
            }
            if self.top_id() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(low) = p.right.low {
                self.reference[low] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.reference[p.left.low.unwrap()] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: EdgeId) {
        let u = self.source[e];
        let hu = self.height[u].unwrap();
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.target[h] != u {
                    break;
                }
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() {
                if let Some(low) = p.left.low {
                    self.reference[low] = p.right.low;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.target[h] != u {
                    break;
                }
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() {
                if let Some(low) = p.right.low {
                    self.reference[low] = p.left.low;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < hu {
            if let Some(top) = self.stack.last() {
                let (hl, hr) = (top.left.high, top.right.high);
                self.reference[e] = match (hl, hr) {
                    (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                    (Some(l), None) => Some(l),
                    _ => hr,
                };
            }
        }
    }

    fn run(mut self) -> bool {
        let n = self.graph.vertex_count();
        let mut roots = Vec::new();
        for v in 0..n {
            if self.height[v].is_none() {
                self.height[v] = Some(0);
                roots.push(v);
                self.orient(v);
            }
        }
        let m = self.source.len();
        self.reference = vec![None; m];
        self.lowpt_edge = vec![None; m];
        self.stack_bottom = vec![None; m];
        for v in 0..n {
            let depth = &self.nesting_depth;
            self.out_edges[v].sort_by_key(|&e| depth[e]);
        }
        roots.into_iter().all(|r| self.test(r))
    }
}

/// Exact planarity test.
pub fn is_planar(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    if n > 2 && g.edge_count() > 3 * n - 6 {
        return false;
    }
    LrState::new(g).run()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subgraph of the tested graph that subdivides `K5` or `K3,3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    /// Branch vertices (degree ≥ 3 in the witness), sorted.
    pub branch_vertices: Vec<usize>,
    /// Witness edges `(u, v)` with `u < v`, as vertex indices of the graph.
    pub edges: Vec<(usize, usize)>,
}

fn subgraph_of(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
    SimpleGraph::from_edges(n, edges.iter().copied())
}

/// Classifies an edge set as a subdivision of `K5` or `K3,3` by suppressing
/// degree-2 vertices. Returns `None` if it is neither.
fn classify(n: usize, edges: &[(usize, usize)]) -> Option<(KuratowskiKind, Vec<usize>)> {
    let h = subgraph_of(n, edges);
    if h.edge_count() != edges.len() {
        return None;
    }
    let used: Vec<usize> = (0..n).filter(|&v| h.degree(v) > 0).collect();
    if used.iter().any(|&v| h.degree(v) == 1) {
        return None;
    }
    let branch: Vec<usize> = used.iter().copied().filter(|&v| h.degree(v) >= 3).collect();
    let kind = match (
        branch.len(),
        branch.iter().all(|&v| h.degree(v) == 4),
        branch.iter().all(|&v| h.degree(v) == 3),
    ) {
        (5, true, _) => KuratowskiKind::K5,
        (6, _, true) => KuratowskiKind::K33,
        _ => return None,
    };
    let is_branch = |v: usize| branch.contains(&v);
    // follow every path leaving a branch vertex to the next branch vertex
    let mut links: Vec<(usize, usize)> = Vec::new();
    let mut traversed = 0;
    for &b in &branch {
        for &first in h.neighbors(b) {
            let (mut prev, mut cur) = (b, first);
            let mut len = 1;
            while !is_branch(cur) {
                let nb = h.neighbors(cur);
                let next = if nb[0] == prev { nb[1] } else { nb[0] };
                prev = cur;
                cur = next;
                len += 1;
                if len > n {
                    return None;
                }
            }
            if cur == b {
                return None;
            }
            traversed += len;
            links.push((b.min(cur), b.max(cur)));
        }
    }
    // every edge lies on exactly one branch path, seen from both ends
    if traversed != 2 * edges.len() {
        return None;
    }
    links.sort_unstable();
    let before = links.len();
    links.dedup();
    if links.len() * 2 != before {
        return None;
    }
    match kind {
        KuratowskiKind::K5 => (links.len() == 10).then_some(()),
        KuratowskiKind::K33 => {
            if links.len() != 9 {
                return None;
            }
            // bipartition: branch[0]'s side is everything it is not linked to
            let linked = |a: usize, b: usize| links.binary_search(&(a.min(b), a.max(b))).is_ok();
            let side: Vec<bool> = branch
                .iter()
                .map(|&v| v == branch[0] || !linked(branch[0], v))
                .collect();
            let ok = side.iter().filter(|&&s| s).count() == 3
                && branch.iter().enumerate().all(|(i, &a)| {
                    branch
                        .iter()
                        .enumerate()
                        .all(|(j, &b)| i == j || linked(a, b) == (side[i] != side[j]))
                });
            ok.then_some(())
        }
    }?;
    Some((kind, branch))
}

/// Checks that `w` is a subgraph of `g` and subdivides `K5` or `K3,3` as
/// claimed.
pub fn verify_witness(g: &SimpleGraph, w: &KuratowskiWitness) -> bool {
    if !w
        .edges
        .iter()
        .all(|&(u, v)| u < g.vertex_count() && v < g.vertex_count() && g.has_edge(u, v))
    {
        return false;
    }
    match classify(g.vertex_count(), &w.edges) {
        Some((kind, branch)) => kind == w.kind && branch == w.branch_vertices,
        None => false,
    }
}

/// A Kuratowski subgraph of `g`, or `None` when `g` is planar.
///
/// Vertices and then edges are deleted greedily while the remainder stays
/// non-planar; an edge-minimal non-planar graph without isolated vertices is a
/// subdivision of `K5` or `K3,3`.
pub fn kuratowski_witness(g: &SimpleGraph) -> Option<KuratowskiWitness> {
    if is_planar(g) {
        return None;
    }
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let edges_of = |alive: &[bool]| -> Vec<(usize, usize)> {
        g.edges().filter(|&(u, v)| alive[u] && alive[v]).collect()
    };
    for v in 0..n {
        alive[v] = false;
        if is_planar(&subgraph_of(n, &edges_of(&alive))) {
            alive[v] = true;
        }
    }
    let mut edges = edges_of(&alive);
    let mut i = 0;
    while i < edges.len() {
        let removed = edges.remove(i);
        if is_planar(&subgraph_of(n, &edges)) {
            edges.insert(i, removed);
            i += 1;
        }
    }
    let (kind, branch_vertices) =
        classify(n, &edges).expect("an edge-minimal non-planar graph is a Kuratowski subdivision");
    Some(KuratowskiWitness {
        kind,
        branch_vertices,
        edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k33() -> SimpleGraph {
        SimpleGraph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b))))
    }

    #[test]
    fn kuratowski_graphs_are_not_planar() {
        assert!(!is_planar(&SimpleGraph::complete(5)));
        assert!(!is_planar(&k33()));
        assert!(is_planar(&SimpleGraph::complete(4)));
        let mut k33_minus: Vec<_> = k33().edges().collect();
        k33_minus.pop();
        assert!(is_planar(&SimpleGraph::from_edges(6, k33_minus)));
    }

    #[test]
    fn known_planar_graphs() {
        // Goldner–Harary graph (maximal planar), shifted to 0-based
        let gh = [
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (1, 7),
            (1, 8),
            (1, 10),
            (1, 11),
            (2, 3),
            (2, 4),
            (2, 6),
            (2, 7),
            (2, 9),
            (2, 10),
            (2, 11),
            (3, 4),
            (4, 5),
            (4, 6),
            (4, 7),
            (5, 7),
            (6, 7),
            (7, 8),
            (7, 9),
            (7, 10),
            (8, 10),
            (9, 10),
            (10, 11),
        ];
        let g = SimpleGraph::from_edges(11, gh.iter().map(|&(a, b)| (a - 1, b - 1)));
        assert!(is_planar(&g));
        // 3x3 grid
        let grid = SimpleGraph::from_edges(
            9,
            [
                (0, 1),
                (1, 2),
                (3, 4),
                (4, 5),
                (6, 7),
                (7, 8),
                (0, 3),
                (3, 6),
                (1, 4),
                (4, 7),
                (2, 5),
                (5, 8),
            ],
        );
        assert!(is_planar(&grid));
        // octahedron
        let oct = SimpleGraph::from_edges(
            6,
            (0..6).flat_map(|u| (u + 1..6).filter(move |v| v - u != 3).map(move |v| (u, v))),
        );
        assert!(is_planar(&oct));
    }

    #[test]
    fn known_non_planar_graphs() {
        // subdivided K3,3 with no literal K5 or K3,3 subgraph
        let g = SimpleGraph::from_edges(
            8,
            [
                (1, 5),
                (1, 6),
                (1, 7),
                (2, 6),
                (2, 3),
                (3, 5),
                (3, 7),
                (4, 5),
                (4, 6),
                (4, 7),
            ],
        );
        assert!(!is_planar(&g));
        // Petersen graph
        let petersen = SimpleGraph::from_edges(
            10,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        );
        assert!(!is_planar(&petersen));
        let w = kuratowski_witness(&petersen).unwrap();
        assert_eq!(w.kind, KuratowskiKind::K33);
        assert!(verify_witness(&petersen, &w));
    }

    #[test]
    fn witnesses() {
        let k5 = SimpleGraph::complete(5);
        let w = kuratowski_witness(&k5).unwrap();
        assert_eq!(w.kind, KuratowskiKind::K5);
        assert!(verify_witness(&k5, &w));
        let w = kuratowski_witness(&k33()).unwrap();
        assert_eq!(w.kind, KuratowskiKind::K33);
        assert!(verify_witness(&k33(), &w));
        assert!(kuratowski_witness(&SimpleGraph::complete(4)).is_none());
    }

    #[test]
    fn bogus_witness_is_rejected() {
        let k5 = SimpleGraph::complete(5);
        let mut w = kuratowski_witness(&k5).unwrap();
        w.edges.pop();
        assert!(!verify_witness(&k5, &w));
        let w = KuratowskiWitness {
            kind: KuratowskiKind::K33,
            branch_vertices: vec![0, 1, 2, 3, 4],
            edges: k5.edges().collect(),
        };
        assert!(!verify_witness(&k5, &w));
    }
}
