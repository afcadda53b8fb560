//! Graph isomorphism by colour refinement and backtracking.

use super::SimpleGraph;

/// Refines a vertex colouring until stable: each round recolours a vertex by
/// its current colour plus the sorted multiset of neighbour colours.
fn refine(g: &SimpleGraph, h: &SimpleGraph) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut cg: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    let mut ch: Vec<usize> = (0..h.vertex_count()).map(|v| h.degree(v)).collect();
    loop {
        let sig = |gr: &SimpleGraph, c: &[usize], v: usize| {
            let mut nb: Vec<usize> = gr.neighbors(v).iter().map(|&w| c[w]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let sg: Vec<_> = (0..g.vertex_count()).map(|v| sig(g, &cg, v)).collect();
        let sh: Vec<_> = (0..h.vertex_count()).map(|v| sig(h, &ch, v)).collect();
        // shared palette so colours are comparable across the two graphs
        let mut palette: Vec<_> = sg.iter().chain(&sh).cloned().collect();
        palette.sort();
        palette.dedup();
        let colour = |s: &(usize, Vec<usize>)| palette.binary_search(s).unwrap();
        let ng: Vec<usize> = sg.iter().map(colour).collect();
        let nh: Vec<usize> = sh.iter().map(colour).collect();
        let mut hist_g = ng.clone();
        let mut hist_h = nh.clone();
        hist_g.sort_unstable();
        hist_h.sort_unstable();
        if hist_g != hist_h {
            return None;
        }
        let classes = |c: &[usize]| {
            let mut s = c.to_vec();
            s.sort_unstable();
            s.dedup();
            s.len()
        };
        let stable = classes(&ng) == classes(&cg);
        cg = ng;
        ch = nh;
        if stable {
            return Some((cg, ch));
        }
    }
}

struct Matcher<'a> {
    g: &'a SimpleGraph,
    h: &'a SimpleGraph,
    cg: Vec<usize>,
    ch: Vec<usize>,
    order: Vec<usize>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn consistent(&self, v: usize, w: usize) -> bool {
        self.g.neighbors(v).iter().all(|&u| match self.map[u] {
            Some(x) => self.h.has_edge(w, x),
            None => true,
        }) && self
            .g
            .neighbors(v)
            .iter()
            .filter(|&&u| self.map[u].is_some())
            .count()
            == self
                .h
                .neighbors(w)
                .iter()
                .filter(|&&x| self.used[x])
                .count()
    }

    fn search(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for w in 0..self.h.vertex_count() {
            if self.used[w] || self.ch[w] != self.cg[v] || !self.consistent(v, w) {
                continue;
            }
            self.map[v] = Some(w);
            self.used[w] = true;
            if self.search(depth + 1) {
                return true;
            }
            self.map[v] = None;
            self.used[w] = false;
        }
        false
    }
}

/// A bijection `φ` on vertex indices with `{u,v} ∈ E(g) ⟺ {φu,φv} ∈ E(h)`.
pub fn find_isomorphism(g: &SimpleGraph, h: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let (cg, ch) = refine(g, h)?;
    // BFS order so each new vertex has mapped neighbours early
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            let v = order[i];
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    let mut m = Matcher {
        g,
        h,
        cg,
        ch,
        order,
        map: vec![None; n],
        used: vec![false; n],
    };
    if !m.search(0) {
        return None;
    }
    let map: Vec<usize> = m.map.into_iter().map(|x| x.unwrap()).collect();
    debug_assert!(g.edges().all(|(u, v)| h.has_edge(map[u], map[v])));
    Some(map)
}

pub fn graphs_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    find_isomorphism(g, h).is_some()
}
