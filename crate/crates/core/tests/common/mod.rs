//! Brute-force oracles shared by the integration and acceptance tests. None
//! of these call into the library's algorithms beyond permutation arithmetic
//! and graph construction.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use engel::graph::SimpleGraph;
use engel::Permutation;
use rand::rngs::StdRng;
use rand::Rng;

/// `x⁻¹y⁻¹xy`, composed factor by factor.
pub fn commutator(x: &Permutation, y: &Permutation) -> Permutation {
    x.inverse().compose(&y.inverse()).compose(x).compose(y)
}

/// Closure by multiplying every pair until nothing new appears.
pub fn enumerate_group(gens: &[Permutation]) -> Vec<Permutation> {
    let mut elems: BTreeSet<Permutation> = gens.iter().cloned().collect();
    elems.insert(Permutation::identity());
    loop {
        let current: Vec<Permutation> = elems.iter().cloned().collect();
        let before = elems.len();
        for a in &current {
            for b in &current {
                elems.insert(a.compose(b));
            }
        }
        if elems.len() == before {
            return elems.into_iter().collect();
        }
    }
}

/// `[a,_k x] = 1` for some `k`, iterating until a value repeats.
pub fn reaches_identity(a: &Permutation, x: &Permutation) -> bool {
    let mut seen = HashSet::new();
    let mut c = a.clone();
    loop {
        if c.is_identity() {
            return true;
        }
        if !seen.insert(c.clone()) {
            return false;
        }
        c = commutator(&c, x);
    }
}

pub struct OracleGraph {
    pub fitting: Vec<Permutation>,
    pub vertices: Vec<Permutation>,
    pub edges: BTreeSet<(Permutation, Permutation)>,
}

impl OracleGraph {
    pub fn adjacent(&self, x: &Permutation, y: &Permutation) -> bool {
        let key = if x < y {
            (x.clone(), y.clone())
        } else {
            (y.clone(), x.clone())
        };
        self.edges.contains(&key)
    }
}

/// Engel graph straight from the definitions.
pub fn oracle_engel_graph(elems: &[Permutation]) -> OracleGraph {
    let (fitting, vertices): (Vec<_>, Vec<_>) = elems
        .iter()
        .cloned()
        .partition(|x| elems.iter().all(|a| reaches_identity(a, x)));
    let mut edges = BTreeSet::new();
    for (i, x) in vertices.iter().enumerate() {
        for y in &vertices[i + 1..] {
            if !reaches_identity(x, y) && !reaches_identity(y, x) {
                let key = if x < y {
                    (x.clone(), y.clone())
                } else {
                    (y.clone(), x.clone())
                };
                edges.insert(key);
            }
        }
    }
    OracleGraph {
        fitting,
        vertices,
        edges,
    }
}

pub fn masks(g: &SimpleGraph) -> Vec<u32> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

/// Largest clique by enumerating every vertex subset.
pub fn oracle_clique_number(g: &SimpleGraph) -> usize {
    let n = g.vertex_count();
    let adj = masks(g);
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || (adj[v] | 1 << v) & s == s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn route(adj: &[u32], pairs: &[(usize, usize)], used: u32) -> bool {
    let Some((&(a, b), rest)) = pairs.split_first() else {
        return true;
    };
    // depth-first over simple paths a -> b whose inner vertices are unused
    fn extend(adj: &[u32], cur: usize, b: usize, used: u32, rest: &[(usize, usize)]) -> bool {
        if adj[cur] >> b & 1 == 1 && route(adj, rest, used) {
            return true;
        }
        let mut free = adj[cur] & !used;
        while free != 0 {
            let w = free.trailing_zeros() as usize;
            free &= free - 1;
            if extend(adj, w, b, used | 1 << w, rest) {
                return true;
            }
        }
        false
    }
    extend(adj, a, b, used, rest)
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// Planar exactly when no subdivision of `K5` or `K3,3` exists, searched by
/// choosing branch vertices and routing internally disjoint paths.
pub fn oracle_is_planar(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    assert!(n <= 32);
    let adj = masks(g);
    let deg = |v: usize| adj[v].count_ones() as usize;
    let k5: Vec<usize> = (0..n).filter(|&v| deg(v) >= 4).collect();
    for b in combinations(&k5, 5) {
        let used = b.iter().fold(0u32, |m, &v| m | 1 << v);
        let pairs: Vec<_> = combinations(&b, 2)
            .into_iter()
            .map(|p| (p[0], p[1]))
            .collect();
        if route(&adj, &pairs, used) {
            return false;
        }
    }
    let k33: Vec<usize> = (0..n).filter(|&v| deg(v) >= 3).collect();
    for six in combinations(&k33, 6) {
        // side A contains six[0]
        for others in combinations(&six[1..], 2) {
            let a = [six[0], others[0], others[1]];
            let bside: Vec<usize> = six.iter().copied().filter(|v| !a.contains(v)).collect();
            let used = six.iter().fold(0u32, |m, &v| m | 1 << v);
            let pairs: Vec<_> = a
                .iter()
                .flat_map(|&x| bside.iter().map(move |&y| (x, y)))
                .collect();
            if route(&adj, &pairs, used) {
                return false;
            }
        }
    }
    true
}

/// Random graph on `1..=max_n` vertices with a uniformly chosen edge count
/// up to `max_edges(n)`.
pub fn random_graph(
    rng: &mut StdRng,
    max_n: usize,
    max_edges: impl Fn(usize) -> usize,
) -> SimpleGraph {
    let n = rng.gen_range(1..=max_n);
    let all: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let m = rng.gen_range(0..=max_edges(n).min(all.len()));
    let mut chosen = all;
    for i in 0..m {
        let j = rng.gen_range(i..chosen.len());
        chosen.swap(i, j);
    }
    chosen.truncate(m);
    SimpleGraph::from_edges(n, chosen)
}

/// Every labelled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        SimpleGraph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        )
    })
}
