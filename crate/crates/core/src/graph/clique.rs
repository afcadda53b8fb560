//! Exact maximum clique by branch and bound with a greedy colouring bound.

use super::SimpleGraph;

#[derive(Clone)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(n: usize) -> Self {
        BitSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn intersect(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }
}

struct Search {
    // adjacency over the relabelled vertices 0..n (sorted by degree, high first)
    neighbors: Vec<BitSet>,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search {
    /// Greedy sequential colouring of `candidates`; returns vertices in colour
    /// order with the number of colours used so far (an upper bound on the
    /// clique size among that vertex and everything before it).
    fn colour(&self, candidates: &BitSet) -> Vec<(usize, usize)> {
        let mut uncoloured = candidates.clone();
        let mut order = Vec::new();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut available = uncoloured.clone();
            while let Some(v) = available.first() {
                available.remove(v);
                uncoloured.remove(v);
                for (w, nb) in available.words.iter_mut().zip(&self.neighbors[v].words) {
                    *w &= !nb;
                }
                order.push((v, colour));
            }
        }
        order
    }

    fn expand(&mut self, mut candidates: BitSet) {
        let order = self.colour(&candidates);
        for &(v, bound) in order.iter().rev() {
            if self.current.len() + bound <= self.best.len() {
                return;
            }
            self.current.push(v);
            let next = candidates.intersect(&self.neighbors[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            candidates.remove(v);
        }
    }
}

/// A maximum clique (vertex indices, sorted). Empty for the empty graph.
pub fn maximum_clique(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let neighbors = order
        .iter()
        .map(|&v| {
            let mut bs = BitSet::new(n);
            for &w in g.neighbors(v) {
                bs.insert(position[w]);
            }
            bs
        })
        .collect();
    let mut search = Search {
        neighbors,
        best: vec![0],
        current: Vec::new(),
    };
    let mut all = BitSet::new(n);
    for i in 0..n {
        all.insert(i);
    }
    search.expand(all);
    debug_assert!(search.best.iter().all(|&a| search
        .best
        .iter()
        .all(|&b| a == b || search.neighbors[a].contains(b))));
    let mut clique: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    clique.sort_unstable();
    clique
}

/// `ω(g)`; 0 for the empty graph.
pub fn clique_number(g: &SimpleGraph) -> usize {
    maximum_clique(g).len()
}
