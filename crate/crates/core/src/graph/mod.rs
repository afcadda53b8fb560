//! Simple undirected graphs and the exact metrics computed on Engel graphs.

mod clique;
mod isomorphism;
mod planarity;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::engel::{engel_steps_towards, left_engel_set};
use crate::group::{Elem, Group};

pub use clique::{clique_number, maximum_clique};
pub use isomorphism::{find_isomorphism, graphs_isomorphic};
pub use planarity::{
    is_planar, kuratowski_witness, verify_witness, KuratowskiKind, KuratowskiWitness,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("group {0} is an Engel group; its Engel graph is undefined")]
    EngelGroup(String),
    #[error("diameter of a graph with no vertices")]
    EmptyGraph,
    #[error("label {0} is not a vertex")]
    UnknownVertex(usize),
}

/// Simple undirected graph on vertices `0..n`, each carrying a label (an
/// element index for Engel graphs). Neighbour lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<usize>,
    adjacency: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Graph on `n` vertices labelled `0..n`. Self-loops and duplicate edges
    /// are ignored.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self::with_labels((0..n).collect(), edges)
    }

    pub fn with_labels(
        labels: Vec<usize>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let mut adjacency = vec![Vec::new(); labels.len()];
        for (u, v) in edges {
            if u != v {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        for nb in &mut adjacency {
            nb.sort_unstable();
            nb.dedup();
        }
        SimpleGraph { labels, adjacency }
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    /// Vertex carrying `label`, if any.
    pub fn vertex_of(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adjacency.iter().all(|nb| nb.len() + 1 == n)
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &v in &self.adjacency[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

/// Graph diameter; disconnected graphs have an infinite diameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(&self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(*d),
            Diameter::Infinite => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

/// Vertex sets of the connected components, each sorted, in order of their
/// smallest vertex.
pub fn connected_components(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let mut comp: Vec<Option<usize>> = vec![None; g.vertex_count()];
    let mut components = Vec::new();
    for start in 0..g.vertex_count() {
        if comp[start].is_some() {
            continue;
        }
        let id = components.len();
        comp[start] = Some(id);
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if comp[v].is_none() {
                    comp[v] = Some(id);
                    members.push(v);
                    queue.push_back(v);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    components
}

/// Exact diameter by a breadth-first search from every vertex.
pub fn diameter(g: &SimpleGraph) -> Result<Diameter, GraphError> {
    if g.vertex_count() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let mut best = 0;
    for v in 0..g.vertex_count() {
        for d in g.distances_from(v) {
            match d {
                Some(d) => best = best.max(d),
                None => return Ok(Diameter::Infinite),
            }
        }
    }
    Ok(Diameter::Finite(best))
}

pub fn isolated_vertices(g: &SimpleGraph) -> Vec<usize> {
    (0..g.vertex_count())
        .filter(|&v| g.degree(v) == 0)
        .collect()
}

/// Subgraph induced on the vertices carrying the given labels. Vertex order
/// (and labels) follow `g`.
pub fn induced_subgraph(g: &SimpleGraph, labels: &[usize]) -> Result<SimpleGraph, GraphError> {
    let mut keep = vec![false; g.vertex_count()];
    for &l in labels {
        let v = g.vertex_of(l).ok_or(GraphError::UnknownVertex(l))?;
        keep[v] = true;
    }
    let mut new_index = vec![usize::MAX; g.vertex_count()];
    let mut new_labels = Vec::new();
    for v in 0..g.vertex_count() {
        if keep[v] {
            new_index[v] = new_labels.len();
            new_labels.push(g.label(v));
        }
    }
    let edges: Vec<_> = g
        .edges()
        .filter(|&(u, v)| keep[u] && keep[v])
        .map(|(u, v)| (new_index[u], new_index[v]))
        .collect();
    Ok(SimpleGraph::with_labels(new_labels, edges))
}

/// The Engel graph: vertices `G \ L(G)` in element order, `x ~ y` when
/// neither `[x,_k y]` nor `[y,_k x]` is ever the identity.
pub fn build_engel_graph(group: &Group) -> Result<SimpleGraph, GraphError> {
    let l = left_engel_set(group);
    if l.len() == group.order() {
        return Err(GraphError::EngelGroup(group.name().to_string()));
    }
    let vertices: Vec<Elem> = l.complement(group.order()).iter().collect();
    // reaches[i][a]: [a,_k v_i] = 1 for some k
    let reaches: Vec<Vec<bool>> = vertices
        .iter()
        .map(|&v| {
            engel_steps_towards(group, v)
                .iter()
                .map(Option::is_some)
                .collect()
        })
        .collect();
    let n = vertices.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !reaches[j][vertices[i]] && !reaches[i][vertices[j]] {
                edges.push((i, j));
            }
        }
    }
    Ok(SimpleGraph::with_labels(vertices, edges))
}

/// Summary metrics of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphMetrics {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub component_count: usize,
    /// `None` only for the empty graph.
    pub diameter: Option<Diameter>,
    pub clique_number: usize,
    pub planar: bool,
    pub isolated_count: usize,
}

impl GraphMetrics {
    pub fn of(g: &SimpleGraph) -> Self {
        GraphMetrics {
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            component_count: connected_components(g).len(),
            diameter: diameter(g).ok(),
            clique_number: clique_number(g),
            planar: is_planar(g),
            isolated_count: isolated_vertices(g).len(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engel::engel_adjacent;
    use crate::group::{conjugacy_class, make_family, Family};

    fn path3() -> SimpleGraph {
        SimpleGraph::from_edges(3, [(0, 1), (1, 2)])
    }

    #[test]
    fn components() {
        let k3 = SimpleGraph::complete(3);
        assert_eq!(connected_components(&k3), vec![vec![0, 1, 2]]);
        let empty2 = SimpleGraph::from_edges(2, []);
        assert_eq!(connected_components(&empty2), vec![vec![0], vec![1]]);
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter(&SimpleGraph::complete(3)), Ok(Diameter::Finite(1)));
        assert_eq!(diameter(&path3()), Ok(Diameter::Finite(2)));
        assert_eq!(
            diameter(&SimpleGraph::from_edges(1, [])),
            Ok(Diameter::Finite(0))
        );
        assert_eq!(
            diameter(&SimpleGraph::from_edges(2, [])),
            Ok(Diameter::Infinite)
        );
        assert_eq!(
            diameter(&SimpleGraph::from_edges(0, [])),
            Err(GraphError::EmptyGraph)
        );
    }

    #[test]
    fn isolated() {
        assert_eq!(
            isolated_vertices(&SimpleGraph::from_edges(2, [])),
            vec![0, 1]
        );
        assert!(isolated_vertices(&path3()).is_empty());
    }

    #[test]
    fn induced() {
        let g = path3().clone();
        let labels: Vec<usize> = g.labels().to_vec();
        assert_eq!(induced_subgraph(&g, &labels).unwrap(), g);
        assert_eq!(induced_subgraph(&g, &[]).unwrap().vertex_count(), 0);
        let sub = induced_subgraph(&g, &[0, 2]).unwrap();
        assert_eq!(sub.edge_count(), 0);
        assert_eq!(
            induced_subgraph(&g, &[7]),
            Err(GraphError::UnknownVertex(7))
        );
    }

    #[test]
    fn engel_graph_of_s3_is_triangle() {
        let s3 = make_family(&Family::Symmetric(3)).unwrap();
        let e = build_engel_graph(&s3).unwrap();
        assert_eq!(e.vertex_count(), 3);
        assert_eq!(e.edge_count(), 3);
        let names: Vec<String> = e
            .labels()
            .iter()
            .map(|&x| s3.element(x).to_string())
            .collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(sorted, vec!["(1,2)", "(1,3)", "(2,3)"]);
    }

    #[test]
    fn engel_graph_of_nilpotent_group_is_undefined() {
        let c6 = make_family(&Family::Cyclic(6)).unwrap();
        assert!(matches!(
            build_engel_graph(&c6),
            Err(GraphError::EngelGroup(_))
        ));
    }

    #[test]
    fn engel_graph_matches_pairwise_adjacency() {
        for fam in [
            Family::Alternating(4),
            Family::Dihedral(12),
            Family::Symmetric(4),
        ] {
            let g = make_family(&fam).unwrap();
            let e = build_engel_graph(&g).unwrap();
            for u in 0..e.vertex_count() {
                for v in u + 1..e.vertex_count() {
                    assert_eq!(
                        e.has_edge(u, v),
                        engel_adjacent(&g, e.label(u), e.label(v)).unwrap(),
                        "{fam}"
                    );
                }
            }
        }
    }

    #[test]
    fn dihedral_twelve_structure() {
        // [s^m, _k r] = s^((-2)^k m): reflections s^i r and s^j r are joined
        // unless i - j is divisible by 3
        let g = make_family(&Family::Dihedral(12)).unwrap();
        let (s, r) = (g.generators()[0], g.generators()[1]);
        let refl = |i: i64| g.mul(g.pow(s, i), r);
        let e = build_engel_graph(&g).unwrap();
        assert_eq!(e.vertex_count(), 6);
        assert_eq!(e.edge_count(), 12);
        for i in 0..6 {
            for j in i + 1..6 {
                let (u, v) = (e.vertex_of(refl(i)).unwrap(), e.vertex_of(refl(j)).unwrap());
                assert_eq!(e.has_edge(u, v), (j - i) % 3 != 0);
            }
        }
        assert_eq!(diameter(&e), Ok(Diameter::Finite(2)));
        let class = conjugacy_class(&g, r);
        let sub = induced_subgraph(&e, class.as_slice()).unwrap();
        assert_eq!(sub.vertex_count(), 3);
        assert!(sub.is_complete());
    }

    #[test]
    fn metrics_of_triangle() {
        let m = GraphMetrics::of(&SimpleGraph::complete(3));
        assert_eq!(m.vertex_count, 3);
        assert_eq!(m.edge_count, 3);
        assert_eq!(m.component_count, 1);
        assert_eq!(m.diameter, Some(Diameter::Finite(1)));
        assert_eq!(m.clique_number, 3);
        assert!(m.planar);
        assert_eq!(m.isolated_count, 0);
    }
}
