//! Simple finite graphs: representation, generators, products and joins.

mod generators;
mod hypergraph;
mod parse;

pub use generators::*;
pub use hypergraph::{standard_kneser_representation, Hypergraph};
pub use parse::{parse_graph, ParseError};

use std::fmt::Write as _;

use thiserror::Error;

use crate::bitset::BitSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {index} out of range for a graph on {n} vertices")]
    OutOfRange { index: usize, n: usize },
    #[error("invalid parameter: {0}")]
    Parameter(String),
}

/// A simple, finite, undirected, loopless graph on vertices `0..n`.
///
/// Adjacency is stored as one bitset per vertex. Graphs are immutable once
/// built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BitSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// The graph on `n` vertices with the given edges. Repeated edges are
    /// merged; loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![BitSet::new(n); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::OutOfRange { index: x, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj, labels: None })
    }

    pub fn edgeless(n: usize) -> Graph {
        Graph { adj: vec![BitSet::new(n); n], labels: None }
    }

    /// Attach human-readable vertex names (used for Kneser-type graphs).
    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn vertex_set(&self) -> BitSet {
        BitSet::full(self.n())
    }

    pub fn empty_set(&self) -> BitSet {
        BitSet::new(self.n())
    }

    /// `CN(A)`: vertices adjacent to every member of `a`. `CN(∅) = V`.
    pub fn common_neighbors(&self, a: &BitSet) -> BitSet {
        let mut out = self.vertex_set();
        for v in a.iter() {
            out.intersect_with(&self.adj[v]);
        }
        out
    }

    /// Whether every vertex of `a` is adjacent to every vertex of `b`.
    pub fn is_complete_between(&self, a: &BitSet, b: &BitSet) -> bool {
        a.iter().all(|v| b.is_subset(&self.adj[v]))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut s = self.adj[v].complement();
                s.remove(v);
                s
            })
            .collect();
        Graph { adj, labels: self.labels.clone() }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = BitSet::new(n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            for w in self.adj[v].iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == n
    }

    /// A proper 2-coloring if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let sv = side[v].unwrap();
                for w in self.adj[v].iter() {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            stack.push(w);
                        }
                        Some(sw) if sw == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Whether `c` is a proper coloring.
    pub fn is_proper_coloring(&self, c: &[usize]) -> bool {
        self.edges().iter().all(|&(u, v)| c[u] != c[v])
    }

    /// Serialize in the edge-list format accepted by [`parse_graph`].
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("p {}\n", self.n());
        for (u, v) in self.edges() {
            let _ = writeln!(s, "e {u} {v}");
        }
        s
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// Categorical product: `(u,v) ~ (u',v')` iff `u ~ u'` in `g` and `v ~ v'`
/// in `h`. Vertex `(u, v)` gets index `u * |V(h)| + v`.
pub fn graph_product(g: &Graph, h: &Graph) -> Graph {
    let (n, m) = (g.n(), h.n());
    let mut edges = Vec::new();
    for (u, u2) in g.edges() {
        for (v, v2) in h.edges() {
            edges.push((u * m + v, u2 * m + v2));
            edges.push((u * m + v2, u2 * m + v));
        }
    }
    let labels = (0..n * m).map(|i| format!("({},{})", g.label(i / m), h.label(i % m))).collect();
    Graph::from_edges(n * m, edges).expect("product edges are valid").with_labels(labels)
}

/// Join: disjoint union of `g` and `h` plus every edge between them. The
/// vertices of `h` are shifted by `|V(g)|`.
pub fn graph_join(g: &Graph, h: &Graph) -> Graph {
    let (n, m) = (g.n(), h.n());
    let mut edges = g.edges();
    edges.extend(h.edges().into_iter().map(|(u, v)| (u + n, v + n)));
    for u in 0..n {
        for v in 0..m {
            edges.push((u, n + v));
        }
    }
    Graph::from_edges(n + m, edges).expect("join edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn common_neighbors_examples() {
        let k3 = complete(3).unwrap();
        let a = BitSet::from_indices(3, [0]);
        assert_eq!(k3.common_neighbors(&a).to_vec(), vec![1, 2]);
        assert_eq!(k3.common_neighbors(&k3.empty_set()), k3.vertex_set());
        let c4 = cycle(4).unwrap();
        let a = BitSet::from_indices(4, [0, 2]);
        assert_eq!(c4.common_neighbors(&a).to_vec(), vec![1, 3]);
    }

    #[test]
    fn loops_and_ranges_rejected() {
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(GraphError::Loop(1)));
        assert!(matches!(Graph::from_edges(2, [(0, 2)]), Err(GraphError::OutOfRange { .. })));
    }

    #[test]
    fn product_examples() {
        let k2 = complete(2).unwrap();
        let k3 = complete(3).unwrap();
        let p = graph_product(&k2, &k3);
        assert_eq!(p.n(), 6);
        assert_eq!(p.edge_count(), 6);
        assert!(p.is_connected());
        assert!((0..6).all(|v| p.degree(v) == 2));

        let p = graph_product(&k2, &k2);
        assert_eq!(p.edge_count(), 2);
        assert!(!p.is_connected());
        // brute force: (u,v)~(u',v') iff u!=u' and v!=v'
        for a in 0..4 {
            for b in 0..4 {
                let expect = a / 2 != b / 2 && a % 2 != b % 2;
                assert_eq!(p.is_adjacent(a, b), expect);
            }
        }

        let e = Graph::edgeless(3);
        assert_eq!(graph_product(&k3, &e).edge_count(), 0);
    }

    #[test]
    fn join_examples() {
        let k2 = complete(2).unwrap();
        let j = graph_join(&k2, &k2);
        assert_eq!(j, complete(4).unwrap());
        let c5 = cycle(5).unwrap();
        let j = graph_join(&c5, &c5);
        assert_eq!(j.edge_count(), 5 + 5 + 25);
        let cone = graph_join(&Graph::edgeless(1), &c5);
        assert_eq!(cone.degree(0), 5);
    }

    #[test]
    fn bipartite_and_connected() {
        assert!(cycle(6).unwrap().is_bipartite());
        assert!(!cycle(5).unwrap().is_bipartite());
        assert!(!Graph::edgeless(2).is_connected());
        assert!(Graph::edgeless(0).is_connected());
    }
}
