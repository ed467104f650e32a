use std::fmt::Write as _;

use super::parse::{ParseError, ParseErrorKind};
use super::{Graph, GraphError};
use crate::bitset::BitSet;

/// A hypergraph on the ground set `0..m`. Edges are indexed, not
/// deduplicated, so a Kneser representation keeps one edge per graph vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    ground: usize,
    edges: Vec<BitSet>,
    labels: Option<Vec<String>>,
}

impl Hypergraph {
    pub fn new(ground: usize, edges: Vec<Vec<usize>>) -> Result<Hypergraph, GraphError> {
        let mut sets = Vec::with_capacity(edges.len());
        for e in edges {
            if e.is_empty() {
                return Err(GraphError::Parameter("hypergraph edges must be non-empty".into()));
            }
            if let Some(&x) = e.iter().find(|&&x| x >= ground) {
                return Err(GraphError::OutOfRange { index: x, n: ground });
            }
            sets.push(BitSet::from_indices(ground, e));
        }
        Ok(Hypergraph { ground, edges: sets, labels: None })
    }

    /// The complete `k`-uniform hypergraph on `m` elements.
    pub fn complete_uniform(m: usize, k: usize) -> Result<Hypergraph, GraphError> {
        if k == 0 || k > m {
            return Err(GraphError::Parameter(format!("need 1 <= k <= m (m={m}, k={k})")));
        }
        let mut edges = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..m {
                cur.push(i);
                rec(i + 1, m, k, cur, out);
                cur.pop();
            }
        }
        rec(0, m, k, &mut cur, &mut edges);
        Hypergraph::new(m, edges)
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn edges(&self) -> &[BitSet] {
        &self.edges
    }

    pub fn ground_labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The graph whose vertices are the edges, adjacent when disjoint.
    pub fn disjointness_graph(&self) -> Graph {
        let e = &self.edges;
        let mut pairs = Vec::new();
        for a in 0..e.len() {
            for b in a + 1..e.len() {
                if e[a].is_disjoint(&e[b]) {
                    pairs.push((a, b));
                }
            }
        }
        Graph::from_edges(e.len(), pairs).expect("valid indices")
    }

    /// Whether edge `i` stands for vertex `i` of `g` in a Kneser
    /// representation: one edge per vertex, pairwise distinct, adjacency
    /// exactly when disjoint.
    pub fn represents(&self, g: &Graph) -> bool {
        if self.edges.len() != g.n() {
            return false;
        }
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if self.edges[u] == self.edges[v] {
                    return false;
                }
                if self.edges[u].is_disjoint(&self.edges[v]) != g.is_adjacent(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Text form: header `h <m>`, then one `e <x> <y> ...` line per edge.
    pub fn to_text(&self) -> String {
        let mut s = format!("h {}\n", self.ground);
        for e in &self.edges {
            let xs: Vec<String> = e.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "e {}", xs.join(" "));
        }
        s
    }

    pub fn parse(text: &str) -> Result<Hypergraph, ParseError> {
        let mut ground = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = i + 1;
            if line.is_empty() || line.starts_with('c') || line.starts_with('#') {
                continue;
            }
            let malformed = || ParseError { line: lineno, kind: ParseErrorKind::Malformed(line.into()) };
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks[0] {
                "h" if toks.len() == 2 && ground.is_none() => {
                    ground = Some(toks[1].parse::<usize>().map_err(|_| malformed())?);
                }
                "e" if toks.len() >= 2 => {
                    let m = ground.ok_or(ParseError { line: lineno, kind: ParseErrorKind::MissingHeader })?;
                    let mut e = Vec::new();
                    for t in &toks[1..] {
                        let x: i64 = t.parse().map_err(|_| malformed())?;
                        if x < 0 || x >= m as i64 {
                            return Err(ParseError { line: lineno, kind: ParseErrorKind::OutOfRange(x) });
                        }
                        e.push(x as usize);
                    }
                    edges.push(e);
                }
                _ => return Err(malformed()),
            }
        }
        let m = ground.ok_or(ParseError { line: 1, kind: ParseErrorKind::MissingHeader })?;
        Ok(Hypergraph::new(m, edges).expect("validated above"))
    }
}

/// Kneser representation of `g`: vertex `v` becomes the set of complement
/// edges incident to `v` plus one private element. Ground elements are the
/// complement edges in lexicographic order followed by the `n` private
/// elements.
pub fn standard_kneser_representation(g: &Graph) -> Hypergraph {
    let n = g.n();
    let co = g.complement().edges();
    let ground = co.len() + n;
    let mut edges: Vec<Vec<usize>> = (0..n).map(|v| vec![co.len() + v]).collect();
    for (i, &(u, v)) in co.iter().enumerate() {
        edges[u].push(i);
        edges[v].push(i);
    }
    let mut labels: Vec<String> = co.iter().map(|(u, v)| format!("c{u}-{v}")).collect();
    labels.extend((0..n).map(|v| format!("x{v}")));
    let mut h = Hypergraph::new(ground, edges).expect("valid representation");
    h.labels = Some(labels);
    h
}
