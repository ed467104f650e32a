use crate::graphs::{complete, complete_bipartite, cycle, graph_join, graph_product, kneser, schrijver, Graph};

/// A named corpus graph. `homology_only` members are too large for the
/// exponential searches and enter only the homology checks.
#[derive(Clone, Debug)]
pub struct CorpusGraph {
    pub name: String,
    pub graph: Graph,
    pub homology_only: bool,
}

fn entry(name: &str, graph: Graph) -> CorpusGraph {
    CorpusGraph { name: name.to_string(), graph, homology_only: false }
}

/// `K1..K5`, `C4..C8`, `K1,3`, `K2,2`, `K3,3`, Petersen `KG(5,2)`,
/// `SG(5,2)`, `K2×K3`, `K2∗K2` and `C5∗C5`.
pub fn standard_corpus() -> Vec<CorpusGraph> {
    let mut out = Vec::new();
    for n in 1..=5 {
        out.push(entry(&format!("K{n}"), complete(n).unwrap()));
    }
    for n in 4..=8 {
        out.push(entry(&format!("C{n}"), cycle(n).unwrap()));
    }
    for (m, n) in [(1, 3), (2, 2), (3, 3)] {
        out.push(entry(&format!("K{m},{n}"), complete_bipartite(m, n).unwrap()));
    }
    out.push(entry("KG(5,2)", kneser(5, 2).unwrap()));
    out.push(entry("SG(5,2)", schrijver(5, 2).unwrap()));
    out.push(entry("K2xK3", graph_product(&complete(2).unwrap(), &complete(3).unwrap())));
    out.push(entry("K2*K2", graph_join(&complete(2).unwrap(), &complete(2).unwrap())));
    let c5 = cycle(5).unwrap();
    out.push(CorpusGraph { name: "C5*C5".into(), graph: graph_join(&c5, &c5), homology_only: true });
    out
}

/// Look up a corpus graph by name.
pub fn corpus_graph(name: &str) -> Option<Graph> {
    standard_corpus().into_iter().find(|c| c.name == name).map(|c| c.graph)
}
