use crate::complexes::Z2Complex;
use crate::graphs::Graph;

use super::Z2Error;

/// Csorba's graph of a free `Z2`-complex: one vertex per non-empty simplex,
/// `σ ~ τ` when `σ ⊆ ν(τ)` or `τ ⊆ ν(σ)`. Vertices are labeled by their
/// simplices, in dimension-then-lexicographic order.
pub fn csorba_graph(k: &Z2Complex) -> Result<Graph, Z2Error> {
    if !k.has_involution() {
        return Err(Z2Error::MissingInvolution);
    }
    let simplices: Vec<&Vec<u32>> = k.simplices().iter().flatten().collect();
    let images: Vec<Vec<u32>> = simplices.iter().map(|s| k.antipode_simplex(s)).collect();
    let subset = |a: &[u32], b: &[u32]| a.iter().all(|x| b.binary_search(x).is_ok());
    let mut edges = Vec::new();
    for i in 0..simplices.len() {
        for j in i + 1..simplices.len() {
            if subset(simplices[i], &images[j]) || subset(simplices[j], &images[i]) {
                edges.push((i, j));
            }
        }
    }
    let labels = simplices.iter().map(|s| k.format_simplex(s)).collect();
    Ok(Graph::from_edges(simplices.len(), edges).expect("indices in range").with_labels(labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{box_complex, cross_polytope_boundary};
    use crate::graphs::complete;
    use crate::homology::{homology, Ring};

    #[test]
    fn two_points_give_an_edge() {
        let g = csorba_graph(&cross_polytope_boundary(1).unwrap()).unwrap();
        assert_eq!(g, complete(2).unwrap().with_labels(vec!["{-1}".into(), "{+1}".into()]));
    }

    #[test]
    fn square() {
        let sq = cross_polytope_boundary(2).unwrap();
        let g = csorba_graph(&sq).unwrap();
        assert_eq!(g.n(), 8);
        // antipodal vertices, each edge with the antipodes of its ends,
        // antipodal edges
        assert_eq!(g.edge_count(), 2 + 8 + 2);
        assert_eq!(homology(&box_complex(&g), Ring::Gf2).trimmed_betti(), &[0, 1]);
    }
}
