use std::collections::BTreeSet;

use crate::bitset::BitSet;
use crate::graphs::Graph;

use super::poset::label_subset;
use super::{Label, Poset, Z2Complex};

/// Signed label of graph vertex `v` on side `positive`.
pub fn signed_vertex(v: usize, positive: bool) -> Label {
    Label::Signed { index: v as u32 + 1, positive }
}

/// Labels of the simplex `A′ ⊎ A″`.
pub fn signed_simplex(a1: &BitSet, a2: &BitSet) -> Vec<Label> {
    let mut s: Vec<Label> = a1.iter().map(|v| signed_vertex(v, true)).chain(a2.iter().map(|v| signed_vertex(v, false))).collect();
    s.sort();
    s
}

/// Split signed labels back into `(A′, A″)` over a graph on `n` vertices.
pub fn split_signed(labels: &[Label], n: usize) -> (BitSet, BitSet) {
    let mut a1 = BitSet::new(n);
    let mut a2 = BitSet::new(n);
    for l in labels {
        match l {
            Label::Signed { index, positive: true } => a1.insert(*index as usize - 1),
            Label::Signed { index, positive: false } => a2.insert(*index as usize - 1),
            other => panic!("unsigned label {other} in a box complex simplex"),
        }
    }
    (a1, a2)
}

/// All sets of the form `CN(Y)`, i.e. every intersection of neighbourhoods,
/// together with `V = CN(∅)`.
pub fn closed_sets(g: &Graph) -> Vec<BitSet> {
    let mut seen: BTreeSet<BitSet> = BTreeSet::new();
    let mut stack = vec![g.vertex_set()];
    seen.insert(g.vertex_set());
    while let Some(x) = stack.pop() {
        for v in 0..g.n() {
            let y = x.intersection(g.neighbors(v));
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Formal concepts `(X, CN(X))` of the adjacency relation with both sides
/// non-empty. These are the facets of `B(G)`.
pub fn bicliques_closed(g: &Graph) -> Vec<(BitSet, BitSet)> {
    closed_sets(g)
        .into_iter()
        .filter(|x| !x.is_empty())
        .filter_map(|x| {
            let y = g.common_neighbors(&x);
            (!y.is_empty()).then_some((x, y))
        })
        .collect()
}

/// The box complex `B(G)`: simplices `A′ ⊎ A″` with `G[A′,A″]` complete and
/// `CN(A′)`, `CN(A″)` non-empty. The involution swaps `+v` and `-v`.
pub fn box_complex(g: &Graph) -> Z2Complex {
    let facets = bicliques_closed(g).iter().map(|(a, b)| signed_simplex(a, b)).collect();
    Z2Complex::new(facets, true).expect("box complexes are free Z2-complexes")
}

/// The box complex `B₀(G)`: simplices `A′ ⊎ A″` with `A′ ∩ A″ = ∅` and
/// `G[A′,A″]` complete.
pub fn box0_complex(g: &Graph) -> Z2Complex {
    let mut facets: Vec<Vec<Label>> = bicliques_closed(g).iter().map(|(a, b)| signed_simplex(a, b)).collect();
    if g.n() > 0 {
        facets.push(signed_simplex(&g.vertex_set(), &g.empty_set()));
        facets.push(signed_simplex(&g.empty_set(), &g.vertex_set()));
    }
    Z2Complex::new(facets, true).expect("box complexes are free Z2-complexes")
}

/// The neighbourhood complex `N(G)`: vertex sets with a common neighbour.
pub fn neighborhood_complex(g: &Graph) -> Z2Complex {
    let facets = (0..g.n())
        .map(|v| g.neighbors(v).iter().map(|u| Label::Vertex(u as u32)).collect())
        .collect();
    Z2Complex::new(facets, false).expect("neighbourhood complex")
}

/// `Hom(K₂, G)`: pairs `(A′, A″)` of non-empty vertex sets with `G[A′,A″]`
/// complete, ordered componentwise. Elements are labeled by the simplex
/// `A′ ⊎ A″`; the involution swaps the two sides.
pub fn hom_poset(g: &Graph) -> Poset {
    let b = box_complex(g);
    let labels: Vec<Label> = b
        .simplices()
        .iter()
        .flatten()
        .filter(|s| {
            let ls = b.simplex_labels(s);
            ls.iter().any(|l| matches!(l, Label::Signed { positive: true, .. }))
                && ls.iter().any(|l| matches!(l, Label::Signed { positive: false, .. }))
        })
        .map(|s| b.simplex_as_label(s))
        .collect();
    Poset::new(labels, label_subset, true).expect("Hom(K2,G) is a Z2-poset")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, cycle};

    fn all_admissible_pairs(g: &Graph, with_cn: bool) -> BTreeSet<Vec<Label>> {
        let n = g.n();
        let mut out = BTreeSet::new();
        // every vertex is in A′, A″ or neither
        let total = 3usize.pow(n as u32);
        for code in 0..total {
            let mut a1 = BitSet::new(n);
            let mut a2 = BitSet::new(n);
            let mut c = code;
            for v in 0..n {
                match c % 3 {
                    1 => a1.insert(v),
                    2 => a2.insert(v),
                    _ => {}
                }
                c /= 3;
            }
            if a1.is_empty() && a2.is_empty() {
                continue;
            }
            if !g.is_complete_between(&a1, &a2) {
                continue;
            }
            if with_cn && (g.common_neighbors(&a1).is_empty() || g.common_neighbors(&a2).is_empty()) {
                continue;
            }
            out.insert(signed_simplex(&a1, &a2));
        }
        out
    }

    fn all_simplices(k: &Z2Complex) -> BTreeSet<Vec<Label>> {
        k.simplices().iter().flatten().map(|s| k.simplex_labels(s)).collect()
    }

    #[test]
    fn box_complex_matches_brute_force() {
        let graphs = [
            complete(2).unwrap(),
            complete(3).unwrap(),
            cycle(4).unwrap(),
            cycle(5).unwrap(),
            Graph::from_edges(5, [(0, 1), (1, 2), (3, 4)]).unwrap(),
            Graph::edgeless(2),
        ];
        for g in &graphs {
            assert_eq!(all_simplices(&box_complex(g)), all_admissible_pairs(g, true), "{g:?}");
            assert_eq!(all_simplices(&box0_complex(g)), all_admissible_pairs(g, false), "{g:?}");
        }
    }

    #[test]
    fn small_box_complexes() {
        let b = box_complex(&complete(2).unwrap());
        assert_eq!(b.to_facet_list(), "-1,+2\n+1,-2\n");
        let b = box_complex(&cycle(4).unwrap());
        assert_eq!(b.facets().len(), 2);
        assert!(b.facets().iter().all(|f| f.len() == 4));
        assert!(box_complex(&Graph::edgeless(3)).is_empty());

        let b0 = box0_complex(&Graph::edgeless(1));
        assert_eq!(b0.to_facet_list(), "-1\n+1\n");
        assert_eq!(box0_complex(&complete(3).unwrap()).facets().len(), 8);
    }

    #[test]
    fn neighborhood_and_hom() {
        let n = neighborhood_complex(&complete(3).unwrap());
        assert_eq!(n.facets(), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert!(neighborhood_complex(&Graph::edgeless(3)).is_empty());
        let n = neighborhood_complex(&cycle(5).unwrap());
        assert_eq!(n.f_vector(), vec![5, 5]);

        let h = hom_poset(&complete(2).unwrap());
        assert_eq!(h.len(), 2);
        assert!(!h.leq(0, 1) && !h.leq(1, 0));
        assert_eq!(hom_poset(&complete(3).unwrap()).len(), 12);
        assert!(hom_poset(&Graph::edgeless(2)).is_empty());
    }
}
