use crate::bitset::BitSet;

use super::{ComplexError, Label, Z2Complex};

/// A finite poset on labeled elements, optionally with the free
/// order-preserving involution given by [`Label::antipode`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<Label>,
    /// `up[x]` holds every `y` with `x <= y`, including `x`.
    up: Vec<BitSet>,
    /// `down[y]` holds every `x` with `x <= y`, including `y`.
    down: Vec<BitSet>,
    involution: Option<Vec<u32>>,
}

impl Poset {
    /// Build from elements and a `leq` predicate. The relation must be a
    /// partial order; the involution, when requested, must be free,
    /// of order two and order preserving.
    pub fn new<F>(mut labels: Vec<Label>, leq: F, antipodal: bool) -> Result<Poset, ComplexError>
    where
        F: Fn(&Label, &Label) -> bool,
    {
        labels.sort();
        labels.dedup();
        let n = labels.len();
        let up: Vec<BitSet> = (0..n)
            .map(|x| BitSet::from_indices(n, (0..n).filter(|&y| x == y || leq(&labels[x], &labels[y]))))
            .collect();
        for x in 0..n {
            for y in up[x].iter() {
                if y != x && up[y].contains(x) {
                    return Err(ComplexError::NotPartialOrder(format!("{} and {} are equivalent", labels[x], labels[y])));
                }
                if !up[y].is_subset(&up[x]) {
                    return Err(ComplexError::NotPartialOrder(format!("not transitive above {}", labels[x])));
                }
            }
        }
        let mut down = vec![BitSet::new(n); n];
        for (x, ups) in up.iter().enumerate() {
            for y in ups.iter() {
                down[y].insert(x);
            }
        }
        let mut p = Poset { labels, up, down, involution: None };
        if antipodal {
            let nu = p
                .labels
                .iter()
                .map(|l| {
                    let a = l.antipode().ok_or_else(|| ComplexError::NotClosed(l.clone()))?;
                    if &a == l {
                        return Err(ComplexError::NotFree(l.clone()));
                    }
                    p.index_of(&a).ok_or_else(|| ComplexError::NotClosed(l.clone()))
                })
                .collect::<Result<Vec<u32>, _>>()?;
            for x in 0..n {
                for y in p.up[x].iter() {
                    if !p.up[nu[x] as usize].contains(nu[y] as usize) {
                        return Err(ComplexError::NotPartialOrder("involution does not preserve the order".into()));
                    }
                }
            }
            p.involution = Some(nu);
        }
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &Label {
        &self.labels[x]
    }

    pub fn index_of(&self, l: &Label) -> Option<u32> {
        self.labels.binary_search(l).ok().map(|i| i as u32)
    }

    pub fn involution(&self) -> Option<&[u32]> {
        self.involution.as_deref()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    /// Elements strictly above `x` with nothing in between.
    pub fn covers(&self, x: usize) -> Vec<usize> {
        let mut above = self.up[x].clone();
        above.remove(x);
        above
            .iter()
            .filter(|&y| {
                let mut between = self.down[y].intersection(&above);
                between.remove(y);
                between.is_empty()
            })
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.down[x].len() == 1).collect()
    }

    /// Longest chain ending at each element, counted in elements.
    pub fn chain_lengths_below(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        // elements with larger up-sets come first in any linear extension
        order.sort_by_key(|&x| std::cmp::Reverse(self.up[x].len()));
        let mut len = vec![1usize; n];
        for &x in &order {
            for y in self.up[x].iter() {
                if y != x {
                    len[y] = len[y].max(len[x] + 1);
                }
            }
        }
        len
    }

    /// Largest number of elements in a chain; `0` for the empty poset.
    pub fn height(&self) -> usize {
        self.chain_lengths_below().into_iter().max().unwrap_or(0)
    }

    /// All maximal chains, each listed bottom to top.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let covers: Vec<Vec<usize>> = (0..self.len()).map(|x| self.covers(x)).collect();
        let mut out = Vec::new();
        let mut path = Vec::new();
        fn dfs(x: usize, covers: &[Vec<usize>], path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            path.push(x);
            if covers[x].is_empty() {
                out.push(path.clone());
            }
            for &y in &covers[x] {
                dfs(y, covers, path, out);
            }
            path.pop();
        }
        for m in self.minimal_elements() {
            dfs(m, &covers, &mut path, &mut out);
        }
        out
    }
}

/// Non-empty simplices of `k` ordered by inclusion, labeled as simplices.
pub fn face_poset(k: &Z2Complex) -> Poset {
    let labels: Vec<Label> = k.simplices().iter().flatten().map(|s| k.simplex_as_label(s)).collect();
    Poset::new(labels, label_subset, k.has_involution()).expect("face poset of a valid complex")
}

/// Inclusion between [`Label::Simplex`] labels.
pub fn label_subset(a: &Label, b: &Label) -> bool {
    match (a, b) {
        (Label::Simplex(x), Label::Simplex(y)) => x.len() <= y.len() && x.iter().all(|l| y.binary_search(l).is_ok()),
        _ => a == b,
    }
}

/// The complex of chains of `p`, with the induced involution.
pub fn order_complex(p: &Poset) -> Z2Complex {
    let facets: Vec<Vec<u32>> = p
        .maximal_chains()
        .into_iter()
        .map(|c| {
            let mut c: Vec<u32> = c.into_iter().map(|x| x as u32).collect();
            c.sort_unstable();
            c
        })
        .collect();
    Z2Complex::from_indexed(p.labels().to_vec(), facets, p.involution().is_some())
        .expect("order complex of a Z2-poset is a free Z2-complex")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: u32) -> Poset {
        Poset::new((0..n).map(Label::Vertex).collect(), |a, b| a <= b, false).unwrap()
    }

    #[test]
    fn chains_and_antichains() {
        let c = chain(3);
        assert_eq!(c.height(), 3);
        let k = order_complex(&c);
        assert_eq!(k.facets(), &[vec![0, 1, 2]]);

        let a = Poset::new(vec![Label::plus(1), Label::minus(1)], |x, y| x == y, true).unwrap();
        assert_eq!(a.height(), 1);
        let k = order_complex(&a);
        assert_eq!(k.f_vector(), vec![2]);
        assert!(k.has_involution());
    }

    #[test]
    fn rejects_non_orders() {
        let r = Poset::new(vec![Label::Vertex(0), Label::Vertex(1)], |_, _| true, false);
        assert!(matches!(r, Err(ComplexError::NotPartialOrder(_))));
        let labels: Vec<Label> = (0..3).map(Label::Vertex).collect();
        let r = Poset::new(labels, |a, b| matches!((a, b), (Label::Vertex(0), Label::Vertex(1)) | (Label::Vertex(1), Label::Vertex(2))), false);
        assert!(r.is_err());
    }

    #[test]
    fn face_poset_of_an_edge() {
        let k = Z2Complex::new(vec![vec![Label::Vertex(0), Label::Vertex(1)]], false).unwrap();
        let p = face_poset(&k);
        assert_eq!(p.len(), 3);
        assert_eq!(p.height(), 2);
        assert_eq!(p.maximal_chains().len(), 2);
        assert!(face_poset(&Z2Complex::empty()).is_empty());
    }
}
