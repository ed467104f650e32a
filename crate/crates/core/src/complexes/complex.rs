use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::sync::OnceLock;

use thiserror::Error;

use super::Label;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("label {0} has no antipode in the complex")]
    NotClosed(Label),
    #[error("involution fixes vertex {0}")]
    NotFree(Label),
    #[error("involution maps facet {0} outside the complex")]
    NotSimplicial(String),
    #[error("simplex {0} contains a vertex together with its antipode")]
    MeetsImage(String),
    #[error("not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("involution required")]
    MissingInvolution,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A finite abstract simplicial complex stored by its facets, optionally
/// carrying a free simplicial involution.
///
/// Vertices are indexed `0..vertex_count()` in label order. Facets are
/// sorted index lists forming an antichain. The involution, when present,
/// is the label antipode (sign swap), stored as a vertex permutation; it is
/// fixed-point free and no simplex contains a vertex together with its
/// image.
#[derive(Clone)]
pub struct Z2Complex {
    labels: Vec<Label>,
    facets: Vec<Vec<u32>>,
    involution: Option<Vec<u32>>,
    simplices: OnceLock<Vec<Vec<Vec<u32>>>>,
    lookup: OnceLock<Vec<HashMap<Vec<u32>, usize>>>,
}

impl Z2Complex {
    /// Build from facets given by labels. Non-maximal and repeated facets
    /// are dropped, as are empty ones. With `antipodal`, the involution is
    /// [`Label::antipode`] and is validated.
    pub fn new(facets: Vec<Vec<Label>>, antipodal: bool) -> Result<Z2Complex, ComplexError> {
        let mut labels: Vec<Label> = facets.iter().flatten().cloned().collect();
        labels.sort();
        labels.dedup();
        let index = |l: &Label| labels.binary_search(l).expect("label collected above") as u32;
        let idx_facets: Vec<Vec<u32>> = facets
            .iter()
            .map(|f| {
                let mut v: Vec<u32> = f.iter().map(index).collect();
                v.sort_unstable();
                v.dedup();
                v
            })
            .collect();
        Self::from_indexed(labels, idx_facets, antipodal)
    }

    /// Build from sorted unique `labels` and facets over their indices.
    pub(crate) fn from_indexed(
        labels: Vec<Label>,
        facets: Vec<Vec<u32>>,
        antipodal: bool,
    ) -> Result<Z2Complex, ComplexError> {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        let facets = maximal_sets(facets);
        // drop labels that appear in no facet
        let mut used = vec![false; labels.len()];
        for f in &facets {
            for &v in f {
                used[v as usize] = true;
            }
        }
        let (labels, facets) = if used.iter().all(|&u| u) {
            (labels, facets)
        } else {
            let mut remap = vec![u32::MAX; labels.len()];
            let mut kept = Vec::new();
            for (i, l) in labels.into_iter().enumerate() {
                if used[i] {
                    remap[i] = kept.len() as u32;
                    kept.push(l);
                }
            }
            let facets = facets.into_iter().map(|f| f.into_iter().map(|v| remap[v as usize]).collect()).collect();
            (kept, facets)
        };
        let mut k = Z2Complex {
            labels,
            facets,
            involution: None,
            simplices: OnceLock::new(),
            lookup: OnceLock::new(),
        };
        if antipodal {
            k.involution = Some(k.antipodal_permutation()?);
            k.check_involution()?;
        }
        Ok(k)
    }

    /// The complex with no vertices.
    pub fn empty() -> Z2Complex {
        Z2Complex::from_indexed(Vec::new(), Vec::new(), false).expect("empty complex")
    }

    fn antipodal_permutation(&self) -> Result<Vec<u32>, ComplexError> {
        self.labels
            .iter()
            .map(|l| {
                let a = l.antipode().ok_or_else(|| ComplexError::NotClosed(l.clone()))?;
                if &a == l {
                    return Err(ComplexError::NotFree(l.clone()));
                }
                self.index_of(&a).ok_or_else(|| ComplexError::NotClosed(l.clone()))
            })
            .collect()
    }

    /// Verify the involution: order two, free on vertices, simplicial on
    /// facets, and no facet meets its own image.
    pub fn check_involution(&self) -> Result<(), ComplexError> {
        let nu = self.involution.as_ref().ok_or(ComplexError::MissingInvolution)?;
        for (v, &w) in nu.iter().enumerate() {
            if w as usize == v {
                return Err(ComplexError::NotFree(self.labels[v].clone()));
            }
            if nu[w as usize] as usize != v {
                return Err(ComplexError::NotSimplicial(format!("order of involution at {}", self.labels[v])));
            }
        }
        for f in &self.facets {
            if f.iter().any(|&v| f.binary_search(&nu[v as usize]).is_ok()) {
                return Err(ComplexError::MeetsImage(self.format_simplex(f)));
            }
            let img = self.antipode_simplex(f);
            if !self.contains_simplex(&img) {
                return Err(ComplexError::NotSimplicial(self.format_simplex(f)));
            }
        }
        Ok(())
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, v: u32) -> &Label {
        &self.labels[v as usize]
    }

    pub fn index_of(&self, l: &Label) -> Option<u32> {
        self.labels.binary_search(l).ok().map(|i| i as u32)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn facets(&self) -> &[Vec<u32>] {
        &self.facets
    }

    pub fn facet_labels(&self) -> Vec<Vec<Label>> {
        self.facets.iter().map(|f| f.iter().map(|&v| self.labels[v as usize].clone()).collect()).collect()
    }

    pub fn involution(&self) -> Option<&[u32]> {
        self.involution.as_deref()
    }

    pub fn has_involution(&self) -> bool {
        self.involution.is_some()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension; `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    /// Image of a simplex under the involution, sorted.
    pub fn antipode_simplex(&self, s: &[u32]) -> Vec<u32> {
        let nu = self.involution.as_ref().expect("complex has no involution");
        let mut img: Vec<u32> = s.iter().map(|&v| nu[v as usize]).collect();
        img.sort_unstable();
        img
    }

    /// All non-empty simplices, grouped by dimension, each group sorted.
    pub fn simplices(&self) -> &[Vec<Vec<u32>>] {
        self.simplices.get_or_init(|| {
            let top = self.dim();
            if top < 0 {
                return Vec::new();
            }
            let top = top as usize;
            let mut by_dim: Vec<HashSet<Vec<u32>>> = vec![HashSet::new(); top + 1];
            for f in &self.facets {
                by_dim[f.len() - 1].insert(f.clone());
            }
            for d in (1..=top).rev() {
                let (lower, upper) = by_dim.split_at_mut(d);
                let target = &mut lower[d - 1];
                for s in &upper[0] {
                    for skip in 0..s.len() {
                        let mut face = Vec::with_capacity(s.len() - 1);
                        face.extend_from_slice(&s[..skip]);
                        face.extend_from_slice(&s[skip + 1..]);
                        target.insert(face);
                    }
                }
            }
            by_dim
                .into_iter()
                .map(|set| {
                    let mut v: Vec<Vec<u32>> = set.into_iter().collect();
                    v.sort_unstable();
                    v
                })
                .collect()
        })
    }

    fn lookup(&self) -> &[HashMap<Vec<u32>, usize>] {
        self.lookup.get_or_init(|| {
            self.simplices()
                .iter()
                .map(|group| group.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
                .collect()
        })
    }

    /// Position of a sorted simplex within `simplices()[dim]`.
    pub fn simplex_position(&self, s: &[u32]) -> Option<usize> {
        if s.is_empty() {
            return None;
        }
        self.lookup().get(s.len() - 1)?.get(s).copied()
    }

    /// Whether a sorted vertex list is a simplex. The empty list is.
    pub fn contains_simplex(&self, s: &[u32]) -> bool {
        s.is_empty() || self.simplex_position(s).is_some()
    }

    /// Whether the given labels span a simplex.
    pub fn contains_labels(&self, ls: &[Label]) -> bool {
        let mut idx = Vec::with_capacity(ls.len());
        for l in ls {
            match self.index_of(l) {
                Some(i) => idx.push(i),
                None => return false,
            }
        }
        idx.sort_unstable();
        idx.dedup();
        idx.len() == ls.len() && self.contains_simplex(&idx)
    }

    pub fn simplex_count(&self) -> usize {
        self.simplices().iter().map(Vec::len).sum()
    }

    /// Number of simplices per dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices().iter().map(Vec::len).collect()
    }

    /// Unreduced Euler characteristic.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().iter().enumerate().map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
    }

    pub fn simplex_labels(&self, s: &[u32]) -> Vec<Label> {
        s.iter().map(|&v| self.labels[v as usize].clone()).collect()
    }

    pub fn simplex_as_label(&self, s: &[u32]) -> Label {
        Label::Simplex(self.simplex_labels(s))
    }

    pub fn format_simplex(&self, s: &[u32]) -> String {
        self.simplex_as_label(s).to_string()
    }

    /// Every facet of `self` is a simplex of `other` (compared by label).
    pub fn is_subcomplex_of(&self, other: &Z2Complex) -> bool {
        self.facet_labels().iter().all(|f| other.contains_labels(f))
    }

    /// Same labels and same facets.
    pub fn same_as(&self, other: &Z2Complex) -> bool {
        self.labels == other.labels && self.facets == other.facets
    }

    /// The same complex with the involution forgotten.
    pub fn without_involution(&self) -> Z2Complex {
        let mut k = self.clone();
        k.involution = None;
        k
    }

    /// One facet per line, labels separated by commas.
    pub fn to_facet_list(&self) -> String {
        let mut s = String::new();
        for f in self.facet_labels() {
            let parts: Vec<String> = f.iter().map(Label::to_string).collect();
            let _ = writeln!(s, "{}", parts.join(","));
        }
        s
    }

    /// Parse a facet list. The antipodal involution is attached when every
    /// label has an antipode present in the complex and the result is a
    /// valid free involution.
    pub fn parse_facet_list(text: &str) -> Result<Z2Complex, ComplexError> {
        let mut facets = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut f = Vec::new();
            for tok in line.split(',') {
                let tok = tok.trim();
                if tok.is_empty() {
                    return Err(ComplexError::Parse { line: i + 1, msg: format!("empty label in `{line}`") });
                }
                if !tok.starts_with('{') && tok.contains(char::is_whitespace) {
                    return Err(ComplexError::Parse { line: i + 1, msg: format!("label `{tok}` contains whitespace") });
                }
                f.push(Label::parse(tok));
            }
            facets.push(f);
        }
        Z2Complex::new(facets.clone(), true).or_else(|_| Z2Complex::new(facets, false))
    }
}

impl std::fmt::Debug for Z2Complex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let facets: Vec<String> = self.facets.iter().map(|s| self.format_simplex(s)).collect();
        f.debug_struct("Z2Complex")
            .field("facets", &facets)
            .field("involution", &self.involution.is_some())
            .finish()
    }
}

impl PartialEq for Z2Complex {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other) && self.involution == other.involution
    }
}

/// Keep the inclusion-maximal sets among sorted, deduplicated index lists.
fn maximal_sets(mut sets: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    sets.retain(|s| !s.is_empty());
    sets.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<Vec<u32>> = Vec::new();
    let mut containing: HashMap<u32, Vec<usize>> = HashMap::new();
    for s in sets {
        let subsumed = containing
            .get(&s[0])
            .is_some_and(|ids| ids.iter().any(|&id| kept[id].len() > s.len() && is_sorted_subset(&s, &kept[id])));
        if subsumed {
            continue;
        }
        for &v in &s {
            containing.entry(v).or_default().push(kept.len());
        }
        kept.push(s);
    }
    kept.sort_unstable();
    kept
}

fn is_sorted_subset(a: &[u32], b: &[u32]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}
