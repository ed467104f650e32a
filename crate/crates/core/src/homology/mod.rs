//! Reduced simplicial homology over GF(2) and over the integers.

pub mod gf2;
pub mod smith;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use crate::complexes::Z2Complex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ring {
    Gf2,
    Z,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ring::Gf2 => "gf2",
            Ring::Z => "z",
        })
    }
}

/// Integer matrix stored by sorted sparse columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, columns: Vec<Vec<(u32, i64)>>) -> SparseMatrix {
        SparseMatrix { rows, columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<(u32, i64)>] {
        &self.columns
    }

    /// `self * other`, with entries reduced modulo 2 when `ring` is GF(2).
    pub fn mul(&self, other: &SparseMatrix, ring: Ring) -> SparseMatrix {
        assert_eq!(self.cols(), other.rows);
        let columns = other
            .columns
            .iter()
            .map(|oc| {
                let mut acc: std::collections::BTreeMap<u32, i64> = Default::default();
                for &(k, b) in oc {
                    for &(i, a) in &self.columns[k as usize] {
                        *acc.entry(i).or_default() += a * b;
                    }
                }
                acc.into_iter()
                    .map(|(i, v)| (i, if ring == Ring::Gf2 { v.rem_euclid(2) } else { v }))
                    .filter(|&(_, v)| v != 0)
                    .collect()
            })
            .collect();
        SparseMatrix { rows: self.rows, columns }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }
}

/// Augmented simplicial chain complex. `boundary(k)` maps `k`-chains to
/// `(k-1)`-chains; `boundary(0)` is the augmentation onto the empty simplex.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    ring: Ring,
    sizes: Vec<usize>,
    boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Number of `k`-simplices for `k = 0..=dim`.
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn dim(&self) -> isize {
        self.sizes.len() as isize - 1
    }

    pub fn boundary(&self, k: usize) -> &SparseMatrix {
        &self.boundaries[k]
    }

    /// Whether every composite `∂_{k-1} ∂_k` vanishes.
    pub fn boundary_squared_is_zero(&self) -> bool {
        self.boundaries.windows(2).all(|w| w[0].mul(&w[1], self.ring).is_zero())
    }
}

/// The augmented chain complex of `k` with the given coefficients.
pub fn chain_complex(k: &Z2Complex, ring: Ring) -> ChainComplex {
    let simplices = k.simplices();
    let sizes: Vec<usize> = simplices.iter().map(Vec::len).collect();
    let boundaries: Vec<SparseMatrix> = (0..simplices.len())
        .into_par_iter()
        .map(|d| {
            if d == 0 {
                return SparseMatrix::new(1, vec![vec![(0, 1)]; sizes[0]]);
            }
            let columns = simplices[d]
                .iter()
                .map(|s| {
                    let mut col: Vec<(u32, i64)> = (0..s.len())
                        .map(|i| {
                            let mut face = s.clone();
                            face.remove(i);
                            let row = k.simplex_position(&face).expect("faces of simplices are simplices");
                            let sign = match ring {
                                Ring::Gf2 => 1,
                                Ring::Z if i % 2 == 0 => 1,
                                Ring::Z => -1,
                            };
                            (row as u32, sign)
                        })
                        .collect();
                    col.sort_unstable();
                    col
                })
                .collect();
            SparseMatrix::new(sizes[d - 1], columns)
        })
        .collect();
    let cc = ChainComplex { ring, sizes, boundaries };
    debug_assert!(cc.boundary_squared_is_zero());
    cc
}

/// Reduced Betti numbers and torsion per dimension `0..=dim`. For the empty
/// complex both lists are empty and `H̃₋₁` has rank one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologySummary {
    pub ring: Ring,
    pub reduced_betti: Vec<usize>,
    pub torsion: Vec<Vec<u64>>,
}

impl HomologySummary {
    /// Rank of `H̃₋₁`: one exactly for the empty complex.
    pub fn h_minus_one(&self) -> usize {
        usize::from(self.reduced_betti.is_empty())
    }

    /// Whether `H̃_k` is the zero group.
    pub fn vanishes_at(&self, k: usize) -> bool {
        self.reduced_betti.get(k).is_none_or(|&b| b == 0) && self.torsion.get(k).is_none_or(Vec::is_empty)
    }

    pub fn is_acyclic(&self) -> bool {
        !self.reduced_betti.is_empty() && (0..self.reduced_betti.len()).all(|k| self.vanishes_at(k))
    }

    /// Betti numbers with trailing zeros removed.
    pub fn trimmed_betti(&self) -> &[usize] {
        let end = self.reduced_betti.iter().rposition(|&b| b != 0).map_or(0, |i| i + 1);
        &self.reduced_betti[..end]
    }

    /// Unreduced Betti numbers (`+1` in dimension zero).
    pub fn unreduced_betti(&self) -> Vec<usize> {
        let mut b = self.reduced_betti.clone();
        if let Some(b0) = b.first_mut() {
            *b0 += 1;
        }
        b
    }

    /// Compact human form, e.g. `gf2 [0, 1, 2]` or `z [0, 0] torsion H1: 2`.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {:?}", self.ring, self.trimmed_betti());
        if self.reduced_betti.is_empty() {
            s = format!("{} empty (H-1 = 1)", self.ring);
        }
        for (k, t) in self.torsion.iter().enumerate() {
            if !t.is_empty() {
                let parts: Vec<String> = t.iter().map(u64::to_string).collect();
                s.push_str(&format!(" torsion H{k}: {}", parts.join(",")));
            }
        }
        s
    }
}

fn ranks(cc: &ChainComplex) -> (Vec<usize>, Vec<Vec<u64>>) {
    let results: Vec<(usize, Vec<u64>)> = cc
        .boundaries
        .par_iter()
        .map(|m| match cc.ring {
            Ring::Gf2 => (gf2::rank(m), Vec::new()),
            Ring::Z => {
                let s = smith::smith(m);
                (s.rank, s.torsion)
            }
        })
        .collect();
    results.into_iter().unzip()
}

/// Reduced homology of `k` over `ring`.
pub fn homology(k: &Z2Complex, ring: Ring) -> HomologySummary {
    let cc = chain_complex(k, ring);
    let (rank, torsion_of) = ranks(&cc);
    let n = cc.sizes.len();
    let reduced_betti = (0..n)
        .map(|d| {
            let next = if d + 1 < n { rank[d + 1] } else { 0 };
            cc.sizes[d] - rank[d] - next
        })
        .collect();
    let torsion = (0..n)
        .map(|d| if d + 1 < n { torsion_of[d + 1].clone() } else { Vec::new() })
        .collect();
    HomologySummary { ring, reduced_betti, torsion }
}

/// Reduced GF(2) Betti numbers.
pub fn betti_gf2(k: &Z2Complex) -> Vec<usize> {
    homology(k, Ring::Gf2).reduced_betti
}

/// Reduced integral homology with torsion.
pub fn homology_z(k: &Z2Complex) -> HomologySummary {
    homology(k, Ring::Z)
}

/// Connectivity value: an integer `>= -2`, or infinite for an acyclic
/// complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Conn {
    Finite(i64),
    Infinite,
}

impl Conn {
    pub fn finite(self) -> Option<i64> {
        match self {
            Conn::Finite(v) => Some(v),
            Conn::Infinite => None,
        }
    }

    /// `self + k`, with infinity absorbing.
    pub fn plus(self, k: i64) -> Conn {
        match self {
            Conn::Finite(v) => Conn::Finite(v + k),
            Conn::Infinite => Conn::Infinite,
        }
    }
}

impl fmt::Display for Conn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conn::Finite(v) => write!(f, "{v}"),
            Conn::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Conn {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Conn::Finite(v) => s.serialize_i64(*v),
            Conn::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Largest `d` with `H̃_k = 0` for all `-1 <= k <= d`.
pub fn connectivity_of(h: &HomologySummary) -> Conn {
    if h.reduced_betti.is_empty() {
        return Conn::Finite(-2);
    }
    match (0..h.reduced_betti.len()).find(|&k| !h.vanishes_at(k)) {
        Some(k) => Conn::Finite(k as i64 - 1),
        None => Conn::Infinite,
    }
}

pub fn homological_connectivity(k: &Z2Complex, ring: Ring) -> Conn {
    connectivity_of(&homology(k, ring))
}

/// Unreduced Betti numbers of a product from those of its factors.
pub fn kunneth_product_betti(bx: &[usize], by: &[usize]) -> Vec<usize> {
    if bx.is_empty() || by.is_empty() {
        return Vec::new();
    }
    let mut c = vec![0; bx.len() + by.len() - 1];
    for (i, a) in bx.iter().enumerate() {
        for (j, b) in by.iter().enumerate() {
            c[i + j] += a * b;
        }
    }
    c
}
