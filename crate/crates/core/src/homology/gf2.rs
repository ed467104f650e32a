use crate::bitset::BitSet;

use super::SparseMatrix;

/// Column count times row count above which the sparse reduction is used.
const DENSE_LIMIT: usize = 1 << 24;

/// Rank over GF(2). Entries are read modulo 2.
pub fn rank(m: &SparseMatrix) -> usize {
    if m.rows() * m.cols() <= DENSE_LIMIT {
        rank_dense(m)
    } else {
        rank_sparse(m)
    }
}

/// Gaussian elimination on bitset rows.
pub fn rank_dense(m: &SparseMatrix) -> usize {
    let mut rows = vec![BitSet::new(m.cols()); m.rows()];
    for (c, col) in m.columns().iter().enumerate() {
        for &(r, v) in col {
            if v & 1 != 0 {
                rows[r as usize].insert(c);
            }
        }
    }
    rank_of_rows(rows)
}

/// Rank of a list of bitset rows.
pub fn rank_of_rows(mut rows: Vec<BitSet>) -> usize {
    let mut rank = 0;
    while let Some(pivot) = rows.pop() {
        let Some(p) = pivot.first() else { continue };
        rank += 1;
        for r in rows.iter_mut() {
            if r.contains(p) {
                r.xor_with(&pivot);
            }
        }
    }
    rank
}

/// Column reduction keyed by the lowest non-zero row, on sorted sparse
/// columns.
pub fn rank_sparse(m: &SparseMatrix) -> usize {
    let mut pivot_of_row: Vec<Option<Vec<u32>>> = vec![None; m.rows()];
    let mut rank = 0;
    for col in m.columns() {
        let mut c: Vec<u32> = col.iter().filter(|(_, v)| v & 1 != 0).map(|&(r, _)| r).collect();
        c.sort_unstable();
        while let Some(&low) = c.last() {
            match &pivot_of_row[low as usize] {
                Some(p) => c = xor_sorted(&c, p),
                None => break,
            }
        }
        if let Some(&low) = c.last() {
            pivot_of_row[low as usize] = Some(c);
            rank += 1;
        }
    }
    rank
}

fn xor_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}
