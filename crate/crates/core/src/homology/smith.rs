use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::SparseMatrix;

/// Rank and invariant factors (`> 1`) of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithSummary {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

/// Smith normal form summary. Unit pivots are eliminated sparsely first;
/// whatever remains is diagonalized densely with arbitrary precision.
pub fn smith(m: &SparseMatrix) -> SmithSummary {
    match eliminate_units(m) {
        Some((units, residual)) => {
            let mut s = dense_smith(residual);
            s.rank += units;
            s
        }
        None => {
            let dense = to_dense(m.rows(), m.columns().iter().map(|c| c.iter().map(|&(r, v)| (r, BigInt::from(v))).collect()));
            dense_smith(dense)
        }
    }
}

/// Repeatedly pivot on `±1` entries. Returns the number of pivots and the
/// residual matrix as dense rows, or `None` on `i64` overflow.
fn eliminate_units(m: &SparseMatrix) -> Option<(usize, Vec<Vec<BigInt>>)> {
    let mut cols: Vec<Vec<(u32, i64)>> = m.columns().to_vec();
    for c in cols.iter_mut() {
        c.retain(|&(_, v)| v != 0);
        c.sort_unstable();
    }
    let mut rows: Vec<HashSet<u32>> = vec![HashSet::new(); m.rows()];
    for (ci, c) in cols.iter().enumerate() {
        for &(r, _) in c {
            rows[r as usize].insert(ci as u32);
        }
    }
    let mut alive_col = vec![true; cols.len()];
    let mut alive_row = vec![true; m.rows()];
    let mut units = 0;
    let mut progress = true;
    while progress {
        progress = false;
        for c in 0..cols.len() {
            if !alive_col[c] || cols[c].is_empty() {
                continue;
            }
            let Some(&(r, p)) =
                cols[c].iter().filter(|(_, v)| v.abs() == 1).min_by_key(|(r, _)| rows[*r as usize].len())
            else {
                continue;
            };
            let pivot_col = std::mem::take(&mut cols[c]);
            let others: Vec<u32> = rows[r as usize].iter().copied().filter(|&o| o as usize != c).collect();
            for o in others {
                let o = o as usize;
                let a = cols[o].iter().find(|(rr, _)| *rr == r).map(|&(_, v)| v).expect("row index in sync");
                let factor = a.checked_mul(p)?;
                let updated = axpy(&cols[o], &pivot_col, factor)?;
                for &(rr, _) in &cols[o] {
                    rows[rr as usize].remove(&(o as u32));
                }
                for &(rr, _) in &updated {
                    rows[rr as usize].insert(o as u32);
                }
                cols[o] = updated;
            }
            for &(rr, _) in &pivot_col {
                rows[rr as usize].remove(&(c as u32));
            }
            debug_assert!(rows[r as usize].is_empty());
            alive_col[c] = false;
            alive_row[r as usize] = false;
            units += 1;
            progress = true;
        }
    }
    let row_ids: Vec<usize> = (0..m.rows()).filter(|&r| alive_row[r] && !rows[r].is_empty()).collect();
    let mut row_pos = vec![usize::MAX; m.rows()];
    for (i, &r) in row_ids.iter().enumerate() {
        row_pos[r] = i;
    }
    let residual_cols: Vec<Vec<(u32, BigInt)>> = cols
        .iter()
        .enumerate()
        .filter(|(c, col)| alive_col[*c] && !col.is_empty())
        .map(|(_, col)| col.iter().map(|&(r, v)| (row_pos[r as usize] as u32, BigInt::from(v))).collect())
        .collect();
    Some((units, to_dense(row_ids.len(), residual_cols.into_iter())))
}

/// `x - factor * y` on sorted sparse columns, dropping zeros.
fn axpy(x: &[(u32, i64)], y: &[(u32, i64)], factor: i64) -> Option<Vec<(u32, i64)>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i]);
            i += 1;
        } else if take_y {
            out.push((y[j].0, factor.checked_mul(y[j].1)?.checked_neg()?));
            j += 1;
        } else {
            let v = x[i].1.checked_sub(factor.checked_mul(y[j].1)?)?;
            if v != 0 {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

fn to_dense<I>(rows: usize, cols: I) -> Vec<Vec<BigInt>>
where
    I: Iterator<Item = Vec<(u32, BigInt)>>,
{
    let cols: Vec<Vec<(u32, BigInt)>> = cols.collect();
    let mut dense = vec![vec![BigInt::zero(); cols.len()]; rows];
    for (c, col) in cols.into_iter().enumerate() {
        for (r, v) in col {
            dense[r as usize][c] = v;
        }
    }
    dense
}

/// Diagonalize by row and column operations, pivoting on the entry of
/// smallest absolute value, then normalize the diagonal into invariant
/// factors.
pub(crate) fn dense_smith(mut a: Vec<Vec<BigInt>>) -> SmithSummary {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag: Vec<BigInt> = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        // smallest non-zero entry in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&p);
                for j in t..n {
                    let v = &a[t][j] * &q;
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&p);
                for i in t..m {
                    let v = &a[i][t] * &q;
                    a[i][j] -= v;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // move the smallest remainder in row or column t into the pivot
            let mut best = (t, t);
            for i in t..m {
                if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..n {
                if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    let rank = diag.len();
    normalize(&mut diag);
    let torsion = diag
        .into_iter()
        .filter(|d| !d.is_one())
        .map(|d| d.to_u64().expect("invariant factor fits in u64"))
        .collect();
    SmithSummary { rank, torsion }
}

/// Turn a diagonal into a divisibility chain with the same product of
/// cyclic groups.
fn normalize(d: &mut [BigInt]) {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
}
