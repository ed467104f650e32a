use crate::bitset::BitSet;
use crate::graphs::Graph;

use super::{BoundsError, SizeCaps};

/// For each `k`, the largest `|CN(A)|` over `k`-sets `A`.
fn max_common_neighbors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut best = vec![0usize; n + 1];
    best[0] = n;
    fn rec(g: &Graph, start: usize, k: usize, cn: &BitSet, best: &mut Vec<usize>) {
        for v in start..g.n() {
            let next = cn.intersection(g.neighbors(v));
            if next.is_empty() {
                continue;
            }
            best[k + 1] = best[k + 1].max(next.len());
            rec(g, v + 1, k + 1, &next, best);
        }
    }
    rec(g, 0, 0, &g.vertex_set(), &mut best);
    best
}

/// `b(G)`: the largest `n` such that `G` contains `K_{k,ℓ}` for every
/// `k, ℓ >= 1` with `k + ℓ = n`. Bicliques need not be induced. The
/// condition is vacuous for `n = 1`.
pub fn biclique_parameter(g: &Graph) -> usize {
    let cn = max_common_neighbors(g);
    (2..=g.n()).rev().find(|&n| (1..n).all(|k| k < cn.len() && cn[k] >= n - k)).unwrap_or(1)
}

/// `zig(G)`: the minimum over proper colorings of the longest sequence
/// `v₁,…,v_t` with strictly increasing colors whose odd- and even-indexed
/// vertices are completely joined. Sequences of length one count.
pub fn zigzag_number(g: &Graph, caps: &SizeCaps) -> Result<usize, BoundsError> {
    let n = g.n();
    if n > caps.zig {
        return Err(BoundsError::SizeCap { field: "zig", size: n, cap: caps.zig });
    }
    if n == 0 {
        return Ok(0);
    }
    let mut best = usize::MAX;
    let mut colors = vec![0usize; n];
    for t in 1..=n {
        enumerate_colorings(g, t, 0, 0, &mut colors, &mut |c| {
            let z = longest_zigzag(g, c, best);
            best = best.min(z);
        });
    }
    Ok(best)
}

/// Calls `visit` on every proper coloring `V → {0..t-1}` that uses all `t`
/// colors.
fn enumerate_colorings<F: FnMut(&[usize])>(g: &Graph, t: usize, v: usize, used: u64, colors: &mut Vec<usize>, visit: &mut F) {
    let n = g.n();
    if v == n {
        if used.count_ones() as usize == t {
            visit(colors);
        }
        return;
    }
    // colors still missing must fit in the remaining vertices
    if (t - used.count_ones() as usize) > n - v {
        return;
    }
    for c in 0..t {
        if g.neighbors(v).iter().filter(|&u| u < v).any(|u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        enumerate_colorings(g, t, v + 1, used | 1 << c, colors, visit);
    }
}

/// Longest zigzag for coloring `c`; stops early once `stop` is reached.
pub fn longest_zigzag(g: &Graph, c: &[usize], stop: usize) -> usize {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| c[v]);
    let mut z = Zigzag { g, c, order, sides: [Vec::new(), Vec::new()], best: 0, stop };
    z.extend(0);
    z.best
}

struct Zigzag<'a> {
    g: &'a Graph,
    c: &'a [usize],
    order: Vec<usize>,
    /// Odd- and even-indexed vertices of the current sequence.
    sides: [Vec<usize>; 2],
    best: usize,
    stop: usize,
}

impl Zigzag<'_> {
    fn extend(&mut self, from: usize) {
        let len = self.sides[0].len() + self.sides[1].len();
        self.best = self.best.max(len);
        let side = len % 2;
        let last = (len > 0).then(|| self.c[*self.sides[1 - side].last().expect("non-empty")]);
        for i in from..self.order.len() {
            if self.best >= self.stop {
                return;
            }
            let v = self.order[i];
            if last.is_some_and(|l| self.c[v] <= l) {
                continue;
            }
            if !self.sides[1 - side].iter().all(|&u| self.g.is_adjacent(u, v)) {
                continue;
            }
            self.sides[side].push(v);
            self.extend(i + 1);
            self.sides[side].pop();
        }
    }
}
