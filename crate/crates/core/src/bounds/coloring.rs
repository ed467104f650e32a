use crate::graphs::Graph;

use super::{BoundsError, SizeCaps};

/// Adjacency as `u64` masks; callers check `n <= 64`.
fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u64, |m, u| m | 1 << u)).collect()
}

fn check_cap(g: &Graph, caps: &SizeCaps) -> Result<(), BoundsError> {
    let cap = caps.chi.min(64);
    if g.n() > cap {
        return Err(BoundsError::SizeCap { field: "chi", size: g.n(), cap });
    }
    Ok(())
}

/// `ω(G)` by branch and bound, pruning with greedy colorings of the
/// candidate set.
pub fn clique_number(g: &Graph, caps: &SizeCaps) -> Result<usize, BoundsError> {
    check_cap(g, caps)?;
    let adj = masks(g);
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut best = 0;
    expand(&adj, 0, all, &mut best);
    Ok(best)
}

fn expand(adj: &[u64], size: usize, mut cand: u64, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    // greedy color classes give an upper bound on any clique inside `cand`
    let mut order = Vec::new();
    let mut bound = Vec::new();
    let mut rest = cand;
    let mut color = 0;
    while rest != 0 {
        color += 1;
        let mut avail = rest;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1 << v) & !adj[v];
            rest &= !(1 << v);
            order.push(v);
            bound.push(color);
        }
    }
    for i in (0..order.len()).rev() {
        if size + bound[i] <= *best {
            return;
        }
        let v = order[i];
        expand(adj, size + 1, cand & adj[v], best);
        cand &= !(1 << v);
    }
}

/// `χ(G)` by DSATUR backtracking for increasing numbers of colors,
/// starting from `ω(G)`.
pub fn chromatic_number(g: &Graph, caps: &SizeCaps) -> Result<usize, BoundsError> {
    check_cap(g, caps)?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let adj = masks(g);
    let mut k = clique_number(g, caps)?.max(1);
    loop {
        let mut colors = vec![usize::MAX; n];
        if color_with(&adj, k, &mut colors, 0) {
            debug_assert!(g.is_proper_coloring(&colors));
            return Ok(k);
        }
        k += 1;
    }
}

/// An optimal proper coloring.
pub fn optimal_coloring(g: &Graph, caps: &SizeCaps) -> Result<Vec<usize>, BoundsError> {
    let k = chromatic_number(g, caps)?;
    let mut colors = vec![usize::MAX; g.n()];
    if g.n() > 0 {
        assert!(color_with(&masks(g), k, &mut colors, 0));
    }
    Ok(colors)
}

fn color_with(adj: &[u64], k: usize, colors: &mut [usize], used: usize) -> bool {
    let n = adj.len();
    // most saturated uncolored vertex, ties by degree
    let mut pick = None;
    let mut key = (0usize, 0usize);
    for v in 0..n {
        if colors[v] != usize::MAX {
            continue;
        }
        let mut seen = 0u64;
        let mut nb = adj[v];
        let mut uncolored_deg = 0;
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if colors[u] == usize::MAX {
                uncolored_deg += 1;
            } else {
                seen |= 1 << colors[u];
            }
        }
        let cand = (seen.count_ones() as usize, uncolored_deg);
        if pick.is_none() || cand > key {
            pick = Some((v, seen));
            key = cand;
        }
    }
    let Some((v, seen)) = pick else { return true };
    // a fresh color is interchangeable with any other unused one
    for c in 0..k.min(used + 1) {
        if seen >> c & 1 == 0 {
            colors[v] = c;
            if color_with(adj, k, colors, used.max(c + 1)) {
                return true;
            }
        }
    }
    colors[v] = usize::MAX;
    false
}
