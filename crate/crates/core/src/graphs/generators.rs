use super::{Graph, GraphError};

fn param(msg: impl Into<String>) -> GraphError {
    GraphError::Parameter(msg.into())
}

/// `K_n`.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(param("complete graph needs n >= 1"));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges)
}

/// `C_n`, vertices in cyclic order.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(param("cycle needs n >= 3"));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `K_{m,n}` with parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
    if m == 0 || n == 0 {
        return Err(param("complete bipartite graph needs both parts non-empty"));
    }
    let edges = (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v)));
    Graph::from_edges(m + n, edges)
}

/// The `s`-stable Kneser graph: vertices are the `k`-subsets `X` of
/// `{1..n}` with `s <= |i - j| <= n - s` for distinct `i, j` in `X`;
/// adjacency is disjointness. `s = 1` gives `KG(n,k)` and `s = 2` gives the
/// Schrijver graph `SG(n,k)`. Vertices are labeled by their subsets and
/// listed in lexicographic order.
pub fn stable_kneser(n: usize, k: usize, s: usize) -> Result<Graph, GraphError> {
    if k == 0 || s == 0 {
        return Err(param("stable Kneser graph needs k >= 1 and s >= 1"));
    }
    if n + 1 < 2 * k {
        return Err(param(format!("stable Kneser graph needs n >= 2k-1 (n={n}, k={k})")));
    }
    let subsets: Vec<Vec<usize>> = k_subsets(n, k)
        .into_iter()
        .filter(|x| {
            x.iter().enumerate().all(|(a, &i)| {
                x[a + 1..].iter().all(|&j| {
                    let d = j - i;
                    s <= d && d + s <= n
                })
            })
        })
        .collect();
    let masks: Vec<u64> = subsets.iter().map(|x| x.iter().fold(0u64, |m, &i| m | 1 << i)).collect();
    let mut edges = Vec::new();
    for a in 0..masks.len() {
        for b in a + 1..masks.len() {
            if masks[a] & masks[b] == 0 {
                edges.push((a, b));
            }
        }
    }
    let labels = subsets
        .iter()
        .map(|x| {
            let parts: Vec<String> = x.iter().map(|i| i.to_string()).collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    Ok(Graph::from_edges(subsets.len(), edges)?.with_labels(labels))
}

/// `KG(n,k)`.
pub fn kneser(n: usize, k: usize) -> Result<Graph, GraphError> {
    stable_kneser(n, k, 1)
}

/// `SG(n,k)`.
pub fn schrijver(n: usize, k: usize) -> Result<Graph, GraphError> {
    stable_kneser(n, k, 2)
}

/// All `k`-subsets of `{1..n}` in lexicographic order.
fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    assert!(n < 64, "ground set too large");
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            if n - i + 1 < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}
