use crate::complexes::Poset;

use super::{BoundsError, SizeCaps};

/// A map `P → Q_t` given as signed levels `±1..±(t+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QtMap {
    pub t: i64,
    pub values: Vec<i64>,
}

/// `x ⪯ y` in `Q_t`: equal, or strictly smaller absolute value.
pub fn qt_leq(x: i64, y: i64) -> bool {
    x == y || x.abs() < y.abs()
}

/// Whether `values` is an order-preserving `Z2`-map from `p` into `Q_t`.
pub fn is_qt_map(p: &Poset, m: &QtMap) -> bool {
    let Some(nu) = p.involution() else { return false };
    let top = m.t + 1;
    if m.values.len() != p.len() || m.values.iter().any(|&v| v == 0 || v.abs() > top) {
        return false;
    }
    (0..p.len()).all(|x| m.values[nu[x] as usize] == -m.values[x])
        && (0..p.len()).all(|x| (0..p.len()).all(|y| !p.leq(x, y) || qt_leq(m.values[x], m.values[y])))
}

/// `Xind(P)`: the least `t` admitting an order-preserving `Z2`-map into
/// `Q_t`, with a witness. The empty poset gives `t = -1`.
///
/// A map into `Q_t` is a level `1..t+1` per orbit, monotone along the
/// order, with a sign per element such that comparable elements on the same
/// level share their sign. Each `t` is decided by a SAT solver.
pub fn cross_index(p: &Poset, caps: &SizeCaps) -> Result<QtMap, BoundsError> {
    if p.len() > caps.xind {
        return Err(BoundsError::SizeCap { field: "xind", size: p.len(), cap: caps.xind });
    }
    if p.is_empty() {
        return Ok(QtMap { t: -1, values: Vec::new() });
    }
    let nu = p.involution().ok_or(BoundsError::MissingInvolution)?;
    for t in 0..p.height() as i64 {
        if let Some(values) = solve_qt(p, nu, t as usize) {
            let m = QtMap { t, values };
            debug_assert!(is_qt_map(p, &m));
            return Ok(m);
        }
    }
    unreachable!("the chain-length map always lands in Q_(height-1)")
}

/// A literal that may be constant.
#[derive(Clone, Copy)]
enum Lit {
    Var(i32),
    True,
    False,
}

impl Lit {
    fn not(self) -> Lit {
        match self {
            Lit::Var(v) => Lit::Var(-v),
            Lit::True => Lit::False,
            Lit::False => Lit::True,
        }
    }
}

fn add_clause(solver: &mut cadical::Solver, lits: &[Lit]) {
    let mut out = Vec::with_capacity(lits.len());
    for &l in lits {
        match l {
            Lit::True => return,
            Lit::False => {}
            Lit::Var(v) => out.push(v),
        }
    }
    solver.add_clause(out);
}

/// Orbit `o` has level above `j`: variable `o·t + j` for `1 <= j <= t`.
/// The sign of the orbit representative is variable `k·t + o + 1`.
fn solve_qt(p: &Poset, nu: &[u32], t: usize) -> Option<Vec<i64>> {
    let n = p.len();
    let mut orbit = vec![(0usize, false); n];
    let mut k = 0;
    for x in 0..n {
        if x < nu[x] as usize {
            orbit[x] = (k, false);
            orbit[nu[x] as usize] = (k, true);
            k += 1;
        }
    }
    let above = |x: usize, j: usize| -> Lit {
        if j == 0 {
            Lit::True
        } else if j > t {
            Lit::False
        } else {
            Lit::Var((orbit[x].0 * t + j) as i32)
        }
    };
    let sign = |x: usize| -> Lit {
        let v = (k * t + orbit[x].0 + 1) as i32;
        Lit::Var(if orbit[x].1 { -v } else { v })
    };
    let mut solver = cadical::Solver::new();
    for x in (0..n).filter(|&x| !orbit[x].1) {
        for j in 1..t {
            add_clause(&mut solver, &[above(x, j + 1).not(), above(x, j)]);
        }
    }
    add_clause(&mut solver, &[sign(0)]);
    // the pair (νx, νy) gives the same clauses as (x, y)
    for x in (0..n).filter(|&x| !orbit[x].1) {
        for y in (0..n).filter(|&y| y != x && p.leq(x, y)) {
            for j in 1..=t {
                add_clause(&mut solver, &[above(x, j).not(), above(y, j)]);
            }
            for j in 1..=t + 1 {
                let same_level = [above(x, j - 1).not(), above(y, j)];
                add_clause(&mut solver, &[same_level[0], same_level[1], sign(x).not(), sign(y)]);
                add_clause(&mut solver, &[same_level[0], same_level[1], sign(x), sign(y).not()]);
            }
        }
    }
    if solver.solve() != Some(true) {
        return None;
    }
    let holds = |l: Lit| match l {
        Lit::True => true,
        Lit::False => false,
        Lit::Var(v) => solver.value(v).unwrap_or(false),
    };
    Some(
        (0..n)
            .map(|x| {
                let level = 1 + (1..=t).filter(|&j| holds(above(x, j))).count() as i64;
                if holds(sign(x)) {
                    level
                } else {
                    -level
                }
            })
            .collect(),
    )
}

/// The bound `Xind(P) <= height(P) - 1` with its witness: each element
/// goes to the length of the longest chain ending at it, signed by orbit.
pub fn cross_index_upper(p: &Poset) -> Result<QtMap, BoundsError> {
    if p.is_empty() {
        return Ok(QtMap { t: -1, values: Vec::new() });
    }
    let nu = p.involution().ok_or(BoundsError::MissingInvolution)?;
    let len = p.chain_lengths_below();
    let values = (0..p.len()).map(|x| if x < nu[x] as usize { len[x] as i64 } else { -(len[x] as i64) }).collect();
    let m = QtMap { t: p.height() as i64 - 1, values };
    assert!(is_qt_map(p, &m), "chain-length map must be a Z2-map into Q_t");
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{box_complex, face_poset, hom_poset, Label};
    use crate::graphs::complete;

    #[test]
    fn hom_posets_of_complete_graphs() {
        let caps = SizeCaps::default();
        let p = hom_poset(&complete(2).unwrap());
        assert_eq!(cross_index(&p, &caps).unwrap().t, 0);
        let p = hom_poset(&complete(3).unwrap());
        assert_eq!(cross_index(&p, &caps).unwrap().t, 1);
        assert_eq!(cross_index_upper(&p).unwrap().t, 1);
        let p = hom_poset(&complete(4).unwrap());
        assert_eq!(cross_index(&p, &caps).unwrap().t, 2);
    }

    #[test]
    fn empty_and_chain_pairs() {
        let caps = SizeCaps::default();
        let empty = Poset::new(vec![], |_, _| false, true).unwrap();
        assert_eq!(cross_index(&empty, &caps).unwrap().t, -1);
        // two antipodal chains of height 2
        let labels = vec![
            Label::Simplex(vec![Label::plus(1)]),
            Label::Simplex(vec![Label::plus(1), Label::plus(2)]),
            Label::Simplex(vec![Label::minus(1)]),
            Label::Simplex(vec![Label::minus(1), Label::minus(2)]),
        ];
        let p = Poset::new(labels, crate::complexes::label_subset, true).unwrap();
        assert_eq!(cross_index_upper(&p).unwrap().t, 1);
        assert_eq!(cross_index(&p, &caps).unwrap().t, 0);
    }

    #[test]
    fn face_poset_height_is_dimension_plus_one() {
        let b = box_complex(&complete(4).unwrap());
        let p = face_poset(&b);
        assert_eq!(cross_index_upper(&p).unwrap().t, b.dim() as i64);
    }
}
