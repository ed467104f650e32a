use crate::graphs::Hypergraph;

use super::{BoundsError, SizeCaps};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Part {
    Open,
    Red,
    Blue,
    Removed,
}

/// `cd(H)`: the fewest ground elements whose removal (together with every
/// edge meeting them) leaves a 2-colorable hypergraph. Iterative deepening
/// on the number of removed elements over red/blue/removed assignments.
pub fn colorability_defect(h: &Hypergraph, caps: &SizeCaps) -> Result<usize, BoundsError> {
    let m = h.ground_size();
    if m > caps.cd {
        return Err(BoundsError::SizeCap { field: "cd", size: m, cap: caps.cd });
    }
    let edges: Vec<Vec<usize>> = h.edges().iter().map(|e| e.to_vec()).collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (i, e) in edges.iter().enumerate() {
        for &x in e {
            incident[x].push(i);
        }
    }
    // elements on many edges first
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&x| std::cmp::Reverse(incident[x].len()));
    let mut search = Search { edges: &edges, incident: &incident, order, part: vec![Part::Open; m] };
    for budget in 0..=m {
        if search.assign(0, budget) {
            return Ok(budget);
        }
    }
    unreachable!("removing every element always succeeds")
}

struct Search<'a> {
    edges: &'a [Vec<usize>],
    incident: &'a [Vec<usize>],
    order: Vec<usize>,
    part: Vec<Part>,
}

impl Search<'_> {
    fn monochromatic(&self, e: usize) -> bool {
        let first = self.part[self.edges[e][0]];
        (first == Part::Red || first == Part::Blue) && self.edges[e].iter().all(|&x| self.part[x] == first)
    }

    fn assign(&mut self, i: usize, budget: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let x = self.order[i];
        // symmetry: the first colored element is red
        let any_colored = self.order[..i].iter().any(|&y| matches!(self.part[y], Part::Red | Part::Blue));
        let mut choices = vec![Part::Red];
        if any_colored {
            choices.push(Part::Blue);
        }
        if budget > 0 {
            choices.push(Part::Removed);
        }
        for p in choices {
            self.part[x] = p;
            let ok = p == Part::Removed || !self.incident[x].iter().any(|&e| self.monochromatic(e));
            let rest = if p == Part::Removed { budget - 1 } else { budget };
            if ok && self.assign(i + 1, rest) {
                self.part[x] = Part::Open;
                return true;
            }
        }
        self.part[x] = Part::Open;
        false
    }
}
