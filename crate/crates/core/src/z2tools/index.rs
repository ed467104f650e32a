use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use crate::bitset::BitSet;
use crate::complexes::{barycentric_subdivision, Label, Z2Complex};
use crate::homology::gf2::rank_of_rows;

use super::Z2Error;

/// Orbit complex of a subdivided free `Z2`-complex together with the
/// characteristic cocycle of the double cover.
#[derive(Clone, Debug)]
pub struct QuotientData {
    /// The subdivision whose quotient was taken.
    pub cover: Z2Complex,
    /// Orbit complex; vertex `i` is the orbit of `section[i]`.
    pub quotient: Z2Complex,
    /// Representative vertex of `cover` for each quotient vertex.
    pub section: Vec<u32>,
    /// `w` on quotient edges `(u, v)` with `u < v`.
    pub cocycle: BTreeMap<(u32, u32), bool>,
}

impl QuotientData {
    pub fn w(&self, u: u32, v: u32) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        self.cocycle[&key]
    }

    /// Whether `w` sums to zero around every triangle of the quotient.
    pub fn is_cocycle(&self) -> bool {
        self.quotient
            .simplices()
            .get(2)
            .is_none_or(|tris| tris.iter().all(|t| !(self.w(t[0], t[1]) ^ self.w(t[1], t[2]) ^ self.w(t[0], t[2]))))
    }

    /// Rebuild the double cover from the quotient and `w`, labeling the
    /// lift `(q, 0)` by the section vertex and `(q, 1)` by its antipode.
    pub fn double_cover(&self) -> Z2Complex {
        let nu = self.cover.involution().expect("cover has an involution");
        let lift = |q: u32, flip: bool| {
            let v = self.section[q as usize];
            let v = if flip { nu[v as usize] } else { v };
            self.cover.label(v).clone()
        };
        let mut facets = Vec::new();
        for f in self.quotient.facets() {
            for b in [false, true] {
                facets.push(f.iter().map(|&q| lift(q, b ^ (q != f[0] && self.w(f[0], q)))).collect());
            }
        }
        Z2Complex::new(facets, true).expect("reconstructed cover is a free Z2-complex")
    }

    /// Quotient facet list followed by `w <u> <v> <0|1>` lines.
    pub fn to_text(&self) -> String {
        let mut s = self.quotient.to_facet_list();
        for (&(u, v), &w) in &self.cocycle {
            let _ = writeln!(s, "w {} {} {}", self.quotient.label(u), self.quotient.label(v), u8::from(w));
        }
        s
    }
}

/// `K/Z₂` after one barycentric subdivision, with the cocycle `w`.
pub fn quotient_complex(k: &Z2Complex) -> Result<QuotientData, Z2Error> {
    if !k.has_involution() {
        return Err(Z2Error::MissingInvolution);
    }
    let cover = barycentric_subdivision(k);
    cover.check_involution().map_err(Z2Error::Complex)?;
    let nu = cover.involution().expect("subdivision keeps the involution").to_vec();
    let section: Vec<u32> = (0..cover.vertex_count() as u32).filter(|&v| v < nu[v as usize]).collect();
    let mut orbit = vec![0u32; cover.vertex_count()];
    for (i, &v) in section.iter().enumerate() {
        orbit[v as usize] = i as u32;
        orbit[nu[v as usize] as usize] = i as u32;
    }
    let labels: Vec<Label> = section.iter().map(|&v| cover.label(v).clone()).collect();
    let facets: Vec<Vec<u32>> = cover
        .facets()
        .iter()
        .map(|f| {
            let mut q: Vec<u32> = f.iter().map(|&v| orbit[v as usize]).collect();
            q.sort_unstable();
            q.dedup();
            assert_eq!(q.len(), f.len(), "simplex meets its image after subdivision");
            q
        })
        .collect();
    let quotient = Z2Complex::from_indexed(labels, facets, false).map_err(Z2Error::Complex)?;
    let mut cocycle = BTreeMap::new();
    if let Some(edges) = quotient.simplices().get(1) {
        for e in edges {
            let (a, b) = (section[e[0] as usize], section[e[1] as usize]);
            let same = cover.contains_simplex(&sorted2(a, b));
            let cross = cover.contains_simplex(&sorted2(a, nu[b as usize]));
            assert!(same ^ cross, "edge of the quotient must have exactly one lift through the section");
            cocycle.insert((e[0], e[1]), cross);
        }
    }
    Ok(QuotientData { cover, quotient, section, cocycle })
}

fn sorted2(a: u32, b: u32) -> Vec<u32> {
    if a < b {
        vec![a, b]
    } else {
        vec![b, a]
    }
}

/// Largest `n` with `wⁿ` not a coboundary, over a semi-simplicial complex
/// given by cell counts, face lists of each cell, and the value of `wⁿ` on
/// each `n`-cell.
fn top_cup_power<F, W>(cells: &[usize], faces: F, wpow: W) -> usize
where
    F: Fn(usize, usize) -> Vec<usize>,
    W: Fn(usize, usize) -> bool,
{
    let mut n = 0;
    while n + 1 < cells.len() {
        let m = n + 1;
        let w: BitSet = BitSet::from_indices(cells[m], (0..cells[m]).filter(|&c| wpow(m, c)));
        if w.is_empty() {
            break;
        }
        let mut rows = vec![BitSet::new(cells[m]); cells[m - 1]];
        for c in 0..cells[m] {
            for f in faces(m, c) {
                rows[f].toggle(c);
            }
        }
        let base = rank_of_rows(rows.clone());
        rows.push(w);
        if rank_of_rows(rows) == base {
            break;
        }
        n = m;
    }
    n
}

/// Cohomological index of a free `Z2`-complex, computed on the orbit
/// complex of `K` itself: one cell per orbit of simplices, vertices of a
/// cell ordered by orbit rank.
pub fn cohomological_index(k: &Z2Complex) -> Result<usize, Z2Error> {
    let orbits = orbit_count(k)?;
    cohomological_index_ordered(k, &(0..orbits as u32).collect::<Vec<_>>(), &vec![false; orbits])
}

fn orbit_count(k: &Z2Complex) -> Result<usize, Z2Error> {
    if k.is_empty() {
        return Err(Z2Error::Empty);
    }
    let nu = k.involution().ok_or(Z2Error::MissingInvolution)?;
    Ok((0..nu.len()).filter(|&v| v < nu[v] as usize).count())
}

/// As [`cohomological_index`] with an explicit rank for each vertex orbit
/// (orbits listed by their smaller vertex) and a choice of section: orbit
/// `i` is represented by its larger vertex when `flip[i]` is set.
pub fn cohomological_index_ordered(k: &Z2Complex, rank: &[u32], flip: &[bool]) -> Result<usize, Z2Error> {
    let orbits = orbit_count(k)?;
    assert_eq!(rank.len(), orbits);
    assert_eq!(flip.len(), orbits);
    let nu = k.involution().expect("checked above");
    let mut orbit_of = vec![0usize; nu.len()];
    let mut off_section = vec![false; nu.len()];
    let mut i = 0;
    for v in 0..nu.len() {
        let w = nu[v] as usize;
        if v < w {
            orbit_of[v] = i;
            orbit_of[w] = i;
            off_section[v] = flip[i];
            off_section[w] = !flip[i];
            i += 1;
        }
    }
    // canonical representative of each simplex orbit, per dimension
    let mut cells: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut lookup: Vec<HashMap<Vec<u32>, usize>> = Vec::new();
    for group in k.simplices() {
        let mut reps = Vec::new();
        let mut map = HashMap::new();
        for s in group {
            let img = k.antipode_simplex(s);
            if *s < img {
                let mut ordered = s.clone();
                ordered.sort_by_key(|&v| rank[orbit_of[v as usize]]);
                map.insert(s.clone(), reps.len());
                reps.push(ordered);
            }
        }
        cells.push(reps);
        lookup.push(map);
    }
    let counts: Vec<usize> = cells.iter().map(Vec::len).collect();
    let faces = |d: usize, c: usize| -> Vec<usize> {
        let s = &cells[d][c];
        (0..s.len())
            .map(|i| {
                let mut f: Vec<u32> = s.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                f.sort_unstable();
                let img = k.antipode_simplex(&f);
                let key = if f < img { f } else { img };
                lookup[d - 1][&key]
            })
            .collect()
    };
    let w = |x: u32, y: u32| off_section[x as usize] ^ off_section[y as usize];
    let wpow = |d: usize, c: usize| cells[d][c].windows(2).all(|p| w(p[0], p[1]));
    Ok(top_cup_power(&counts, faces, wpow))
}

/// Cohomological index through [`quotient_complex`]: cup powers of `w` on
/// the subdivided quotient with its vertices in label order.
pub fn cohomological_index_via_quotient(k: &Z2Complex) -> Result<usize, Z2Error> {
    if k.is_empty() {
        return Err(Z2Error::Empty);
    }
    let q = quotient_complex(k)?;
    let simplices = q.quotient.simplices();
    let counts: Vec<usize> = simplices.iter().map(Vec::len).collect();
    let faces = |d: usize, c: usize| -> Vec<usize> {
        let s = &simplices[d][c];
        (0..s.len())
            .map(|i| {
                let mut f = s.clone();
                f.remove(i);
                q.quotient.simplex_position(&f).expect("face of a simplex")
            })
            .collect()
    };
    let wpow = |d: usize, c: usize| simplices[d][c].windows(2).all(|p| q.w(p[0], p[1]));
    Ok(top_cup_power(&counts, faces, wpow))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{box_complex, cross_polytope_boundary};
    use crate::graphs::complete;
    use crate::homology::{homology_z, Ring};

    #[test]
    fn square_quotient() {
        let q = quotient_complex(&cross_polytope_boundary(2).unwrap()).unwrap();
        assert_eq!(q.cover.f_vector(), vec![8, 8]);
        assert_eq!(q.quotient.f_vector(), vec![4, 4]);
        let total = q.cocycle.values().filter(|&&w| w).count();
        assert_eq!(total % 2, 1);
        assert!(q.is_cocycle());
        assert!(q.double_cover().same_as(&q.cover));
    }

    #[test]
    fn octahedron_quotient_is_projective_plane() {
        let q = quotient_complex(&cross_polytope_boundary(3).unwrap()).unwrap();
        assert_eq!(q.quotient.f_vector(), vec![13, 36, 24]);
        let h = homology_z(&q.quotient);
        assert_eq!(h.ring, Ring::Z);
        assert_eq!(h.reduced_betti, vec![0, 0, 0]);
        assert_eq!(h.torsion[1], vec![2]);
        assert!(q.is_cocycle());
        assert!(q.double_cover().same_as(&q.cover));
    }

    #[test]
    fn point_pair_quotient() {
        let q = quotient_complex(&cross_polytope_boundary(1).unwrap()).unwrap();
        assert_eq!(q.quotient.f_vector(), vec![1]);
        assert!(q.cocycle.is_empty());
    }

    #[test]
    fn sphere_indices() {
        for d in 1..=4 {
            let s = cross_polytope_boundary(d + 1).unwrap();
            assert_eq!(cohomological_index(&s).unwrap(), d);
        }
        for d in 1..=2 {
            let s = cross_polytope_boundary(d + 1).unwrap();
            assert_eq!(cohomological_index_via_quotient(&s).unwrap(), d);
        }
        assert_eq!(cohomological_index(&cross_polytope_boundary(1).unwrap()).unwrap(), 0);
        assert_eq!(cohomological_index(&box_complex(&complete(3).unwrap())).unwrap(), 1);
        assert!(matches!(cohomological_index(&Z2Complex::empty()), Err(Z2Error::Empty)));
    }
}
