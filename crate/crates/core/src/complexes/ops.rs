use super::{face_poset, order_complex, ComplexError, Label, Z2Complex};

/// `sd(K)`: vertices are the non-empty simplices of `K`, simplices are
/// chains under inclusion.
pub fn barycentric_subdivision(k: &Z2Complex) -> Z2Complex {
    order_complex(&face_poset(k))
}

/// `K ∗ S⁰` with poles at the first level not already used by `K`. The
/// involution, when present, swaps the poles.
pub fn suspension(k: &Z2Complex) -> Z2Complex {
    let level = k
        .labels()
        .iter()
        .filter_map(|l| match l {
            Label::Pole(lv, _) => Some(*lv + 1),
            _ => None,
        })
        .max()
        .unwrap_or(0);
    let poles = [Label::Pole(level, true), Label::Pole(level, false)];
    let mut facets = Vec::new();
    if k.is_empty() {
        facets.extend(poles.iter().map(|p| vec![p.clone()]));
    }
    for f in k.facet_labels() {
        for p in &poles {
            let mut g = f.clone();
            g.push(p.clone());
            facets.push(g);
        }
    }
    Z2Complex::new(facets, k.has_involution() || k.is_empty()).expect("suspension of a free Z2-complex")
}

/// `K ∗ L` on the tagged vertex set `{0:v} ∪ {1:w}`. The involution is kept
/// when every non-empty factor carries one.
pub fn complex_join(k: &Z2Complex, l: &Z2Complex) -> Z2Complex {
    let tag = |t: u8, f: &[Label]| f.iter().map(|x| Label::Tagged(t, Box::new(x.clone()))).collect::<Vec<_>>();
    let kf: Vec<Vec<Label>> = k.facet_labels().iter().map(|f| tag(0, f)).collect();
    let lf: Vec<Vec<Label>> = l.facet_labels().iter().map(|f| tag(1, f)).collect();
    let facets = if kf.is_empty() {
        lf
    } else if lf.is_empty() {
        kf
    } else {
        kf.iter().flat_map(|a| lf.iter().map(move |b| a.iter().chain(b).cloned().collect())).collect()
    };
    let antipodal = (k.has_involution() || k.is_empty()) && (l.has_involution() || l.is_empty()) && !(k.is_empty() && l.is_empty());
    Z2Complex::new(facets, antipodal).expect("join of free Z2-complexes")
}

/// `∂◇^d`: vertices `±1..±d`, one facet per sign pattern, antipodal
/// involution.
pub fn cross_polytope_boundary(d: usize) -> Result<Z2Complex, ComplexError> {
    if d == 0 {
        return Err(ComplexError::Parameter("cross-polytope needs d >= 1".into()));
    }
    let facets = (0u64..1 << d)
        .map(|mask| (0..d).map(|i| Label::Signed { index: i as u32 + 1, positive: mask >> i & 1 == 0 }).collect())
        .collect();
    Z2Complex::new(facets, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::box0_complex;
    use crate::graphs::complete;

    #[test]
    fn cross_polytopes() {
        let sq = cross_polytope_boundary(2).unwrap();
        assert_eq!(sq.f_vector(), vec![4, 4]);
        let oct = cross_polytope_boundary(3).unwrap();
        assert_eq!(oct.f_vector(), vec![6, 12, 8]);
        assert!(cross_polytope_boundary(0).is_err());
        for n in 1..=5 {
            assert!(box0_complex(&complete(n).unwrap()).same_as(&cross_polytope_boundary(n).unwrap()));
        }
    }

    #[test]
    fn subdivision_of_square_is_an_octagon() {
        let sd = barycentric_subdivision(&cross_polytope_boundary(2).unwrap());
        assert_eq!(sd.f_vector(), vec![8, 8]);
        assert!(sd.has_involution());
        let edge = Z2Complex::new(vec![vec![Label::Vertex(0), Label::Vertex(1)]], false).unwrap();
        assert_eq!(barycentric_subdivision(&edge).f_vector(), vec![3, 2]);
    }

    #[test]
    fn suspensions() {
        let s0 = cross_polytope_boundary(1).unwrap();
        let s1 = suspension(&s0);
        assert_eq!(s1.f_vector(), vec![4, 4]);
        assert!(s1.has_involution());
        let s2 = suspension(&s1);
        assert_eq!(s2.f_vector(), vec![6, 12, 8]);
        let e = suspension(&Z2Complex::empty());
        assert_eq!(e.f_vector(), vec![2]);
        assert!(e.has_involution());
    }

    #[test]
    fn joins() {
        let s0 = cross_polytope_boundary(1).unwrap();
        let j = complex_join(&s0, &s0);
        assert_eq!(j.f_vector(), vec![4, 4]);
        let sq = cross_polytope_boundary(2).unwrap();
        assert_eq!(complex_join(&sq, &sq).f_vector(), cross_polytope_boundary(4).unwrap().f_vector());
        let pt = Z2Complex::new(vec![vec![Label::Vertex(0)]], false).unwrap();
        let cone = complex_join(&sq, &pt);
        assert!(!cone.has_involution());
        assert_eq!(cone.f_vector(), vec![5, 8, 4]);
        assert_eq!(complex_join(&sq, &Z2Complex::empty()).f_vector(), sq.f_vector());
    }
}
