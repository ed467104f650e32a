use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::complexes::{barycentric_subdivision, box_complex, cross_polytope_boundary, Label, Z2Complex};
use crate::graphs::complete;

use super::Z2Error;

/// A vertex map between two complexes, meant to be simplicial and to
/// commute with both involutions.
#[derive(Clone, Debug)]
pub struct SignedVertexMap {
    pub domain: Z2Complex,
    pub codomain: Z2Complex,
    /// Codomain vertex for each domain vertex.
    pub assignment: Vec<u32>,
}

impl SignedVertexMap {
    pub fn image(&self, s: &[u32]) -> Vec<u32> {
        let mut img: Vec<u32> = s.iter().map(|&v| self.assignment[v as usize]).collect();
        img.sort_unstable();
        img.dedup();
        img
    }

    /// Facets of the domain that are not sent to simplices.
    pub fn simpliciality_failures(&self) -> Vec<Vec<u32>> {
        self.domain.facets().iter().filter(|f| !self.codomain.contains_simplex(&self.image(f))).cloned().collect()
    }

    pub fn is_simplicial(&self) -> bool {
        self.simpliciality_failures().is_empty()
    }

    /// Domain vertices `v` with `f(ν v) ≠ ν f(v)`.
    pub fn equivariance_failures(&self) -> Vec<u32> {
        let (Some(nd), Some(nc)) = (self.domain.involution(), self.codomain.involution()) else {
            return (0..self.domain.vertex_count() as u32).collect();
        };
        (0..self.domain.vertex_count())
            .filter(|&v| self.assignment[nd[v] as usize] != nc[self.assignment[v] as usize])
            .map(|v| v as u32)
            .collect()
    }

    pub fn is_equivariant(&self) -> bool {
        self.equivariance_failures().is_empty()
    }

    /// One `<domain label> -> <codomain label>` line per domain vertex.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (v, &w) in self.assignment.iter().enumerate() {
            let _ = writeln!(s, "{} -> {}", self.domain.label(v as u32), self.codomain.label(w));
        }
        s
    }
}

/// `sign(v)·(−1)^{|v|}` for a signed label.
fn mu_positive(l: &Label) -> bool {
    match l {
        Label::Signed { index, positive } => *positive == (index % 2 == 0),
        other => panic!("unsigned label {other}"),
    }
}

/// The image `s·e_k` of a signed vertex set: order by absolute value,
/// `k` is one more than the number of sign changes of `μ`, `s` the sign of
/// `μ` at the smallest element.
pub fn lambda_of(sigma: &[Label]) -> (usize, bool) {
    let mut sorted: Vec<&Label> = sigma.iter().collect();
    sorted.sort_by_key(|l| match l {
        Label::Signed { index, .. } => *index,
        _ => u32::MAX,
    });
    let mus: Vec<bool> = sorted.iter().map(|l| mu_positive(l)).collect();
    let changes = mus.windows(2).filter(|p| p[0] != p[1]).count();
    (changes + 1, mus[0])
}

/// The simplicial `Z2`-map `sd(B(K_{d+1})) → ∂◇^d`.
pub fn lambda_map(d: usize) -> Result<SignedVertexMap, Z2Error> {
    if d == 0 {
        return Err(Z2Error::Parameter("lambda map needs d >= 1".into()));
    }
    let domain = barycentric_subdivision(&box_complex(&complete(d + 1).expect("d + 1 >= 2")));
    let codomain = cross_polytope_boundary(d).map_err(Z2Error::Complex)?;
    let assignment = domain
        .labels()
        .iter()
        .map(|l| {
            let Label::Simplex(sigma) = l else { panic!("subdivision vertex {l} is not a simplex") };
            let (k, positive) = lambda_of(sigma);
            assert!(k <= d, "sign pattern of {l} reaches e_{k}");
            codomain.index_of(&Label::Signed { index: k as u32, positive }).expect("cross-polytope vertex")
        })
        .collect();
    Ok(SignedVertexMap { domain, codomain, assignment })
}

/// `‖z‖∞ · λ'(z/‖z‖∞)` for `z ∈ Q^{d+1}`, where `λ'` extends the lambda
/// map by zero on the two constant-sign full vertices and affinely over the
/// simplices of `sd(∂◇^{d+1})`, each subdivision vertex placed at the
/// signed cube point of its vertex set.
pub fn h_map_eval(z: &[BigRational], d: usize) -> Vec<BigRational> {
    assert_eq!(z.len(), d + 1, "h_map_eval expects a vector of length d + 1");
    let mut order: Vec<usize> = (0..=d).filter(|&i| !z[i].is_zero()).collect();
    order.sort_by(|&a, &b| z[b].abs().cmp(&z[a].abs()));
    let mut out = vec![BigRational::zero(); d];
    let mut sigma: Vec<Label> = Vec::new();
    for (j, &i) in order.iter().enumerate() {
        sigma.push(Label::Signed { index: i as u32 + 1, positive: z[i].is_positive() });
        let next = order.get(j + 1).map_or_else(BigRational::zero, |&n| z[n].abs());
        let coef = z[i].abs() - next;
        if coef.is_zero() {
            continue;
        }
        let full = sigma.len() == d + 1;
        let constant = sigma.iter().all(|l| matches!(l, Label::Signed { positive: true, .. }))
            || sigma.iter().all(|l| matches!(l, Label::Signed { positive: false, .. }));
        if full && constant {
            continue;
        }
        let (k, positive) = lambda_of(&sigma);
        if positive {
            out[k - 1] += coef;
        } else {
            out[k - 1] -= coef;
        }
    }
    out
}

/// `‖x‖∞`.
pub fn sup_norm(x: &[BigRational]) -> BigRational {
    x.iter().map(BigRational::abs).max().unwrap_or_else(BigRational::zero)
}
