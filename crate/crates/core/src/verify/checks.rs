use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{bounds_ladder, SizeCaps};
use crate::complexes::{
    barycentric_subdivision, box0_complex, box_complex, complex_join, hom_poset, neighborhood_complex, order_complex,
    suspension, Label, Z2Complex,
};
use crate::graphs::{graph_join, graph_product, Graph, Hypergraph};
use crate::homology::{homology, kunneth_product_betti, HomologySummary, Ring};
use crate::z2tools::{csorba_graph, SignedVertexMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one check with both compared sides kept verbatim.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub instance: String,
    pub status: Status,
    pub lhs: Value,
    pub rhs: Value,
}

impl CheckResult {
    /// Passes when both sides are equal.
    pub fn equal(name: &str, instance: &str, lhs: Value, rhs: Value) -> CheckResult {
        let ok = lhs == rhs;
        CheckResult::with(name, instance, ok, lhs, rhs)
    }

    pub fn with(name: &str, instance: &str, ok: bool, lhs: Value, rhs: Value) -> CheckResult {
        CheckResult {
            name: name.to_string(),
            instance: instance.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            lhs,
            rhs,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Homology over both rings in a comparable form: trimmed Betti numbers,
/// the rank of `H̃₋₁`, and torsion by dimension.
pub fn homology_signature(k: &Z2Complex) -> Value {
    let g = homology(k, Ring::Gf2);
    let z = homology(k, Ring::Z);
    signature(&g, &z)
}

fn signature(g: &HomologySummary, z: &HomologySummary) -> Value {
    let torsion: Vec<(usize, &Vec<u64>)> = z.torsion.iter().enumerate().filter(|(_, t)| !t.is_empty()).collect();
    json!({
        "h_minus_1": g.h_minus_one(),
        "gf2": g.trimmed_betti(),
        "z": z.trimmed_betti(),
        "torsion": torsion,
    })
}

/// Expected signature of a complex with torsion-free homology and the given
/// trimmed reduced Betti numbers.
pub fn free_signature(betti: &[usize]) -> Value {
    json!({ "h_minus_1": 0, "gf2": betti, "z": betti, "torsion": Vec::<(usize, Vec<u64>)>::new() })
}

/// Reduced Betti numbers of the sphere `S^d`.
pub fn sphere(d: usize) -> Vec<usize> {
    let mut b = vec![0; d + 1];
    b[d] = 1;
    b
}

pub fn check_example_homology(name: &str, instance: &str, k: &Z2Complex, betti: &[usize]) -> CheckResult {
    CheckResult::equal(name, instance, homology_signature(k), free_signature(betti))
}

/// `susp(B(G))` against `B₀(G)`.
pub fn check_susp_b_vs_b0(g: &Graph, instance: &str) -> CheckResult {
    let lhs = homology_signature(&suspension(&box_complex(g)));
    let rhs = homology_signature(&box0_complex(g));
    CheckResult::equal("susp_b_vs_b0", instance, lhs, rhs)
}

/// `N(G)` against `B(G)`.
pub fn check_nbhd_vs_box(g: &Graph, instance: &str) -> CheckResult {
    let lhs = homology_signature(&neighborhood_complex(g));
    let rhs = homology_signature(&box_complex(g));
    CheckResult::equal("nbhd_vs_box", instance, lhs, rhs)
}

/// `Δ(Hom(K₂,G))` against `B(G)`.
pub fn check_hom_vs_box(g: &Graph, instance: &str) -> CheckResult {
    let lhs = homology_signature(&order_complex(&hom_poset(g)));
    let rhs = homology_signature(&box_complex(g));
    CheckResult::equal("hom_vs_box", instance, lhs, rhs)
}

/// `B(G∗H)` against `susp(B(G) ∗ B(H))`.
pub fn check_join_b_susp(g: &Graph, h: &Graph, instance: &str) -> CheckResult {
    let lhs = homology_signature(&box_complex(&graph_join(g, h)));
    let rhs = homology_signature(&suspension(&complex_join(&box_complex(g), &box_complex(h))));
    CheckResult::equal("join_b_susp", instance, lhs, rhs)
}

/// Unreduced GF(2) Betti numbers of `B(G×H)` against the Künneth product of
/// the factors.
pub fn check_product_kunneth(g: &Graph, h: &Graph, instance: &str) -> CheckResult {
    let unreduced = |k: &Z2Complex| {
        let mut b = homology(k, Ring::Gf2).unreduced_betti();
        while b.last() == Some(&0) {
            b.pop();
        }
        b
    };
    let lhs = unreduced(&box_complex(&graph_product(g, h)));
    let mut rhs = kunneth_product_betti(&unreduced(&box_complex(g)), &unreduced(&box_complex(h)));
    while rhs.last() == Some(&0) {
        rhs.pop();
    }
    CheckResult::equal("product_kunneth", instance, json!(lhs), json!(rhs))
}

/// `B(csorba_graph(K))` against `K`.
pub fn check_csorba_roundtrip(k: &Z2Complex, instance: &str) -> CheckResult {
    let lhs = match csorba_graph(k) {
        Ok(g) => homology_signature(&box_complex(&g)),
        Err(e) => json!(e.to_string()),
    };
    CheckResult::equal("csorba_roundtrip", instance, lhs, homology_signature(k))
}

/// Runs the bounds ladder; passes when no inequality is violated.
pub fn check_arrow_chain(g: &Graph, repr: Option<&Hypergraph>, caps: &SizeCaps, instance: &str) -> CheckResult {
    match bounds_ladder(g, repr, caps) {
        Ok(r) => {
            let ok = r.violations.is_empty();
            let lhs = serde_json::to_value(&r).expect("report serializes");
            CheckResult::with("arrow_chain", instance, ok, lhs, json!({ "violations": [] }))
        }
        Err(e) => CheckResult::with("arrow_chain", instance, false, json!(e.to_string()), json!({ "violations": [] })),
    }
}

/// Split a join-side signed label: vertices `1..=n` belong to `G`, the rest
/// to `H` shifted down by `n`.
fn split_join_vertex(l: &Label, n: u32) -> Label {
    match l {
        Label::Signed { index, positive } if *index <= n => {
            Label::Tagged(0, Box::new(Label::Signed { index: *index, positive: *positive }))
        }
        Label::Signed { index, positive } => Label::Tagged(1, Box::new(Label::Signed { index: index - n, positive: *positive })),
        other => panic!("unexpected label {other}"),
    }
}

fn merge_join_vertex(l: &Label, n: u32) -> Label {
    match l {
        Label::Tagged(0, inner) => (**inner).clone(),
        Label::Tagged(1, inner) => match &**inner {
            Label::Signed { index, positive } => Label::Signed { index: index + n, positive: *positive },
            other => panic!("unexpected label {other}"),
        },
        other => panic!("unexpected label {other}"),
    }
}

fn map_simplex_label(l: &Label, f: impl Fn(&Label) -> Label) -> Label {
    let Label::Simplex(vs) = l else { panic!("subdivision vertex {l} is not a simplex") };
    let mut out: Vec<Label> = vs.iter().map(f).collect();
    out.sort();
    Label::Simplex(out)
}

fn vertex_map(domain: &Z2Complex, codomain: &Z2Complex, f: impl Fn(&Label) -> Label) -> Result<SignedVertexMap, String> {
    let assignment = domain
        .labels()
        .iter()
        .map(|l| {
            let img = map_simplex_label(l, &f);
            codomain.index_of(&img).ok_or_else(|| format!("{l} maps to {img}, not a vertex"))
        })
        .collect::<Result<Vec<u32>, String>>()?;
    Ok(SignedVertexMap { domain: domain.clone(), codomain: codomain.clone(), assignment })
}

/// The explicit isomorphism between `sd(B₀(G∗H))` and `sd(B₀(G) ∗ B₀(H))`:
/// `f` splits `A′ ⊎ A″` by side, `g` merges the sides back. Both must be
/// simplicial and equivariant and inverse to each other on every vertex.
pub fn check_join_b0_iso(g: &Graph, h: &Graph, instance: &str) -> CheckResult {
    let n = g.n() as u32;
    let x = barycentric_subdivision(&box0_complex(&graph_join(g, h)));
    let y = barycentric_subdivision(&complex_join(&box0_complex(g), &box0_complex(h)));
    let expected = json!({
        "vertices": [x.vertex_count(), x.vertex_count()],
        "f_simplicial": true, "g_simplicial": true,
        "f_equivariant": true, "g_equivariant": true,
        "gf_identity": true, "fg_identity": true,
    });
    let maps = vertex_map(&x, &y, |l| split_join_vertex(l, n)).and_then(|f| Ok((f, vertex_map(&y, &x, |l| merge_join_vertex(l, n))?)));
    let (f, gm) = match maps {
        Ok(m) => m,
        Err(e) => return CheckResult::with("join_b0_iso", instance, false, json!(e), expected),
    };
    let gf = (0..x.vertex_count()).all(|v| gm.assignment[f.assignment[v] as usize] as usize == v);
    let fg = (0..y.vertex_count()).all(|v| f.assignment[gm.assignment[v] as usize] as usize == v);
    let lhs = json!({
        "vertices": [x.vertex_count(), y.vertex_count()],
        "f_simplicial": f.is_simplicial(), "g_simplicial": gm.is_simplicial(),
        "f_equivariant": f.is_equivariant(), "g_equivariant": gm.is_equivariant(),
        "gf_identity": gf, "fg_identity": fg,
    });
    CheckResult::equal("join_b0_iso", instance, lhs, expected)
}
