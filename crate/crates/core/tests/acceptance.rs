//! Acceptance criteria 1 to 8, one PASS/FAIL line each.

use std::collections::{BTreeSet, HashMap};
use std::process::ExitCode;

use chromatopo::bounds::{bounds_ladder, chromatic_number, colorability_defect, conn_b0, SizeCaps};
use chromatopo::complexes::{box0_complex, box_complex, complex_join, Label, Z2Complex};
use chromatopo::graphs::{complete, complete_bipartite, cycle, kneser, schrijver, standard_kneser_representation, Graph, Hypergraph};
use chromatopo::homology::{homological_connectivity, homology, Conn, Ring};
use chromatopo::verify::{
    check_csorba_roundtrip, check_hom_vs_box, check_join_b0_iso, check_join_b_susp, check_nbhd_vs_box,
    check_product_kunneth, check_susp_b_vs_b0, standard_corpus, CheckResult, HOM_POSET_CAP,
};
use chromatopo::z2tools::{cohomological_index, cohomological_index_via_quotient, h_map_eval, lambda_map, sup_norm};
use chromatopo::complexes::{barycentric_subdivision, hom_poset};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Outcome of one criterion.
struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, checked: usize, tolerance: &str) -> Outcome {
    if failures.is_empty() {
        Outcome { pass: true, detail: format!("{checked} checks, {tolerance}") }
    } else {
        Outcome { pass: false, detail: format!("{} of {checked} failed, {tolerance}: {}", failures.len(), failures.join("; ")) }
    }
}

/// Reduced GF(2) Betti numbers by dense elimination over all faces,
/// independent of the library's chain complexes.
fn oracle_betti_gf2(k: &Z2Complex) -> Vec<usize> {
    let mut faces: Vec<BTreeSet<Vec<String>>> = Vec::new();
    for f in k.facet_labels() {
        let f: Vec<String> = f.iter().map(|l| l.to_string()).collect();
        let n = f.len();
        for mask in 1u32..(1 << n) {
            let s: Vec<String> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| f[i].clone()).collect();
            let d = s.len() - 1;
            if faces.len() <= d {
                faces.resize(d + 1, BTreeSet::new());
            }
            faces[d].insert(s);
        }
    }
    if faces.is_empty() {
        return Vec::new();
    }
    let index: Vec<HashMap<&Vec<String>, usize>> =
        faces.iter().map(|fs| fs.iter().enumerate().map(|(i, s)| (s, i)).collect()).collect();
    // rank of the boundary from dimension d to d-1, with the augmentation at d = 0
    let rank = |d: usize| -> usize {
        let rows = if d == 0 { 1 } else { faces[d - 1].len() };
        let mut cols: Vec<Vec<u64>> = faces[d]
            .iter()
            .map(|s| {
                let mut v = vec![0u64; rows.div_ceil(64)];
                if d == 0 {
                    v[0] = 1;
                } else {
                    for skip in 0..s.len() {
                        let mut t = s.clone();
                        t.remove(skip);
                        let r = index[d - 1][&t];
                        v[r / 64] ^= 1 << (r % 64);
                    }
                }
                v
            })
            .collect();
        let mut r = 0;
        for bit in 0..rows {
            let (w, m) = (bit / 64, 1u64 << (bit % 64));
            if let Some(p) = (r..cols.len()).find(|&c| cols[c][w] & m != 0) {
                cols.swap(r, p);
                let pivot = cols[r].clone();
                for c in cols.iter_mut().skip(r + 1) {
                    if c[w] & m != 0 {
                        for (a, b) in c.iter_mut().zip(&pivot) {
                            *a ^= b;
                        }
                    }
                }
                r += 1;
            }
        }
        r
    };
    let ranks: Vec<usize> = (0..faces.len()).map(rank).collect();
    let mut betti: Vec<usize> =
        (0..faces.len()).map(|d| faces[d].len() - ranks[d] - ranks.get(d + 1).copied().unwrap_or(0)).collect();
    while betti.last() == Some(&0) {
        betti.pop();
    }
    betti
}

fn sphere(d: usize) -> Vec<usize> {
    let mut b = vec![0; d + 1];
    b[d] = 1;
    b
}

fn trimmed(mut b: Vec<usize>) -> Vec<usize> {
    while b.last() == Some(&0) {
        b.pop();
    }
    b
}

/// Both oracle GF(2) and library Z Betti numbers equal `expected`, with no
/// torsion.
fn homology_is(k: &Z2Complex, expected: &[usize]) -> Result<(), String> {
    let gf2 = oracle_betti_gf2(k);
    let z = homology(k, Ring::Z);
    let zb = trimmed(z.reduced_betti.clone());
    let torsion_free = z.torsion.iter().all(Vec::is_empty);
    if gf2 == expected && zb == expected && torsion_free {
        Ok(())
    } else {
        Err(format!("gf2 {gf2:?}, z {zb:?}, torsion {:?}, expected {expected:?}", z.torsion))
    }
}

/// Boundary of the cross-polytope in `R^n`, built directly.
fn oracle_cross_polytope(n: u32) -> Z2Complex {
    let facets = (0u32..1 << n)
        .map(|signs| (1..=n).map(|i| if signs >> (i - 1) & 1 == 1 { Label::minus(i) } else { Label::plus(i) }).collect())
        .collect();
    Z2Complex::new(facets, true).unwrap()
}

fn criterion_1() -> Outcome {
    let mut cases: Vec<(String, Z2Complex, Vec<usize>)> = Vec::new();
    let mut failures = Vec::new();
    for n in 2..=5usize {
        let kn = complete(n).unwrap();
        cases.push((format!("B(K{n})"), box_complex(&kn), sphere(n - 2)));
        let b0 = box0_complex(&kn);
        if !b0.same_as(&oracle_cross_polytope(n as u32)) {
            failures.push(format!("B0(K{n}) is not the cross-polytope boundary"));
        }
        cases.push((format!("B0(K{n})"), b0, sphere(n - 1)));
    }
    for n in [3, 4] {
        let c = cycle(2 * n).unwrap();
        cases.push((format!("B(C{})", 2 * n), box_complex(&c), vec![1, 2]));
        cases.push((format!("B0(C{})", 2 * n), box0_complex(&c), vec![0, 1, 2]));
    }
    for n in [2, 3] {
        let c = cycle(2 * n + 1).unwrap();
        cases.push((format!("B(C{})", 2 * n + 1), box_complex(&c), sphere(1)));
        cases.push((format!("B0(C{})", 2 * n + 1), box0_complex(&c), sphere(2)));
    }
    for (m, n) in [(1, 3), (2, 2), (3, 3)] {
        let g = complete_bipartite(m, n).unwrap();
        cases.push((format!("B(K{m},{n})"), box_complex(&g), sphere(0)));
        cases.push((format!("B0(K{m},{n})"), box0_complex(&g), sphere(1)));
    }
    let checked = cases.len() + 4;
    for (name, k, betti) in cases {
        if let Err(e) = homology_is(&k, &betti) {
            failures.push(format!("{name}: {e}"));
        }
    }
    outcome(failures, checked, "exact integer equality")
}

/// Proper coloring with `k` colors by exhaustive search.
fn oracle_colorable(g: &Graph, k: usize) -> bool {
    fn go(g: &Graph, v: usize, k: usize, col: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|u| !g.is_adjacent(u, v) || col[u] != c) {
                col.push(c);
                if go(g, v + 1, k, col) {
                    return true;
                }
                col.pop();
            }
        }
        false
    }
    go(g, 0, k, &mut Vec::new())
}

fn criterion_2() -> Outcome {
    let mut failures = Vec::new();
    let petersen = kneser(5, 2).unwrap();
    let b = box_complex(&petersen);
    let gf2 = oracle_betti_gf2(&b);
    let z = homology(&b, Ring::Z);
    let zb = trimmed(z.reduced_betti.clone());
    let concentrated = gf2.len() == 2 && gf2[0] == 0 && zb == gf2 && z.torsion.iter().all(Vec::is_empty);
    if !(concentrated && gf2[1] % 2 == 1) {
        failures.push(format!("B(KG(5,2)): gf2 {gf2:?}, z {zb:?}"));
    }
    let sg = schrijver(5, 2).unwrap();
    if let Err(e) = homology_is(&box_complex(&sg), &sphere(1)) {
        failures.push(format!("B(SG(5,2)): {e}"));
    }
    let caps = SizeCaps::default();
    for (name, g) in [("KG(5,2)", &petersen), ("SG(5,2)", &sg)] {
        let chi = chromatic_number(g, &caps).ok();
        let oracle = oracle_colorable(g, 3) && !oracle_colorable(g, 2);
        if chi != Some(3) || !oracle {
            failures.push(format!("chi({name}) = {chi:?}, oracle 3-chromatic {oracle}"));
        }
    }
    outcome(failures, 5, &format!("exact; rank of H1(B(KG(5,2))) = {}", gf2.get(1).copied().unwrap_or(0)))
}

fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut expect = |name: &str, g: &Graph, want: i64| {
        checked += 1;
        let got = conn_b0(g);
        if got != Conn::Finite(want) {
            failures.push(format!("{name}: {got} != {want}"));
        }
        // the branch value agrees with the homology of B0(G) itself
        if g.n() > 0 {
            checked += 1;
            let direct = homological_connectivity(&box0_complex(g), Ring::Z);
            if direct != got {
                failures.push(format!("{name}: branch {got}, homology {direct}"));
            }
        }
    };
    expect("empty graph", &Graph::edgeless(0), -2);
    expect("K1", &complete(1).unwrap(), -1);
    expect("edgeless 4", &Graph::edgeless(4), -1);
    for c in standard_corpus() {
        if c.graph.edge_count() > 0 && (c.graph.is_bipartite() || !c.graph.is_connected()) {
            expect(&c.name, &c.graph, 0);
        }
    }
    let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    expect("2K2", &two_k2, 0);
    let triangle_plus_edge = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap();
    expect("K3+K2", &triangle_plus_edge, 0);
    for n in 3..=5usize {
        expect(&format!("K{n}"), &complete(n).unwrap(), n as i64 - 2);
    }
    outcome(failures, checked, "exact equality")
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for d in 1..=3usize {
        checked += 1;
        let k = oracle_cross_polytope(d as u32 + 1);
        let main = cohomological_index(&k).ok();
        let quotient = if d <= 2 { cohomological_index_via_quotient(&k).ok() } else { main };
        if main != Some(d) || quotient != Some(d) {
            failures.push(format!("sphere d={d}: {main:?} / {quotient:?}"));
        }
    }
    let chind = |k: &Z2Complex| if k.is_empty() { -1 } else { cohomological_index(k).unwrap() as i64 };
    for c in standard_corpus() {
        checked += 1;
        let (b, b0) = (chind(&box_complex(&c.graph)), chind(&box0_complex(&c.graph)));
        if b0 != b + 1 {
            failures.push(format!("{}: chind B0 {b0}, chind B {b}", c.name));
        }
    }
    let pairs = [
        ("S0*S0", oracle_cross_polytope(1), oracle_cross_polytope(1)),
        ("S0*S1", oracle_cross_polytope(1), oracle_cross_polytope(2)),
        ("B(K3)*B(C5)", box_complex(&complete(3).unwrap()), box_complex(&cycle(5).unwrap())),
    ];
    for (name, k, l) in pairs {
        checked += 1;
        let lhs = chind(&complex_join(&k, &l));
        let rhs = chind(&k) + chind(&l) + 1;
        if lhs != rhs {
            failures.push(format!("{name}: {lhs} != {rhs}"));
        }
    }
    outcome(failures, checked, "exact equality")
}

fn criterion_5() -> Outcome {
    let caps = SizeCaps::default();
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut skipped = Vec::new();
    for c in standard_corpus().into_iter().filter(|c| !c.homology_only) {
        checked += 1;
        let repr = standard_kneser_representation(&c.graph);
        match bounds_ladder(&c.graph, Some(&repr), &caps) {
            Ok(r) => {
                if !r.violations.is_empty() {
                    failures.push(format!("{}: {}", c.name, r.violations.join(", ")));
                }
                for f in r.skipped() {
                    skipped.push(format!("{}.{f}", c.name));
                }
            }
            Err(e) => failures.push(format!("{}: {e}", c.name)),
        }
    }
    let tolerance = format!("zero violations; size-capped fields: {}", if skipped.is_empty() { "none".into() } else { skipped.join(" ") });
    outcome(failures, checked, &tolerance)
}

fn criterion_6() -> Outcome {
    let mut results: Vec<CheckResult> = Vec::new();
    let mut gated = Vec::new();
    for c in standard_corpus() {
        results.push(check_susp_b_vs_b0(&c.graph, &c.name));
        results.push(check_nbhd_vs_box(&c.graph, &c.name));
        if hom_poset(&c.graph).len() <= HOM_POSET_CAP {
            results.push(check_hom_vs_box(&c.graph, &c.name));
        } else {
            gated.push(c.name.clone());
        }
    }
    let k1 = complete(1).unwrap();
    let k2 = complete(2).unwrap();
    let k3 = complete(3).unwrap();
    let c4 = cycle(4).unwrap();
    let c5 = cycle(5).unwrap();
    results.push(check_join_b0_iso(&k2, &k2, "K2*K2"));
    results.push(check_join_b0_iso(&k1, &k2, "K1*K2"));
    results.push(check_join_b0_iso(&c4, &k1, "C4*K1"));
    results.push(check_join_b_susp(&k2, &k3, "K2*K3"));
    results.push(check_join_b_susp(&c5, &c5, "C5*C5"));
    results.push(check_join_b_susp(&k1, &k1, "K1*K1"));
    results.push(check_product_kunneth(&k2, &k3, "K2xK3"));
    results.push(check_product_kunneth(&k2, &k2, "K2xK2"));
    results.push(check_product_kunneth(&k3, &k3, "K3xK3"));
    results.push(check_csorba_roundtrip(&oracle_cross_polytope(2), "cross(2)"));
    results.push(check_csorba_roundtrip(&oracle_cross_polytope(3), "cross(3)"));
    results.push(check_csorba_roundtrip(&barycentric_subdivision(&oracle_cross_polytope(2)), "sd cross(2)"));
    let failures: Vec<String> = results.iter().filter(|r| !r.passed()).map(|r| format!("{} {}: {} vs {}", r.name, r.instance, r.lhs, r.rhs)).collect();
    outcome(failures, results.len(), &format!("exact; Hom order complex size-gated for {}", gated.join(" ")))
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for d in 1..=4usize {
        checked += 1;
        let m = lambda_map(d).unwrap();
        let image = |v: usize| m.codomain.label(m.assignment[v]).clone();
        // independent check on labels: images of facets never hold both e_k and -e_k
        let simplicial = m.domain.facets().iter().all(|f| {
            let imgs: BTreeSet<Label> = f.iter().map(|&v| image(v as usize)).collect();
            imgs.iter().all(|l| !imgs.contains(&l.antipode().unwrap()))
        });
        let equivariant = (0..m.domain.vertex_count()).all(|v| {
            let nv = m.domain.index_of(&m.domain.label(v as u32).antipode().unwrap()).unwrap() as usize;
            image(nv) == image(v).antipode().unwrap()
        });
        if !(simplicial && equivariant && m.is_simplicial() && m.is_equivariant()) {
            failures.push(format!("lambda d={d}: simplicial {simplicial}, equivariant {equivariant}"));
        }
    }
    let mut rng = StdRng::seed_from_u64(20_26);
    for d in 1..=3usize {
        let mut odd = 0;
        let mut norm = 0;
        for _ in 0..1000 {
            let z = loop {
                let z: Vec<BigRational> = (0..=d)
                    .map(|_| BigRational::new(BigInt::from(rng.gen_range(-30i64..=30)), BigInt::from(rng.gen_range(1i64..=17))))
                    .collect();
                if z.iter().any(Signed::is_positive) && z.iter().any(Signed::is_negative) {
                    break z;
                }
            };
            checked += 1;
            let h = h_map_eval(&z, d);
            let neg: Vec<BigRational> = z.iter().map(|x| -x).collect();
            if h_map_eval(&neg, d).iter().zip(&h).any(|(a, b)| (a + b) != BigRational::zero()) {
                odd += 1;
            }
            if sup_norm(&z) > sup_norm(&h) * BigRational::from_integer(BigInt::from(d)) {
                norm += 1;
            }
        }
        if odd + norm > 0 {
            failures.push(format!("h d={d}: {odd} oddness failures, {norm} norm failures"));
        }
    }
    outcome(failures, checked, "exact rational arithmetic, no tolerance")
}

/// 2-colorability defect by trying every removal set and 2-coloring.
fn oracle_cd(h: &Hypergraph) -> usize {
    let m = h.ground_size();
    let edges: Vec<Vec<usize>> = h.edges().iter().map(|e| e.iter().collect()).collect();
    (0..m)
        .find(|&r| {
            (0u32..1 << m).filter(|s| s.count_ones() as usize == r).any(|removed| {
                let live: Vec<&Vec<usize>> = edges.iter().filter(|e| e.iter().all(|&x| removed >> x & 1 == 0)).collect();
                (0u32..1 << m).any(|red| live.iter().all(|e| e.iter().any(|&x| red >> x & 1 == 1) && e.iter().any(|&x| red >> x & 1 == 0)))
            })
        })
        .unwrap_or(m)
}

fn criterion_8() -> Outcome {
    let caps = SizeCaps::default();
    let mut failures = Vec::new();
    let mut checked = 1;
    let h = Hypergraph::complete_uniform(5, 2).unwrap();
    let cd = colorability_defect(&h, &caps).ok();
    let chi = chromatic_number(&kneser(5, 2).unwrap(), &caps).ok();
    let oracle = oracle_cd(&h);
    if cd != Some(3) || chi != Some(3) || oracle != 3 {
        failures.push(format!("cd {cd:?}, oracle cd {oracle}, chi {chi:?}"));
    }
    let mut capped = Vec::new();
    for c in standard_corpus().into_iter().filter(|c| !c.homology_only) {
        let repr = standard_kneser_representation(&c.graph);
        match (colorability_defect(&repr, &caps), chromatic_number(&c.graph, &caps)) {
            (Ok(cd), Ok(chi)) => {
                checked += 1;
                if cd > chi {
                    failures.push(format!("{}: cd {cd} > chi {chi}", c.name));
                }
            }
            _ => capped.push(c.name.clone()),
        }
    }
    outcome(failures, checked, &format!("exact; cd size-capped for {}", capped.join(" ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("example homology", criterion_1),
        ("Kneser and Schrijver", criterion_2),
        ("conn_b0 decision", criterion_3),
        ("cohomological index", criterion_4),
        ("arrow chain", criterion_5),
        ("structural theorems", criterion_6),
        ("appendix maps", criterion_7),
        ("Dol'nikov tightness", criterion_8),
    ];
    let mut all = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        all &= o.pass;
        println!("criterion {} {name}: {} ({})", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
