//! Executable checks of the structural theorems on a fixed corpus.

mod checks;
mod corpus;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde_json::json;

pub use checks::*;
pub use corpus::*;

use crate::bounds::{chromatic_number, colorability_defect, conn_b0, SizeCaps};
use crate::complexes::{
    barycentric_subdivision, box0_complex, box_complex, complex_join, cross_polytope_boundary, hom_poset, Z2Complex,
};
use crate::graphs::{complete, complete_bipartite, cycle, kneser, schrijver, standard_kneser_representation, Graph, Hypergraph};
use crate::homology::{homology, Ring};
use crate::z2tools::{cohomological_index, h_map_eval, lambda_map, sup_norm};

/// The named check suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Examples,
    Arrows,
    Joins,
    Products,
    Csorba,
    Appendix,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Examples, Suite::Arrows, Suite::Joins, Suite::Products, Suite::Csorba, Suite::Appendix];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Examples => "examples",
            Suite::Arrows => "arrows",
            Suite::Joins => "joins",
            Suite::Products => "products",
            Suite::Csorba => "csorba",
            Suite::Appendix => "appendix",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Suite, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

type Job = Box<dyn Fn() -> CheckResult + Send + Sync>;

fn job(f: impl Fn() -> CheckResult + Send + Sync + 'static) -> Job {
    Box::new(f)
}

/// Run one suite; checks run concurrently and come back in a fixed order.
pub fn run_suite(suite: Suite, caps: &SizeCaps) -> Vec<CheckResult> {
    let jobs = match suite {
        Suite::Examples => example_jobs(),
        Suite::Arrows => arrow_jobs(caps),
        Suite::Joins => join_jobs(),
        Suite::Products => product_jobs(),
        Suite::Csorba => csorba_jobs(),
        Suite::Appendix => appendix_jobs(),
    };
    jobs.par_iter().map(|j| j()).collect()
}

fn cross(d: usize) -> Z2Complex {
    cross_polytope_boundary(d).expect("d >= 1")
}

/// Largest `Hom(K₂,G)` whose order complex enters the homology comparison.
pub const HOM_POSET_CAP: usize = 1000;

fn example_jobs() -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for n in 2..=5usize {
        jobs.push(job(move || {
            check_example_homology("box_complete", &format!("K{n}"), &box_complex(&complete(n).unwrap()), &sphere(n - 2))
        }));
        jobs.push(job(move || {
            let b0 = box0_complex(&complete(n).unwrap());
            let lhs = json!({ "same_as_cross_polytope": b0.same_as(&cross(n)), "homology": homology_signature(&b0) });
            let rhs = json!({ "same_as_cross_polytope": true, "homology": free_signature(&sphere(n - 1)) });
            CheckResult::equal("box0_complete", &format!("K{n}"), lhs, rhs)
        }));
    }
    for n in [3usize, 4] {
        jobs.push(job(move || check_example_homology("box_even_cycle", &format!("C{}", 2 * n), &box_complex(&cycle(2 * n).unwrap()), &[1, 2])));
        jobs.push(job(move || {
            check_example_homology("box0_even_cycle", &format!("C{}", 2 * n), &box0_complex(&cycle(2 * n).unwrap()), &[0, 1, 2])
        }));
    }
    for n in [2usize, 3] {
        jobs.push(job(move || check_example_homology("box_odd_cycle", &format!("C{}", 2 * n + 1), &box_complex(&cycle(2 * n + 1).unwrap()), &sphere(1))));
        jobs.push(job(move || {
            check_example_homology("box0_odd_cycle", &format!("C{}", 2 * n + 1), &box0_complex(&cycle(2 * n + 1).unwrap()), &sphere(2))
        }));
    }
    for (m, n) in [(1usize, 3usize), (2, 2), (3, 3)] {
        let name = format!("K{m},{n}");
        let name0 = name.clone();
        jobs.push(job(move || check_example_homology("box_complete_bipartite", &name, &box_complex(&complete_bipartite(m, n).unwrap()), &sphere(0))));
        jobs.push(job(move || {
            check_example_homology("box0_complete_bipartite", &name0, &box0_complex(&complete_bipartite(m, n).unwrap()), &sphere(1))
        }));
    }
    for (n, k) in [(5usize, 2usize), (6, 2)] {
        jobs.push(job(move || check_kneser_parity(n, k)));
    }
    jobs.push(job(|| check_example_homology("schrijver_sphere", "SG(5,2)", &box_complex(&schrijver(5, 2).unwrap()), &sphere(1))));
    for (name, g) in [("KG(5,2)", kneser(5, 2).unwrap()), ("SG(5,2)", schrijver(5, 2).unwrap())] {
        jobs.push(job(move || {
            let chi = chromatic_number(&g, &SizeCaps::default()).ok();
            CheckResult::equal("kneser_chromatic", name, json!(chi), json!(3))
        }));
    }
    for d in 1..=3usize {
        jobs.push(job(move || {
            let idx = cohomological_index(&cross(d + 1)).map_err(|e| e.to_string());
            CheckResult::equal("chind_sphere", &format!("cross polytope boundary in R^{}", d + 1), json!(idx.ok()), json!(d))
        }));
    }
    for c in standard_corpus() {
        let kinds = if hom_poset(&c.graph).len() <= HOM_POSET_CAP { 3 } else { 2 };
        for kind in 0..kinds {
            let (name, g) = (c.name.clone(), c.graph.clone());
            jobs.push(job(move || match kind {
                0 => check_susp_b_vs_b0(&g, &name),
                1 => check_nbhd_vs_box(&g, &name),
                _ => check_hom_vs_box(&g, &name),
            }));
        }
    }
    jobs
}

/// The reduced homology of `B(KG(n,k))` is concentrated in dimension
/// `n-2k` with odd rank there, over both rings.
pub fn check_kneser_parity(n: usize, k: usize) -> CheckResult {
    let b = box_complex(&kneser(n, k).unwrap());
    let d = n - 2 * k;
    let g = homology(&b, Ring::Gf2);
    let z = homology(&b, Ring::Z);
    let concentrated = |betti: &[usize]| betti.iter().enumerate().all(|(i, &r)| i == d || r == 0);
    let rank = z.reduced_betti.get(d).copied().unwrap_or(0);
    let lhs = json!({
        "concentrated": concentrated(&g.reduced_betti) && concentrated(&z.reduced_betti) && g.h_minus_one() == 0,
        "torsion_free": z.torsion.iter().all(Vec::is_empty),
        "same_rank_over_gf2": g.reduced_betti.get(d).copied().unwrap_or(0) == rank,
        "rank_is_odd": rank % 2 == 1,
    });
    let rhs = json!({ "concentrated": true, "torsion_free": true, "same_rank_over_gf2": true, "rank_is_odd": true });
    CheckResult::equal("kneser_parity", &format!("KG({n},{k}), rank {rank} in dim {d}"), lhs, rhs)
}

fn arrow_jobs(caps: &SizeCaps) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for c in standard_corpus().into_iter().filter(|c| !c.homology_only) {
        let caps = caps.clone();
        jobs.push(job(move || {
            let repr = standard_kneser_representation(&c.graph);
            check_arrow_chain(&c.graph, Some(&repr), &caps, &c.name)
        }));
    }
    for c in standard_corpus() {
        jobs.push(job(move || {
            let b = box_complex(&c.graph);
            let b0 = box0_complex(&c.graph);
            let lhs = chind_or_minus_one(&b0);
            let rhs = chind_or_minus_one(&b) + 1;
            CheckResult::equal("chind_b0_shift", &c.name, json!(lhs), json!(rhs))
        }));
    }
    jobs.push(job(|| CheckResult::equal("conn_b0", "empty graph", json!(conn_b0(&Graph::edgeless(0))), json!(-2))));
    jobs.push(job(|| CheckResult::equal("conn_b0", "edgeless on 3 vertices", json!(conn_b0(&Graph::edgeless(3))), json!(-1))));
    for c in standard_corpus() {
        let g = &c.graph;
        if g.edge_count() > 0 && (g.is_bipartite() || !g.is_connected()) {
            jobs.push(job(move || CheckResult::equal("conn_b0", &c.name, json!(conn_b0(&c.graph)), json!(0))));
        }
    }
    for n in 3..=5usize {
        jobs.push(job(move || CheckResult::equal("conn_b0", &format!("K{n}"), json!(conn_b0(&complete(n).unwrap())), json!(n - 2))));
    }
    let caps = caps.clone();
    jobs.push(job(move || {
        let h = Hypergraph::complete_uniform(5, 2).unwrap();
        let cd = colorability_defect(&h, &caps).ok();
        let chi = chromatic_number(&kneser(5, 2).unwrap(), &caps).ok();
        CheckResult::equal("dolnikov_tight", "complete 2-uniform hypergraph on 5 points", json!([cd, chi]), json!([3, 3]))
    }));
    jobs
}

fn chind_or_minus_one(k: &Z2Complex) -> i64 {
    if k.is_empty() {
        -1
    } else {
        cohomological_index(k).expect("box complexes carry a free involution") as i64
    }
}

fn join_pairs() -> [(&'static str, Graph, Graph); 3] {
    [
        ("K2*K2", complete(2).unwrap(), complete(2).unwrap()),
        ("K1*K2", complete(1).unwrap(), complete(2).unwrap()),
        ("C4*K1", cycle(4).unwrap(), complete(1).unwrap()),
    ]
}

fn join_jobs() -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for (name, g, h) in join_pairs() {
        jobs.push(job(move || check_join_b0_iso(&g, &h, name)));
    }
    let susp_pairs = [
        ("K2*K3", complete(2).unwrap(), complete(3).unwrap()),
        ("C5*C5", cycle(5).unwrap(), cycle(5).unwrap()),
        ("K1*K1", complete(1).unwrap(), complete(1).unwrap()),
    ];
    for (name, g, h) in susp_pairs {
        jobs.push(job(move || check_join_b_susp(&g, &h, name)));
    }
    let index_pairs: [(&str, fn() -> (Z2Complex, Z2Complex)); 3] = [
        ("S0*S0", || (cross(1), cross(1))),
        ("S0*S1", || (cross(1), cross(2))),
        ("B(K3)*B(C5)", || (box_complex(&complete(3).unwrap()), box_complex(&cycle(5).unwrap()))),
    ];
    for (name, make) in index_pairs {
        jobs.push(job(move || {
            let (k, l) = make();
            let lhs = cohomological_index(&complex_join(&k, &l)).ok();
            let rhs = match (cohomological_index(&k), cohomological_index(&l)) {
                (Ok(a), Ok(b)) => Some(a + b + 1),
                _ => None,
            };
            CheckResult::equal("chind_join", name, json!(lhs), json!(rhs))
        }));
    }
    jobs
}

fn product_jobs() -> Vec<Job> {
    let pairs = [
        ("K2xK3", complete(2).unwrap(), complete(3).unwrap()),
        ("K2xK2", complete(2).unwrap(), complete(2).unwrap()),
        ("K3xK3", complete(3).unwrap(), complete(3).unwrap()),
    ];
    pairs.into_iter().map(|(name, g, h)| job(move || check_product_kunneth(&g, &h, name))).collect()
}

fn csorba_jobs() -> Vec<Job> {
    vec![
        job(|| check_csorba_roundtrip(&cross(2), "cross polytope boundary in R^2")),
        job(|| check_csorba_roundtrip(&cross(3), "cross polytope boundary in R^3")),
        job(|| check_csorba_roundtrip(&barycentric_subdivision(&cross(2)), "subdivided cross polytope boundary in R^2")),
    ]
}

/// Number of random vectors per dimension in the appendix suite.
pub const H_SAMPLES: usize = 1000;

fn appendix_jobs() -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    for d in 1..=4usize {
        jobs.push(job(move || {
            let lhs = match lambda_map(d) {
                Ok(m) => json!({ "simplicial": m.is_simplicial(), "equivariant": m.is_equivariant() }),
                Err(e) => json!(e.to_string()),
            };
            CheckResult::equal("lambda_map", &format!("d={d}"), lhs, json!({ "simplicial": true, "equivariant": true }))
        }));
    }
    for d in 1..=3usize {
        jobs.push(job(move || check_h_map(d, H_SAMPLES, 0x5eed + d as u64)));
    }
    jobs
}

/// A random rational vector of length `len` with at least one positive and
/// one negative coordinate.
pub fn mixed_sign_vector(rng: &mut StdRng, len: usize) -> Vec<BigRational> {
    loop {
        let z: Vec<BigRational> = (0..len)
            .map(|_| BigRational::new(BigInt::from(rng.gen_range(-20i64..=20)), BigInt::from(rng.gen_range(1i64..=12))))
            .collect();
        if z.iter().any(Signed::is_positive) && z.iter().any(Signed::is_negative) {
            return z;
        }
    }
}

/// Oddness `h(-z) = -h(z)` and `‖z‖∞ ≤ d‖h(z)‖∞` on seeded samples.
pub fn check_h_map(d: usize, samples: usize, seed: u64) -> CheckResult {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut odd_failures = 0usize;
    let mut norm_failures = 0usize;
    for _ in 0..samples {
        let z = mixed_sign_vector(&mut rng, d + 1);
        let h = h_map_eval(&z, d);
        let neg: Vec<BigRational> = z.iter().map(|x| -x).collect();
        let hn = h_map_eval(&neg, d);
        if h.iter().zip(&hn).any(|(a, b)| *a != -b) {
            odd_failures += 1;
        }
        if sup_norm(&z) > sup_norm(&h) * BigRational::from_integer(BigInt::from(d)) {
            norm_failures += 1;
        }
    }
    CheckResult::equal(
        "h_map",
        &format!("d={d}, {samples} samples"),
        json!({ "odd_failures": odd_failures, "norm_failures": norm_failures }),
        json!({ "odd_failures": 0, "norm_failures": 0 }),
    )
}

/// Aligned text table with one row per check.
pub fn format_table(results: &[CheckResult]) -> String {
    let rows: Vec<[String; 5]> = results
        .iter()
        .map(|r| {
            let status = if r.passed() { "pass" } else { "FAIL" };
            let (lhs, rhs) = if r.passed() { (String::new(), String::new()) } else { (r.lhs.to_string(), r.rhs.to_string()) };
            [status.to_string(), r.name.clone(), r.instance.clone(), lhs, rhs]
        })
        .collect();
    let header = ["status", "check", "instance", "lhs", "rhs"].map(String::from);
    let mut width = [0usize; 5];
    for row in std::iter::once(&header).chain(&rows) {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(&header).chain(&rows) {
        let cells: Vec<String> = row.iter().zip(width).map(|(c, w)| format!("{c:<w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    out.push_str(&format!("{} checks, {} failed\n", results.len(), failed));
    out
}
