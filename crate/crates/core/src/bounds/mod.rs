//! Combinatorial and topological lower bounds on the chromatic number and
//! the ladder report that checks them against each other.

mod biclique;
mod coloring;
mod defect;
mod xind;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::complexes::{box0_complex, box_complex, hom_poset};
use crate::graphs::{standard_kneser_representation, Graph, Hypergraph};
use crate::homology::{connectivity_of, homology, homological_connectivity, Conn, Ring};
use crate::z2tools::cohomological_index;

pub use biclique::{biclique_parameter, longest_zigzag, zigzag_number};
pub use coloring::{chromatic_number, clique_number, optimal_coloring};
pub use defect::colorability_defect;
pub use xind::{cross_index, cross_index_upper, is_qt_map, qt_leq, QtMap};

pub const SIZE_CAPS_ENV: &str = "CHROMATOPO_SIZE_CAPS";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("{field}: size {size} exceeds cap {cap}")]
    SizeCap { field: &'static str, size: usize, cap: usize },
    #[error("poset carries no involution")]
    MissingInvolution,
    #[error("hypergraph is not a Kneser representation of the graph")]
    NotARepresentation,
    #[error("bad size caps `{0}`: expected comma-separated field=value with fields zig, xind, cd, chi")]
    Caps(String),
}

/// Per-field size limits for the exponential searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeCaps {
    /// Vertices, for the zigzag number.
    pub zig: usize,
    /// Poset elements, for the cross-index.
    pub xind: usize,
    /// Ground elements, for the colorability defect.
    pub cd: usize,
    /// Vertices, for the clique and chromatic numbers (at most 64).
    pub chi: usize,
}

impl Default for SizeCaps {
    fn default() -> Self {
        SizeCaps { zig: 8, xind: 200, cd: 20, chi: 64 }
    }
}

impl FromStr for SizeCaps {
    type Err = BoundsError;

    /// Overrides on top of the defaults, e.g. `zig=9,cd=24`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut caps = SizeCaps::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let bad = || BoundsError::Caps(s.to_string());
            let (k, v) = part.split_once('=').ok_or_else(bad)?;
            let v: usize = v.trim().parse().map_err(|_| bad())?;
            match k.trim() {
                "zig" => caps.zig = v,
                "xind" => caps.xind = v,
                "cd" => caps.cd = v,
                "chi" | "omega" => caps.chi = v,
                _ => return Err(bad()),
            }
        }
        Ok(caps)
    }
}

impl SizeCaps {
    /// Defaults overridden by `CHROMATOPO_SIZE_CAPS` when set.
    pub fn from_env() -> Result<SizeCaps, BoundsError> {
        match std::env::var(SIZE_CAPS_ENV) {
            Ok(s) => s.parse(),
            Err(_) => Ok(SizeCaps::default()),
        }
    }
}

/// `conn(B₀(G))`: `-2` without vertices, `-1` without edges, `0` for
/// bipartite or disconnected graphs, and otherwise the integral homological
/// connectivity of `B₀(G)`.
pub fn conn_b0(g: &Graph) -> Conn {
    if g.n() == 0 {
        Conn::Finite(-2)
    } else if g.edge_count() == 0 {
        Conn::Finite(-1)
    } else if g.is_bipartite() || !g.is_connected() {
        Conn::Finite(0)
    } else {
        homological_connectivity(&box0_complex(g), Ring::Z)
    }
}

/// A value that may have been skipped by a size cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field<T> {
    Value(T),
    Skipped,
}

impl<T: Copy> Field<T> {
    pub fn value(&self) -> Option<T> {
        match self {
            Field::Value(v) => Some(*v),
            Field::Skipped => None,
        }
    }

    fn from_result(r: Result<T, BoundsError>) -> Field<T> {
        match r {
            Ok(v) => Field::Value(v),
            Err(_) => Field::Skipped,
        }
    }
}

impl<T: Serialize> Serialize for Field<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Field::Value(v) => v.serialize(s),
            Field::Skipped => s.serialize_str("skipped:size"),
        }
    }
}

impl<T: fmt::Display> fmt::Display for Field<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Value(v) => write!(f, "{v}"),
            Field::Skipped => f.write_str("skipped:size"),
        }
    }
}

/// Every bound for one graph, the intervals they imply for the index and
/// coindex of `B(G)`, and any broken inequality.
#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub omega: Field<usize>,
    pub chi: Field<usize>,
    pub b_param: usize,
    pub zig: Field<usize>,
    pub cd: Field<usize>,
    pub conn_b0: Conn,
    #[serde(rename = "connZ2_b")]
    pub conn_z2_b: Conn,
    #[serde(rename = "connZ2_b0")]
    pub conn_z2_b0: Conn,
    pub chind_b: i64,
    pub chind_b0: i64,
    pub xind_hom: Field<i64>,
    pub xind_upper: i64,
    pub coind_b_interval: Option<[i64; 2]>,
    pub ind_b_interval: [i64; 2],
    #[serde(rename = "hconnZ_b")]
    pub hconn_z_b: Conn,
    #[serde(rename = "hconnZ_b_surrogate")]
    pub hconn_z_b_surrogate: bool,
    pub notes: Vec<String>,
    pub violations: Vec<String>,
}

/// Column order of [`BoundsReport::csv_record`].
pub const CSV_HEADER: [&str; 17] = [
    "omega",
    "chi",
    "b_param",
    "zig",
    "cd",
    "conn_b0",
    "connZ2_b",
    "connZ2_b0",
    "chind_b",
    "chind_b0",
    "xind_hom",
    "xind_upper",
    "coind_b_interval",
    "ind_b_interval",
    "hconnZ_b",
    "notes",
    "violations",
];

impl BoundsReport {
    pub fn csv_record(&self) -> Vec<String> {
        let interval = |i: [i64; 2]| format!("[{};{}]", i[0], i[1]);
        vec![
            self.omega.to_string(),
            self.chi.to_string(),
            self.b_param.to_string(),
            self.zig.to_string(),
            self.cd.to_string(),
            self.conn_b0.to_string(),
            self.conn_z2_b.to_string(),
            self.conn_z2_b0.to_string(),
            self.chind_b.to_string(),
            self.chind_b0.to_string(),
            self.xind_hom.to_string(),
            self.xind_upper.to_string(),
            self.coind_b_interval.map_or_else(|| "skipped:size".to_string(), interval),
            interval(self.ind_b_interval),
            self.hconn_z_b.to_string(),
            self.notes.join("; "),
            self.violations.join("; "),
        ]
    }

    /// Aligned `name  value` lines.
    pub fn to_text(&self) -> String {
        let record = self.csv_record();
        let width = CSV_HEADER.iter().map(|h| h.len()).max().unwrap_or(0);
        let mut s = String::new();
        for (h, v) in CSV_HEADER.iter().zip(record) {
            s.push_str(&format!("{h:<width$}  {v}\n"));
        }
        s
    }

    /// Names of fields skipped by a size cap.
    pub fn skipped(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        for (name, skipped) in [
            ("omega", self.omega == Field::Skipped),
            ("chi", self.chi == Field::Skipped),
            ("zig", self.zig == Field::Skipped),
            ("cd", self.cd == Field::Skipped),
            ("xind_hom", self.xind_hom == Field::Skipped),
        ] {
            if skipped {
                out.push(name);
            }
        }
        out
    }
}

fn chind_or_empty(k: &crate::complexes::Z2Complex) -> i64 {
    if k.is_empty() {
        -1
    } else {
        cohomological_index(k).expect("box complexes carry a free involution") as i64
    }
}

/// Compute every field for `g`. Without `repr`, the colorability defect is
/// taken on the standard Kneser representation.
pub fn bounds_ladder(g: &Graph, repr: Option<&Hypergraph>, caps: &SizeCaps) -> Result<BoundsReport, BoundsError> {
    let mut notes = Vec::new();
    let standard;
    let h = match repr {
        Some(h) => {
            if !h.represents(g) {
                return Err(BoundsError::NotARepresentation);
            }
            h
        }
        None => {
            standard = standard_kneser_representation(g);
            notes.push(format!("cd on the standard Kneser representation ({} elements)", standard.ground_size()));
            &standard
        }
    };

    let b = box_complex(g);
    let b0 = box0_complex(g);
    let ((omega, chi), ((zig, cd), (b_param, ((topo_b, topo_b0), xinds)))) = rayon::join(
        || (Field::from_result(clique_number(g, caps)), Field::from_result(chromatic_number(g, caps))),
        || {
            rayon::join(
                || (Field::from_result(zigzag_number(g, caps)), Field::from_result(colorability_defect(h, caps))),
                || {
                    rayon::join(
                        || biclique_parameter(g),
                        || {
                            rayon::join(
                                || {
                                    rayon::join(
                                        || {
                                            let hg = homology(&b, Ring::Gf2);
                                            let hz = homology(&b, Ring::Z);
                                            (connectivity_of(&hg), connectivity_of(&hz), chind_or_empty(&b))
                                        },
                                        || (homological_connectivity(&b0, Ring::Gf2), chind_or_empty(&b0)),
                                    )
                                },
                                || {
                                    let p = hom_poset(g);
                                    let exact = cross_index(&p, caps).map(|m| m.t);
                                    let upper = cross_index_upper(&p).expect("Hom(K2,G) is a Z2-poset").t;
                                    (Field::from_result(exact), upper, p.is_empty())
                                },
                            )
                        },
                    )
                },
            )
        },
    );
    let (conn_z2_b, hconn_z_b, chind_b) = topo_b;
    let (conn_z2_b0, chind_b0) = topo_b0;
    let (xind_hom, xind_upper, hom_empty) = xinds;
    let conn_b0 = conn_b0(g);
    if hom_empty {
        notes.push("Hom(K2,G) is empty: xind reported as -1 and left out of the chain".into());
    }
    notes.push("hconnZ_b is the integral homological connectivity of B(G), a surrogate for conn(B(G))".into());

    let mut report = BoundsReport {
        omega,
        chi,
        b_param,
        zig,
        cd,
        conn_b0,
        conn_z2_b,
        conn_z2_b0,
        chind_b,
        chind_b0,
        xind_hom,
        xind_upper,
        coind_b_interval: omega.value().map(|w| [w as i64 - 2, chind_b]),
        ind_b_interval: [chind_b, b.dim() as i64],
        hconn_z_b,
        hconn_z_b_surrogate: true,
        notes,
        violations: Vec::new(),
    };
    report.violations = arrow_violations(g, &report, hom_empty);
    Ok(report)
}

/// Every computable inequality of the ladder that fails.
fn arrow_violations(g: &Graph, r: &BoundsReport, hom_empty: bool) -> Vec<String> {
    let mut v = Vec::new();
    let mut need = |ok: bool, what: String| {
        if !ok {
            v.push(what);
        }
    };
    let chi = r.chi.value().map(|c| c as i64);
    let omega = r.omega.value().map(|c| c as i64);
    if let (Some(w), Some(c)) = (omega, chi) {
        need(w <= c, format!("omega {w} <= chi {c}"));
    }
    if g.n() > 0 {
        need(
            r.conn_z2_b.plus(3) == r.conn_z2_b0.plus(2),
            format!("connZ2_b+3 = connZ2_b0+2 ({} vs {})", r.conn_z2_b.plus(3), r.conn_z2_b0.plus(2)),
        );
        need(
            r.conn_z2_b0.plus(2) <= Conn::Finite(r.chind_b0 + 1),
            format!("connZ2_b0+2 <= chind_b0+1 ({} vs {})", r.conn_z2_b0.plus(2), r.chind_b0 + 1),
        );
        need(r.chind_b0 + 1 == r.chind_b + 2, format!("chind_b0+1 = chind_b+2 ({} vs {})", r.chind_b0 + 1, r.chind_b + 2));
    }
    need(r.chind_b + 2 <= r.b_param as i64, format!("chind_b+2 <= b ({} vs {})", r.chind_b + 2, r.b_param));
    need(r.chind_b <= r.ind_b_interval[1], format!("chind_b <= dim B ({} vs {})", r.chind_b, r.ind_b_interval[1]));
    let xind = if hom_empty { None } else { r.xind_hom.value() };
    if let Some(x) = xind {
        need(r.chind_b <= x, format!("chind_b+2 <= xind+2 ({} vs {})", r.chind_b + 2, x + 2));
        need(x <= r.xind_upper, format!("xind <= height-1 ({x} vs {})", r.xind_upper));
        if let Some(z) = r.zig.value() {
            need(x + 2 <= z as i64, format!("xind+2 <= zig ({} vs {z})", x + 2));
        }
    }
    if let Some(c) = chi {
        if let Some(z) = r.zig.value() {
            need(z as i64 <= c, format!("zig {z} <= chi {c}"));
        }
        if let Some(d) = r.cd.value() {
            need(d as i64 <= c, format!("cd {d} <= chi {c}"));
        }
        need(r.conn_b0.plus(2) <= Conn::Finite(c), format!("conn_b0+2 <= chi ({} vs {c})", r.conn_b0.plus(2)));
        need(r.chind_b + 2 <= c, format!("chind_b+2 <= chi ({} vs {c})", r.chind_b + 2));
    }
    if let Some(w) = omega {
        need(w - 2 <= r.chind_b, format!("omega-2 <= chind_b ({} vs {})", w - 2, r.chind_b));
    }
    v
}
