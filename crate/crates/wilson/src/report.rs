//! Serializable reports for `compute` and `analyze`.
//!
//! Field order is fixed by the struct definitions and every list is sorted,
//! so equal inputs give byte-identical JSON.

use std::fmt::Write as _;

use serde::Serialize;
use wilson_core::canonical::{self, collection_size};
use wilson_core::engine::{EngineStats, WilsonReport};
use wilson_core::{BetaPolynomial, Coefficient, Loop, PlaquetteAssignment, Strategy};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermJson {
    pub exp: u32,
    pub num: String,
    pub den: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlaquetteCountJson {
    pub base: [i64; 2],
    pub sign: char,
    pub count: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AssignmentJson {
    #[serde(rename = "K")]
    pub k: Vec<PlaquetteCountJson>,
    pub coefficient: String,
    pub area: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatsJson {
    pub memo_entries: usize,
    pub recursion_calls: u64,
    pub strategy: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComputeReport {
    pub polynomial: Vec<TermJson>,
    pub canonical_count: usize,
    pub per_assignment: Vec<AssignmentJson>,
    pub stats: StatsJson,
}

pub fn polynomial_json(p: &BetaPolynomial) -> Vec<TermJson> {
    p.terms()
        .map(|(exp, c)| TermJson {
            exp,
            num: c.numer().to_string(),
            den: c.denom().to_string(),
        })
        .collect()
}

pub fn assignment_json(k: &PlaquetteAssignment) -> Vec<PlaquetteCountJson> {
    k.iter()
        .map(|(p, count)| PlaquetteCountJson {
            base: [p.base.x, p.base.y],
            sign: p.sign.symbol(),
            count,
        })
        .collect()
}

fn coefficient_string(c: &Coefficient) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        c.to_string()
    }
}

impl ComputeReport {
    pub fn new(report: &WilsonReport, stats: EngineStats, memo_entries: usize, strategy: Strategy) -> Self {
        ComputeReport {
            polynomial: polynomial_json(&report.polynomial),
            canonical_count: report.per_assignment.len(),
            per_assignment: report
                .per_assignment
                .iter()
                .map(|(k, c)| AssignmentJson {
                    k: assignment_json(k),
                    coefficient: coefficient_string(c),
                    area: k.area(),
                })
                .collect(),
            stats: StatsJson {
                memo_entries,
                recursion_calls: stats.recursion_calls,
                strategy: strategy.name(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Human-readable form of a compute run.
pub fn compute_text(
    l: &Loop,
    report: &WilsonReport,
    stats: EngineStats,
    memo_entries: usize,
    strategy: Strategy,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "loop: {l}");
    let _ = writeln!(out, "phi = {}", report.polynomial);
    for (e, c) in report.polynomial.terms() {
        let _ = writeln!(out, "  β^{e} (coeff {})", coefficient_string(c));
    }
    if report.polynomial.is_zero() {
        let _ = writeln!(out, "  (zero polynomial)");
    }
    let _ = writeln!(out, "canonical assignments: {}", report.per_assignment.len());
    for (k, c) in &report.per_assignment {
        let _ = writeln!(out, "  area {:>3}  c = {:>6}  K = {k}", k.area(), coefficient_string(c));
    }
    if !report.polynomial.has_integer_coefficients() {
        let _ = writeln!(out, "note: non-integer coefficient");
    }
    let _ = writeln!(
        out,
        "memo entries: {memo_entries}, recursion calls: {}, strategy: {strategy}",
        stats.recursion_calls
    );
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrameJson {
    pub x0: i64,
    pub y0: i64,
    pub width: usize,
    pub height: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegionJson {
    pub exterior: bool,
    pub h: i64,
    pub d: u64,
    pub area: usize,
    pub layers: u64,
    pub plaquettes: Vec<[i64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalJson {
    pub area: u64,
    #[serde(rename = "K")]
    pub k: Vec<PlaquetteCountJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalyzeReport {
    pub moves: String,
    pub length: usize,
    pub frame: FrameJson,
    /// Rows from top to bottom.
    pub height: Vec<Vec<i64>>,
    pub distance: Vec<Vec<u64>>,
    pub regions: Vec<RegionJson>,
    pub support_area: usize,
    pub canonical_collection: Vec<CanonicalJson>,
    pub expected_collection_size: Option<u64>,
    pub collection_size_ok: bool,
}

impl AnalyzeReport {
    /// Analyses the backtrack-free reduction of `l`.
    pub fn new(l: &Loop) -> Result<Self, canonical::CanonicalError> {
        let l = l.reduced();
        let analysis = wilson_core::geometry::analyze(&l)?;
        let collection = canonical::canonical_collection_from(&l, &analysis)?;
        let expected = collection_size(&analysis)?;
        let frame = analysis.frame();
        Ok(AnalyzeReport {
            moves: l.moves(),
            length: l.len(),
            frame: FrameJson {
                x0: frame.x0,
                y0: frame.y0,
                width: frame.width,
                height: frame.height,
            },
            height: analysis.height.rows(),
            distance: analysis.distance.rows(),
            regions: analysis
                .interior()
                .map(|r| RegionJson {
                    exterior: r.exterior,
                    h: r.h,
                    d: r.d,
                    area: r.area(),
                    layers: r.layer_bound(),
                    plaquettes: r.plaquettes.iter().map(|p| [p.x, p.y]).collect(),
                })
                .collect(),
            support_area: analysis.support_area(),
            collection_size_ok: expected == Some(collection.len() as u64),
            canonical_collection: collection
                .iter()
                .map(|k| CanonicalJson {
                    area: k.area(),
                    k: assignment_json(k),
                })
                .collect(),
            expected_collection_size: expected,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "loop: {} ({} edges)", self.moves, self.length);
        let f = &self.frame;
        let _ = writeln!(
            out,
            "frame: x {}..{}, y {}..{}",
            f.x0,
            f.x0 + f.width as i64,
            f.y0,
            f.y0 + f.height as i64
        );
        let _ = writeln!(out, "height (top row first):");
        out.push_str(&grid(&self.height));
        let _ = writeln!(out, "distance (top row first):");
        out.push_str(&grid(&self.distance));
        let _ = writeln!(out, "interior regions: {}", self.regions.len());
        for (i, r) in self.regions.iter().enumerate() {
            let at = r.plaquettes[0];
            let _ = writeln!(
                out,
                "  #{i}: h = {}, d = {}, area = {}, layers = {}, first plaquette ({}, {})",
                r.h, r.d, r.area, r.layers, at[0], at[1]
            );
        }
        let _ = writeln!(out, "support area: {}", self.support_area);
        let _ = writeln!(
            out,
            "canonical collection: {} (expected {})",
            self.canonical_collection.len(),
            self.expected_collection_size
                .map_or_else(|| "overflow".to_string(), |n| n.to_string())
        );
        for k in &self.canonical_collection {
            let parts: Vec<String> =
                k.k.iter()
                    .map(|e| format!("{}({},{})×{}", e.sign, e.base[0], e.base[1], e.count))
                    .collect();
            let _ = writeln!(out, "  area {:>3}: {}", k.area, parts.join(" "));
        }
        out
    }
}

fn grid<T: std::fmt::Display>(rows: &[Vec<T>]) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    let w = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for r in cells {
        let line: Vec<String> = r.iter().map(|c| format!("{c:>w$}")).collect();
        let _ = writeln!(out, "  {}", line.join(" "));
    }
    out
}
