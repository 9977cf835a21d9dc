//! Shipped lattice loops with their expected polynomials.
//!
//! The manifest maps every fixture to a loop file and to one source of
//! truth: a catalogue row with named region areas, a winding family
//! `(n, a)`, an explicit polynomial, or none (geometry checks only).
//! Catalogue fixtures name each region parameter by one plaquette inside it.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use serde::Deserialize;
use thiserror::Error;
use wilson_core::canonical::{collection_size, CanonicalError};
use wilson_core::closedform::c_n;
use wilson_core::closedform::table1::{self, Table1Error};
use wilson_core::geometry::{self, Analysis};
use wilson_core::{BetaPolynomial, Coefficient, Loop, Point};

use crate::loopfile::{self, FormatError};

macro_rules! embedded {
    ($($name:literal,)*) => {
        &[$((concat!("loops/", $name, ".json"), include_str!(concat!("../fixtures/loops/", $name, ".json"))),)*]
    };
}

const MANIFEST: &str = include_str!("../fixtures/manifest.json");

const LOOP_FILES: &[(&str, &str)] = embedded![
    "chain_of_three",
    "figure_eight",
    "figure_eight_inner_loop",
    "l_shape_3",
    "limacon_s2_t1",
    "limacon_s2_t2",
    "limacon_s3_t2",
    "nested_opposite_1_1_1",
    "nested_opposite_1_2_1",
    "rect_1x2",
    "rect_1x3",
    "rect_2x1",
    "row15_1_1_1_1",
    "row15_1_2_1_1",
    "six_regions",
    "square_2x2",
    "square_3x3",
    "three_lobes",
    "touching_lobes",
    "triple_spiral_1_1_2",
    "two_inner_loops",
    "unit_plaquette",
    "unit_plaquette_shifted",
];

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("manifest: {0}")]
    Manifest(#[from] serde_json::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("fixture {name}: unknown loop file {file}")]
    MissingLoop { name: String, file: String },
    #[error("fixture {name}: {source}")]
    Loop { name: String, source: FormatError },
    #[error("fixture {name}: {source}")]
    Geometry { name: String, source: CanonicalError },
    #[error("fixture {name}: {source}")]
    Table1 { name: String, source: Table1Error },
    #[error("fixture {name}: {message}")]
    Invalid { name: String, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegionRef {
    pub at: [i64; 2],
    pub area: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Table1Class {
    pub row: u32,
    pub regions: BTreeMap<String, RegionRef>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WindingFamily {
    pub n: u32,
    pub area: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub exp: u32,
    pub num: String,
    pub den: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExpectedSource {
    Table1,
    Winding,
    Explicit,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureSpec {
    pub name: String,
    #[serde(rename = "loop")]
    pub loop_file: String,
    #[serde(default)]
    pub description: String,
    pub table1: Option<Table1Class>,
    pub winding: Option<WindingFamily>,
    pub expected: ExpectedSource,
    pub polynomial: Option<Vec<TermSpec>>,
    pub region_count: Option<usize>,
    pub layered_regions: Option<usize>,
    pub collection_size: Option<u64>,
}

#[derive(Debug, Deserialize)]
struct ManifestFile {
    fixtures: Vec<FixtureSpec>,
}

/// A fixture whose loop parsed and whose geometry matched its declaration.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub spec: FixtureSpec,
    /// Backtrack-free loop, wound if the fixture is a winding family.
    pub loop_: Loop,
    pub analysis: Analysis,
    pub expected: Option<BetaPolynomial>,
    pub collection_size: u64,
}

impl Fixture {
    pub fn name(&self) -> &str {
        &self.spec.name
    }

    pub fn table1_row(&self) -> Option<u32> {
        self.spec.table1.as_ref().map(|c| c.row)
    }
}

fn parse_manifest(text: &str) -> Result<Vec<FixtureSpec>, FixtureError> {
    let m: ManifestFile = serde_json::from_str(text)?;
    Ok(m.fixtures)
}

/// The fixtures compiled into the binary, validated.
pub fn builtin() -> Result<Vec<Fixture>, FixtureError> {
    parse_manifest(MANIFEST)?
        .into_iter()
        .map(|spec| {
            let text = LOOP_FILES
                .iter()
                .find(|(f, _)| *f == spec.loop_file)
                .map(|(_, t)| *t)
                .ok_or_else(|| FixtureError::MissingLoop {
                    name: spec.name.clone(),
                    file: spec.loop_file.clone(),
                })?;
            load(spec, text)
        })
        .collect()
}

/// Fixtures from `dir/manifest.json`, with loop paths relative to `dir`.
pub fn from_dir(dir: &Path) -> Result<Vec<Fixture>, FixtureError> {
    let read = |p: &Path| {
        std::fs::read_to_string(p).map_err(|source| FixtureError::Io {
            path: p.display().to_string(),
            source,
        })
    };
    parse_manifest(&read(&dir.join("manifest.json"))?)?
        .into_iter()
        .map(|spec| {
            let text = read(&dir.join(&spec.loop_file))?;
            load(spec, &text)
        })
        .collect()
}

fn invalid(spec: &FixtureSpec, message: impl Into<String>) -> FixtureError {
    FixtureError::Invalid {
        name: spec.name.clone(),
        message: message.into(),
    }
}

/// Parses the loop and checks the declared geometry before any engine run.
pub fn load(spec: FixtureSpec, loop_json: &str) -> Result<Fixture, FixtureError> {
    let name = spec.name.clone();
    let mut l = loopfile::parse_loop(loop_json).map_err(|source| FixtureError::Loop {
        name: name.clone(),
        source,
    })?;
    if let Some(w) = spec.winding {
        l = l.wind(w.n as usize).map_err(|e| FixtureError::Loop {
            name: name.clone(),
            source: e.into(),
        })?;
    }
    let l = l.reduced();
    let geometry_err = |e: CanonicalError| FixtureError::Geometry {
        name: name.clone(),
        source: e,
    };
    let analysis = geometry::analyze(&l).map_err(|e| geometry_err(e.into()))?;
    let size = collection_size(&analysis)
        .map_err(geometry_err)?
        .ok_or_else(|| invalid(&spec, "canonical collection size overflows"))?;
    let interior: Vec<_> = analysis.interior().collect();

    if let Some(n) = spec.region_count {
        if interior.len() != n {
            return Err(invalid(
                &spec,
                format!("{} interior regions, declared {n}", interior.len()),
            ));
        }
    }
    if let Some(n) = spec.layered_regions {
        let got = interior.iter().filter(|r| r.layer_bound() > 0).count();
        if got != n {
            return Err(invalid(&spec, format!("{got} regions admit layers, declared {n}")));
        }
    }
    if let Some(n) = spec.collection_size {
        if size != n {
            return Err(invalid(
                &spec,
                format!("canonical collection has {size} elements, declared {n}"),
            ));
        }
    }

    let expected = match spec.expected {
        ExpectedSource::Table1 => {
            let class = spec
                .table1
                .as_ref()
                .ok_or_else(|| invalid(&spec, "expected table1 without a table1 class"))?;
            Some(check_table1(&spec, class, &analysis, size)?)
        }
        ExpectedSource::Winding => {
            let w = spec
                .winding
                .ok_or_else(|| invalid(&spec, "expected winding without a winding family"))?;
            Some(check_winding(&spec, w, &analysis)?)
        }
        ExpectedSource::Explicit => {
            let terms = spec
                .polynomial
                .as_ref()
                .ok_or_else(|| invalid(&spec, "expected explicit without a polynomial"))?;
            let mut p = BetaPolynomial::zero();
            for t in terms {
                let num: BigInt = t.num.parse().map_err(|_| invalid(&spec, "bad numerator"))?;
                let den: BigInt = t.den.parse().map_err(|_| invalid(&spec, "bad denominator"))?;
                if den == BigInt::from(0) {
                    return Err(invalid(&spec, "zero denominator"));
                }
                p.add_term(t.exp, Coefficient::new(num, den));
            }
            Some(p)
        }
        ExpectedSource::None => None,
    };
    Ok(Fixture {
        spec,
        loop_: l,
        analysis,
        expected,
        collection_size: size,
    })
}

fn check_table1(
    spec: &FixtureSpec,
    class: &Table1Class,
    analysis: &Analysis,
    size: u64,
) -> Result<BetaPolynomial, FixtureError> {
    let row = table1::row(class.row).map_err(|source| FixtureError::Table1 {
        name: spec.name.clone(),
        source,
    })?;
    let interior: Vec<_> = analysis.interior().collect();
    if interior.len() != row.params.len() || class.regions.len() != row.params.len() {
        return Err(invalid(
            spec,
            format!(
                "row {} has {} parameters; loop has {} interior regions and {} are declared",
                row.id,
                row.params.len(),
                interior.len(),
                class.regions.len()
            ),
        ));
    }
    let mut used = vec![false; interior.len()];
    for (param, r) in &class.regions {
        if !row.params.contains(&param.as_str()) {
            return Err(invalid(spec, format!("row {} has no parameter {param}", row.id)));
        }
        let at = Point::new(r.at[0], r.at[1]);
        let idx = interior
            .iter()
            .position(|reg| reg.plaquettes.binary_search(&at).is_ok())
            .ok_or_else(|| invalid(spec, format!("{param}: plaquette {at} is not interior")))?;
        if used[idx] {
            return Err(invalid(spec, format!("{param}: region already named")));
        }
        used[idx] = true;
        if interior[idx].area() != r.area {
            return Err(invalid(
                spec,
                format!("{param}: region area {} but declared {}", interior[idx].area(), r.area),
            ));
        }
    }
    if size != u64::from(row.canonical_count) {
        return Err(invalid(
            spec,
            format!(
                "canonical collection has {size} elements, row {} lists {}",
                row.id, row.canonical_count
            ),
        ));
    }
    let areas: Vec<(&str, i64)> = class.regions.iter().map(|(k, r)| (k.as_str(), r.area as i64)).collect();
    row.evaluate(&areas).map_err(|source| FixtureError::Table1 {
        name: spec.name.clone(),
        source,
    })
}

fn check_winding(spec: &FixtureSpec, w: WindingFamily, analysis: &Analysis) -> Result<BetaPolynomial, FixtureError> {
    let interior: Vec<_> = analysis.interior().collect();
    let ok = interior.len() == 1
        && interior[0].area() == w.area as usize
        && interior[0].h.unsigned_abs() == u64::from(w.n)
        && interior[0].d == u64::from(w.n);
    if !ok {
        return Err(invalid(
            spec,
            format!("not a simple loop of area {} wound {} times", w.area, w.n),
        ));
    }
    Ok(BetaPolynomial::monomial(w.n * w.area, c_n(w.n, w.area)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_fixtures_validate() {
        let all = builtin().unwrap();
        assert!(all.len() >= 40);
        let names: std::collections::BTreeSet<_> = all.iter().map(|f| f.name().to_string()).collect();
        assert_eq!(names.len(), all.len(), "fixture names are unique");
        for row in 1..=8 {
            assert!(
                all.iter().any(|f| f.table1_row() == Some(row)),
                "row {row} has a fixture"
            );
        }
        assert!(all.iter().any(|f| f.collection_size == 4));
    }

    #[test]
    fn wrong_declaration_is_rejected() {
        let spec: FixtureSpec = parse_manifest(
            r#"{"fixtures":[{"name":"bad","loop":"x","expected":"table1",
                "table1":{"row":3,"regions":{"s":{"at":[1,0],"area":3},"t":{"at":[0,0],"area":1}}}}]}"#,
        )
        .unwrap()
        .remove(0);
        let err = load(spec, r#"{"origin":[0,0],"moves":"URRRDLLLURDL"}"#).unwrap_err();
        assert!(err.to_string().contains("declared 3"), "{err}");
    }
}
