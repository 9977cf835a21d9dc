//! Verification suites run by `wilson verify` and the acceptance tests.
//!
//! Each suite returns one [`CaseResult`] per check. A case fails when a
//! computed value disagrees with its oracle, and errors when the engine
//! itself reports a broken invariant (memo conflict, memo limit).

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_traits::{One, ToPrimitive, Zero};
use wilson_core::closedform::spectral::{self, DensityMode};
use wilson_core::closedform::table1::{self, triple_spiral_factor_matches};
use wilson_core::closedform::{c_n, levy_continuum, series_identity_residual, tilde_recursion};
use wilson_core::engine::Strategy;
use wilson_core::geometry::{self, Frame};
use wilson_core::{
    canonical, height_assignment, BetaPolynomial, Dir, Edge, Engine, EngineError, Loop, Plaquette, PlaquetteAssignment,
    Point,
};

use crate::corpus::random_loops;
use crate::fixtures::Fixture;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Vanishing,
    EdgeIndependence,
    Table1,
    Winding,
    Series,
    Spectrum,
    Geometry,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Vanishing,
        Suite::EdgeIndependence,
        Suite::Table1,
        Suite::Winding,
        Suite::Series,
        Suite::Spectrum,
        Suite::Geometry,
    ];

    pub const fn name(self) -> &'static str {
        match self {
            Suite::Vanishing => "vanishing",
            Suite::EdgeIndependence => "edge-independence",
            Suite::Table1 => "table1",
            Suite::Winding => "winding",
            Suite::Series => "series",
            Suite::Spectrum => "spectrum",
            Suite::Geometry => "geometry",
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

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug)]
pub struct CaseResult {
    pub name: String,
    pub outcome: Outcome,
    pub detail: String,
    pub elapsed: Duration,
}

impl CaseResult {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

impl fmt::Display for CaseResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.outcome {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Error => "ERROR",
        };
        write!(f, "{tag} {} ({:.1?})", self.name, self.elapsed)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: Vec<CaseResult>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(CaseResult::passed)
    }

    pub fn has_errors(&self) -> bool {
        self.cases.iter().any(|c| c.outcome == Outcome::Error)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.passed())
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub strategy: Strategy,
    pub memo_limit: Option<usize>,
    pub fixtures: Vec<Fixture>,
    pub seed: u64,
}

impl SuiteConfig {
    pub fn new(fixtures: Vec<Fixture>) -> Self {
        SuiteConfig {
            strategy: Strategy::default(),
            memo_limit: None,
            fixtures,
            seed: 0x5EED,
        }
    }

    fn engine(&self) -> Engine {
        self.engine_with(self.strategy)
    }

    fn engine_with(&self, strategy: Strategy) -> Engine {
        Engine::new(strategy).with_memo_limit(self.memo_limit)
    }
}

pub fn run(suite: Suite, config: &SuiteConfig) -> SuiteReport {
    let start = Instant::now();
    let cases = match suite {
        Suite::Vanishing => vanishing(config),
        Suite::EdgeIndependence => edge_independence(config),
        Suite::Table1 => table1_suite(config),
        Suite::Winding => winding(config),
        Suite::Series => series(),
        Suite::Spectrum => spectrum(),
        Suite::Geometry => geometry_properties(config.seed),
    };
    SuiteReport {
        suite,
        cases,
        elapsed: start.elapsed(),
    }
}

/// Times `f` and turns its result into a case.
fn case(name: impl Into<String>, f: impl FnOnce() -> Result<Result<String, String>, EngineError>) -> CaseResult {
    let start = Instant::now();
    let (outcome, detail) = match f() {
        Ok(Ok(detail)) => (Outcome::Pass, detail),
        Ok(Err(detail)) => (Outcome::Fail, detail),
        Err(e) => (Outcome::Error, e.to_string()),
    };
    CaseResult {
        name: name.into(),
        outcome,
        detail,
        elapsed: start.elapsed(),
    }
}

fn check(ok: bool, detail: String) -> Result<String, String> {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn lp(moves: &str) -> Loop {
    Loop::from_moves(Point::ORIGIN, moves).expect("built-in loop is valid")
}

fn with_layers(base: &PlaquetteAssignment, layers: &[(Point, u32)]) -> PlaquetteAssignment {
    let mut k = base.clone();
    for &(b, m) in layers {
        k.add(Plaquette::positive(b), m);
        k.add(Plaquette::negative(b), m);
    }
    k
}

/// Every balanced `K` with `area(K) ≤ area(K_ℓ) + 2·max_extra` whose layers
/// lie in `window`: `K_ℓ` plus at most `max_extra` symmetric layers.
pub fn balanced_near(l: &Loop, window: Frame, max_extra: u32) -> Vec<PlaquetteAssignment> {
    let base = height_assignment(l);
    let points: Vec<Point> = window.points().collect();
    let mut out = Vec::new();
    let mut chosen: Vec<(Point, u32)> = Vec::new();
    fn rec(
        points: &[Point],
        from: usize,
        left: u32,
        chosen: &mut Vec<(Point, u32)>,
        base: &PlaquetteAssignment,
        out: &mut Vec<PlaquetteAssignment>,
    ) {
        out.push(with_layers(base, chosen));
        for i in from..points.len() {
            for m in 1..=left {
                chosen.push((points[i], m));
                rec(points, i + 1, left - m, chosen, base, out);
                chosen.pop();
            }
        }
    }
    rec(&points, 0, max_extra, &mut chosen, &base, &mut out);
    out
}

/// `K_ℓ` shifted by symmetric layers must vanish off `𝒦_ℓ`.
fn vanishing(config: &SuiteConfig) -> Vec<CaseResult> {
    let p = lp("URDL");
    let rect = lp("URRDLL");
    let corpus = [
        ("p", p.clone()),
        ("p^2", p.wind(2).expect("n > 0")),
        ("rectangle 1x2", rect.clone()),
        ("rectangle 1x2 wound twice", rect.wind(2).expect("n > 0")),
        ("figure-eight", lp("URRULDDL")),
    ];
    let mut cases = Vec::new();
    for (name, l) in &corpus {
        cases.push(case(format!("window sweep: {name}"), || {
            let mut engine = config.engine();
            let window = Frame::around(l, 2);
            let (mut checked, mut canonical_seen) = (0usize, 0usize);
            for k in balanced_near(l, window, 2) {
                let report = engine.vanishing_check(l, &k)?;
                if report.is_canonical {
                    canonical_seen += 1;
                    continue;
                }
                checked += 1;
                if !report.coefficient.is_zero() {
                    return Ok(Err(format!("c = {} for non-canonical K = {k}", report.coefficient)));
                }
            }
            Ok(Ok(format!(
                "{checked} non-canonical assignments vanish ({canonical_seen} canonical skipped)"
            )))
        }));
    }

    let zero = |l: &Loop, k: &PlaquetteAssignment, engine: &mut Engine| -> Result<Result<(), String>, EngineError> {
        let c = engine.coefficient(l, k)?;
        Ok(if c.is_zero() {
            Ok(())
        } else {
            Err(format!("c({l}, {k}) = {c}"))
        })
    };

    cases.push(case("plaquette powers with a layer elsewhere", || {
        let mut engine = config.engine();
        let mut n_checked = 0;
        for base in [p.clone(), p.inverse()] {
            for n in 1..=3 {
                let l = base.wind(n).expect("n > 0");
                let kl = height_assignment(&l);
                for q in [(1, 0), (0, 1), (-1, 0), (0, -1), (1, 1), (-1, -1), (3, 0), (0, 5)] {
                    let k = with_layers(&kl, &[(Point::new(q.0, q.1), 1)]);
                    if let Err(e) = zero(&l, &k, &mut engine)? {
                        return Ok(Err(e));
                    }
                    n_checked += 1;
                }
            }
        }
        Ok(Ok(format!("{n_checked} assignments vanish")))
    }));

    cases.push(case("plaquette powers with extra layers on the plaquette", || {
        let mut engine = config.engine();
        let mut n_checked = 0;
        for base in [p.clone(), p.inverse()] {
            for n in 1..=3 {
                let l = base.wind(n).expect("n > 0");
                let kl = height_assignment(&l);
                for j in 1..=3 {
                    let k = with_layers(&kl, &[(Point::ORIGIN, j)]);
                    if let Err(e) = zero(&l, &k, &mut engine)? {
                        return Ok(Err(e));
                    }
                    n_checked += 1;
                }
            }
        }
        Ok(Ok(format!("{n_checked} assignments vanish")))
    }));

    cases.push(case("wound plaquette with its height assignment", || {
        let mut engine = config.engine();
        for base in [p.clone(), p.inverse()] {
            for n in 2..=4 {
                let l = base.wind(n).expect("n > 0");
                if let Err(e) = zero(&l, &height_assignment(&l), &mut engine)? {
                    return Ok(Err(e));
                }
            }
        }
        let c1 = engine.coefficient(&p, &height_assignment(&p))?;
        Ok(check(c1.is_one(), format!("n = 2..4 vanish, n = 1 gives {c1}")))
    }));

    cases.push(case("two-plaquette rectangle with unequal layers", || {
        let mut engine = config.engine();
        let mut n_checked = 0;
        let (a, b) = (Point::new(0, 0), Point::new(1, 0));
        for base in [rect.clone(), rect.inverse()] {
            for n in 1..=2 {
                let l = base.wind(n).expect("n > 0");
                let kl = height_assignment(&l);
                for (x, y) in [(1, 0), (0, 1), (2, 0), (0, 2), (2, 1), (1, 2)] {
                    let k = with_layers(&kl, &[(a, x), (b, y)]);
                    if let Err(e) = zero(&l, &k, &mut engine)? {
                        return Ok(Err(e));
                    }
                    n_checked += 1;
                }
            }
        }
        Ok(Ok(format!("{n_checked} assignments vanish")))
    }));
    cases
}

/// `(ℓ, K)` pairs for the edge-choice check: every fixture with a catalogue
/// class or no expectation, and seeded random loops.
pub fn edge_pairs(config: &SuiteConfig) -> Vec<(String, Loop, PlaquetteAssignment)> {
    let mut pairs = Vec::new();
    for f in &config.fixtures {
        if f.spec.winding.is_some() {
            continue;
        }
        let collection =
            canonical::canonical_collection_from(&f.loop_, &f.analysis).expect("fixtures are validated at load");
        for (i, k) in collection.into_iter().enumerate() {
            pairs.push((format!("{} K#{i}", f.name()), f.loop_.clone(), k));
        }
    }
    for (i, l) in random_loops(config.seed ^ 0xED6E, 12, 14).into_iter().enumerate() {
        let kl = height_assignment(&l);
        let layered = geometry::analyze(&l)
            .ok()
            .and_then(|a| a.interior().next().map(|r| r.min_base()))
            .map(|b| with_layers(&kl, &[(b, 1)]));
        pairs.push((format!("random #{i} {}", l.moves()), l.clone(), kl));
        if let Some(k) = layered {
            pairs.push((format!("random #{i} {} with a layer", l.moves()), l, k));
        }
    }
    pairs
}

fn edge_independence(config: &SuiteConfig) -> Vec<CaseResult> {
    edge_pairs(config)
        .into_iter()
        .map(|(name, l, k)| {
            case(name, || {
                let reference = config.engine().coefficient(&l, &k)?;
                let mut runs = 0;
                for strategy in Strategy::ALL {
                    if config.engine_with(strategy).coefficient(&l, &k)? != reference {
                        return Ok(Err(format!("strategy {strategy} disagrees")));
                    }
                    for root in 0..l.len() {
                        let c = config.engine_with(strategy).coefficient_at_root(&l, &k, root)?;
                        if c != reference {
                            return Ok(Err(format!(
                                "root {root} under {strategy} gives {c}, expected {reference}"
                            )));
                        }
                        runs += 1;
                    }
                }
                Ok(Ok(format!("c = {reference} over {runs} forced roots")))
            })
        })
        .collect()
}

fn compare_polynomial(f: &Fixture, got: &BetaPolynomial, count: usize) -> Result<String, String> {
    let expected = f.expected.as_ref().expect("caller filters on expectation");
    if got != expected {
        return Err(format!("engine {got}, expected {expected}"));
    }
    if count as u64 != f.collection_size {
        return Err(format!("|K| = {count}, expected {}", f.collection_size));
    }
    Ok(format!("{got} with |K| = {count}"))
}

fn table1_suite(config: &SuiteConfig) -> Vec<CaseResult> {
    config
        .fixtures
        .iter()
        .filter(|f| f.spec.table1.is_some() || f.spec.expected == crate::fixtures::ExpectedSource::Explicit)
        .map(|f| {
            let label = match f.table1_row() {
                Some(row) => format!("row {row} {}", f.name()),
                None => f.name().to_string(),
            };
            case(label, || {
                let report = config.engine().wilson_polynomial(&f.loop_)?;
                Ok(compare_polynomial(f, &report.polynomial, report.per_assignment.len()))
            })
        })
        .collect()
}

fn winding(config: &SuiteConfig) -> Vec<CaseResult> {
    let mut cases: Vec<CaseResult> = config
        .fixtures
        .iter()
        .filter(|f| f.spec.winding.is_some())
        .map(|f| {
            let w = f.spec.winding.expect("filtered");
            case(format!("{} (n = {}, a = {})", f.name(), w.n, w.area), || {
                let mut engine = config.engine();
                let c = engine.coefficient(&f.loop_, &height_assignment(&f.loop_))?;
                let expected = c_n(w.n, w.area);
                if c != expected {
                    return Ok(Err(format!("c = {c}, c_n(a) = {expected}")));
                }
                let report = engine.wilson_polynomial(&f.loop_)?;
                Ok(compare_polynomial(f, &report.polynomial, report.per_assignment.len()))
            })
        })
        .collect();
    // Two distinct shapes per area for every (n, a) on the grid.
    for a in 1..=3u32 {
        for n in 1..=4u32 {
            let shapes: Vec<&str> = config
                .fixtures
                .iter()
                .filter(|f| f.spec.winding.is_some_and(|w| w.n == n && w.area == a))
                .map(|f| f.spec.loop_file.as_str())
                .collect();
            let mut distinct = shapes.clone();
            distinct.sort_unstable();
            distinct.dedup();
            cases.push(case(format!("grid n = {n}, a = {a} covered"), || {
                Ok(check(distinct.len() >= 2, format!("shapes {}", distinct.join(", "))))
            }));
        }
    }
    cases
}

fn series() -> Vec<CaseResult> {
    let mut cases = Vec::new();
    for a in 1..=6 {
        cases.push(case(format!("generating function identity a = {a}"), || {
            let r = series_identity_residual(a, 12);
            Ok(check(r.is_zero(), "residual through order 12".into()))
        }));
    }
    cases.push(case("algebraic recursion n <= 8, a <= 5", || {
        let table = tilde_recursion(5, 8);
        for a in 1..=5usize {
            if !table.c_tilde(0, a).is_one() {
                return Ok(Err(format!("c~_0({a}) != 1")));
            }
            for n in 1..=8usize {
                if *table.c_tilde(n, a) != c_n(n as u32, a as u32) {
                    return Ok(Err(format!("c~_{n}({a}) = {}", table.c_tilde(n, a))));
                }
            }
        }
        Ok(Ok("40 values agree".into()))
    }));
    cases.push(case("winding coefficients are integers, n <= 12, a <= 8", || {
        let bad: Vec<String> = (1..=12u32)
            .flat_map(|n| (1..=8u32).map(move |a| (n, a)))
            .filter(|&(n, a)| !c_n(n, a).is_integer())
            .map(|(n, a)| format!("c_{n}({a})"))
            .collect();
        Ok(check(bad.is_empty(), bad.join(", ")))
    }));
    cases.push(case("triple spiral factor equals c_3(u)", || {
        let bad: Vec<u32> = (1..=10).filter(|&u| !triple_spiral_factor_matches(u)).collect();
        let rows: Vec<String> = table1::all_rows()
            .into_iter()
            .filter(|r| r.has_triple_spiral_factor())
            .map(|r| r.id.to_string())
            .collect();
        Ok(check(bad.is_empty(), format!("rows {}", rows.join(", "))))
    }));
    for n in 1..=2u32 {
        for a in 1..=5u32 {
            cases.push(case(format!("continuum agreement n = {n}, a = {a}"), || {
                let lattice = c_n(n, a).to_f64().unwrap_or(f64::NAN) * (-(f64::from(n * a)) / 2.0).exp();
                let cont = levy_continuum(n, f64::from(a));
                let gap = (lattice - cont).abs();
                Ok(check(gap <= 1e-12, format!("gap {gap:.2e}")))
            }));
        }
    }
    for a in 2..=5u32 {
        cases.push(case(format!("continuum gap n = 3, a = {a}"), || {
            let lattice = c_n(3, a).to_f64().unwrap_or(f64::NAN) * (-(f64::from(3 * a)) / 2.0).exp();
            let cont = levy_continuum(3, f64::from(a));
            let gap = (lattice - cont).abs();
            Ok(check(
                gap > 1e-6,
                format!("lattice {lattice:.6e}, continuum {cont:.6e}, gap {gap:.3e}"),
            ))
        }));
    }
    cases
}

/// Stopping rule for the mass quadrature. The density at `a = 2, β = 1/2`
/// has a cusp at `x = π` where the trapezoid error decays like `N^{−3/2}`,
/// so successive estimates differing by `δ` leave an error near `0.55·δ`.
pub const MASS_TOL: f64 = 5e-9;

/// Series tolerance used when comparing against the closed forms.
pub const SERIES_TOL: f64 = 1e-14;

fn spectrum() -> Vec<CaseResult> {
    let mut cases = Vec::new();
    for a in 1..=3u32 {
        for beta in [0.05, 0.25, 0.5] {
            cases.push(case(format!("a = {a}, beta = {beta}"), || {
                let mut max_diff = 0.0f64;
                let mut min_f = f64::INFINITY;
                for x in spectral::grid(64) {
                    let s = spectral::spectral_density(a, beta, x, DensityMode::Series { tol: SERIES_TOL });
                    let c = spectral::spectral_density(a, beta, x, DensityMode::Closed);
                    let (s, c) = match (s, c) {
                        (Ok(s), Ok(c)) => (s, c),
                        (Err(e), _) | (_, Err(e)) => return Ok(Err(e.to_string())),
                    };
                    max_diff = max_diff.max((s - c).abs());
                    min_f = min_f.min(s.min(c));
                }
                let (mass, points) = match spectral::spectral_mass_converged(a, beta, MASS_TOL, DensityMode::Closed) {
                    Ok(m) => m,
                    Err(e) => return Ok(Err(e.to_string())),
                };
                let detail = format!(
                    "max |series - closed| = {max_diff:.2e}, mass - 1 = {:.2e} ({points} points), min f = {min_f:.4}",
                    mass - 1.0
                );
                Ok(check(
                    max_diff <= 1e-10 && (mass - 1.0).abs() <= 1e-8 && min_f >= -1e-12,
                    detail,
                ))
            }));
        }
    }
    cases.push(case("area 1 closed form", || {
        let worst = spectral::grid(64)
            .map(|x| {
                let c = spectral::density_closed(1, 0.25, x).unwrap_or(f64::NAN);
                (c - (1.0 + 0.5 * x.cos()) / (2.0 * PI)).abs()
            })
            .fold(0.0, f64::max);
        Ok(check(worst <= 1e-15, format!("max deviation {worst:.1e}")))
    }));
    cases.push(case("series refuses beta outside the regime", || {
        let r = spectral::density_series(4, 0.6, 0.0, SERIES_TOL);
        Ok(check(
            matches!(r, Err(spectral::SpectralError::OutOfRegime { .. })),
            format!("{r:?}"),
        ))
    }));
    cases
}

/// Signed crossings of the horizontal ray from the centre of `b` towards
/// `+x`, counted counterclockwise; the negative of the height.
pub fn ray_winding(l: &Loop, b: Point) -> i64 {
    l.edges()
        .iter()
        .filter(|e| e.tail.x == e.head().x && e.tail.x > b.x)
        .filter(|e| e.tail.y.min(e.head().y) == b.y)
        .map(|e| if e.head().y > e.tail.y { 1 } else { -1 })
        .sum()
}

/// Crossing distance to infinity by relaxation to a fixed point, with no
/// priority queue.
pub fn relaxed_distance(l: &Loop, frame: Frame) -> Vec<u64> {
    let mult = l.edge_multiplicities();
    let idx = |p: Point| frame.index(p);
    let mut d: Vec<u64> = frame
        .points()
        .map(|p| if frame.on_boundary(p) { 0 } else { u64::MAX })
        .collect();
    let crossing = |a: Point, b: Point| -> u64 {
        // The unit edge shared by plaquettes a and b.
        let e = if a.y == b.y {
            Edge::new(Point::new(a.x.max(b.x), a.y), Dir::Up)
        } else {
            Edge::new(Point::new(a.x, a.y.max(b.y)), Dir::Right)
        };
        u64::from(mult.unoriented(e))
    };
    let mut changed = true;
    while changed {
        changed = false;
        for p in frame.points() {
            let i = idx(p).expect("in frame");
            for q in [p.offset(1, 0), p.offset(-1, 0), p.offset(0, 1), p.offset(0, -1)] {
                let Some(j) = idx(q) else { continue };
                if d[j] == u64::MAX {
                    continue;
                }
                let cand = d[j] + crossing(p, q);
                if cand < d[i] {
                    d[i] = cand;
                    changed = true;
                }
            }
        }
    }
    d
}

/// Height and distance properties on a seeded corpus of 100 loops.
pub fn geometry_properties(seed: u64) -> Vec<CaseResult> {
    let corpus = random_loops(seed, 100, 16);
    let mut cases = Vec::new();
    let each = |name: &str, f: &dyn Fn(&Loop) -> Result<(), String>| {
        case(name, || {
            for l in &corpus {
                if let Err(e) = f(l) {
                    return Ok(Err(format!("{}: {e}", l.moves())));
                }
            }
            Ok(Ok(format!("{} loops", corpus.len())))
        })
    };
    cases.push(each("sweep order independence", &|l| {
        let a = geometry::height_with_margin(l, 2);
        let b = geometry::height_column_major(l, 2);
        check(a == b, String::new()).map(|_| ())
    }));
    cases.push(each("margin independence", &|l| {
        let a = geometry::analyze_with_margin(l, 2).map_err(|e| e.to_string())?;
        let b = geometry::analyze_with_margin(l, 4).map_err(|e| e.to_string())?;
        for p in b.frame().points() {
            let (h, d) = if a.frame().contains(p) {
                (a.height.get(p), a.distance.get(p))
            } else {
                (0, 0)
            };
            if (h, d) != (b.height.get(p), b.distance.get(p)) {
                return Err(format!("fields differ at {p}"));
            }
        }
        let ra: Vec<_> = a.interior().cloned().collect();
        let rb: Vec<_> = b.interior().cloned().collect();
        check(ra == rb, "interior regions differ".into()).map(|_| ())
    }));
    cases.push(each("height equals ray-casting winding", &|l| {
        let h = geometry::height(l);
        for (p, v) in h.iter() {
            if v != -ray_winding(l, p) {
                return Err(format!("h = {v}, ray count {} at {p}", ray_winding(l, p)));
            }
        }
        Ok(())
    }));
    cases.push(each("distance equals relaxed distance", &|l| {
        let d = geometry::distance(l);
        let oracle = relaxed_distance(l, d.frame());
        for (i, (p, v)) in d.iter().enumerate() {
            if v != oracle[i] {
                return Err(format!("d = {v}, relaxation {} at {p}", oracle[i]));
            }
        }
        Ok(())
    }));
    cases.push(each("h and d constant on regions", &|l| {
        let a = geometry::analyze(l).map_err(|e| e.to_string())?;
        for r in &a.regions {
            for &p in &r.plaquettes {
                if a.height.get(p) != r.h || a.distance.get(p) != r.d {
                    return Err(format!("region of {} not constant at {p}", r.min_base()));
                }
            }
        }
        Ok(())
    }));
    cases.push(each("d = |h| on simple loops", &|l| {
        if !l.is_simple() {
            return Ok(());
        }
        let h = geometry::height(l);
        let d = geometry::distance(l);
        for (p, v) in h.iter() {
            if d.get(p) != v.unsigned_abs() {
                return Err(format!("d != |h| at {p}"));
            }
        }
        Ok(())
    }));
    cases.push(each("d - |h| even and non-negative", &|l| {
        let h = geometry::height(l);
        let d = geometry::distance(l);
        for (p, v) in h.iter() {
            let dv = d.get(p);
            if dv < v.unsigned_abs() || (dv - v.unsigned_abs()) % 2 != 0 {
                return Err(format!("h = {v}, d = {dv} at {p}"));
            }
        }
        Ok(())
    }));
    cases.push(each("balance by edges equals balance by height", &|l| {
        let kl = height_assignment(l);
        let frame = Frame::around(l, 1);
        let mut candidates = vec![kl.clone(), PlaquetteAssignment::new()];
        for p in frame.points() {
            candidates.push(with_layers(&kl, &[(p, 1)]));
            let mut skew = kl.clone();
            skew.add(Plaquette::positive(p), 1);
            candidates.push(skew);
        }
        for k in candidates {
            if geometry::is_balanced(l, &k) != geometry::is_balanced_by_height(l, &k) {
                return Err(format!("disagree on {k}"));
            }
        }
        Ok(())
    }));
    cases
}
