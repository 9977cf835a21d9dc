//! One PASS/FAIL line per acceptance criterion; exits non-zero on any FAIL.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use wilson::fixtures::{self, Fixture};
use wilson::suites::{self, Suite, SuiteConfig, SuiteReport};
use wilson_core::closedform::spectral::{self, DensityMode};
use wilson_core::closedform::{c_n, levy_continuum, series_identity_residual, tilde_recursion};
use wilson_core::{BetaPolynomial, Coefficient, Engine, Loop, Point, Strategy};

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        ok,
        detail: detail.into(),
    }
}

fn lp(moves: &str) -> Loop {
    Loop::from_moves(Point::new(0, 0), moves).expect("closed word")
}

fn phi(l: &Loop) -> BetaPolynomial {
    Engine::new(Strategy::default())
        .wilson_polynomial(l)
        .expect("engine")
        .polynomial
}

fn rectangle(w: usize, h: usize) -> Loop {
    lp(&format!(
        "{}{}{}{}",
        "U".repeat(h),
        "R".repeat(w),
        "D".repeat(h),
        "L".repeat(w)
    ))
}

/// `(−1)^{n+1}/n · C(na−2, n−1)` in machine integers.
fn winding_oracle(n: u32, a: u32) -> Coefficient {
    if a == 1 {
        return Coefficient::from_integer(BigInt::from(u8::from(n == 1)));
    }
    let top = u128::from(n * a - 2);
    let k = u128::from(n - 1);
    let binom = (0..k).fold(1u128, |acc, i| acc * (top - i) / (i + 1));
    let sign: i128 = if n % 2 == 1 { 1 } else { -1 };
    Coefficient::new(BigInt::from(sign * binom as i128), BigInt::from(n))
}

fn suite_verdict(report: &SuiteReport, budget: Duration, min_cases: usize) -> Verdict {
    let failures: Vec<String> = report.failures().map(|c| c.name.clone()).collect();
    let ok = failures.is_empty() && report.cases.len() >= min_cases && report.elapsed < budget;
    verdict(
        ok,
        format!(
            "{} of {} cases in {:.2?} (budget {budget:?}){}",
            report.cases.len() - failures.len(),
            report.cases.len(),
            report.elapsed,
            if failures.is_empty() {
                String::new()
            } else {
                format!("; failed: {}", failures.join(", "))
            }
        ),
    )
}

fn unit_plaquette() -> Verdict {
    let l = lp("URDL");
    let _ = phi(&l);
    let t = Instant::now();
    let p = phi(&l);
    let elapsed = t.elapsed();
    let ok = p == BetaPolynomial::from_int_terms(&[(1, 1)]) && elapsed < Duration::from_millis(10);
    verdict(ok, format!("phi = {p} in {elapsed:.2?}"))
}

fn simple_loops() -> Verdict {
    let mut shapes: Vec<(String, Loop, u32)> = Vec::new();
    for w in 1..=3 {
        for h in 1..=3 {
            shapes.push((format!("{w}x{h}"), rectangle(w, h), (w * h) as u32));
        }
    }
    shapes.push(("L-shape".into(), lp("UURRDLDL"), 3));
    let mut slowest = Duration::ZERO;
    for (name, l, area) in &shapes {
        let t = Instant::now();
        let p = phi(l);
        let elapsed = t.elapsed();
        slowest = slowest.max(elapsed);
        if p != BetaPolynomial::from_int_terms(&[(*area, 1)]) || elapsed >= Duration::from_secs(1) {
            return verdict(false, format!("{name}: phi = {p} in {elapsed:.2?}"));
        }
    }
    verdict(
        true,
        format!("{} simple loops give beta^area, slowest {slowest:.2?}", shapes.len()),
    )
}

fn winding_grid() -> Verdict {
    let shapes: [(&str, u32); 6] = [
        ("URDL", 1),
        ("RDLU", 1),
        ("URRDLL", 2),
        ("UURDDL", 2),
        ("URRRDLLL", 3),
        ("UURRDLDL", 3),
    ];
    let t = Instant::now();
    for (moves, a) in shapes {
        for n in 1..=4u32 {
            let l = lp(moves).wind(n as usize).expect("wind");
            let expected = BetaPolynomial::monomial(n * a, winding_oracle(n, a));
            let got = phi(&l);
            if got != expected {
                return verdict(false, format!("{moves}^{n}: phi = {got}, expected {expected}"));
            }
        }
    }
    let elapsed = t.elapsed();
    verdict(
        elapsed < Duration::from_secs(120),
        format!("n <= 4 over 6 shapes of area <= 3 in {elapsed:.2?}"),
    )
}

/// Expected polynomials for the catalogued fixtures, worked out by hand.
const CATALOGUE: [(&str, &[(u32, i64)]); 13] = [
    ("figure-eight", &[(2, 1)]),
    ("limacon-2-1", &[]),
    ("limacon-2-2", &[(6, -1)]),
    ("limacon-3-2", &[(7, -1)]),
    ("chain-of-three", &[(3, 1)]),
    ("two-inner-loops", &[(9, 1)]),
    ("nested-opposite-1-1-1", &[(3, 1), (5, -1)]),
    ("nested-opposite-1-2-1", &[(5, 1), (7, -2)]),
    ("figure-eight-inner-loop", &[(6, -1)]),
    ("triple-spiral-1-1-2", &[(9, 3)]),
    ("row15-1-1-1-1", &[(5, 2), (7, -2)]),
    ("row15-1-2-1-1", &[(7, 2), (9, -3)]),
    ("three-lobes", &[(4, 2), (6, -1)]),
];

fn table1_fixtures(all: &[Fixture]) -> Verdict {
    let mut slowest = Duration::ZERO;
    for (name, terms) in CATALOGUE {
        let Some(f) = all.iter().find(|f| f.name() == name) else {
            return verdict(false, format!("fixture {name} missing"));
        };
        let expected = BetaPolynomial::from_int_terms(terms);
        if f.expected.as_ref() != Some(&expected) {
            return verdict(false, format!("{name}: catalogue formula disagrees with {expected}"));
        }
        let t = Instant::now();
        let got = phi(&f.loop_);
        let elapsed = t.elapsed();
        slowest = slowest.max(elapsed);
        if got != expected || elapsed >= Duration::from_secs(60) {
            return verdict(false, format!("{name}: phi = {got} in {elapsed:.2?}"));
        }
    }
    let config = SuiteConfig::new(all.to_vec());
    let report = suites::run(Suite::Table1, &config);
    let rows: std::collections::BTreeSet<u32> = all.iter().filter_map(Fixture::table1_row).collect();
    let covered = (1..=8).all(|r| rows.contains(&r));
    let mut v = suite_verdict(&report, Duration::from_secs(60 * report.cases.len() as u64), 15);
    v.ok &= covered;
    v.detail = format!(
        "{}; hand-checked {} fixtures, slowest {slowest:.2?}, rows {rows:?}",
        v.detail,
        CATALOGUE.len()
    );
    v
}

fn series_identity() -> Verdict {
    let t = Instant::now();
    let bad: Vec<u32> = (1..=6)
        .filter(|&a| !series_identity_residual(a, 12).is_zero())
        .collect();
    let elapsed = t.elapsed();
    verdict(
        bad.is_empty() && elapsed < Duration::from_secs(1),
        format!("residual zero through order 12 for a = 1..6 in {elapsed:.2?}"),
    )
}

fn tilde() -> Verdict {
    let t = Instant::now();
    let table = tilde_recursion(6, 10);
    let mismatches = (1..=6usize)
        .flat_map(|a| (1..=10usize).map(move |n| (n, a)))
        .filter(|&(n, a)| {
            let oracle = winding_oracle(n as u32, a as u32);
            *table.c_tilde(n, a) != oracle || c_n(n as u32, a as u32) != oracle
        })
        .count();
    let elapsed = t.elapsed();
    verdict(
        mismatches == 0 && elapsed < Duration::from_secs(1),
        format!("60 values agree with the binomial formula, {mismatches} mismatches, {elapsed:.2?}"),
    )
}

fn spectral_checks() -> Verdict {
    let t = Instant::now();
    let mut worst_diff = 0.0f64;
    let mut worst_mass = 0.0f64;
    let mut min_f = f64::INFINITY;
    for a in 1..=3u32 {
        for beta in [0.05, 0.25, 0.5] {
            for x in spectral::grid(64) {
                let s = spectral::density_series(a, beta, x, suites::SERIES_TOL);
                let c = spectral::density_closed(a, beta, x);
                match (s, c) {
                    (Ok(s), Ok(c)) => {
                        worst_diff = worst_diff.max((s - c).abs());
                        min_f = min_f.min(s.min(c));
                    }
                    (s, c) => return verdict(false, format!("a = {a}, beta = {beta}: {s:?} / {c:?}")),
                }
            }
            match spectral::spectral_mass_converged(a, beta, suites::MASS_TOL, DensityMode::Closed) {
                Ok((m, _)) => worst_mass = worst_mass.max((m - 1.0).abs()),
                Err(e) => return verdict(false, e.to_string()),
            }
        }
    }
    let refused = spectral::density_series(4, 0.6, 0.0, suites::SERIES_TOL).is_err();
    let elapsed = t.elapsed();
    verdict(
        worst_diff <= 1e-10 && worst_mass <= 1e-8 && min_f >= -1e-12 && refused && elapsed < Duration::from_secs(1),
        format!(
            "max |series - closed| = {worst_diff:.1e}, max |mass - 1| = {worst_mass:.1e}, min f = {min_f:.1e}, \
             a = 4 beta = 0.6 refused, {elapsed:.2?}"
        ),
    )
}

fn levy() -> Verdict {
    let mut agree = Vec::new();
    for n in 1..=2u32 {
        for a in 1..=5u32 {
            let lattice = f64::from(n * a) / 2.0;
            let value = num_traits::ToPrimitive::to_f64(&c_n(n, a)).unwrap_or(f64::NAN) * (-lattice).exp();
            agree.push((value - levy_continuum(n, f64::from(a))).abs());
        }
    }
    let gap3 = (2..=5u32)
        .map(|a| {
            let value =
                num_traits::ToPrimitive::to_f64(&c_n(3, a)).unwrap_or(f64::NAN) * (-(f64::from(3 * a)) / 2.0).exp();
            (value - levy_continuum(3, f64::from(a))).abs()
        })
        .fold(f64::INFINITY, f64::min);
    let worst = agree.iter().copied().fold(0.0, f64::max);
    verdict(
        worst <= 1e-12 && gap3 > 1e-6,
        format!("n <= 2 agree to {worst:.1e}; n = 3 differs by at least {gap3:.2e}"),
    )
}

fn main() -> ExitCode {
    let all = fixtures::builtin().expect("built-in fixtures load");
    let config = SuiteConfig::new(all.clone());
    let vanishing = suites::run(Suite::Vanishing, &config);
    let edges = suites::run(Suite::EdgeIndependence, &config);
    let geometry = suites::run(Suite::Geometry, &config);
    let results: [(&str, Verdict); 11] = [
        ("unit plaquette", unit_plaquette()),
        ("simple loops", simple_loops()),
        ("winding grid", winding_grid()),
        ("vanishing", suite_verdict(&vanishing, Duration::from_secs(300), 1)),
        ("edge independence", suite_verdict(&edges, Duration::from_secs(600), 20)),
        ("catalogue", table1_fixtures(&all)),
        ("series identity", series_identity()),
        ("algebraic recursion", tilde()),
        ("spectral density", spectral_checks()),
        ("continuum limit", levy()),
        ("geometry", suite_verdict(&geometry, Duration::from_secs(10), 1)),
    ];
    let mut failed = 0;
    for (i, (name, v)) in results.iter().enumerate() {
        println!(
            "{} {:>2} {name}: {}",
            if v.ok { "PASS" } else { "FAIL" },
            i + 1,
            v.detail
        );
        failed += usize::from(!v.ok);
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
