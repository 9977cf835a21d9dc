//! Limiting spectral density `f_{a,β}(x) = (1/2π)(1 + 2 Σ_n c_n(a) cos(nx) β^{na})`.
//!
//! Series mode sums the Fourier series directly. Closed mode evaluates the
//! algebraic expressions available for `a ∈ {1, 2, 3}`.

use core::f64::consts::PI;

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum SpectralError {
    #[error("series needs |β| ≤ 1/2 for area {a} (got β = {beta})")]
    OutOfRegime { a: u32, beta: f64 },
    #[error("no closed form for area {0}; only 1, 2 and 3")]
    UnsupportedClosedForm(u32),
    #[error("closed form has imaginary part {0:e}")]
    NonRealClosedForm(f64),
    #[error("area must be positive")]
    ZeroArea,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DensityMode {
    /// Fourier series summed to absolute tolerance `tol`.
    Series {
        tol: f64,
    },
    Closed,
}

/// Largest imaginary residue accepted from the closed form for `a = 3`.
pub const IMAGINARY_TOLERANCE: f64 = 1e-10;

/// Partial sums past this index switch the series to extrapolation.
const DIRECT_LIMIT: usize = 1 << 16;

/// `ρ = (a−1)(a/(a−1))^a |β|^a`, the geometric rate of `|c_n(a) β^{na}|`.
pub fn growth_rate(a: u32, beta: f64) -> f64 {
    if a == 1 {
        return 0.0;
    }
    let af = f64::from(a);
    (af - 1.0) * libm::pow(af / (af - 1.0), af) * libm::pow(beta.abs(), af)
}

/// `c_n(a) β^{na}` for `n = 1, 2, ...`, by the ratio of consecutive terms.
#[derive(Debug, Clone)]
pub struct WindingTerms {
    a: u32,
    beta_a: f64,
    n: u32,
    term: f64,
}

impl WindingTerms {
    pub fn new(a: u32, beta: f64) -> Self {
        WindingTerms {
            a,
            beta_a: libm::pow(beta, f64::from(a)),
            n: 0,
            term: 0.0,
        }
    }
}

impl Iterator for WindingTerms {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        if self.n == 0 {
            self.n = 1;
            self.term = self.beta_a;
            return Some(self.term);
        }
        if self.a == 1 {
            self.n += 1;
            return Some(0.0);
        }
        // c_{n+1}/c_n = −(1/(n+1)) Π_{i=1}^{a}(na−2+i) / Π_{i=2}^{a}(na−n−2+i)
        let n = f64::from(self.n);
        let af = f64::from(self.a);
        let m = n * af - 2.0;
        let mut ratio = -1.0 / (n + 1.0);
        for i in 1..=self.a {
            ratio *= m + f64::from(i);
        }
        for i in 2..=self.a {
            ratio /= m - n + f64::from(i);
        }
        self.term *= ratio * self.beta_a;
        self.n += 1;
        Some(self.term)
    }
}

pub fn spectral_density(a: u32, beta: f64, x: f64, mode: DensityMode) -> Result<f64, SpectralError> {
    match mode {
        DensityMode::Series { tol } => density_series(a, beta, x, tol),
        DensityMode::Closed => density_closed(a, beta, x),
    }
}

/// Series evaluation. Terms are summed until `n^{−3/2} ρ^n / (1−ρ)` drops
/// below `tol`. When that takes more than `2^16` terms (only near `ρ = 1`),
/// smoothly windowed partial sums are extrapolated in powers of `N^{−1/2}`.
pub fn density_series(a: u32, beta: f64, x: f64, tol: f64) -> Result<f64, SpectralError> {
    if a == 0 {
        return Err(SpectralError::ZeroArea);
    }
    if a >= 2 && beta.abs() > 0.5 {
        return Err(SpectralError::OutOfRegime { a, beta });
    }
    if beta == 0.0 {
        return Ok(1.0 / (2.0 * PI));
    }
    let rho = growth_rate(a, beta);
    let needed = if a == 1 {
        Some(1)
    } else {
        (1..=DIRECT_LIMIT).find(|&n| {
            let nf = n as f64;
            rho < 1.0 && libm::pow(nf, -1.5) * libm::pow(rho, nf) / (1.0 - rho) < tol
        })
    };
    let sum = match needed {
        Some(n) => fourier_partial_sums(a, beta, x, n).1,
        None => extrapolated_sum(a, beta, x),
    };
    Ok((1.0 + 2.0 * sum) / (2.0 * PI))
}

/// Partial sums `S_1..=S_N` of `Σ c_n(a) β^{na} cos(nx)`, plus `S_N`.
fn fourier_partial_sums(a: u32, beta: f64, x: f64, n_max: usize) -> (alloc::vec::Vec<f64>, f64) {
    let step = Complex64::new(libm::cos(x), libm::sin(x));
    let mut phase = Complex64::new(1.0, 0.0);
    let mut partial = alloc::vec::Vec::with_capacity(n_max + 1);
    partial.push(0.0);
    let mut s = 0.0;
    for (k, t) in WindingTerms::new(a, beta).take(n_max).enumerate() {
        phase *= step;
        // Re-anchor the rotating phase to bound drift.
        if k % 4096 == 4095 {
            let nx = (k + 1) as f64 * x;
            phase = Complex64::new(libm::cos(nx), libm::sin(nx));
        }
        s += t * phase.re;
        partial.push(s);
    }
    (partial, s)
}

fn extrapolated_sum(a: u32, beta: f64, x: f64) -> f64 {
    const LEVELS: [usize; 5] = [1 << 11, 1 << 12, 1 << 13, 1 << 14, 1 << 15];
    let (partial, _) = fourier_partial_sums(a, beta, x, 2 * LEVELS[LEVELS.len() - 1]);
    let averaged: [f64; 5] = core::array::from_fn(|i| window_average(&partial, LEVELS[i]));
    // Solve S_N ≈ S + Σ_j d_j N^{−(2j+1)/2} for S.
    let mut m = [[0.0f64; 6]; 5];
    for (i, &n) in LEVELS.iter().enumerate() {
        let h = 1.0 / libm::sqrt(n as f64);
        m[i][0] = 1.0;
        for (j, slot) in m[i].iter_mut().enumerate().take(5).skip(1) {
            *slot = libm::pow(h, (2 * j - 1) as f64);
        }
        m[i][5] = averaged[i];
    }
    solve5(m)[0]
}

/// Average of partial sums over `[N, 2N]` with a bump window.
fn window_average(partial: &[f64], n: usize) -> f64 {
    let (mut num, mut den) = (0.0, 0.0);
    for (k, &p) in partial.iter().enumerate().take(2 * n).skip(n + 1) {
        let s = (k - n) as f64 / n as f64;
        let w = libm::exp(-1.0 / (s * (1.0 - s)));
        num += w * p;
        den += w;
    }
    num / den
}

fn solve5(mut m: [[f64; 6]; 5]) -> [f64; 5] {
    for col in 0..5 {
        let pivot = (col..5)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .unwrap_or(col);
        m.swap(col, pivot);
        let p = m[col];
        for (row, r) in m.iter_mut().enumerate() {
            if row != col {
                let f = r[col] / p[col];
                for (dst, src) in r[col..].iter_mut().zip(&p[col..]) {
                    *dst -= f * src;
                }
            }
        }
    }
    core::array::from_fn(|i| m[i][5] / m[i][i])
}

/// Closed forms for `a = 1, 2, 3`.
pub fn density_closed(a: u32, beta: f64, x: f64) -> Result<f64, SpectralError> {
    match a {
        1 => Ok((1.0 + 2.0 * beta * libm::cos(x)) / (2.0 * PI)),
        2 => {
            let b2 = beta * beta;
            let c = libm::cos(x);
            let inner = libm::sqrt(1.0 + 8.0 * b2 * c + 16.0 * b2 * b2);
            Ok(libm::sqrt((1.0 + 4.0 * b2 * c + inner) / 2.0) / (2.0 * PI))
        }
        3 => {
            let z = 1.5 * libm::sqrt(3.0) * libm::pow(beta, 1.5);
            let half = Complex64::new(0.0, x / 2.0);
            let arm = |w: Complex64| ((w * z).asinh() * (2.0 / 3.0)).cosh() * 2.0;
            let v = Complex64::new(-1.0, 0.0) + arm((-half).exp()) + arm(half.exp());
            let v = v / (6.0 * PI);
            if v.im.abs() > IMAGINARY_TOLERANCE {
                return Err(SpectralError::NonRealClosedForm(v.im));
            }
            Ok(v.re)
        }
        _ => Err(SpectralError::UnsupportedClosedForm(a)),
    }
}

/// Trapezoid rule for `∫₀^{2π} f_{a,β}`; exact up to aliasing for periodic
/// integrands.
pub fn spectral_mass(a: u32, beta: f64, points: usize, mode: DensityMode) -> Result<f64, SpectralError> {
    let h = 2.0 * PI / points as f64;
    let mut sum = 0.0;
    for k in 0..points {
        sum += spectral_density(a, beta, k as f64 * h, mode)?;
    }
    Ok(sum * h)
}

/// Trapezoid mass with the point count doubled from 256 until successive
/// estimates differ by at most `tol`, up to `2^22` points. Returns the mass
/// and the final point count.
pub fn spectral_mass_converged(a: u32, beta: f64, tol: f64, mode: DensityMode) -> Result<(f64, usize), SpectralError> {
    let mut points = 256;
    let mut prev = spectral_mass(a, beta, points, mode)?;
    while points < 1 << 22 {
        points *= 2;
        let next = spectral_mass(a, beta, points, mode)?;
        if (next - prev).abs() <= tol {
            return Ok((next, points));
        }
        prev = next;
    }
    Ok((prev, points))
}

/// `x_k = 2πk/points` for `k = 0..points`.
pub fn grid(points: usize) -> impl Iterator<Item = f64> {
    (0..points).map(move |k| 2.0 * PI * k as f64 / points as f64)
}
