//! Explicit formulas used as independent checks of the engine.
//!
//! * [`c_n`]: the coefficient of `β^{na}` for a simple loop of area `a`
//!   wound `n` times.
//! * [`tilde_recursion`]: the same numbers from a purely algebraic
//!   recursion.
//! * [`series_identity_residual`]: the functional equation
//!   `C^a − C^{a−1} = t` of their generating function.
//! * [`table1`] and [`spectral`]: catalogued loop expectations and limiting
//!   spectral densities.

pub mod spectral;
pub mod table1;

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::Coefficient;

/// `(−1)^{n+1}/n · C(na−2, n−1)`, and `[n = 1]` when `a = 1`.
pub fn c_n(n: u32, a: u32) -> Coefficient {
    assert!(n >= 1 && a >= 1, "c_n needs n, a ≥ 1");
    if a == 1 {
        return if n == 1 {
            Coefficient::one()
        } else {
            Coefficient::zero()
        };
    }
    let top = BigInt::from(u64::from(n) * u64::from(a) - 2);
    let b = num_integer::binomial(top, BigInt::from(n - 1));
    let sign = if n % 2 == 1 { 1 } else { -1 };
    Coefficient::new(b * sign, BigInt::from(n))
}

/// Truncated power series `Σ_{k≤N} a_k t^k` with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSeries {
    coeffs: Vec<Coefficient>,
}

impl FormalSeries {
    pub fn zero(order: usize) -> Self {
        FormalSeries {
            coeffs: vec![Coefficient::zero(); order + 1],
        }
    }

    pub fn constant(order: usize, c: Coefficient) -> Self {
        let mut s = FormalSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `t`.
    pub fn variable(order: usize) -> Self {
        let mut s = FormalSeries::zero(order);
        if order >= 1 {
            s.coeffs[1] = Coefficient::one();
        }
        s
    }

    /// Coefficients beyond `order` are dropped.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = Coefficient>) -> Self {
        let mut s = FormalSeries::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Coefficient {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn pow(&self, e: u32) -> FormalSeries {
        let mut out = FormalSeries::constant(self.order(), Coefficient::one());
        for _ in 0..e {
            out = &out * self;
        }
        out
    }
}

impl Add for &FormalSeries {
    type Output = FormalSeries;
    fn add(self, rhs: &FormalSeries) -> FormalSeries {
        assert_eq!(self.order(), rhs.order(), "series orders differ");
        FormalSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &FormalSeries {
    type Output = FormalSeries;
    fn sub(self, rhs: &FormalSeries) -> FormalSeries {
        assert_eq!(self.order(), rhs.order(), "series orders differ");
        FormalSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &FormalSeries {
    type Output = FormalSeries;
    fn mul(self, rhs: &FormalSeries) -> FormalSeries {
        assert_eq!(self.order(), rhs.order(), "series orders differ");
        let n = self.order();
        let mut out = FormalSeries::zero(n);
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

/// `C(a,t) = 1 + Σ_{n=1}^{N} c_n(a) tⁿ`.
pub fn winding_series(a: u32, order: usize) -> FormalSeries {
    FormalSeries::from_coeffs(
        order,
        core::iter::once(Coefficient::one()).chain((1..=order as u32).map(|n| c_n(n, a))),
    )
}

/// `C(a,t)^a − C(a,t)^{a−1} − t` truncated at order `N`; the zero series.
pub fn series_identity_residual(a: u32, order: usize) -> FormalSeries {
    let c = winding_series(a, order);
    let lhs = &c.pow(a) - &c.pow(a - 1);
    &lhs - &FormalSeries::variable(order)
}

/// `c̃_{n,m}(b)` for `1 ≤ b ≤ a` and `0 ≤ m ≤ n ≤ n_max`.
#[derive(Clone, Debug)]
pub struct TildeTable {
    n_max: usize,
    // values[b][n][m]; for b = 1 only the diagonal is meaningful.
    values: Vec<Vec<Vec<Coefficient>>>,
}

impl TildeTable {
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn a_max(&self) -> usize {
        self.values.len() - 1
    }

    /// `c̃_n(b)`, with `c̃_0(b) = 1`.
    pub fn c_tilde(&self, n: usize, b: usize) -> &Coefficient {
        &self.values[b][n][n]
    }

    /// `c̃_{n,m}(b)` for `b ≥ 2`.
    pub fn get(&self, n: usize, m: usize, b: usize) -> Option<&Coefficient> {
        if b < 2 || b > self.a_max() || m > n || n > self.n_max {
            return None;
        }
        Some(&self.values[b][n][m])
    }
}

/// Fills the table from `c̃_n(1) = [n=1]`, `c̃_{n,0}(b) = c̃_n(b−1)` and
/// `c̃_{n,m}(b) = c̃_{n,m−1}(b) − Σ_{i=1}^{m−1} c̃_{i,i}(b) c̃_{n−i,m−i}(b)`,
/// closing each row with `c̃_n(b) = c̃_{n,n}(b)`.
pub fn tilde_recursion(a: usize, n_max: usize) -> TildeTable {
    assert!(a >= 1, "area must be positive");
    let mut values: Vec<Vec<Vec<Coefficient>>> = vec![Vec::new()];
    let base: Vec<Vec<Coefficient>> = (0..=n_max)
        .map(|n| {
            let v = match n {
                0 | 1 => Coefficient::one(),
                _ => Coefficient::zero(),
            };
            vec![v; n + 1]
        })
        .collect();
    values.push(base);
    for b in 2..=a {
        let prev = &values[b - 1];
        let mut cur: Vec<Vec<Coefficient>> = Vec::with_capacity(n_max + 1);
        cur.push(vec![Coefficient::one()]);
        for n in 1..=n_max {
            let mut row = vec![Coefficient::zero(); n + 1];
            row[0] = prev[n][n].clone();
            for m in 1..=n {
                let mut v = row[m - 1].clone();
                for i in 1..m {
                    v -= &cur[i][i] * &cur[n - i][m - i];
                }
                row[m] = v;
            }
            cur.push(row);
        }
        values.push(cur);
    }
    TildeTable { n_max, values }
}

/// `(Σ_{k=0}^{n−1} (−α)^k/k! · n^{k−1} · C(n, k+1)) · e^{−nα/2}`.
pub fn levy_continuum(n: u32, alpha: f64) -> f64 {
    let nf = f64::from(n);
    let mut sum = 0.0;
    let mut pow_term = 1.0 / nf; // (−α)^k / k! · n^{k−1}
    let mut binom = nf; // C(n, k+1)
    for k in 0..n {
        sum += pow_term * binom;
        let kf = f64::from(k);
        pow_term *= -alpha * nf / (kf + 1.0);
        binom *= (nf - kf - 1.0) / (kf + 2.0);
    }
    sum * libm::exp(-nf * alpha / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(v: i64) -> Coefficient {
        Coefficient::from_integer(BigInt::from(v))
    }

    #[test]
    fn winding_examples() {
        for a in 1..6 {
            assert_eq!(c_n(1, a), rat(1));
        }
        assert_eq!(c_n(2, 1), rat(0));
        assert_eq!(c_n(2, 3), rat(-2));
        for a in 1..6i64 {
            assert_eq!(
                c_n(3, a as u32),
                Coefficient::new(BigInt::from((3 * a - 3) * (3 * a - 2)), BigInt::from(6))
            );
        }
    }

    #[test]
    fn series_ops() {
        let t = FormalSeries::variable(4);
        let one = FormalSeries::constant(4, rat(1));
        let s = &one + &t;
        let cube = s.pow(3);
        assert_eq!(cube.coeffs(), &[rat(1), rat(3), rat(3), rat(1), rat(0)]);
        assert!(t.pow(5).is_zero());
    }

    #[test]
    fn levy_small_n() {
        let a = 0.7;
        assert!((levy_continuum(1, a) - libm::exp(-a / 2.0)).abs() < 1e-15);
        assert!((levy_continuum(2, a) - (1.0 - a) * libm::exp(-a)).abs() < 1e-15);
    }
}
