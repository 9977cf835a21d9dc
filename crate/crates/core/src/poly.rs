//! Sparse polynomials in `β` with exact rational coefficients.

use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Coefficient = BigRational;

/// `Σ c_k β^k` with no stored zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BetaPolynomial {
    terms: BTreeMap<u32, Coefficient>,
}

impl BetaPolynomial {
    pub fn zero() -> Self {
        BetaPolynomial::default()
    }

    pub fn one() -> Self {
        BetaPolynomial::monomial(0, Coefficient::one())
    }

    pub fn monomial(exp: u32, c: Coefficient) -> Self {
        let mut p = BetaPolynomial::zero();
        p.add_term(exp, c);
        p
    }

    /// Builds from `(exponent, integer coefficient)` pairs, summing repeats.
    pub fn from_int_terms(terms: &[(u32, i64)]) -> Self {
        let mut p = BetaPolynomial::zero();
        for &(e, c) in terms {
            p.add_term(e, Coefficient::from_integer(BigInt::from(c)));
        }
        p
    }

    pub fn add_term(&mut self, exp: u32, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Coefficient::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: u32) -> Coefficient {
        self.terms.get(&exp).cloned().unwrap_or_else(Coefficient::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Coefficient)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &Coefficient) -> BetaPolynomial {
        let mut out = BetaPolynomial::zero();
        for (&e, a) in &self.terms {
            out.add_term(e, a * c);
        }
        out
    }

    /// Multiplies by `β^k`.
    pub fn shift(&self, k: u32) -> BetaPolynomial {
        BetaPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn eval_f64(&self, beta: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&e, c)| c.to_f64().unwrap_or(f64::NAN) * libm::pow(beta, f64::from(e)))
            .sum()
    }
}

impl AddAssign<&BetaPolynomial> for BetaPolynomial {
    fn add_assign(&mut self, rhs: &BetaPolynomial) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl Add for &BetaPolynomial {
    type Output = BetaPolynomial;
    fn add(self, rhs: &BetaPolynomial) -> BetaPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &BetaPolynomial {
    type Output = BetaPolynomial;
    fn neg(self) -> BetaPolynomial {
        BetaPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Sub for &BetaPolynomial {
    type Output = BetaPolynomial;
    fn sub(self, rhs: &BetaPolynomial) -> BetaPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &BetaPolynomial {
    type Output = BetaPolynomial;
    fn mul(self, rhs: &BetaPolynomial) -> BetaPolynomial {
        let mut out = BetaPolynomial::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for BetaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = mag.is_one();
            if !unit || e == 0 {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match e {
                0 => {}
                _ if unit => write!(f, "β^{e}")?,
                _ => write!(f, "·β^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn arithmetic_and_no_zero_terms() {
        let a = BetaPolynomial::from_int_terms(&[(3, 1), (5, -1)]);
        let b = BetaPolynomial::from_int_terms(&[(5, 1)]);
        let s = &a + &b;
        assert_eq!(s, BetaPolynomial::from_int_terms(&[(3, 1)]));
        assert_eq!(s.len(), 1);
        assert!((&a - &a).is_zero());
        let sq = &a * &a;
        assert_eq!(sq, BetaPolynomial::from_int_terms(&[(6, 1), (8, -2), (10, 1)]));
        assert_eq!(a.shift(2).degree(), Some(7));
    }

    #[test]
    fn display() {
        assert_eq!(
            BetaPolynomial::from_int_terms(&[(3, 1), (5, -1)]).to_string(),
            "β^3 - β^5"
        );
        assert_eq!(BetaPolynomial::from_int_terms(&[(9, 3)]).to_string(), "3·β^9");
        assert_eq!(BetaPolynomial::from_int_terms(&[(0, -2)]).to_string(), "-2");
        assert_eq!(BetaPolynomial::zero().to_string(), "0");
        let half = BetaPolynomial::monomial(1, Coefficient::new(1.into(), 2.into()));
        assert_eq!(half.to_string(), "(1/2)·β^1");
    }

    #[test]
    fn evaluation() {
        let p = BetaPolynomial::from_int_terms(&[(1, 1), (2, -1)]);
        assert!((p.eval_f64(0.5) - 0.25).abs() < 1e-15);
    }
}
