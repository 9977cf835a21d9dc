//! Wilson loop expectations for the 28 loop classes with at most three
//! self-crossings, as polynomials in `β` parametrized by region areas.
//!
//! Rows are numbered 1 to 28 in catalogue order. Area names follow the
//! region labels: `s`, `s1`, ... for regions of height one, `t`, `t1`, ...
//! for height two, `u`, `u1`, ... for height three and `v` for height four.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use super::c_n;
use crate::poly::{BetaPolynomial, Coefficient};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Table1Error {
    #[error("no catalogue row {0}")]
    UnknownClass(u32),
    #[error("row {row} needs area {name}")]
    MissingArea { row: u32, name: &'static str },
    #[error("area {name} must be a positive integer")]
    NonPositiveArea { name: String },
    #[error("row {row} has no area named {name}")]
    UnexpectedArea { row: u32, name: String },
}

type Eval = fn(&Areas) -> BetaPolynomial;

#[derive(Clone, Copy)]
pub struct Table1Row {
    pub id: u32,
    pub slug: &'static str,
    pub params: &'static [&'static str],
    /// `#𝒦_ℓ` for every loop of the class.
    pub canonical_count: u32,
    eval: Eval,
}

impl core::fmt::Debug for Table1Row {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Table1Row")
            .field("id", &self.id)
            .field("slug", &self.slug)
            .field("params", &self.params)
            .field("canonical_count", &self.canonical_count)
            .finish()
    }
}

/// Named positive areas for one evaluation.
#[derive(Debug, Clone, Default)]
pub struct Areas {
    values: BTreeMap<&'static str, i64>,
}

impl Areas {
    fn q(&self, name: &str) -> Coefficient {
        Coefficient::from_integer(BigInt::from(self.values[name]))
    }

    fn e(&self, name: &str) -> i64 {
        self.values[name]
    }
}

fn int(v: i64) -> Coefficient {
    Coefficient::from_integer(BigInt::from(v))
}

fn frac(n: i64, d: i64) -> Coefficient {
    Coefficient::new(BigInt::from(n), BigInt::from(d))
}

fn b(exp: i64) -> BetaPolynomial {
    BetaPolynomial::monomial(u32::try_from(exp).expect("positive areas"), Coefficient::one())
}

fn k(c: Coefficient) -> BetaPolynomial {
    BetaPolynomial::monomial(0, c)
}

/// `⅙(3u−3)(3u−2)` for a rational `u`.
fn sixth(u: &Coefficient) -> Coefficient {
    let three = int(3);
    (&three * u - int(3)) * (&three * u - int(2)) / int(6)
}

fn one_minus(x: Coefficient) -> Coefficient {
    int(1) - x
}

macro_rules! row {
    ($id:expr, $slug:expr, [$($p:expr),*], $count:expr, $f:expr) => {
        Table1Row { id: $id, slug: $slug, params: &[$($p),*], canonical_count: $count, eval: $f }
    };
}

pub static TABLE1: [Table1Row; 28] = [
    row!(1, "simple", ["s"], 1, |a| b(a.e("s"))),
    row!(2, "figure-eight", ["s1", "s2"], 1, |a| b(a.e("s1") + a.e("s2"))),
    row!(3, "limacon", ["s", "t"], 1, |a| {
        b(a.e("s") + 2 * a.e("t")).scale(&one_minus(a.q("t")))
    }),
    row!(4, "chain-of-three", ["s1", "s2", "s3"], 1, |a| {
        b(a.e("s1") + a.e("s2") + a.e("s3"))
    }),
    row!(5, "two-inner-loops", ["s", "t1", "t2"], 1, |a| {
        let c = one_minus(a.q("t1")) * one_minus(a.q("t2"));
        b(a.e("s") + 2 * a.e("t1") + 2 * a.e("t2")).scale(&c)
    }),
    row!(6, "nested-inner-loop-opposite", ["s", "t1", "t2"], 2, |a| {
        let inner = &k(int(1)) - &b(2 * a.e("t2")).scale(&a.q("t1"));
        inner.shift((a.e("s") + 2 * a.e("t1")) as u32)
    }),
    row!(7, "figure-eight-with-inner-loop", ["s1", "s2", "t"], 1, |a| {
        b(a.e("s1") + a.e("s2") + 2 * a.e("t")).scale(&one_minus(a.q("t")))
    }),
    row!(8, "triple-spiral", ["s", "t", "u"], 1, |a| {
        let u = a.q("u");
        let c = sixth(&u) - a.q("t") * one_minus(u);
        b(a.e("s") + 2 * a.e("t") + 3 * a.e("u")).scale(&c)
    }),
    row!(9, "chain-of-four", ["s1", "s2", "s3", "s4"], 1, |a| {
        b(a.e("s1") + a.e("s2") + a.e("s3") + a.e("s4"))
    }),
    row!(10, "triple-spiral-with-inner-loop", ["s", "t1", "t2", "u"], 1, |a| {
        let u = a.q("u");
        let c = one_minus(a.q("t2")) * (sixth(&u) - a.q("t1") * one_minus(u));
        b(a.e("s") + 2 * a.e("t1") + 2 * a.e("t2") + 3 * a.e("u")).scale(&c)
    }),
    row!(11, "row-11", ["s", "t1", "t2", "u"], 4, |a| {
        let c = a.q("t1") * one_minus(a.q("u"));
        let inner = &k(int(1)) - &b(2 * a.e("t2") + 2 * a.e("u")).scale(&c);
        inner.shift((a.e("s") + 2 * a.e("t1") + a.e("u")) as u32)
    }),
    row!(12, "triple-spiral-with-lobe", ["s1", "s2", "t", "u"], 1, |a| {
        let u = a.q("u");
        let c = sixth(&u) - a.q("t") * one_minus(u);
        b(a.e("s1") + a.e("s2") + 2 * a.e("t") + 3 * a.e("u")).scale(&c)
    }),
    row!(13, "quadruple-spiral", ["s", "t", "u", "v"], 1, |a| {
        let (t, u, v) = (a.q("t"), a.q("u"), a.q("v"));
        let uu = &u * &u;
        let vv = &v * &v;
        let c = int(1) - frac(5, 2) * &u + frac(3, 2) * &uu - frac(13, 3) * &v + frac(13, 2) * &u * &v
            - frac(3, 2) * &uu * &v
            + int(6) * &vv
            - int(4) * &u * &vv
            - frac(8, 3) * &vv * &v
            - t * (sixth(&v) - &u * one_minus(v.clone()));
        b(a.e("s") + 2 * a.e("t") + 3 * a.e("u") + 4 * a.e("v")).scale(&c)
    }),
    row!(14, "figure-eight-two-inner-loops", ["s1", "s2", "t1", "t2"], 1, |a| {
        let c = one_minus(a.q("t1")) * one_minus(a.q("t2"));
        b(a.e("s1") + a.e("s2") + 2 * a.e("t1") + 2 * a.e("t2")).scale(&c)
    }),
    row!(15, "row-15", ["s", "t1", "t2", "t3"], 4, |a| {
        let (t2, t3) = (a.e("t2"), a.e("t3"));
        let mut inner = &b(2 * t2) + &b(2 * t3);
        inner = &inner - &b(2 * t2 + 2 * t3).scale(&(int(1) + a.q("t1")));
        inner.shift((a.e("s") + 2 * a.e("t1")) as u32)
    }),
    row!(16, "chain-of-four-branched", ["s1", "s2", "s3", "s4"], 1, |a| {
        b(a.e("s1") + a.e("s2") + a.e("s3") + a.e("s4"))
    }),
    row!(17, "row-17", ["s1", "s2", "s3", "t"], 1, |a| {
        b(a.e("s1") + a.e("s2") + a.e("s3")).scale(&one_minus(a.q("t")))
    }),
    row!(18, "row-18", ["s1", "s2", "t1", "t2"], 1, |a| {
        let c = one_minus(a.q("t1")) * one_minus(a.q("t2"));
        b(a.e("s1") + a.e("s2") + 2 * a.e("t1") + 2 * a.e("t2")).scale(&c)
    }),
    row!(19, "three-inner-loops", ["s", "t1", "t2", "t3"], 1, |a| {
        let c = one_minus(a.q("t1")) * one_minus(a.q("t2")) * one_minus(a.q("t3"));
        b(a.e("s") + 2 * (a.e("t1") + a.e("t2") + a.e("t3"))).scale(&c)
    }),
    row!(20, "row-20", ["s1", "s2", "t1", "t2"], 2, |a| {
        let inner = &k(int(1)) - &b(2 * a.e("t2")).scale(&a.q("t1"));
        inner.shift((a.e("s1") + a.e("s2") + 2 * a.e("t1")) as u32)
    }),
    row!(21, "row-21", ["s1", "s2", "s3", "t"], 1, |a| {
        b(a.e("s1") + a.e("s2") + a.e("s3") + 2 * a.e("t")).scale(&one_minus(a.q("t")))
    }),
    row!(22, "row-22", ["s", "t1", "t2", "t3"], 2, |a| {
        let inner = &k(int(1)) - &b(2 * a.e("t2")).scale(&a.q("t1"));
        inner
            .scale(&one_minus(a.q("t3")))
            .shift((a.e("s") + 2 * a.e("t1") + 2 * a.e("t3")) as u32)
    }),
    row!(23, "row-23", ["s", "t1", "t2", "t3"], 2, |a| {
        let inner = &k(one_minus(a.q("t3"))) - &b(2 * a.e("t2")).scale(&a.q("t1"));
        inner.shift((a.e("s") + 2 * a.e("t1") + 2 * a.e("t3")) as u32)
    }),
    row!(24, "row-24", ["s", "t1", "t2", "u"], 2, |a| {
        let u = a.q("u");
        let c = sixth(&u) - (int(1) + a.q("t1")) * one_minus(u.clone());
        let inner = &k(one_minus(u)) + &b(2 * a.e("t2")).scale(&c);
        inner.shift((a.e("s") + 2 * a.e("t1") + 3 * a.e("u")) as u32)
    }),
    row!(25, "row-25", ["s", "t", "u1", "u2"], 1, |a| {
        let (u1, u2) = (a.q("u1"), a.q("u2"));
        let sum = &u1 + &u2;
        let c = sixth(&sum) - a.q("t") * one_minus(u1.clone()) * one_minus(u2.clone())
            + &u1 * &u2 * (int(1) - frac(3, 2) * &sum);
        b(a.e("s") + 2 * a.e("t") + 3 * a.e("u1") + 3 * a.e("u2")).scale(&c)
    }),
    row!(26, "row-26", ["s", "t", "u1", "u2"], 2, |a| {
        let (t, u1, u2) = (a.q("t"), a.q("u1"), a.q("u2"));
        let lead = int(1) - int(2) * &u1 - &t;
        let c = &u1 * (t + u2 - frac(1, 2)) + frac(3, 2) * &u1 * &u1;
        let inner = &k(lead) + &b(2 * a.e("u2")).scale(&c);
        inner.shift((a.e("s") + 2 * a.e("t") + 3 * a.e("u1") + 3 * a.e("u2")) as u32)
    }),
    row!(27, "row-27", ["s1", "s2", "s3", "t"], 1, |a| {
        b(a.e("s1") + a.e("s2") + a.e("s3") + 2 * a.e("t")).scale(&one_minus(a.q("t")))
    }),
    row!(28, "three-lobes", ["s1", "s2", "t1", "t2"], 4, |a| {
        let (t1, t2) = (a.e("t1"), a.e("t2"));
        let inner = &(&b(2 * t1) + &b(2 * t2)) - &b(2 * t1 + 2 * t2);
        inner.shift((a.e("s1") + a.e("s2")) as u32)
    }),
];

pub fn row(id: u32) -> Result<&'static Table1Row, Table1Error> {
    TABLE1.iter().find(|r| r.id == id).ok_or(Table1Error::UnknownClass(id))
}

impl Table1Row {
    /// Evaluates the row at the given areas. Every parameter of the row must
    /// be present and positive; no others are accepted.
    pub fn evaluate(&self, areas: &[(&str, i64)]) -> Result<BetaPolynomial, Table1Error> {
        let mut values = BTreeMap::new();
        for &(name, v) in areas {
            let Some(&key) = self.params.iter().find(|&&p| p == name) else {
                return Err(Table1Error::UnexpectedArea {
                    row: self.id,
                    name: name.into(),
                });
            };
            if v < 1 {
                return Err(Table1Error::NonPositiveArea { name: name.into() });
            }
            values.insert(key, v);
        }
        if let Some(&missing) = self.params.iter().find(|p| !values.contains_key(*p)) {
            return Err(Table1Error::MissingArea {
                row: self.id,
                name: missing,
            });
        }
        Ok((self.eval)(&Areas { values }))
    }

    /// Whether the coefficient contains the factor `⅙(3u−3)(3u−2) = c_3(u)`.
    pub fn has_triple_spiral_factor(&self) -> bool {
        matches!(self.id, 8 | 10 | 12 | 13 | 24 | 25)
    }
}

/// Evaluates catalogue row `id`.
pub fn table1_polynomial(id: u32, areas: &[(&str, i64)]) -> Result<BetaPolynomial, Table1Error> {
    row(id)?.evaluate(areas)
}

/// `⅙(3u−3)(3u−2)` agrees with `c_3(u)`.
pub fn triple_spiral_factor_matches(u: u32) -> bool {
    sixth(&int(i64::from(u))) == c_n(3, u)
}

pub fn all_rows() -> Vec<&'static Table1Row> {
    TABLE1.iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(
            table1_polynomial(1, &[("s", 6)]).unwrap(),
            BetaPolynomial::from_int_terms(&[(6, 1)])
        );
        assert_eq!(
            table1_polynomial(3, &[("s", 2), ("t", 2)]).unwrap(),
            BetaPolynomial::from_int_terms(&[(6, -1)])
        );
        assert_eq!(
            table1_polynomial(6, &[("s", 1), ("t1", 1), ("t2", 1)]).unwrap(),
            BetaPolynomial::from_int_terms(&[(3, 1), (5, -1)])
        );
        assert_eq!(
            table1_polynomial(8, &[("s", 1), ("t", 1), ("u", 2)]).unwrap(),
            BetaPolynomial::from_int_terms(&[(9, 3)])
        );
    }

    #[test]
    fn errors() {
        assert_eq!(table1_polynomial(29, &[]), Err(Table1Error::UnknownClass(29)));
        assert!(matches!(
            table1_polynomial(3, &[("s", 2)]),
            Err(Table1Error::MissingArea { name: "t", .. })
        ));
        assert!(matches!(
            table1_polynomial(1, &[("s", 0)]),
            Err(Table1Error::NonPositiveArea { .. })
        ));
        assert!(matches!(
            table1_polynomial(1, &[("s", 1), ("q", 1)]),
            Err(Table1Error::UnexpectedArea { .. })
        ));
    }

    #[test]
    fn every_row_has_integer_coefficients() {
        for r in &TABLE1 {
            for base in 1..=3i64 {
                let areas: Vec<(&str, i64)> = r
                    .params
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| (p, base + i as i64 % 2))
                    .collect();
                let p = r.evaluate(&areas).unwrap();
                assert!(p.has_integer_coefficients(), "row {} at {areas:?}: {p}", r.id);
            }
        }
    }

    #[test]
    fn triple_spiral_factor() {
        for u in 1..10 {
            assert!(triple_spiral_factor_matches(u));
        }
    }
}
