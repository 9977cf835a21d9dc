//! Finite-support plaquette assignments `K : P → Z≥0`.

use alloc::vec::Vec;
use core::fmt;

use crate::lattice::{Plaquette, Point};

/// A finitely supported map from oriented plaquettes to nonnegative integers.
///
/// Entries are kept sorted by plaquette with no zero values, so equality and
/// hashing are structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaquetteAssignment {
    entries: Vec<(Plaquette, u32)>,
    area: u64,
}

impl PlaquetteAssignment {
    pub const fn new() -> Self {
        PlaquetteAssignment {
            entries: Vec::new(),
            area: 0,
        }
    }

    /// `area(K) = Σ_p K(p)` over both orientations.
    pub fn area(&self) -> u64 {
        self.area
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of plaquettes with a nonzero value.
    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, p: Plaquette) -> u32 {
        match self.entries.binary_search_by(|(q, _)| q.cmp(&p)) {
            Ok(i) => self.entries[i].1,
            Err(_) => 0,
        }
    }

    pub fn set(&mut self, p: Plaquette, value: u32) {
        match self.entries.binary_search_by(|(q, _)| q.cmp(&p)) {
            Ok(i) => {
                self.area -= u64::from(self.entries[i].1);
                if value == 0 {
                    self.entries.remove(i);
                } else {
                    self.entries[i].1 = value;
                }
            }
            Err(i) if value > 0 => self.entries.insert(i, (p, value)),
            Err(_) => return,
        }
        self.area += u64::from(value);
    }

    pub fn add(&mut self, p: Plaquette, amount: u32) {
        let v = self.get(p);
        self.set(p, v + amount);
    }

    /// `K ∖ p`: the assignment with one fewer unit on `p`. `None` if `K(p) = 0`.
    pub fn without_one(&self, p: Plaquette) -> Option<PlaquetteAssignment> {
        let i = self.entries.binary_search_by(|(q, _)| q.cmp(&p)).ok()?;
        let mut out = self.clone();
        if out.entries[i].1 == 1 {
            out.entries.remove(i);
        } else {
            out.entries[i].1 -= 1;
        }
        out.area -= 1;
        Some(out)
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = (Plaquette, u32)> + '_ {
        self.entries.iter().copied()
    }

    pub fn translated(&self, v: Point) -> PlaquetteAssignment {
        PlaquetteAssignment {
            entries: self.entries.iter().map(|&(p, c)| (p.translated(v), c)).collect(),
            area: self.area,
        }
    }

    /// Pointwise sum.
    pub fn plus(&self, other: &PlaquetteAssignment) -> PlaquetteAssignment {
        let mut out = self.clone();
        for (p, c) in other.iter() {
            out.add(p, c);
        }
        out
    }

    /// Pointwise difference, if `other ≤ self` everywhere.
    pub fn minus(&self, other: &PlaquetteAssignment) -> Option<PlaquetteAssignment> {
        let mut out = self.clone();
        for (p, c) in other.iter() {
            let have = out.get(p);
            if have < c {
                return None;
            }
            out.set(p, have - c);
        }
        Some(out)
    }

    /// Distinct lower-left corners of supported plaquettes, sorted.
    pub fn support_bases(&self) -> Vec<Point> {
        let mut bases: Vec<Point> = self.entries.iter().map(|(p, _)| p.base).collect();
        bases.dedup();
        bases
    }

    pub(crate) fn from_sorted_unchecked(entries: Vec<(Plaquette, u32)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|&(_, c)| c > 0));
        let area = entries.iter().map(|&(_, c)| u64::from(c)).sum();
        PlaquetteAssignment { entries, area }
    }
}

/// Collects `(plaquette, count)` pairs, summing repeated plaquettes.
impl FromIterator<(Plaquette, u32)> for PlaquetteAssignment {
    fn from_iter<I: IntoIterator<Item = (Plaquette, u32)>>(iter: I) -> Self {
        let mut entries: Vec<(Plaquette, u32)> = iter.into_iter().filter(|&(_, c)| c > 0).collect();
        entries.sort_unstable_by_key(|e| e.0);
        let mut merged: Vec<(Plaquette, u32)> = Vec::with_capacity(entries.len());
        for (p, c) in entries {
            match merged.last_mut() {
                Some((q, d)) if *q == p => *d += c,
                _ => merged.push((p, c)),
            }
        }
        PlaquetteAssignment::from_sorted_unchecked(merged)
    }
}

impl fmt::Display for PlaquetteAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}·{p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_area() {
        let p = Plaquette::positive(Point::new(0, 0));
        let mut k = PlaquetteAssignment::new();
        assert!(k.is_zero());
        k.set(p, 3);
        k.add(p.inverse(), 2);
        assert_eq!(k.get(p), 3);
        assert_eq!(k.area(), 5);
        k.set(p, 0);
        assert_eq!(k.area(), 2);
        assert_eq!(k.support_len(), 1);
        let k2 = k.without_one(p.inverse()).unwrap();
        assert_eq!(k2.get(p.inverse()), 1);
        assert!(k2.without_one(p).is_none());
        assert!(k2.without_one(p.inverse()).unwrap().is_zero());
    }

    #[test]
    fn collect_merges_duplicates() {
        let p = Plaquette::negative(Point::new(1, 2));
        let q = Plaquette::positive(Point::new(-1, 0));
        let k: PlaquetteAssignment = [(p, 1), (q, 2), (p, 4), (q, 0)].into_iter().collect();
        assert_eq!(k.get(p), 5);
        assert_eq!(k.get(q), 2);
        assert_eq!(k.area(), 7);
        assert_eq!(k.minus(&k), Some(PlaquetteAssignment::new()));
        assert_eq!(k.plus(&k).area(), 14);
    }
}
