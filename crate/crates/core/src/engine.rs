//! Memoized evaluation of `c(ℓ, K)` by the coefficient master loop equation.
//!
//! At a chosen copy `e` of an edge of `ℓ`,
//!
//! ```text
//! c(ℓ, K) = Σ_{S−} Σ_{K₁+K₂=K} c(ℓ₁,K₁) c(ℓ₂,K₂) − Σ_{S+} Σ_{K₁+K₂=K} c(ℓ₁,K₁) c(ℓ₂,K₂)
//!         + Σ_{p ∈ P(e⁻¹,K)} c(ℓ ⊖ p, K∖p) − Σ_{q ∈ P(e,K)} c(ℓ ⊕ q, K∖q)
//! ```
//!
//! with base cases `c(∅, 0) = 1`, `c(∅, K≠0) = 0`, `c(ℓ≠∅, 0) = 0`, and
//! `c = 0` whenever `(ℓ, K)` is unbalanced. Every child has a smaller
//! `(area(K), |ℓ|)` in lexicographic order, so the recursion terminates.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use hashbrown::HashMap;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::assignment::PlaquetteAssignment;
use crate::canonical::{self, CanonicalError};
use crate::geometry::{is_balanced_by_height, sparse_height};
use crate::lattice::{
    canonical_key_with, plaquettes_containing, reduce_word, CanonicalKey, Dir, Edge, KeySymmetry, Loop, Plaquette,
    Point,
};
use crate::poly::{BetaPolynomial, Coefficient};

/// Rule for picking the edge copy at which the master loop equation is
/// applied. The value of `c(ℓ, K)` does not depend on it.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// The first edge of the least rotation of the word.
    First,
    /// An edge copy whose straight dual ray to infinity crosses the fewest
    /// loop edges.
    #[default]
    Boundary,
    /// An edge copy with the fewest splittings plus deformations.
    MinBranch,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::First, Strategy::Boundary, Strategy::MinBranch];

    pub const fn name(self) -> &'static str {
        match self {
            Strategy::First => "first",
            Strategy::Boundary => "boundary",
            Strategy::MinBranch => "min_branch",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = UnknownStrategy;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "first" => Ok(Strategy::First),
            "boundary" => Ok(Strategy::Boundary),
            "min_branch" | "min-branch" => Ok(Strategy::MinBranch),
            _ => Err(UnknownStrategy),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("unknown strategy; expected first, boundary or min_branch")]
pub struct UnknownStrategy;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("memo table reached its limit of {limit} entries")]
    MemoLimit { limit: usize },
    #[error("memo entry recomputed with a different value")]
    MemoConflict,
    #[error("root index {index} is out of range for a word of length {len}")]
    InvalidRoot { index: usize, len: usize },
    #[error(transparent)]
    Canonical(#[from] CanonicalError),
}

/// A stored coefficient disagreed with a recomputed one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("conflicting memo insert")]
pub struct MemoConflict;

/// Cache from canonical keys to coefficients.
///
/// Inserting an existing key is allowed only with the identical value.
pub trait MemoStore {
    fn get(&self, key: &CanonicalKey) -> Option<Coefficient>;
    fn insert(&mut self, key: CanonicalKey, value: Coefficient) -> Result<(), MemoConflict>;
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Default, Clone)]
pub struct LocalMemo {
    map: HashMap<CanonicalKey, Coefficient>,
}

impl LocalMemo {
    pub fn new() -> Self {
        LocalMemo::default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalKey, &Coefficient)> {
        self.map.iter()
    }
}

impl MemoStore for LocalMemo {
    fn get(&self, key: &CanonicalKey) -> Option<Coefficient> {
        self.map.get(key).cloned()
    }

    fn insert(&mut self, key: CanonicalKey, value: Coefficient) -> Result<(), MemoConflict> {
        match self.map.get(&key) {
            Some(old) if *old != value => Err(MemoConflict),
            Some(_) => Ok(()),
            None => {
                self.map.insert(key, value);
                Ok(())
            }
        }
    }

    fn len(&self) -> usize {
        self.map.len()
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum OperationSign {
    Positive,
    Negative,
}

/// One splitting of `ℓ` at the selected copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitResult {
    pub loops: [Loop; 2],
    pub sign: OperationSign,
    /// Index in `ℓ` of the partner copy `e′` (positive) or `e⁻¹` (negative).
    pub partner: usize,
}

/// One deformation of `ℓ` with a plaquette at the selected copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformResult {
    pub result: Loop,
    pub plaquette: Plaquette,
    pub sign: OperationSign,
}

fn rotated_word(l: &Loop, at: usize) -> Vec<Edge> {
    l.rotated(at).edges().to_vec()
}

fn concat(parts: &[&[Edge]]) -> Loop {
    Loop::from_edges_unchecked(parts.concat())
}

/// All positive and negative splittings of `ℓ` at `ℓ[at]`, one per partner
/// copy. Backtracks are kept.
pub fn enumerate_splittings(l: &Loop, at: usize) -> Vec<SplitResult> {
    let n = l.len();
    if at >= n {
        return Vec::new();
    }
    let w = rotated_word(l, at);
    let e = w[0];
    let mut out = Vec::new();
    for j in 1..n {
        let partner = (at + j) % n;
        if w[j] == e {
            out.push(SplitResult {
                loops: [concat(&[&[e], &w[j + 1..]]), concat(&[&w[1..=j]])],
                sign: OperationSign::Positive,
                partner,
            });
        } else if w[j] == e.inverse() {
            out.push(SplitResult {
                loops: [concat(&[&w[j + 1..]]), concat(&[&w[1..j]])],
                sign: OperationSign::Negative,
                partner,
            });
        }
    }
    out
}

/// All deformations of `ℓ` at `ℓ[at]` with plaquettes `p` having `K(p) ≥ 1`.
pub fn enumerate_deformations(l: &Loop, at: usize, k: &PlaquetteAssignment) -> Vec<DeformResult> {
    if at >= l.len() {
        return Vec::new();
    }
    let w = rotated_word(l, at);
    let e = w[0];
    let mut out = Vec::new();
    for p in plaquettes_containing(e.inverse()) {
        if k.get(p) > 0 {
            let pw = p.word_from(e.inverse()).expect("p contains e⁻¹");
            out.push(DeformResult {
                result: concat(&[&pw[1..], &w[1..]]),
                plaquette: p,
                sign: OperationSign::Negative,
            });
        }
    }
    for q in plaquettes_containing(e) {
        if k.get(q) > 0 {
            let qw = q.word_from(e).expect("q contains e");
            out.push(DeformResult {
                result: concat(&[&[e], &qw[1..], &[e], &w[1..]]),
                plaquette: q,
                sign: OperationSign::Positive,
            });
        }
    }
    out
}

/// All `K₁ + K₂ = K` with `(ℓ₁, K₁)` and `(ℓ₂, K₂)` both balanced.
///
/// Balance of `(ℓᵢ, Kᵢ)` pins `Kᵢ(p⁻¹) − Kᵢ(p)` to the height of `ℓᵢ` at `p`,
/// so the choices are independent per plaquette square: `K₁(p) = j` and
/// `K₁(p⁻¹) = j + h₁(p)` for every admissible `j`.
pub fn balanced_decompositions(
    l1: &Loop,
    l2: &Loop,
    k: &PlaquetteAssignment,
) -> Vec<(PlaquetteAssignment, PlaquetteAssignment)> {
    let h1 = sparse_height(l1);
    let h2 = sparse_height(l2);
    let mut bases: Vec<Point> = k.support_bases();
    bases.extend(h1.iter().map(|&(b, _)| b));
    bases.extend(h2.iter().map(|&(b, _)| b));
    bases.sort_unstable();
    bases.dedup();
    let lookup = |h: &[(Point, i64)], b: Point| h.binary_search_by(|(q, _)| q.cmp(&b)).map(|i| h[i].1).unwrap_or(0);
    // Per base: (base, h₁, K(p), K(p⁻¹), lo, hi) with j ∈ lo..=hi.
    let mut slots = Vec::with_capacity(bases.len());
    for b in bases {
        let pos = i64::from(k.get(Plaquette::positive(b)));
        let neg = i64::from(k.get(Plaquette::negative(b)));
        let a = lookup(&h1, b);
        if a + lookup(&h2, b) != neg - pos {
            return Vec::new();
        }
        let lo = 0.max(-a);
        let hi = pos.min(neg - a);
        if lo > hi {
            return Vec::new();
        }
        slots.push((b, a, pos, neg, lo, hi));
    }
    let mut out = Vec::new();
    let mut choice: Vec<i64> = slots.iter().map(|s| s.4).collect();
    loop {
        let mut e1 = Vec::with_capacity(2 * slots.len());
        let mut e2 = Vec::with_capacity(2 * slots.len());
        for (&(b, a, pos, neg, _, _), &j) in slots.iter().zip(&choice) {
            let parts = [
                (Plaquette::positive(b), j, pos - j),
                (Plaquette::negative(b), j + a, neg - j - a),
            ];
            for (p, x, y) in parts {
                if x > 0 {
                    e1.push((p, x as u32));
                }
                if y > 0 {
                    e2.push((p, y as u32));
                }
            }
        }
        out.push((
            PlaquetteAssignment::from_sorted_unchecked(e1),
            PlaquetteAssignment::from_sorted_unchecked(e2),
        ));
        let mut i = slots.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if choice[i] < slots[i].5 {
                choice[i] += 1;
                break;
            }
            choice[i] = slots[i].4;
        }
    }
}

/// Crossings of the straight dual rays perpendicular to `e` on both sides,
/// not counting `e` itself. Returns the smaller of the two totals.
fn ray_score(e: Edge, edges: &[Edge]) -> u32 {
    let u = e.unoriented().positive();
    let (mut below, mut above) = (0u32, 0u32);
    for f in edges {
        let v = f.unoriented().positive();
        if v.dir != u.dir {
            continue;
        }
        let (along, across) = match u.dir {
            Dir::Up => (v.tail.y == u.tail.y, v.tail.x - u.tail.x),
            _ => (v.tail.x == u.tail.x, v.tail.y - u.tail.y),
        };
        if !along {
            continue;
        }
        if across < 0 {
            below += 1;
        } else if across > 0 {
            above += 1;
        }
    }
    below.min(above)
}

/// Edge copy of `ℓ` at which to expand, as an index into `ℓ`'s storage.
pub fn select_edge(l: &Loop, k: &PlaquetteAssignment, strategy: Strategy) -> usize {
    let n = l.len();
    if n == 0 {
        return 0;
    }
    let r = l.least_rotation();
    let edges = l.edges();
    let order = |i: usize| (i + n - r) % n;
    match strategy {
        Strategy::First => r,
        Strategy::Boundary => (0..n)
            .min_by_key(|&i| (ray_score(edges[i], edges), order(i)))
            .unwrap_or(r),
        Strategy::MinBranch => {
            let mult = l.edge_multiplicities();
            let branches = |e: Edge| {
                let splits = mult.get(e) - 1 + mult.get(e.inverse());
                let deforms = plaquettes_containing(e)
                    .into_iter()
                    .chain(plaquettes_containing(e.inverse()))
                    .filter(|&p| k.get(p) > 0)
                    .count() as u32;
                splits + deforms
            };
            (0..n).min_by_key(|&i| (branches(edges[i]), order(i))).unwrap_or(r)
        }
    }
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct EngineStats {
    pub recursion_calls: u64,
    pub memo_hits: u64,
}

/// `φ(ℓ)` with the coefficient of every canonical assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WilsonReport {
    pub polynomial: BetaPolynomial,
    pub per_assignment: Vec<(PlaquetteAssignment, Coefficient)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingReport {
    pub is_canonical: bool,
    pub coefficient: Coefficient,
}

impl VanishingReport {
    /// A nonzero coefficient outside the canonical collection.
    pub fn is_violation(&self) -> bool {
        !self.is_canonical && !self.coefficient.is_zero()
    }
}

#[derive(Debug)]
pub struct Engine<M: MemoStore = LocalMemo> {
    strategy: Strategy,
    memo: M,
    memo_limit: Option<usize>,
    symmetry: KeySymmetry,
    stats: EngineStats,
}

impl Engine<LocalMemo> {
    pub fn new(strategy: Strategy) -> Self {
        Engine::with_memo(strategy, LocalMemo::new())
    }
}

impl Default for Engine<LocalMemo> {
    fn default() -> Self {
        Engine::new(Strategy::default())
    }
}

impl<M: MemoStore> Engine<M> {
    pub fn with_memo(strategy: Strategy, memo: M) -> Self {
        Engine {
            strategy,
            memo,
            memo_limit: None,
            symmetry: KeySymmetry::Translations,
            stats: EngineStats::default(),
        }
    }

    /// Fail with [`EngineError::MemoLimit`] once the memo holds `limit` entries.
    pub fn with_memo_limit(mut self, limit: Option<usize>) -> Self {
        self.memo_limit = limit;
        self
    }

    /// Also identify states related by a lattice rotation or reflection.
    pub fn with_key_symmetry(mut self, symmetry: KeySymmetry) -> Self {
        self.symmetry = symmetry;
        self
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn stats(&self) -> EngineStats {
        self.stats
    }

    pub fn memo(&self) -> &M {
        &self.memo
    }

    pub fn into_memo(self) -> M {
        self.memo
    }

    /// `c(ℓ, K)`.
    pub fn coefficient(&mut self, l: &Loop, k: &PlaquetteAssignment) -> Result<Coefficient, EngineError> {
        self.eval(l.edges(), k, None)
    }

    /// `c(ℓ, K)` with the first expansion forced at `ℓ'[root]`, where `ℓ'` is
    /// the backtrack-free reduction of `ℓ`. Deeper levels use the strategy.
    pub fn coefficient_at_root(
        &mut self,
        l: &Loop,
        k: &PlaquetteAssignment,
        root: usize,
    ) -> Result<Coefficient, EngineError> {
        let len = l.reduced().len();
        if root >= len {
            return Err(EngineError::InvalidRoot { index: root, len });
        }
        self.eval(l.edges(), k, Some(root))
    }

    /// `φ(ℓ) = Σ_{K ∈ 𝒦_ℓ} c(ℓ, K) β^{area(K)}`.
    pub fn wilson_polynomial(&mut self, l: &Loop) -> Result<WilsonReport, EngineError> {
        let l = l.reduced();
        if l.is_null() {
            return Ok(WilsonReport {
                polynomial: BetaPolynomial::one(),
                per_assignment: Vec::new(),
            });
        }
        let mut polynomial = BetaPolynomial::zero();
        let mut per_assignment = Vec::new();
        for k in canonical::canonical_collection(&l)? {
            let c = self.coefficient(&l, &k)?;
            polynomial.add_term(k.area() as u32, c.clone());
            per_assignment.push((k, c));
        }
        Ok(WilsonReport {
            polynomial,
            per_assignment,
        })
    }

    pub fn vanishing_check(&mut self, l: &Loop, k: &PlaquetteAssignment) -> Result<VanishingReport, EngineError> {
        let is_canonical = canonical::is_canonical(l, k)?;
        let coefficient = self.coefficient(l, k)?;
        Ok(VanishingReport {
            is_canonical,
            coefficient,
        })
    }

    fn eval(
        &mut self,
        word: &[Edge],
        k: &PlaquetteAssignment,
        root: Option<usize>,
    ) -> Result<Coefficient, EngineError> {
        self.stats.recursion_calls += 1;
        let l = Loop::from_edges_unchecked(reduce_word(word));
        if l.is_null() {
            return Ok(if k.is_zero() {
                Coefficient::one()
            } else {
                Coefficient::zero()
            });
        }
        if k.is_zero() || !is_balanced_by_height(&l, k) {
            return Ok(Coefficient::zero());
        }
        let key = canonical_key_with(&l, k, self.symmetry);
        if root.is_none() {
            if let Some(v) = self.memo.get(&key) {
                self.stats.memo_hits += 1;
                return Ok(v);
            }
        }
        let at = root.unwrap_or_else(|| select_edge(&l, k, self.strategy));
        let value = self.expand(&l, k, at)?;
        if let Some(limit) = self.memo_limit {
            if self.memo.len() >= limit && self.memo.get(&key).is_none() {
                return Err(EngineError::MemoLimit { limit });
            }
        }
        self.memo
            .insert(key, value.clone())
            .map_err(|_| EngineError::MemoConflict)?;
        Ok(value)
    }

    fn expand(&mut self, l: &Loop, k: &PlaquetteAssignment, at: usize) -> Result<Coefficient, EngineError> {
        let measure = (k.area(), l.len());
        let mut total = Coefficient::zero();
        for split in enumerate_splittings(l, at) {
            debug_assert!(split.loops.iter().all(|c| (k.area(), c.len()) < measure));
            let term = self.split_term(&split.loops[0], &split.loops[1], k)?;
            match split.sign {
                OperationSign::Negative => total += term,
                OperationSign::Positive => total -= term,
            }
        }
        for d in enumerate_deformations(l, at, k) {
            let rest = k.without_one(d.plaquette).expect("K(p) ≥ 1");
            debug_assert!((rest.area(), d.result.len()) < measure);
            let term = self.eval(d.result.edges(), &rest, None)?;
            match d.sign {
                OperationSign::Negative => total += term,
                OperationSign::Positive => total -= term,
            }
        }
        Ok(total)
    }

    fn split_term(&mut self, l1: &Loop, l2: &Loop, k: &PlaquetteAssignment) -> Result<Coefficient, EngineError> {
        let r1 = l1.reduced();
        let r2 = l2.reduced();
        let mut sum = Coefficient::zero();
        for (k1, k2) in balanced_decompositions(&r1, &r2, k) {
            let c1 = self.eval(r1.edges(), &k1, None)?;
            if c1.is_zero() {
                continue;
            }
            let c2 = self.eval(r2.edges(), &k2, None)?;
            sum += c1 * c2;
        }
        Ok(sum)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::height_assignment;
    use crate::geometry::is_balanced;

    fn lp(moves: &str) -> Loop {
        Loop::from_moves(Point::ORIGIN, moves).unwrap()
    }

    fn int(v: i64) -> Coefficient {
        Coefficient::from_integer(v.into())
    }

    #[test]
    fn splittings_examples() {
        let p = lp("URDL");
        for at in 0..4 {
            assert!(enumerate_splittings(&p, at).is_empty());
        }
        let p2 = p.wind(2).unwrap();
        let s = enumerate_splittings(&p2, 0);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].sign, OperationSign::Positive);
        assert!(s[0].loops.iter().all(|l| l.cyclic_eq(&p)));
        // π₁ e e⁻¹ π₂ with π₁π₂ = p.
        let bt = lp("URRLDL");
        let s = enumerate_splittings(&bt, 2);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].sign, OperationSign::Negative);
        assert!(s[0].loops[0].reduced().cyclic_eq(&p));
        assert!(s[0].loops[1].is_null());
    }

    #[test]
    fn deformation_examples() {
        let p = lp("URDL");
        let kp = height_assignment(&p);
        let d = enumerate_deformations(&p, 0, &kp);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].sign, OperationSign::Negative);
        assert!(d[0].result.reduced().is_null());
        assert!(enumerate_deformations(&p, 0, &PlaquetteAssignment::new()).is_empty());
        let p2 = p.wind(2).unwrap();
        let k2 = height_assignment(&p2);
        let d = enumerate_deformations(&p2, 0, &k2);
        assert_eq!(d.len(), 1);
        assert!(d[0].result.reduced().cyclic_eq(&p));
        let rest = k2.without_one(d[0].plaquette).unwrap();
        assert_eq!(rest.get(Plaquette::negative(Point::ORIGIN)), 1);
    }

    #[test]
    fn decompositions_of_two_plaquettes() {
        let p = lp("URDL");
        let k2 = height_assignment(&p.wind(2).unwrap());
        let d = balanced_decompositions(&p, &p, &k2);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].0, height_assignment(&p));
        assert_eq!(d[0].1, height_assignment(&p));
        let z = PlaquetteAssignment::new();
        assert_eq!(
            balanced_decompositions(&Loop::null(), &Loop::null(), &z),
            [(z.clone(), z)]
        );
    }

    #[test]
    fn decompositions_match_brute_force() {
        let p = Plaquette::positive(Point::ORIGIN);
        let q = Plaquette::positive(Point::new(1, 0));
        let l1 = p.as_loop();
        let l2 = q.as_loop();
        let mut k = PlaquetteAssignment::new();
        k.set(p.inverse(), 2);
        k.set(p, 1);
        k.set(q.inverse(), 2);
        k.set(q, 1);
        let entries: Vec<(Plaquette, u32)> = k.iter().collect();
        let mut brute = Vec::new();
        let total: u32 = entries.iter().map(|&(_, c)| c + 1).product();
        for mut code in 0..total {
            let mut k1 = PlaquetteAssignment::new();
            for &(pl, c) in &entries {
                k1.set(pl, code % (c + 1));
                code /= c + 1;
            }
            let k2 = k.minus(&k1).unwrap();
            if is_balanced(&l1, &k1) && is_balanced(&l2, &k2) {
                brute.push((k1, k2));
            }
        }
        let mut fast = balanced_decompositions(&l1, &l2, &k);
        brute.sort();
        fast.sort();
        assert_eq!(fast, brute);
        assert_eq!(fast.len(), 4);
    }

    #[test]
    fn plaquette_coefficients() {
        let p = lp("URDL");
        let mut eng = Engine::new(Strategy::Boundary);
        assert_eq!(eng.coefficient(&p, &height_assignment(&p)).unwrap(), int(1));
        let p2 = p.wind(2).unwrap();
        assert_eq!(eng.coefficient(&p2, &height_assignment(&p2)).unwrap(), int(0));
        let r2 = lp("URRDLL").wind(2).unwrap();
        assert_eq!(eng.coefficient(&r2, &height_assignment(&r2)).unwrap(), int(-1));
        let mut k = PlaquetteAssignment::new();
        k.set(Plaquette::positive(Point::ORIGIN), 1);
        k.set(Plaquette::negative(Point::ORIGIN), 2);
        assert_eq!(eng.coefficient(&p, &k).unwrap(), int(0));
        let w = eng.wilson_polynomial(&p).unwrap();
        assert_eq!(w.polynomial, BetaPolynomial::from_int_terms(&[(1, 1)]));
    }

    #[test]
    fn null_and_zero_base_cases() {
        let mut eng = Engine::default();
        let z = PlaquetteAssignment::new();
        assert_eq!(eng.coefficient(&Loop::null(), &z).unwrap(), int(1));
        assert_eq!(eng.coefficient(&lp("URDL"), &z).unwrap(), int(0));
        let mut k = PlaquetteAssignment::new();
        k.set(Plaquette::positive(Point::ORIGIN), 1);
        k.set(Plaquette::negative(Point::ORIGIN), 1);
        assert_eq!(eng.coefficient(&Loop::null(), &k).unwrap(), int(0));
        assert_eq!(
            eng.wilson_polynomial(&lp("UD")).unwrap().polynomial,
            BetaPolynomial::one()
        );
    }

    #[test]
    fn memo_limit_is_reported() {
        let l = lp("URRDLL").wind(2).unwrap();
        let mut eng = Engine::new(Strategy::First).with_memo_limit(Some(1));
        assert!(matches!(
            eng.coefficient(&l, &height_assignment(&l)),
            Err(EngineError::MemoLimit { limit: 1 })
        ));
    }

    #[test]
    fn strategy_names_round_trip() {
        for s in Strategy::ALL {
            assert_eq!(s.name().parse::<Strategy>(), Ok(s));
        }
        assert!("outer".parse::<Strategy>().is_err());
    }
}
