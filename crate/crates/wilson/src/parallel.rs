//! Thread-shared memo and parallel evaluation over `𝒦_ℓ`.

use std::collections::HashMap;
use std::sync::RwLock;

use rayon::prelude::*;
use wilson_core::engine::{EngineStats, MemoConflict, MemoStore, WilsonReport};
use wilson_core::lattice::CanonicalKey;
use wilson_core::{canonical, BetaPolynomial, Coefficient, Engine, EngineError, Loop, Strategy};

/// Memo behind a read-write lock. Concurrent readers never block each
/// other; two threads may compute the same key, and the second insert is
/// checked against the first.
#[derive(Debug, Default)]
pub struct SharedMemo {
    map: RwLock<HashMap<CanonicalKey, Coefficient>>,
}

impl SharedMemo {
    pub fn new() -> Self {
        SharedMemo::default()
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("memo lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl MemoStore for &SharedMemo {
    fn get(&self, key: &CanonicalKey) -> Option<Coefficient> {
        self.map.read().expect("memo lock poisoned").get(key).cloned()
    }

    fn insert(&mut self, key: CanonicalKey, value: Coefficient) -> Result<(), MemoConflict> {
        let mut map = self.map.write().expect("memo lock poisoned");
        match map.get(&key) {
            Some(old) if *old != value => Err(MemoConflict),
            Some(_) => Ok(()),
            None => {
                map.insert(key, value);
                Ok(())
            }
        }
    }

    fn len(&self) -> usize {
        SharedMemo::len(self)
    }
}

/// `φ(ℓ)` with the elements of `𝒦_ℓ` evaluated concurrently on one shared
/// memo. The result is independent of scheduling.
pub fn wilson_polynomial_parallel(
    l: &Loop,
    strategy: Strategy,
    memo: &SharedMemo,
    memo_limit: Option<usize>,
) -> Result<(WilsonReport, EngineStats), EngineError> {
    let l = l.reduced();
    if l.is_null() {
        let report = WilsonReport {
            polynomial: BetaPolynomial::one(),
            per_assignment: Vec::new(),
        };
        return Ok((report, EngineStats::default()));
    }
    let collection = canonical::canonical_collection(&l)?;
    let results: Vec<(Coefficient, EngineStats)> = collection
        .par_iter()
        .map(|k| {
            let mut engine = Engine::with_memo(strategy, memo).with_memo_limit(memo_limit);
            let c = engine.coefficient(&l, k)?;
            Ok((c, engine.stats()))
        })
        .collect::<Result<_, EngineError>>()?;
    let mut polynomial = BetaPolynomial::zero();
    let mut stats = EngineStats::default();
    let mut per_assignment = Vec::with_capacity(collection.len());
    for (k, (c, s)) in collection.into_iter().zip(results) {
        polynomial.add_term(k.area() as u32, c.clone());
        stats.recursion_calls += s.recursion_calls;
        stats.memo_hits += s.memo_hits;
        per_assignment.push((k, c));
    }
    Ok((
        WilsonReport {
            polynomial,
            per_assignment,
        },
        stats,
    ))
}
