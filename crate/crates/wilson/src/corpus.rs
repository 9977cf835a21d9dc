//! Seeded random loops for property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wilson_core::{Dir, Edge, Loop, Point};

const DIRS: [Dir; 4] = [Dir::Right, Dir::Up, Dir::Left, Dir::Down];

/// A closed random walk of even length `len` from the origin, conditioned
/// on returning, and not reduced.
pub fn random_closed_walk<R: Rng>(rng: &mut R, len: usize) -> Loop {
    assert!(len >= 2 && len % 2 == 0, "closed walks have even positive length");
    loop {
        let mut edges = Vec::with_capacity(len);
        let mut at = Point::ORIGIN;
        for _ in 0..len {
            let dir = DIRS[rng.random_range(0..4)];
            edges.push(Edge::new(at, dir));
            at = at.step(dir);
        }
        if at == Point::ORIGIN {
            return Loop::new(edges).expect("a closed walk is a loop");
        }
    }
}

/// `count` distinct non-null reduced loops with at most `max_len` edges.
pub fn random_loops(seed: u64, count: usize, max_len: usize) -> Vec<Loop> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Loop> = Vec::with_capacity(count);
    while out.len() < count {
        let len = 2 * rng.random_range(2..=max_len / 2);
        let l = random_closed_walk(&mut rng, len).reduced();
        if !l.is_null() && !out.iter().any(|o| o.cyclic_eq(&l)) {
            out.push(l);
        }
    }
    out
}
