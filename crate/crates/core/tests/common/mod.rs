#![allow(dead_code)]

use proptest::prelude::*;
use wilson_core::{Dir, Loop, Point};

pub const MOVES: [char; 4] = ['U', 'R', 'D', 'L'];

pub fn lp(moves: &str) -> Loop {
    Loop::from_moves(Point::new(0, 0), moves).expect("closed word")
}

/// A random walk of the given steps closed by a straight return path.
pub fn closed_walk(origin: Point, steps: &[u8]) -> Loop {
    let mut moves: String = steps.iter().map(|&s| MOVES[usize::from(s % 4)]).collect();
    let mut end = origin;
    for c in moves.chars() {
        end = end.step(Dir::from_move(c).expect("move"));
    }
    let dx = end.x - origin.x;
    let dy = end.y - origin.y;
    let back_x = if dx > 0 { 'L' } else { 'R' };
    let back_y = if dy > 0 { 'D' } else { 'U' };
    moves.extend(std::iter::repeat_n(back_x, dx.unsigned_abs() as usize));
    moves.extend(std::iter::repeat_n(back_y, dy.unsigned_abs() as usize));
    Loop::from_moves(origin, &moves).expect("closed by construction")
}

/// Reduced non-null loops from walks of at most `max_steps` steps.
pub fn arb_loop(max_steps: usize) -> impl Strategy<Value = Loop> {
    (-3i64..3, -3i64..3, prop::collection::vec(0u8..4, 2..=max_steps))
        .prop_map(|(x, y, steps)| closed_walk(Point::new(x, y), &steps).reduced())
        .prop_filter("non-null", |l| !l.is_null())
}
