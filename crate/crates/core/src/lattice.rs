//! Points, oriented edges, plaquettes and loops of the square lattice.
//!
//! A loop is stored as a cyclic word of oriented edges. Index 0 is only a
//! storage rotation; semantic comparisons go through [`Loop::cyclic_eq`] or
//! [`canonical_key`].

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::assignment::PlaquetteAssignment;

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn step(self, dir: Dir) -> Point {
        let (dx, dy) = dir.delta();
        Point::new(self.x + dx, self.y + dy)
    }

    pub fn offset(self, dx: i64, dy: i64) -> Point {
        Point::new(self.x + dx, self.y + dy)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Unit step direction. The declaration order is the letter order used by
/// canonical keys.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Dir {
    Right = 0,
    Up = 1,
    Left = 2,
    Down = 3,
}

impl Dir {
    pub const ALL: [Dir; 4] = [Dir::Right, Dir::Up, Dir::Left, Dir::Down];

    pub const fn delta(self) -> (i64, i64) {
        match self {
            Dir::Right => (1, 0),
            Dir::Up => (0, 1),
            Dir::Left => (-1, 0),
            Dir::Down => (0, -1),
        }
    }

    pub const fn inverse(self) -> Dir {
        match self {
            Dir::Right => Dir::Left,
            Dir::Up => Dir::Down,
            Dir::Left => Dir::Right,
            Dir::Down => Dir::Up,
        }
    }

    /// `+x` and `+y` are the positive directions.
    pub const fn is_positive(self) -> bool {
        matches!(self, Dir::Right | Dir::Up)
    }

    pub fn from_delta(dx: i64, dy: i64) -> Option<Dir> {
        match (dx, dy) {
            (1, 0) => Some(Dir::Right),
            (0, 1) => Some(Dir::Up),
            (-1, 0) => Some(Dir::Left),
            (0, -1) => Some(Dir::Down),
            _ => None,
        }
    }

    pub fn from_move(c: char) -> Option<Dir> {
        match c {
            'R' => Some(Dir::Right),
            'U' => Some(Dir::Up),
            'L' => Some(Dir::Left),
            'D' => Some(Dir::Down),
            _ => None,
        }
    }

    pub const fn to_move(self) -> char {
        match self {
            Dir::Right => 'R',
            Dir::Up => 'U',
            Dir::Left => 'L',
            Dir::Down => 'D',
        }
    }
}

/// An oriented nearest-neighbour edge.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub tail: Point,
    pub dir: Dir,
}

impl Edge {
    pub const fn new(tail: Point, dir: Dir) -> Self {
        Edge { tail, dir }
    }

    pub fn head(self) -> Point {
        self.tail.step(self.dir)
    }

    pub fn inverse(self) -> Edge {
        Edge::new(self.head(), self.dir.inverse())
    }

    pub const fn is_positive(self) -> bool {
        self.dir.is_positive()
    }

    /// The positively oriented member of `{e, e⁻¹}`.
    pub fn unoriented(self) -> UnorientedEdge {
        if self.is_positive() {
            UnorientedEdge(self)
        } else {
            UnorientedEdge(self.inverse())
        }
    }

    pub fn translated(self, v: Point) -> Edge {
        Edge::new(self.tail.offset(v.x, v.y), self.dir)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.tail, self.dir.to_move())
    }
}

/// Unordered pair of adjacent points, stored as its positive orientation.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnorientedEdge(Edge);

impl UnorientedEdge {
    pub const fn positive(self) -> Edge {
        self.0
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub const fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub const fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

/// An oriented unit square, identified by its lower-left corner.
///
/// The positive orientation traverses the left side upwards, i.e. the word
/// `URDL` read from `base`. The negative orientation is the reverse word.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Plaquette {
    pub base: Point,
    pub sign: Sign,
}

impl Plaquette {
    pub const fn new(base: Point, sign: Sign) -> Self {
        Plaquette { base, sign }
    }

    pub const fn positive(base: Point) -> Self {
        Plaquette::new(base, Sign::Pos)
    }

    pub const fn negative(base: Point) -> Self {
        Plaquette::new(base, Sign::Neg)
    }

    pub const fn inverse(self) -> Plaquette {
        Plaquette::new(self.base, self.sign.flip())
    }

    pub const fn is_positive(self) -> bool {
        matches!(self.sign, Sign::Pos)
    }

    /// Boundary word starting at `base`.
    pub fn edges(self) -> [Edge; 4] {
        let b = self.base;
        match self.sign {
            Sign::Pos => [
                Edge::new(b, Dir::Up),
                Edge::new(b.offset(0, 1), Dir::Right),
                Edge::new(b.offset(1, 1), Dir::Down),
                Edge::new(b.offset(1, 0), Dir::Left),
            ],
            Sign::Neg => [
                Edge::new(b, Dir::Right),
                Edge::new(b.offset(1, 0), Dir::Up),
                Edge::new(b.offset(1, 1), Dir::Left),
                Edge::new(b.offset(0, 1), Dir::Down),
            ],
        }
    }

    pub fn contains(self, e: Edge) -> bool {
        self.edges().contains(&e)
    }

    /// Boundary word rotated so that `e` comes first, if `e` is on the boundary.
    pub fn word_from(self, e: Edge) -> Option<[Edge; 4]> {
        let edges = self.edges();
        let at = edges.iter().position(|&x| x == e)?;
        Some(core::array::from_fn(|i| edges[(at + i) % 4]))
    }

    pub fn as_loop(self) -> Loop {
        Loop {
            edges: self.edges().to_vec(),
        }
    }

    pub fn translated(self, v: Point) -> Plaquette {
        Plaquette::new(self.base.offset(v.x, v.y), self.sign)
    }
}

impl fmt::Display for Plaquette {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.sign.symbol(), self.base)
    }
}

/// The two oriented plaquettes whose boundary contains `e` with matching
/// orientation, positive one first.
pub fn plaquettes_containing(e: Edge) -> [Plaquette; 2] {
    let t = e.tail;
    let (pos, neg) = match e.dir {
        Dir::Up => (t, t.offset(-1, 0)),
        Dir::Down => (t.offset(-1, -1), t.offset(0, -1)),
        Dir::Right => (t.offset(0, -1), t),
        Dir::Left => (t.offset(-1, 0), t.offset(-1, -1)),
    };
    [Plaquette::positive(pos), Plaquette::negative(neg)]
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoopError {
    #[error("loop is not closed: last head {head} differs from first tail {tail}")]
    NotClosed { head: Point, tail: Point },
    #[error("step {index} is not between adjacent lattice points: {from} -> {to}")]
    NonAdjacentStep { index: usize, from: Point, to: Point },
    #[error("edge {index} does not start where the previous edge ends")]
    Broken { index: usize },
    #[error("invalid move character {0:?}; expected one of U, D, L, R")]
    InvalidMove(char),
    #[error("winding number must be positive")]
    ZeroWinding,
}

/// Exact per-edge counts `n_e(ℓ)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeMultiplicity {
    counts: BTreeMap<Edge, u32>,
}

impl EdgeMultiplicity {
    pub fn get(&self, e: Edge) -> u32 {
        self.counts.get(&e).copied().unwrap_or(0)
    }

    /// `n_ε(ℓ) = n_e(ℓ) + n_{e⁻¹}(ℓ)`.
    pub fn unoriented(&self, e: Edge) -> u32 {
        self.get(e) + self.get(e.inverse())
    }

    pub fn total(&self) -> u64 {
        self.counts.values().map(|&c| u64::from(c)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, u32)> + '_ {
        self.counts.iter().map(|(&e, &c)| (e, c))
    }
}

/// A closed lattice path, possibly with backtracks. The empty word is the
/// null-loop.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Loop {
    edges: Vec<Edge>,
}

#[allow(clippy::len_without_is_empty)]
impl Loop {
    pub const fn null() -> Self {
        Loop { edges: Vec::new() }
    }

    /// Builds a loop from an edge word, checking that consecutive edges chain
    /// and that the word closes.
    pub fn new(edges: Vec<Edge>) -> Result<Self, LoopError> {
        for i in 1..edges.len() {
            if edges[i - 1].head() != edges[i].tail {
                return Err(LoopError::Broken { index: i });
            }
        }
        if let (Some(first), Some(last)) = (edges.first(), edges.last()) {
            if last.head() != first.tail {
                return Err(LoopError::NotClosed {
                    head: last.head(),
                    tail: first.tail,
                });
            }
        }
        Ok(Loop { edges })
    }

    /// Builds the loop starting at `origin` following `U`/`D`/`L`/`R` moves.
    /// Whitespace is ignored.
    pub fn from_moves(origin: Point, moves: &str) -> Result<Self, LoopError> {
        let mut edges = Vec::with_capacity(moves.len());
        let mut at = origin;
        for c in moves.chars().filter(|c| !c.is_whitespace()) {
            let dir = Dir::from_move(c).ok_or(LoopError::InvalidMove(c))?;
            edges.push(Edge::new(at, dir));
            at = at.step(dir);
        }
        if at != origin {
            return Err(LoopError::NotClosed { head: at, tail: origin });
        }
        Ok(Loop { edges })
    }

    /// Builds a loop from an explicit vertex sequence `v0, v1, ..., v0`.
    /// A list with fewer than two vertices is the null-loop.
    pub fn from_vertices(vertices: &[Point]) -> Result<Self, LoopError> {
        let mut edges = Vec::with_capacity(vertices.len());
        for (i, w) in vertices.windows(2).enumerate() {
            let dir = Dir::from_delta(w[1].x - w[0].x, w[1].y - w[0].y).ok_or(LoopError::NonAdjacentStep {
                index: i,
                from: w[0],
                to: w[1],
            })?;
            edges.push(Edge::new(w[0], dir));
        }
        if let (Some(&first), Some(&last)) = (vertices.first(), vertices.last()) {
            if first != last {
                return Err(LoopError::NotClosed {
                    head: last,
                    tail: first,
                });
            }
        }
        Ok(Loop { edges })
    }

    pub(crate) fn from_edges_unchecked(edges: Vec<Edge>) -> Self {
        debug_assert!(Loop::new(edges.clone()).is_ok());
        Loop { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_null(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn start(&self) -> Option<Point> {
        self.edges.first().map(|e| e.tail)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Point> + '_ {
        self.edges.iter().map(|e| e.tail)
    }

    /// Inclusive bounding box of the visited vertices.
    pub fn vertex_bounds(&self) -> Option<(Point, Point)> {
        let mut it = self.vertices();
        let first = it.next()?;
        let (mut lo, mut hi) = (first, first);
        for v in it {
            lo = Point::new(lo.x.min(v.x), lo.y.min(v.y));
            hi = Point::new(hi.x.max(v.x), hi.y.max(v.y));
        }
        Some((lo, hi))
    }

    pub fn moves(&self) -> alloc::string::String {
        self.edges.iter().map(|e| e.dir.to_move()).collect()
    }

    /// The same cyclic word read from index `k`.
    pub fn rotated(&self, k: usize) -> Loop {
        if self.edges.is_empty() {
            return Loop::null();
        }
        let k = k % self.edges.len();
        let mut edges = Vec::with_capacity(self.edges.len());
        edges.extend_from_slice(&self.edges[k..]);
        edges.extend_from_slice(&self.edges[..k]);
        Loop { edges }
    }

    pub fn translated(&self, v: Point) -> Loop {
        Loop {
            edges: self.edges.iter().map(|e| e.translated(v)).collect(),
        }
    }

    /// The reversed loop `ℓ⁻¹`.
    pub fn inverse(&self) -> Loop {
        Loop {
            edges: self.edges.iter().rev().map(|e| e.inverse()).collect(),
        }
    }

    /// Concatenates the word `n` times.
    pub fn wind(&self, n: usize) -> Result<Loop, LoopError> {
        if n == 0 {
            return Err(LoopError::ZeroWinding);
        }
        Ok(Loop {
            edges: self.edges.repeat(n),
        })
    }

    /// Deletes adjacent pairs `e e⁻¹`, including the pair formed by the last
    /// and first edge, until none remain.
    pub fn reduced(&self) -> Loop {
        Loop {
            edges: reduce_word(&self.edges),
        }
    }

    pub fn has_backtrack(&self) -> bool {
        let n = self.edges.len();
        (0..n).any(|i| self.edges[(i + 1) % n] == self.edges[i].inverse() && n > 0)
    }

    pub fn edge_multiplicities(&self) -> EdgeMultiplicity {
        let mut counts = BTreeMap::new();
        for &e in &self.edges {
            *counts.entry(e).or_insert(0) += 1;
        }
        EdgeMultiplicity { counts }
    }

    /// A loop is simple when all its vertices are distinct.
    pub fn is_simple(&self) -> bool {
        let mut seen: Vec<Point> = self.vertices().collect();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Index of the lexicographically least rotation of the direction word.
    pub fn least_rotation(&self) -> usize {
        let codes: Vec<u8> = self.edges.iter().map(|e| e.dir as u8).collect();
        least_rotation(&codes)
    }

    /// The loop rotated to its least rotation.
    pub fn canonical_rotation(&self) -> Loop {
        self.rotated(self.least_rotation())
    }

    /// Equality of cyclic words up to rotation.
    pub fn cyclic_eq(&self, other: &Loop) -> bool {
        if self.len() != other.len() {
            return false;
        }
        if self.is_null() {
            return true;
        }
        self.canonical_rotation() == other.canonical_rotation()
    }
}

impl fmt::Display for Loop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.start() {
            None => f.write_str("∅"),
            Some(s) => write!(f, "{} {}", s, self.moves()),
        }
    }
}

pub(crate) fn reduce_word(word: &[Edge]) -> Vec<Edge> {
    let mut stack: Vec<Edge> = Vec::with_capacity(word.len());
    for &e in word {
        match stack.last() {
            Some(&top) if top == e.inverse() => {
                stack.pop();
            }
            _ => stack.push(e),
        }
    }
    // The stack is freely reduced; cancel across the wrap-around.
    let mut lo = 0;
    let mut hi = stack.len();
    while hi - lo >= 2 && stack[hi - 1] == stack[lo].inverse() {
        lo += 1;
        hi -= 1;
    }
    stack.truncate(hi);
    stack.drain(..lo);
    stack
}

/// Start index of the least rotation (two-pointer minimum expression).
pub(crate) fn least_rotation(s: &[u8]) -> usize {
    let n = s.len();
    if n < 2 {
        return 0;
    }
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = s[(i + k) % n];
        let b = s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// Translation and rotation normal form of a loop together with a plaquette
/// assignment.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    word: Box<[u8]>,
    assignment: Box<[(i64, i64, u8, u32)]>,
}

impl CanonicalKey {
    pub fn word_len(&self) -> usize {
        self.word.len()
    }
}

/// Symmetries quotiented out by [`canonical_key_with`].
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub enum KeySymmetry {
    /// Lattice translations and cyclic rotation of the word.
    #[default]
    Translations,
    /// Additionally the eight rotations and reflections of the lattice.
    Dihedral,
}

/// Key invariant under joint translation of `(ℓ, K)` and rotation of the word.
pub fn canonical_key(l: &Loop, k: &PlaquetteAssignment) -> CanonicalKey {
    translation_key(l, k)
}

pub fn canonical_key_with(l: &Loop, k: &PlaquetteAssignment, sym: KeySymmetry) -> CanonicalKey {
    match sym {
        KeySymmetry::Translations => translation_key(l, k),
        KeySymmetry::Dihedral => LatticeSymmetry::ALL
            .iter()
            .map(|t| translation_key(&t.apply_loop(l), &t.apply_assignment(k)))
            .min()
            .expect("eight symmetries"),
    }
}

fn translation_key(l: &Loop, k: &PlaquetteAssignment) -> CanonicalKey {
    let codes: Vec<u8> = l.edges.iter().map(|e| e.dir as u8).collect();
    let r = least_rotation(&codes);
    let origin = match l.edges.get(r) {
        Some(e) => e.tail,
        // Only a null loop reaches here; anchor at the smallest plaquette.
        None => k.iter().next().map(|(p, _)| p.base).unwrap_or_default(),
    };
    let mut word = Vec::with_capacity(codes.len());
    word.extend_from_slice(&codes[r..]);
    word.extend_from_slice(&codes[..r]);
    // Translation preserves the (base, sign) order of the entries.
    let assignment = k
        .iter()
        .map(|(p, c)| (p.base.x - origin.x, p.base.y - origin.y, p.sign as u8, c))
        .collect();
    CanonicalKey {
        word: word.into_boxed_slice(),
        assignment,
    }
}

/// One of the eight point symmetries of the square lattice, `v ↦ M v`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct LatticeSymmetry {
    m: [[i64; 2]; 2],
}

impl LatticeSymmetry {
    pub const ALL: [LatticeSymmetry; 8] = [
        LatticeSymmetry { m: [[1, 0], [0, 1]] },
        LatticeSymmetry { m: [[0, -1], [1, 0]] },
        LatticeSymmetry { m: [[-1, 0], [0, -1]] },
        LatticeSymmetry { m: [[0, 1], [-1, 0]] },
        LatticeSymmetry { m: [[-1, 0], [0, 1]] },
        LatticeSymmetry { m: [[1, 0], [0, -1]] },
        LatticeSymmetry { m: [[0, 1], [1, 0]] },
        LatticeSymmetry { m: [[0, -1], [-1, 0]] },
    ];

    pub fn apply_point(&self, p: Point) -> Point {
        Point::new(
            self.m[0][0] * p.x + self.m[0][1] * p.y,
            self.m[1][0] * p.x + self.m[1][1] * p.y,
        )
    }

    pub fn preserves_orientation(&self) -> bool {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0] > 0
    }

    pub fn apply_edge(&self, e: Edge) -> Edge {
        let t = self.apply_point(e.tail);
        let h = self.apply_point(e.head());
        Edge::new(t, Dir::from_delta(h.x - t.x, h.y - t.y).expect("unit step"))
    }

    pub fn apply_loop(&self, l: &Loop) -> Loop {
        Loop {
            edges: l.edges.iter().map(|&e| self.apply_edge(e)).collect(),
        }
    }

    pub fn apply_plaquette(&self, p: Plaquette) -> Plaquette {
        let corners =
            [p.base, p.base.offset(1, 0), p.base.offset(0, 1), p.base.offset(1, 1)].map(|c| self.apply_point(c));
        let base = Point::new(
            corners.iter().map(|c| c.x).min().unwrap_or(0),
            corners.iter().map(|c| c.y).min().unwrap_or(0),
        );
        let sign = if self.preserves_orientation() {
            p.sign
        } else {
            p.sign.flip()
        };
        Plaquette::new(base, sign)
    }

    pub fn apply_assignment(&self, k: &PlaquetteAssignment) -> PlaquetteAssignment {
        k.iter().map(|(p, c)| (self.apply_plaquette(p), c)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn origin_loop(moves: &str) -> Loop {
        Loop::from_moves(Point::ORIGIN, moves).unwrap()
    }

    #[test]
    fn urdl_is_the_positive_plaquette() {
        let l = origin_loop("URDL");
        assert_eq!(l.edges(), &Plaquette::positive(Point::ORIGIN).edges());
        assert_eq!(l.len(), 4);
    }

    #[test]
    fn empty_moves_give_null_loop() {
        assert!(origin_loop("").is_null());
        assert!(Loop::from_vertices(&[]).unwrap().is_null());
    }

    #[test]
    fn two_by_two_square_has_perimeter_eight() {
        assert_eq!(origin_loop("UURRDDLL").len(), 8);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Loop::from_moves(Point::ORIGIN, "UR"),
            Err(LoopError::NotClosed { .. })
        ));
        assert_eq!(Loop::from_moves(Point::ORIGIN, "UX"), Err(LoopError::InvalidMove('X')));
        let gap = [Point::new(0, 0), Point::new(2, 0), Point::new(0, 0)];
        assert!(matches!(
            Loop::from_vertices(&gap),
            Err(LoopError::NonAdjacentStep { index: 0, .. })
        ));
        let open = [Point::new(0, 0), Point::new(1, 0)];
        assert!(matches!(Loop::from_vertices(&open), Err(LoopError::NotClosed { .. })));
        let e = Edge::new(Point::ORIGIN, Dir::Up);
        assert!(Loop::new(vec![e, e]).is_err());
    }

    #[test]
    fn vertices_and_moves_agree() {
        let pts = [
            Point::new(0, 0),
            Point::new(0, 1),
            Point::new(1, 1),
            Point::new(1, 0),
            Point::new(0, 0),
        ];
        assert_eq!(Loop::from_vertices(&pts).unwrap(), origin_loop("URDL"));
    }

    #[test]
    fn backtrack_removal() {
        // π₁ e e⁻¹ π₂ with π₁π₂ the unit plaquette.
        let l = origin_loop("URRLDL");
        assert_eq!(l.reduced(), origin_loop("URDL"));
        assert!(origin_loop("UD").reduced().is_null());
        // Wrap-around pair: word starts with D and ends with U.
        let wrap = Loop::from_moves(Point::new(0, 1), "DURDLU").unwrap();
        assert!(wrap.reduced().cyclic_eq(&origin_loop("URDL")));
        // Tree-like loop collapses entirely.
        assert!(origin_loop("RUDRLL").reduced().is_null());
        assert!(origin_loop("RURLDL").reduced().is_null());
    }

    #[test]
    fn winding() {
        let p = origin_loop("URDL");
        assert_eq!(p.wind(2).unwrap().len(), 8);
        assert_eq!(p.wind(1).unwrap(), p);
        assert_eq!(origin_loop("URRDLL").wind(3).unwrap().len(), 18);
        assert_eq!(p.wind(0), Err(LoopError::ZeroWinding));
    }

    #[test]
    fn multiplicities() {
        let p = origin_loop("URDL");
        let m = p.edge_multiplicities();
        for e in p.edges() {
            assert_eq!(m.get(*e), 1);
            assert_eq!(m.get(e.inverse()), 0);
            assert_eq!(m.unoriented(e.inverse()), 1);
        }
        let m2 = p.wind(2).unwrap().edge_multiplicities();
        assert!(p.edges().iter().all(|&e| m2.get(e) == 2));
        assert_eq!(m2.total(), 8);
        assert!(Loop::null().edge_multiplicities().is_empty());
    }

    #[test]
    fn plaquettes_containing_matches_brute_force_scan() {
        let e = Edge::new(Point::ORIGIN, Dir::Up);
        let found = plaquettes_containing(e);
        assert_eq!(
            found,
            [
                Plaquette::positive(Point::new(0, 0)),
                Plaquette::negative(Point::new(-1, 0))
            ]
        );
        for x in -2..=2 {
            for y in -2..=2 {
                for dir in Dir::ALL {
                    let e = Edge::new(Point::new(x, y), dir);
                    let mut scan = vec![];
                    for bx in x - 1..=x {
                        for by in y - 1..=y {
                            for sign in [Sign::Pos, Sign::Neg] {
                                let p = Plaquette::new(Point::new(bx, by), sign);
                                if p.edges().contains(&e) {
                                    scan.push(p);
                                }
                            }
                        }
                    }
                    let got = plaquettes_containing(e);
                    assert_eq!(scan.len(), 2);
                    assert!(scan.contains(&got[0]) && scan.contains(&got[1]));
                    assert!(got[0].is_positive() && !got[1].is_positive());
                    let inv = plaquettes_containing(e.inverse());
                    assert!(inv.contains(&got[0].inverse()) && inv.contains(&got[1].inverse()));
                }
            }
        }
    }

    #[test]
    fn least_rotation_is_minimal() {
        let words: [&[u8]; 5] = [&[1, 0, 0], &[2, 1, 2, 1, 0, 2], &[0, 0, 0], &[3, 1, 3, 1], &[]];
        for w in words {
            let r = least_rotation(w);
            let rot: Vec<u8> = (0..w.len()).map(|i| w[(r + i) % w.len()]).collect();
            for s in 0..w.len() {
                let other: Vec<u8> = (0..w.len()).map(|i| w[(s + i) % w.len()]).collect();
                assert!(rot <= other);
            }
        }
    }

    #[test]
    fn key_invariances() {
        let l = origin_loop("UURRDLDL");
        let mut k = PlaquetteAssignment::new();
        k.set(Plaquette::negative(Point::new(0, 0)), 1);
        k.set(Plaquette::positive(Point::new(1, 1)), 2);
        let key = canonical_key(&l, &k);
        let v = Point::new(5, -3);
        let kt: PlaquetteAssignment = k.iter().map(|(p, c)| (p.translated(v), c)).collect();
        assert_eq!(canonical_key(&l.translated(v), &kt), key);
        assert_eq!(canonical_key(&l.rotated(2), &k), key);
        let zero = PlaquetteAssignment::new();
        let a = Plaquette::positive(Point::new(0, 0)).as_loop();
        let b = Plaquette::positive(Point::new(1, 0)).as_loop();
        assert_eq!(canonical_key(&a, &zero), canonical_key(&b, &zero));
        assert_ne!(canonical_key(&a, &zero), canonical_key(&a.inverse(), &zero));
    }

    #[test]
    fn symmetry_maps_plaquettes_to_plaquettes() {
        for t in LatticeSymmetry::ALL {
            for sign in [Sign::Pos, Sign::Neg] {
                let p = Plaquette::new(Point::new(2, -1), sign);
                let image = t.apply_plaquette(p);
                let word = t.apply_loop(&p.as_loop());
                assert!(word.cyclic_eq(&image.as_loop()), "{t:?} {p}");
            }
        }
    }
}
