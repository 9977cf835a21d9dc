//! Height and distance fields, plaquette regions, and balance checks.
//!
//! Fields live on a rectangular window of plaquettes, the working frame,
//! which is the vertex bounding box of the loop grown by a margin. Every
//! plaquette outside the frame has height and distance zero.

use alloc::collections::{BTreeMap, BinaryHeap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use thiserror::Error;

use crate::assignment::PlaquetteAssignment;
use crate::lattice::{Dir, Edge, Loop, Plaquette, Point};

pub const DEFAULT_MARGIN: i64 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("height or distance is not constant on the region containing {at}")]
    HdNotConstant { at: Point },
    #[error("d - |h| is negative or odd at {at} (h = {h}, d = {d})")]
    Parity { at: Point, h: i64, d: u64 },
}

/// A rectangle of plaquette bases `x0..x0+width` by `y0..y0+height`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Frame {
    pub x0: i64,
    pub y0: i64,
    pub width: usize,
    pub height: usize,
}

impl Frame {
    /// Plaquettes of the vertex bounding box of `l`, grown by `margin` on
    /// every side. The null loop gets an empty frame.
    pub fn around(l: &Loop, margin: i64) -> Frame {
        match l.vertex_bounds() {
            None => Frame::EMPTY,
            Some((lo, hi)) => Frame {
                x0: lo.x - margin,
                y0: lo.y - margin,
                width: (hi.x - lo.x + 2 * margin) as usize,
                height: (hi.y - lo.y + 2 * margin) as usize,
            },
        }
    }

    pub const EMPTY: Frame = Frame {
        x0: 0,
        y0: 0,
        width: 0,
        height: 0,
    };

    pub fn is_empty(&self) -> bool {
        self.width == 0 || self.height == 0
    }

    pub fn len(&self) -> usize {
        self.width * self.height
    }

    pub fn contains(&self, p: Point) -> bool {
        self.index(p).is_some()
    }

    pub fn index(&self, p: Point) -> Option<usize> {
        let i = p.x - self.x0;
        let j = p.y - self.y0;
        if i < 0 || j < 0 || i as usize >= self.width || j as usize >= self.height {
            return None;
        }
        Some(j as usize * self.width + i as usize)
    }

    pub fn point(&self, index: usize) -> Point {
        Point::new(
            self.x0 + (index % self.width) as i64,
            self.y0 + (index / self.width) as i64,
        )
    }

    /// Bases in row-major order (rows bottom to top).
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        (0..self.len()).map(move |i| self.point(i))
    }

    pub fn on_boundary(&self, p: Point) -> bool {
        self.contains(p)
            && (p.x == self.x0
                || p.y == self.y0
                || p.x == self.x0 + self.width as i64 - 1
                || p.y == self.y0 + self.height as i64 - 1)
    }

    /// Smallest frame containing both.
    pub fn union(&self, other: &Frame) -> Frame {
        if self.is_empty() {
            return *other;
        }
        if other.is_empty() {
            return *self;
        }
        let x0 = self.x0.min(other.x0);
        let y0 = self.y0.min(other.y0);
        let x1 = (self.x0 + self.width as i64).max(other.x0 + other.width as i64);
        let y1 = (self.y0 + self.height as i64).max(other.y0 + other.height as i64);
        Frame {
            x0,
            y0,
            width: (x1 - x0) as usize,
            height: (y1 - y0) as usize,
        }
    }
}

/// Integer values on the plaquettes of a frame, zero outside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaquetteField<T> {
    frame: Frame,
    values: Vec<T>,
}

pub type HeightField = PlaquetteField<i64>;
pub type DistanceField = PlaquetteField<u64>;

impl<T: Copy + Default> PlaquetteField<T> {
    fn filled(frame: Frame, value: T) -> Self {
        PlaquetteField {
            frame,
            values: vec![value; frame.len()],
        }
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    /// Value at the plaquette with lower-left corner `base`, for either
    /// orientation.
    pub fn get(&self, base: Point) -> T {
        self.frame.index(base).map(|i| self.values[i]).unwrap_or_default()
    }

    pub fn at(&self, p: Plaquette) -> T {
        self.get(p.base)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Point, T)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(move |(i, &v)| (self.frame.point(i), v))
    }

    /// Rows from top to bottom, each left to right.
    pub fn rows(&self) -> Vec<Vec<T>> {
        (0..self.frame.height)
            .rev()
            .map(|j| self.values[j * self.frame.width..(j + 1) * self.frame.width].to_vec())
            .collect()
    }
}

/// Net and total crossing counts for every lattice edge inside a frame.
struct EdgeCounts {
    frame: Frame,
    // vertical edge on the left side of plaquette (i, j): up − down, up + down
    v_net: Vec<i64>,
    v_tot: Vec<u64>,
    // horizontal edge on the bottom side of plaquette (i, j): left − right, total
    h_net: Vec<i64>,
    h_tot: Vec<u64>,
}

impl EdgeCounts {
    fn new(l: &Loop, frame: Frame) -> Self {
        let n = frame.len();
        let mut c = EdgeCounts {
            frame,
            v_net: vec![0; n],
            v_tot: vec![0; n],
            h_net: vec![0; n],
            h_tot: vec![0; n],
        };
        for &e in l.edges() {
            let u = e.unoriented().positive();
            let sign = if e.is_positive() { 1 } else { -1 };
            let idx = frame.index(u.tail).expect("loop edges lie strictly inside the frame");
            match u.dir {
                Dir::Up => {
                    c.v_net[idx] += sign;
                    c.v_tot[idx] += 1;
                }
                Dir::Right => {
                    c.h_net[idx] -= sign;
                    c.h_tot[idx] += 1;
                }
                _ => unreachable!(),
            }
        }
        c
    }

    /// Height change and crossing count when stepping east into `p`.
    fn east_into(&self, p: Point) -> (i64, u64) {
        let i = self.frame.index(p).unwrap_or(usize::MAX);
        if i == usize::MAX {
            return (0, 0);
        }
        (self.v_net[i], self.v_tot[i])
    }

    /// Height change and crossing count when stepping north into `p`.
    fn north_into(&self, p: Point) -> (i64, u64) {
        let i = self.frame.index(p).unwrap_or(usize::MAX);
        if i == usize::MAX {
            return (0, 0);
        }
        (self.h_net[i], self.h_tot[i])
    }
}

pub fn height(l: &Loop) -> HeightField {
    height_with_margin(l, DEFAULT_MARGIN)
}

/// Height by a row-major dual sweep: up the first column, then east along
/// each row. The crossing rule gives `+1` when stepping east over an upward
/// edge and `−1` when stepping north over an eastward edge.
pub fn height_with_margin(l: &Loop, margin: i64) -> HeightField {
    let frame = Frame::around(l, margin.max(1));
    let counts = EdgeCounts::new(l, frame);
    let mut field = HeightField::filled(frame, 0);
    let (w, h) = (frame.width, frame.height);
    for j in 0..h {
        for i in 0..w {
            let p = Point::new(frame.x0 + i as i64, frame.y0 + j as i64);
            let v = if i == 0 && j == 0 {
                0
            } else if i == 0 {
                field.values[(j - 1) * w] + counts.north_into(p).0
            } else {
                field.values[j * w + i - 1] + counts.east_into(p).0
            };
            field.values[j * w + i] = v;
        }
    }
    field
}

/// Height by a column-major sweep: east along the first row, then north up
/// each column.
pub fn height_column_major(l: &Loop, margin: i64) -> HeightField {
    let frame = Frame::around(l, margin.max(1));
    let counts = EdgeCounts::new(l, frame);
    let mut field = HeightField::filled(frame, 0);
    let (w, h) = (frame.width, frame.height);
    for i in 0..w {
        for j in 0..h {
            let p = Point::new(frame.x0 + i as i64, frame.y0 + j as i64);
            let v = if i == 0 && j == 0 {
                0
            } else if j == 0 {
                field.values[i - 1] + counts.east_into(p).0
            } else {
                field.values[(j - 1) * w + i] + counts.north_into(p).0
            };
            field.values[j * w + i] = v;
        }
    }
    field
}

/// Nonzero heights only, sorted by base. Runs in `O(|ℓ| log |ℓ| + area)`
/// without allocating a frame.
pub fn sparse_height(l: &Loop) -> Vec<(Point, i64)> {
    let mut marks: Vec<(i64, i64, i64)> = l
        .edges()
        .iter()
        .filter_map(|e| match e.dir {
            Dir::Up => Some((e.tail.y, e.tail.x, 1)),
            Dir::Down => Some((e.tail.y - 1, e.tail.x, -1)),
            _ => None,
        })
        .collect();
    marks.sort_unstable();
    let mut out = Vec::new();
    let mut k = 0;
    while k < marks.len() {
        let y = marks[k].0;
        let mut running = 0;
        while k < marks.len() && marks[k].0 == y {
            let x = marks[k].1;
            while k < marks.len() && marks[k].0 == y && marks[k].1 == x {
                running += marks[k].2;
                k += 1;
            }
            if running != 0 {
                let next_x = if k < marks.len() && marks[k].0 == y {
                    marks[k].1
                } else {
                    x
                };
                for xx in x..next_x {
                    out.push((Point::new(xx, y), running));
                }
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn distance(l: &Loop) -> DistanceField {
    distance_with_margin(l, DEFAULT_MARGIN)
}

/// Minimal number of loop-edge crossings on a dual path to the outside of
/// the frame.
pub fn distance_with_margin(l: &Loop, margin: i64) -> DistanceField {
    let frame = Frame::around(l, margin.max(1));
    let counts = EdgeCounts::new(l, frame);
    let mut field = DistanceField::filled(frame, u64::MAX);
    let mut heap = BinaryHeap::new();
    for (i, p) in frame.points().enumerate() {
        if frame.on_boundary(p) {
            field.values[i] = 0;
            heap.push(Reverse((0u64, i)));
        }
    }
    while let Some(Reverse((d, i))) = heap.pop() {
        if d > field.values[i] {
            continue;
        }
        let p = frame.point(i);
        for (q, w) in dual_neighbours(&counts, p) {
            if let Some(j) = frame.index(q) {
                let nd = d + w;
                if nd < field.values[j] {
                    field.values[j] = nd;
                    heap.push(Reverse((nd, j)));
                }
            }
        }
    }
    field
}

fn dual_neighbours(counts: &EdgeCounts, p: Point) -> [(Point, u64); 4] {
    let east = p.offset(1, 0);
    let north = p.offset(0, 1);
    [
        (east, counts.east_into(east).1),
        (p.offset(-1, 0), counts.east_into(p).1),
        (north, counts.north_into(north).1),
        (p.offset(0, -1), counts.north_into(p).1),
    ]
}

/// A maximal set of plaquettes connected without crossing the loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    /// Sorted lower-left corners.
    pub plaquettes: Vec<Point>,
    pub exterior: bool,
    pub h: i64,
    pub d: u64,
}

impl Region {
    /// Number of unoriented plaquettes. For the exterior this counts only the
    /// part inside the frame.
    pub fn area(&self) -> usize {
        self.plaquettes.len()
    }

    /// Maximal number of symmetric layers, `(d − |h|) / 2`.
    pub fn layer_bound(&self) -> u64 {
        (self.d - self.h.unsigned_abs()) / 2
    }

    pub fn min_base(&self) -> Point {
        self.plaquettes[0]
    }
}

/// Height, distance and regions of one loop on a shared frame.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub height: HeightField,
    pub distance: DistanceField,
    /// Exterior first, then interior regions ordered by smallest base.
    pub regions: Vec<Region>,
}

impl Analysis {
    pub fn frame(&self) -> Frame {
        self.height.frame()
    }

    pub fn interior(&self) -> impl Iterator<Item = &Region> {
        self.regions.iter().filter(|r| !r.exterior)
    }

    pub fn support_area(&self) -> usize {
        self.interior().map(Region::area).sum()
    }
}

pub fn analyze(l: &Loop) -> Result<Analysis, GeometryError> {
    analyze_with_margin(l, DEFAULT_MARGIN)
}

pub fn analyze_with_margin(l: &Loop, margin: i64) -> Result<Analysis, GeometryError> {
    let height = height_with_margin(l, margin);
    let distance = distance_with_margin(l, margin);
    let frame = height.frame();
    let counts = EdgeCounts::new(l, frame);
    let mut label = vec![usize::MAX; frame.len()];
    let mut regions = Vec::new();
    for start in 0..frame.len() {
        if label[start] != usize::MAX {
            continue;
        }
        let id = regions.len();
        let mut members = Vec::new();
        let mut queue = VecDeque::from([start]);
        label[start] = id;
        while let Some(i) = queue.pop_front() {
            let p = frame.point(i);
            members.push(p);
            for (q, w) in dual_neighbours(&counts, p) {
                if w != 0 {
                    continue;
                }
                if let Some(j) = frame.index(q) {
                    if label[j] == usize::MAX {
                        label[j] = id;
                        queue.push_back(j);
                    }
                }
            }
        }
        members.sort_unstable();
        let first = members[0];
        let (h, d) = (height.get(first), distance.get(first));
        if let Some(&bad) = members.iter().find(|&&p| height.get(p) != h || distance.get(p) != d) {
            return Err(GeometryError::HdNotConstant { at: bad });
        }
        regions.push(Region {
            plaquettes: members,
            exterior: start == 0,
            h,
            d,
        });
    }
    if let Some(ext) = regions.first() {
        if ext.h != 0 || ext.d != 0 {
            return Err(GeometryError::HdNotConstant { at: ext.min_base() });
        }
    }
    let skip = usize::from(!regions.is_empty());
    regions[skip..].sort_by_key(Region::min_base);
    Ok(Analysis {
        height,
        distance,
        regions,
    })
}

/// Region decomposition; the exterior region comes first.
pub fn regions(l: &Loop) -> Result<Vec<Region>, GeometryError> {
    analyze(l).map(|a| a.regions)
}

/// Number of unoriented plaquettes not in the exterior region.
pub fn support_area(l: &Loop) -> usize {
    let d = distance(l);
    d.iter().filter(|&(_, v)| v > 0).count()
}

/// Balance by definition: for every positively oriented edge, the copies in
/// `ℓ` plus the `K`-weight of plaquettes through it equal the same count for
/// the inverse edge.
pub fn is_balanced(l: &Loop, k: &PlaquetteAssignment) -> bool {
    let mut net: BTreeMap<Edge, i64> = BTreeMap::new();
    let mut bump = |e: Edge, by: i64| {
        let u = e.unoriented().positive();
        let s = if e.is_positive() { by } else { -by };
        *net.entry(u).or_insert(0) += s;
    };
    for &e in l.edges() {
        bump(e, 1);
    }
    for (p, c) in k.iter() {
        for e in p.edges() {
            bump(e, i64::from(c));
        }
    }
    net.values().all(|&v| v == 0)
}

/// Balance through heights: `(ℓ, K)` is balanced exactly when
/// `K(p⁻¹) − K(p) = h_ℓ(p)` for every positive plaquette `p`.
pub fn is_balanced_by_height(l: &Loop, k: &PlaquetteAssignment) -> bool {
    let heights = sparse_height(l);
    let mut diffs: Vec<(Point, i64)> = Vec::with_capacity(k.support_len());
    for (p, c) in k.iter() {
        let c = i64::from(c);
        let signed = if p.is_positive() { -c } else { c };
        match diffs.last_mut() {
            Some((b, v)) if *b == p.base => *v += signed,
            _ => diffs.push((p.base, signed)),
        }
    }
    diffs.retain(|&(_, v)| v != 0);
    diffs == heights
}

/// Sum of heights of the loops in a string.
pub fn string_height(loops: &[Loop]) -> BTreeMap<Point, i64> {
    let mut out = BTreeMap::new();
    for l in loops {
        for (p, h) in height(l).iter().filter(|&(_, h)| h != 0) {
            *out.entry(p).or_insert(0) += h;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Sum of distances of the loops in a string.
pub fn string_distance(loops: &[Loop]) -> BTreeMap<Point, u64> {
    let mut out = BTreeMap::new();
    for l in loops {
        for (p, d) in distance(l).iter().filter(|&(_, d)| d != 0) {
            *out.entry(p).or_insert(0) += d;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(moves: &str) -> Loop {
        Loop::from_moves(Point::ORIGIN, moves).unwrap()
    }

    #[test]
    fn unit_plaquette_fields() {
        let p = lp("URDL");
        let h = height(&p);
        let d = distance(&p);
        assert_eq!(h.get(Point::ORIGIN), 1);
        assert_eq!(d.get(Point::ORIGIN), 1);
        assert_eq!(h.iter().filter(|&(_, v)| v != 0).count(), 1);
        let p2 = p.wind(2).unwrap();
        assert_eq!(height(&p2).get(Point::ORIGIN), 2);
        assert_eq!(distance(&p2).get(Point::ORIGIN), 2);
        assert_eq!(height(&p.inverse()).get(Point::ORIGIN), -1);
    }

    #[test]
    fn region_counts() {
        let a = analyze(&lp("URDL")).unwrap();
        assert_eq!(a.interior().count(), 1);
        assert_eq!(a.support_area(), 1);
        assert!(a.regions[0].exterior);
        // Two unit lobes touching at (1,1).
        let eight = lp("URURDLDL");
        let a = analyze(&eight).unwrap();
        assert_eq!(a.interior().map(Region::area).collect::<Vec<_>>(), [1, 1]);
        assert_eq!(support_area(&lp("UUURRDDDLL")), 6);
        assert_eq!(support_area(&Loop::null()), 0);
    }

    #[test]
    fn sparse_height_matches_field() {
        let l = lp("UURRDLDLLLURDR");
        let mut dense: Vec<(Point, i64)> = height(&l).iter().filter(|&(_, v)| v != 0).collect();
        dense.sort_unstable();
        assert_eq!(sparse_height(&l), dense);
    }

    #[test]
    fn balance_examples() {
        let p = Plaquette::positive(Point::ORIGIN);
        let l = p.as_loop();
        let mut k = PlaquetteAssignment::new();
        assert!(!is_balanced(&l, &k));
        assert!(!is_balanced_by_height(&l, &k));
        k.set(p.inverse(), 1);
        assert!(is_balanced(&l, &k));
        assert!(is_balanced_by_height(&l, &k));
        assert!(is_balanced(&Loop::null(), &PlaquetteAssignment::new()));
        k.add(Plaquette::positive(Point::new(3, 3)), 1);
        k.add(Plaquette::negative(Point::new(3, 3)), 1);
        assert!(is_balanced(&l, &k));
        assert!(is_balanced_by_height(&l, &k));
    }
}
