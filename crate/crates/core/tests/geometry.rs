mod common;

use common::arb_loop;
use proptest::prelude::*;
use wilson_core::geometry::{
    analyze, distance, height, height_column_major, is_balanced, is_balanced_by_height, Frame,
};
use wilson_core::{height_assignment, Dir, Edge, Loop, Plaquette, Point};

/// Winding number of `l` about the centre of the plaquette at `b`, from
/// summed turning angles.
fn angle_winding(l: &Loop, b: Point) -> i64 {
    let cx = b.x as f64 + 0.5;
    let cy = b.y as f64 + 0.5;
    let total: f64 = l
        .edges()
        .iter()
        .map(|e| {
            let (h, t) = (e.head(), e.tail);
            let a0 = (t.y as f64 - cy).atan2(t.x as f64 - cx);
            let a1 = (h.y as f64 - cy).atan2(h.x as f64 - cx);
            let mut d = a1 - a0;
            if d > std::f64::consts::PI {
                d -= std::f64::consts::TAU;
            } else if d < -std::f64::consts::PI {
                d += std::f64::consts::TAU;
            }
            d
        })
        .sum();
    (total / std::f64::consts::TAU).round() as i64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn height_is_minus_the_winding_number(l in arb_loop(16)) {
        let h = height(&l);
        for b in Frame::around(&l, 1).points() {
            prop_assert_eq!(h.get(b), -angle_winding(&l, b), "at {}", b);
        }
    }

    #[test]
    fn sweep_orders_agree(l in arb_loop(16)) {
        let a = height(&l);
        let b = height_column_major(&l, 1);
        for p in Frame::around(&l, 1).points() {
            prop_assert_eq!(a.get(p), b.get(p));
        }
    }

    #[test]
    fn distance_bounds_height(l in arb_loop(16)) {
        let h = height(&l);
        let d = distance(&l);
        let mult = l.edge_multiplicities();
        let frame = Frame::around(&l, 1);
        for p in frame.points() {
            prop_assert!(d.get(p) >= h.get(p).unsigned_abs());
            if frame.on_boundary(p) {
                prop_assert_eq!(d.get(p), 0);
            }
            let east = Edge::new(p.offset(1, 0), Dir::Up);
            let north = Edge::new(p.offset(0, 1), Dir::Right);
            for (q, e) in [(p.offset(1, 0), east), (p.offset(0, 1), north)] {
                let m = u64::from(mult.unoriented(e));
                prop_assert!(d.get(p).abs_diff(d.get(q)) <= m);
                prop_assert!(h.get(p).abs_diff(h.get(q)) <= m);
            }
        }
    }

    #[test]
    fn regions_partition_the_support(l in arb_loop(16)) {
        let an = analyze(&l).unwrap();
        let h = height(&l);
        let d = distance(&l);
        let mut seen = std::collections::BTreeSet::new();
        for r in an.interior() {
            for &p in &r.plaquettes {
                prop_assert!(seen.insert(p));
                prop_assert_eq!(h.get(p), r.h);
                prop_assert_eq!(d.get(p), r.d);
            }
        }
        prop_assert_eq!(seen.len(), an.support_area());
        let nonzero = Frame::around(&l, 1).points().filter(|&p| d.get(p) > 0).count();
        prop_assert_eq!(nonzero, an.support_area());
    }

    #[test]
    fn height_assignment_is_balanced(l in arb_loop(16)) {
        let k = height_assignment(&l);
        prop_assert!(is_balanced(&l, &k));
        prop_assert!(is_balanced_by_height(&l, &k));
    }

    #[test]
    fn balance_definitions_agree(
        l in arb_loop(12),
        layers in prop::collection::vec((-1i64..3, -1i64..3, any::<bool>(), 1u32..3), 0..4),
    ) {
        let mut k = height_assignment(&l);
        let start = l.start().unwrap();
        for (dx, dy, sign, c) in layers {
            let base = start.offset(dx, dy);
            let p = if sign { Plaquette::positive(base) } else { Plaquette::negative(base) };
            k.add(p, c);
        }
        prop_assert_eq!(is_balanced(&l, &k), is_balanced_by_height(&l, &k));
    }
}

#[test]
fn figure_eight_heights() {
    let l = common::lp("URRULDDL");
    let h = height(&l);
    assert_eq!(h.get(Point::new(0, 0)), 1);
    assert_eq!(h.get(Point::new(1, 1)), -1);
    assert_eq!(analyze(&l).unwrap().interior().count(), 2);
}
