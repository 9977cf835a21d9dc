mod common;

use common::{arb_loop, lp};
use num_traits::Zero;
use proptest::prelude::*;
use wilson_core::canonical::is_canonical;
use wilson_core::geometry::Frame;
use wilson_core::lattice::{KeySymmetry, LatticeSymmetry};
use wilson_core::{height_assignment, BetaPolynomial, Coefficient, Edge, Engine, Loop, Plaquette, Point, Strategy};

fn phi(l: &Loop) -> BetaPolynomial {
    Engine::new(Strategy::default())
        .wilson_polynomial(l)
        .unwrap()
        .polynomial
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coefficient_is_independent_of_the_edge(l in arb_loop(14)) {
        let k = height_assignment(&l);
        let reference = Engine::new(Strategy::First).coefficient(&l, &k).unwrap();
        for strategy in Strategy::ALL {
            for root in 0..l.len() {
                let c = Engine::new(strategy).coefficient_at_root(&l, &k, root).unwrap();
                prop_assert_eq!(&c, &reference, "{} root {}", strategy, root);
            }
        }
    }

    #[test]
    fn backtracks_do_not_change_phi(l in arb_loop(14), at in 0usize..64, dir in 0u8..4) {
        let mut w: Vec<Edge> = l.edges().to_vec();
        let i = at % (w.len() + 1);
        let tail = if i == 0 { w[0].tail } else { w[i - 1].head() };
        let e = Edge::new(tail, wilson_core::Dir::from_move(common::MOVES[usize::from(dir)]).unwrap());
        w.splice(i..i, [e, e.inverse()]);
        prop_assert_eq!(phi(&Loop::new(w).unwrap()), phi(&l));
    }

    #[test]
    fn phi_is_a_lattice_invariant(l in arb_loop(14), s in 0usize..8) {
        let p = phi(&l);
        prop_assert_eq!(&phi(&LatticeSymmetry::ALL[s].apply_loop(&l)), &p);
        prop_assert_eq!(&phi(&l.inverse()), &p);
        prop_assert!(p.coefficient(0).is_zero());
    }

    #[test]
    fn dihedral_memo_keys_agree(l in arb_loop(14)) {
        let mut plain = Engine::new(Strategy::default());
        let mut folded = Engine::new(Strategy::default()).with_key_symmetry(KeySymmetry::Dihedral);
        prop_assert_eq!(
            folded.wilson_polynomial(&l).unwrap().polynomial,
            plain.wilson_polynomial(&l).unwrap().polynomial
        );
    }

    #[test]
    fn non_canonical_layers_vanish(l in arb_loop(8), pick in 0usize..64, c in 1u32..3) {
        let frame = Frame::around(&l, 1);
        let base = frame.point(pick % frame.len());
        let mut k = height_assignment(&l);
        k.add(Plaquette::positive(base), c);
        k.add(Plaquette::negative(base), c);
        let mut engine = Engine::new(Strategy::default());
        let report = engine.vanishing_check(&l, &k).unwrap();
        prop_assert!(!report.is_violation());
        if !is_canonical(&l, &k).unwrap() {
            prop_assert_eq!(report.coefficient, Coefficient::zero());
        }
    }
}

#[test]
fn plaquette_powers_vanish() {
    for n in 2..=4 {
        let l = lp("URDL").wind(n).unwrap();
        let c = Engine::new(Strategy::default())
            .coefficient(&l, &height_assignment(&l))
            .unwrap();
        assert_eq!(c, Coefficient::zero(), "n = {n}");
    }
    let l = lp("URDL");
    let mut k = height_assignment(&l);
    k.add(Plaquette::positive(Point::new(3, 0)), 1);
    k.add(Plaquette::negative(Point::new(3, 0)), 1);
    assert_eq!(
        Engine::new(Strategy::default()).coefficient(&l, &k).unwrap(),
        Coefficient::zero()
    );
}

#[test]
fn small_catalogue() {
    assert_eq!(phi(&lp("URDL")), BetaPolynomial::from_int_terms(&[(1, 1)]));
    assert_eq!(phi(&lp("URRULDDL")), BetaPolynomial::from_int_terms(&[(2, 1)]));
    assert_eq!(
        phi(&lp("URRRDLLLURDRULDL")),
        BetaPolynomial::from_int_terms(&[(3, 1), (5, -1)])
    );
    assert_eq!(
        phi(&lp("URRRRDLLLLURRRDLLLURRDLL")),
        BetaPolynomial::from_int_terms(&[(9, 3)])
    );
    assert_eq!(phi(&Loop::new(Vec::new()).unwrap()), BetaPolynomial::one());
}
