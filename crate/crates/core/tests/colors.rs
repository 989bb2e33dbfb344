mod common;

use common::*;
use omegacanon::automata::isomorphic;
use omegacanon::blackwhite::{build_c_lector, lector_run_classifier, LectorVerdict};
use omegacanon::colors::{build_colorful_fdfa, color_states_procedure, Color, ColorContext};
use omegacanon::fdfa::NormalizationKind;
use omegacanon::fixtures::*;
use omegacanon::omega::{equivalent, sample_upwords, OmegaAcceptance, OmegaAutomaton};
use omegacanon::Limits;
use proptest::prelude::*;

fn ctx(m: &OmegaAutomaton) -> ColorContext {
    ColorContext::new(m, &Limits::default()).unwrap()
}

#[test]
fn finite_color_table() {
    let c = ctx(&inf_aa_fin_bb_dma());
    for (v, k) in [("a", 3), ("aa", 2), ("bb", 1), ("aabb", 1)] {
        assert_eq!(c.finite_color(&[], &w(v)), Color::Value(k), "{v}");
    }
}

#[test]
fn infinite_color_table() {
    let c = ctx(&inf_aa_fin_bb_dma());
    for (v, k) in [("b", 1), ("abaa", 2), ("ab", 3), ("a", 2)] {
        assert_eq!(c.infinite_color(&up("", v)), k, "{v}");
    }
}

#[test]
fn table_agrees_with_brute_force() {
    let c = ctx(&inf_aa_fin_bb_dma());
    let bf = c.brute_force(4, 3).unwrap();
    for (v, k) in [("a", 3), ("aa", 2), ("bb", 1), ("aabb", 1)] {
        assert_eq!(bf.color(&[], &w(v)), Color::Value(k), "{v}");
    }
}

#[test]
fn dma_and_dpa_give_the_same_colors() {
    let a = ctx(&inf_aa_fin_bb_dma());
    let b = ctx(&inf_aa_fin_bb_dpa());
    for x in sample_upwords(&ab(), 2, 5) {
        assert_eq!(a.finite_color(&x.spoke, &x.cycle), b.finite_color(&x.spoke, &x.cycle));
        assert_eq!(a.infinite_color(&x), b.infinite_color(&x));
    }
}

#[test]
fn irrelevant_periods_are_bottom() {
    // b·Σ^ω: no nonempty period returns to the class of ε.
    let m = OmegaAutomaton::new(
        ab_structure(0, &[[2, 1], [1, 1], [2, 2]]),
        OmegaAcceptance::Parity(vec![1, 0, 1]),
    )
    .unwrap();
    let c = ctx(&m);
    assert_eq!(c.finite_color(&[], &w("a")), Color::Bottom);
    assert!(!c.is_relevant(&[], &w("ab")));
    assert_eq!(c.finite_color(&w("b"), &w("a")), Color::Value(0));
    assert_eq!(Color::Bottom.to_string(), "-inf");
    assert!(Color::Bottom < Color::Value(0));
    assert_eq!(c.finite_color_clamped(&[], &w("a")), c.mincolor_of(&[]));
    let bf = c.brute_force(4, 3).unwrap();
    assert_eq!(bf.color(&[], &w("a")), Color::Bottom);
    assert_eq!(bf.color(&[], &w("ba")), Color::Bottom);
}

#[test]
fn colorful_fdfa_matches_the_fixture() {
    let c = ctx(&inf_aa_fin_bb_dma());
    let cf = build_colorful_fdfa(&c).unwrap();
    let (fixture, colors) = colorful_fdfa_inf_aa_fin_bb();
    assert_eq!(cf.fdfa().leading().state_count(), 1);
    assert_eq!(cf.fdfa().progress(0).state_count(), 6);
    let mut got = cf.colors(0).to_vec();
    got.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(got, vec![3, 3, 3, 2, 2, 1]);
    assert!(isomorphic(
        cf.fdfa().progress(0).structure(),
        cf.colors(0),
        fixture.progress(0).structure(),
        &colors
    ));
    assert!(cf.fdfa().equivalent(&fixture).unwrap());
    assert_eq!(color_states_procedure(&cf).unwrap(), vec![cf.colors(0).to_vec()]);
    assert_eq!(cf.max_color(), 3);
}

#[test]
fn colorful_fdfa_of_the_two_class_language() {
    let c = ctx(&inf_b_or_even_b_dpa());
    let cf = build_colorful_fdfa(&c).unwrap();
    assert_eq!(cf.fdfa().leading().state_count(), 2);
    assert_eq!(color_states_procedure(&cf).unwrap(), vec![cf.colors(0).to_vec(), cf.colors(1).to_vec()]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn infinite_color_parity_is_membership(m in parity(4, 3), x in upword(3, 4)) {
        let c = ctx(&m);
        prop_assert_eq!(c.infinite_color(&x).is_multiple_of(2), lasso_accepts(&m, &x));
    }

    #[test]
    fn infinite_color_is_read_on_a_persistent_decomposition(m in parity(4, 3), x in upword(2, 3)) {
        let c = ctx(&m);
        let d = c.periodic().normalize(&x, NormalizationKind::Persistent);
        prop_assert!(c.is_reliable(&d.spoke, &d.cycle));
        // every further power keeps the same color
        for i in 1..4 {
            let v = d.cycle.repeat(i);
            prop_assert_eq!(c.finite_color(&d.spoke, &v), Color::Value(c.infinite_color(&x)));
        }
    }

    #[test]
    fn colorful_fdfa_recognizes_the_language(m in parity(4, 3)) {
        let c = ctx(&m);
        let cf = build_colorful_fdfa(&c).unwrap();
        prop_assert!(cf.fdfa().check_saturation_bounded(2, 4).unwrap().is_none());
        for x in sample_upwords(&ab(), 2, 4) {
            prop_assert_eq!(cf.fdfa().accepts(&x), lasso_accepts(&m, &x), "{}", x);
            prop_assert_eq!(cf.color_of(&x.spoke, &x.cycle), c.finite_color_clamped(&x.spoke, &x.cycle));
        }
        let labels: Vec<Vec<u32>> = (0..cf.fdfa().leading().state_count()).map(|q| cf.colors(q).to_vec()).collect();
        prop_assert_eq!(color_states_procedure(&cf).unwrap(), labels);
    }

    #[test]
    fn colorful_fdfa_is_a_language_invariant(m in parity(3, 3), pad in 1usize..3) {
        let a = build_colorful_fdfa(&ctx(&m)).unwrap();
        let b = build_colorful_fdfa(&ctx(&as_muller(&m).with_unreachable_padding(pad))).unwrap();
        prop_assert!(isomorphic(a.fdfa().leading(), &vec![0; a.fdfa().leading().state_count()],
            b.fdfa().leading(), &vec![0; b.fdfa().leading().state_count()]));
        for q in 0..a.fdfa().leading().state_count() {
            let v = a.fdfa().leading().access_words()[q].clone().unwrap();
            let r = b.fdfa().leading_state(&v);
            prop_assert!(isomorphic(a.fdfa().progress(q).structure(), a.colors(q),
                b.fdfa().progress(r).structure(), b.colors(r)));
        }
    }

    #[test]
    fn lector_contract(m in parity(4, 3), x in upword(2, 4)) {
        let c = ctx(&m);
        let cf = build_colorful_fdfa(&c).unwrap();
        let k = c.infinite_color(&x);
        for bound in 0..4 {
            let l = build_c_lector(&c, &cf, bound);
            let expect = if k <= bound { LectorVerdict::InfinitelyOften } else { LectorVerdict::FinitelyOften };
            prop_assert_eq!(lector_run_classifier(&l, &x), expect);
        }
    }

    #[test]
    fn brute_force_agrees_on_small_automata(m in parity(3, 2)) {
        let c = ctx(&m);
        let bf = c.brute_force(5, 4).unwrap();
        for u in ab().words_between(0, 1) {
            for v in ab().words_between(1, 3) {
                prop_assert_eq!(bf.color(&u, &v), c.finite_color(&u, &v), "u={:?} v={:?}", u, v);
            }
        }
    }
}

#[test]
fn equivalent_sources_share_colors() {
    assert!(equivalent(&inf_aa_dba(), &inf_aa_dpa(), &Limits::default()).unwrap().is_none());
    let a = ctx(&inf_aa_dba());
    let b = ctx(&inf_aa_dpa());
    for x in sample_upwords(&ab(), 2, 5) {
        assert_eq!(a.finite_color(&x.spoke, &x.cycle), b.finite_color(&x.spoke, &x.cycle));
    }
}
