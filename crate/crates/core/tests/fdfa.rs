mod common;

use common::*;
use omegacanon::fdfa::{AcceptanceMode, Fdfa, NormalizationKind};
use omegacanon::fixtures::*;
use omegacanon::omega::{canonical_up, equivalent, periodic_fdfa, sample_upwords, UpWord};
use omegacanon::Limits;
use proptest::prelude::*;

const MODES: [AcceptanceMode; 3] = [AcceptanceMode::Exact, AcceptanceMode::Normalized, AcceptanceMode::DuoNormalized];

#[test]
fn normalized_fdfa_accepts_a_omega_directly() {
    let f1 = even_b_fdfa_normalized();
    let x = up("", "a");
    assert!(f1.is_normalized(&x.spoke, &x.cycle, NormalizationKind::Normalized));
    assert_eq!(f1.normalize(&x, NormalizationKind::Normalized), x);
    assert!(f1.accepts(&x));
}

#[test]
fn duo_fdfa_needs_the_second_power() {
    let f2 = even_b_fdfa_duo();
    let x = up("", "a");
    assert!(!f2.with_mode(AcceptanceMode::Normalized).accepts(&x));
    assert_eq!(f2.normalize(&x, NormalizationKind::DuoNormalized), up("", "aa"));
    assert!(f2.accepts(&x));
    // persistent-mode reading agrees
    assert!(f2.accepts_persistent_mode(&x));
}

#[test]
fn inf_aa_fdfa_chain_alternates() {
    let f = inf_aa_fdfa();
    let mut last = None;
    for v in ["a", "ab", "abaa"] {
        assert!(f.is_normalized(&[], &w(v), NormalizationKind::DuoNormalized), "{v}");
        let acc = f.accepts_decomposition(&[], &w(v));
        assert_ne!(Some(acc), last);
        last = Some(acc);
    }
}

#[test]
fn normalization_is_the_least_shift() {
    let f = syntactic_fdfa_inf_aa_fin_bb();
    for x in sample_upwords(&ab(), 2, 3) {
        for kind in [NormalizationKind::Normalized, NormalizationKind::DuoNormalized, NormalizationKind::Persistent] {
            let got = f.normalize(&x, kind);
            let first = (0..=1)
                .flat_map(|i| (1..=40).map(move |j| (i, j)))
                .map(|(i, j)| x.shifted(i, j))
                .find(|d| f.is_normalized(&d.spoke, &d.cycle, kind))
                .unwrap();
            assert_eq!(got, first);
        }
    }
}

#[test]
fn operations_need_matching_modes_and_alphabets() {
    let a = even_b_fdfa_normalized();
    let b = even_b_fdfa_duo();
    assert!(a.intersect(&b).is_err());
    assert!(a.with_mode(AcceptanceMode::DuoNormalized).intersect(&b).is_ok());
    assert!(a.contains(&b).is_ok());
}

#[test]
fn saturation_of_fixtures() {
    for (name, f) in suite_fdfas() {
        assert_eq!(f.check_saturation_bounded(2, 5).unwrap(), None, "{name}");
    }
    let ce = unsaturated_fdfa().check_saturation_bounded(2, 5).unwrap().expect("gadget is unsaturated");
    assert_eq!(canonical_up(&ce.accepted), canonical_up(&ce.rejected));
    assert!(unsaturated_fdfa().check_saturation_bounded(0, 5).is_err());
}

#[test]
fn syntactic_and_colorful_fixtures_are_equivalent() {
    let fs = syntactic_fdfa_inf_aa_fin_bb();
    let (fc, _) = colorful_fdfa_inf_aa_fin_bb();
    assert!(fs.equivalent(&fc).unwrap());
    assert!(fc.equivalent(&fs).unwrap());
    let m = inf_aa_fin_bb_dma();
    for x in sample_upwords(&ab(), 2, 5) {
        assert_eq!(fs.accepts(&x), m.accepts_up(&x));
        assert_eq!(fc.accepts(&x), m.accepts_up(&x));
    }
}

#[test]
fn empty_intersection_with_complement() {
    for (_, f) in suite_fdfas() {
        let g = f.intersect(&f.complement()).unwrap();
        assert_eq!(g.emptiness_witness(), None);
        assert!(f.union(&f.complement()).unwrap().is_universal());
    }
    assert!(universal_fdfa().is_universal());
    assert!(universal_fdfa().complement().is_empty());
}

fn periodic_in(m: &omegacanon::omega::OmegaAutomaton, mode: usize) -> Fdfa {
    periodic_fdfa(m, &Limits::default()).unwrap().with_mode(MODES[mode])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn periodic_fdfa_in_every_mode(m in parity(4, 3)) {
        let l = Limits::default();
        let f = periodic_fdfa(&m, &l).unwrap();
        prop_assert_eq!(f.check_saturation_bounded(2, 4).unwrap(), None);
        for x in sample_upwords(&ab(), 2, 4) {
            let expected = m.accepts_up(&x);
            for mode in MODES {
                prop_assert_eq!(f.with_mode(mode).accepts(&x), expected);
            }
            prop_assert_eq!(f.accepts_persistent_mode(&x), expected);
        }
    }

    #[test]
    fn boolean_operations_match_the_sources(a in parity(3, 2), b in parity(3, 2), mode in 0..3usize, x in upword(3, 4)) {
        let (fa, fb) = (periodic_in(&a, mode), periodic_in(&b, mode));
        let (ia, ib) = (a.accepts_up(&x), b.accepts_up(&x));
        prop_assert_eq!(fa.complement().accepts(&x), !ia);
        prop_assert_eq!(fa.intersect(&fb).unwrap().accepts(&x), ia && ib);
        prop_assert_eq!(fa.union(&fb).unwrap().accepts(&x), ia || ib);
    }

    #[test]
    fn decision_witnesses_replay(a in parity(3, 2), b in parity(3, 2), mode in 0..3usize, mode_b in 0..3usize) {
        let (fa, fb) = (periodic_in(&a, mode), periodic_in(&b, mode_b));
        let l = Limits::default();
        let samples = sample_upwords(&ab(), 2, 4);
        match fa.emptiness_witness() {
            Some(x) => prop_assert!(fa.accepts(&x) && a.accepts_up(&x)),
            None => prop_assert!(samples.iter().all(|x| !a.accepts_up(x))),
        }
        match fa.universality_counterexample() {
            Some(x) => prop_assert!(!fa.accepts(&x)),
            None => prop_assert!(samples.iter().all(|x| a.accepts_up(x))),
        }
        match fa.containment_counterexample(&fb).unwrap() {
            Some(x) => prop_assert!(b.accepts_up(&x) && !a.accepts_up(&x)),
            None => prop_assert!(samples.iter().all(|x| !b.accepts_up(x) || a.accepts_up(x))),
        }
        let e = fa.equivalence_counterexample(&fb).unwrap();
        prop_assert_eq!(e.is_none(), equivalent(&a, &b, &l).unwrap().is_none());
        if let Some(x) = e {
            prop_assert_ne!(a.accepts_up(&x), b.accepts_up(&x));
        }
    }

    #[test]
    fn de_morgan(a in parity(3, 2), b in parity(3, 2), mode in 0..3usize) {
        let (fa, fb) = (periodic_in(&a, mode), periodic_in(&b, mode));
        let l = fa.intersect(&fb).unwrap().complement();
        let r = fa.complement().union(&fb.complement()).unwrap();
        prop_assert!(l.equivalent(&r).unwrap());
        prop_assert!(fa.complement().complement().equivalent(&fa).unwrap());
    }

    #[test]
    fn normalization_keeps_the_word(a in parity(4, 3), x in upword(3, 4)) {
        let f = periodic_fdfa(&a, &Limits::default()).unwrap();
        for kind in [NormalizationKind::Normalized, NormalizationKind::DuoNormalized, NormalizationKind::Persistent] {
            let d: UpWord = f.normalize(&x, kind);
            prop_assert_eq!(canonical_up(&d), canonical_up(&x));
            prop_assert!(f.is_normalized(&d.spoke, &d.cycle, kind));
        }
    }
}
