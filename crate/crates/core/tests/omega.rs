mod common;

use common::*;
use omegacanon::fixtures::*;
use omegacanon::omega::{
    canonical_up, equivalent, leading_congruence, periodic_fdfa, primitive_root, sample_upwords, state_equiv,
    OmegaAcceptance, OmegaAutomaton,
};
use omegacanon::{Error, Limits};
use proptest::prelude::*;

#[test]
fn upword_rejects_empty_period() {
    assert!(omegacanon::omega::UpWord::new(w("a"), vec![]).is_err());
}

#[test]
fn canonical_form_identifies_rotations_and_powers() {
    assert_eq!(canonical_up(&up("", "ab")), canonical_up(&up("a", "ba")));
    assert_eq!(canonical_up(&up("", "abab")), canonical_up(&up("ab", "ab")));
    assert_ne!(canonical_up(&up("", "ab")), canonical_up(&up("", "ba")));
    assert_eq!(primitive_root(&w("abab")), &w("ab")[..]);
}

#[test]
fn fixture_memberships() {
    let m = inf_aa_fin_bb_dma();
    assert!(m.accepts_up(&up("", "a")));
    assert!(m.accepts_up(&up("", "abaa")));
    assert!(!m.accepts_up(&up("", "ab")));
    assert!(!m.accepts_up(&up("", "b")));
    assert!(!m.accepts_up(&up("", "aabb")));
    let f3 = inf_b_or_even_b_dpa();
    assert!(f3.accepts_up(&up("", "a")));
    assert!(!f3.accepts_up(&up("b", "a")));
    assert!(f3.accepts_up(&up("bb", "a")));
    assert!(f3.accepts_up(&up("", "ab")));
}

#[test]
fn invalid_acceptance_is_rejected() {
    let s = inf_aa_dba().structure().clone();
    assert!(OmegaAutomaton::new(s.clone(), OmegaAcceptance::Buchi(vec![7])).is_err());
    assert!(OmegaAutomaton::new(s.clone(), OmegaAcceptance::Parity(vec![0])).is_err());
    assert!(OmegaAutomaton::new(s.clone(), OmegaAcceptance::Muller(vec![vec![]])).is_err());
    assert!(OmegaAutomaton::new(s, OmegaAcceptance::Muller(vec![vec![0], vec![0]])).is_err());
}

#[test]
fn accepting_scc_requires_an_scc() {
    let m = inf_aa_fin_bb_dma();
    assert!(matches!(m.accepting_scc(&[0, 3]), Err(Error::Contract(_))));
    assert_eq!(m.accepting_scc(&[3]), Ok(true));
}

#[test]
fn dma_and_dpa_fixtures_agree() {
    let l = Limits::default();
    assert_eq!(equivalent(&inf_aa_fin_bb_dma(), &inf_aa_fin_bb_dpa(), &l).unwrap(), None);
    assert_eq!(equivalent(&inf_aa_dba(), &inf_aa_dpa(), &l).unwrap(), None);
    let x = equivalent(&inf_aa_fin_bb_dma(), &inf_aa_dba(), &l).unwrap().expect("languages differ");
    assert_ne!(inf_aa_fin_bb_dma().accepts_up(&x), inf_aa_dba().accepts_up(&x));
}

#[test]
fn periodic_progress_sizes() {
    let l = Limits::default();
    let sizes = |m: &OmegaAutomaton| -> Vec<usize> {
        periodic_fdfa(m, &l).unwrap().progress_all().iter().map(|p| p.state_count()).collect()
    };
    assert_eq!(sizes(&inf_aa_fin_bb_dma()), vec![10]);
    assert_eq!(sizes(&inf_aa_dba()), vec![6]);
    assert_eq!(sizes(&inf_b_or_even_b_dpa()), vec![2, 2]);
    assert_eq!(sizes(&universal_dba()), vec![2]);
}

#[test]
fn muller_equivalence_respects_the_subset_budget() {
    let l = Limits { subset_budget: 1, ..Limits::default() };
    let r = equivalent(&inf_aa_fin_bb_dma(), &inf_aa_fin_bb_dma(), &l);
    assert!(matches!(r, Err(Error::Capacity { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn lasso_semantics(m in parity(5, 3), x in upword(3, 4)) {
        prop_assert_eq!(m.accepts_up(&x), lasso_accepts(&m, &x));
    }

    #[test]
    fn membership_ignores_the_chosen_decomposition(m in parity(4, 3), x in upword(3, 3), i in 0..3usize, j in 1..3usize) {
        prop_assert_eq!(m.accepts_up(&x), m.accepts_up(&x.shifted(i, j)));
    }

    #[test]
    fn equivalence_witness_replays(a in parity(3, 3), b in parity(3, 3)) {
        let l = Limits::default();
        match equivalent(&a, &b, &l).unwrap() {
            Some(x) => prop_assert_ne!(a.accepts_up(&x), b.accepts_up(&x)),
            None => {
                for x in sample_upwords(&ab(), 3, 4) {
                    prop_assert_eq!(a.accepts_up(&x), b.accepts_up(&x));
                }
            }
        }
    }

    #[test]
    fn muller_translation_is_equivalent(m in parity(4, 3)) {
        let l = Limits::default();
        let mm = as_muller(&m);
        prop_assert_eq!(equivalent(&m, &mm, &l).unwrap(), None);
        prop_assert_eq!(equivalent(&m, &m.with_unreachable_padding(2), &l).unwrap(), None);
    }

    #[test]
    fn leading_congruence_matches_residuals(m in parity(4, 2)) {
        let l = Limits::default();
        let lead = leading_congruence(&m, &l).unwrap();
        let s = m.structure();
        let words = ab().words_between(0, 3);
        for x in &words {
            for y in &words {
                let same = lead.class_of_word(x) == lead.class_of_word(y);
                let eq = state_equiv(&m, s.run(s.initial(), x), s.run(s.initial(), y), &l).unwrap();
                prop_assert_eq!(same, eq);
            }
        }
    }

    #[test]
    fn periodic_fdfa_recognizes_the_language(m in parity(4, 3)) {
        let l = Limits::default();
        let f = periodic_fdfa(&m, &l).unwrap();
        for x in sample_upwords(&ab(), 2, 4) {
            prop_assert_eq!(f.accepts(&x), m.accepts_up(&x));
        }
    }
}
