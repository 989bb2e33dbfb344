mod common;

use common::*;
use omegacanon::colors::{build_colorful_fdfa, ColorContext};
use omegacanon::fdfa::{AcceptanceMode, Fdfa};
use omegacanon::fixtures::*;
use omegacanon::omega::periodic_fdfa;
use omegacanon::persistent::{diameter, is_persistent, persistent_chain_witness, Polarity};
use omegacanon::wagner::inclusion_measures;
use omegacanon::Limits;
use proptest::prelude::*;

fn pair(f: &Fdfa) -> (u32, u32) {
    let d = diameter(f, &Limits::default()).unwrap();
    (d.d_plus, d.d_minus)
}

/// Persistence read off the definition: back in the class, the progress run of
/// `v` ends in a state fixed by `v`, and `v` permutes the image of its own map
/// (the image does not shrink when `v` is applied twice).
fn persistent_oracle(f: &Fdfa, u: &[usize], v: &[usize]) -> bool {
    if v.is_empty() {
        return false;
    }
    let q = f.leading().run(f.leading().initial(), u);
    if f.leading().run(q, v) != q {
        return false;
    }
    let p = f.progress(q).structure();
    let e: Vec<usize> = (0..p.state_count()).map(|k| p.run(k, v)).collect();
    let r = e[p.initial()];
    if e[r] != r {
        return false;
    }
    let mut img: Vec<usize> = e.clone();
    img.sort_unstable();
    img.dedup();
    let mut img2: Vec<usize> = img.iter().map(|&t| e[t]).collect();
    img2.sort_unstable();
    img2.dedup();
    img.len() == img2.len()
}

#[test]
fn fixture_diameters() {
    let (colorful, _) = colorful_fdfa_inf_aa_fin_bb();
    assert_eq!(pair(&syntactic_fdfa_inf_aa_fin_bb()), (2, 3));
    assert_eq!(pair(&colorful), (2, 3));
    assert_eq!(pair(&inf_aa_fdfa()), (1, 2));
    assert_eq!(pair(&universal_fdfa()), (1, 0));
    assert_eq!(pair(&even_b_fdfa_normalized()), pair(&even_b_fdfa_duo()));
}

#[test]
fn periodic_fdfa_diameters() {
    let l = Limits::default();
    assert_eq!(pair(&periodic_fdfa(&inf_aa_fin_bb_dma(), &l).unwrap()), (2, 3));
    assert_eq!(pair(&periodic_fdfa(&inf_aa_fin_bb_dpa(), &l).unwrap()), (2, 3));
    assert_eq!(pair(&periodic_fdfa(&inf_aa_dba(), &l).unwrap()), (1, 2));
    assert_eq!(pair(&periodic_fdfa(&universal_dba(), &l).unwrap()), (1, 0));
}

#[test]
fn chain_witnesses() {
    let l = Limits::default();
    let (colorful, _) = colorful_fdfa_inf_aa_fin_bb();
    let c = persistent_chain_witness(&colorful, Polarity::Rejecting, 3, &l).unwrap().unwrap();
    assert!(c.spoke.is_empty());
    assert_eq!(c.periods.len(), 3);
    let mut expect = false;
    for (i, v) in c.periods.iter().enumerate() {
        assert!(persistent_oracle(&colorful, &c.spoke, v));
        assert_eq!(colorful.accepts_decomposition(&c.spoke, v), expect);
        if i > 0 {
            assert!(v.starts_with(&c.periods[i - 1]) && v.len() > c.periods[i - 1].len());
        }
        expect = !expect;
    }
    assert!(persistent_chain_witness(&colorful, Polarity::Rejecting, 4, &l).unwrap().is_none());
    assert!(persistent_chain_witness(&colorful, Polarity::Accepting, 2, &l).unwrap().is_some());
    assert!(persistent_chain_witness(&colorful, Polarity::Accepting, 3, &l).unwrap().is_none());

    let f = inf_aa_fdfa();
    let c = persistent_chain_witness(&f, Polarity::Rejecting, 2, &l).unwrap().unwrap();
    assert_eq!(c.periods.len(), 2);
    assert!(persistent_chain_witness(&f, Polarity::Rejecting, 3, &l).unwrap().is_none());
}

#[test]
fn persistence_on_fixtures() {
    let f = inf_aa_fdfa();
    assert!(is_persistent(&f, &[], &w("aa")));
    assert!(is_persistent(&f, &[], &w("b")));
    assert!(!is_persistent(&f, &[], &w("a")));
    assert!(!is_persistent(&f, &[], &[]));
    let (colorful, _) = colorful_fdfa_inf_aa_fin_bb();
    for x in omegacanon::omega::sample_upwords(&ab(), 2, 5) {
        assert_eq!(
            is_persistent(&colorful, &x.spoke, &x.cycle),
            persistent_oracle(&colorful, &x.spoke, &x.cycle),
            "{x}"
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn persistence_matches_definition(m in parity(4, 3), x in upword(3, 5)) {
        let f = periodic_fdfa(&m, &Limits::default()).unwrap();
        prop_assert_eq!(is_persistent(&f, &x.spoke, &x.cycle), persistent_oracle(&f, &x.spoke, &x.cycle));
    }

    #[test]
    fn diameter_equals_inclusion_measures(m in parity(4, 3)) {
        let l = Limits::default();
        let wm = inclusion_measures(&m, &l).unwrap();
        let f = periodic_fdfa(&m, &l).unwrap();
        for mode in [AcceptanceMode::Exact, AcceptanceMode::Normalized, AcceptanceMode::DuoNormalized] {
            prop_assert_eq!(pair(&f.with_mode(mode)), (wm.m_plus, wm.m_minus));
        }
        let ctx = ColorContext::new(&m, &l).unwrap();
        let colorful = build_colorful_fdfa(&ctx).unwrap();
        prop_assert_eq!(pair(colorful.fdfa()), (wm.m_plus, wm.m_minus));
    }

    #[test]
    fn chain_witnesses_exist_up_to_the_diameter(m in parity(4, 3)) {
        let l = Limits::default();
        let f = periodic_fdfa(&m, &l).unwrap();
        let d = diameter(&f, &l).unwrap();
        for (pol, k) in [(Polarity::Accepting, d.d_plus), (Polarity::Rejecting, d.d_minus)] {
            if k > 0 {
                prop_assert!(persistent_chain_witness(&f, pol, k, &l).unwrap().is_some());
            }
            prop_assert!(persistent_chain_witness(&f, pol, k + 1, &l).unwrap().is_none());
        }
    }
}
