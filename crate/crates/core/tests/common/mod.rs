#![allow(dead_code)]

use omegacanon::automata::{AutomatonStructure, Dfa, Word};
use omegacanon::fixtures::ab;
use omegacanon::omega::{OmegaAcceptance, OmegaAutomaton, UpWord};
use proptest::prelude::*;


pub fn w(s: &str) -> Word {
    ab().parse_word(s).unwrap()
}

pub fn up(u: &str, v: &str) -> UpWord {
    UpWord::new(w(u), w(v)).unwrap()
}

pub fn structure(n: usize) -> impl Strategy<Value = AutomatonStructure> {
    prop::collection::vec(prop::collection::vec(0..n, 2), n)
        .prop_map(|delta| AutomatonStructure::new(ab(), 0, delta).unwrap())
}

pub fn dfa(max_states: usize) -> impl Strategy<Value = Dfa> {
    (1..=max_states).prop_flat_map(|n| {
        (structure(n), prop::collection::vec(any::<bool>(), n)).prop_map(|(s, f)| Dfa::from_flags(s, f))
    })
}

pub fn parity(max_states: usize, max_color: u32) -> impl Strategy<Value = OmegaAutomaton> {
    (1..=max_states).prop_flat_map(move |n| {
        (structure(n), prop::collection::vec(0..=max_color, n))
            .prop_map(|(s, k)| OmegaAutomaton::new(s, OmegaAcceptance::Parity(k)).unwrap())
    })
}

pub fn buchi(max_states: usize) -> impl Strategy<Value = OmegaAutomaton> {
    (1..=max_states).prop_flat_map(|n| {
        (structure(n), prop::collection::vec(any::<bool>(), n)).prop_map(|(s, f)| {
            let f = (0..f.len()).filter(|&q| f[q]).collect();
            OmegaAutomaton::new(s, OmegaAcceptance::Buchi(f)).unwrap()
        })
    })
}

/// Muller automaton whose table lists exactly the subsets of states the
/// given automaton accepts as infinity sets.
pub fn as_muller(m: &OmegaAutomaton) -> OmegaAutomaton {
    let n = m.state_count();
    let table = (1u32..(1 << n))
        .map(|mask| (0..n).filter(|&q| mask >> q & 1 == 1).collect::<Vec<_>>())
        .filter(|set| m.accepts_set(set))
        .collect();
    OmegaAutomaton::new(m.structure().clone(), OmegaAcceptance::Muller(table)).unwrap()
}

pub fn upword(max_u: usize, max_v: usize) -> impl Strategy<Value = UpWord> {
    (prop::collection::vec(0..2usize, 0..=max_u), prop::collection::vec(0..2usize, 1..=max_v))
        .prop_map(|(u, v)| UpWord::new(u, v).unwrap())
}

/// Literal lasso simulation: iterate the period until the state at period
/// boundaries repeats, then collect everything visited on the loop.
pub fn lasso_accepts(m: &OmegaAutomaton, x: &UpWord) -> bool {
    let s = m.structure();
    let mut q = s.run(s.initial(), &x.spoke);
    let mut boundary = Vec::new();
    while !boundary.contains(&q) {
        boundary.push(q);
        q = s.run(q, &x.cycle);
    }
    let mut inf = Vec::new();
    let start = q;
    loop {
        for &a in &x.cycle {
            q = s.succ(q, a);
            inf.push(q);
        }
        if q == start {
            break;
        }
    }
    inf.sort_unstable();
    inf.dedup();
    m.accepts_set(&inf)
}
