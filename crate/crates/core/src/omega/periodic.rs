use super::OmegaAutomaton;
use crate::automata::{AutomatonStructure, Dfa};
use crate::error::{Error, Limits, Result};
use crate::fdfa::{AcceptanceMode, Fdfa};
use std::collections::HashMap;

/// For every source state: where a word leads and which states it touches on the way.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Profile {
    entries: Vec<(usize, u64)>,
}

impl Profile {
    pub fn identity(n: usize) -> Self {
        Profile {
            entries: (0..n).map(|q| (q, 0)).collect(),
        }
    }

    pub fn of_word(s: &AutomatonStructure, w: &[usize]) -> Self {
        w.iter()
            .fold(Profile::identity(s.state_count()), |p, &a| p.step(s, a))
    }

    pub fn step(&self, s: &AutomatonStructure, a: usize) -> Self {
        Profile {
            entries: self
                .entries
                .iter()
                .map(|&(t, vis)| {
                    let t2 = s.succ(t, a);
                    (t2, vis | (1u64 << t2))
                })
                .collect(),
        }
    }

    /// Reading `self`, then `other`.
    pub fn then(&self, other: &Profile) -> Self {
        Profile {
            entries: self
                .entries
                .iter()
                .map(|&(t, vis)| {
                    let (t2, vis2) = other.entries[t];
                    (t2, vis | vis2)
                })
                .collect(),
        }
    }

    pub fn power(&self, k: usize) -> Self {
        let mut p = Profile::identity(self.entries.len());
        for _ in 0..k {
            p = p.then(self);
        }
        p
    }

    pub fn target(&self, q: usize) -> usize {
        self.entries[q].0
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().all(|&(_, v)| v == 0)
    }

    /// States visited infinitely often when the word is repeated forever from `q`.
    pub fn inf_set_from(&self, q: usize) -> Vec<usize> {
        let mut order: Vec<usize> = Vec::new();
        let mut pos: HashMap<usize, usize> = HashMap::new();
        let mut cur = q;
        while !pos.contains_key(&cur) {
            pos.insert(cur, order.len());
            order.push(cur);
            cur = self.entries[cur].0;
        }
        let mask = order[pos[&cur]..]
            .iter()
            .fold(0u64, |m, &p| m | self.entries[p].1);
        (0..64).filter(|&i| mask >> i & 1 == 1).collect()
    }
}

pub(crate) fn check_profile_size(m: &OmegaAutomaton) -> Result<()> {
    if m.state_count() > 64 {
        return Err(Error::Capacity {
            what: "states of an automaton handled by transition profiles",
            limit: 64,
            found: m.state_count(),
        });
    }
    Ok(())
}

/// Minimal DFA for the periods `v` (nonempty) with `u v^ω` in the language, where
/// `u` is any word reaching `state`.
pub fn periodic_progress_dfa(m: &OmegaAutomaton, state: usize, limits: &Limits) -> Result<Dfa> {
    check_profile_size(m)?;
    let s = m.structure();
    let k = s.alphabet().len();
    let mut index: HashMap<Profile, usize> = HashMap::new();
    let mut profiles = vec![Profile::identity(s.state_count())];
    index.insert(profiles[0].clone(), 0);
    let mut delta: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < profiles.len() {
        let mut row = Vec::with_capacity(k);
        for a in 0..k {
            let p = profiles[i].step(s, a);
            let id = match index.get(&p) {
                Some(&id) => id,
                None => {
                    let id = profiles.len();
                    index.insert(p.clone(), id);
                    profiles.push(p);
                    limits.check_states("transition profiles", profiles.len())?;
                    id
                }
            };
            row.push(id);
        }
        delta.push(row);
        i += 1;
    }
    let accepting: Vec<bool> = profiles
        .iter()
        .enumerate()
        .map(|(i, p)| i != 0 && m.accepts_set(&p.inf_set_from(state)))
        .collect();
    let structure = AutomatonStructure::new(s.alphabet().clone(), 0, delta)?;
    Ok(Dfa::from_flags(structure, accepting).minimize())
}

/// The periodic FDFA: leading congruence plus one periodic progress DFA per class.
pub fn periodic_fdfa(m: &OmegaAutomaton, limits: &Limits) -> Result<Fdfa> {
    let leading = super::leading_congruence(m, limits)?;
    periodic_fdfa_for(m, &leading, limits)
}

pub(crate) fn periodic_fdfa_for(m: &OmegaAutomaton, leading: &super::Leading, limits: &Limits) -> Result<Fdfa> {
    let progress = leading
        .representative
        .iter()
        .map(|&q| periodic_progress_dfa(m, q, limits))
        .collect::<Result<Vec<_>>>()?;
    Fdfa::new(leading.structure.clone(), progress, AcceptanceMode::Exact)
}
