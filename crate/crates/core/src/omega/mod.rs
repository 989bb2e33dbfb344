//! Deterministic ω-automata on ultimately periodic words.

mod equiv;
pub(crate) mod periodic;

pub use equiv::{distinguishing_word, equivalent, leading_congruence, state_equiv, Leading};
pub use periodic::{periodic_fdfa, periodic_progress_dfa, Profile};

use crate::automata::{is_scc, AutomatonStructure, Word};
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt;

/// An ultimately periodic word `spoke · cycle^ω`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpWord {
    pub spoke: Word,
    pub cycle: Word,
}

impl UpWord {
    pub fn new(spoke: Word, cycle: Word) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::Input("the periodic part of an ω-word must be nonempty".into()));
        }
        Ok(UpWord { spoke, cycle })
    }

    /// Finite prefix of length `n` of the infinite word.
    pub fn prefix(&self, n: usize) -> Word {
        self.spoke
            .iter()
            .chain(self.cycle.iter().cycle())
            .take(n)
            .copied()
            .collect()
    }

    /// Rewrites the word as `(spoke · cycle^i, cycle^j)`.
    pub fn shifted(&self, i: usize, j: usize) -> UpWord {
        let mut spoke = self.spoke.clone();
        for _ in 0..i {
            spoke.extend_from_slice(&self.cycle);
        }
        UpWord {
            spoke,
            cycle: self.cycle.repeat(j.max(1)),
        }
    }

    pub fn display(&self, alphabet: &crate::automata::Alphabet) -> String {
        let show = |w: &[usize]| if w.is_empty() { "ε".to_string() } else { alphabet.format_word(w) };
        format!("({}, {})", show(&self.spoke), show(&self.cycle))
    }
}

impl fmt::Display for UpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.spoke, self.cycle)
    }
}

/// Shortest period of `v`: the `r` with `v = r^k` and `|r|` minimal.
pub fn primitive_root(v: &[usize]) -> &[usize] {
    let n = v.len();
    for d in 1..=n {
        if n.is_multiple_of(d) && (d..n).all(|i| v[i] == v[i - d]) {
            return &v[..d];
        }
    }
    v
}

/// Normal form: primitive period and the shortest spoke.
pub fn canonical_up(w: &UpWord) -> UpWord {
    let mut cycle = primitive_root(&w.cycle).to_vec();
    let mut spoke = w.spoke.clone();
    while let (Some(&a), Some(&b)) = (spoke.last(), cycle.last()) {
        if a != b {
            break;
        }
        spoke.pop();
        cycle.rotate_right(1);
    }
    UpWord { spoke, cycle }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OmegaAcceptance {
    Buchi(Vec<usize>),
    CoBuchi(Vec<usize>),
    Parity(Vec<u32>),
    Muller(Vec<Vec<usize>>),
}

impl OmegaAcceptance {
    pub fn kind(&self) -> &'static str {
        match self {
            OmegaAcceptance::Buchi(_) => "buchi",
            OmegaAcceptance::CoBuchi(_) => "cobuchi",
            OmegaAcceptance::Parity(_) => "parity",
            OmegaAcceptance::Muller(_) => "muller",
        }
    }
}

/// A deterministic ω-automaton.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OmegaAutomaton {
    structure: AutomatonStructure,
    acceptance: OmegaAcceptance,
}

impl OmegaAutomaton {
    /// Validates the acceptance against the structure. State sets are stored sorted.
    pub fn new(structure: AutomatonStructure, acceptance: OmegaAcceptance) -> Result<Self> {
        let n = structure.state_count();
        let check_set = |set: &mut Vec<usize>| -> Result<()> {
            set.sort_unstable();
            set.dedup();
            match set.iter().find(|&&q| q >= n) {
                Some(q) => Err(Error::Input(format!("acceptance mentions missing state {q}"))),
                None => Ok(()),
            }
        };
        let acceptance = match acceptance {
            OmegaAcceptance::Buchi(mut f) => {
                check_set(&mut f)?;
                OmegaAcceptance::Buchi(f)
            }
            OmegaAcceptance::CoBuchi(mut f) => {
                check_set(&mut f)?;
                OmegaAcceptance::CoBuchi(f)
            }
            OmegaAcceptance::Parity(k) => {
                if k.len() != n {
                    return Err(Error::Input(format!(
                        "parity condition has {} colors for {n} states",
                        k.len()
                    )));
                }
                OmegaAcceptance::Parity(k)
            }
            OmegaAcceptance::Muller(sets) => {
                let mut out: Vec<Vec<usize>> = Vec::with_capacity(sets.len());
                for mut s in sets {
                    check_set(&mut s)?;
                    if s.is_empty() {
                        return Err(Error::Input("Muller sets must be nonempty".into()));
                    }
                    if out.contains(&s) {
                        return Err(Error::Input(format!("duplicate Muller set {s:?}")));
                    }
                    out.push(s);
                }
                OmegaAcceptance::Muller(out)
            }
        };
        Ok(OmegaAutomaton {
            structure,
            acceptance,
        })
    }

    pub fn structure(&self) -> &AutomatonStructure {
        &self.structure
    }

    pub fn acceptance(&self) -> &OmegaAcceptance {
        &self.acceptance
    }

    pub fn state_count(&self) -> usize {
        self.structure.state_count()
    }

    pub fn alphabet(&self) -> &crate::automata::Alphabet {
        self.structure.alphabet()
    }

    /// Colors that make the condition a parity condition, if it is one.
    pub fn parity_colors(&self) -> Option<Vec<u32>> {
        let n = self.state_count();
        match &self.acceptance {
            OmegaAcceptance::Buchi(f) => {
                let mut k = vec![1; n];
                f.iter().for_each(|&q| k[q] = 0);
                Some(k)
            }
            OmegaAcceptance::CoBuchi(f) => {
                let mut k = vec![2; n];
                f.iter().for_each(|&q| k[q] = 1);
                Some(k)
            }
            OmegaAcceptance::Parity(k) => Some(k.clone()),
            OmegaAcceptance::Muller(_) => None,
        }
    }

    /// Evaluates the acceptance condition on a set of states visited infinitely often.
    /// `set` must be sorted.
    pub fn accepts_set(&self, set: &[usize]) -> bool {
        match &self.acceptance {
            OmegaAcceptance::Buchi(f) => set.iter().any(|q| f.binary_search(q).is_ok()),
            OmegaAcceptance::CoBuchi(f) => !set.iter().any(|q| f.binary_search(q).is_ok()),
            OmegaAcceptance::Parity(k) => set.iter().map(|&q| k[q]).min().is_some_and(|c| c % 2 == 0),
            OmegaAcceptance::Muller(alpha) => alpha.iter().any(|s| s == set),
        }
    }

    /// Acceptance of a strongly connected set; anything else is a contract error.
    pub fn accepting_scc(&self, set: &[usize]) -> Result<bool> {
        let mut s = set.to_vec();
        s.sort_unstable();
        s.dedup();
        if !is_scc(&self.structure, &s) {
            return Err(Error::Contract(format!("{s:?} is not strongly connected")));
        }
        Ok(self.accepts_set(&s))
    }

    /// States visited infinitely often on `spoke · cycle^ω` from `from`, sorted.
    pub fn inf_set_from(&self, from: usize, w: &UpWord) -> Vec<usize> {
        let s = &self.structure;
        let mut q = s.run(from, &w.spoke);
        let mut seen: HashMap<usize, usize> = HashMap::new();
        let mut starts = Vec::new();
        while !seen.contains_key(&q) {
            seen.insert(q, starts.len());
            starts.push(q);
            q = s.run(q, &w.cycle);
        }
        let mut inf = vec![false; s.state_count()];
        let mut p = q;
        for _ in seen[&q]..starts.len() {
            for &a in &w.cycle {
                p = s.succ(p, a);
                inf[p] = true;
            }
        }
        (0..inf.len()).filter(|&i| inf[i]).collect()
    }

    pub fn accepts_up_from(&self, from: usize, w: &UpWord) -> bool {
        self.accepts_set(&self.inf_set_from(from, w))
    }

    pub fn accepts_up(&self, w: &UpWord) -> bool {
        self.accepts_up_from(self.structure.initial(), w)
    }

    /// Same automaton with a different initial state.
    pub fn with_initial(&self, q: usize) -> Self {
        OmegaAutomaton {
            structure: self.structure.with_initial(q),
            acceptance: self.acceptance.clone(),
        }
    }

    /// Adds `extra` unreachable states that loop on themselves; used to test
    /// that measures ignore unreachable parts.
    pub fn with_unreachable_padding(&self, extra: usize) -> Self {
        let n = self.state_count();
        let k = self.alphabet().len();
        let mut delta = self.structure.delta().to_vec();
        for i in 0..extra {
            delta.push(vec![n + i; k]);
        }
        let structure = AutomatonStructure::new(self.alphabet().clone(), self.structure.initial(), delta)
            .expect("padding keeps the structure complete");
        let acceptance = match &self.acceptance {
            OmegaAcceptance::Buchi(f) => OmegaAcceptance::Buchi(f.iter().copied().chain(n..n + extra).collect()),
            OmegaAcceptance::CoBuchi(f) => OmegaAcceptance::CoBuchi(f.clone()),
            OmegaAcceptance::Parity(k) => {
                let mut k = k.clone();
                k.extend((0..extra).map(|i| i as u32 % 2));
                OmegaAcceptance::Parity(k)
            }
            OmegaAcceptance::Muller(a) => {
                let mut a = a.clone();
                a.extend((n..n + extra).map(|q| vec![q]));
                OmegaAcceptance::Muller(a)
            }
        };
        OmegaAutomaton::new(structure, acceptance).expect("padding keeps acceptance valid")
    }
}

/// All `(u, v)` with `|u| <= max_u` and `1 <= |v| <= max_v`.
pub fn sample_upwords(alphabet: &crate::automata::Alphabet, max_u: usize, max_v: usize) -> Vec<UpWord> {
    let us = alphabet.words_between(0, max_u);
    let vs = alphabet.words_between(1, max_v);
    let mut out = Vec::with_capacity(us.len() * vs.len());
    for u in &us {
        for v in &vs {
            out.push(UpWord {
                spoke: u.clone(),
                cycle: v.clone(),
            });
        }
    }
    out
}
