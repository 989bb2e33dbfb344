//! Vector-state machines that classify periods by normalization status, and the diameter measure.

use crate::automata::{AutomatonStructure, SccDecomposition, Word};
use crate::error::{Error, Limits, Result};
use crate::fdfa::Fdfa;
use std::collections::HashMap;

/// A leading state together with the progress state reached from every progress state.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VectorState {
    pub lead: usize,
    pub entries: Vec<usize>,
}

impl VectorState {
    /// Conditions (i)–(iii): back in the class, the progress run from the initial state
    /// is at a fixpoint, and every entry lies on a cycle of the induced map.
    pub fn is_significant(&self, class: usize, progress_initial: usize) -> bool {
        let e = &self.entries;
        let p = e[progress_initial];
        if self.lead != class || e[p] != p {
            return false;
        }
        // The map restricted to its image must be a bijection.
        let mut in_image = vec![false; e.len()];
        for &t in e {
            in_image[t] = true;
        }
        let mut hit = vec![false; e.len()];
        for t in (0..e.len()).filter(|&t| in_image[t]) {
            if hit[e[t]] {
                return false;
            }
            hit[e[t]] = true;
        }
        true
    }
}

fn vector_after(f: &Fdfa, class: usize, v: &[usize]) -> VectorState {
    let p = f.progress(class).structure();
    VectorState {
        lead: f.leading().run(class, v),
        entries: (0..p.state_count()).map(|k| p.run(k, v)).collect(),
    }
}

/// Whether `(u, v)` is persistent: duo-normalized and weakly normalized from every progress state.
pub fn is_persistent(f: &Fdfa, u: &[usize], v: &[usize]) -> bool {
    if v.is_empty() {
        return false;
    }
    let class = f.leading_state(u);
    let init = f.progress(class).initial();
    vector_after(f, class, v).is_significant(class, init)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarity {
    Accepting,
    Rejecting,
}

impl Polarity {
    pub fn from_accepting(b: bool) -> Self {
        if b {
            Polarity::Accepting
        } else {
            Polarity::Rejecting
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Polarity::Accepting => Polarity::Rejecting,
            Polarity::Rejecting => Polarity::Accepting,
        }
    }

    fn idx(self) -> usize {
        match self {
            Polarity::Accepting => 0,
            Polarity::Rejecting => 1,
        }
    }
}

/// The reachable vector states of one leading class.
#[derive(Debug, Clone)]
pub struct PersistentDfa {
    class: usize,
    states: Vec<VectorState>,
    structure: AutomatonStructure,
    accepting: Vec<bool>,
    significant: Vec<bool>,
    sccs: SccDecomposition,
    /// Per SCC: polarity of its significant states, if any.
    scc_polarity: Vec<Option<Polarity>>,
    /// Per SCC and starting polarity: longest alternating chain starting in or after it.
    chain: Vec<[u32; 2]>,
}

impl PersistentDfa {
    pub fn build(f: &Fdfa, class: usize, limits: &Limits) -> Result<Self> {
        let prog = f.progress(class);
        let p = prog.structure();
        let k = f.alphabet().len();
        let initial = VectorState {
            lead: class,
            entries: (0..p.state_count()).collect(),
        };
        let mut index: HashMap<VectorState, usize> = HashMap::new();
        index.insert(initial.clone(), 0);
        let mut states = vec![initial];
        let mut delta: Vec<Vec<usize>> = Vec::new();
        let mut i = 0;
        while i < states.len() {
            let mut row = Vec::with_capacity(k);
            for a in 0..k {
                let s = &states[i];
                let t = VectorState {
                    lead: f.leading().succ(s.lead, a),
                    entries: s.entries.iter().map(|&e| p.succ(e, a)).collect(),
                };
                let id = match index.get(&t) {
                    Some(&id) => id,
                    None => {
                        let id = states.len();
                        index.insert(t.clone(), id);
                        states.push(t);
                        limits.check_states("persistent DFA vector states", states.len())?;
                        id
                    }
                };
                row.push(id);
            }
            delta.push(row);
            i += 1;
        }
        let structure = AutomatonStructure::new(f.alphabet().clone(), 0, delta)?;
        let all: Vec<usize> = (0..states.len()).collect();
        let sccs = SccDecomposition::build(states.len(), &all, |q| structure.delta()[q].clone());
        let init = p.initial();
        let accepting: Vec<bool> = states.iter().map(|s| prog.is_accepting(s.entries[init])).collect();
        let mut significant: Vec<bool> = states.iter().map(|s| s.is_significant(class, init)).collect();
        // The initial vector state is reached by ε; it only counts if a nonempty word returns to it.
        if !sccs.nontrivial[sccs.component_of[0].unwrap()] {
            significant[0] = false;
        }

        let mut scc_polarity = vec![None; sccs.len()];
        for (c, comp) in sccs.components.iter().enumerate() {
            for &q in comp.iter().filter(|&&q| significant[q]) {
                let pol = Polarity::from_accepting(accepting[q]);
                match scc_polarity[c] {
                    None => scc_polarity[c] = Some(pol),
                    Some(other) if other != pol => {
                        return Err(Error::Internal(format!(
                            "significant states of mixed polarity share an SCC in class {class}; \
                             the FDFA is not saturated"
                        )))
                    }
                    _ => {}
                }
            }
        }

        let mut chain = vec![[0u32; 2]; sccs.len()];
        for c in (0..sccs.len()).rev() {
            for pol in [Polarity::Accepting, Polarity::Rejecting] {
                let later = |p: Polarity| sccs.successors[c].iter().map(|&d| chain[d][p.idx()]).max().unwrap_or(0);
                let mut best = later(pol);
                if scc_polarity[c] == Some(pol) {
                    best = best.max(1 + later(pol.flip()));
                }
                chain[c][pol.idx()] = best;
            }
        }

        Ok(PersistentDfa {
            class,
            states,
            structure,
            accepting,
            significant,
            sccs,
            scc_polarity,
            chain,
        })
    }

    pub fn class(&self) -> usize {
        self.class
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn state(&self, s: usize) -> &VectorState {
        &self.states[s]
    }

    pub fn structure(&self) -> &AutomatonStructure {
        &self.structure
    }

    pub fn sccs(&self) -> &SccDecomposition {
        &self.sccs
    }

    pub fn is_accepting(&self, s: usize) -> bool {
        self.accepting[s]
    }

    pub fn is_significant(&self, s: usize) -> bool {
        self.significant[s]
    }

    pub fn run(&self, w: &[usize]) -> usize {
        self.structure.run(0, w)
    }

    pub fn step(&self, s: usize, w: &[usize]) -> usize {
        self.structure.run(s, w)
    }

    /// Longest alternating chain of significant states starting at significant `s`.
    pub fn maxalt(&self, s: usize) -> Option<u32> {
        if !self.significant[s] {
            return None;
        }
        let c = self.sccs.component_of[s].unwrap();
        let pol = Polarity::from_accepting(self.accepting[s]);
        let after = self.sccs.successors[c]
            .iter()
            .map(|&d| self.chain[d][pol.flip().idx()])
            .max()
            .unwrap_or(0);
        Some(1 + after)
    }

    /// Longest alternating chain starting with `pol` among states reachable from `s`.
    pub fn chain_from(&self, s: usize, pol: Polarity) -> u32 {
        self.chain[self.sccs.component_of[s].unwrap()][pol.idx()]
    }

    /// Witness periods for a chain of length `k` starting with `pol`.
    pub fn chain_witness(&self, pol: Polarity, k: u32) -> Option<Vec<Word>> {
        if k == 0 || self.chain_from(0, pol) < k {
            return None;
        }
        let mut words: Vec<Word> = Vec::new();
        let mut current = 0;
        let mut word: Word = Vec::new();
        let mut pol = pol;
        let mut need = k;
        while need > 0 {
            // Pick the first significant state of the right polarity, reachable from
            // `current`, whose chain is still long enough.
            let reach = self.structure.reachable_from(current);
            let next = (0..self.len()).find(|&s| {
                reach[s]
                    && self.significant[s]
                    && Polarity::from_accepting(self.accepting[s]) == pol
                    && self.maxalt(s).unwrap() >= need
                    && (words.is_empty() || self.sccs.component_of[s] != self.sccs.component_of[current])
            })?;
            let path = if words.is_empty() {
                self.structure.nonempty_path(current, next)?
            } else {
                self.structure.access_words_from(current)[next].clone()?
            };
            word.extend(path);
            words.push(word.clone());
            current = next;
            pol = pol.flip();
            need -= 1;
        }
        Some(words)
    }

    pub fn scc_polarity(&self, c: usize) -> Option<Polarity> {
        self.scc_polarity[c]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DiameterMeasure {
    pub d_plus: u32,
    pub d_minus: u32,
}

/// Persistent DFAs of all reachable leading classes.
pub fn persistent_dfas(f: &Fdfa, limits: &Limits) -> Result<Vec<Option<PersistentDfa>>> {
    let reach = f.leading().reachable();
    (0..f.leading().state_count())
        .map(|q| if reach[q] { PersistentDfa::build(f, q, limits).map(Some) } else { Ok(None) })
        .collect()
}

/// Longest positive and negative persistent chains over all classes.
pub fn diameter(f: &Fdfa, limits: &Limits) -> Result<DiameterMeasure> {
    let mut d = DiameterMeasure { d_plus: 0, d_minus: 0 };
    for pd in persistent_dfas(f, limits)?.into_iter().flatten() {
        d.d_plus = d.d_plus.max(pd.chain_from(0, Polarity::Accepting));
        d.d_minus = d.d_minus.max(pd.chain_from(0, Polarity::Rejecting));
    }
    Ok(d)
}

/// A persistent chain: a spoke and nested periods with alternating acceptance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PersistentChain {
    pub spoke: Word,
    pub periods: Vec<Word>,
}

/// A chain of length `k` starting with polarity `pol`, verified before it is returned.
pub fn persistent_chain_witness(f: &Fdfa, pol: Polarity, k: u32, limits: &Limits) -> Result<Option<PersistentChain>> {
    let access = f.leading().access_words();
    for pd in persistent_dfas(f, limits)?.into_iter().flatten() {
        let Some(periods) = pd.chain_witness(pol, k) else { continue };
        let spoke = access[pd.class()].clone().unwrap();
        let mut expect = pol;
        for (i, v) in periods.iter().enumerate() {
            let ok = is_persistent(f, &spoke, v)
                && f.accepts_decomposition(&spoke, v) == (expect == Polarity::Accepting)
                && (i == 0 || v.starts_with(&periods[i - 1]) && v.len() > periods[i - 1].len());
            if !ok {
                return Err(Error::Internal(format!("chain witness failed verification at {v:?}")));
            }
            expect = expect.flip();
        }
        return Ok(Some(PersistentChain { spoke, periods }));
    }
    Ok(None)
}
