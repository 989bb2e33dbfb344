//! The c-lector structure and the Black&White DBA/DCA built from it.

use std::collections::{HashMap, VecDeque};

use crate::automata::AutomatonStructure;
use crate::colors::{ColorContext, ColorfulFdfa};
use crate::error::{Error, Result};
use crate::omega::{OmegaAcceptance, OmegaAutomaton, UpWord};

/// A lector state: the leading class read so far, the class the current period
/// started from, and the colorful progress state of that period.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LectorState {
    pub x: usize,
    pub u: usize,
    pub progress: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CLector {
    c: u32,
    structure: AutomatonStructure,
    states: Vec<LectorState>,
    reset: Vec<bool>,
    in_f: Vec<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LectorVerdict {
    InfinitelyOften,
    FinitelyOften,
}

impl CLector {
    pub fn c(&self) -> u32 {
        self.c
    }

    pub fn structure(&self) -> &AutomatonStructure {
        &self.structure
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn state(&self, q: usize) -> LectorState {
        self.states[q]
    }

    pub fn is_reset(&self, q: usize) -> bool {
        self.reset[q]
    }

    pub fn in_f(&self, q: usize) -> bool {
        self.in_f[q]
    }

    pub fn f_states(&self) -> Vec<usize> {
        (0..self.states.len()).filter(|&q| self.in_f[q]).collect()
    }

    pub fn with_buchi(&self) -> OmegaAutomaton {
        OmegaAutomaton::new(self.structure.clone(), OmegaAcceptance::Buchi(self.f_states()))
            .expect("lector structure is valid")
    }

    pub fn with_cobuchi(&self) -> OmegaAutomaton {
        OmegaAutomaton::new(self.structure.clone(), OmegaAcceptance::CoBuchi(self.f_states()))
            .expect("lector structure is valid")
    }
}

pub fn build_c_lector(ctx: &ColorContext, colorful: &ColorfulFdfa, c: u32) -> CLector {
    let fdfa = colorful.fdfa();
    let leading = fdfa.leading();
    let alphabet = leading.alphabet().clone();
    let is_reset = |s: LectorState| {
        let k = colorful.colors(s.u)[s.progress];
        k <= c || k == ctx.class(s.u).mincolor
    };
    let start = |x: usize| LectorState { x, u: x, progress: fdfa.progress(x).initial() };

    let mut index = HashMap::new();
    let mut states = vec![start(leading.initial())];
    index.insert(states[0], 0);
    let mut delta = Vec::new();
    let mut queue = VecDeque::from([0]);
    while let Some(q) = queue.pop_front() {
        let s = states[q];
        let reset = is_reset(s);
        let mut row = Vec::with_capacity(alphabet.len());
        for a in 0..alphabet.len() {
            let x = leading.succ(s.x, a);
            let next = if reset {
                start(x)
            } else {
                LectorState { x, u: s.u, progress: fdfa.progress(s.u).structure().succ(s.progress, a) }
            };
            let id = *index.entry(next).or_insert_with(|| {
                states.push(next);
                queue.push_back(states.len() - 1);
                states.len() - 1
            });
            row.push(id);
        }
        delta.push((q, row));
    }
    delta.sort_by_key(|(q, _)| *q);
    let delta = delta.into_iter().map(|(_, r)| r).collect();
    let reset: Vec<bool> = states.iter().map(|&s| is_reset(s)).collect();
    let in_f = states
        .iter()
        .zip(&reset)
        .map(|(s, &r)| r && colorful.colors(s.u)[s.progress] <= c)
        .collect();
    CLector {
        c,
        structure: AutomatonStructure::new(alphabet, 0, delta).expect("lector transitions are in range"),
        states,
        reset,
        in_f,
    }
}

pub fn lector_run_classifier(l: &CLector, w: &UpWord) -> LectorVerdict {
    let m = l.with_buchi();
    if m.inf_set_from(m.structure().initial(), w).iter().any(|&q| l.in_f[q]) {
        LectorVerdict::InfinitelyOften
    } else {
        LectorVerdict::FinitelyOften
    }
}

fn offending_color(ctx: &ColorContext, colorful: &ColorfulFdfa, allowed: &[u32]) -> Option<u32> {
    let mut bad: Vec<u32> = (0..ctx.class_count())
        .flat_map(|q| colorful.colors(q).iter().copied())
        .filter(|k| !allowed.contains(k))
        .collect();
    bad.sort_unstable();
    bad.pop()
}

/// The 0-lector read as a Büchi automaton. Only defined when every color is 0 or 1.
pub fn black_white_dba(ctx: &ColorContext) -> Result<OmegaAutomaton> {
    let colorful = crate::colors::build_colorful_fdfa(ctx)?;
    if let Some(k) = offending_color(ctx, &colorful, &[0, 1]) {
        return Err(Error::Domain(format!("not DBA-recognizable: color {k}")));
    }
    Ok(build_c_lector(ctx, &colorful, 0).with_buchi())
}

/// The 1-lector read as a coBüchi automaton. Only defined when every color is 1 or 2.
pub fn black_white_dca(ctx: &ColorContext) -> Result<OmegaAutomaton> {
    let colorful = crate::colors::build_colorful_fdfa(ctx)?;
    if let Some(k) = offending_color(ctx, &colorful, &[1, 2]) {
        return Err(Error::Domain(format!("not DCA-recognizable: color {k}")));
    }
    Ok(build_c_lector(ctx, &colorful, 1).with_cobuchi())
}
