//! Natural colors of finite and infinite words.
//!
//! Colors are read off the persistent DFAs of the periodic FDFA: the color of a
//! period is the longest alternating chain of significant states reachable
//! after it, shifted by the class's minimal color.

mod colorful;
mod oracle;

pub use colorful::{build_colorful_fdfa, color_states_procedure, ColorfulFdfa};
pub use oracle::BruteForce;

use crate::automata::Word;
use crate::error::{Error, Limits, Result};
use crate::fdfa::{Fdfa, NormalizationKind};
use crate::omega::{leading_congruence, Leading, OmegaAutomaton, UpWord};
use crate::persistent::PersistentDfa;
use std::fmt;

/// A natural color; `Bottom` marks irrelevant periods and sits below every number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Bottom,
    Value(u32),
}

impl Color {
    pub fn value(self) -> Option<u32> {
        match self {
            Color::Bottom => None,
            Color::Value(c) => Some(c),
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Color::Bottom => write!(f, "-inf"),
            Color::Value(c) => write!(f, "{c}"),
        }
    }
}

/// Color data of one leading class.
#[derive(Debug, Clone)]
pub struct ClassColors {
    pub pdfa: PersistentDfa,
    /// Per vector state: largest maxalt over significant states reachable from it.
    reach_best: Vec<Option<u32>>,
    pub mincolor: u32,
}

impl ClassColors {
    /// Color of the period leading to vector state `t`.
    pub fn color_at(&self, t: usize) -> Color {
        match self.reach_best[t] {
            Some(b) => Color::Value(b - 1 + self.mincolor),
            None => Color::Bottom,
        }
    }

    pub fn clamped_at(&self, t: usize) -> u32 {
        self.color_at(t).value().map_or(self.mincolor, |c| c.max(self.mincolor))
    }
}

/// A language with everything needed to answer color queries.
#[derive(Debug, Clone)]
pub struct ColorContext {
    language: OmegaAutomaton,
    leading: Leading,
    periodic: Fdfa,
    classes: Vec<ClassColors>,
    mincolor: u32,
    limits: Limits,
}

impl ColorContext {
    pub fn new(language: &OmegaAutomaton, limits: &Limits) -> Result<Self> {
        let leading = leading_congruence(language, limits)?;
        let periodic = crate::omega::periodic::periodic_fdfa_for(language, &leading, limits)?;
        let mut partial = Vec::new();
        for class in 0..leading.len() {
            let pdfa = PersistentDfa::build(&periodic, class, limits)?;
            let sccs = pdfa.sccs();
            let mut scc_best: Vec<Option<u32>> = vec![None; sccs.len()];
            for c in (0..sccs.len()).rev() {
                let own = sccs.components[c].iter().filter_map(|&s| pdfa.maxalt(s)).max();
                let later = sccs.successors[c].iter().filter_map(|&d| scc_best[d]).max();
                scc_best[c] = own.max(later);
            }
            let reach_best: Vec<Option<u32>> =
                (0..pdfa.len()).map(|s| scc_best[sccs.component_of[s].unwrap()]).collect();
            let significant: Vec<usize> = (0..pdfa.len()).filter(|&s| pdfa.is_significant(s)).collect();
            let mincolor = if significant.is_empty() {
                None
            } else if significant
                .iter()
                .any(|&s| pdfa.is_accepting(s) && pdfa.maxalt(s) == Some(1))
            {
                Some(0)
            } else {
                Some(1)
            };
            partial.push((pdfa, reach_best, mincolor));
        }
        let mincolor = partial
            .iter()
            .filter_map(|p| p.2)
            .min()
            .ok_or_else(|| Error::Internal("no class has a relevant period".into()))?;
        let classes: Vec<ClassColors> = partial
            .into_iter()
            .map(|(pdfa, reach_best, m)| ClassColors {
                pdfa,
                reach_best,
                mincolor: m.unwrap_or(mincolor),
            })
            .collect();

        for (u, cc) in classes.iter().enumerate() {
            for s in (0..cc.pdfa.len()).filter(|&s| cc.pdfa.is_significant(s)) {
                let color = cc.pdfa.maxalt(s).unwrap() - 1 + cc.mincolor;
                if (color % 2 == 0) != cc.pdfa.is_accepting(s) {
                    return Err(Error::Internal(format!(
                        "color {color} of a significant state in class {u} disagrees with its acceptance"
                    )));
                }
            }
        }
        Ok(ColorContext {
            language: language.clone(),
            leading,
            periodic,
            classes,
            mincolor,
            limits: *limits,
        })
    }

    pub fn language(&self) -> &OmegaAutomaton {
        &self.language
    }

    pub fn leading(&self) -> &Leading {
        &self.leading
    }

    pub fn periodic(&self) -> &Fdfa {
        &self.periodic
    }

    pub fn class(&self, u: usize) -> &ClassColors {
        &self.classes[u]
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// Minimal color of the language.
    pub fn mincolor(&self) -> u32 {
        self.mincolor
    }

    pub fn class_of(&self, u: &[usize]) -> usize {
        self.leading.class_of_word(u)
    }

    pub fn mincolor_of(&self, u: &[usize]) -> u32 {
        self.classes[self.class_of(u)].mincolor
    }

    fn locate(&self, u: &[usize], v: &[usize]) -> (&ClassColors, usize) {
        let cc = &self.classes[self.class_of(u)];
        (cc, cc.pdfa.run(v))
    }

    pub fn finite_color(&self, u: &[usize], v: &[usize]) -> Color {
        let (cc, t) = self.locate(u, v);
        cc.color_at(t)
    }

    pub fn finite_color_clamped(&self, u: &[usize], v: &[usize]) -> u32 {
        let (cc, t) = self.locate(u, v);
        cc.clamped_at(t)
    }

    /// Largest color of any period of the language.
    pub fn max_color(&self) -> u32 {
        self.classes
            .iter()
            .flat_map(|cc| (0..cc.pdfa.len()).map(move |t| cc.clamped_at(t)))
            .max()
            .unwrap_or(self.mincolor)
    }

    /// Color of `w`, read from a persistent decomposition.
    pub fn infinite_color(&self, w: &UpWord) -> u32 {
        let d = self.periodic.normalize(w, NormalizationKind::Persistent);
        self.finite_color(&d.spoke, &d.cycle)
            .value()
            .expect("persistent periods are relevant")
    }

    pub fn is_invariant(&self, u: &[usize], v: &[usize]) -> bool {
        let q = self.class_of(u);
        self.leading.structure.run(q, v) == q
    }

    pub fn is_relevant(&self, u: &[usize], v: &[usize]) -> bool {
        self.finite_color(u, v) != Color::Bottom
    }

    /// Colors of `v, v^2, v^3, …` until the vector state repeats.
    fn power_colors(&self, u: &[usize], v: &[usize]) -> Vec<Color> {
        let cc = &self.classes[self.class_of(u)];
        let mut seen = vec![false; cc.pdfa.len()];
        let mut t = cc.pdfa.run(v);
        let mut out = Vec::new();
        while !seen[t] {
            seen[t] = true;
            out.push(cc.color_at(t));
            t = cc.pdfa.step(t, v);
        }
        out
    }

    /// `v` keeps its color under every repetition.
    pub fn is_stable(&self, u: &[usize], v: &[usize]) -> bool {
        let c = self.power_colors(u, v);
        c.iter().all(|&x| x == c[0])
    }

    pub fn is_reliable(&self, u: &[usize], v: &[usize]) -> bool {
        self.is_invariant(u, v) && self.is_stable(u, v)
    }

    pub fn brute_force(&self, z_bound: usize, rep_bound: usize) -> Result<BruteForce<'_>> {
        BruteForce::new(self, z_bound, rep_bound)
    }

    /// Literal bounded evaluation of the color definition; see [`BruteForce`].
    pub fn brute_force_color(&self, u: &Word, v: &Word, z_bound: usize, rep_bound: usize) -> Result<Color> {
        Ok(self.brute_force(z_bound, rep_bound)?.color(u, v))
    }
}
