use super::ColorContext;
use crate::automata::{minimize_moore, sccs, AutomatonStructure, Dfa};
use crate::error::{Error, Result};
use crate::fdfa::{AcceptanceMode, Fdfa};

/// An FDFA whose progress states carry the natural colors of the periods reaching them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorfulFdfa {
    fdfa: Fdfa,
    colors: Vec<Vec<u32>>,
}

impl ColorfulFdfa {
    pub fn new(fdfa: Fdfa, colors: Vec<Vec<u32>>) -> Result<Self> {
        if colors.len() != fdfa.leading().state_count()
            || colors
                .iter()
                .enumerate()
                .any(|(q, c)| c.len() != fdfa.progress(q).state_count())
        {
            return Err(Error::Input("one color per progress state required".into()));
        }
        for (q, cs) in colors.iter().enumerate() {
            for (s, &c) in cs.iter().enumerate() {
                if fdfa.progress(q).is_accepting(s) != (c % 2 == 0) {
                    return Err(Error::Input(format!(
                        "progress state {s} of class {q} has color {c} but the opposite acceptance"
                    )));
                }
            }
        }
        Ok(ColorfulFdfa { fdfa, colors })
    }

    pub fn fdfa(&self) -> &Fdfa {
        &self.fdfa
    }

    pub fn colors(&self, q: usize) -> &[u32] {
        &self.colors[q]
    }

    /// Label of the progress state reached by `v` in the class of `u`.
    pub fn color_of(&self, u: &[usize], v: &[usize]) -> u32 {
        let q = self.fdfa.leading_state(u);
        self.colors[q][self.fdfa.progress(q).run(v)]
    }

    pub fn max_color(&self) -> u32 {
        self.colors.iter().flatten().copied().max().unwrap_or(0)
    }
}

/// Per class: the vector states of the persistent DFA, observed through their
/// clamped colors and minimized, with a separate state for the empty period.
pub fn build_colorful_fdfa(ctx: &ColorContext) -> Result<ColorfulFdfa> {
    let mut progress = Vec::new();
    let mut colors = Vec::new();
    for u in 0..ctx.class_count() {
        let cc = ctx.class(u);
        let pd = &cc.pdfa;
        let shift = |row: &Vec<usize>| row.iter().map(|&t| t + 1).collect::<Vec<_>>();
        let mut delta = vec![shift(&pd.structure().delta()[0])];
        delta.extend(pd.structure().delta().iter().map(shift));
        let mut output: Vec<Option<u32>> = vec![None];
        output.extend((0..pd.len()).map(|t| Some(cc.clamped_at(t))));
        let machine = AutomatonStructure::new(ctx.periodic().alphabet().clone(), 0, delta)?;
        let quotient = minimize_moore(&machine, &output, true);
        let labels: Vec<u32> = quotient
            .outputs
            .iter()
            .map(|o| o.unwrap_or_else(|| cc.clamped_at(0)))
            .collect();
        let accepting = labels.iter().map(|c| c % 2 == 0).collect();
        progress.push(Dfa::from_flags(quotient.structure, accepting));
        colors.push(labels);
    }
    let fdfa = Fdfa::new(ctx.leading().structure.clone(), progress, AcceptanceMode::DuoNormalized)?;
    ColorfulFdfa::new(fdfa, colors)
}

/// Recomputes the labels from the graph alone: a terminal MSCC gets 0 or 1 by
/// acceptance; any other MSCC gets the largest color reachable from it, plus one
/// when that color's parity disagrees with its acceptance.
pub fn color_states_procedure(f: &ColorfulFdfa) -> Result<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    for q in 0..f.fdfa.leading().state_count() {
        let p = f.fdfa.progress(q);
        let dec = sccs(p.structure(), None);
        let mut scc_color = vec![0u32; dec.len()];
        for c in (0..dec.len()).rev() {
            let comp = &dec.components[c];
            let acc = p.is_accepting(comp[0]);
            if comp.iter().any(|&s| p.is_accepting(s) != acc) {
                return Err(Error::Internal(format!(
                    "MSCC {comp:?} of class {q} mixes accepting and rejecting states"
                )));
            }
            scc_color[c] = match dec.successors[c].iter().map(|&d| scc_color[d]).max() {
                None => u32::from(!acc),
                Some(m) if (m % 2 == 0) == acc => m,
                Some(m) => m + 1,
            };
        }
        let mut colors = vec![0; p.state_count()];
        for (s, c) in dec.component_of.iter().enumerate() {
            if let Some(c) = c {
                colors[s] = scc_color[*c];
            }
        }
        out.push(colors);
    }
    Ok(out)
}
