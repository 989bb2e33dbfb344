//! JSON documents for automata, FDFAs and ultimately periodic words.

use indexmap::IndexMap;
use omegacanon::automata::{Alphabet, AutomatonStructure, Dfa, Word};
use omegacanon::fdfa::{AcceptanceMode, Fdfa};
use omegacanon::omega::{OmegaAcceptance, OmegaAutomaton, UpWord};
use omegacanon::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomatonDoc {
    pub alphabet: Vec<String>,
    pub states: usize,
    pub initial: usize,
    pub delta: Vec<Vec<usize>>,
    pub acceptance: AcceptanceDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "lowercase")]
pub enum AcceptanceDoc {
    Buchi(Vec<usize>),
    Cobuchi(Vec<usize>),
    Parity(Vec<u32>),
    Muller(Vec<Vec<usize>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDoc {
    pub alphabet: Vec<String>,
    pub states: usize,
    pub initial: usize,
    pub delta: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DfaDoc {
    pub states: usize,
    pub initial: usize,
    pub delta: Vec<Vec<usize>>,
    pub accepting: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeDoc {
    Exact,
    Normalized,
    Duo,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FdfaDoc {
    pub leading: StructureDoc,
    pub progress: IndexMap<String, DfaDoc>,
    pub mode: ModeDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colors: Option<IndexMap<String, Vec<u32>>>,
}

/// A word given either as a string of one-character symbols or as a symbol list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WordDoc {
    Text(String),
    Symbols(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UpWordDoc {
    pub u: WordDoc,
    pub v: WordDoc,
}

pub enum Document {
    Automaton(OmegaAutomaton),
    Fdfa(Fdfa, Option<Vec<Vec<u32>>>),
}

fn check_count(what: &str, declared: usize, rows: usize) -> Result<()> {
    if declared != rows {
        return Err(Error::Input(format!("{what}: declares {declared} states but has {rows} delta rows")));
    }
    Ok(())
}

pub fn automaton_from_doc(d: &AutomatonDoc) -> Result<OmegaAutomaton> {
    check_count("automaton", d.states, d.delta.len())?;
    let alphabet = Alphabet::new(d.alphabet.iter().cloned())?;
    let s = AutomatonStructure::new(alphabet, d.initial, d.delta.clone())?;
    let acc = match &d.acceptance {
        AcceptanceDoc::Buchi(f) => OmegaAcceptance::Buchi(f.clone()),
        AcceptanceDoc::Cobuchi(f) => OmegaAcceptance::CoBuchi(f.clone()),
        AcceptanceDoc::Parity(k) => OmegaAcceptance::Parity(k.clone()),
        AcceptanceDoc::Muller(t) => OmegaAcceptance::Muller(t.clone()),
    };
    OmegaAutomaton::new(s, acc)
}

pub fn automaton_to_doc(m: &OmegaAutomaton) -> AutomatonDoc {
    let s = m.structure();
    AutomatonDoc {
        alphabet: s.alphabet().symbols().to_vec(),
        states: s.state_count(),
        initial: s.initial(),
        delta: s.delta().to_vec(),
        acceptance: match m.acceptance() {
            OmegaAcceptance::Buchi(f) => AcceptanceDoc::Buchi(f.clone()),
            OmegaAcceptance::CoBuchi(f) => AcceptanceDoc::Cobuchi(f.clone()),
            OmegaAcceptance::Parity(k) => AcceptanceDoc::Parity(k.clone()),
            OmegaAcceptance::Muller(t) => AcceptanceDoc::Muller(t.clone()),
        },
    }
}

fn keyed<T: Clone>(what: &str, map: &IndexMap<String, T>, n: usize) -> Result<Vec<T>> {
    let mut out: Vec<Option<T>> = vec![None; n];
    for (k, v) in map {
        let i: usize = k
            .parse::<usize>()
            .ok()
            .filter(|&i| i < n && k == &i.to_string())
            .ok_or_else(|| Error::Input(format!("{what}: key {k:?} is not a leading state id")))?;
        out[i] = Some(v.clone());
    }
    out.into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| Error::Input(format!("{what}: missing entry for leading state {i}"))))
        .collect()
}

pub fn fdfa_from_doc(d: &FdfaDoc) -> Result<(Fdfa, Option<Vec<Vec<u32>>>)> {
    let l = &d.leading;
    check_count("leading automaton", l.states, l.delta.len())?;
    let alphabet = Alphabet::new(l.alphabet.iter().cloned())?;
    let leading = AutomatonStructure::new(alphabet.clone(), l.initial, l.delta.clone())?;
    let progress = keyed("progress", &d.progress, l.states)?
        .into_iter()
        .enumerate()
        .map(|(q, p)| {
            check_count(&format!("progress DFA {q}"), p.states, p.delta.len())?;
            let s = AutomatonStructure::new(alphabet.clone(), p.initial, p.delta)?;
            Dfa::new(s, p.accepting)
        })
        .collect::<Result<Vec<_>>>()?;
    let mode = match d.mode {
        ModeDoc::Exact => AcceptanceMode::Exact,
        ModeDoc::Normalized => AcceptanceMode::Normalized,
        ModeDoc::Duo => AcceptanceMode::DuoNormalized,
    };
    let f = Fdfa::new(leading, progress, mode)?;
    let colors = match &d.colors {
        None => None,
        Some(c) => {
            let c = keyed("colors", c, l.states)?;
            omegacanon::colors::ColorfulFdfa::new(f.clone(), c.clone())?;
            Some(c)
        }
    };
    Ok((f, colors))
}

fn structure_doc(s: &AutomatonStructure) -> StructureDoc {
    StructureDoc {
        alphabet: s.alphabet().symbols().to_vec(),
        states: s.state_count(),
        initial: s.initial(),
        delta: s.delta().to_vec(),
    }
}

pub fn fdfa_to_doc(f: &Fdfa, colors: Option<&[Vec<u32>]>) -> FdfaDoc {
    let progress = f
        .progress_all()
        .iter()
        .enumerate()
        .map(|(q, p)| {
            let s = p.structure();
            let d = DfaDoc {
                states: s.state_count(),
                initial: s.initial(),
                delta: s.delta().to_vec(),
                accepting: p.accepting_states(),
            };
            (q.to_string(), d)
        })
        .collect();
    FdfaDoc {
        leading: structure_doc(f.leading()),
        progress,
        mode: match f.mode() {
            AcceptanceMode::Exact => ModeDoc::Exact,
            AcceptanceMode::Normalized => ModeDoc::Normalized,
            AcceptanceMode::DuoNormalized => ModeDoc::Duo,
        },
        colors: colors.map(|c| c.iter().enumerate().map(|(q, c)| (q.to_string(), c.clone())).collect()),
    }
}

pub fn parse_word(alphabet: &Alphabet, w: &WordDoc) -> Result<Word> {
    match w {
        WordDoc::Text(t) => alphabet.parse_word(t),
        WordDoc::Symbols(s) => alphabet.parse_symbols(s),
    }
}

pub fn upword_from_doc(alphabet: &Alphabet, d: &UpWordDoc) -> Result<UpWord> {
    UpWord::new(parse_word(alphabet, &d.u)?, parse_word(alphabet, &d.v)?)
}

/// Strings when every symbol is a single character, symbol lists otherwise.
pub fn upword_to_doc(alphabet: &Alphabet, w: &UpWord) -> UpWordDoc {
    let word = |x: &[usize]| {
        if alphabet.is_single_char() {
            WordDoc::Text(alphabet.format_word(x))
        } else {
            WordDoc::Symbols(x.iter().map(|&a| alphabet.symbol(a).to_string()).collect())
        }
    };
    UpWordDoc { u: word(&w.spoke), v: word(&w.cycle) }
}

pub fn parse_document(text: &str) -> Result<Document> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Input(format!("invalid JSON: {e}")))?;
    let is_fdfa = value.get("leading").is_some();
    if is_fdfa {
        let d: FdfaDoc = serde_json::from_value(value).map_err(|e| Error::Input(format!("invalid FDFA document: {e}")))?;
        let (f, c) = fdfa_from_doc(&d)?;
        Ok(Document::Fdfa(f, c))
    } else {
        let d: AutomatonDoc =
            serde_json::from_value(value).map_err(|e| Error::Input(format!("invalid automaton document: {e}")))?;
        Ok(Document::Automaton(automaton_from_doc(&d)?))
    }
}

pub fn to_json<T: Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(x).expect("documents serialize");
    s.push('\n');
    s
}
