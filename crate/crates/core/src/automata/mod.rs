//! Complete deterministic automaton structures over a finite alphabet.

mod moore;
mod product;
mod scc;

pub use moore::{isomorphic, minimize_moore, MooreQuotient};
pub use product::{product, product_from, Product};
pub use scc::{is_scc, sccs, tarjan, SccDecomposition};

use crate::error::{Error, Result};
use std::collections::VecDeque;

/// A finite word as a sequence of symbol indices.
pub type Word = Vec<usize>;

/// Ordered list of distinct symbol names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::Input("alphabet must be nonempty".into()));
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s.chars().any(char::is_whitespace) {
                return Err(Error::Input(format!("invalid symbol {s:?}")));
            }
            if symbols[..i].contains(s) {
                return Err(Error::Input(format!("duplicate symbol {s:?}")));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// One symbol per character, e.g. `"ab"`.
    pub fn from_chars(chars: &str) -> Result<Self> {
        Alphabet::new(chars.chars().map(String::from))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, i: usize) -> &str {
        &self.symbols[i]
    }

    pub fn index_of(&self, sym: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == sym)
    }

    /// Parses a word written with one character per symbol.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut buf = [0u8; 4];
        text.chars()
            .map(|c| {
                self.index_of(c.encode_utf8(&mut buf))
                    .ok_or_else(|| Error::Input(format!("symbol {c:?} not in alphabet")))
            })
            .collect()
    }

    /// Parses a word given as a list of symbol names.
    pub fn parse_symbols<S: AsRef<str>>(&self, syms: &[S]) -> Result<Word> {
        syms.iter()
            .map(|s| {
                self.index_of(s.as_ref())
                    .ok_or_else(|| Error::Input(format!("symbol {:?} not in alphabet", s.as_ref())))
            })
            .collect()
    }

    pub fn format_word(&self, w: &[usize]) -> String {
        w.iter().map(|&a| self.symbols[a].as_str()).collect()
    }

    /// True when every symbol is a single character, so words can be written as strings.
    pub fn is_single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    pub fn check_word(&self, w: &[usize]) -> Result<()> {
        match w.iter().find(|&&a| a >= self.len()) {
            Some(a) => Err(Error::Input(format!("symbol index {a} out of range"))),
            None => Ok(()),
        }
    }

    /// All words of length exactly `n`, in length-lexicographic order.
    pub fn words_of_len(&self, n: usize) -> Vec<Word> {
        let k = self.len();
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::with_capacity(out.len() * k);
            for w in &out {
                for a in 0..k {
                    let mut w2: Word = w.clone();
                    w2.push(a);
                    next.push(w2);
                }
            }
            out = next;
        }
        out
    }

    /// All words with `lo <= |w| <= hi`, shortest first.
    pub fn words_between(&self, lo: usize, hi: usize) -> Vec<Word> {
        (lo..=hi).flat_map(|n| self.words_of_len(n)).collect()
    }
}

/// A complete deterministic transition system.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AutomatonStructure {
    alphabet: Alphabet,
    initial: usize,
    delta: Vec<Vec<usize>>,
}

impl AutomatonStructure {
    /// Validates completeness: one row per state, one target per symbol.
    pub fn new(alphabet: Alphabet, initial: usize, delta: Vec<Vec<usize>>) -> Result<Self> {
        let n = delta.len();
        if n == 0 {
            return Err(Error::Input("structure needs at least one state".into()));
        }
        if initial >= n {
            return Err(Error::Input(format!("initial state {initial} out of range")));
        }
        for (q, row) in delta.iter().enumerate() {
            if row.len() != alphabet.len() {
                return Err(Error::Input(format!(
                    "state {q} has {} transitions, expected {}",
                    row.len(),
                    alphabet.len()
                )));
            }
            if let Some(t) = row.iter().find(|&&t| t >= n) {
                return Err(Error::Input(format!("state {q} targets missing state {t}")));
            }
        }
        Ok(AutomatonStructure {
            alphabet,
            initial,
            delta,
        })
    }

    /// A single state looping on every symbol.
    pub fn trivial(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        AutomatonStructure {
            alphabet,
            initial: 0,
            delta: vec![vec![0; k]],
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.delta.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn delta(&self) -> &[Vec<usize>] {
        &self.delta
    }

    #[inline]
    pub fn succ(&self, q: usize, a: usize) -> usize {
        self.delta[q][a]
    }

    /// Same transitions, different initial state.
    pub fn with_initial(&self, q: usize) -> Self {
        assert!(q < self.state_count());
        AutomatonStructure {
            initial: q,
            ..self.clone()
        }
    }

    /// Runs `w` from `from`; assumes the word is valid.
    #[inline]
    pub fn run(&self, from: usize, w: &[usize]) -> usize {
        w.iter().fold(from, |q, &a| self.delta[q][a])
    }

    /// Checked version of [`run`](Self::run).
    pub fn run_finite(&self, from: usize, w: &[usize]) -> Result<usize> {
        if from >= self.state_count() {
            return Err(Error::Input(format!("state {from} out of range")));
        }
        self.alphabet.check_word(w)?;
        Ok(self.run(from, w))
    }

    pub fn reachable_from(&self, q: usize) -> Vec<bool> {
        let mut seen = vec![false; self.state_count()];
        let mut stack = vec![q];
        seen[q] = true;
        while let Some(p) = stack.pop() {
            for &t in &self.delta[p] {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }

    pub fn reachable(&self) -> Vec<bool> {
        self.reachable_from(self.initial)
    }

    /// Shortest (then lexicographically least) word reaching each state from `q`.
    pub fn access_words_from(&self, q: usize) -> Vec<Option<Word>> {
        let mut words: Vec<Option<Word>> = vec![None; self.state_count()];
        words[q] = Some(Vec::new());
        let mut queue = VecDeque::from([q]);
        while let Some(p) = queue.pop_front() {
            for (a, &t) in self.delta[p].iter().enumerate() {
                if words[t].is_none() {
                    let mut w = words[p].clone().unwrap();
                    w.push(a);
                    words[t] = Some(w);
                    queue.push_back(t);
                }
            }
        }
        words
    }

    pub fn access_words(&self) -> Vec<Option<Word>> {
        self.access_words_from(self.initial)
    }

    /// Shortest nonempty word leading from `from` to `to`, if any.
    pub fn nonempty_path(&self, from: usize, to: usize) -> Option<Word> {
        let mut words: Vec<Option<Word>> = vec![None; self.state_count()];
        let mut queue = VecDeque::new();
        for (a, &t) in self.delta[from].iter().enumerate() {
            if words[t].is_none() {
                words[t] = Some(vec![a]);
                queue.push_back(t);
            }
        }
        while let Some(p) = queue.pop_front() {
            if p == to {
                break;
            }
            for (a, &t) in self.delta[p].iter().enumerate() {
                if words[t].is_none() {
                    let mut w = words[p].clone().unwrap();
                    w.push(a);
                    words[t] = Some(w);
                    queue.push_back(t);
                }
            }
        }
        words[to].take()
    }

    /// Restricts to the reachable states, renumbered in BFS order. Returns the map old → new.
    pub fn trim(&self) -> (AutomatonStructure, Vec<Option<usize>>) {
        let mut map = vec![None; self.state_count()];
        let mut order = vec![self.initial];
        map[self.initial] = Some(0);
        let mut i = 0;
        while i < order.len() {
            let p = order[i];
            for &t in &self.delta[p] {
                if map[t].is_none() {
                    map[t] = Some(order.len());
                    order.push(t);
                }
            }
            i += 1;
        }
        let delta = order
            .iter()
            .map(|&p| self.delta[p].iter().map(|&t| map[t].unwrap()).collect())
            .collect();
        let s = AutomatonStructure {
            alphabet: self.alphabet.clone(),
            initial: 0,
            delta,
        };
        (s, map)
    }
}

/// A deterministic finite automaton on finite words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    structure: AutomatonStructure,
    accepting: Vec<bool>,
}

impl Dfa {
    pub fn new(structure: AutomatonStructure, accepting: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut flags = vec![false; structure.state_count()];
        for q in accepting {
            if q >= flags.len() {
                return Err(Error::Input(format!("accepting state {q} out of range")));
            }
            flags[q] = true;
        }
        Ok(Dfa {
            structure,
            accepting: flags,
        })
    }

    pub fn from_flags(structure: AutomatonStructure, accepting: Vec<bool>) -> Self {
        assert_eq!(structure.state_count(), accepting.len());
        Dfa {
            structure,
            accepting,
        }
    }

    pub fn structure(&self) -> &AutomatonStructure {
        &self.structure
    }

    pub fn state_count(&self) -> usize {
        self.structure.state_count()
    }

    pub fn initial(&self) -> usize {
        self.structure.initial()
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn accepting_flags(&self) -> &[bool] {
        &self.accepting
    }

    pub fn accepting_states(&self) -> Vec<usize> {
        (0..self.state_count()).filter(|&q| self.accepting[q]).collect()
    }

    pub fn run(&self, w: &[usize]) -> usize {
        self.structure.run(self.structure.initial(), w)
    }

    pub fn accepts(&self, w: &[usize]) -> bool {
        self.accepting[self.run(w)]
    }

    pub fn complement(&self) -> Dfa {
        Dfa {
            structure: self.structure.clone(),
            accepting: self.accepting.iter().map(|b| !b).collect(),
        }
    }

    /// Words reaching `q` from the initial state.
    pub fn reach_view(&self, q: usize) -> Dfa {
        let mut accepting = vec![false; self.state_count()];
        accepting[q] = true;
        Dfa {
            structure: self.structure.clone(),
            accepting,
        }
    }

    /// The same DFA started in `q`.
    pub fn from_view(&self, q: usize) -> Dfa {
        Dfa {
            structure: self.structure.with_initial(q),
            accepting: self.accepting.clone(),
        }
    }

    /// Words leading from `q` to `q2`.
    pub fn from_to_view(&self, q: usize, q2: usize) -> Dfa {
        let mut accepting = vec![false; self.state_count()];
        accepting[q2] = true;
        Dfa {
            structure: self.structure.with_initial(q),
            accepting,
        }
    }

    /// The classical minimal DFA, states numbered in BFS order.
    pub fn minimize(&self) -> Dfa {
        let q = minimize_moore(&self.structure, &self.accepting, true);
        Dfa {
            structure: q.structure,
            accepting: q.outputs,
        }
    }

    /// Searches for a word on which the two DFAs disagree.
    pub fn distinguishing_word(&self, other: &Dfa) -> Result<Option<Word>> {
        let p = product(&[&self.structure, &other.structure])?;
        let words = p.structure.access_words();
        for (s, t) in p.tuples.iter().enumerate() {
            if self.accepting[t[0]] != other.accepting[t[1]] {
                return Ok(words[s].clone());
            }
        }
        Ok(None)
    }
}
