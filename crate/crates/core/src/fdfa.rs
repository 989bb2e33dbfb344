//! Families of DFAs with exact, normalized and duo-normalized acceptance.

use crate::automata::{product, Alphabet, AutomatonStructure, Dfa, Word};
use crate::error::{Error, Result};
use crate::omega::{canonical_up, UpWord};
use std::collections::{BTreeMap, VecDeque};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AcceptanceMode {
    Exact,
    Normalized,
    DuoNormalized,
}

impl AcceptanceMode {
    pub fn kind(self) -> NormalizationKind {
        match self {
            AcceptanceMode::Exact => NormalizationKind::Exact,
            AcceptanceMode::Normalized => NormalizationKind::Normalized,
            AcceptanceMode::DuoNormalized => NormalizationKind::DuoNormalized,
        }
    }
}

/// Requirements on a decomposition `(u, v)`, weakest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NormalizationKind {
    Exact,
    Normalized,
    DuoNormalized,
    Persistent,
}

/// Two decompositions of one ω-word on which an FDFA disagrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationCounterexample {
    pub accepted: UpWord,
    pub rejected: UpWord,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fdfa {
    leading: AutomatonStructure,
    progress: Vec<Dfa>,
    mode: AcceptanceMode,
}

impl Fdfa {
    pub fn new(leading: AutomatonStructure, progress: Vec<Dfa>, mode: AcceptanceMode) -> Result<Self> {
        if progress.len() != leading.state_count() {
            return Err(Error::Input(format!(
                "{} progress DFAs for {} leading states",
                progress.len(),
                leading.state_count()
            )));
        }
        if progress.iter().any(|p| p.structure().alphabet() != leading.alphabet()) {
            return Err(Error::Input("progress alphabet differs from leading alphabet".into()));
        }
        Ok(Fdfa {
            leading,
            progress,
            mode,
        })
    }

    pub fn leading(&self) -> &AutomatonStructure {
        &self.leading
    }

    pub fn progress(&self, q: usize) -> &Dfa {
        &self.progress[q]
    }

    pub fn progress_all(&self) -> &[Dfa] {
        &self.progress
    }

    pub fn mode(&self) -> AcceptanceMode {
        self.mode
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.leading.alphabet()
    }

    /// Same machines read under another acceptance mode.
    pub fn with_mode(&self, mode: AcceptanceMode) -> Fdfa {
        Fdfa {
            mode,
            ..self.clone()
        }
    }

    pub fn leading_state(&self, u: &[usize]) -> usize {
        self.leading.run(self.leading.initial(), u)
    }

    /// Largest progress DFA.
    fn max_progress(&self) -> usize {
        self.progress.iter().map(Dfa::state_count).max().unwrap_or(1)
    }

    pub fn is_normalized(&self, u: &[usize], v: &[usize], kind: NormalizationKind) -> bool {
        if kind == NormalizationKind::Exact {
            return true;
        }
        let q = self.leading_state(u);
        if self.leading.run(q, v) != q {
            return false;
        }
        if kind == NormalizationKind::Normalized {
            return true;
        }
        let p = self.progress[q].structure();
        let once = p.run(p.initial(), v);
        if p.run(once, v) != once {
            return false;
        }
        if kind == NormalizationKind::DuoNormalized {
            return true;
        }
        // Weak normalization from every progress state: after one v we sit on a v-cycle.
        let n = p.state_count();
        let f: Vec<usize> = (0..n).map(|r| p.run(r, v)).collect();
        (0..n).all(|r| {
            let start = f[r];
            let mut cur = f[start];
            for _ in 0..n {
                if cur == start {
                    return true;
                }
                cur = f[cur];
            }
            false
        })
    }

    /// The decomposition `(x y^i, y^j)` of `w = x y^ω` satisfying `kind`, with
    /// `(i, j)` lexicographically least.
    pub fn normalize(&self, w: &UpWord, kind: NormalizationKind) -> UpWord {
        if kind == NormalizationKind::Exact {
            return w.clone();
        }
        let m = self.leading.state_count();
        let n = self.max_progress();
        let j_bound = 2 * m * n + 2 * n + 2;
        for i in 0..=m {
            let x = w.shifted(i, 1).spoke;
            let mut y = Vec::new();
            for _ in 1..=j_bound {
                y.extend_from_slice(&w.cycle);
                if self.is_normalized(&x, &y, kind) {
                    return UpWord { spoke: x, cycle: y };
                }
            }
        }
        unreachable!("a normalized decomposition exists within the bounds")
    }

    /// Membership of the decomposition itself, ignoring normalization.
    pub fn accepts_decomposition(&self, u: &[usize], v: &[usize]) -> bool {
        self.progress[self.leading_state(u)].accepts(v)
    }

    pub fn accepts(&self, w: &UpWord) -> bool {
        let d = self.normalize(w, self.mode.kind());
        self.accepts_decomposition(&d.spoke, &d.cycle)
    }

    pub fn accepts_persistent_mode(&self, w: &UpWord) -> bool {
        let d = self.normalize(w, NormalizationKind::Persistent);
        self.accepts_decomposition(&d.spoke, &d.cycle)
    }

    pub fn complement(&self) -> Fdfa {
        Fdfa {
            leading: self.leading.clone(),
            progress: self.progress.iter().map(Dfa::complement).collect(),
            mode: self.mode,
        }
    }

    fn combine(&self, other: &Fdfa, op: impl Fn(bool, bool) -> bool) -> Result<Fdfa> {
        if self.alphabet() != other.alphabet() {
            return Err(Error::Input("alphabet mismatch".into()));
        }
        if self.mode != other.mode {
            return Err(Error::Input(format!(
                "acceptance mode mismatch: {:?} vs {:?}",
                self.mode, other.mode
            )));
        }
        let lead = product(&[&self.leading, &other.leading])?;
        let progress = lead
            .tuples
            .iter()
            .map(|t| {
                let (a, b) = (&self.progress[t[0]], &other.progress[t[1]]);
                let p = product(&[a.structure(), b.structure()])?;
                let acc = p
                    .tuples
                    .iter()
                    .map(|s| op(a.is_accepting(s[0]), b.is_accepting(s[1])))
                    .collect();
                Ok(Dfa::from_flags(p.structure, acc))
            })
            .collect::<Result<Vec<_>>>()?;
        Fdfa::new(lead.structure, progress, self.mode)
    }

    pub fn intersect(&self, other: &Fdfa) -> Result<Fdfa> {
        self.combine(other, |a, b| a && b)
    }

    pub fn union(&self, other: &Fdfa) -> Result<Fdfa> {
        self.combine(other, |a, b| a || b)
    }

    /// An accepted decomposition, found by searching for a period that
    /// satisfies the mode's normalization and reaches an accepting state.
    pub fn emptiness_witness(&self) -> Option<UpWord> {
        let access = self.leading.access_words();
        for (q, u) in access.iter().enumerate() {
            let Some(u) = u else { continue };
            let p = &self.progress[q];
            let found = match self.mode {
                AcceptanceMode::Exact => self.search(q, p, None, |_, r, _| p.is_accepting(r), false),
                AcceptanceMode::Normalized => self.search(q, p, None, |l, r, _| l == q && p.is_accepting(r), true),
                AcceptanceMode::DuoNormalized => p.accepting_states().into_iter().find_map(|target| {
                    self.search(q, p, Some(target), |l, r, s| l == q && r == target && s == target, true)
                }),
            };
            if let Some(y) = found {
                return Some(UpWord {
                    spoke: u.clone(),
                    cycle: y,
                });
            }
        }
        None
    }

    /// BFS over nonempty words on (leading from q) × (progress from init) × (progress from `second`).
    fn search(
        &self,
        q: usize,
        p: &Dfa,
        second: Option<usize>,
        goal: impl Fn(usize, usize, usize) -> bool,
        track_leading: bool,
    ) -> Option<Word> {
        let ps = p.structure();
        let k = self.alphabet().len();
        let start = (
            if track_leading { q } else { 0 },
            ps.initial(),
            second.unwrap_or(0),
        );
        let step = |(l, r, s): (usize, usize, usize), a: usize| {
            (
                if track_leading { self.leading.succ(l, a) } else { 0 },
                ps.succ(r, a),
                if second.is_some() { ps.succ(s, a) } else { 0 },
            )
        };
        type Node = (usize, usize, usize);
        let mut prev: BTreeMap<Node, (Node, usize)> = BTreeMap::new();
        let mut queue = VecDeque::new();
        for a in 0..k {
            let t = step(start, a);
            if let std::collections::btree_map::Entry::Vacant(e) = prev.entry(t) {
                e.insert((start, a));
                queue.push_back(t);
            }
        }
        while let Some(cur) = queue.pop_front() {
            if goal(cur.0, cur.1, cur.2) {
                let mut w = Vec::new();
                let mut node = cur;
                // Only first-layer nodes point back to `start`.
                loop {
                    let (from, a) = prev[&node];
                    w.push(a);
                    if from == start {
                        break;
                    }
                    node = from;
                }
                w.reverse();
                return Some(w);
            }
            for a in 0..k {
                let t = step(cur, a);
                if let std::collections::btree_map::Entry::Vacant(e) = prev.entry(t) {
                    e.insert((cur, a));
                    queue.push_back(t);
                }
            }
        }
        None
    }

    pub fn is_empty(&self) -> bool {
        self.emptiness_witness().is_none()
    }

    /// A rejected word, if any.
    pub fn universality_counterexample(&self) -> Option<UpWord> {
        self.complement().emptiness_witness()
    }

    pub fn is_universal(&self) -> bool {
        self.universality_counterexample().is_none()
    }

    /// Both FDFAs read under the stronger of their two modes. A saturated FDFA
    /// stays saturated, with the same language, under a stronger mode.
    fn aligned(&self, other: &Fdfa) -> (Fdfa, Fdfa) {
        let mode = self.mode.max(other.mode);
        (self.with_mode(mode), other.with_mode(mode))
    }

    /// A word accepted by `other` but rejected by `self`.
    pub fn containment_counterexample(&self, other: &Fdfa) -> Result<Option<UpWord>> {
        let (a, b) = self.aligned(other);
        Ok(b.intersect(&a.complement())?.emptiness_witness())
    }

    /// Whether the language of `other` is a subset of that of `self`.
    pub fn contains(&self, other: &Fdfa) -> Result<bool> {
        Ok(self.containment_counterexample(other)?.is_none())
    }

    /// A word in the symmetric difference, if any.
    pub fn equivalence_counterexample(&self, other: &Fdfa) -> Result<Option<UpWord>> {
        match self.containment_counterexample(other)? {
            Some(w) => Ok(Some(w)),
            None => other.containment_counterexample(self),
        }
    }

    pub fn equivalent(&self, other: &Fdfa) -> Result<bool> {
        Ok(self.equivalence_counterexample(other)?.is_none())
    }

    /// Looks for two mode-normalized decompositions `(x, y)` of one ω-word,
    /// `|x| <= max_u`, `1 <= |y| <= max_v`, that disagree on membership.
    pub fn check_saturation_bounded(&self, max_u: usize, max_v: usize) -> Result<Option<SaturationCounterexample>> {
        if max_u < 1 || max_v < 1 {
            return Err(Error::Input("saturation bounds must be at least 1".into()));
        }
        let kind = self.mode.kind();
        let mut groups: BTreeMap<UpWord, (Option<UpWord>, Option<UpWord>)> = BTreeMap::new();
        for x in self.alphabet().words_between(0, max_u) {
            for y in self.alphabet().words_between(1, max_v) {
                if !self.is_normalized(&x, &y, kind) {
                    continue;
                }
                let w = UpWord { spoke: x.clone(), cycle: y };
                let slot = groups.entry(canonical_up(&w)).or_default();
                if self.accepts_decomposition(&w.spoke, &w.cycle) {
                    slot.0.get_or_insert(w);
                } else {
                    slot.1.get_or_insert(w);
                }
                if let (Some(a), Some(r)) = slot {
                    return Ok(Some(SaturationCounterexample {
                        accepted: a.clone(),
                        rejected: r.clone(),
                    }));
                }
            }
        }
        Ok(None)
    }
}
