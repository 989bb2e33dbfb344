use super::{Color, ColorContext};
use crate::error::Result;
use crate::omega::{state_equiv, Profile};
use std::cell::RefCell;
use std::collections::HashMap;

/// Evaluates the color definition literally, with the extension `z` ranging over
/// words of length at most `z_bound` and repetitions `i` up to `rep_bound`.
///
/// Answers are exact only relative to those bounds. Words are handled through
/// their transition profiles in the source automaton, which determine both
/// u-invariance and membership of every derived ω-word.
pub struct BruteForce<'a> {
    ctx: &'a ColorContext,
    extensions: Vec<Profile>,
    rep_bound: usize,
    equiv: Vec<Vec<bool>>,
    max_color: u32,
    relevant_memo: RefCell<HashMap<(usize, Profile), bool>>,
    sat_memo: RefCell<HashMap<(usize, Profile, u32), bool>>,
}

impl<'a> BruteForce<'a> {
    pub fn new(ctx: &'a ColorContext, z_bound: usize, rep_bound: usize) -> Result<Self> {
        let m = ctx.language();
        let s = m.structure();
        let n = s.state_count();
        let equiv = (0..n)
            .map(|p| (0..n).map(|q| state_equiv(m, p, q, ctx.limits())).collect::<Result<Vec<bool>>>())
            .collect::<Result<Vec<_>>>()?;
        let extensions = s
            .alphabet()
            .words_between(0, z_bound)
            .iter()
            .map(|z| Profile::of_word(s, z))
            .collect();
        Ok(BruteForce {
            ctx,
            extensions,
            rep_bound: rep_bound.max(1),
            equiv,
            max_color: 2 * n as u32 + 2,
            relevant_memo: RefCell::new(HashMap::new()),
            sat_memo: RefCell::new(HashMap::new()),
        })
    }

    pub fn color(&self, u: &[usize], v: &[usize]) -> Color {
        let s = self.ctx.language().structure();
        let q = s.run(s.initial(), u);
        self.color_of(q, &Profile::of_word(s, v))
    }

    fn invariant(&self, q: usize, w: &Profile) -> bool {
        self.equiv[q][w.target(q)]
    }

    fn member(&self, q: usize, w: &Profile) -> bool {
        self.ctx.language().accepts_set(&w.inf_set_from(q))
    }

    fn relevant(&self, q: usize, w: &Profile) -> bool {
        if let Some(&r) = self.relevant_memo.borrow().get(&(q, w.clone())) {
            return r;
        }
        let r = self.extensions.iter().any(|z| self.invariant(q, &w.then(z)));
        self.relevant_memo.borrow_mut().insert((q, w.clone()), r);
        r
    }

    fn color_of(&self, q: usize, w: &Profile) -> Color {
        if !self.relevant(q, w) {
            return Color::Bottom;
        }
        (0..=self.max_color)
            .find(|&c| self.satisfies(q, w, c))
            .map_or(Color::Value(self.max_color + 1), Color::Value)
    }

    /// color(w) < c
    fn below(&self, q: usize, w: &Profile, c: u32) -> bool {
        !self.relevant(q, w) || (0..c).any(|d| self.satisfies(q, w, d))
    }

    /// Every invariant extension `wz` is in the language exactly when `c` is even,
    /// unless some power of `wz` has a color below `c`.
    fn satisfies(&self, q: usize, w: &Profile, c: u32) -> bool {
        let key = (q, w.clone(), c);
        if let Some(&r) = self.sat_memo.borrow().get(&key) {
            return r;
        }
        let r = self.extensions.iter().all(|z| {
            let wz = w.then(z);
            if !self.invariant(q, &wz) || self.member(q, &wz) == c.is_multiple_of(2) {
                return true;
            }
            (1..=self.rep_bound).any(|i| self.below(q, &wz.power(i), c))
        });
        self.sat_memo.borrow_mut().insert(key, r);
        r
    }
}
