//! Exhaustive bounded property suites over languages and FDFAs.
//!
//! Every check is evaluated on a concrete instance (a tuple of words) and a
//! failing instance is kept as the witness, so a [`Violation`] can be replayed
//! against the same suite.

use std::fmt;

use crate::automata::{sccs, Alphabet, Word};
use crate::blackwhite::{black_white_dba, black_white_dca, build_c_lector, lector_run_classifier, CLector, LectorVerdict};
use crate::colors::{build_colorful_fdfa, color_states_procedure, BruteForce, Color, ColorContext, ColorfulFdfa};
use crate::error::{Error, Limits, Result};
use crate::fdfa::{AcceptanceMode, Fdfa, NormalizationKind};
use crate::omega::{canonical_up, OmegaAutomaton, UpWord};
use crate::persistent::{is_persistent, PersistentDfa, Polarity};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_u: usize,
    pub max_v: usize,
    pub max_ext: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_u: 2, max_v: 5, max_ext: 6 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub subject: String,
    pub property: &'static str,
    pub param: u32,
    /// Indices of the FDFA operands, for the algebra suite.
    pub operands: Vec<usize>,
    pub witness: Vec<Word>,
    pub detail: String,
}

impl Violation {
    pub fn describe(&self, alphabet: &Alphabet) -> String {
        let words: Vec<String> = self
            .witness
            .iter()
            .map(|w| if w.is_empty() { "ε".to_string() } else { alphabet.format_word(w) })
            .collect();
        format!(
            "{} on {} (param {}): witness [{}]: {}",
            self.property,
            self.subject,
            self.param,
            words.join(", "),
            self.detail
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub subject: String,
    pub property: &'static str,
    pub param: u32,
    pub instances: usize,
    pub violations: Vec<Violation>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}[{}] on {}: {} instances, {} violations",
            if self.passed() { "ok  " } else { "FAIL" },
            self.property,
            self.param,
            self.subject,
            self.instances,
            self.violations.len()
        )
    }
}

#[derive(Debug, Clone, Copy)]
enum Shape {
    /// One access word per leading class.
    Class,
    Uv,
    /// `(u, v, z)` with `|z| <= max_ext`, optionally nonempty.
    Uvz { nonempty: bool },
    /// `(u, u', v)` with `u ~ u'`, `u != u'`.
    Uuv,
    /// `(u, x, y, v)` with `u ~ xy`.
    Uxyv,
    /// `(u, v, x, y)` where `(x, y)` is a rotation or power of `(u, v)`.
    Uvxy,
}

type Check = fn(&LanguageSuite, u32, &[Word]) -> Option<String>;

struct Property {
    name: &'static str,
    param: u32,
    shape: Shape,
    check: Check,
}

/// A language together with everything derived from it that the checks consult.
pub struct LanguageSuite {
    name: String,
    bounds: Bounds,
    ctx: ColorContext,
    colorful: ColorfulFdfa,
    periodic_duo: Fdfa,
    colorful_pdfas: Vec<PersistentDfa>,
    alternations: Vec<Vec<u32>>,
    lectors: Vec<CLector>,
    dba: Option<OmegaAutomaton>,
    dca: Option<OmegaAutomaton>,
    oracle_bounds: (usize, usize),
}

const MAX_LECTOR_C: u32 = 3;

impl LanguageSuite {
    pub fn new(name: &str, language: &OmegaAutomaton, bounds: Bounds, limits: &Limits) -> Result<Self> {
        let ctx = ColorContext::new(language, limits)?;
        let colorful = build_colorful_fdfa(&ctx)?;
        let periodic_duo = ctx.periodic().with_mode(AcceptanceMode::DuoNormalized);
        let colorful_pdfas = (0..ctx.class_count())
            .map(|q| PersistentDfa::build(colorful.fdfa(), q, limits))
            .collect::<Result<Vec<_>>>()?;
        let alternations = (0..ctx.class_count()).map(|q| alternation_depths(colorful.fdfa(), q)).collect();
        let lectors = (0..=MAX_LECTOR_C).map(|c| build_c_lector(&ctx, &colorful, c)).collect();
        let dba = optional(black_white_dba(&ctx))?;
        let dca = optional(black_white_dca(&ctx))?;
        Ok(LanguageSuite {
            name: name.to_string(),
            bounds,
            ctx,
            colorful,
            periodic_duo,
            colorful_pdfas,
            alternations,
            lectors,
            dba,
            dca,
            oracle_bounds: (4, 3),
        })
    }

    pub fn context(&self) -> &ColorContext {
        &self.ctx
    }

    pub fn colorful(&self) -> &ColorfulFdfa {
        &self.colorful
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.ctx.language().alphabet()
    }

    fn properties() -> Vec<Property> {
        let mut out = Vec::new();
        // param 0: natural colors, param 1: clamped colors on relevant words
        for clamped in [0, 1] {
            let mut p = |name, shape, check: Check| out.push(Property { name, param: clamped, shape, check });
            p("class-agreement", Shape::Uuv, check_class_agreement);
            p("non-increasing", Shape::Uvz { nonempty: false }, check_non_increasing);
            p("step-by-step", Shape::Uv, check_step_by_step);
            p("eventually-stable", Shape::Uv, check_eventually_stable);
            p("reliable-determines", Shape::Uv, check_reliable_determines);
            p("strictly-decreasing", Shape::Uvz { nonempty: true }, check_strictly_decreasing);
            p("reliable-extension", Shape::Uv, check_reliable_extension);
            p("less-is-more", Shape::Uxyv, check_less_is_more);
            p("normalizations-agree", Shape::Uvxy, check_normalizations_agree);
            p("chains-vs-oracle", Shape::Uv, check_against_oracle);
            p("reliable-infinite-color", Shape::Uv, check_reliable_infinite_color);
            p("color-parity", Shape::Uv, check_color_parity);
        }
        let mut p = |name, param, shape, check: Check| out.push(Property { name, param, shape, check });
        p("infinite-color-minimal", 0, Shape::Uv, check_infinite_color_minimal);
        for f in [0, 1] {
            p("persistent-implies-reliable", f, Shape::Uv, check_persistent_reliable);
            p("persistent-acceptance", f, Shape::Uv, check_persistent_acceptance);
        }
        p("reliable-chain-persistent", 0, Shape::Uv, check_reliable_chain);
        p("acceptance-implications", 0, Shape::Uv, check_acceptance_implications);
        p("normalization", 0, Shape::Uv, check_normalization);
        p("colorful-reliable", 0, Shape::Uv, check_colorful_reliable);
        p("colorful-mscc-procedure", 0, Shape::Class, check_colorful_procedure);
        p("colorful-alternations", 0, Shape::Uv, check_colorful_alternations);
        p("colorful-colors", 0, Shape::Uv, check_colorful_colors);
        for c in 0..=MAX_LECTOR_C {
            p("c-lector", c, Shape::Uv, check_lector);
        }
        p("black-white", 0, Shape::Uv, check_black_white);
        p("black-white", 1, Shape::Uv, check_black_white);
        out
    }

    fn instances(&self, shape: Shape) -> Vec<Vec<Word>> {
        let al = self.alphabet();
        let b = self.bounds;
        let us = al.words_between(0, b.max_u);
        let vs = al.words_between(1, b.max_v);
        let mut out = Vec::new();
        match shape {
            Shape::Class => {
                for w in self.ctx.leading().structure.access_words().into_iter().flatten() {
                    out.push(vec![w]);
                }
            }
            Shape::Uv => {
                for u in &us {
                    for v in &vs {
                        out.push(vec![u.clone(), v.clone()]);
                    }
                }
            }
            Shape::Uvz { nonempty } => {
                let zs = al.words_between(usize::from(nonempty), b.max_ext);
                for u in &us {
                    for v in &vs {
                        for z in &zs {
                            out.push(vec![u.clone(), v.clone(), z.clone()]);
                        }
                    }
                }
            }
            Shape::Uuv => {
                for u in &us {
                    for u2 in &us {
                        if u != u2 && self.ctx.class_of(u) == self.ctx.class_of(u2) {
                            for v in &vs {
                                out.push(vec![u.clone(), u2.clone(), v.clone()]);
                            }
                        }
                    }
                }
            }
            Shape::Uxyv => {
                for x in &us {
                    for y in &us {
                        let xy = concat(x, y);
                        let q = self.ctx.class_of(&xy);
                        for u in us.iter().filter(|u| self.ctx.class_of(u) == q) {
                            for v in &vs {
                                out.push(vec![u.clone(), x.clone(), y.clone(), v.clone()]);
                            }
                        }
                    }
                }
            }
            Shape::Uvxy => {
                for u in &us {
                    for v in &vs {
                        let w = UpWord { spoke: u.clone(), cycle: v.clone() };
                        for k in 0..v.len() {
                            let x = w.prefix(u.len() + k);
                            let rot = concat(&v[k..], &v[..k]);
                            for j in 1..=2 {
                                out.push(vec![u.clone(), v.clone(), x.clone(), rot.repeat(j)]);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn run(&self) -> Vec<SuiteReport> {
        Self::properties()
            .into_iter()
            .map(|p| {
                let instances = self.instances(p.shape);
                let violations = instances
                    .iter()
                    .filter_map(|w| {
                        (p.check)(self, p.param, w).map(|detail| Violation {
                            subject: self.name.clone(),
                            property: p.name,
                            param: p.param,
                            operands: Vec::new(),
                            witness: w.clone(),
                            detail,
                        })
                    })
                    .collect();
                SuiteReport {
                    subject: self.name.clone(),
                    property: p.name,
                    param: p.param,
                    instances: instances.len(),
                    violations,
                }
            })
            .collect()
    }

    /// Re-evaluates the check behind `v` on its witness. `Some` means it still fails.
    pub fn replay(&self, v: &Violation) -> Result<Option<String>> {
        let p = Self::properties()
            .into_iter()
            .find(|p| p.name == v.property && p.param == v.param)
            .ok_or_else(|| Error::Input(format!("unknown property {}[{}]", v.property, v.param)))?;
        Ok((p.check)(self, p.param, &v.witness))
    }

    fn oracle(&self) -> BruteForce<'_> {
        self.ctx
            .brute_force(self.oracle_bounds.0, self.oracle_bounds.1)
            .expect("oracle construction was validated by the context")
    }

    /// Color under the selected reading: natural, or clamped (`None` when the
    /// period is irrelevant, which the clamped reading excludes).
    fn color(&self, clamped: u32, u: &[usize], v: &[usize]) -> Option<Color> {
        if clamped == 0 {
            Some(self.ctx.finite_color(u, v))
        } else if self.ctx.is_relevant(u, v) {
            Some(Color::Value(self.ctx.finite_color_clamped(u, v)))
        } else {
            None
        }
    }

    /// Stability under the selected reading. The vector states of `v, v^2, …`
    /// repeat within the persistent DFA's size, so checking that many powers is exact.
    fn stable(&self, clamped: u32, u: &[usize], v: &[usize]) -> Option<bool> {
        let c = self.color(clamped, u, v)?;
        let n = self.ctx.class(self.ctx.class_of(u)).pdfa.len();
        for j in 2..=n + 1 {
            if self.color(clamped, u, &v.repeat(j)) != Some(c) {
                return Some(false);
            }
        }
        Some(true)
    }

    fn reliable(&self, clamped: u32, u: &[usize], v: &[usize]) -> Option<bool> {
        Some(self.ctx.is_invariant(u, v) && self.stable(clamped, u, v)?)
    }

    fn member(&self, u: &[usize], v: &[usize]) -> bool {
        self.ctx.language().accepts_up(&UpWord { spoke: u.to_vec(), cycle: v.to_vec() })
    }
}

fn optional(r: Result<OmegaAutomaton>) -> Result<Option<OmegaAutomaton>> {
    match r {
        Ok(m) => Ok(Some(m)),
        Err(Error::Domain(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn concat(a: &[usize], b: &[usize]) -> Word {
    let mut w = a.to_vec();
    w.extend_from_slice(b);
    w
}

/// Longest number of acceptance alternations along a path from each progress state.
fn alternation_depths(f: &Fdfa, q: usize) -> Vec<u32> {
    let p = f.progress(q);
    let dec = sccs(p.structure(), None);
    let mut depth = vec![0u32; dec.len()];
    for c in (0..dec.len()).rev() {
        let acc = p.is_accepting(dec.components[c][0]);
        depth[c] = dec.successors[c]
            .iter()
            .map(|&d| depth[d] + u32::from(p.is_accepting(dec.components[d][0]) != acc))
            .max()
            .unwrap_or(0);
    }
    (0..p.state_count())
        .map(|s| dec.component_of[s].map_or(0, |c| depth[c]))
        .collect()
}

fn fail(cond: bool, msg: impl FnOnce() -> String) -> Option<String> {
    if cond {
        None
    } else {
        Some(msg())
    }
}

fn check_class_agreement(s: &LanguageSuite, cl: u32, w: &[Word]) -> Option<String> {
    let (Some(a), Some(b)) = (s.color(cl, &w[0], &w[2]), s.color(cl, &w[1], &w[2])) else {
        return None;
    };
    fail(a == b, || format!("colors {a} and {b} differ on equivalent prefixes"))
}

fn check_non_increasing(s: &LanguageSuite, cl: u32, w: &[Word]) -> Option<String> {
    let vz = concat(&w[1], &w[2]);
    let (Some(a), Some(b)) = (s.color(cl, &w[0], &w[1]), s.color(cl, &w[0], &vz)) else {
        return None;
    };
    fail(b <= a, || format!("extension raised the color from {a} to {b}"))
}

fn check_step_by_step(s: &LanguageSuite, cl: u32, w: &[Word]) -> Option<String> {
    let (u, v) = (&w[0], &w[1]);
    let Some(Color::Value(c)) = s.color(cl, u, v) else {
        return None;
    };
    if c <= 1 {
        return None;
    }
    let found = s.alphabet().words_between(0, s.bounds.max_ext).into_iter().any(|z| {
        let vz = concat(v, &z);
        s.ctx.is_invariant(u, &vz) && s.color(cl, u, &vz) == Some(Color::Value(c - 1))
    });
    fail(found, || format!("no invariant extension of color {} found", c - 1))
}

fn check_eventually_stable(s: &LanguageSuite, cl: u32, w: &[Word]) -> Option<String> {
    let (u, v) = (&w[0], &w[1]);
    s.color(cl, u, v)?;
    if cl == 0 && s.stable(0, u, v) != Some(s.ctx.is_stable(u, v)) {
        return Some("stability disagrees with the context's own test".into());
    }
    let i = (1..=s.bounds.max_ext).find(|&i| s.stable(cl, u, &v.repeat(i)) == Some(true));
    match i {
        None => Some("no stable power found".into()),
        Some(i) if s.ctx.is_invariant(u, v) && s.reliable(cl, u, &v.repeat(i)) != Some(true) => {
            Some(format!("power {i} is stable but not reliable"))
        }
        _ => None,
    }
}

fn check_reliable_determines(s: &LanguageSuite, cl: u32, w: &[Word]) -> Option<String> {
    let (u, v) = (&w[0], &w[1]);
    if s.reliable(cl, u, v) != Some(true) {
        return None;
    }
    let c = s.color(cl, u, v)?;
    let even = c.value().is_some_and(|c| c % 2 == 0);
    fail(even == s.member(u, v), || format!("reliable color {c} disagrees with membership"))
}

fn check_strictly_decreasing(s: &LanguageSuite, cl: u32, w: &[Word]) -> Option<String> {
    let (u, v) = (&w[0], &w[1]);
    let vz = concat(v, &w[2]);
    if s.reliable(cl, u, v) != Some(true) || s.reliable(cl, u, &vz) != Some(true) {
        return None;
    }
    if s.member(u, v) == s.member(u, &vz) {
        return None;
    }
    let (a, b) = (s.color(cl, u, v)?, s.color(cl, u, &vz)?);
    fail(a > b, || format!("membership flipped but the color went from {a} to {b}"))
}

fn check_reliable_extension(s: &LanguageSuite, cl: u32, w: &[Word]) -> Option<String> {
    let (u, v) = (&w[0], &w[1]);
    if !s.ctx.is_relevant(u, v) {
        return None;
    }
    let c = s.color(cl, u, v)?;
    let found = s.alphabet().words_between(0, s.bounds.max_ext).into_iter().any(|z| {
        let vz = concat(v, &z);
        s.color(cl, u, &vz) == Some(c) && s.reliable(cl, u, &vz) == Some(true)
    });
    fail(found, || format!("no reliable extension of color {c} found"))
}

fn check_less_is_more(s: &LanguageSuite, cl: u32, w: &[Word]) -> Option<String> {
    let (u, x, y, v) = (&w[0], &w[1], &w[2], &w[3]);
    let yv = concat(y, v);
    let (Some(a), Some(b)) = (s.color(cl, u, v), s.color(cl, x, &yv)) else {
        return None;
    };
    fail(a >= b, || format!("color {a} is below the shifted color {b}"))
}

fn check_normalizations_agree(s: &LanguageSuite, cl: u32, w: &[Word]) -> Option<String> {
    let (u, v, x, y) = (&w[0], &w[1], &w[2], &w[3]);
    if y.is_empty() {
        return None;
    }
    let same = canonical_up(&UpWord { spoke: u.clone(), cycle: v.clone() })
        == canonical_up(&UpWord { spoke: x.clone(), cycle: y.clone() });
    if !same || s.reliable(cl, u, v) != Some(true) || s.reliable(cl, x, y) != Some(true) {
        return None;
    }
    let (a, b) = (s.color(cl, u, v)?, s.color(cl, x, y)?);
    fail(a == b, || format!("reliable decompositions have colors {a} and {b}"))
}

fn check_against_oracle(s: &LanguageSuite, cl: u32, w: &[Word]) -> Option<String> {
    let (u, v) = (&w[0], &w[1]);
    let c = s.color(cl, u, v)?;
    let mut expected = s.oracle().color(u, v);
    if cl == 1 {
        expected = expected.max(Color::Value(s.ctx.mincolor_of(u)));
    }
    fail(c == expected, || format!("chain-based color {c}, bounded definition gives {expected}"))
}

fn check_reliable_infinite_color(s: &LanguageSuite, cl: u32, w: &[Word]) -> Option<String> {
    let (u, v) = (&w[0], &w[1]);
    if s.reliable(cl, u, v) != Some(true) {
        return None;
    }
    let c = s.color(cl, u, v)?;
    let inf = s.ctx.infinite_color(&UpWord { spoke: u.clone(), cycle: v.clone() });
    fail(c == Color::Value(inf), || format!("reliable color {c} but infinite color {inf}"))
}

fn check_color_parity(s: &LanguageSuite, cl: u32, w: &[Word]) -> Option<String> {
    let (u, v) = (&w[0], &w[1]);
    if cl == 1 && !s.ctx.is_relevant(u, v) {
        return None;
    }
    let inf = s.ctx.infinite_color(&UpWord { spoke: u.clone(), cycle: v.clone() });
    fail(inf.is_multiple_of(2) == s.member(u, v), || format!("infinite color {inf} disagrees with membership"))
}

fn check_infinite_color_minimal(s: &LanguageSuite, _: u32, w: &[Word]) -> Option<String> {
    let (u, v) = (&w[0], &w[1]);
    if !s.ctx.is_invariant(u, v) {
        return None;
    }
    let inf = s.ctx.infinite_color(&UpWord { spoke: u.clone(), cycle: v.clone() });
    let c = s.ctx.finite_color(u, v);
    fail(Color::Value(inf) <= c, || format!("infinite color {inf} exceeds the invariant period's color {c}"))
}

fn fdfa_for(s: &LanguageSuite, which: u32) -> &Fdfa {
    if which == 0 {
        &s.periodic_duo
    } else {
        s.colorful.fdfa()
    }
}

fn check_persistent_reliable(s: &LanguageSuite, which: u32, w: &[Word]) -> Option<String> {
    let (u, v) = (&w[0], &w[1]);
    let f = fdfa_for(s, which);
    if !is_persistent(f, u, v) {
        return None;
    }
    if !s.ctx.is_reliable(u, v) {
        return Some("persistent period is not reliable".into());
    }
    let c = s.ctx.finite_color(u, v);
    for i in 2..=4 {
        let vi = v.repeat(i);
        if f.accepts_decomposition(u, &vi) != f.accepts_decomposition(u, v) {
            return Some(format!("acceptance changes at power {i}"));
        }
        if s.ctx.finite_color(u, &vi) != c {
            return Some(format!("color changes at power {i}"));
        }
    }
    None
}

fn check_persistent_acceptance(s: &LanguageSuite, which: u32, w: &[Word]) -> Option<String> {
    let f = fdfa_for(s, which);
    let up = UpWord { spoke: w[0].clone(), cycle: w[1].clone() };
    let (a, b) = (f.accepts_persistent_mode(&up), f.accepts(&up));
    fail(a == b, || format!("persistent-mode acceptance {a}, duo-normalized {b}"))
}

fn check_reliable_chain(s: &LanguageSuite, _: u32, w: &[Word]) -> Option<String> {
    let (u, v) = (&w[0], &w[1]);
    if !s.ctx.is_reliable(u, v) {
        return None;
    }
    let Color::Value(c) = s.ctx.finite_color(u, v) else {
        return None;
    };
    let m = s.ctx.mincolor_of(u);
    let k = c + 1 - m;
    let pd = &s.colorful_pdfas[s.colorful.fdfa().leading_state(u)];
    let t = pd.run(v);
    let pol = Polarity::from_accepting(c % 2 == 0);
    let got = pd.chain_from(t, pol);
    fail(got >= k, || format!("reliable chain of length {k} but persistent chains reach only {got}"))
}

fn check_acceptance_implications(s: &LanguageSuite, _: u32, w: &[Word]) -> Option<String> {
    let up = UpWord { spoke: w[0].clone(), cycle: w[1].clone() };
    let expected = s.ctx.language().accepts_up(&up);
    for mode in [AcceptanceMode::Exact, AcceptanceMode::Normalized, AcceptanceMode::DuoNormalized] {
        let got = s.ctx.periodic().with_mode(mode).accepts(&up);
        if got != expected {
            return Some(format!("periodic FDFA under {mode:?} says {got}, automaton says {expected}"));
        }
    }
    None
}

fn check_normalization(s: &LanguageSuite, _: u32, w: &[Word]) -> Option<String> {
    let up = UpWord { spoke: w[0].clone(), cycle: w[1].clone() };
    let kinds = [
        NormalizationKind::Exact,
        NormalizationKind::Normalized,
        NormalizationKind::DuoNormalized,
        NormalizationKind::Persistent,
    ];
    for f in [s.ctx.periodic(), s.colorful.fdfa()] {
        for kind in kinds {
            let d = f.normalize(&up, kind);
            if canonical_up(&d) != canonical_up(&up) {
                return Some(format!("{kind:?} normalization changed the word"));
            }
            if !f.is_normalized(&d.spoke, &d.cycle, kind) {
                return Some(format!("{kind:?} normalization result is not normalized"));
            }
        }
    }
    None
}

fn check_colorful_reliable(s: &LanguageSuite, _: u32, w: &[Word]) -> Option<String> {
    let (u, v) = (&w[0], &w[1]);
    if !s.colorful.fdfa().is_normalized(u, v, NormalizationKind::DuoNormalized) {
        return None;
    }
    fail(s.ctx.is_reliable(u, v), || "duo-normalized in the colorful FDFA but not reliable".into())
}

fn check_colorful_procedure(s: &LanguageSuite, _: u32, w: &[Word]) -> Option<String> {
    let q = s.colorful.fdfa().leading_state(&w[0]);
    match color_states_procedure(&s.colorful) {
        Err(e) => Some(e.to_string()),
        Ok(cs) => fail(cs[q] == s.colorful.colors(q), || {
            format!("procedure colors {:?}, labels {:?}", cs[q], s.colorful.colors(q))
        }),
    }
}

fn check_colorful_alternations(s: &LanguageSuite, _: u32, w: &[Word]) -> Option<String> {
    let (u, v) = (&w[0], &w[1]);
    let q = s.colorful.fdfa().leading_state(u);
    let state = s.colorful.fdfa().progress(q).run(v);
    let alt = s.alternations[q][state];
    let expected = s.ctx.finite_color_clamped(u, v) - s.ctx.mincolor_of(u);
    fail(alt == expected, || format!("{alt} alternations from the period's state, color implies {expected}"))
}

fn check_colorful_colors(s: &LanguageSuite, _: u32, w: &[Word]) -> Option<String> {
    let (u, v) = (&w[0], &w[1]);
    let (a, b) = (s.colorful.color_of(u, v), s.ctx.finite_color_clamped(u, v));
    fail(a == b, || format!("colorful FDFA labels {a}, clamped color is {b}"))
}

fn check_lector(s: &LanguageSuite, c: u32, w: &[Word]) -> Option<String> {
    let up = UpWord { spoke: w[0].clone(), cycle: w[1].clone() };
    let often = lector_run_classifier(&s.lectors[c as usize], &up) == LectorVerdict::InfinitelyOften;
    let inf = s.ctx.infinite_color(&up);
    fail(often == (inf <= c), || format!("F visited infinitely often: {often}, infinite color {inf}"))
}

fn check_black_white(s: &LanguageSuite, which: u32, w: &[Word]) -> Option<String> {
    let m = if which == 0 { s.dba.as_ref() } else { s.dca.as_ref() }?;
    let up = UpWord { spoke: w[0].clone(), cycle: w[1].clone() };
    let (a, b) = (m.accepts_up(&up), s.ctx.language().accepts_up(&up));
    fail(a == b, || format!("derived automaton says {a}, source says {b}"))
}

/// Boolean operations and decision procedures over a collection of FDFAs.
pub struct FdfaSuite {
    subjects: Vec<(String, Fdfa)>,
    bounds: Bounds,
}

impl FdfaSuite {
    pub fn new(subjects: Vec<(String, Fdfa)>, bounds: Bounds) -> Self {
        FdfaSuite { subjects, bounds }
    }

    pub fn subjects(&self) -> &[(String, Fdfa)] {
        &self.subjects
    }

    fn samples(&self, f: &Fdfa) -> Vec<UpWord> {
        crate::omega::sample_upwords(f.alphabet(), self.bounds.max_u, self.bounds.max_v)
    }

    fn lift(a: &Fdfa, b: &Fdfa) -> (Fdfa, Fdfa) {
        let m = a.mode().max(b.mode());
        (a.with_mode(m), b.with_mode(m))
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.subjects.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                if self.subjects[i].1.alphabet() == self.subjects[j].1.alphabet() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn run(&self) -> Result<Vec<SuiteReport>> {
        let mut reports = Vec::new();
        for i in 0..self.subjects.len() {
            for prop in ["saturation", "complement", "double-complement", "emptiness", "universality"] {
                reports.push(self.report(prop, &[i])?);
            }
        }
        for (i, j) in self.pairs() {
            for prop in ["intersection", "union", "de-morgan", "containment", "equivalence"] {
                reports.push(self.report(prop, &[i, j])?);
            }
        }
        Ok(reports)
    }

    fn name(&self, ops: &[usize]) -> String {
        ops.iter().map(|&i| self.subjects[i].0.as_str()).collect::<Vec<_>>().join(" & ")
    }

    fn report(&self, prop: &'static str, ops: &[usize]) -> Result<SuiteReport> {
        let (instances, failures) = self.evaluate(prop, ops, None)?;
        let subject = self.name(ops);
        let violations = failures
            .into_iter()
            .map(|(witness, detail)| Violation {
                subject: subject.clone(),
                property: prop,
                param: 0,
                operands: ops.to_vec(),
                witness,
                detail,
            })
            .collect();
        Ok(SuiteReport { subject, property: prop, param: 0, instances, violations })
    }

    /// Re-evaluates `v` on its witness only. `Some` means it still fails.
    pub fn replay(&self, v: &Violation) -> Result<Option<String>> {
        if v.operands.iter().any(|&i| i >= self.subjects.len()) {
            return Err(Error::Input("violation refers to an unknown FDFA".into()));
        }
        let (_, failures) = self.evaluate(v.property, &v.operands, Some(&v.witness))?;
        Ok(failures.into_iter().next().map(|(_, d)| d))
    }

    /// Runs one property, either on every sample or only on a replayed witness.
    #[allow(clippy::type_complexity)]
    fn evaluate(
        &self,
        prop: &str,
        ops: &[usize],
        replay: Option<&[Word]>,
    ) -> Result<(usize, Vec<(Vec<Word>, String)>)> {
        let a = &self.subjects[ops[0]].1;
        let up_of = |w: &[Word]| UpWord { spoke: w[0].clone(), cycle: w[1].clone() };
        let words: Vec<UpWord> = match replay {
            Some(w) if prop != "saturation" => vec![up_of(w)],
            Some(_) => Vec::new(),
            None => self.samples(a),
        };
        let wit = |w: &UpWord| vec![w.spoke.clone(), w.cycle.clone()];
        let mut fails = Vec::new();
        let mut count = words.len();
        match prop {
            "saturation" => {
                count = 1;
                let ce = match replay {
                    Some(w) => Some((up_of(&w[0..2]), up_of(&w[2..4]))),
                    None => a
                        .check_saturation_bounded(self.bounds.max_u, self.bounds.max_v)?
                        .map(|ce| (ce.accepted, ce.rejected)),
                };
                if let Some((acc, rej)) = ce {
                    let kind = a.mode().kind();
                    let genuine = canonical_up(&acc) == canonical_up(&rej)
                        && a.is_normalized(&acc.spoke, &acc.cycle, kind)
                        && a.is_normalized(&rej.spoke, &rej.cycle, kind)
                        && a.accepts_decomposition(&acc.spoke, &acc.cycle)
                        && !a.accepts_decomposition(&rej.spoke, &rej.cycle);
                    if genuine {
                        let mut w = wit(&acc);
                        w.extend(wit(&rej));
                        fails.push((w, format!(
                            "decompositions {} and {} of one word disagree",
                            acc.display(a.alphabet()),
                            rej.display(a.alphabet())
                        )));
                    }
                }
            }
            "complement" => {
                let c = a.complement();
                for w in &words {
                    if c.accepts(w) == a.accepts(w) {
                        fails.push((wit(w), "complement agrees with the original".into()));
                    }
                }
            }
            "double-complement" | "emptiness" | "universality" => {
                let twice = a.complement().complement();
                let target = match prop {
                    "double-complement" => a.equivalence_counterexample(&twice)?,
                    "emptiness" => a.emptiness_witness(),
                    _ => a.universality_counterexample(),
                };
                let bad = |w: &UpWord| match prop {
                    "double-complement" => twice.accepts(w) != a.accepts(w),
                    "emptiness" => a.accepts(w),
                    _ => !a.accepts(w),
                };
                // a witness from the decision must replay; no witness means no sample may contradict
                match target {
                    Some(t) => {
                        count += 1;
                        if prop == "double-complement" || !bad(&t) {
                            fails.push((wit(&t), format!("{prop} decision produced witness {}, replays: {}", t.display(a.alphabet()), bad(&t))));
                        }
                    }
                    None => {
                        for w in &words {
                            if bad(w) {
                                fails.push((wit(w), format!("{prop} decision found nothing, sample contradicts")));
                            }
                        }
                    }
                }
            }
            "intersection" | "union" => {
                let (a2, b2) = Self::lift(a, &self.subjects[ops[1]].1);
                let op = if prop == "intersection" { a2.intersect(&b2)? } else { a2.union(&b2)? };
                for w in &words {
                    let (x, y) = (a2.accepts(w), b2.accepts(w));
                    let expected = if prop == "intersection" { x && y } else { x || y };
                    if op.accepts(w) != expected {
                        fails.push((wit(w), format!("{prop} accepts {}, operands {x} and {y}", !expected)));
                    }
                }
            }
            "de-morgan" | "containment" | "equivalence" => {
                let (a2, b2) = Self::lift(a, &self.subjects[ops[1]].1);
                let (l, r) = match prop {
                    "de-morgan" => (a2.intersect(&b2)?.complement(), a2.complement().union(&b2.complement())?),
                    _ => (a2, b2),
                };
                let differs = |w: &UpWord| match prop {
                    // words of r outside l
                    "containment" => r.accepts(w) && !l.accepts(w),
                    _ => r.accepts(w) != l.accepts(w),
                };
                let ce = if prop == "containment" {
                    l.containment_counterexample(&r)?
                } else {
                    l.equivalence_counterexample(&r)?
                };
                match ce {
                    Some(t) => {
                        count += 1;
                        if prop == "de-morgan" || !differs(&t) {
                            fails.push((wit(&t), format!("{prop} decision produced witness {}, replays: {}", t.display(a.alphabet()), differs(&t))));
                        }
                    }
                    None => {
                        for w in &words {
                            if differs(w) {
                                fails.push((wit(w), format!("{prop} decision found nothing, sample contradicts")));
                            }
                        }
                    }
                }
            }
            other => return Err(Error::Input(format!("unknown FDFA property {other}"))),
        }
        Ok((count, fails))
    }
}

/// Subjects for the algebra suite: the hand-built fixtures plus the periodic and
/// colorful FDFAs of the suite languages.
pub fn default_fdfa_subjects(limits: &Limits) -> Result<Vec<(String, Fdfa)>> {
    let mut out: Vec<(String, Fdfa)> = crate::fixtures::suite_fdfas()
        .into_iter()
        .map(|(n, f)| (n.to_string(), f))
        .collect();
    for (name, m) in crate::fixtures::suite_languages() {
        let ctx = ColorContext::new(&m, limits)?;
        out.push((format!("periodic({name})"), ctx.periodic().clone()));
        out.push((format!("colorful({name})"), build_colorful_fdfa(&ctx)?.fdfa().clone()));
    }
    Ok(out)
}
