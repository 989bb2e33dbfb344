use super::{OmegaAutomaton, UpWord};
use crate::automata::{product_from, tarjan, AutomatonStructure, Word};
use crate::error::{Error, Limits, Result};
use std::collections::{HashSet, VecDeque};

/// The leading right congruence of a language, as a quotient of an ω-automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Leading {
    pub structure: AutomatonStructure,
    /// Class of each state of the source automaton (`None` if unreachable).
    pub class_of: Vec<Option<usize>>,
    /// A source state in each class.
    pub representative: Vec<usize>,
}

impl Leading {
    pub fn class_of_word(&self, w: &[usize]) -> usize {
        self.structure.run(self.structure.initial(), w)
    }

    pub fn len(&self) -> usize {
        self.structure.state_count()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

fn is_cycle_set(set: &[usize], succ: &impl Fn(usize) -> Vec<usize>) -> bool {
    set.len() > 1 || succ(set[0]).contains(&set[0])
}

/// Explores strongly connected subsets of each nontrivial component of the
/// graph on `vertices`, largest first, until `hit` accepts one.
fn search_cycle_sets(
    n: usize,
    vertices: &[usize],
    succ: impl Fn(usize) -> Vec<usize>,
    mut hit: impl FnMut(&[usize]) -> bool,
    budget: usize,
) -> Result<Option<Vec<usize>>> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut stack: Vec<Vec<usize>> = tarjan(n, vertices, &succ)
        .into_iter()
        .filter(|c| is_cycle_set(c, &succ))
        .collect();
    while let Some(set) = stack.pop() {
        if !seen.insert(set.clone()) {
            continue;
        }
        if seen.len() > budget {
            return Err(Error::Capacity {
                what: "strongly connected subsets explored",
                limit: budget,
                found: seen.len(),
            });
        }
        if hit(&set) {
            return Ok(Some(set));
        }
        for i in 0..set.len() {
            let mut rest = set.clone();
            rest.remove(i);
            if rest.is_empty() {
                continue;
            }
            for c in tarjan(n, &rest, &succ) {
                if is_cycle_set(&c, &succ) && !seen.contains(&c) {
                    stack.push(c);
                }
            }
        }
    }
    Ok(None)
}

/// A nonempty word that, read from `start`, stays inside `set`, visits all of it and returns.
fn covering_cycle(s: &AutomatonStructure, set: &[usize], start: usize) -> Word {
    let inside = |q: usize| set.binary_search(&q).is_ok();
    let path = |from: usize, to: usize, nonempty: bool| -> Word {
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; s.state_count()];
        let mut queue = VecDeque::new();
        for (a, &t) in s.delta()[from].iter().enumerate() {
            if inside(t) && prev[t].is_none() {
                prev[t] = Some((from, a));
                queue.push_back(t);
            }
        }
        if !nonempty && from == to {
            return Vec::new();
        }
        while let Some(p) = queue.pop_front() {
            if p == to {
                break;
            }
            for (a, &t) in s.delta()[p].iter().enumerate() {
                if inside(t) && prev[t].is_none() {
                    prev[t] = Some((p, a));
                    queue.push_back(t);
                }
            }
        }
        let mut w = Vec::new();
        let mut cur = to;
        loop {
            let (p, a) = prev[cur].expect("set is strongly connected");
            w.push(a);
            cur = p;
            if cur == from {
                break;
            }
        }
        w.reverse();
        w
    };
    let mut v = Vec::new();
    let mut cur = start;
    for &t in set {
        if t != cur {
            v.extend(path(cur, t, false));
            cur = t;
        }
    }
    v.extend(path(cur, start, true));
    v
}

/// An ultimately periodic word accepted from exactly one of `qa` in `a` and `qb` in `b`.
pub fn distinguishing_word(
    a: &OmegaAutomaton,
    qa: usize,
    b: &OmegaAutomaton,
    qb: usize,
    limits: &Limits,
) -> Result<Option<UpWord>> {
    let p = product_from(&[a.structure(), b.structure()], &[qa, qb])?;
    let ps = &p.structure;
    let n = ps.state_count();
    let all: Vec<usize> = (0..n).collect();
    let succ = |q: usize| ps.delta()[q].clone();

    let found: Option<Vec<usize>> = match (a.parity_colors(), b.parity_colors()) {
        (Some(ka), Some(kb)) => {
            let ca: Vec<u32> = p.tuples.iter().map(|t| ka[t[0]]).collect();
            let cb: Vec<u32> = p.tuples.iter().map(|t| kb[t[1]]).collect();
            let mut va: Vec<u32> = ca.clone();
            va.sort_unstable();
            va.dedup();
            let mut vb: Vec<u32> = cb.clone();
            vb.sort_unstable();
            vb.dedup();
            let mut hit = None;
            'outer: for &e in &va {
                for &o in &vb {
                    if e % 2 == o % 2 {
                        continue;
                    }
                    let verts: Vec<usize> = all.iter().copied().filter(|&q| ca[q] >= e && cb[q] >= o).collect();
                    for comp in tarjan(n, &verts, succ) {
                        if is_cycle_set(&comp, &succ)
                            && comp.iter().any(|&q| ca[q] == e)
                            && comp.iter().any(|&q| cb[q] == o)
                        {
                            hit = Some(comp);
                            break 'outer;
                        }
                    }
                }
            }
            hit
        }
        _ => {
            for comp in tarjan(n, &all, succ) {
                for (aut, f) in [(a, 0), (b, 1)] {
                    let mut proj: Vec<usize> = comp.iter().map(|&q| p.tuples[q][f]).collect();
                    proj.sort_unstable();
                    proj.dedup();
                    if proj.len() > limits.mscc_cap && matches!(aut.acceptance(), super::OmegaAcceptance::Muller(_)) {
                        return Err(Error::Capacity {
                            what: "MSCC size for Muller subset enumeration",
                            limit: limits.mscc_cap,
                            found: proj.len(),
                        });
                    }
                }
            }
            search_cycle_sets(
                n,
                &all,
                succ,
                |set| {
                    let mut pa: Vec<usize> = set.iter().map(|&q| p.tuples[q][0]).collect();
                    let mut pb: Vec<usize> = set.iter().map(|&q| p.tuples[q][1]).collect();
                    pa.sort_unstable();
                    pa.dedup();
                    pb.sort_unstable();
                    pb.dedup();
                    a.accepts_set(&pa) != b.accepts_set(&pb)
                },
                limits.subset_budget,
            )?
        }
    };

    Ok(found.map(|set| {
        let start = set[0];
        let spoke = ps.access_words()[start].clone().expect("product is reachable");
        let cycle = covering_cycle(ps, &set, start);
        UpWord { spoke, cycle }
    }))
}

/// Whether the languages accepted from `q1` and `q2` coincide.
pub fn state_equiv(m: &OmegaAutomaton, q1: usize, q2: usize, limits: &Limits) -> Result<bool> {
    if q1 == q2 {
        return Ok(true);
    }
    Ok(distinguishing_word(m, q1, m, q2, limits)?.is_none())
}

/// A word in the symmetric difference of the two languages, or `None` if they are equal.
pub fn equivalent(a: &OmegaAutomaton, b: &OmegaAutomaton, limits: &Limits) -> Result<Option<UpWord>> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::Input("alphabet mismatch".into()));
    }
    distinguishing_word(a, a.structure().initial(), b, b.structure().initial(), limits)
}

/// Quotient of the reachable part of `m` by language equivalence of states.
pub fn leading_congruence(m: &OmegaAutomaton, limits: &Limits) -> Result<Leading> {
    let s = m.structure();
    let (_, order_map) = s.trim();
    let mut order: Vec<usize> = (0..s.state_count()).filter(|&q| order_map[q].is_some()).collect();
    order.sort_by_key(|&q| order_map[q]);

    let mut reps: Vec<usize> = Vec::new();
    let mut class = vec![None; s.state_count()];
    for &q in &order {
        let mut found = None;
        for (c, &r) in reps.iter().enumerate() {
            if state_equiv(m, r, q, limits)? {
                found = Some(c);
                break;
            }
        }
        class[q] = Some(found.unwrap_or_else(|| {
            reps.push(q);
            reps.len() - 1
        }));
    }
    let delta: Vec<Vec<usize>> = reps
        .iter()
        .map(|&r| s.delta()[r].iter().map(|&t| class[t].unwrap()).collect())
        .collect();
    let raw = AutomatonStructure::new(s.alphabet().clone(), class[s.initial()].unwrap(), delta)?;
    let (structure, renumber) = raw.trim();
    let class_of = class.iter().map(|c| c.and_then(|c| renumber[c])).collect();
    let mut representative = vec![0; structure.state_count()];
    for (c, &r) in reps.iter().enumerate() {
        if let Some(nc) = renumber[c] {
            representative[nc] = r;
        }
    }
    Ok(Leading {
        structure,
        class_of,
        representative,
    })
}
