//! Inclusion measures and the Wagner-hierarchy class of a deterministic ω-automaton.

use crate::automata::sccs;
use crate::error::{Error, Limits, Result};
use crate::omega::OmegaAutomaton;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WagnerMeasure {
    pub m_plus: u32,
    pub m_minus: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HierarchyPolarity {
    Plus,
    Minus,
    PlusMinus,
}

impl HierarchyPolarity {
    pub fn name(self) -> &'static str {
        match self {
            HierarchyPolarity::Plus => "plus",
            HierarchyPolarity::Minus => "minus",
            HierarchyPolarity::PlusMinus => "plus_minus",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HierarchyClass {
    pub k: u32,
    pub polarity: HierarchyPolarity,
}

impl fmt::Display for HierarchyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.polarity {
            HierarchyPolarity::Plus => "+",
            HierarchyPolarity::Minus => "-",
            HierarchyPolarity::PlusMinus => "±",
        };
        write!(f, "DM{sign}{}", self.k)
    }
}

impl WagnerMeasure {
    /// The least class containing a language with these measures.
    pub fn class(self) -> HierarchyClass {
        let (p, m) = (self.m_plus, self.m_minus);
        if p == m {
            HierarchyClass {
                k: p.max(1),
                polarity: HierarchyPolarity::PlusMinus,
            }
        } else if p > m {
            HierarchyClass {
                k: p,
                polarity: HierarchyPolarity::Plus,
            }
        } else {
            HierarchyClass {
                k: m,
                polarity: HierarchyPolarity::Minus,
            }
        }
    }
}

/// Longest alternating inclusion chains of strongly connected subsets.
pub fn inclusion_measures(m: &OmegaAutomaton, limits: &Limits) -> Result<WagnerMeasure> {
    let s = m.structure();
    let dec = sccs(s, None);
    let mut measure = WagnerMeasure { m_plus: 0, m_minus: 0 };
    for (c, comp) in dec.components.iter().enumerate() {
        if !dec.nontrivial[c] {
            continue;
        }
        if comp.len() > limits.mscc_cap {
            return Err(Error::Capacity {
                what: "MSCC size for subset enumeration",
                limit: limits.mscc_cap,
                found: comp.len(),
            });
        }
        let n = comp.len();
        let local = |q: usize| comp.binary_search(&q).ok();
        // succ_mask[i]: local successors of comp[i].
        let succ_mask: Vec<u32> = comp
            .iter()
            .map(|&q| {
                s.delta()[q]
                    .iter()
                    .filter_map(|&t| local(t))
                    .fold(0u32, |acc, j| acc | 1 << j)
            })
            .collect();
        let strongly_connected = |mask: u32| -> bool {
            let first = mask.trailing_zeros() as usize;
            let closure = |forward: bool| {
                let mut seen = 1u32 << first;
                let mut frontier = seen;
                while frontier != 0 {
                    let mut next = 0u32;
                    for i in 0..n {
                        if frontier >> i & 1 == 0 {
                            continue;
                        }
                        if forward {
                            next |= succ_mask[i] & mask;
                        } else {
                            for (j, &sj) in succ_mask.iter().enumerate() {
                                if mask >> j & 1 == 1 && sj >> i & 1 == 1 {
                                    next |= 1 << j;
                                }
                            }
                        }
                    }
                    frontier = next & !seen;
                    seen |= next;
                }
                seen
            };
            if mask.count_ones() == 1 {
                return succ_mask[first] >> first & 1 == 1;
            }
            closure(true) == mask && closure(false) == mask
        };

        let total = 1u32 << n;
        // end[mask]: longest alternating chain whose largest set is `mask` (0 if not an SCC).
        let mut end = vec![0u32; total as usize];
        let mut accepting = vec![false; total as usize];
        let mut masks: Vec<u32> = (1..total).filter(|&mk| strongly_connected(mk)).collect();
        masks.sort_by_key(|mk| mk.count_ones());
        for &mk in &masks {
            let set: Vec<usize> = (0..n).filter(|&i| mk >> i & 1 == 1).map(|i| comp[i]).collect();
            accepting[mk as usize] = m.accepts_set(&set);
        }
        for &mk in &masks {
            let acc = accepting[mk as usize];
            let mut best = 1;
            let mut sub = (mk - 1) & mk;
            while sub != 0 {
                if end[sub as usize] > 0 && accepting[sub as usize] != acc {
                    best = best.max(end[sub as usize] + 1);
                }
                sub = (sub - 1) & mk;
            }
            end[mk as usize] = best;
            // A chain of length k ending here starts accepting iff the parity says so;
            // dropping its first element gives a chain of the other kind.
            let starts_accepting = acc == (best % 2 == 1);
            let (same, other) = (best, best - 1);
            if starts_accepting {
                measure.m_plus = measure.m_plus.max(same);
                measure.m_minus = measure.m_minus.max(other);
            } else {
                measure.m_minus = measure.m_minus.max(same);
                measure.m_plus = measure.m_plus.max(other);
            }
        }
    }
    Ok(measure)
}

pub fn classify(m: &OmegaAutomaton, limits: &Limits) -> Result<HierarchyClass> {
    Ok(inclusion_measures(m, limits)?.class())
}
