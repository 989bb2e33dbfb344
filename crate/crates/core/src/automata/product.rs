use super::AutomatonStructure;
use crate::error::{Error, Result};
use std::collections::HashMap;

/// Reachable synchronous product with projections back to the factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product {
    pub structure: AutomatonStructure,
    /// `tuples[s][i]` is the state of factor `i` in product state `s`.
    pub tuples: Vec<Vec<usize>>,
}

impl Product {
    pub fn project(&self, s: usize, factor: usize) -> usize {
        self.tuples[s][factor]
    }
}

/// Product of the factors started in their initial states.
pub fn product(parts: &[&AutomatonStructure]) -> Result<Product> {
    let starts: Vec<usize> = parts.iter().map(|p| p.initial()).collect();
    product_from(parts, &starts)
}

/// Product of the factors started in the given states.
pub fn product_from(parts: &[&AutomatonStructure], starts: &[usize]) -> Result<Product> {
    let first = parts
        .first()
        .ok_or_else(|| Error::Input("product of no factors".into()))?;
    if parts.len() != starts.len() {
        return Err(Error::Input("one start state per factor required".into()));
    }
    for (p, &s) in parts.iter().zip(starts) {
        if p.alphabet() != first.alphabet() {
            return Err(Error::Input("alphabet mismatch in product".into()));
        }
        if s >= p.state_count() {
            return Err(Error::Input(format!("start state {s} out of range")));
        }
    }
    let k = first.alphabet().len();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut tuples = vec![starts.to_vec()];
    index.insert(starts.to_vec(), 0);
    let mut delta: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < tuples.len() {
        let mut row = Vec::with_capacity(k);
        for a in 0..k {
            let t: Vec<usize> = tuples[i]
                .iter()
                .zip(parts)
                .map(|(&q, p)| p.succ(q, a))
                .collect();
            let id = match index.get(&t) {
                Some(&id) => id,
                None => {
                    let id = tuples.len();
                    index.insert(t.clone(), id);
                    tuples.push(t);
                    id
                }
            };
            row.push(id);
        }
        delta.push(row);
        i += 1;
    }
    let structure = AutomatonStructure::new(first.alphabet().clone(), 0, delta)?;
    Ok(Product { structure, tuples })
}
