use super::AutomatonStructure;
use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

/// Result of Moore minimization: the quotient machine and where each
/// original state went (`None` for unreachable states).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MooreQuotient<O> {
    pub structure: AutomatonStructure,
    pub outputs: Vec<O>,
    pub state_map: Vec<Option<usize>>,
}

fn refine<O: Clone + Eq + Hash>(
    structure: &AutomatonStructure,
    states: &[usize],
    initial_block: &[Option<usize>],
    output: &[O],
) -> Vec<usize> {
    // Initial partition by output (or a caller-forced block), then Moore refinement.
    let n = structure.state_count();
    let mut block = vec![usize::MAX; n];
    let mut keys: HashMap<(Option<usize>, Option<O>), usize> = HashMap::new();
    for &q in states {
        let key = match initial_block[q] {
            Some(b) => (Some(b), None),
            None => (None, Some(output[q].clone())),
        };
        let next = keys.len();
        block[q] = *keys.entry(key).or_insert(next);
    }
    let mut count = keys.len();
    loop {
        let mut sigs: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut next_block = vec![usize::MAX; n];
        for &q in states {
            let sig = (
                block[q],
                structure.delta()[q].iter().map(|&t| block[t]).collect::<Vec<_>>(),
            );
            let next = sigs.len();
            next_block[q] = *sigs.entry(sig).or_insert(next);
        }
        let new_count = sigs.len();
        block = next_block;
        if new_count == count {
            return block;
        }
        count = new_count;
    }
}

/// Minimizes a Moore machine by partition refinement.
///
/// With `respect_initial_output` off, the output of the initial state is not
/// observed when nothing leads back into it: the initial state then joins the
/// first class whose successors agree with its own, or stays on its own.
pub fn minimize_moore<O: Clone + Eq + Hash>(
    structure: &AutomatonStructure,
    output: &[O],
    respect_initial_output: bool,
) -> MooreQuotient<O> {
    let n = structure.state_count();
    assert_eq!(output.len(), n, "output must be total");
    let reach = structure.reachable();
    let states: Vec<usize> = (0..n).filter(|&q| reach[q]).collect();
    let init = structure.initial();
    let init_has_incoming = states
        .iter()
        .any(|&q| structure.delta()[q].contains(&init));
    let free_initial = !respect_initial_output && !init_has_incoming;

    let mut forced = vec![None; n];
    if free_initial {
        forced[init] = Some(0);
    }
    let mut block = refine(structure, &states, &forced, output);

    if free_initial {
        let target: Vec<usize> = structure.delta()[init].iter().map(|&t| block[t]).collect();
        let host = states.iter().copied().find(|&q| {
            q != init
                && structure.delta()[q]
                    .iter()
                    .zip(&target)
                    .all(|(&t, &b)| block[t] == b)
        });
        if let Some(h) = host {
            block[init] = block[h];
        }
    }

    // Number quotient states in BFS order from the initial block.
    let mut rep: HashMap<usize, usize> = HashMap::new();
    for &q in &states {
        // Prefer a non-initial representative so merged outputs come from real members.
        let e = rep.entry(block[q]).or_insert(q);
        if *e == init && q != init {
            *e = q;
        }
    }
    let mut new_id: HashMap<usize, usize> = HashMap::new();
    let mut order = vec![block[init]];
    new_id.insert(block[init], 0);
    let mut queue = VecDeque::from([block[init]]);
    let mut delta = Vec::new();
    while let Some(b) = queue.pop_front() {
        let r = rep[&b];
        let mut row = Vec::new();
        for &t in &structure.delta()[r] {
            let tb = block[t];
            let id = *new_id.entry(tb).or_insert_with(|| {
                order.push(tb);
                queue.push_back(tb);
                order.len() - 1
            });
            row.push(id);
        }
        delta.push(row);
    }
    let outputs = order.iter().map(|b| output[rep[b]].clone()).collect();
    let state_map = (0..n)
        .map(|q| if reach[q] { new_id.get(&block[q]).copied() } else { None })
        .collect();
    let structure = AutomatonStructure::new(structure.alphabet().clone(), 0, delta)
        .expect("quotient of a complete structure is complete");
    MooreQuotient {
        structure,
        outputs,
        state_map,
    }
}

/// Checks whether the reachable parts of two labeled structures are isomorphic
/// via a bijection that maps initial to initial and preserves labels.
pub fn isomorphic<L: PartialEq>(
    a: &AutomatonStructure,
    la: &[L],
    b: &AutomatonStructure,
    lb: &[L],
) -> bool {
    if a.alphabet() != b.alphabet() {
        return false;
    }
    let mut fwd = vec![None; a.state_count()];
    let mut bwd = vec![None; b.state_count()];
    let mut queue = VecDeque::from([(a.initial(), b.initial())]);
    fwd[a.initial()] = Some(b.initial());
    bwd[b.initial()] = Some(a.initial());
    while let Some((p, q)) = queue.pop_front() {
        if la[p] != lb[q] {
            return false;
        }
        for s in 0..a.alphabet().len() {
            let (pt, qt) = (a.succ(p, s), b.succ(q, s));
            match (fwd[pt], bwd[qt]) {
                (None, None) => {
                    fwd[pt] = Some(qt);
                    bwd[qt] = Some(pt);
                    queue.push_back((pt, qt));
                }
                (Some(x), Some(y)) if x == qt && y == pt => {}
                _ => return false,
            }
        }
    }
    true
}
