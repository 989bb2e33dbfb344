use super::AutomatonStructure;

/// Strongly connected components of the subgraph induced by `vertices`.
///
/// `succ` may return vertices outside the set; such edges are ignored.
/// Components are returned sinks first (Tarjan's completion order).
pub fn tarjan<F, I>(n: usize, vertices: &[usize], mut succ: F) -> Vec<Vec<usize>>
where
    F: FnMut(usize) -> I,
    I: IntoIterator<Item = usize>,
{
    const UNSEEN: usize = usize::MAX;
    let mut member = vec![false; n];
    for &v in vertices {
        member[v] = true;
    }
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut counter = 0;
    let mut frames: Vec<(usize, Vec<usize>, usize)> = Vec::new();

    macro_rules! enter {
        ($v:expr) => {{
            let v = $v;
            index[v] = counter;
            low[v] = counter;
            counter += 1;
            stack.push(v);
            on_stack[v] = true;
            let s: Vec<usize> = succ(v).into_iter().filter(|&w| member[w]).collect();
            frames.push((v, s, 0));
        }};
    }

    for &root in vertices {
        if index[root] != UNSEEN {
            continue;
        }
        enter!(root);
        while let Some(frame) = frames.last_mut() {
            let v = frame.0;
            if frame.2 < frame.1.len() {
                let w = frame.1[frame.2];
                frame.2 += 1;
                if index[w] == UNSEEN {
                    enter!(w);
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                frames.pop();
                if let Some(parent) = frames.last() {
                    low[parent.0] = low[parent.0].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
    }
    comps
}

/// Components of a graph with a topologically ordered condensation:
/// every edge between components goes from a lower id to a higher id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccDecomposition {
    pub component_of: Vec<Option<usize>>,
    pub components: Vec<Vec<usize>>,
    /// False for a singleton without a self-loop, which is not an SCC.
    pub nontrivial: Vec<bool>,
    /// Condensation edges, sorted and without duplicates.
    pub successors: Vec<Vec<usize>>,
}

impl SccDecomposition {
    pub fn build<F, I>(n: usize, vertices: &[usize], mut succ: F) -> Self
    where
        F: FnMut(usize) -> I,
        I: IntoIterator<Item = usize>,
    {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &v in vertices {
            adj[v] = succ(v).into_iter().collect();
        }
        let mut components = tarjan(n, vertices, |v| adj[v].clone());
        components.reverse();
        let mut component_of = vec![None; n];
        for (c, comp) in components.iter().enumerate() {
            for &v in comp {
                component_of[v] = Some(c);
            }
        }
        let mut nontrivial = vec![false; components.len()];
        let mut successors = vec![Vec::new(); components.len()];
        for (c, comp) in components.iter().enumerate() {
            nontrivial[c] = comp.len() > 1;
            for &v in comp {
                for &w in &adj[v] {
                    match component_of[w] {
                        Some(d) if d == c => nontrivial[c] = true,
                        Some(d) => successors[c].push(d),
                        None => {}
                    }
                }
            }
            successors[c].sort_unstable();
            successors[c].dedup();
        }
        SccDecomposition {
            component_of,
            components,
            nontrivial,
            successors,
        }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Components with no outgoing condensation edge.
    pub fn is_terminal(&self, c: usize) -> bool {
        self.successors[c].is_empty()
    }

    /// Components reachable from `c`, including `c`.
    pub fn reachable_components(&self, c: usize) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        seen[c] = true;
        for d in c..self.len() {
            if seen[d] {
                for &e in &self.successors[d] {
                    seen[e] = true;
                }
            }
        }
        seen
    }
}

/// SCC decomposition of the reachable part of `structure`, or of the subgraph
/// induced by `restrict_to` when given.
pub fn sccs(structure: &AutomatonStructure, restrict_to: Option<&[usize]>) -> SccDecomposition {
    let n = structure.state_count();
    let vertices: Vec<usize> = match restrict_to {
        Some(set) => {
            let mut v = set.to_vec();
            v.sort_unstable();
            v.dedup();
            v
        }
        None => {
            let reach = structure.reachable();
            (0..n).filter(|&q| reach[q]).collect()
        }
    };
    SccDecomposition::build(n, &vertices, |q| structure.delta()[q].clone())
}

/// True iff `set` is strongly connected inside itself; a singleton needs a self-loop.
pub fn is_scc(structure: &AutomatonStructure, set: &[usize]) -> bool {
    let mut v = set.to_vec();
    v.sort_unstable();
    v.dedup();
    match v.len() {
        0 => false,
        1 => structure.delta()[v[0]].contains(&v[0]),
        _ => tarjan(structure.state_count(), &v, |q| structure.delta()[q].clone()).len() == 1,
    }
}
