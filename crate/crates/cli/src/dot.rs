//! Graphviz export.

use std::fmt::Write;

use omegacanon::automata::AutomatonStructure;
use omegacanon::fdfa::Fdfa;
use omegacanon::omega::{OmegaAcceptance, OmegaAutomaton};

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Edges with parallel transitions merged into one comma-separated label.
fn edges(out: &mut String, s: &AutomatonStructure, id: impl Fn(usize) -> String, indent: &str) {
    for q in 0..s.state_count() {
        let mut targets: Vec<(usize, Vec<&str>)> = Vec::new();
        for (a, &t) in s.delta()[q].iter().enumerate() {
            match targets.iter_mut().find(|(x, _)| *x == t) {
                Some((_, labels)) => labels.push(s.alphabet().symbol(a)),
                None => targets.push((t, vec![s.alphabet().symbol(a)])),
            }
        }
        for (t, labels) in targets {
            let _ = writeln!(out, "{indent}{} -> {} [label=\"{}\"];", id(q), id(t), escape(&labels.join(",")));
        }
    }
}

pub fn automaton_dot(m: &OmegaAutomaton) -> String {
    let s = m.structure();
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n");
    let _ = writeln!(out, "  init [shape=point];");
    let colors = m.parity_colors();
    for q in 0..s.state_count() {
        let (label, shape) = match m.acceptance() {
            OmegaAcceptance::Buchi(f) | OmegaAcceptance::CoBuchi(f) if f.contains(&q) => (q.to_string(), "doublecircle"),
            OmegaAcceptance::Parity(_) => (format!("{q} : {}", colors.as_ref().map_or(0, |c| c[q])), "circle"),
            _ => (q.to_string(), "circle"),
        };
        let _ = writeln!(out, "  q{q} [label=\"{label}\", shape={shape}];");
    }
    let _ = writeln!(out, "  init -> q{};", s.initial());
    edges(&mut out, s, |q| format!("q{q}"), "  ");
    if let OmegaAcceptance::Muller(table) = m.acceptance() {
        let sets: Vec<String> = table
            .iter()
            .map(|t| format!("{{{}}}", t.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        let _ = writeln!(out, "  label=\"Muller: {}\";", sets.join(" "));
    }
    out.push_str("}\n");
    out
}

pub fn fdfa_dot(f: &Fdfa, colors: Option<&[Vec<u32>]>) -> String {
    let mut out = String::from("digraph fdfa {\n  rankdir=LR;\n  node [shape=circle];\n");
    let lead = f.leading();
    out.push_str("  subgraph cluster_leading {\n    label=\"leading\";\n");
    let _ = writeln!(out, "    linit [shape=point];");
    for q in 0..lead.state_count() {
        let _ = writeln!(out, "    l{q} [label=\"{q}\"];");
    }
    let _ = writeln!(out, "    linit -> l{};", lead.initial());
    edges(&mut out, lead, |q| format!("l{q}"), "    ");
    out.push_str("  }\n");
    for (c, p) in f.progress_all().iter().enumerate() {
        let _ = writeln!(out, "  subgraph cluster_progress_{c} {{\n    label=\"progress {c}\";");
        let _ = writeln!(out, "    p{c}init [shape=point];");
        for s in 0..p.state_count() {
            let label = match colors {
                Some(k) => format!("{s} : {}", k[c][s]),
                None => s.to_string(),
            };
            let shape = if p.is_accepting(s) { "doublecircle" } else { "circle" };
            let _ = writeln!(out, "    p{c}_{s} [label=\"{label}\", shape={shape}];");
        }
        let _ = writeln!(out, "    p{c}init -> p{c}_{};", p.initial());
        edges(&mut out, p.structure(), |s| format!("p{c}_{s}"), "    ");
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}
