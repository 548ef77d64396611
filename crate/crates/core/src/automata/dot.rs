//! DOT export for documentation and debugging.

use std::collections::BTreeSet;

use super::dfa::Dfa;
use super::ppa::Ppa;

/// One graph per pPA; edges carry `action:label` and the polynomial verbatim.
pub fn ppa_to_dot(m: &Ppa, highlight: &BTreeSet<usize>) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph \"{}\" {{\n", m.name));
    out.push_str("  rankdir=LR;\n  node [shape=ellipse];\n");
    out.push_str(&format!(
        "  __init [shape=point]; __init -> \"{}\";\n",
        m.states[m.initial]
    ));
    for (i, s) in m.states.iter().enumerate() {
        let style = if highlight.contains(&i) {
            ", style=filled, fillcolor=lightgray"
        } else {
            ""
        };
        out.push_str(&format!("  \"{s}\" [label=\"{s}\"{style}];\n"));
    }
    for ((s, a), dist) in &m.trans {
        let label = &m.labels[&(*s, *a)];
        for (succ, p) in dist.iter() {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}:{} {}\"];\n",
                m.states[*s],
                m.states[succ],
                m.actions[*a],
                label,
                p
            ));
        }
    }
    out.push_str("}\n");
    out
}

pub fn dfa_to_dot(d: &Dfa) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph \"{}\" {{\n", d.name));
    out.push_str("  rankdir=LR;\n");
    out.push_str(&format!(
        "  __init [shape=point]; __init -> \"{}\";\n",
        d.states[d.initial]
    ));
    for (i, s) in d.states.iter().enumerate() {
        let shape = if d.accepting.contains(&i) {
            "doublecircle"
        } else {
            "circle"
        };
        out.push_str(&format!("  \"{s}\" [shape={shape}];\n"));
    }
    for ((s, sym), t) in &d.edges {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
            d.states[*s], d.states[*t], sym
        ));
    }
    out.push_str("}\n");
    out
}
