//! Line-oriented model and DFA file formats.
//!
//! ```text
//! ppa <name>
//! alphabet a b c
//! params p q
//! states s0 s1
//! init s0
//! trans s0 a a : s0 = p, s1 = 1-p     # state action label : succ = poly, ...
//! ```
//!
//! ```text
//! dfa <name>
//! alphabet a b
//! states q0 q1 qbad
//! init q0
//! accepting qbad
//! edge q0 a q1
//! ```
//!
//! `#` starts a comment. Composite names like `(s0,t0)` are single tokens.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::algebra::parse_polynomial;
use crate::error::FormatError;

use super::dfa::Dfa;
use super::ppa::{ParametricDistribution, Ppa};

/// Splits a line into tokens; parenthesized chunks stay together so tuple
/// names survive tokenization.
fn tokenize(line: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0usize;
    for c in line.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            c if c.is_whitespace() && depth == 0 => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            _ => cur.push(c),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

struct Lines<'a> {
    file: &'a str,
    lines: Vec<(usize, String)>,
}

fn significant_lines<'a>(file: &'a str, content: &str) -> Lines<'a> {
    let lines = content
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l).trim().to_string()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    Lines { file, lines }
}

/// Parses the pPA model format.
pub fn parse_ppa(file: &str, content: &str) -> Result<Ppa, FormatError> {
    let src = significant_lines(file, content);
    let mut name = String::new();
    let mut alphabet = BTreeSet::new();
    let mut params = BTreeSet::new();
    let mut states: Vec<String> = Vec::new();
    let mut init: Option<String> = None;
    let mut raw_trans: Vec<(usize, Vec<String>, String)> = Vec::new();

    for (ln, line) in &src.lines {
        let head = tokenize(line);
        match head.first().map(|s| s.as_str()) {
            Some("ppa") => {
                name = head.get(1).cloned().unwrap_or_default();
            }
            Some("alphabet") => alphabet.extend(head[1..].iter().cloned()),
            Some("params") => params.extend(head[1..].iter().cloned()),
            Some("states") => states.extend(head[1..].iter().cloned()),
            Some("init") => {
                init = Some(head.get(1).cloned().ok_or_else(|| {
                    FormatError::syntax(src.file, *ln, "expected a state after `init`")
                })?)
            }
            Some("trans") => {
                let (lhs, rhs) = line.split_once(':').ok_or_else(|| {
                    FormatError::syntax(src.file, *ln, "expected `:` in trans line")
                })?;
                let lhs_toks = tokenize(lhs);
                if lhs_toks.len() != 4 {
                    return Err(FormatError::syntax(
                        src.file,
                        *ln,
                        "expected `trans <state> <action> <label> : ...`",
                    ));
                }
                raw_trans.push((*ln, lhs_toks, rhs.to_string()));
            }
            Some(other) => {
                return Err(FormatError::syntax(
                    src.file,
                    *ln,
                    format!("unknown directive `{other}`; expected one of ppa/alphabet/params/states/init/trans"),
                ))
            }
            None => {}
        }
    }

    if name.is_empty() {
        return Err(FormatError::syntax(src.file, 1, "missing `ppa <name>` header"));
    }
    let init = init.ok_or_else(|| FormatError::syntax(src.file, 1, "missing `init`"))?;
    let initial = states
        .iter()
        .position(|s| *s == init)
        .ok_or_else(|| FormatError::syntax(src.file, 1, format!("init state `{init}` not declared")))?;

    let mut actions: Vec<String> = Vec::new();
    let mut trans: BTreeMap<(usize, usize), ParametricDistribution> = BTreeMap::new();
    let mut labels: BTreeMap<(usize, usize), String> = BTreeMap::new();

    for (ln, lhs, rhs) in raw_trans {
        let state = &lhs[1];
        let action = &lhs[2];
        let label = &lhs[3];
        let si = states.iter().position(|s| s == state).ok_or_else(|| {
            FormatError::syntax(src.file, ln, format!("undeclared state `{state}`"))
        })?;
        let ai = match actions.iter().position(|a| a == action) {
            Some(i) => i,
            None => {
                actions.push(action.clone());
                actions.len() - 1
            }
        };
        if !alphabet.contains(label) {
            return Err(FormatError::syntax(
                src.file,
                ln,
                format!("label `{label}` not in alphabet"),
            ));
        }
        let mut entries = Vec::new();
        for part in split_top_level(&rhs, ',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (succ, poly_src) = part.split_once('=').ok_or_else(|| {
                FormatError::syntax(src.file, ln, "expected `succ = polynomial`")
            })?;
            let succ = succ.trim();
            let ti = states.iter().position(|s| s == succ).ok_or_else(|| {
                FormatError::syntax(src.file, ln, format!("undeclared successor `{succ}`"))
            })?;
            let poly = parse_polynomial(poly_src.trim()).map_err(|err| FormatError::Poly {
                file: src.file.to_string(),
                line: ln,
                err,
            })?;
            for v in poly.vars() {
                if !params.contains(&v) {
                    return Err(FormatError::syntax(
                        src.file,
                        ln,
                        format!("parameter `{v}` not declared in `params`"),
                    ));
                }
            }
            if !poly.is_zero() {
                entries.push((ti, poly));
            }
        }
        if trans.contains_key(&(si, ai)) {
            return Err(FormatError::syntax(
                src.file,
                ln,
                format!("duplicate transition for ({state}, {action})"),
            ));
        }
        trans.insert((si, ai), ParametricDistribution::from_entries(entries));
        labels.insert((si, ai), label.clone());
    }

    Ok(Ppa { name, states, initial, params, actions, alphabet, trans, labels })
}

/// Splits on a separator, ignoring separators inside parentheses.
fn split_top_level(s: &str, sep: char) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0usize;
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            c if c == sep && depth == 0 => out.push(std::mem::take(&mut cur)),
            _ => cur.push(c),
        }
    }
    out.push(cur);
    out
}

/// Canonical serialization; `parse_ppa . serialize_ppa` is the identity on
/// canonical files.
pub fn serialize_ppa(m: &Ppa) -> String {
    let mut out = String::new();
    out.push_str(&format!("ppa {}\n", m.name));
    if !m.alphabet.is_empty() {
        out.push_str("alphabet");
        for s in &m.alphabet {
            out.push_str(&format!(" {s}"));
        }
        out.push('\n');
    }
    if !m.params.is_empty() {
        out.push_str("params");
        for p in &m.params {
            out.push_str(&format!(" {p}"));
        }
        out.push('\n');
    }
    out.push_str("states");
    for s in &m.states {
        out.push_str(&format!(" {s}"));
    }
    out.push('\n');
    out.push_str(&format!("init {}\n", m.states[m.initial]));
    for ((s, a), dist) in &m.trans {
        out.push_str(&format!(
            "trans {} {} {} :",
            m.states[*s],
            m.actions[*a],
            m.labels[&(*s, *a)]
        ));
        let mut first = true;
        for (succ, p) in dist.iter() {
            out.push_str(if first { " " } else { ", " });
            first = false;
            out.push_str(&format!("{} = {}", m.states[succ], p));
        }
        if first {
            // empty distribution row; keep the line parseable
            out.push(' ');
        }
        out.push('\n');
    }
    out
}

/// Parses the DFA file format.
pub fn parse_dfa(file: &str, content: &str) -> Result<Dfa, FormatError> {
    let src = significant_lines(file, content);
    let mut name = String::new();
    let mut alphabet = BTreeSet::new();
    let mut states: Vec<String> = Vec::new();
    let mut init: Option<String> = None;
    let mut accepting: BTreeSet<String> = BTreeSet::new();
    let mut edges_raw: Vec<(usize, String, String, String)> = Vec::new();

    for (ln, line) in &src.lines {
        let toks = tokenize(line);
        match toks.first().map(|s| s.as_str()) {
            Some("dfa") => name = toks.get(1).cloned().unwrap_or_default(),
            Some("alphabet") => alphabet.extend(toks[1..].iter().cloned()),
            Some("states") => states.extend(toks[1..].iter().cloned()),
            Some("init") => {
                init = Some(toks.get(1).cloned().ok_or_else(|| {
                    FormatError::syntax(src.file, *ln, "expected a state after `init`")
                })?)
            }
            Some("accepting") => accepting.extend(toks[1..].iter().cloned()),
            Some("edge") => {
                if toks.len() != 4 {
                    return Err(FormatError::syntax(
                        src.file,
                        *ln,
                        "expected `edge <state> <symbol> <state>`",
                    ));
                }
                edges_raw.push((*ln, toks[1].clone(), toks[2].clone(), toks[3].clone()));
            }
            Some(other) => {
                return Err(FormatError::syntax(
                    src.file,
                    *ln,
                    format!("unknown directive `{other}`"),
                ))
            }
            None => {}
        }
    }

    if name.is_empty() {
        return Err(FormatError::syntax(src.file, 1, "missing `dfa <name>` header"));
    }
    let init = init.ok_or_else(|| FormatError::syntax(src.file, 1, "missing `init`"))?;
    let initial = states
        .iter()
        .position(|s| *s == init)
        .ok_or_else(|| FormatError::syntax(src.file, 1, format!("init state `{init}` not declared")))?;
    let mut edges = BTreeMap::new();
    for (ln, from, sym, to) in edges_raw {
        let fi = states.iter().position(|s| *s == from).ok_or_else(|| {
            FormatError::syntax(src.file, ln, format!("undeclared state `{from}`"))
        })?;
        let ti = states.iter().position(|s| *s == to).ok_or_else(|| {
            FormatError::syntax(src.file, ln, format!("undeclared state `{to}`"))
        })?;
        if !alphabet.contains(&sym) {
            return Err(FormatError::syntax(
                src.file,
                ln,
                format!("symbol `{sym}` not in alphabet"),
            ));
        }
        edges.insert((fi, sym), ti);
    }
    let accepting_idx = accepting
        .iter()
        .map(|s| {
            states
                .iter()
                .position(|t| t == s)
                .ok_or_else(|| FormatError::syntax(src.file, 1, format!("undeclared accepting state `{s}`")))
        })
        .collect::<Result<BTreeSet<usize>, _>>()?;

    let dfa = Dfa { name, states, initial, accepting: accepting_idx, alphabet, edges };
    dfa.validate()?;
    Ok(dfa)
}

pub fn serialize_dfa(d: &Dfa) -> String {
    let mut out = String::new();
    out.push_str(&format!("dfa {}\n", d.name));
    out.push_str("alphabet");
    for s in &d.alphabet {
        out.push_str(&format!(" {s}"));
    }
    out.push('\n');
    out.push_str("states");
    for s in &d.states {
        out.push_str(&format!(" {s}"));
    }
    out.push('\n');
    out.push_str(&format!("init {}\n", d.states[d.initial]));
    if !d.accepting.is_empty() {
        out.push_str("accepting");
        for s in &d.accepting {
            out.push_str(&format!(" {}", d.states[*s]));
        }
        out.push('\n');
    }
    for ((s, sym), t) in &d.edges {
        out.push_str(&format!("edge {} {} {}\n", d.states[*s], sym, d.states[*t]));
    }
    out
}
