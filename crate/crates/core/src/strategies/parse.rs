//! Strategy file format.
//!
//! ```text
//! strategy <name>
//! kind mless
//! at s0 : a = 1
//! ```
//!
//! ```text
//! strategy <name>
//! kind table
//! horizon 3
//! fallback stop
//! at t0 : a = 1
//! at t0 a t2 : c = 1/10, tau = 9/10
//! ```
//!
//! Masses are rational constants. Entries resolve against a concrete model.

use std::collections::BTreeMap;

use crate::algebra::parse_rational;
use crate::automata::{FinitePath, Ppa};
use crate::error::FormatError;
use crate::strategies::strategy::{Fallback, Strategy};
use crate::Rat;

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

pub fn parse_strategy(file: &str, content: &str, m: &Ppa) -> Result<Strategy, FormatError> {
    let mut kind: Option<String> = None;
    let mut horizon: Option<usize> = None;
    let mut fallback = Fallback::RepeatLast;
    let mut mless: BTreeMap<usize, BTreeMap<usize, Rat>> = BTreeMap::new();
    let mut table: BTreeMap<FinitePath, BTreeMap<usize, Rat>> = BTreeMap::new();

    for (ln, raw) in content.lines().enumerate() {
        let ln = ln + 1;
        let line = match raw.find('#') {
            Some(i) => raw[..i].trim(),
            None => raw.trim(),
        };
        if line.is_empty() {
            continue;
        }
        let toks = tokenize(line);
        match toks[0].as_str() {
            "strategy" => {}
            "kind" => kind = toks.get(1).cloned(),
            "horizon" => {
                horizon = Some(toks.get(1).and_then(|t| t.parse().ok()).ok_or_else(
                    || FormatError::syntax(file, ln, "expected `horizon <integer>`"),
                )?)
            }
            "fallback" => {
                fallback = match toks.get(1).map(|s| s.as_str()) {
                    Some("stop") => Fallback::Stop,
                    Some("repeat") => Fallback::RepeatLast,
                    _ => {
                        return Err(FormatError::syntax(
                            file,
                            ln,
                            "expected `fallback stop|repeat`",
                        ))
                    }
                }
            }
            "at" => {
                let (lhs, rhs) = line.split_once(':').ok_or_else(|| {
                    FormatError::syntax(file, ln, "expected `:` in `at` line")
                })?;
                let key_toks = tokenize(lhs);
                let key_toks = &key_toks[1..];
                if key_toks.is_empty() || key_toks.len() % 2 == 0 {
                    return Err(FormatError::syntax(
                        file,
                        ln,
                        "expected `at s0 [a s1 ...] : ...`",
                    ));
                }
                let mut dist: BTreeMap<usize, Rat> = BTreeMap::new();
                for part in split_top_level(rhs, ',') {
                    let part = part.trim();
                    if part.is_empty() {
                        continue;
                    }
                    let (act, mass) = part.split_once('=').ok_or_else(|| {
                        FormatError::syntax(file, ln, "expected `action = mass`")
                    })?;
                    let act = act.trim();
                    let ai = m.action_index(act).ok_or_else(|| {
                        FormatError::syntax(file, ln, format!("unknown action `{act}`"))
                    })?;
                    let mass = parse_rational(mass.trim()).map_err(|err| FormatError::Poly {
                        file: file.to_string(),
                        line: ln,
                        err,
                    })?;
                    dist.insert(ai, mass);
                }
                if key_toks.len() == 1 {
                    let si = m.state_index(&key_toks[0]).ok_or_else(|| {
                        FormatError::syntax(file, ln, format!("unknown state `{}`", key_toks[0]))
                    })?;
                    mless.insert(si, dist);
                } else {
                    let mut states = Vec::new();
                    let mut actions = Vec::new();
                    for (i, tok) in key_toks.iter().enumerate() {
                        if i % 2 == 0 {
                            states.push(m.state_index(tok).ok_or_else(|| {
                                FormatError::syntax(file, ln, format!("unknown state `{tok}`"))
                            })?);
                        } else {
                            actions.push(m.action_index(tok).ok_or_else(|| {
                                FormatError::syntax(file, ln, format!("unknown action `{tok}`"))
                            })?);
                        }
                    }
                    table.insert(FinitePath::new(states, actions), dist);
                }
            }
            other => {
                return Err(FormatError::syntax(
                    file,
                    ln,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }

    let strategy = match kind.as_deref() {
        Some("mless") => {
            if !table.is_empty() {
                return Err(FormatError::syntax(
                    file,
                    1,
                    "memoryless strategy has path-keyed entries",
                ));
            }
            Strategy::Memoryless { choices: mless }
        }
        Some("table") => {
            let mut entries = table;
            // single-state keys in a table are histories of length zero
            for (s, d) in mless {
                entries.insert(FinitePath::initial(s), d);
            }
            let h = horizon
                .unwrap_or_else(|| entries.keys().map(|p| p.len()).max().unwrap_or(0));
            Strategy::PathTable { horizon: h, entries, fallback }
        }
        _ => {
            return Err(FormatError::syntax(
                file,
                1,
                "missing or unknown `kind` (expected mless|table)",
            ))
        }
    };
    strategy.validate(m).map_err(FormatError::Strategy)?;
    Ok(strategy)
}

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

pub fn serialize_strategy(name: &str, sigma: &Strategy, m: &Ppa) -> String {
    let mut out = String::new();
    out.push_str(&format!("strategy {name}\n"));
    match sigma {
        Strategy::Memoryless { choices } => {
            out.push_str("kind mless\n");
            for (s, dist) in choices {
                if dist.is_empty() {
                    continue;
                }
                let entries: Vec<String> = dist
                    .iter()
                    .map(|(a, x)| format!("{} = {}", m.actions[*a], x))
                    .collect();
                out.push_str(&format!("at {} : {}\n", m.states[*s], entries.join(", ")));
            }
        }
        Strategy::PathTable { horizon, entries, fallback } => {
            out.push_str("kind table\n");
            out.push_str(&format!("horizon {horizon}\n"));
            out.push_str(&format!(
                "fallback {}\n",
                match fallback {
                    Fallback::Stop => "stop",
                    Fallback::RepeatLast => "repeat",
                }
            ));
            for (path, dist) in entries {
                if dist.is_empty() {
                    continue;
                }
                let masses: Vec<String> = dist
                    .iter()
                    .map(|(a, x)| format!("{} = {}", m.actions[*a], x))
                    .collect();
                out.push_str(&format!(
                    "at {} : {}\n",
                    path.display(m),
                    masses.join(", ")
                ));
            }
        }
    }
    out
}
