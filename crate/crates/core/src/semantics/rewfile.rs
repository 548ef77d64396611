//! Reward file format: `reward <name>`, `alphabet a b`, lines `a = 1`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::algebra::parse_polynomial;
use crate::error::FormatError;

use super::reward::RewardFunction;

pub fn parse_reward(file: &str, content: &str) -> Result<RewardFunction, FormatError> {
    let mut name = String::new();
    let mut alphabet: BTreeSet<String> = BTreeSet::new();
    let mut rewards: BTreeMap<String, crate::Poly> = BTreeMap::new();
    for (ln, raw) in content.lines().enumerate() {
        let ln = ln + 1;
        let line = match raw.find('#') {
            Some(i) => raw[..i].trim(),
            None => raw.trim(),
        };
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "reward" => name = toks.get(1).unwrap_or(&"").to_string(),
            "alphabet" => alphabet.extend(toks[1..].iter().map(|s| s.to_string())),
            _ => {
                let (sym, poly_src) = line.split_once('=').ok_or_else(|| {
                    FormatError::syntax(file, ln, "expected `symbol = polynomial`")
                })?;
                let sym = sym.trim().to_string();
                if !alphabet.contains(&sym) {
                    return Err(FormatError::syntax(
                        file,
                        ln,
                        format!("symbol `{sym}` not in reward alphabet"),
                    ));
                }
                let poly = parse_polynomial(poly_src.trim()).map_err(|err| {
                    FormatError::Poly { file: file.to_string(), line: ln, err }
                })?;
                if !poly.is_zero() {
                    rewards.insert(sym, poly);
                }
            }
        }
    }
    if name.is_empty() {
        return Err(FormatError::syntax(file, 1, "missing `reward <name>` header"));
    }
    Ok(RewardFunction { name, alphabet, rewards })
}

pub fn serialize_reward(rf: &RewardFunction) -> String {
    let mut out = format!("reward {}\n", rf.name);
    out.push_str("alphabet");
    for s in &rf.alphabet {
        out.push_str(&format!(" {s}"));
    }
    out.push('\n');
    for (sym, p) in &rf.rewards {
        out.push_str(&format!("{sym} = {p}\n"));
    }
    out
}
