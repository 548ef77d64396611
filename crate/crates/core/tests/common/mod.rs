//! Shared fixture loading for the integration tests.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use ppa_core::automata::{parse_dfa, parse_ppa, Composition, Dfa, Ppa};
use ppa_core::semantics::{parse_reward, RewardFunction};
use ppa_core::strategies::{parse_strategy, Strategy};
use ppa_core::{rat, Rat, Valuation};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

pub fn load_ppa(name: &str) -> Ppa {
    let path = fixture_path(name);
    let content = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{name}: {e}"));
    parse_ppa(name, &content).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn load_dfa(name: &str) -> Dfa {
    let path = fixture_path(name);
    let content = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{name}: {e}"));
    parse_dfa(name, &content).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn load_reward(name: &str) -> RewardFunction {
    let path = fixture_path(name);
    let content = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{name}: {e}"))
        ;
    parse_reward(name, &content).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn load_strategy(name: &str, m: &Ppa) -> Strategy {
    let path = fixture_path(name);
    let content = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{name}: {e}"));
    parse_strategy(name, &content, m).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn m1() -> Ppa {
    load_ppa("m1.ppa")
}

pub fn m2() -> Ppa {
    load_ppa("m2.ppa")
}

pub fn composition() -> Composition {
    ppa_core::automata::parallel_compose(&m1(), &m2()).unwrap()
}

/// The running-example strategy: choose the a/c/frown-labeled action with
/// probability one when available, otherwise b. Built by label preference,
/// so it adapts to any product indexing.
pub fn paper_strategy(m: &Ppa) -> Strategy {
    let mut choices: BTreeMap<usize, BTreeMap<usize, Rat>> = BTreeMap::new();
    for s in 0..m.states.len() {
        let enabled = m.enabled(s);
        if enabled.is_empty() {
            continue;
        }
        let preferred = enabled.iter().copied().find(|a| {
            matches!(m.label(s, *a), Some("a") | Some("c") | Some("frown"))
        });
        let pick = preferred.unwrap_or(enabled[0]);
        let mut d = BTreeMap::new();
        d.insert(pick, rat(1, 1));
        choices.insert(s, d);
    }
    Strategy::memoryless(choices)
}

pub fn val(pairs: &[(&str, Rat)]) -> Valuation {
    Valuation::from_pairs(pairs.iter().map(|(k, v)| (k.to_string(), v.clone())))
}
