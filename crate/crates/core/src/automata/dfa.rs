//! Deterministic finite automata over alphabet symbols, used as bad-prefix
//! monitors for safety languages and as acceptors for reachability goals.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::ModelError;

/// Complete DFA. Accepting states must be absorbing: bad-prefix languages
/// are extension-closed, and absorption makes "some prefix accepted"
/// checkable state-locally in products.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dfa {
    pub name: String,
    pub states: Vec<String>,
    pub initial: usize,
    pub accepting: BTreeSet<usize>,
    pub alphabet: BTreeSet<String>,
    pub edges: BTreeMap<(usize, String), usize>,
}

impl Dfa {
    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.states.iter().position(|s| s == name)
    }

    pub fn step(&self, state: usize, symbol: &str) -> Option<usize> {
        self.edges.get(&(state, symbol.to_string())).copied()
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting.contains(&state)
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        if self.states.is_empty() {
            return Err(ModelError::NoInitialState);
        }
        for s in 0..self.states.len() {
            for sym in &self.alphabet {
                match self.edges.get(&(s, sym.clone())) {
                    None => {
                        return Err(ModelError::DfaIncomplete {
                            state: self.states[s].clone(),
                            symbol: sym.clone(),
                        })
                    }
                    Some(t) => {
                        if *t >= self.states.len() {
                            return Err(ModelError::UnknownState(format!("index {t}")));
                        }
                        if self.accepting.contains(&s) && !self.accepting.contains(t) {
                            return Err(ModelError::DfaAcceptingNotAbsorbing(
                                self.states[s].clone(),
                            ));
                        }
                    }
                }
            }
        }
        for (s, sym) in self.edges.keys() {
            if !self.alphabet.contains(sym) {
                return Err(ModelError::LabelOutsideAlphabet(sym.clone()));
            }
            if *s >= self.states.len() {
                return Err(ModelError::UnknownState(format!("index {s}")));
            }
        }
        Ok(())
    }

    /// Runs the DFA on a symbol word from the initial state.
    pub fn run<'a>(&self, word: impl IntoIterator<Item = &'a str>) -> Option<usize> {
        let mut q = self.initial;
        for sym in word {
            q = self.step(q, sym)?;
        }
        Some(q)
    }

    /// Synchronous product with `other` over the union alphabet; symbols
    /// outside one component's alphabet leave that component in place.
    /// Accepting set given by `accept`: both / either component accepting.
    pub fn product(&self, other: &Dfa, accept_both: bool) -> Dfa {
        let mut alphabet = self.alphabet.clone();
        alphabet.extend(other.alphabet.iter().cloned());
        let n2 = other.states.len();
        let pair = |a: usize, b: usize| a * n2 + b;
        let mut states = Vec::with_capacity(self.states.len() * n2);
        for a in &self.states {
            for b in &other.states {
                states.push(format!("({a},{b})"));
            }
        }
        let mut edges = BTreeMap::new();
        let mut accepting = BTreeSet::new();
        for a in 0..self.states.len() {
            for b in 0..n2 {
                let acc = if accept_both {
                    self.is_accepting(a) && other.is_accepting(b)
                } else {
                    self.is_accepting(a) || other.is_accepting(b)
                };
                if acc {
                    accepting.insert(pair(a, b));
                }
                for sym in &alphabet {
                    let na = if self.alphabet.contains(sym) {
                        match self.step(a, sym) {
                            Some(x) => x,
                            None => continue,
                        }
                    } else {
                        a
                    };
                    let nb = if other.alphabet.contains(sym) {
                        match other.step(b, sym) {
                            Some(x) => x,
                            None => continue,
                        }
                    } else {
                        b
                    };
                    edges.insert((pair(a, b), sym.clone()), pair(na, nb));
                }
            }
        }
        Dfa {
            name: format!("({} x {})", self.name, other.name),
            states,
            initial: pair(self.initial, other.initial),
            accepting,
            alphabet,
            edges,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Bad-prefix DFA for "at most one `a`" over {a, b}.
    pub fn at_most_one_a() -> Dfa {
        let mut edges = BTreeMap::new();
        edges.insert((0, "a".to_string()), 1);
        edges.insert((0, "b".to_string()), 0);
        edges.insert((1, "a".to_string()), 2);
        edges.insert((1, "b".to_string()), 1);
        edges.insert((2, "a".to_string()), 2);
        edges.insert((2, "b".to_string()), 2);
        Dfa {
            name: "la".to_string(),
            states: vec!["q0".into(), "q1".into(), "qbad".into()],
            initial: 0,
            accepting: [2].into_iter().collect(),
            alphabet: ["a".to_string(), "b".to_string()].into_iter().collect(),
            edges,
        }
    }

    #[test]
    fn validates_and_runs() {
        let d = at_most_one_a();
        d.validate().unwrap();
        assert_eq!(d.run(["b", "a", "b"]), Some(1));
        assert_eq!(d.run(["a", "a"]), Some(2));
    }

    #[test]
    fn rejects_non_absorbing_accepting() {
        let mut d = at_most_one_a();
        d.edges.insert((2, "a".to_string()), 0);
        assert!(matches!(
            d.validate(),
            Err(ModelError::DfaAcceptingNotAbsorbing(_))
        ));
    }

    #[test]
    fn product_accept_both_tracks_joint_badness() {
        let d = at_most_one_a();
        let e = {
            // bad-prefix for "no c" over {c}
            let mut edges = BTreeMap::new();
            edges.insert((0, "c".to_string()), 1);
            edges.insert((1, "c".to_string()), 1);
            Dfa {
                name: "noc".to_string(),
                states: vec!["g0".into(), "gbad".into()],
                initial: 0,
                accepting: [1].into_iter().collect(),
                alphabet: ["c".to_string()].into_iter().collect(),
                edges,
            }
        };
        let p = d.product(&e, true);
        p.validate().unwrap();
        // two a's but no c: only the first component is bad
        let q = p.run(["a", "a", "b"]).unwrap();
        assert!(!p.is_accepting(q));
        let q = p.run(["a", "a", "c"]).unwrap();
        assert!(p.is_accepting(q));
    }
}
