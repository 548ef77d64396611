//! Finite paths: alternating state/action sequences.

use std::fmt;

use super::ppa::Ppa;

/// `s0, a0, s1, a1, ..., sn`. Length is the number of actions.
///
/// Validity only requires every `(s_i, a_i)` to be in the transition domain;
/// steps of probability zero are deliberately allowed, so a path of a pPA is
/// a path of every instantiation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FinitePath {
    states: Vec<usize>,
    actions: Vec<usize>,
}

impl FinitePath {
    pub fn initial(state: usize) -> Self {
        FinitePath { states: vec![state], actions: Vec::new() }
    }

    pub fn new(states: Vec<usize>, actions: Vec<usize>) -> Self {
        assert_eq!(states.len(), actions.len() + 1, "malformed path");
        FinitePath { states, actions }
    }

    pub fn len(&self) -> usize {
        self.actions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.actions.is_empty()
    }

    pub fn first(&self) -> usize {
        self.states[0]
    }

    pub fn last(&self) -> usize {
        *self.states.last().unwrap()
    }

    pub fn states(&self) -> &[usize] {
        &self.states
    }

    pub fn actions(&self) -> &[usize] {
        &self.actions
    }

    /// The `(state, action, successor)` triple of step `i`.
    pub fn step(&self, i: usize) -> (usize, usize, usize) {
        (self.states[i], self.actions[i], self.states[i + 1])
    }

    pub fn prefix(&self, len: usize) -> FinitePath {
        assert!(len <= self.len());
        FinitePath {
            states: self.states[..=len].to_vec(),
            actions: self.actions[..len].to_vec(),
        }
    }

    pub fn extended(&self, action: usize, state: usize) -> FinitePath {
        let mut out = self.clone();
        out.actions.push(action);
        out.states.push(state);
        out
    }

    pub fn is_valid_in(&self, m: &Ppa) -> bool {
        self.states.iter().all(|s| *s < m.states.len())
            && (0..self.len()).all(|i| m.trans.contains_key(&(self.states[i], self.actions[i])))
    }

    pub fn display<'a>(&'a self, m: &'a Ppa) -> PathDisplay<'a> {
        PathDisplay { path: self, m }
    }
}

pub struct PathDisplay<'a> {
    path: &'a FinitePath,
    m: &'a Ppa,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.m.state_name(self.path.states[0]))?;
        for i in 0..self.path.len() {
            write!(
                f,
                " {} {}",
                self.m.action_name(self.path.actions[i]),
                self.m.state_name(self.path.states[i + 1])
            )?;
        }
        Ok(())
    }
}
