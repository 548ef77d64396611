//! Parametric probabilistic automata.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::error::ModelError;
use crate::{Poly, Rat, Valuation};

/// Parametric distribution over successor state indices. Zero entries are
/// encoded by absence.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ParametricDistribution {
    support: BTreeMap<usize, Poly>,
}

impl ParametricDistribution {
    pub fn dirac(state: usize) -> Self {
        let mut support = BTreeMap::new();
        support.insert(state, Poly::constant(Rat::one()));
        ParametricDistribution { support }
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (usize, Poly)>) -> Self {
        let mut support = BTreeMap::new();
        for (s, p) in entries {
            if !p.is_zero() {
                support.insert(s, p);
            }
        }
        ParametricDistribution { support }
    }

    pub fn get(&self, state: usize) -> Option<&Poly> {
        self.support.get(&state)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Poly)> {
        self.support.iter().map(|(s, p)| (*s, p))
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn row_sum(&self) -> Poly {
        let mut acc = Poly::zero_poly();
        for p in self.support.values() {
            acc = &acc + p;
        }
        acc
    }

    /// Product distribution on index pairs encoded by the caller.
    pub fn product(
        &self,
        other: &ParametricDistribution,
        pair: impl Fn(usize, usize) -> usize,
    ) -> ParametricDistribution {
        let mut support = BTreeMap::new();
        for (s1, p1) in &self.support {
            for (s2, p2) in &other.support {
                support.insert(pair(*s1, *s2), p1 * p2);
            }
        }
        ParametricDistribution { support }
    }

    pub fn instantiate(&self, v: &Valuation) -> Result<ParametricDistribution, ModelError> {
        let mut support = BTreeMap::new();
        for (s, p) in &self.support {
            let val = p.eval(v)?;
            // dom is preserved on instantiation, including entries that
            // evaluate to zero at non-graph-preserving valuations.
            support.insert(*s, Poly::constant(val));
        }
        Ok(ParametricDistribution { support })
    }
}

/// A parametric probabilistic automaton.
///
/// States and actions are indexed; names are kept for serialization and
/// reports. `trans` and `labels` share their domain.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ppa {
    pub name: String,
    pub states: Vec<String>,
    pub initial: usize,
    pub params: BTreeSet<String>,
    pub actions: Vec<String>,
    pub alphabet: BTreeSet<String>,
    pub trans: BTreeMap<(usize, usize), ParametricDistribution>,
    pub labels: BTreeMap<(usize, usize), String>,
}

/// Outcome of [`Ppa::validate`]: either per-state enabled actions or a list
/// of structural violations.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<ModelError>,
    pub enabled: BTreeMap<String, Vec<String>>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Ppa {
    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.states.iter().position(|s| s == name)
    }

    pub fn action_index(&self, name: &str) -> Option<usize> {
        self.actions.iter().position(|a| a == name)
    }

    pub fn state_name(&self, idx: usize) -> &str {
        &self.states[idx]
    }

    pub fn action_name(&self, idx: usize) -> &str {
        &self.actions[idx]
    }

    /// Enabled action indices at a state, ascending.
    pub fn enabled(&self, state: usize) -> Vec<usize> {
        self.trans
            .keys()
            .filter(|(s, _)| *s == state)
            .map(|(_, a)| *a)
            .collect()
    }

    pub fn label(&self, state: usize, action: usize) -> Option<&str> {
        self.labels.get(&(state, action)).map(|s| s.as_str())
    }

    pub fn distribution(&self, state: usize, action: usize) -> Option<&ParametricDistribution> {
        self.trans.get(&(state, action))
    }

    pub fn is_parameter_free(&self) -> bool {
        self.trans
            .values()
            .all(|d| d.iter().all(|(_, p)| p.is_constant()))
    }

    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::default();
        if self.states.is_empty() {
            rep.violations.push(ModelError::NoInitialState);
            return rep;
        }
        if self.initial >= self.states.len() {
            rep.violations.push(ModelError::UnknownState(format!(
                "initial index {}",
                self.initial
            )));
        }
        for ((s, a), dist) in &self.trans {
            if *s >= self.states.len() {
                rep.violations
                    .push(ModelError::UnknownState(format!("state index {s}")));
                continue;
            }
            if *a >= self.actions.len() {
                rep.violations
                    .push(ModelError::UnknownAction(format!("action index {a}")));
                continue;
            }
            for (succ, _) in dist.iter() {
                if succ >= self.states.len() {
                    rep.violations.push(ModelError::DanglingSuccessor {
                        state: self.states[*s].clone(),
                        action: self.actions[*a].clone(),
                        succ: format!("index {succ}"),
                    });
                }
            }
            match self.labels.get(&(*s, *a)) {
                None => rep.violations.push(ModelError::LabelOutsideAlphabet(format!(
                    "missing label for ({}, {})",
                    self.states[*s], self.actions[*a]
                ))),
                Some(l) => {
                    if !self.alphabet.contains(l) {
                        rep.violations
                            .push(ModelError::LabelOutsideAlphabet(l.clone()));
                    }
                }
            }
        }
        for key in self.labels.keys() {
            if !self.trans.contains_key(key) {
                rep.violations.push(ModelError::LabelOutsideAlphabet(format!(
                    "label on non-transition ({}, {})",
                    key.0, key.1
                )));
            }
        }
        if rep.is_valid() {
            for (idx, name) in self.states.iter().enumerate() {
                rep.enabled.insert(
                    name.clone(),
                    self.enabled(idx)
                        .into_iter()
                        .map(|a| self.actions[a].clone())
                        .collect(),
                );
            }
        }
        rep
    }

    /// Well-defined: every instantiated transition row is a probability
    /// distribution (entries in `[0,1]`, sums exactly one).
    pub fn is_well_defined(&self, v: &Valuation) -> Result<bool, ModelError> {
        for dist in self.trans.values() {
            let mut sum = Rat::zero();
            for (_, p) in dist.iter() {
                let x = p.eval(v)?;
                if x < Rat::zero() || x > Rat::one() {
                    return Ok(false);
                }
                sum += x;
            }
            if !sum.is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Graph-preserving: well-defined and no nonzero polynomial vanishes.
    pub fn is_graph_preserving(&self, v: &Valuation) -> Result<bool, ModelError> {
        if !self.is_well_defined(v)? {
            return Ok(false);
        }
        for dist in self.trans.values() {
            for (_, p) in dist.iter() {
                // stored entries are the nonzero polynomials
                if p.eval(v)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Instantiation at `v`: same transition domain, polynomials replaced by
    /// their constant values.
    pub fn instantiate(&self, v: &Valuation) -> Result<Ppa, ModelError> {
        let mut trans = BTreeMap::new();
        for (key, dist) in &self.trans {
            trans.insert(*key, dist.instantiate(v)?);
        }
        Ok(Ppa {
            name: format!("{}@", self.name),
            states: self.states.clone(),
            initial: self.initial,
            params: BTreeSet::new(),
            actions: self.actions.clone(),
            alphabet: self.alphabet.clone(),
            trans,
            labels: self.labels.clone(),
        })
    }

    /// States reachable through stored (nonzero-polynomial) transitions.
    pub fn reachable(&self) -> BTreeSet<usize> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![self.initial];
        while let Some(s) = stack.pop() {
            if !seen.insert(s) {
                continue;
            }
            for a in self.enabled(s) {
                for (succ, p) in self.trans[&(s, a)].iter() {
                    if !p.is_zero() && !seen.contains(&succ) {
                        stack.push(succ);
                    }
                }
            }
        }
        seen
    }
}

/// Renames states to dense `s0..sN` ids in a deterministic order
/// (breadth-first from the initial state, then leftovers in index order).
/// Returns the renamed pPA and the mapping new index -> old name.
pub fn canonical_renumber(m: &Ppa) -> (Ppa, Vec<String>) {
    let mut order: Vec<usize> = Vec::new();
    let mut seen = vec![false; m.states.len()];
    let mut queue = std::collections::VecDeque::from([m.initial]);
    while let Some(s) = queue.pop_front() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        order.push(s);
        for a in m.enabled(s) {
            for (succ, _) in m.trans[&(s, a)].iter() {
                if !seen[succ] {
                    queue.push_back(succ);
                }
            }
        }
    }
    for s in 0..m.states.len() {
        if !seen[s] {
            order.push(s);
        }
    }
    let mut new_of_old = vec![0usize; m.states.len()];
    for (new, old) in order.iter().enumerate() {
        new_of_old[*old] = new;
    }
    let mut out = Ppa {
        name: m.name.clone(),
        states: (0..m.states.len()).map(|i| format!("s{i}")).collect(),
        initial: new_of_old[m.initial],
        params: m.params.clone(),
        actions: m.actions.clone(),
        alphabet: m.alphabet.clone(),
        trans: BTreeMap::new(),
        labels: BTreeMap::new(),
    };
    for ((s, a), dist) in &m.trans {
        let nd = ParametricDistribution::from_entries(
            dist.iter().map(|(succ, p)| (new_of_old[succ], p.clone())),
        );
        out.trans.insert((new_of_old[*s], *a), nd);
        out.labels
            .insert((new_of_old[*s], *a), m.labels[&(*s, *a)].clone());
    }
    let mapping = order.iter().map(|old| m.states[*old].clone()).collect();
    (out, mapping)
}
