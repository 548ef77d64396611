//! Strategy representations: memoryless tables and finite-path tables.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::automata::{FinitePath, Ppa};
use crate::error::StrategyError;
use crate::{Rat, Valuation};

/// Behavior of a finite-path table beyond its horizon.
///
/// The underlying definition places no bound on histories; tables carry a
/// declared rule for longer paths. `Stop` assigns no mass (partial tail),
/// `RepeatLast` replays the distribution stored at the longest covered
/// prefix, restricted to the actions enabled at the current state.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Fallback {
    #[default]
    RepeatLast,
    Stop,
}

/// A (partial) strategy: maps histories to subdistributions over enabled
/// actions. Memoryless strategies key on the last state only.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Strategy {
    Memoryless {
        choices: BTreeMap<usize, BTreeMap<usize, Rat>>,
    },
    PathTable {
        horizon: usize,
        entries: BTreeMap<FinitePath, BTreeMap<usize, Rat>>,
        fallback: Fallback,
    },
}

/// Validation outcome: computed structural facts about a strategy.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StrategyInfo {
    pub memoryless: bool,
    pub complete: bool,
}

impl Strategy {
    pub fn memoryless(choices: BTreeMap<usize, BTreeMap<usize, Rat>>) -> Self {
        Strategy::Memoryless { choices }
    }

    /// Deterministic memoryless strategy from a state -> action map.
    pub fn memoryless_deterministic(choice: &BTreeMap<usize, usize>) -> Self {
        let choices = choice
            .iter()
            .map(|(s, a)| {
                let mut d = BTreeMap::new();
                d.insert(*a, Rat::one());
                (*s, d)
            })
            .collect();
        Strategy::Memoryless { choices }
    }

    pub fn path_table(
        entries: BTreeMap<FinitePath, BTreeMap<usize, Rat>>,
        fallback: Fallback,
    ) -> Self {
        let horizon = entries.keys().map(|p| p.len()).max().unwrap_or(0);
        Strategy::PathTable { horizon, entries, fallback }
    }

    pub fn is_memoryless(&self) -> bool {
        matches!(self, Strategy::Memoryless { .. })
    }

    pub fn horizon(&self) -> Option<usize> {
        match self {
            Strategy::Memoryless { .. } => None,
            Strategy::PathTable { horizon, .. } => Some(*horizon),
        }
    }

    /// The subdistribution over actions chosen after history `path`.
    pub fn distribution(&self, m: &Ppa, path: &FinitePath) -> BTreeMap<usize, Rat> {
        match self {
            Strategy::Memoryless { choices } => {
                choices.get(&path.last()).cloned().unwrap_or_default()
            }
            Strategy::PathTable { horizon, entries, fallback } => {
                if let Some(d) = entries.get(path) {
                    return d.clone();
                }
                if path.len() <= *horizon {
                    return BTreeMap::new();
                }
                match fallback {
                    Fallback::Stop => BTreeMap::new(),
                    Fallback::RepeatLast => {
                        let mut len = *horizon;
                        loop {
                            let pfx = path.prefix(len);
                            if let Some(d) = entries.get(&pfx) {
                                let enabled = m.enabled(path.last());
                                return d
                                    .iter()
                                    .filter(|(a, _)| enabled.contains(a))
                                    .map(|(a, x)| (*a, x.clone()))
                                    .collect();
                            }
                            if len == 0 {
                                return BTreeMap::new();
                            }
                            len -= 1;
                        }
                    }
                }
            }
        }
    }

    pub fn mass(&self, m: &Ppa, path: &FinitePath, action: usize) -> Rat {
        self.distribution(m, path)
            .get(&action)
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Memoryless view keyed by state. Errors when not memoryless.
    pub fn memoryless_choices(
        &self,
    ) -> Result<&BTreeMap<usize, BTreeMap<usize, Rat>>, StrategyError> {
        match self {
            Strategy::Memoryless { choices } => Ok(choices),
            Strategy::PathTable { .. } => Err(StrategyError::NotMemoryless),
        }
    }

    /// Checks support-in-enabled and mass bounds; reports memorylessness and
    /// completeness. Memoryless completeness means full mass at every state
    /// of the model; table completeness means full mass at every stored key.
    pub fn validate(&self, m: &Ppa) -> Result<StrategyInfo, StrategyError> {
        let check_dist = |key: &str, state: usize, d: &BTreeMap<usize, Rat>| {
            let enabled = m.enabled(state);
            let mut sum = Rat::zero();
            for (a, x) in d {
                if x.is_zero() {
                    continue;
                }
                if *x < Rat::zero() {
                    return Err(StrategyError::MassExceedsOne(key.to_string()));
                }
                if !enabled.contains(a) {
                    return Err(StrategyError::DisabledAction {
                        action: m
                            .actions
                            .get(*a)
                            .cloned()
                            .unwrap_or_else(|| format!("#{a}")),
                        at: key.to_string(),
                    });
                }
                sum += x.clone();
            }
            if sum > Rat::one() {
                return Err(StrategyError::MassExceedsOne(key.to_string()));
            }
            Ok(sum.is_one())
        };
        match self {
            Strategy::Memoryless { choices } => {
                let mut complete = true;
                for s in 0..m.states.len() {
                    let full = match choices.get(&s) {
                        Some(d) => check_dist(m.state_name(s), s, d)?,
                        None => false,
                    };
                    complete &= full;
                }
                Ok(StrategyInfo { memoryless: true, complete })
            }
            Strategy::PathTable { entries, .. } => {
                let mut complete = true;
                for (path, d) in entries {
                    if !path.is_valid_in(m) {
                        return Err(StrategyError::DisabledAction {
                            action: "<path>".to_string(),
                            at: format!("{}", path.display(m)),
                        });
                    }
                    let key = format!("{}", path.display(m));
                    complete &= check_dist(&key, path.last(), d)?;
                }
                Ok(StrategyInfo { memoryless: false, complete })
            }
        }
    }
}

/// Cylinder-set probability of a finite path: the Iverson initial-state
/// factor times the product of strategy masses and transition values.
pub fn path_probability(
    m: &Ppa,
    v: &Valuation,
    sigma: &Strategy,
    path: &FinitePath,
) -> Result<Rat, crate::error::ModelError> {
    if path.first() != m.initial {
        return Ok(Rat::zero());
    }
    let mut acc = Rat::one();
    for i in 0..path.len() {
        let (s, a, succ) = path.step(i);
        let sm = sigma.mass(m, &path.prefix(i), a);
        if sm.is_zero() {
            return Ok(Rat::zero());
        }
        let dp = match m.distribution(s, a).and_then(|d| d.get(succ)) {
            None => return Ok(Rat::zero()),
            Some(p) => p.eval(v)?,
        };
        if dp.is_zero() {
            return Ok(Rat::zero());
        }
        acc *= sm * dp;
    }
    Ok(acc)
}
