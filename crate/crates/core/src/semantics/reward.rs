//! Expected total rewards, exact, with an explicit infinite outcome.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::solve_linear_system;
use crate::automata::Ppa;
use crate::error::SemanticsError;
use crate::scalar::FieldScalar;
use crate::strategies::{bottom_sccs, Strategy};
use crate::{Poly, Rat, Valuation};

/// Reward on alphabet symbols; symbols outside the reward alphabet earn
/// nothing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RewardFunction {
    pub name: String,
    pub alphabet: BTreeSet<String>,
    pub rewards: BTreeMap<String, Poly>,
}

impl RewardFunction {
    pub fn reward(&self, symbol: &str) -> Poly {
        self.rewards.get(symbol).cloned().unwrap_or_else(Poly::zero_poly)
    }

    /// Well-defined at `v`: every instantiated reward is nonnegative.
    pub fn check_well_defined(&self, v: &Valuation) -> Result<(), SemanticsError> {
        for (sym, p) in &self.rewards {
            let x = p.eval(v).map_err(crate::error::ModelError::from)?;
            if x < Rat::zero() {
                return Err(SemanticsError::NegativeReward(sym.clone()));
            }
        }
        Ok(())
    }

    /// Pointwise sum on the union alphabet.
    pub fn sum(&self, other: &RewardFunction) -> RewardFunction {
        let mut alphabet = self.alphabet.clone();
        alphabet.extend(other.alphabet.iter().cloned());
        let mut rewards = BTreeMap::new();
        for sym in &alphabet {
            let p = &self.reward(sym) + &other.reward(sym);
            if !p.is_zero() {
                rewards.insert(sym.clone(), p);
            }
        }
        RewardFunction {
            name: format!("({}+{})", self.name, other.name),
            alphabet,
            rewards,
        }
    }
}

/// Exact expected total reward, or infinite.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RewardValue<F = Rat> {
    Finite(F),
    Infinite,
}

impl<F: fmt::Display> fmt::Display for RewardValue<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RewardValue::Finite(x) => write!(f, "{x}"),
            RewardValue::Infinite => write!(f, "INFINITE"),
        }
    }
}

/// Shared structural computation over a generic field: one-step rewards,
/// chain rows, recurrence classification, and the linear solve.
///
/// The outcome is infinite exactly when a structurally recurrent bottom SCC
/// (full strategy mass everywhere inside) reachable from the initial state
/// contains a positive-mass action with nonzero reward.
pub fn expected_total_reward_chain<F: FieldScalar>(
    m: &Ppa,
    sigma: &Strategy,
    lift: impl Fn(&Poly) -> Result<F, SemanticsError>,
    mass_lift: impl Fn(&Rat) -> F,
    rf: &RewardFunction,
) -> Result<RewardValue<F>, SemanticsError> {
    let choices = sigma.memoryless_choices()?;
    let empty = BTreeMap::new();
    let n = m.states.len();

    // chain rows, per-state strategy mass, and one-step rewards
    let mut rows: Vec<BTreeMap<usize, F>> = vec![BTreeMap::new(); n];
    let mut full_mass = vec![false; n];
    let mut step_reward: Vec<F> = vec![F::zero(); n];
    let mut rewarded_action = vec![false; n];
    for s in 0..n {
        let mut mass_sum = Rat::zero();
        for (a, mass) in choices.get(&s).unwrap_or(&empty) {
            if mass.is_zero() {
                continue;
            }
            mass_sum += mass.clone();
            let label = m.label(s, *a).unwrap_or_default();
            let r = rf.reward(label);
            if !r.is_zero() {
                let lifted = lift(&r)?;
                if !lifted.is_zero() {
                    rewarded_action[s] = true;
                    step_reward[s] = step_reward[s].clone() + mass_lift(mass) * lifted;
                }
            }
            if let Some(d) = m.distribution(s, *a) {
                for (succ, poly) in d.iter() {
                    let val = mass_lift(mass) * lift(poly)?;
                    let slot = rows[s].entry(succ).or_insert_with(F::zero);
                    *slot = slot.clone() + val;
                }
            }
        }
        full_mass[s] = mass_sum.is_one();
    }

    let succs = |s: usize| -> Vec<usize> {
        rows[s]
            .iter()
            .filter(|(_, p)| !p.is_zero())
            .map(|(t, _)| *t)
            .collect()
    };
    let bottoms = bottom_sccs(n, m.initial, &succs);
    let mut recurrent = vec![false; n];
    for comp in &bottoms {
        if comp.iter().all(|s| full_mass[*s]) {
            if comp.iter().any(|s| rewarded_action[*s]) {
                return Ok(RewardValue::Infinite);
            }
            for s in comp {
                recurrent[*s] = true;
            }
        }
    }

    // E(s) = step_reward(s) + sum_t P(s,t) E(t), E = 0 on recurrent states
    let unknowns: Vec<usize> = (0..n).filter(|s| !recurrent[*s]).collect();
    let index: BTreeMap<usize, usize> =
        unknowns.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let k = unknowns.len();
    let mut a = vec![vec![F::zero(); k]; k];
    let mut b = vec![F::zero(); k];
    for (i, s) in unknowns.iter().enumerate() {
        a[i][i] = F::one();
        b[i] = step_reward[*s].clone();
        for (t, p) in &rows[*s] {
            if p.is_zero() || recurrent[*t] {
                continue;
            }
            let j = index[t];
            a[i][j] = a[i][j].clone() - p.clone();
        }
    }
    let x = solve_linear_system(&a, &b)?;
    let val = if recurrent[m.initial] {
        F::zero()
    } else {
        x[index[&m.initial]].clone()
    };
    Ok(RewardValue::Finite(val))
}

/// Expected total reward of `m` at well-defined `v` under a memoryless
/// strategy.
pub fn expected_total_reward(
    m: &Ppa,
    v: &Valuation,
    sigma: &Strategy,
    rf: &RewardFunction,
) -> Result<RewardValue<Rat>, SemanticsError> {
    rf.check_well_defined(v)?;
    expected_total_reward_chain(m, sigma, |p| Ok(p.eval(v)?), |r| r.clone(), rf)
}
