//! The strategy arena for a query: the synchronized product of a model with
//! every DFA payload of the query. Strategies of the witness class live on
//! this product, so they may observe monitor states; each objective is then
//! a reachability or reward computation in the same chain.

use std::collections::BTreeSet;

use num_traits::One;

use crate::automata::{dfa_product, tau_extend, Ppa};
use crate::error::SemanticsError;
use crate::semantics::{
    expected_total_reward_chain, induced_chain, reach_values, RewardValue,
};
use crate::strategies::Strategy;
use crate::{Rat, Valuation};

use super::objective::{MoQuery, Objective, ObjectivePayload};

/// Product arena with per-objective target sets.
#[derive(Clone, Debug)]
pub struct Arena {
    pub ppa: Ppa,
    /// For probabilistic objective `j`: arena states whose `j`-th monitor
    /// component is accepting. `None` for reward objectives.
    pub targets: Vec<Option<BTreeSet<usize>>>,
    /// arena state -> base model state (the sink of a tau extension maps to
    /// `None`).
    pub base_state: Vec<Option<usize>>,
    pub tau_extended: bool,
}

/// Builds the arena for a query; `tau` realizes the partial class by a sink
/// extension after taking all monitor products.
pub fn build_arena(m: &Ppa, query: &MoQuery, tau: bool) -> Result<Arena, SemanticsError> {
    let mut ppa = m.clone();
    let mut base_state: Vec<Option<usize>> = (0..m.states.len()).map(Some).collect();
    let mut targets: Vec<Option<BTreeSet<usize>>> = Vec::new();
    for o in &query.objectives {
        match &o.payload {
            ObjectivePayload::Reward(_) => targets.push(None),
            ObjectivePayload::Safety(d) | ObjectivePayload::Reach(d) => {
                let prod = dfa_product(&ppa, d)?;
                // re-map previously computed structures through the product
                base_state = prod
                    .state_pairs
                    .iter()
                    .map(|(s, _)| base_state[*s])
                    .collect();
                for t in targets.iter_mut().flatten() {
                    *t = prod
                        .state_pairs
                        .iter()
                        .enumerate()
                        .filter(|(_, (s, _))| t.contains(s))
                        .map(|(i, _)| i)
                        .collect();
                }
                targets.push(Some(prod.bad.clone()));
                ppa = prod.ppa;
            }
        }
    }
    if tau {
        let ext = tau_extend(&ppa);
        ppa = ext.ppa;
        base_state.push(None);
    }
    Ok(Arena { ppa, targets, base_state, tau_extended: tau })
}

/// Exact measure of one objective.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ObjectiveValue {
    Probability(Rat),
    Reward(RewardValue<Rat>),
}

impl std::fmt::Display for ObjectiveValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ObjectiveValue::Probability(x) => write!(f, "{x}"),
            ObjectiveValue::Reward(x) => write!(f, "{x}"),
        }
    }
}

impl ObjectiveValue {
    pub fn satisfies(&self, o: &Objective) -> bool {
        match self {
            ObjectiveValue::Probability(x) => o.cmp.holds(x, &o.threshold),
            ObjectiveValue::Reward(RewardValue::Finite(x)) => o.cmp.holds(x, &o.threshold),
            ObjectiveValue::Reward(RewardValue::Infinite) => o.cmp.holds_infinite(),
        }
    }
}

/// Evaluates every objective of the query in the arena at a well-defined
/// valuation under a memoryless strategy on the arena.
pub fn eval_query(
    arena: &Arena,
    query: &MoQuery,
    v: &Valuation,
    sigma: &Strategy,
) -> Result<Vec<ObjectiveValue>, SemanticsError> {
    let chain = induced_chain(&arena.ppa, sigma, |p| Ok(p.eval(v)?), |r| r.clone())?;
    let mut out = Vec::with_capacity(query.objectives.len());
    for (j, o) in query.objectives.iter().enumerate() {
        let value = match &o.payload {
            ObjectivePayload::Safety(_) => {
                let t = arena.targets[j].as_ref().expect("probabilistic target");
                let vals = reach_values(&chain, t)?;
                ObjectiveValue::Probability(Rat::one() - vals[arena.ppa.initial].clone())
            }
            ObjectivePayload::Reach(_) => {
                let t = arena.targets[j].as_ref().expect("probabilistic target");
                let vals = reach_values(&chain, t)?;
                ObjectiveValue::Probability(vals[arena.ppa.initial].clone())
            }
            ObjectivePayload::Reward(rf) => {
                let val = expected_total_reward_chain(
                    &arena.ppa,
                    sigma,
                    |p| Ok(p.eval(v)?),
                    |r| r.clone(),
                    rf,
                )?;
                ObjectiveValue::Reward(val)
            }
        };
        out.push(value);
    }
    Ok(out)
}
