//! Closed-form solution functions: the map from valuations to the measure
//! under a fixed memoryless strategy, as an exact rational function.
//!
//! Computed by Gaussian elimination over the rational-function field on the
//! parametric induced chain, with the zero/reach structure taken from the
//! nonzero-polynomial support graph. The results therefore describe the
//! generic (graph-preserving) zero pattern of the region; every returned
//! function is cross-checked against independent numeric solves at sampled
//! graph-preserving valuations.

use num_traits::One;

use crate::algebra::{Region, RationalFunction};
use crate::automata::{dfa_product, Dfa, Ppa, Product};
use crate::error::SemanticsError;
use crate::strategies::Strategy;
use crate::{Poly, Rat, RatFn, Valuation};

use super::chain::{induced_chain, reach_values};
use super::prob::{language_prob_reach, language_prob_safety};
use super::reward::{expected_total_reward, expected_total_reward_chain, RewardFunction, RewardValue};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SolutionKind {
    /// `Pr(L)` for a safety language given by a bad-prefix DFA.
    SafetyProbability,
    /// `Pr(eventually accepting)` for a reachability DFA.
    ReachProbability,
    /// Expected total reward.
    ExpectedReward,
}

/// A solution function over a region.
#[derive(Clone, Debug)]
pub struct SolutionFunction {
    pub kind: SolutionKind,
    pub value: RewardValue<RatFn>,
    pub domain: Region,
}

impl SolutionFunction {
    pub fn as_rational(&self) -> Option<&RatFn> {
        match &self.value {
            RewardValue::Finite(f) => Some(f),
            RewardValue::Infinite => None,
        }
    }

    pub fn eval(&self, v: &Valuation) -> Result<RewardValue<Rat>, SemanticsError> {
        match &self.value {
            RewardValue::Infinite => Ok(RewardValue::Infinite),
            RewardValue::Finite(f) => Ok(RewardValue::Finite(
                f.eval(v).map_err(SemanticsError::Algebra)?,
            )),
        }
    }
}

fn symbolic_lift(p: &Poly) -> Result<RatFn, SemanticsError> {
    Ok(RationalFunction::from_poly(p.clone()))
}

fn mass_lift(r: &Rat) -> RatFn {
    RationalFunction::constant(r.clone())
}

/// Solution function on an explicit product with designated target states.
/// `sigma` must be memoryless on the product.
pub fn solution_function_product(
    product: &Product,
    sigma: &Strategy,
    kind: SolutionKind,
    region: &Region,
) -> Result<SolutionFunction, SemanticsError> {
    let value = match kind {
        SolutionKind::SafetyProbability | SolutionKind::ReachProbability => {
            let chain = induced_chain(&product.ppa, sigma, symbolic_lift, mass_lift)?;
            let vals = reach_values(&chain, &product.bad)?;
            let reach = vals[product.ppa.initial].clone();
            let f = if matches!(kind, SolutionKind::SafetyProbability) {
                RatFn::one() - reach
            } else {
                reach
            };
            RewardValue::Finite(f)
        }
        SolutionKind::ExpectedReward => unreachable!("use solution_function for rewards"),
    };
    Ok(SolutionFunction { kind, value, domain: region.clone() })
}

/// What a solution function measures.
pub enum SolutionTarget<'a> {
    Safety(&'a Dfa),
    Reach(&'a Dfa),
    Reward(&'a RewardFunction),
}

/// Closed-form solution function for `m` under a memoryless strategy on
/// `m` itself (lifted over the DFA component for probabilistic targets).
/// The result is verified against independent numeric solves at up to five
/// sampled graph-preserving valuations of the region; a mismatch is an
/// internal error and reported as such.
pub fn solution_function(
    m: &Ppa,
    sigma: &Strategy,
    target: &SolutionTarget,
    region: &Region,
) -> Result<SolutionFunction, SemanticsError> {
    let sol = match target {
        SolutionTarget::Safety(b) | SolutionTarget::Reach(b) => {
            let prod = dfa_product(m, b)?;
            let lifted = lift_memoryless_to_product(sigma, &prod)?;
            let kind = match target {
                SolutionTarget::Safety(_) => SolutionKind::SafetyProbability,
                _ => SolutionKind::ReachProbability,
            };
            solution_function_product(&prod, &lifted, kind, region)?
        }
        SolutionTarget::Reward(rf) => {
            let value =
                expected_total_reward_chain(m, sigma, symbolic_lift, mass_lift, rf)?;
            SolutionFunction {
                kind: SolutionKind::ExpectedReward,
                value,
                domain: region.clone(),
            }
        }
    };

    // numeric cross-check on sampled graph-preserving valuations
    let mut checked = 0;
    for v in region.sample(2, 1) {
        if checked >= 5 {
            break;
        }
        if !m.is_graph_preserving(&v)? {
            continue;
        }
        let direct = match target {
            SolutionTarget::Safety(b) => {
                let prod = dfa_product(m, b)?;
                let lifted = lift_memoryless_to_product(sigma, &prod)?;
                RewardValue::Finite(language_prob_safety(m, &v, &lifted, b)?)
            }
            SolutionTarget::Reach(b) => {
                let prod = dfa_product(m, b)?;
                let lifted = lift_memoryless_to_product(sigma, &prod)?;
                RewardValue::Finite(language_prob_reach(m, &v, &lifted, b)?)
            }
            SolutionTarget::Reward(rf) => expected_total_reward(m, &v, sigma, rf)?,
        };
        let symbolic = sol.eval(&v)?;
        if direct != symbolic {
            return Err(SemanticsError::Internal(format!(
                "solution function mismatch at {v}: closed form {symbolic:?}, direct {direct:?}"
            )));
        }
        checked += 1;
    }
    Ok(sol)
}

/// Lifts a memoryless strategy on the base model to the product: the choice
/// at `(s, q)` is the choice at `s`. Action indices coincide by
/// construction of the product.
pub fn lift_memoryless_to_product(
    sigma: &Strategy,
    prod: &Product,
) -> Result<Strategy, SemanticsError> {
    let choices = sigma.memoryless_choices()?;
    let mut out = std::collections::BTreeMap::new();
    for (idx, (s, _q)) in prod.state_pairs.iter().enumerate() {
        if let Some(d) = choices.get(s) {
            out.insert(idx, d.clone());
        }
    }
    Ok(Strategy::memoryless(out))
}

/// Probability-kind sanity: values stay in `[0,1]` at the given samples.
pub fn check_probability_bounds(
    sol: &SolutionFunction,
    samples: &[Valuation],
) -> Result<bool, SemanticsError> {
    if matches!(sol.kind, SolutionKind::ExpectedReward) {
        return Ok(true);
    }
    let one = Rat::one();
    let zero = num_traits::Zero::zero();
    for v in samples {
        match sol.eval(v)? {
            RewardValue::Infinite => return Ok(false),
            RewardValue::Finite(x) => {
                if x < zero || x > one {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
