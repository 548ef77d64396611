//! Monotonicity checking: per witness strategy, the closed-form solution
//! function is computed once and examined on the sampled region, both by
//! the sign of its partial derivative at every sample and by the direct
//! pairwise ordering on samples differing in the checked parameter only.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::ControlFlow;

use num_traits::Zero;

use crate::algebra::{RationalFunction, Region};
use crate::automata::{dfa_product, tau_extend, Dfa, Ppa};
use crate::error::SemanticsError;
use crate::objectives::StrategyClass;
use crate::report::{Verdict, VerdictRecord, Witness};
use crate::semantics::{
    expected_total_reward_chain, induced_chain, reach_values, RewardFunction, RewardValue,
};
use crate::strategies::{for_each_effective_strategy, is_fair_memoryless, Strategy};
use crate::{Rat, RatFn, Valuation};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Up,
    Down,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Up => write!(f, "up"),
            Direction::Down => write!(f, "down"),
        }
    }
}

/// What the solution functions measure.
#[derive(Clone, Debug)]
pub enum MonotoneTarget {
    /// Safety probability for a bad-prefix DFA.
    Safety(Dfa),
    /// Expected total reward.
    Reward(RewardFunction),
}

impl MonotoneTarget {
    pub fn alphabet(&self) -> &std::collections::BTreeSet<String> {
        match self {
            MonotoneTarget::Safety(d) => &d.alphabet,
            MonotoneTarget::Reward(r) => &r.alphabet,
        }
    }
}

impl fmt::Display for MonotoneTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonotoneTarget::Safety(d) => write!(f, "SAFE({})", d.name),
            MonotoneTarget::Reward(r) => write!(f, "REW({})", r.name),
        }
    }
}

fn symbolic(p: &crate::Poly) -> Result<RatFn, SemanticsError> {
    Ok(RationalFunction::from_poly(p.clone()))
}

fn const_lift(r: &Rat) -> RatFn {
    RationalFunction::constant(r.clone())
}

/// Solution function of one strategy on the prepared arena.
fn strategy_solution(
    arena: &Ppa,
    targets: Option<&std::collections::BTreeSet<usize>>,
    sigma: &Strategy,
    target: &MonotoneTarget,
) -> Result<RewardValue<RatFn>, SemanticsError> {
    match target {
        MonotoneTarget::Safety(_) => {
            let t = targets.expect("safety target set");
            let chain = induced_chain(arena, sigma, symbolic, const_lift)?;
            let vals = reach_values(&chain, t)?;
            Ok(RewardValue::Finite(
                RatFn::from_poly(crate::Poly::constant(num_traits::One::one()))
                    - vals[arena.initial].clone(),
            ))
        }
        MonotoneTarget::Reward(rf) => {
            expected_total_reward_chain(arena, sigma, symbolic, const_lift, rf)
        }
    }
}

/// Groups sample indices by the valuation restricted to all parameters
/// except `param`, each group sorted by the `param` coordinate.
fn param_lines(samples: &[Valuation], param: &str) -> Vec<Vec<usize>> {
    let mut groups: BTreeMap<Vec<(String, Rat)>, Vec<usize>> = BTreeMap::new();
    for (k, v) in samples.iter().enumerate() {
        let key: Vec<(String, Rat)> = v
            .iter()
            .filter(|(name, _)| *name != param)
            .map(|(name, x)| (name.to_string(), x.clone()))
            .collect();
        groups.entry(key).or_default().push(k);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    for line in &mut out {
        line.sort_by(|a, b| {
            let xa = samples[*a].get(param);
            let xb = samples[*b].get(param);
            xa.cmp(&xb)
        });
    }
    out
}

/// Sample-level monotonicity verdict for every strategy of the witness
/// class: the solution function's partial derivative must have the required
/// sign at every sample, and values along every sampled parameter line must
/// be ordered accordingly.
#[allow(clippy::too_many_arguments)]
pub fn check_monotone(
    m: &Ppa,
    region: &Region,
    param: &str,
    direction: Direction,
    class: &StrategyClass,
    target: &MonotoneTarget,
    grid: u32,
    seed: u64,
) -> Result<VerdictRecord, SemanticsError> {
    let samples = region.sample(grid, seed);
    for v in &samples {
        if !m.is_well_defined(v)? {
            return Err(SemanticsError::RegionNotWellDefined(v.to_string()));
        }
        if matches!(class, StrategyClass::Fair(_)) && !m.is_graph_preserving(v)? {
            return Err(SemanticsError::RegionNotGraphPreserving(v.to_string()));
        }
    }

    // arena: monitor product for safety targets, the model itself for
    // rewards; sink-extended for the partial class
    let (mut arena, targets) = match target {
        MonotoneTarget::Safety(d) => {
            let prod = dfa_product(m, d)?;
            (prod.ppa, Some(prod.bad))
        }
        MonotoneTarget::Reward(_) => (m.clone(), None),
    };
    if matches!(class, StrategyClass::Prt) {
        arena = tau_extend(&arena).ppa;
    }
    if let StrategyClass::Fair(spec) = class {
        spec.validate_against(&m.alphabet)?;
    }
    let first_instance = if samples.is_empty() {
        None
    } else {
        Some(arena.instantiate(&samples[0])?)
    };

    let lines = param_lines(&samples, param);
    let mut strategies = 0usize;
    let mut witness: Option<Witness> = None;
    let mut err: Option<SemanticsError> = None;

    for_each_effective_strategy(&arena, &mut |choice| {
        let sigma = Strategy::memoryless_deterministic(choice);
        if let StrategyClass::Fair(spec) = class {
            match is_fair_memoryless(first_instance.as_ref().unwrap(), &sigma, spec) {
                Ok(false) => return ControlFlow::Continue(()),
                Ok(true) => {}
                Err(e) => {
                    err = Some(e);
                    return ControlFlow::Break(());
                }
            }
        }
        strategies += 1;
        let render = || {
            choice
                .iter()
                .map(|(s, a)| format!("{}:{}", arena.states[*s], arena.actions[*a]))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let sol = match strategy_solution(&arena, targets.as_ref(), &sigma, target) {
            Ok(s) => s,
            Err(e) => {
                err = Some(e);
                return ControlFlow::Break(());
            }
        };
        let sol = match sol {
            // constant-infinite solution functions are trivially monotone
            RewardValue::Infinite => return ControlFlow::Continue(()),
            RewardValue::Finite(f) => f,
        };
        let deriv = sol.partial_derivative(param);
        for v in &samples {
            let d = match deriv.eval(v) {
                Ok(d) => d,
                Err(e) => {
                    err = Some(SemanticsError::Algebra(e));
                    return ControlFlow::Break(());
                }
            };
            let bad = match direction {
                Direction::Up => d < Rat::zero(),
                Direction::Down => d > Rat::zero(),
            };
            if bad {
                witness = Some(Witness {
                    sample: v.to_string(),
                    strategy: render(),
                    detail: format!("derivative d/d{param} = {d} violates {direction}"),
                });
                return ControlFlow::Break(());
            }
        }
        for line in &lines {
            for pair in line.windows(2) {
                let (lo, hi) = (&samples[pair[0]], &samples[pair[1]]);
                let (xl, xh) = match (sol.eval(lo), sol.eval(hi)) {
                    (Ok(a), Ok(b)) => (a, b),
                    (Err(e), _) | (_, Err(e)) => {
                        err = Some(SemanticsError::Algebra(e));
                        return ControlFlow::Break(());
                    }
                };
                let bad = match direction {
                    Direction::Up => xl > xh,
                    Direction::Down => xl < xh,
                };
                if bad {
                    witness = Some(Witness {
                        sample: format!("{lo} vs {hi}"),
                        strategy: render(),
                        detail: format!("values {xl} then {xh} violate {direction}"),
                    });
                    return ControlFlow::Break(());
                }
            }
        }
        ControlFlow::Continue(())
    });
    if let Some(e) = err {
        return Err(e);
    }

    Ok(VerdictRecord {
        kind: "monotonicity",
        verdict: if witness.is_some() { Verdict::Violated } else { Verdict::HoldsOnSamples },
        vacuous: false,
        model: m.name.clone(),
        region: region.to_string(),
        class: class.to_string(),
        query: format!("monotone {direction} in {param} for {target}"),
        grid,
        seed,
        samples: samples.len(),
        strategies,
        extra: Vec::new(),
        witness,
    })
}
