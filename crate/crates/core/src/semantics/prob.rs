//! Finite-path and language probabilities, and extremal values over
//! memoryless deterministic strategy classes.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use num_traits::{One, Zero};

use crate::automata::{dfa_product, tau_extend, Dfa, FinitePath, Ppa};
use crate::error::SemanticsError;
use crate::strategies::{
    bottom_sccs, for_each_effective_strategy, path_probability, Strategy,
};
use crate::{Rat, Valuation};

use super::chain::{induced_chain, reach_values, Chain};

/// Cylinder probability of a finite path at a well-defined valuation.
pub fn finite_path_prob(
    m: &Ppa,
    v: &Valuation,
    sigma: &Strategy,
    path: &FinitePath,
) -> Result<Rat, SemanticsError> {
    Ok(path_probability(m, v, sigma, path)?)
}

fn numeric_chain(
    m: &Ppa,
    v: &Valuation,
    sigma: &Strategy,
) -> Result<Chain<Rat>, SemanticsError> {
    induced_chain(m, sigma, |p| Ok(p.eval(v)?), |r| r.clone())
}

/// Probability of a safety language (bad-prefix DFA `b`) in `m` at `v`
/// under a memoryless strategy on the product `m (x) b`:
/// `Pr(L) = 1 - Pr(eventually bad)`.
pub fn language_prob_safety(
    m: &Ppa,
    v: &Valuation,
    sigma_on_product: &Strategy,
    b: &Dfa,
) -> Result<Rat, SemanticsError> {
    let prod = dfa_product(m, b)?;
    let chain = numeric_chain(&prod.ppa, v, sigma_on_product)?;
    let vals = reach_values(&chain, &prod.bad)?;
    Ok(Rat::one() - vals[prod.ppa.initial].clone())
}

/// Probability of eventually reaching an accepting DFA state (reachability
/// objectives): `Pr(eventually acc)`.
pub fn language_prob_reach(
    m: &Ppa,
    v: &Valuation,
    sigma_on_product: &Strategy,
    b: &Dfa,
) -> Result<Rat, SemanticsError> {
    let prod = dfa_product(m, b)?;
    let chain = numeric_chain(&prod.ppa, v, sigma_on_product)?;
    let vals = reach_values(&chain, &prod.bad)?;
    Ok(vals[prod.ppa.initial].clone())
}

/// Safety probability together with the value under the non-prefix-closed
/// reading, where only paths whose restriction to the language alphabet is
/// infinite can satisfy the language. The pair documents the gap between
/// the two semantics.
pub fn language_prob_safety_with_contrast(
    m: &Ppa,
    v: &Valuation,
    sigma_on_product: &Strategy,
    b: &Dfa,
) -> Result<(Rat, Rat), SemanticsError> {
    let prod = dfa_product(m, b)?;
    let chain = numeric_chain(&prod.ppa, v, sigma_on_product)?;
    let vals = reach_values(&chain, &prod.bad)?;
    let prefix_closed = Rat::one() - vals[prod.ppa.initial].clone();

    // Non-prefix-closed reading: the restriction must be infinite and never
    // bad. Redirect bad states into a trap, then measure reachability of
    // bottom SCCs that keep taking language-alphabet actions forever.
    let choices = sigma_on_product.memoryless_choices()?;
    let empty = BTreeMap::new();
    let n = prod.ppa.states.len();
    let mut graph: Vec<Vec<usize>> = Vec::with_capacity(n);
    for s in 0..n {
        if prod.bad.contains(&s) {
            graph.push(vec![s]); // absorbing trap
            continue;
        }
        let mut out = BTreeSet::new();
        for (a, mass) in choices.get(&s).unwrap_or(&empty) {
            if mass.is_zero() {
                continue;
            }
            if let Some(d) = prod.ppa.distribution(s, *a) {
                for (t, p) in d.iter() {
                    let x = p.eval(v).map_err(crate::error::ModelError::from)?;
                    if !x.is_zero() {
                        out.insert(t);
                    }
                }
            }
        }
        graph.push(out.into_iter().collect());
    }
    let bottoms = bottom_sccs(n, prod.ppa.initial, |s| graph[s].clone());
    let mut live_targets: BTreeSet<usize> = BTreeSet::new();
    for comp in bottoms {
        if comp.iter().any(|s| prod.bad.contains(s)) {
            continue;
        }
        let active = comp.iter().any(|s| {
            choices.get(s).unwrap_or(&empty).iter().any(|(a, mass)| {
                !mass.is_zero()
                    && b.alphabet
                        .contains(prod.ppa.label(*s, *a).unwrap_or_default())
            })
        });
        if active {
            live_targets.extend(comp);
        }
    }
    // bad absorbing: zero out its outgoing rows before the reach solve
    let mut trap_chain = chain;
    for s in &prod.bad {
        trap_chain.rows[*s].clear();
    }
    let infinite_reading = if live_targets.is_empty() {
        Rat::zero()
    } else {
        reach_values(&trap_chain, &live_targets)?[prod.ppa.initial].clone()
    };
    Ok((prefix_closed, infinite_reading))
}

/// Extremal values with witness strategies (rendered state -> action maps).
#[derive(Clone, Debug)]
pub struct Extremal {
    pub min: Rat,
    pub max: Rat,
    pub argmin: BTreeMap<String, String>,
    pub argmax: BTreeMap<String, String>,
    pub strategies: usize,
}

/// Minimum and maximum safety probability over memoryless deterministic
/// strategies of the product; the partial class is realized by a sink
/// extension of the product. The minimum agrees across both classes for
/// safety objectives.
pub fn extremal_language_prob(
    m: &Ppa,
    v: &Valuation,
    b: &Dfa,
    complete: bool,
) -> Result<Extremal, SemanticsError> {
    let prod = dfa_product(m, b)?;
    let (arena, bad) = if complete {
        (prod.ppa.clone(), prod.bad.clone())
    } else {
        let ext = tau_extend(&prod.ppa);
        (ext.ppa, prod.bad.clone())
    };
    let mut best: Option<Extremal> = None;
    let mut count = 0usize;
    let mut err: Option<SemanticsError> = None;
    for_each_effective_strategy(&arena, &mut |choice| {
        count += 1;
        let sigma = Strategy::memoryless_deterministic(choice);
        let value = (|| -> Result<Rat, SemanticsError> {
            let chain = numeric_chain(&arena, v, &sigma)?;
            let vals = reach_values(&chain, &bad)?;
            Ok(Rat::one() - vals[arena.initial].clone())
        })();
        let value = match value {
            Ok(x) => x,
            Err(e) => {
                err = Some(e);
                return ControlFlow::Break(());
            }
        };
        let rendered: BTreeMap<String, String> = choice
            .iter()
            .map(|(s, a)| (arena.states[*s].clone(), arena.actions[*a].clone()))
            .collect();
        match &mut best {
            None => {
                best = Some(Extremal {
                    min: value.clone(),
                    max: value,
                    argmin: rendered.clone(),
                    argmax: rendered,
                    strategies: 0,
                })
            }
            Some(e) => {
                if value < e.min {
                    e.min = value.clone();
                    e.argmin = rendered.clone();
                }
                if value > e.max {
                    e.max = value;
                    e.argmax = rendered;
                }
            }
        }
        ControlFlow::Continue(())
    });
    if let Some(e) = err {
        return Err(e);
    }
    let mut out = best.ok_or(SemanticsError::NotWellDefined)?;
    out.strategies = count;
    Ok(out)
}
