//! Region satisfaction and assume-guarantee triple checking over the
//! memoryless-deterministic witness class on the query arena.
//!
//! Verdicts are explicitly sample-relative: the report names the grid, the
//! seed and the witness class. The partial class is realized by a sink
//! extension of the arena; the fair class filters complete strategies by
//! the exact bottom-SCC criterion and requires graph-preserving samples.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use crate::algebra::Region;
use crate::automata::Ppa;
use crate::error::SemanticsError;
use crate::objectives::arena::{build_arena, eval_query, Arena, ObjectiveValue};
use crate::objectives::objective::{AgTriple, MoQuery, Objective, ObjectivePayload, StrategyClass};
use crate::report::{Verdict, VerdictRecord, Witness};
use crate::semantics::lift_memoryless_to_product;
use crate::strategies::{for_each_effective_strategy, is_fair_memoryless, Strategy};
use crate::{Rat, Valuation};

/// Iteration order of the two universal quantifiers. The verdict is
/// invariant under the order; only the reported witness may differ.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum LoopOrder {
    #[default]
    StrategiesOuter,
    SamplesOuter,
}

fn render_choice(arena: &Arena, choice: &BTreeMap<usize, usize>) -> String {
    let parts: Vec<String> = choice
        .iter()
        .map(|(s, a)| format!("{}:{}", arena.ppa.states[*s], arena.ppa.actions[*a]))
        .collect();
    parts.join(" ")
}

/// Checks region well-definedness (and reward well-definedness, and
/// graph-preservation for the fair class) at every sample.
fn check_samples(
    m: &Ppa,
    samples: &[Valuation],
    queries: &[&MoQuery],
    class: &StrategyClass,
) -> Result<(), SemanticsError> {
    for v in samples {
        if !m.is_well_defined(v)? {
            return Err(SemanticsError::RegionNotWellDefined(v.to_string()));
        }
        if matches!(class, StrategyClass::Fair(_)) && !m.is_graph_preserving(v)? {
            return Err(SemanticsError::RegionNotGraphPreserving(v.to_string()));
        }
        for q in queries {
            for o in &q.objectives {
                if let ObjectivePayload::Reward(rf) = &o.payload {
                    rf.check_well_defined(v).map_err(|_| {
                        SemanticsError::RegionNotWellDefined(format!(
                            "reward {} negative at {v}",
                            rf.name
                        ))
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn arena_for_class(
    m: &Ppa,
    combined: &MoQuery,
    class: &StrategyClass,
) -> Result<Arena, SemanticsError> {
    if let StrategyClass::Fair(spec) = class {
        spec.validate_against(&m.alphabet)?;
    }
    build_arena(m, combined, matches!(class, StrategyClass::Prt))
}

/// Fair-class filter: fairness of a memoryless strategy only depends on the
/// graph structure, so it is computed once per strategy at a single
/// graph-preserving sample.
fn strategy_admitted(
    arena: &Arena,
    class: &StrategyClass,
    instantiated: &Ppa,
    sigma: &Strategy,
) -> Result<bool, SemanticsError> {
    match class {
        StrategyClass::Cmp | StrategyClass::Prt => Ok(true),
        StrategyClass::Fair(spec) => {
            let _ = arena;
            is_fair_memoryless(instantiated, sigma, spec)
        }
    }
}

struct Sweep<'a> {
    arena: &'a Arena,
    samples: &'a [Valuation],
    class: &'a StrategyClass,
    /// instantiation of the arena at the first sample, for fairness checks
    first_instance: Ppa,
}

impl<'a> Sweep<'a> {
    fn new(
        arena: &'a Arena,
        samples: &'a [Valuation],
        class: &'a StrategyClass,
    ) -> Result<Self, SemanticsError> {
        let first_instance = arena.ppa.instantiate(&samples[0])?;
        Ok(Sweep { arena, samples, class, first_instance })
    }

    /// Runs `visit(choice, strategy, sample index)` over the quantifier
    /// grid in the requested order; `visit` returns `Break` to stop early
    /// (witness found).
    fn run(
        &self,
        order: LoopOrder,
        strategies: &mut usize,
        visit: &mut dyn FnMut(
            &BTreeMap<usize, usize>,
            &Strategy,
            usize,
        ) -> Result<ControlFlow<()>, SemanticsError>,
    ) -> Result<(), SemanticsError> {
        let mut err: Option<SemanticsError> = None;
        let mut stopped = false;
        match order {
            LoopOrder::StrategiesOuter => {
                for_each_effective_strategy(&self.arena.ppa, &mut |choice| {
                    let sigma = Strategy::memoryless_deterministic(choice);
                    match strategy_admitted(self.arena, self.class, &self.first_instance, &sigma)
                    {
                        Ok(false) => return ControlFlow::Continue(()),
                        Err(e) => {
                            err = Some(e);
                            return ControlFlow::Break(());
                        }
                        Ok(true) => {}
                    }
                    *strategies += 1;
                    for k in 0..self.samples.len() {
                        match visit(choice, &sigma, k) {
                            Ok(ControlFlow::Continue(())) => {}
                            Ok(ControlFlow::Break(())) => return ControlFlow::Break(()),
                            Err(e) => {
                                err = Some(e);
                                return ControlFlow::Break(());
                            }
                        }
                    }
                    ControlFlow::Continue(())
                });
            }
            LoopOrder::SamplesOuter => {
                for k in 0..self.samples.len() {
                    for_each_effective_strategy(&self.arena.ppa, &mut |choice| {
                        let sigma = Strategy::memoryless_deterministic(choice);
                        match strategy_admitted(
                            self.arena,
                            self.class,
                            &self.first_instance,
                            &sigma,
                        ) {
                            Ok(false) => return ControlFlow::Continue(()),
                            Err(e) => {
                                err = Some(e);
                                return ControlFlow::Break(());
                            }
                            Ok(true) => {}
                        }
                        if k == 0 {
                            *strategies += 1;
                        }
                        match visit(choice, &sigma, k) {
                            Ok(ControlFlow::Continue(())) => ControlFlow::Continue(()),
                            Ok(ControlFlow::Break(())) => {
                                stopped = true;
                                ControlFlow::Break(())
                            }
                            Err(e) => {
                                err = Some(e);
                                ControlFlow::Break(())
                            }
                        }
                    });
                    if err.is_some() || stopped {
                        break;
                    }
                }
            }
        }
        match err {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }
}

/// Records min/max per objective across the sweep.
struct Extremes {
    per_objective: Vec<Option<(Rat, Rat)>>,
}

impl Extremes {
    fn new(n: usize) -> Self {
        Extremes { per_objective: vec![None; n] }
    }

    fn note(&mut self, j: usize, value: &ObjectiveValue) {
        if let ObjectiveValue::Probability(x)
        | ObjectiveValue::Reward(crate::semantics::RewardValue::Finite(x)) = value
        {
            match &mut self.per_objective[j] {
                None => self.per_objective[j] = Some((x.clone(), x.clone())),
                Some((lo, hi)) => {
                    if x < lo {
                        *lo = x.clone();
                    }
                    if x > hi {
                        *hi = x.clone();
                    }
                }
            }
        }
    }

    fn lines(&self, prefix: &str) -> Vec<(String, String)> {
        self.per_objective
            .iter()
            .enumerate()
            .filter_map(|(j, e)| {
                e.as_ref().map(|(lo, hi)| {
                    (format!("{prefix}objective-{j}"), format!("min {lo} max {hi}"))
                })
            })
            .collect()
    }
}

/// Universal satisfaction of a mo-query over the sampled region and the
/// witness class.
#[allow(clippy::too_many_arguments)]
pub fn region_sat(
    m: &Ppa,
    region: &Region,
    class: &StrategyClass,
    query: &MoQuery,
    grid: u32,
    seed: u64,
    order: LoopOrder,
) -> Result<VerdictRecord, SemanticsError> {
    let samples = region.sample(grid, seed);
    check_samples(m, &samples, &[query], class)?;
    let arena = arena_for_class(m, query, class)?;
    let mut strategies = 0usize;
    let mut extremes = Extremes::new(query.objectives.len());
    let mut witness: Option<Witness> = None;

    if !query.is_empty() && !samples.is_empty() {
        let sweep = Sweep::new(&arena, &samples, class)?;
        sweep.run(order, &mut strategies, &mut |choice, sigma, k| {
            let v = &samples[k];
            let values = eval_query(&arena, query, v, sigma)?;
            for (j, (value, o)) in values.iter().zip(&query.objectives).enumerate() {
                extremes.note(j, value);
                if !value.satisfies(o) {
                    witness = Some(Witness {
                        sample: v.to_string(),
                        strategy: render_choice(&arena, choice),
                        detail: format!("objective {j} ({o}) has value {value}"),
                    });
                    return Ok(ControlFlow::Break(()));
                }
            }
            Ok(ControlFlow::Continue(()))
        })?;
    }

    Ok(VerdictRecord {
        kind: "region-sat",
        verdict: if witness.is_some() { Verdict::Violated } else { Verdict::HoldsOnSamples },
        vacuous: query.is_empty(),
        model: m.name.clone(),
        region: region.to_string(),
        class: class.to_string(),
        query: query.to_string(),
        grid,
        seed,
        samples: samples.len(),
        strategies,
        extra: extremes.lines(""),
        witness,
    })
}

/// Checks a single objective at one valuation under a memoryless strategy
/// on the model (lifted over the monitor product internally).
pub fn check_objective(
    m: &Ppa,
    v: &Valuation,
    sigma: &Strategy,
    o: &Objective,
) -> Result<(bool, ObjectiveValue), SemanticsError> {
    if !m.is_well_defined(v)? {
        return Err(SemanticsError::NotWellDefined);
    }
    let query = MoQuery::single(o.clone());
    let arena = build_arena(m, &query, false)?;
    // lift the memoryless strategy over the monitor component
    let lifted = {
        let prodlike = crate::automata::Product {
            ppa: arena.ppa.clone(),
            state_pairs: arena
                .base_state
                .iter()
                .map(|b| (b.unwrap_or(usize::MAX), 0))
                .collect(),
            bad: Default::default(),
        };
        lift_memoryless_to_product(sigma, &prodlike)?
    };
    let values = eval_query(&arena, &query, v, &lifted)?;
    let value = values.into_iter().next().expect("single objective");
    Ok((value.satisfies(o), value))
}

/// Assume-guarantee triple check: on every sample, every admitted strategy
/// satisfying the assumption must satisfy the guarantee.
#[allow(clippy::too_many_arguments)]
pub fn check_ag_triple(
    triple: &AgTriple,
    grid: u32,
    seed: u64,
    order: LoopOrder,
) -> Result<VerdictRecord, SemanticsError> {
    let m = &triple.model;
    let samples = triple.region.sample(grid, seed);
    check_samples(
        m,
        &samples,
        &[&triple.assumption, &triple.guarantee],
        &triple.class,
    )?;
    let combined = triple.assumption.and(&triple.guarantee);
    let arena = arena_for_class(m, &combined, &triple.class)?;
    let na = triple.assumption.objectives.len();

    let mut strategies = 0usize;
    let mut assumption_ever = false;
    let mut extremes = Extremes::new(combined.objectives.len());
    let mut witness: Option<Witness> = None;

    if !samples.is_empty() {
        let sweep = Sweep::new(&arena, &samples, &triple.class)?;
        sweep.run(order, &mut strategies, &mut |choice, sigma, k| {
            let v = &samples[k];
            let values = eval_query(&arena, &combined, v, sigma)?;
            for (j, value) in values.iter().enumerate() {
                extremes.note(j, value);
            }
            let a_ok = values[..na]
                .iter()
                .zip(&triple.assumption.objectives)
                .all(|(x, o)| x.satisfies(o));
            if !a_ok {
                return Ok(ControlFlow::Continue(()));
            }
            assumption_ever = true;
            for (j, (value, o)) in values[na..]
                .iter()
                .zip(&triple.guarantee.objectives)
                .enumerate()
            {
                if !value.satisfies(o) {
                    witness = Some(Witness {
                        sample: v.to_string(),
                        strategy: render_choice(&arena, choice),
                        detail: format!(
                            "assumption holds but guarantee objective {j} ({o}) has value {value}"
                        ),
                    });
                    return Ok(ControlFlow::Break(()));
                }
            }
            Ok(ControlFlow::Continue(()))
        })?;
    }

    Ok(VerdictRecord {
        kind: "ag-triple",
        verdict: if witness.is_some() { Verdict::Violated } else { Verdict::HoldsOnSamples },
        vacuous: !assumption_ever,
        model: m.name.clone(),
        region: triple.region.to_string(),
        class: triple.class.to_string(),
        query: format!("<{}> => <{}>", triple.assumption, triple.guarantee),
        grid,
        seed,
        samples: samples.len(),
        strategies,
        extra: extremes.lines(""),
        witness,
    })
}
