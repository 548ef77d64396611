//! The seven proof rules. Each application validates the rule's alphabet
//! side conditions, checks the premises as region satisfactions or triples
//! over the configured witness class, and emits a certificate whose
//! conclusion can be re-verified monolithically.

use std::collections::BTreeSet;

use crate::algebra::Region;
use crate::automata::{alphabet_extend, parallel_compose, Dfa, Ppa};
use crate::error::SemanticsError;
use crate::objectives::{
    check_ag_triple, region_sat, AgTriple, Cmp, LoopOrder, MoQuery, Objective,
    ObjectivePayload, StrategyClass,
};
use crate::semantics::RewardFunction;
use crate::strategies::FairnessSpec;
use crate::Rat;

use super::certificate::{Certificate, Conclusion, Premise, SideCondition};
use super::monotone::{check_monotone, Direction, MonotoneTarget};

/// Safety-variant rules check safe mo-queries with complete/partial
/// classes; fair-variant rules take per-premise fairness specs and conclude
/// over the union spec.
#[derive(Clone, Debug)]
pub enum RuleVariant {
    Safety,
    Fair(Vec<FairnessSpec>),
}

impl RuleVariant {
    fn spec(&self, i: usize) -> FairnessSpec {
        match self {
            RuleVariant::Safety => FairnessSpec::empty(),
            RuleVariant::Fair(specs) => specs.get(i).cloned().unwrap_or_default(),
        }
    }

    /// Class for a `models-satisfy` premise: cmp for safety, fair otherwise.
    fn sat_class(&self, i: usize) -> StrategyClass {
        match self {
            RuleVariant::Safety => StrategyClass::Cmp,
            RuleVariant::Fair(_) => normalize_fair(self.spec(i)),
        }
    }

    /// Class for a triple premise: prt for safety, fair otherwise.
    fn triple_class(&self, i: usize) -> StrategyClass {
        match self {
            RuleVariant::Safety => StrategyClass::Prt,
            RuleVariant::Fair(_) => normalize_fair(self.spec(i)),
        }
    }

    fn conclusion_class_sat(&self, upto: usize) -> StrategyClass {
        match self {
            RuleVariant::Safety => StrategyClass::Cmp,
            RuleVariant::Fair(_) => normalize_fair(self.union_spec(upto)),
        }
    }

    fn conclusion_class_triple(&self, upto: usize) -> StrategyClass {
        match self {
            RuleVariant::Safety => StrategyClass::Prt,
            RuleVariant::Fair(_) => normalize_fair(self.union_spec(upto)),
        }
    }

    fn union_spec(&self, upto: usize) -> FairnessSpec {
        let mut acc = FairnessSpec::empty();
        for i in 0..upto {
            acc = acc.union(&self.spec(i));
        }
        acc
    }
}

/// An empty fairness spec imposes no constraint: treat it as the complete
/// class so no graph-preservation requirement sneaks in.
fn normalize_fair(spec: FairnessSpec) -> StrategyClass {
    if spec.is_empty() {
        StrategyClass::Cmp
    } else {
        StrategyClass::Fair(spec)
    }
}

fn require_safe(name: &str, q: &MoQuery) -> Result<(), SemanticsError> {
    if !q.is_safe() {
        return Err(SemanticsError::RuleMisuse(format!(
            "{name} must be a safe mo-query (lower-bounded safety objectives) in the safety variant"
        )));
    }
    Ok(())
}

fn subset_condition(
    name: &str,
    small: &BTreeSet<String>,
    big: &BTreeSet<String>,
) -> Result<SideCondition, SemanticsError> {
    let missing: Vec<String> = small.difference(big).cloned().collect();
    if missing.is_empty() {
        Ok(SideCondition {
            name: name.to_string(),
            detail: format!(
                "{{{}}} within {{{}}}",
                small.iter().cloned().collect::<Vec<_>>().join(","),
                big.iter().cloned().collect::<Vec<_>>().join(",")
            ),
        })
    } else {
        Err(SemanticsError::AlphabetSideConditionViolated(format!(
            "{name}: symbols {{{}}} escape the required alphabet",
            missing.join(",")
        )))
    }
}

fn intersect_all(regions: &[&Region]) -> Option<Region> {
    let mut acc = regions[0].clone();
    for r in &regions[1..] {
        acc = acc.intersect(r)?;
    }
    Some(acc)
}

fn extend_by(m: &Ppa, alphabet: &BTreeSet<String>) -> Result<Ppa, SemanticsError> {
    Ok(alphabet_extend(m, alphabet)?)
}

/// Asymmetric rule: from `M1 |= A` and `<A> M2^ext <G>` conclude
/// `M1 || M2 |= G` on the intersected region.
#[allow(clippy::too_many_arguments)]
pub fn apply_asymmetric(
    m1: &Ppa,
    m2: &Ppa,
    r1: &Region,
    r2: &Region,
    assumption: &MoQuery,
    guarantee: &MoQuery,
    variant: &RuleVariant,
    grid: u32,
    seed: u64,
) -> Result<Certificate, SemanticsError> {
    let a_alpha = assumption.alphabet();
    let g_alpha = guarantee.alphabet();
    let mut side_conditions = Vec::new();
    side_conditions.push(subset_condition(
        "assumption-alphabet-in-m1",
        &a_alpha,
        &m1.alphabet,
    )?);
    let mut a2_union = m2.alphabet.clone();
    a2_union.extend(a_alpha.iter().cloned());
    side_conditions.push(subset_condition(
        "guarantee-alphabet-in-m2-plus-assumption",
        &g_alpha,
        &a2_union,
    )?);
    if matches!(variant, RuleVariant::Safety) {
        require_safe("assumption", assumption)?;
        require_safe("guarantee", guarantee)?;
    }
    if let RuleVariant::Fair(_) = variant {
        // fairness-spec membership side conditions
        variant.spec(0).validate_against(&m1.alphabet)?;
        variant.spec(1).validate_against(&a2_union)?;
    }

    let m2ext = extend_by(m2, &a_alpha)?;
    let premise1 = Premise {
        description: format!("{} , {} |= {}", m1.name, r1, assumption),
        record: region_sat(
            m1,
            r1,
            &variant.sat_class(0),
            assumption,
            grid,
            seed,
            LoopOrder::StrategiesOuter,
        )?,
    };
    let premise2 = Premise {
        description: format!("<{}> {} , {} <{}>", assumption, m2ext.name, r2, guarantee),
        record: check_ag_triple(
            &AgTriple {
                model: m2ext,
                region: r2.clone(),
                class: variant.triple_class(1),
                assumption: assumption.clone(),
                guarantee: guarantee.clone(),
            },
            grid,
            seed,
            LoopOrder::StrategiesOuter,
        )?,
    };

    let composed = parallel_compose(m1, m2)?;
    let conclusion = Conclusion::RegionSat {
        model: composed.ppa,
        region: intersect_all(&[r1, r2]),
        class: variant.conclusion_class_sat(2),
        query: guarantee.clone(),
    };
    let premises = vec![premise1, premise2];
    let status = Certificate::status_from(&premises, &conclusion);
    Ok(Certificate {
        rule: "asym",
        status,
        side_conditions,
        premises,
        conclusion,
        grid,
        seed,
    })
}

/// Asymmetric rule for `n` components: a left fold of the two-component
/// rule through the assumption chain.
#[allow(clippy::too_many_arguments)]
pub fn apply_asymmetric_n(
    models: &[&Ppa],
    regions: &[&Region],
    assumptions: &[&MoQuery],
    guarantee: &MoQuery,
    variant: &RuleVariant,
    grid: u32,
    seed: u64,
) -> Result<Certificate, SemanticsError> {
    let n = models.len();
    if n < 2 || regions.len() != n || assumptions.len() != n - 1 {
        return Err(SemanticsError::RuleMisuse(format!(
            "asymmetric-n needs n >= 2 models, n regions, n-1 assumptions (got {n} models, {} regions, {} assumptions)",
            regions.len(),
            assumptions.len()
        )));
    }
    if matches!(variant, RuleVariant::Safety) {
        for (i, a) in assumptions.iter().enumerate() {
            require_safe(&format!("assumption {}", i + 1), a)?;
        }
        require_safe("guarantee", guarantee)?;
    }

    let mut side_conditions = Vec::new();
    side_conditions.push(subset_condition(
        "assumption-1-alphabet-in-m1",
        &assumptions[0].alphabet(),
        &models[0].alphabet,
    )?);
    for i in 1..n {
        let next: &MoQuery = if i < n - 1 { assumptions[i] } else { guarantee };
        let mut avail = models[i].alphabet.clone();
        avail.extend(assumptions[i - 1].alphabet());
        side_conditions.push(subset_condition(
            &format!("step-{}-alphabet", i + 1),
            &next.alphabet(),
            &avail,
        )?);
        if let RuleVariant::Fair(_) = variant {
            variant.spec(i).validate_against(&avail)?;
        }
    }
    if let RuleVariant::Fair(_) = variant {
        variant.spec(0).validate_against(&models[0].alphabet)?;
    }

    let mut premises = Vec::new();
    premises.push(Premise {
        description: format!("{} , {} |= {}", models[0].name, regions[0], assumptions[0]),
        record: region_sat(
            models[0],
            regions[0],
            &variant.sat_class(0),
            assumptions[0],
            grid,
            seed,
            LoopOrder::StrategiesOuter,
        )?,
    });
    for i in 1..n {
        let assume = assumptions[i - 1];
        let conclude: &MoQuery = if i < n - 1 { assumptions[i] } else { guarantee };
        let ext = extend_by(models[i], &assume.alphabet())?;
        premises.push(Premise {
            description: format!(
                "<{}> {} , {} <{}>",
                assume, ext.name, regions[i], conclude
            ),
            record: check_ag_triple(
                &AgTriple {
                    model: ext,
                    region: regions[i].clone(),
                    class: variant.triple_class(i),
                    assumption: assume.clone(),
                    guarantee: conclude.clone(),
                },
                grid,
                seed,
                LoopOrder::StrategiesOuter,
            )?,
        });
    }

    let mut composed = models[0].clone();
    for m in &models[1..] {
        composed = parallel_compose(&composed, m)?.ppa;
    }
    let conclusion = Conclusion::RegionSat {
        model: composed,
        region: intersect_all(regions),
        class: variant.conclusion_class_sat(n),
        query: guarantee.clone(),
    };
    let status = Certificate::status_from(&premises, &conclusion);
    Ok(Certificate {
        rule: "asym-n",
        status,
        side_conditions,
        premises,
        conclusion,
        grid,
        seed,
    })
}

/// Circular rule: premises `<A1> M1^ext <A2>`, `<A2> M2^ext <G>`, and
/// `M2 |= A1`; conclusion `M1 || M2 |= G`.
#[allow(clippy::too_many_arguments)]
pub fn apply_circular(
    m1: &Ppa,
    m2: &Ppa,
    r1: &Region,
    r2: &Region,
    r3: &Region,
    a1: &MoQuery,
    a2: &MoQuery,
    guarantee: &MoQuery,
    variant: &RuleVariant,
    grid: u32,
    seed: u64,
) -> Result<Certificate, SemanticsError> {
    let mut side_conditions = Vec::new();
    side_conditions.push(subset_condition(
        "a1-alphabet-in-m2",
        &a1.alphabet(),
        &m2.alphabet,
    )?);
    let mut avail1 = m1.alphabet.clone();
    avail1.extend(a1.alphabet());
    side_conditions.push(subset_condition("a2-alphabet-in-m1-plus-a1", &a2.alphabet(), &avail1)?);
    let mut avail2 = m2.alphabet.clone();
    avail2.extend(a2.alphabet());
    side_conditions.push(subset_condition(
        "guarantee-alphabet-in-m2-plus-a2",
        &guarantee.alphabet(),
        &avail2,
    )?);
    if matches!(variant, RuleVariant::Safety) {
        require_safe("a1", a1)?;
        require_safe("a2", a2)?;
        require_safe("guarantee", guarantee)?;
    }
    if let RuleVariant::Fair(_) = variant {
        variant.spec(0).validate_against(&avail1)?;
        variant.spec(1).validate_against(&avail2)?;
        variant.spec(2).validate_against(&m2.alphabet)?;
    }

    let m1ext = extend_by(m1, &a1.alphabet())?;
    let m2ext = extend_by(m2, &a2.alphabet())?;
    let premises = vec![
        Premise {
            description: format!("<{}> {} , {} <{}>", a1, m1ext.name, r1, a2),
            record: check_ag_triple(
                &AgTriple {
                    model: m1ext,
                    region: r1.clone(),
                    class: variant.triple_class(0),
                    assumption: a1.clone(),
                    guarantee: a2.clone(),
                },
                grid,
                seed,
                LoopOrder::StrategiesOuter,
            )?,
        },
        Premise {
            description: format!("<{}> {} , {} <{}>", a2, m2ext.name, r2, guarantee),
            record: check_ag_triple(
                &AgTriple {
                    model: m2ext,
                    region: r2.clone(),
                    class: variant.triple_class(1),
                    assumption: a2.clone(),
                    guarantee: guarantee.clone(),
                },
                grid,
                seed,
                LoopOrder::StrategiesOuter,
            )?,
        },
        Premise {
            description: format!("{} , {} |= {}", m2.name, r3, a1),
            record: region_sat(
                m2,
                r3,
                &variant.sat_class(2),
                a1,
                grid,
                seed,
                LoopOrder::StrategiesOuter,
            )?,
        },
    ];

    let composed = parallel_compose(m1, m2)?;
    let conclusion = Conclusion::RegionSat {
        model: composed.ppa,
        region: intersect_all(&[r1, r2, r3]),
        class: variant.conclusion_class_sat(3),
        query: guarantee.clone(),
    };
    let status = Certificate::status_from(&premises, &conclusion);
    Ok(Certificate {
        rule: "circ",
        status,
        side_conditions,
        premises,
        conclusion,
        grid,
        seed,
    })
}

/// Conjunction rule on a single model: two triples combine into one with
/// conjoined assumptions and guarantees on the intersected region.
#[allow(clippy::too_many_arguments)]
pub fn apply_conjunction(
    m: &Ppa,
    r1: &Region,
    r2: &Region,
    a1: &MoQuery,
    g1: &MoQuery,
    a2: &MoQuery,
    g2: &MoQuery,
    variant: &RuleVariant,
    grid: u32,
    seed: u64,
) -> Result<Certificate, SemanticsError> {
    if matches!(variant, RuleVariant::Safety) {
        for (n, q) in [("a1", a1), ("g1", g1), ("a2", a2), ("g2", g2)] {
            require_safe(n, q)?;
        }
    }
    let mut side_conditions = Vec::new();
    for (i, (a, g)) in [(a1, g1), (a2, g2)].into_iter().enumerate() {
        let mut avail = m.alphabet.clone();
        avail.extend(a.alphabet());
        side_conditions.push(subset_condition(
            &format!("g{}-alphabet-in-m-plus-a{}", i + 1, i + 1),
            &g.alphabet(),
            &avail,
        )?);
        if let RuleVariant::Fair(_) = variant {
            variant.spec(i).validate_against(&avail)?;
        }
    }

    let mut premises = Vec::new();
    for (i, (r, a, g)) in [(r1, a1, g1), (r2, a2, g2)].into_iter().enumerate() {
        let ext = extend_by(m, &a.alphabet())?;
        premises.push(Premise {
            description: format!("<{}> {} , {} <{}>", a, ext.name, r, g),
            record: check_ag_triple(
                &AgTriple {
                    model: ext,
                    region: r.clone(),
                    class: variant.triple_class(i),
                    assumption: a.clone(),
                    guarantee: g.clone(),
                },
                grid,
                seed,
                LoopOrder::StrategiesOuter,
            )?,
        });
    }

    let a_and = a1.and(a2);
    let g_and = g1.and(g2);
    let ext = extend_by(m, &a_and.alphabet())?;
    let conclusion = Conclusion::Triple {
        model: ext,
        region: intersect_all(&[r1, r2]),
        class: variant.conclusion_class_triple(2),
        assumption: a_and,
        guarantee: g_and,
    };
    let status = Certificate::status_from(&premises, &conclusion);
    Ok(Certificate {
        rule: "conj",
        status,
        side_conditions,
        premises,
        conclusion,
        grid,
        seed,
    })
}

/// Interleaving rule for fully non-synchronizing components: component
/// bounds `p1`, `p2` on safety languages combine into the bound
/// `p1 + p2 - p1*p2` on the union language.
#[allow(clippy::too_many_arguments)]
pub fn apply_interleaving(
    m1: &Ppa,
    m2: &Ppa,
    r1: &Region,
    r2: &Region,
    a1: &MoQuery,
    a2: &MoQuery,
    l1: &Dfa,
    p1: &Rat,
    l2: &Dfa,
    p2: &Rat,
    cmp: Cmp,
    variant: &RuleVariant,
    grid: u32,
    seed: u64,
) -> Result<Certificate, SemanticsError> {
    let mut side1 = m1.alphabet.clone();
    side1.extend(a1.alphabet());
    let mut side2 = m2.alphabet.clone();
    side2.extend(a2.alphabet());
    let overlap: Vec<String> = side1.intersection(&side2).cloned().collect();
    if !overlap.is_empty() {
        return Err(SemanticsError::ComponentsNotDisjoint(overlap.join(",")));
    }
    let mut side_conditions = vec![SideCondition {
        name: "components-disjoint".to_string(),
        detail: "no shared symbols between m1+a1 and m2+a2".to_string(),
    }];
    side_conditions.push(subset_condition("l1-alphabet", &l1.alphabet, &side1)?);
    side_conditions.push(subset_condition("l2-alphabet", &l2.alphabet, &side2)?);
    if matches!(variant, RuleVariant::Safety) {
        require_safe("a1", a1)?;
        require_safe("a2", a2)?;
        if !matches!(cmp, Cmp::Ge) {
            return Err(SemanticsError::RuleMisuse(
                "safety variant requires a lower-bound comparison".to_string(),
            ));
        }
    }
    if let RuleVariant::Fair(_) = variant {
        variant.spec(0).validate_against(&side1)?;
        variant.spec(1).validate_against(&side2)?;
    }

    let g1 = MoQuery::single(Objective {
        payload: ObjectivePayload::Safety(l1.clone()),
        cmp,
        threshold: p1.clone(),
        source: l1.name.clone(),
    });
    let g2 = MoQuery::single(Objective {
        payload: ObjectivePayload::Safety(l2.clone()),
        cmp,
        threshold: p2.clone(),
        source: l2.name.clone(),
    });

    let mut premises = Vec::new();
    for (i, (m, r, a, g)) in [(m1, r1, a1, &g1), (m2, r2, a2, &g2)].into_iter().enumerate() {
        let ext = extend_by(m, &a.alphabet())?;
        premises.push(Premise {
            description: format!("<{}> {} , {} <{}>", a, ext.name, r, g),
            record: check_ag_triple(
                &AgTriple {
                    model: ext,
                    region: r.clone(),
                    class: variant.triple_class(i),
                    assumption: a.clone(),
                    guarantee: (*g).clone(),
                },
                grid,
                seed,
                LoopOrder::StrategiesOuter,
            )?,
        });
    }

    // union of the two safety languages: bad iff bad for both monitors
    let union = l1.product(l2, true);
    let threshold = p1.clone() + p2.clone() - p1.clone() * p2.clone();
    let a_and = a1.and(a2);
    let composed = parallel_compose(m1, m2)?;
    let ext = extend_by(&composed.ppa, &a_and.alphabet())?;
    let conclusion = Conclusion::Triple {
        model: ext,
        region: intersect_all(&[r1, r2]),
        class: variant.conclusion_class_triple(2),
        assumption: a_and,
        guarantee: MoQuery::single(Objective {
            payload: ObjectivePayload::Safety(union.clone()),
            cmp,
            threshold,
            source: union.name.clone(),
        }),
    };
    let status = Certificate::status_from(&premises, &conclusion);
    Ok(Certificate {
        rule: "inter",
        status,
        side_conditions,
        premises,
        conclusion,
        grid,
        seed,
    })
}

/// Reward-sum rule: expected-total-reward bounds on the components add up
/// on the composition with the pointwise reward sum.
#[allow(clippy::too_many_arguments)]
pub fn apply_reward_sum(
    m1: &Ppa,
    m2: &Ppa,
    r1: &Region,
    r2: &Region,
    a1: &MoQuery,
    a2: &MoQuery,
    rf1: &RewardFunction,
    t1: &Rat,
    rf2: &RewardFunction,
    t2: &Rat,
    cmp: Cmp,
    specs: &[FairnessSpec],
    grid: u32,
    seed: u64,
) -> Result<Certificate, SemanticsError> {
    let mut side_conditions = Vec::new();
    let mut side1 = m1.alphabet.clone();
    side1.extend(a1.alphabet());
    let mut side2 = m2.alphabet.clone();
    side2.extend(a2.alphabet());
    side_conditions.push(subset_condition("rf1-alphabet", &rf1.alphabet, &side1)?);
    side_conditions.push(subset_condition("rf2-alphabet", &rf2.alphabet, &side2)?);
    let variant = RuleVariant::Fair(specs.to_vec());
    if let RuleVariant::Fair(_) = &variant {
        variant.spec(0).validate_against(&side1)?;
        variant.spec(1).validate_against(&side2)?;
    }

    let g1 = MoQuery::single(Objective {
        payload: ObjectivePayload::Reward(rf1.clone()),
        cmp,
        threshold: t1.clone(),
        source: rf1.name.clone(),
    });
    let g2 = MoQuery::single(Objective {
        payload: ObjectivePayload::Reward(rf2.clone()),
        cmp,
        threshold: t2.clone(),
        source: rf2.name.clone(),
    });

    let mut premises = Vec::new();
    for (i, (m, r, a, g)) in [(m1, r1, a1, &g1), (m2, r2, a2, &g2)].into_iter().enumerate() {
        let ext = extend_by(m, &a.alphabet())?;
        premises.push(Premise {
            description: format!("<{}> {} , {} <{}>", a, ext.name, r, g),
            record: check_ag_triple(
                &AgTriple {
                    model: ext,
                    region: r.clone(),
                    class: variant.triple_class(i),
                    assumption: a.clone(),
                    guarantee: (*g).clone(),
                },
                grid,
                seed,
                LoopOrder::StrategiesOuter,
            )?,
        });
    }

    let sum = rf1.sum(rf2);
    let a_and = a1.and(a2);
    let composed = parallel_compose(m1, m2)?;
    let ext = extend_by(&composed.ppa, &a_and.alphabet())?;
    let conclusion = Conclusion::Triple {
        model: ext,
        region: intersect_all(&[r1, r2]),
        class: variant.conclusion_class_triple(2),
        assumption: a_and,
        guarantee: MoQuery::single(Objective {
            payload: ObjectivePayload::Reward(sum.clone()),
            cmp,
            threshold: t1.clone() + t2.clone(),
            source: sum.name.clone(),
        }),
    };
    let status = Certificate::status_from(&premises, &conclusion);
    Ok(Certificate {
        rule: "rewsum",
        status,
        side_conditions,
        premises,
        conclusion,
        grid,
        seed,
    })
}

/// Monotonicity rule: if every witness strategy of each alphabet-extended
/// component has a solution function monotone in `param`, the composition
/// is monotone in `param` on the intersected region.
#[allow(clippy::too_many_arguments)]
pub fn apply_monotonicity(
    m1: &Ppa,
    m2: &Ppa,
    r1: &Region,
    r2: &Region,
    param: &str,
    direction: Direction,
    target: &MonotoneTarget,
    variant: &RuleVariant,
    grid: u32,
    seed: u64,
) -> Result<Certificate, SemanticsError> {
    let mut union_alpha = m1.alphabet.clone();
    union_alpha.extend(m2.alphabet.iter().cloned());
    let side_conditions = vec![subset_condition(
        "target-alphabet-in-composition",
        target.alphabet(),
        &union_alpha,
    )?];
    // graph-preserving regions, sampled zero-pattern check
    for (m, r) in [(m1, r1), (m2, r2)] {
        for v in r.sample(grid, seed) {
            if !m.is_graph_preserving(&v)? {
                return Err(SemanticsError::RegionNotGraphPreserving(v.to_string()));
            }
        }
    }

    let class_of = |i: usize| match variant {
        RuleVariant::Safety => StrategyClass::Prt,
        RuleVariant::Fair(_) => normalize_fair(variant.spec(i)),
    };
    let mut premises = Vec::new();
    for (i, (m, r)) in [(m1, r1), (m2, r2)].into_iter().enumerate() {
        let ext = extend_by(m, target.alphabet())?;
        premises.push(Premise {
            description: format!(
                "{} monotone {} in {} on {} for {}",
                ext.name, direction, param, r, target
            ),
            record: check_monotone(&ext, r, param, direction, &class_of(i), target, grid, seed)?,
        });
    }

    let composed = parallel_compose(m1, m2)?;
    let conclusion = Conclusion::Monotone {
        model: composed.ppa,
        region: intersect_all(&[r1, r2]),
        class: match variant {
            RuleVariant::Safety => StrategyClass::Prt,
            RuleVariant::Fair(_) => normalize_fair(variant.union_spec(2)),
        },
        param: param.to_string(),
        direction,
        target: target.clone(),
    };
    let status = Certificate::status_from(&premises, &conclusion);
    Ok(Certificate {
        rule: "mono",
        status,
        side_conditions,
        premises,
        conclusion,
        grid,
        seed,
    })
}
