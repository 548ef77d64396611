//! Fairness of memoryless strategies via bottom-SCC analysis of the
//! induced chain. Almost-sure repeated reachability in finite chains only
//! depends on the graph structure, so the check is exact.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use crate::automata::Ppa;
use crate::error::{SemanticsError, StrategyError};
use crate::strategies::strategy::Strategy;

/// A set of label classes; a fair strategy hits every class infinitely
/// often almost surely.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FairnessSpec {
    pub classes: Vec<BTreeSet<String>>,
}

impl FairnessSpec {
    pub fn empty() -> Self {
        FairnessSpec::default()
    }

    pub fn new(classes: Vec<BTreeSet<String>>) -> Self {
        FairnessSpec { classes }
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Every class must be nonempty and inside the given alphabet.
    pub fn validate_against(&self, alphabet: &BTreeSet<String>) -> Result<(), SemanticsError> {
        for c in &self.classes {
            if c.is_empty() {
                return Err(SemanticsError::AlphabetSideConditionViolated(
                    "empty fairness class".to_string(),
                ));
            }
            for sym in c {
                if !alphabet.contains(sym) {
                    return Err(SemanticsError::AlphabetSideConditionViolated(format!(
                        "fairness class symbol `{sym}` outside the alphabet"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Union of two specs (set union of the class collections).
    pub fn union(&self, other: &FairnessSpec) -> FairnessSpec {
        let mut classes = self.classes.clone();
        for c in &other.classes {
            if !classes.contains(c) {
                classes.push(c.clone());
            }
        }
        FairnessSpec { classes }
    }

    /// Grammar: `;`-separated groups of `,`-separated symbols.
    pub fn parse(s: &str) -> Option<FairnessSpec> {
        let mut classes = Vec::new();
        for group in s.split(';') {
            let group = group.trim();
            if group.is_empty() {
                continue;
            }
            let cls: BTreeSet<String> = group
                .split(',')
                .map(|x| x.trim().to_string())
                .filter(|x| !x.is_empty())
                .collect();
            if cls.is_empty() {
                return None;
            }
            classes.push(cls);
        }
        Some(FairnessSpec { classes })
    }
}

impl fmt::Display for FairnessSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let groups: Vec<String> = self
            .classes
            .iter()
            .map(|c| c.iter().cloned().collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", groups.join(";"))
    }
}

/// Bottom SCCs of a graph given by a successor function, restricted to the
/// part reachable from `root`. Deterministic output order.
pub fn bottom_sccs(
    n_states: usize,
    root: usize,
    succs: impl Fn(usize) -> Vec<usize>,
) -> Vec<Vec<usize>> {
    // reachable restriction
    let mut reach = vec![false; n_states];
    let mut stack = vec![root];
    while let Some(s) = stack.pop() {
        if reach[s] {
            continue;
        }
        reach[s] = true;
        for t in succs(s) {
            if !reach[t] {
                stack.push(t);
            }
        }
    }

    // iterative Tarjan
    let mut index = vec![usize::MAX; n_states];
    let mut low = vec![0usize; n_states];
    let mut on_stack = vec![false; n_states];
    let mut tarjan_stack: Vec<usize> = Vec::new();
    let mut sccs: Vec<Vec<usize>> = Vec::new();
    let mut counter = 0usize;

    #[allow(clippy::type_complexity)]
    let mut call: Vec<(usize, Vec<usize>, usize)> = Vec::new();
    for start in 0..n_states {
        if !reach[start] || index[start] != usize::MAX {
            continue;
        }
        call.push((start, succs(start), 0));
        index[start] = counter;
        low[start] = counter;
        counter += 1;
        tarjan_stack.push(start);
        on_stack[start] = true;
        while let Some((v, vs, mut k)) = call.pop() {
            let mut recursed = false;
            while k < vs.len() {
                let w = vs[k];
                k += 1;
                if index[w] == usize::MAX {
                    call.push((v, vs.clone(), k));
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    tarjan_stack.push(w);
                    on_stack[w] = true;
                    call.push((w, succs(w), 0));
                    recursed = true;
                    break;
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            }
            if recursed {
                continue;
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = tarjan_stack.pop().unwrap();
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                sccs.push(comp);
            }
            if let Some((parent, _, _)) = call.last() {
                let p = *parent;
                low[p] = low[p].min(low[v]);
            }
        }
    }

    let mut scc_of = vec![usize::MAX; n_states];
    for (i, comp) in sccs.iter().enumerate() {
        for s in comp {
            scc_of[*s] = i;
        }
    }
    let mut bottoms: Vec<Vec<usize>> = sccs
        .iter()
        .filter(|comp| {
            comp.iter()
                .all(|s| succs(*s).into_iter().all(|t| scc_of[t] == scc_of[comp[0]]))
        })
        .cloned()
        .collect();
    bottoms.sort();
    bottoms
}

/// Exact fairness check for a complete memoryless strategy on a
/// parameter-free model: every reachable bottom SCC of the induced chain
/// must carry, for each class, some positive-mass action labeled in it.
pub fn is_fair_memoryless(
    n: &Ppa,
    sigma: &Strategy,
    spec: &FairnessSpec,
) -> Result<bool, SemanticsError> {
    if !n.is_parameter_free() {
        return Err(SemanticsError::NotParameterFree);
    }
    let info = sigma.validate(n)?;
    if !info.memoryless {
        return Err(StrategyError::NotMemoryless.into());
    }
    if !info.complete {
        return Err(StrategyError::NotComplete.into());
    }
    if spec.classes.is_empty() {
        return Ok(true);
    }
    let choices = sigma.memoryless_choices()?;
    let zero = BTreeMap::new();
    let support_succs = |s: usize| -> Vec<usize> {
        let mut out = BTreeSet::new();
        for (a, mass) in choices.get(&s).unwrap_or(&zero) {
            if mass.is_zero() {
                continue;
            }
            for (succ, p) in n.trans[&(s, *a)].iter() {
                if !p.is_zero() {
                    out.insert(succ);
                }
            }
        }
        out.into_iter().collect()
    };
    let bottoms = bottom_sccs(n.states.len(), n.initial, support_succs);
    for comp in &bottoms {
        for class in &spec.classes {
            let hit = comp.iter().any(|s| {
                choices.get(s).unwrap_or(&zero).iter().any(|(a, mass)| {
                    !mass.is_zero()
                        && class.contains(n.label(*s, *a).unwrap_or_default())
                })
            });
            if !hit {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
