//! Enumeration of memoryless deterministic strategies.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use num_traits::Zero;

use crate::automata::Ppa;
use crate::strategies::strategy::Strategy;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Completeness {
    Cmp,
    Prt,
}

/// All deterministic memoryless strategies: one enabled action per state
/// for `Cmp`, one-or-none per state for `Prt`. Literal cartesian product in
/// a fixed order; intended for small models.
pub fn enumerate_memoryless_deterministic(m: &Ppa, c: Completeness) -> Vec<Strategy> {
    let per_state: Vec<Vec<Option<usize>>> = (0..m.states.len())
        .map(|s| {
            let mut opts: Vec<Option<usize>> =
                m.enabled(s).into_iter().map(Some).collect();
            if matches!(c, Completeness::Prt) {
                opts.push(None);
            }
            opts
        })
        .collect();
    if per_state.iter().any(|o| o.is_empty()) {
        return Vec::new(); // some state admits no complete choice
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; per_state.len()];
    loop {
        let mut choice: BTreeMap<usize, usize> = BTreeMap::new();
        for (s, opts) in per_state.iter().enumerate() {
            if let Some(a) = opts[idx[s]] {
                choice.insert(s, a);
            }
        }
        out.push(Strategy::memoryless_deterministic(&choice));
        // odometer
        let mut d = 0;
        loop {
            if d == per_state.len() {
                return out;
            }
            idx[d] += 1;
            if idx[d] < per_state[d].len() {
                break;
            }
            idx[d] = 0;
            d += 1;
        }
    }
}

/// Enumerates choice functions on the fragment reachable under the choices
/// themselves. Two strategies differing only at unreachable states induce
/// the same measure, so this visits exactly one representative per
/// equivalence class: the yielded map assigns actions to reached states
/// only. For complete-strategy semantics a reached dead-end state aborts
/// that branch (no completion exists).
///
/// Returns `false` if the visitor broke early.
pub fn for_each_effective_strategy(
    m: &Ppa,
    f: &mut dyn FnMut(&BTreeMap<usize, usize>) -> ControlFlow<()>,
) -> bool {
    let mut assignment: BTreeMap<usize, usize> = BTreeMap::new();
    let mut frontier: BTreeSet<usize> = BTreeSet::new();
    frontier.insert(m.initial);
    descend(m, &mut assignment, &mut frontier, f).is_continue()
}

fn descend(
    m: &Ppa,
    assignment: &mut BTreeMap<usize, usize>,
    frontier: &mut BTreeSet<usize>,
    f: &mut dyn FnMut(&BTreeMap<usize, usize>) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let state = match frontier.iter().next() {
        None => return f(assignment),
        Some(s) => *s,
    };
    frontier.remove(&state);
    let enabled = m.enabled(state);
    if enabled.is_empty() {
        // dead end: no complete strategy covers this branch
        frontier.insert(state);
        return ControlFlow::Continue(());
    }
    for a in enabled {
        assignment.insert(state, a);
        let mut added: Vec<usize> = Vec::new();
        for (succ, p) in m.trans[&(state, a)].iter() {
            if p.is_zero() {
                continue;
            }
            if !assignment.contains_key(&succ) && !frontier.contains(&succ) && succ != state {
                frontier.insert(succ);
                added.push(succ);
            }
        }
        let flow = descend(m, assignment, frontier, f);
        for s in added {
            frontier.remove(&s);
        }
        assignment.remove(&state);
        flow?;
    }
    frontier.insert(state);
    ControlFlow::Continue(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::parse_ppa;

    fn m1() -> Ppa {
        parse_ppa(
            "m1",
            "ppa m1\nalphabet a b c\nparams p\nstates s0 s1\ninit s0\n\
             trans s0 a a : s1 = 1-p, s0 = p\n\
             trans s0 b b : s0 = 1\n\
             trans s0 c c : s0 = 1\n\
             trans s1 b b : s1 = 1\n",
        )
        .unwrap()
    }

    #[test]
    fn literal_counts_match_products_of_enabled_sets() {
        let m = m1();
        assert_eq!(
            enumerate_memoryless_deterministic(&m, Completeness::Cmp).len(),
            3
        );
        assert_eq!(
            enumerate_memoryless_deterministic(&m, Completeness::Prt).len(),
            8
        );
    }

    #[test]
    fn single_state_single_action() {
        let m = parse_ppa(
            "one",
            "ppa one\nalphabet x\nstates s\ninit s\ntrans s u x : s = 1\n",
        )
        .unwrap();
        assert_eq!(
            enumerate_memoryless_deterministic(&m, Completeness::Cmp).len(),
            1
        );
    }

    #[test]
    fn effective_enumeration_skips_unreachable_states() {
        let m = m1();
        let mut seen = Vec::new();
        for_each_effective_strategy(&m, &mut |choice| {
            seen.push(choice.clone());
            ControlFlow::Continue(())
        });
        // choosing a at s0 reaches s1 (1 option there); b or c never do
        assert_eq!(seen.len(), 3);
        assert!(seen.iter().any(|c| c.len() == 2));
        assert_eq!(seen.iter().filter(|c| c.len() == 1).count(), 2);
    }
}
