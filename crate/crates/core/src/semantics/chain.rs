//! Induced Markov chains and exact reachability, generic over the scalar.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::algebra::solve_linear_system;
use crate::automata::Ppa;
use crate::error::SemanticsError;
use crate::scalar::FieldScalar;
use crate::strategies::Strategy;

/// Induced chain of a pPA under a memoryless strategy: per-state sparse
/// successor rows `P(s, s') = sum_a sigma(s,a) * delta(s,a,s')`, plus the
/// per-state total strategy mass (row sums may stay below one for partial
/// strategies).
#[derive(Clone, Debug)]
pub struct Chain<F> {
    pub rows: Vec<BTreeMap<usize, F>>,
    pub initial: usize,
}

impl<F: FieldScalar> Chain<F> {
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Support successors: entries that are structurally nonzero.
    pub fn succs(&self, s: usize) -> Vec<usize> {
        self.rows[s]
            .iter()
            .filter(|(_, p)| !p.is_zero())
            .map(|(t, _)| *t)
            .collect()
    }

    /// States that can reach `targets` through support edges.
    pub fn can_reach(&self, targets: &BTreeSet<usize>) -> Vec<bool> {
        let mut rev: Vec<Vec<usize>> = vec![Vec::new(); self.n()];
        for (s, row) in self.rows.iter().enumerate() {
            for (t, p) in row {
                if !p.is_zero() {
                    rev[*t].push(s);
                }
            }
        }
        let mut hit = vec![false; self.n()];
        let mut stack: Vec<usize> = targets.iter().copied().collect();
        while let Some(s) = stack.pop() {
            if hit[s] {
                continue;
            }
            hit[s] = true;
            for t in &rev[s] {
                if !hit[*t] {
                    stack.push(*t);
                }
            }
        }
        hit
    }
}

/// Builds the induced chain, mapping transition entries through `lift`
/// (e.g. exact evaluation at a valuation, or embedding polynomials into the
/// rational-function field).
pub fn induced_chain<F: FieldScalar>(
    m: &Ppa,
    sigma: &Strategy,
    lift: impl Fn(&crate::Poly) -> Result<F, SemanticsError>,
    mass_lift: impl Fn(&crate::Rat) -> F,
) -> Result<Chain<F>, SemanticsError> {
    let choices = sigma.memoryless_choices()?;
    let empty = BTreeMap::new();
    let mut rows: Vec<BTreeMap<usize, F>> = vec![BTreeMap::new(); m.states.len()];
    for s in 0..m.states.len() {
        for (a, mass) in choices.get(&s).unwrap_or(&empty) {
            if mass.is_zero() {
                continue;
            }
            let dist = match m.distribution(s, *a) {
                Some(d) => d,
                None => continue,
            };
            for (succ, poly) in dist.iter() {
                let val = mass_lift(mass) * lift(poly)?;
                let slot = rows[s].entry(succ).or_insert_with(F::zero);
                *slot = slot.clone() + val;
            }
        }
    }
    Ok(Chain { rows, initial: m.initial })
}

/// Exact reachability values `x(s) = Pr(eventually hit targets from s)`.
///
/// Targets are treated as absorbing. States that cannot reach a target get
/// value zero outright, which keeps the remaining linear system nonsingular
/// for substochastic chains.
pub fn reach_values<F: FieldScalar>(
    chain: &Chain<F>,
    targets: &BTreeSet<usize>,
) -> Result<Vec<F>, SemanticsError> {
    let n = chain.n();
    let can = chain.can_reach(targets);
    let unknowns: Vec<usize> = (0..n)
        .filter(|s| can[*s] && !targets.contains(s))
        .collect();
    let index: BTreeMap<usize, usize> = unknowns
        .iter()
        .enumerate()
        .map(|(i, s)| (*s, i))
        .collect();
    let k = unknowns.len();
    let mut a = vec![vec![F::zero(); k]; k];
    let mut b = vec![F::zero(); k];
    for (i, s) in unknowns.iter().enumerate() {
        a[i][i] = F::one();
        for (t, p) in &chain.rows[*s] {
            if p.is_zero() {
                continue;
            }
            if targets.contains(t) {
                b[i] = b[i].clone() + p.clone();
            } else if let Some(j) = index.get(t) {
                a[i][*j] = a[i][*j].clone() - p.clone();
            }
        }
    }
    let x = solve_linear_system(&a, &b)?;
    let mut out = vec![F::zero(); n];
    for s in targets {
        out[*s] = F::one();
    }
    for (i, s) in unknowns.iter().enumerate() {
        out[*s] = x[i].clone();
    }
    Ok(out)
}
