//! Path projection, lifted path sets, and strategy projection.
//!
//! The projection of a composite strategy onto a component is the
//! conditional probability that the component's next action is `alpha`,
//! given that a composite path with the observed component history occurred.
//! Numerators are computed by the one-step-extension sum over lifted paths,
//! denominators as the measure of the lifted cylinder union, i.e. the sum
//! over lift-minimal paths.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::automata::{Composition, FinitePath};
use crate::error::{ModelError, StrategyError};
use crate::strategies::strategy::{Fallback, Strategy};
use crate::{Rat, Valuation};

/// Restriction of a composite path to the steps of component `i` (1 or 2).
pub fn project_path(comp: &Composition, path: &FinitePath, i: u8) -> FinitePath {
    let (s1, s2) = comp.state_pair(path.states()[0]);
    let mut out = FinitePath::initial(if i == 1 { s1 } else { s2 });
    for k in 0..path.len() {
        let (_, act, succ) = path.step(k);
        if let Some(ai) = comp.action_kind(act).component(i) {
            let (t1, t2) = comp.state_pair(succ);
            out = out.extended(ai, if i == 1 { t1 } else { t2 });
        }
    }
    out
}

/// All composite paths of length at most `horizon` whose projection to
/// component `i` equals `target`. Enumerates the stored transition domain,
/// so probability-zero steps of instantiated models are included.
pub fn lift_paths(
    comp: &Composition,
    target: &FinitePath,
    i: u8,
    horizon: usize,
) -> Result<Vec<FinitePath>, StrategyError> {
    if horizon < target.len() {
        return Err(StrategyError::HorizonTooSmall {
            horizon,
            needed: target.len(),
        });
    }
    let mut out = Vec::new();
    let init = comp.ppa.initial;
    let (s1, s2) = comp.state_pair(init);
    let comp_init = if i == 1 { s1 } else { s2 };
    if target.states()[0] != comp_init {
        return Ok(out);
    }
    let mut path = FinitePath::initial(init);
    descend(comp, target, i, horizon, &mut path, 0, &mut |p| {
        out.push(p.clone())
    });
    Ok(out)
}

/// DFS over composite paths; `consumed` counts target steps matched so far.
fn descend(
    comp: &Composition,
    target: &FinitePath,
    i: u8,
    horizon: usize,
    path: &mut FinitePath,
    consumed: usize,
    sink: &mut impl FnMut(&FinitePath),
) {
    if consumed == target.len() {
        sink(path);
    }
    if path.len() >= horizon {
        return;
    }
    let st = path.last();
    for act in comp.ppa.enabled(st) {
        let kind_component = comp.action_kind(act).component(i);
        match kind_component {
            Some(ai) => {
                if consumed == target.len() {
                    continue; // an i-step would extend the projection
                }
                if ai != target.actions()[consumed] {
                    continue;
                }
                let want = target.states()[consumed + 1];
                for (succ, _) in comp.ppa.trans[&(st, act)].iter() {
                    let (t1, t2) = comp.state_pair(succ);
                    let got = if i == 1 { t1 } else { t2 };
                    if got != want {
                        continue;
                    }
                    let ext = path.extended(act, succ);
                    *path = ext;
                    descend(comp, target, i, horizon, path, consumed + 1, sink);
                    *path = path.prefix(path.len() - 1);
                }
            }
            None => {
                for (succ, _) in comp.ppa.trans[&(st, act)].iter() {
                    let ext = path.extended(act, succ);
                    *path = ext;
                    descend(comp, target, i, horizon, path, consumed, sink);
                    *path = path.prefix(path.len() - 1);
                }
            }
        }
    }
}

/// Whether a lifted path is minimal for its projection: either the initial
/// path, or its last step belongs to the projected component. The lifted
/// cylinder union's measure is the sum over minimal paths.
fn is_minimal(comp: &Composition, path: &FinitePath, i: u8) -> bool {
    match path.len() {
        0 => true,
        n => comp
            .action_kind(path.actions()[n - 1])
            .component(i)
            .is_some(),
    }
}

/// Measures over lifted path sets for a fixed instantiated composition and
/// strategy. Results are memoized per projected path.
pub struct Projector<'a> {
    comp: &'a Composition,
    sigma: &'a Strategy,
    horizon: usize,
    component: u8,
    cache: BTreeMap<FinitePath, (Rat, BTreeMap<usize, Rat>)>,
}

impl<'a> Projector<'a> {
    /// `comp` must be instantiated (constant transition polynomials); the
    /// strategy is queried on composite paths up to `horizon` steps.
    pub fn new(comp: &'a Composition, sigma: &'a Strategy, component: u8, horizon: usize) -> Self {
        Projector { comp, sigma, horizon, component, cache: BTreeMap::new() }
    }

    /// `(Pr(target lifted), numerator per component action)`.
    fn measures(&mut self, target: &FinitePath) -> (Rat, BTreeMap<usize, Rat>) {
        if let Some(hit) = self.cache.get(target) {
            return hit.clone();
        }
        let mut denom = Rat::zero();
        let mut numer: BTreeMap<usize, Rat> = BTreeMap::new();
        let init = self.comp.ppa.initial;
        let (s1, s2) = self.comp.state_pair(init);
        let comp_init = if self.component == 1 { s1 } else { s2 };
        if target.states()[0] == comp_init {
            let mut path = FinitePath::initial(init);
            let empty = Valuation::new();
            self.walk(target, &mut path, 0, Rat::one(), &empty, &mut denom, &mut numer);
        }
        let result = (denom, numer);
        self.cache.insert(target.clone(), result.clone());
        result
    }

    #[allow(clippy::too_many_arguments)]
    fn walk(
        &self,
        target: &FinitePath,
        path: &mut FinitePath,
        consumed: usize,
        prob: Rat,
        v: &Valuation,
        denom: &mut Rat,
        numer: &mut BTreeMap<usize, Rat>,
    ) {
        if prob.is_zero() {
            return;
        }
        let m = &self.comp.ppa;
        if consumed == target.len() {
            if is_minimal(self.comp, path, self.component) {
                *denom += prob.clone();
            }
            // one-step-extension sum: strategy mass on composite actions
            // whose component part is alpha
            let dist = self.sigma.distribution(m, path);
            for (act, mass) in &dist {
                if mass.is_zero() {
                    continue;
                }
                if let Some(ai) = self.comp.action_kind(*act).component(self.component) {
                    *numer.entry(ai).or_insert_with(Rat::zero) += prob.clone() * mass.clone();
                }
            }
        }
        if path.len() >= self.horizon {
            return;
        }
        let st = path.last();
        let dist = self.sigma.distribution(m, path);
        for (act, mass) in &dist {
            if mass.is_zero() {
                continue;
            }
            let step_ok: Box<dyn Fn(usize) -> bool> =
                match self.comp.action_kind(*act).component(self.component) {
                    Some(ai) => {
                        if consumed == target.len()
                            || ai != target.actions()[consumed]
                        {
                            continue;
                        }
                        let want = target.states()[consumed + 1];
                        let i = self.component;
                        let comp = self.comp;
                        Box::new(move |succ: usize| {
                            let (t1, t2) = comp.state_pair(succ);
                            (if i == 1 { t1 } else { t2 }) == want
                        })
                    }
                    None => Box::new(|_| true),
                };
            let advances = self
                .comp
                .action_kind(*act)
                .component(self.component)
                .is_some();
            for (succ, poly) in m.trans[&(st, *act)].iter() {
                if !step_ok(succ) {
                    continue;
                }
                let p = poly.eval(v).expect("instantiated composition");
                if p.is_zero() {
                    continue;
                }
                let next_prob = prob.clone() * mass.clone() * p;
                let ext = path.extended(*act, succ);
                let saved = std::mem::replace(path, ext);
                self.walk(
                    target,
                    path,
                    consumed + usize::from(advances),
                    next_prob,
                    v,
                    denom,
                    numer,
                );
                *path = saved;
            }
        }
    }

    /// `Pr(target lifted)`: the probability that a composite path with the
    /// given component history occurs.
    pub fn lifted_probability(&mut self, target: &FinitePath) -> Rat {
        self.measures(target).0
    }

    /// The Def-6 conditional: numerator over denominator, zero when the
    /// component history has probability zero.
    pub fn projected_distribution(&mut self, target: &FinitePath) -> BTreeMap<usize, Rat> {
        let (denom, numer) = self.measures(target);
        if denom.is_zero() {
            return BTreeMap::new();
        }
        numer
            .into_iter()
            .filter(|(_, n)| !n.is_zero())
            .map(|(a, n)| (a, n / denom.clone()))
            .collect()
    }
}

/// Projects a composite strategy onto component `i` with respect to
/// per-component valuations, as a finite-path table covering all component
/// histories shorter than `horizon`.
///
/// The projection is computed on the instantiated composition
/// `M1[v1] || M2[v2]`, whose state and action indexing coincides with the
/// parametric composition, so `sigma` applies unchanged. The result is
/// partial in general, even for complete `sigma`.
pub fn project_strategy(
    comp: &Composition,
    sigma: &Strategy,
    i: u8,
    v1: &Valuation,
    v2: &Valuation,
    horizon: usize,
) -> Result<Strategy, ModelError> {
    let m1v = comp.left.instantiate(v1)?;
    let m2v = comp.right.instantiate(v2)?;
    let comp_v = crate::automata::parallel_compose(&m1v, &m2v)?;
    let component = comp_v.component(i).clone();

    let mut projector = Projector::new(&comp_v, sigma, i, horizon);
    let mut entries: BTreeMap<FinitePath, BTreeMap<usize, Rat>> = BTreeMap::new();
    let mut stack = vec![FinitePath::initial(component.initial)];
    while let Some(path) = stack.pop() {
        let dist = projector.projected_distribution(&path);
        if !dist.is_empty() {
            entries.insert(path.clone(), dist);
        }
        if path.len() + 1 < horizon {
            for act in component.enabled(path.last()) {
                for (succ, _) in component.trans[&(path.last(), act)].iter() {
                    stack.push(path.extended(act, succ));
                }
            }
        }
    }
    Ok(Strategy::PathTable {
        horizon: horizon.saturating_sub(1),
        entries,
        fallback: Fallback::Stop,
    })
}
