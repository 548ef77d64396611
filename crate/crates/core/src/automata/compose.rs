//! Parallel composition, alphabet extension, sink (tau) extension, and the
//! pPA-DFA bad-prefix product.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::ModelError;

use super::dfa::Dfa;
use super::ppa::{ParametricDistribution, Ppa};

/// How a composite action decomposes into component actions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CompositeAction {
    /// Both components act on a shared label: `(alpha1, alpha2)`.
    Sync(usize, usize),
    /// Component 1 acts alone on one of its non-shared labels.
    Left(usize),
    /// Component 2 acts alone on one of its non-shared labels.
    Right(usize),
}

impl CompositeAction {
    /// The component-`i` action, if component `i` participates.
    pub fn component(&self, i: u8) -> Option<usize> {
        match (self, i) {
            (CompositeAction::Sync(a, _), 1) => Some(*a),
            (CompositeAction::Sync(_, b), 2) => Some(*b),
            (CompositeAction::Left(a), 1) => Some(*a),
            (CompositeAction::Right(b), 2) => Some(*b),
            _ => None,
        }
    }
}

/// Metadata tying a composed pPA back to its components.
#[derive(Clone, Debug)]
pub struct ComposedMeta {
    /// composite state index -> (component-1 state, component-2 state)
    pub state_pairs: Vec<(usize, usize)>,
    /// composite action index -> decomposition
    pub action_kinds: Vec<CompositeAction>,
}

/// A composed pPA plus the component bookkeeping needed for projection.
#[derive(Clone, Debug)]
pub struct Composition {
    pub ppa: Ppa,
    pub meta: ComposedMeta,
    pub left: Ppa,
    pub right: Ppa,
}

impl Composition {
    pub fn state_pair(&self, composite: usize) -> (usize, usize) {
        self.meta.state_pairs[composite]
    }

    pub fn composite_state(&self, s1: usize, s2: usize) -> usize {
        s1 * self.right.states.len() + s2
    }

    pub fn action_kind(&self, action: usize) -> &CompositeAction {
        &self.meta.action_kinds[action]
    }

    pub fn component(&self, i: u8) -> &Ppa {
        match i {
            1 => &self.left,
            2 => &self.right,
            _ => panic!("component index must be 1 or 2"),
        }
    }
}

fn check_compose_side_condition(m1: &Ppa, m2: &Ppa) -> Result<(), ModelError> {
    // The blanket side condition Act_i disjoint from (A1 u A2) is sufficient
    // but rejects the common actions-equal-alphabet convention. What the
    // three transition cases actually need is that composite pairs decompose
    // unambiguously: a sync pair (alpha1, alpha2) must not be mistakable for
    // an interleaving pair (alpha1, a1) or (a2, alpha2). That fails exactly
    // when an action name of one component equals a non-shared label of the
    // other side of the pair.
    let a1_only: BTreeSet<&String> = m1.alphabet.difference(&m2.alphabet).collect();
    let a2_only: BTreeSet<&String> = m2.alphabet.difference(&m1.alphabet).collect();
    let mut clashes: Vec<String> = Vec::new();
    clashes.extend(
        m1.actions
            .iter()
            .filter(|a| a2_only.contains(a))
            .map(|a| a.to_string()),
    );
    clashes.extend(
        m2.actions
            .iter()
            .filter(|a| a1_only.contains(a))
            .map(|a| a.to_string()),
    );
    if clashes.is_empty() {
        Ok(())
    } else {
        clashes.sort();
        clashes.dedup();
        Err(ModelError::ActionAlphabetClash(clashes.join(", ")))
    }
}

/// Parallel composition per the three synchronization cases: shared labels
/// synchronize with product distributions, non-shared labels interleave with
/// the idle component held in place. Parameter sets are unioned.
pub fn parallel_compose(m1: &Ppa, m2: &Ppa) -> Result<Composition, ModelError> {
    check_compose_side_condition(m1, m2)?;
    let n2 = m2.states.len();
    let pair = |s1: usize, s2: usize| s1 * n2 + s2;

    let mut states = Vec::with_capacity(m1.states.len() * n2);
    let mut state_pairs = Vec::with_capacity(m1.states.len() * n2);
    for (i1, s1) in m1.states.iter().enumerate() {
        for (i2, s2) in m2.states.iter().enumerate() {
            states.push(format!("({s1},{s2})"));
            state_pairs.push((i1, i2));
        }
    }

    let mut params = m1.params.clone();
    params.extend(m2.params.iter().cloned());
    let mut alphabet = m1.alphabet.clone();
    alphabet.extend(m2.alphabet.iter().cloned());
    let shared: BTreeSet<String> = m1
        .alphabet
        .intersection(&m2.alphabet)
        .cloned()
        .collect();

    let mut actions: Vec<String> = Vec::new();
    let mut action_kinds: Vec<CompositeAction> = Vec::new();
    let mut action_index: BTreeMap<String, usize> = BTreeMap::new();
    let mut intern = |name: String, kind: CompositeAction| -> usize {
        if let Some(i) = action_index.get(&name) {
            return *i;
        }
        let i = actions.len();
        actions.push(name.clone());
        action_kinds.push(kind);
        action_index.insert(name, i);
        i
    };

    let mut trans: BTreeMap<(usize, usize), ParametricDistribution> = BTreeMap::new();
    let mut labels: BTreeMap<(usize, usize), String> = BTreeMap::new();

    for (i1, _) in m1.states.iter().enumerate() {
        for (i2, _) in m2.states.iter().enumerate() {
            let st = pair(i1, i2);
            // synchronized steps on shared labels
            for a1 in m1.enabled(i1) {
                let l1 = m1.label(i1, a1).unwrap();
                if !shared.contains(l1) {
                    continue;
                }
                for a2 in m2.enabled(i2) {
                    let l2 = m2.label(i2, a2).unwrap();
                    if l1 != l2 {
                        continue;
                    }
                    let name = format!("({},{})", m1.action_name(a1), m2.action_name(a2));
                    let act = intern(name, CompositeAction::Sync(a1, a2));
                    let dist = m1.trans[&(i1, a1)]
                        .product(&m2.trans[&(i2, a2)], |x1, x2| pair(x1, x2));
                    trans.insert((st, act), dist);
                    labels.insert((st, act), l1.to_string());
                }
            }
            // component 1 alone on its non-shared labels
            for a1 in m1.enabled(i1) {
                let l1 = m1.label(i1, a1).unwrap();
                if shared.contains(l1) {
                    continue;
                }
                let name = format!("({},{l1})", m1.action_name(a1));
                let act = intern(name, CompositeAction::Left(a1));
                let dist = ParametricDistribution::from_entries(
                    m1.trans[&(i1, a1)].iter().map(|(x1, p)| (pair(x1, i2), p.clone())),
                );
                trans.insert((st, act), dist);
                labels.insert((st, act), l1.to_string());
            }
            // component 2 alone on its non-shared labels
            for a2 in m2.enabled(i2) {
                let l2 = m2.label(i2, a2).unwrap();
                if shared.contains(l2) {
                    continue;
                }
                let name = format!("({l2},{})", m2.action_name(a2));
                let act = intern(name, CompositeAction::Right(a2));
                let dist = ParametricDistribution::from_entries(
                    m2.trans[&(i2, a2)].iter().map(|(x2, p)| (pair(i1, x2), p.clone())),
                );
                trans.insert((st, act), dist);
                labels.insert((st, act), l2.to_string());
            }
        }
    }

    let ppa = Ppa {
        name: format!("({} || {})", m1.name, m2.name),
        states,
        initial: pair(m1.initial, m2.initial),
        params,
        actions,
        alphabet,
        trans,
        labels,
    };
    Ok(Composition {
        ppa,
        meta: ComposedMeta { state_pairs, action_kinds },
        left: m1.clone(),
        right: m2.clone(),
    })
}

/// Alphabet extension: a Dirac self-loop labeled `a` at every state, for
/// every new symbol `a`. Existing transitions are untouched.
pub fn alphabet_extend(m: &Ppa, symbols: &BTreeSet<String>) -> Result<Ppa, ModelError> {
    let new_syms: Vec<&String> = symbols.iter().filter(|s| !m.alphabet.contains(*s)).collect();
    let clash: Vec<&&String> = new_syms.iter().filter(|s| m.actions.contains(**s)).collect();
    if !clash.is_empty() {
        let names: Vec<String> = clash.iter().map(|s| s.to_string()).collect();
        return Err(ModelError::ActionAlphabetClash(names.join(", ")));
    }
    let mut out = m.clone();
    out.name = format!("{}^ext", m.name);
    for sym in new_syms {
        let act = out.actions.len();
        out.actions.push(sym.clone());
        out.alphabet.insert(sym.clone());
        for s in 0..out.states.len() {
            out.trans.insert((s, act), ParametricDistribution::dirac(s));
            out.labels.insert((s, act), sym.clone());
        }
    }
    Ok(out)
}

/// Result of [`tau_extend`]: the extended pPA plus the chosen fresh names.
#[derive(Clone, Debug)]
pub struct TauExtension {
    pub ppa: Ppa,
    pub tau_symbol: String,
    pub tau_action: usize,
    pub sink: usize,
}

/// Sink extension: every state gains a fresh tau-labeled Dirac step into a
/// fresh absorbing sink. The sink also carries a tau self-loop so complete
/// strategies exist everywhere (the sink is absorbing either way, so all
/// probabilities of interest are unchanged).
pub fn tau_extend(m: &Ppa) -> TauExtension {
    let mut tau = "tau".to_string();
    let mut k = 0;
    while m.alphabet.contains(&tau) || m.actions.contains(&tau) {
        k += 1;
        tau = format!("tau{k}");
    }
    let mut sink_name = "s_tau".to_string();
    let mut k = 0;
    while m.states.contains(&sink_name) {
        k += 1;
        sink_name = format!("s_tau{k}");
    }
    let mut out = m.clone();
    out.name = format!("{}_tau", m.name);
    let sink = out.states.len();
    out.states.push(sink_name);
    let act = out.actions.len();
    out.actions.push(tau.clone());
    out.alphabet.insert(tau.clone());
    for s in 0..out.states.len() {
        out.trans.insert((s, act), ParametricDistribution::dirac(sink));
        out.labels.insert((s, act), tau.clone());
    }
    TauExtension { ppa: out, tau_symbol: tau, tau_action: act, sink }
}

/// A pPA-DFA product with its designated bad states.
#[derive(Clone, Debug)]
pub struct Product {
    pub ppa: Ppa,
    /// product state index -> (model state, DFA state)
    pub state_pairs: Vec<(usize, usize)>,
    /// product states whose DFA component is accepting
    pub bad: BTreeSet<usize>,
}

impl Product {
    pub fn composite_state(&self, s: usize, q: usize, n_dfa: usize) -> usize {
        s * n_dfa + q
    }
}

/// Bad-prefix product: the DFA advances on symbols in its alphabet and stays
/// put otherwise. Commutes with instantiation.
pub fn dfa_product(m: &Ppa, b: &Dfa) -> Result<Product, ModelError> {
    let missing: Vec<&String> =
        b.alphabet.iter().filter(|s| !m.alphabet.contains(*s)).collect();
    if !missing.is_empty() {
        let names: Vec<String> = missing.iter().map(|s| s.to_string()).collect();
        return Err(ModelError::AlphabetNotContained(names.join(", ")));
    }
    let nq = b.states.len();
    let pair = |s: usize, q: usize| s * nq + q;
    let mut states = Vec::with_capacity(m.states.len() * nq);
    let mut state_pairs = Vec::with_capacity(m.states.len() * nq);
    let mut bad = BTreeSet::new();
    for (si, s) in m.states.iter().enumerate() {
        for (qi, q) in b.states.iter().enumerate() {
            states.push(format!("({s},{q})"));
            state_pairs.push((si, qi));
            if b.is_accepting(qi) {
                bad.insert(pair(si, qi));
            }
        }
    }
    let mut trans = BTreeMap::new();
    let mut labels = BTreeMap::new();
    for ((s, a), dist) in &m.trans {
        let sym = &m.labels[&(*s, *a)];
        for q in 0..nq {
            let q_next = if b.alphabet.contains(sym) {
                match b.step(q, sym) {
                    Some(x) => x,
                    None => {
                        return Err(ModelError::DfaIncomplete {
                            state: b.states[q].clone(),
                            symbol: sym.clone(),
                        })
                    }
                }
            } else {
                q
            };
            let nd = ParametricDistribution::from_entries(
                dist.iter().map(|(succ, p)| (pair(succ, q_next), p.clone())),
            );
            trans.insert((pair(*s, q), *a), nd);
            labels.insert((pair(*s, q), *a), sym.clone());
        }
    }
    let ppa = Ppa {
        name: format!("({} (x) {})", m.name, b.name),
        states,
        initial: pair(m.initial, b.initial),
        params: m.params.clone(),
        actions: m.actions.clone(),
        alphabet: m.alphabet.clone(),
        trans,
        labels,
    };
    Ok(Product { ppa, state_pairs, bad })
}
