//! Structural examples: validation, composition, extensions, products.

mod common;

use std::collections::BTreeSet;

use common::*;
use ppa_core::algebra::parse_polynomial;
use ppa_core::automata::{
    alphabet_extend, canonical_renumber, dfa_product, parallel_compose, parse_ppa,
    serialize_ppa, tau_extend,
};
use ppa_core::error::ModelError;
use ppa_core::rat;

#[test]
fn m1_validates_with_expected_enabled_sets() {
    let m = m1();
    let rep = m.validate();
    assert!(rep.is_valid(), "{:?}", rep.violations);
    assert_eq!(rep.enabled["s0"], vec!["a", "b", "c"]);
    assert_eq!(rep.enabled["s1"], vec!["b"]);
}

#[test]
fn dangling_successor_is_reported() {
    let text = "ppa bad\nalphabet a\nstates s0\ninit s0\ntrans s0 a a : s0 = 1\n";
    let mut m = parse_ppa("bad", text).unwrap();
    // corrupt the successor index directly
    let dist = ppa_core::automata::ParametricDistribution::from_entries([(
        7usize,
        ppa_core::Poly::constant(rat(1, 1)),
    )]);
    m.trans.insert((0, 0), dist);
    let rep = m.validate();
    assert!(rep
        .violations
        .iter()
        .any(|v| matches!(v, ModelError::DanglingSuccessor { .. })));
}

#[test]
fn empty_state_set_has_no_initial_state() {
    let m = ppa_core::automata::Ppa {
        name: "empty".into(),
        states: vec![],
        initial: 0,
        params: BTreeSet::new(),
        actions: vec![],
        alphabet: BTreeSet::new(),
        trans: Default::default(),
        labels: Default::default(),
    };
    let rep = m.validate();
    assert!(rep
        .violations
        .iter()
        .any(|v| matches!(v, ModelError::NoInitialState)));
}

#[test]
fn well_definedness_of_m2() {
    let m = m2();
    let v = val(&[("p", rat(1, 10)), ("q", rat(1, 10))]);
    assert!(m.is_well_defined(&v).unwrap());
    assert!(m.is_graph_preserving(&v).unwrap());

    // p = 0 kills the p-branch: still well-defined, not graph-preserving
    let v0 = val(&[("p", rat(0, 1)), ("q", rat(1, 2))]);
    assert!(m.is_well_defined(&v0).unwrap());
    assert!(!m.is_graph_preserving(&v0).unwrap());

    // p = 2 produces a negative entry 1-p
    let v2 = val(&[("p", rat(2, 1)), ("q", rat(1, 2))]);
    assert!(!m.is_well_defined(&v2).unwrap());
}

#[test]
fn instantiation_preserves_domain_and_values() {
    let m = m2();
    let v = val(&[("p", rat(1, 10)), ("q", rat(1, 10))]);
    let inst = m.instantiate(&v).unwrap();
    assert_eq!(inst.trans.len(), m.trans.len());
    let t0 = m.state_index("t0").unwrap();
    let t1 = m.state_index("t1").unwrap();
    let t2 = m.state_index("t2").unwrap();
    let t3 = m.state_index("t3").unwrap();
    let t4 = m.state_index("t4").unwrap();
    let a = m.action_index("a").unwrap();
    let c = m.action_index("c").unwrap();
    let d = inst.distribution(t0, a).unwrap();
    assert_eq!(d.get(t1).unwrap().as_constant().unwrap(), rat(9, 10));
    assert_eq!(d.get(t2).unwrap().as_constant().unwrap(), rat(1, 10));
    let d = inst.distribution(t2, c).unwrap();
    assert_eq!(d.get(t4).unwrap().as_constant().unwrap(), rat(9, 10));
    assert_eq!(d.get(t3).unwrap().as_constant().unwrap(), rat(1, 10));

    // parameter-free models instantiate to themselves
    let inst2 = inst.instantiate(&val(&[])).unwrap();
    assert_eq!(inst2.trans, inst.trans);

    // enabled-action structure is unchanged by instantiation
    for s in 0..m.states.len() {
        assert_eq!(m.enabled(s), inst.enabled(s));
    }
}

#[test]
fn composition_matches_the_product_figure() {
    let comp = composition();
    let m = &comp.ppa;
    assert_eq!(m.states.len(), 10);
    assert_eq!(m.states[m.initial], "(s0,t0)");

    // the synchronized a-step from the initial state
    let st = m.state_index("(s0,t0)").unwrap();
    let a_sync = m
        .enabled(st)
        .into_iter()
        .find(|act| m.label(st, *act) == Some("a"))
        .expect("a-sync enabled initially");
    let dist = m.distribution(st, a_sync).unwrap();
    let entry = |name: &str| {
        dist.get(m.state_index(name).unwrap())
            .cloned()
            .unwrap_or_else(ppa_core::Poly::zero_poly)
    };
    assert_eq!(entry("(s1,t1)"), parse_polynomial("(1-p)^2").unwrap());
    assert_eq!(entry("(s0,t1)"), parse_polynomial("p*(1-p)").unwrap());
    assert_eq!(entry("(s1,t2)"), parse_polynomial("(1-p)*p").unwrap());
    assert_eq!(entry("(s0,t2)"), parse_polynomial("p^2").unwrap());

    // b never synchronizes, frown belongs to component 2 alone
    let s1t2 = m.state_index("(s1,t2)").unwrap();
    let labels: Vec<&str> = m
        .enabled(s1t2)
        .into_iter()
        .map(|act| m.label(s1t2, act).unwrap())
        .collect();
    assert_eq!(labels, vec!["b"]);
    let s0t3 = m.state_index("(s0,t3)").unwrap();
    let mut labels: Vec<&str> = m
        .enabled(s0t3)
        .into_iter()
        .map(|act| m.label(s0t3, act).unwrap())
        .collect();
    labels.sort();
    assert_eq!(labels, vec!["b", "frown"]);
}

#[test]
fn composition_with_disjoint_singleton_interleaves() {
    let m = m1();
    let one = parse_ppa(
        "one",
        "ppa one\nalphabet z\nstates w\ninit w\ntrans w u z : w = 1\n",
    )
    .unwrap();
    let comp = parallel_compose(&m, &one).unwrap();
    // reachable part pairs m1's states with the single state
    let reach = comp.ppa.reachable();
    assert_eq!(reach.len(), m.states.len());
    for s in reach {
        let (_, s2) = comp.state_pair(s);
        assert_eq!(s2, 0);
    }
}

#[test]
fn composition_is_associative_up_to_renaming() {
    let a = parse_ppa(
        "a",
        "ppa a\nalphabet x s\nparams pa\nstates a0 a1\ninit a0\n\
         trans a0 u x : a0 = pa, a1 = 1-pa\ntrans a1 v s : a1 = 1\n",
    )
    .unwrap();
    let b = parse_ppa(
        "b",
        "ppa b\nalphabet s y\nstates b0 b1\ninit b0\n\
         trans b0 w s : b1 = 1\ntrans b1 r y : b1 = 1\n",
    )
    .unwrap();
    let c = parse_ppa(
        "c",
        "ppa c\nalphabet y z\nstates c0 c1\ninit c0\n\
         trans c0 e y : c1 = 1\ntrans c1 f z : c0 = 1/2, c1 = 1/2\n",
    )
    .unwrap();
    let left = parallel_compose(&parallel_compose(&a, &b).unwrap().ppa, &c).unwrap();
    let right = parallel_compose(&a, &parallel_compose(&b, &c).unwrap().ppa).unwrap();
    // canonical renaming produces isomorphic structures: compare the
    // serialized renumbered models modulo action naming by relabeling
    let (ln, _) = canonical_renumber(&left.ppa);
    let (rn, _) = canonical_renumber(&right.ppa);
    assert_eq!(ln.states.len(), rn.states.len());
    assert_eq!(ln.alphabet, rn.alphabet);
    // same reachable transition structure: compare label-indexed successor
    // multisets per renumbered state
    let shape = |m: &ppa_core::automata::Ppa| -> Vec<Vec<(String, Vec<(usize, String)>)>> {
        (0..m.states.len())
            .map(|s| {
                let mut rows: Vec<(String, Vec<(usize, String)>)> = m
                    .enabled(s)
                    .into_iter()
                    .map(|a| {
                        let lbl = m.label(s, a).unwrap().to_string();
                        let mut row: Vec<(usize, String)> = m
                            .distribution(s, a)
                            .unwrap()
                            .iter()
                            .map(|(t, p)| (t, p.to_string()))
                            .collect();
                        row.sort();
                        (lbl, row)
                    })
                    .collect();
                rows.sort();
                rows
            })
            .collect()
    };
    assert_eq!(shape(&ln), shape(&rn));
}

#[test]
fn action_alphabet_clash_is_rejected() {
    // component 2's action name collides with a non-shared label of
    // component 1, which would make composite pairs ambiguous
    let m1 = parse_ppa(
        "x1",
        "ppa x1\nalphabet lab\nstates s\ninit s\ntrans s go lab : s = 1\n",
    )
    .unwrap();
    let m2 = parse_ppa(
        "x2",
        "ppa x2\nalphabet other\nstates t\ninit t\ntrans t lab other : t = 1\n",
    )
    .unwrap();
    assert!(matches!(
        parallel_compose(&m1, &m2),
        Err(ModelError::ActionAlphabetClash(_))
    ));
}

#[test]
fn alphabet_extension_adds_self_loops_only() {
    let m = m2();
    let ext = alphabet_extend(&m, &["a".to_string(), "b".to_string()].into_iter().collect())
        .unwrap();
    // each of the 5 states gains exactly one b-labeled Dirac self-loop
    assert_eq!(ext.trans.len(), m.trans.len() + 5);
    for s in 0..ext.states.len() {
        let extra: Vec<usize> = ext
            .enabled(s)
            .into_iter()
            .filter(|a| ext.label(s, *a) == Some("b"))
            .collect();
        assert_eq!(extra.len(), 1);
        let d = ext.distribution(s, extra[0]).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.get(s).unwrap().as_constant().unwrap(), rat(1, 1));
    }
    // a-transitions unchanged
    let t0 = m.state_index("t0").unwrap();
    let a = m.action_index("a").unwrap();
    assert_eq!(ext.distribution(t0, a), m.distribution(t0, a));

    // subset extension is the identity
    let same = alphabet_extend(&m, &["a".to_string()].into_iter().collect()).unwrap();
    assert_eq!(same.trans, m.trans);

    // m1 extended by one fresh symbol gains 2 self-loops
    let m = m1();
    let ext = alphabet_extend(&m, &["d".to_string()].into_iter().collect()).unwrap();
    assert_eq!(ext.trans.len(), m.trans.len() + 2);
}

#[test]
fn tau_extension_adds_a_sink_with_loops() {
    let m = m1();
    let ext = tau_extend(&m);
    assert_eq!(ext.ppa.states.len(), 3);
    let s1 = ext.ppa.state_index("s1").unwrap();
    let labels: Vec<&str> = ext
        .ppa
        .enabled(s1)
        .into_iter()
        .map(|a| ext.ppa.label(s1, a).unwrap())
        .collect();
    assert_eq!(labels, vec!["b", "tau"]);

    // repeated extension picks distinct fresh symbols
    let twice = tau_extend(&ext.ppa);
    assert_eq!(twice.ppa.states.len(), 4);
    assert_ne!(twice.tau_symbol, ext.tau_symbol);

    // well-definedness transfers both ways
    let m = m2();
    let ext = tau_extend(&m);
    for v in [
        val(&[("p", rat(1, 10)), ("q", rat(1, 10))]),
        val(&[("p", rat(2, 1)), ("q", rat(1, 2))]),
    ] {
        assert_eq!(
            m.is_well_defined(&v).unwrap(),
            ext.ppa.is_well_defined(&v).unwrap()
        );
        assert_eq!(
            m.is_graph_preserving(&v).unwrap(),
            ext.ppa.is_graph_preserving(&v).unwrap()
        );
    }
}

#[test]
fn dfa_product_tracks_the_monitor() {
    let m = m2();
    let b = load_dfa("frown_only.dfa");
    let prod = dfa_product(&m, &b).unwrap();
    assert_eq!(prod.ppa.states.len(), 10);
    // bad states are exactly those paired with the accepting monitor state
    assert_eq!(prod.bad.len(), 5);
    for s in &prod.bad {
        let (_, q) = prod.state_pairs[*s];
        assert!(b.is_accepting(q));
    }
    // the first bad state is reached via a frown step from (t3, g0)
    let t3g0 = prod.ppa.state_index("(t3,g0)").unwrap();
    let frown_act = prod
        .ppa
        .enabled(t3g0)
        .into_iter()
        .find(|a| prod.ppa.label(t3g0, *a) == Some("frown"))
        .unwrap();
    let d = prod.ppa.distribution(t3g0, frown_act).unwrap();
    let (succ, _) = d.iter().next().unwrap();
    assert!(prod.bad.contains(&succ));

    // a DFA over unused symbols leaves the monitor fixed
    let unused = ppa_core::automata::parse_dfa(
        "unused",
        "dfa unused\nalphabet frown\nstates u0 u1\ninit u0\naccepting u1\n\
         edge u0 frown u1\nedge u1 frown u1\n",
    )
    .unwrap();
    let m1 = m1();
    let ext = alphabet_extend(&m1, &["frown".to_string()].into_iter().collect()).unwrap();
    // remove the frown self-loops so the symbol stays unused but declared
    let mut no_use = ext.clone();
    let frown_act = no_use.action_index("frown").unwrap();
    no_use.trans.retain(|(_, a), _| *a != frown_act);
    no_use.labels.retain(|(_, a), _| *a != frown_act);
    let prod = dfa_product(&no_use, &unused).unwrap();
    for ((s, a), _) in &prod.ppa.trans {
        for (succ, _) in prod.ppa.trans[&(*s, *a)].iter() {
            let (_, q) = prod.state_pairs[succ];
            let (_, q0) = prod.state_pairs[*s];
            assert_eq!(q, q0, "monitor must stay at its initial component");
        }
    }
}

#[test]
fn product_commutes_with_instantiation() {
    let m = m2();
    let b = load_dfa("frown_only.dfa");
    let v = val(&[("p", rat(1, 10)), ("q", rat(3, 10))]);
    let left = dfa_product(&m.instantiate(&v).unwrap(), &b).unwrap();
    let right_ppa = dfa_product(&m, &b).unwrap().ppa.instantiate(&v).unwrap();
    assert_eq!(left.ppa.trans, right_ppa.trans);
    assert_eq!(left.ppa.labels, right_ppa.labels);
}

#[test]
fn model_files_roundtrip() {
    for name in ["m1.ppa", "m2.ppa", "sender.ppa", "c2.ppa", "i1.ppa"] {
        let m = load_ppa(name);
        let text = serialize_ppa(&m);
        let again = parse_ppa(name, &text).unwrap();
        assert_eq!(m, again, "roundtrip failed for {name}");
    }
}
