//! Objective and query types plus their text grammars.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{parse_rational, Region};
use crate::automata::{Dfa, Ppa};
use crate::error::FormatError;
use crate::semantics::RewardFunction;
use crate::strategies::FairnessSpec;
use crate::Rat;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Cmp {
    Lt,
    Le,
    Gt,
    Ge,
}

impl Cmp {
    pub fn holds(&self, lhs: &Rat, rhs: &Rat) -> bool {
        match self {
            Cmp::Lt => lhs < rhs,
            Cmp::Le => lhs <= rhs,
            Cmp::Gt => lhs > rhs,
            Cmp::Ge => lhs >= rhs,
        }
    }

    /// Comparison against an infinite left-hand side.
    pub fn holds_infinite(&self) -> bool {
        matches!(self, Cmp::Gt | Cmp::Ge)
    }
}

impl fmt::Display for Cmp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Cmp::Lt => "<",
            Cmp::Le => "<=",
            Cmp::Gt => ">",
            Cmp::Ge => ">=",
        };
        write!(f, "{s}")
    }
}

/// What an objective measures.
#[derive(Clone, Debug)]
pub enum ObjectivePayload {
    /// Safety language via its bad-prefix DFA: measure `1 - Pr(reach bad)`.
    Safety(Dfa),
    /// Reachability of accepting DFA states: measure `Pr(reach acc)`.
    Reach(Dfa),
    /// Expected total reward.
    Reward(RewardFunction),
}

impl ObjectivePayload {
    pub fn alphabet(&self) -> &BTreeSet<String> {
        match self {
            ObjectivePayload::Safety(d) | ObjectivePayload::Reach(d) => &d.alphabet,
            ObjectivePayload::Reward(r) => &r.alphabet,
        }
    }

    pub fn name(&self) -> &str {
        match self {
            ObjectivePayload::Safety(d) | ObjectivePayload::Reach(d) => &d.name,
            ObjectivePayload::Reward(r) => &r.name,
        }
    }
}

/// A probabilistic or reward objective with comparison and threshold.
#[derive(Clone, Debug)]
pub struct Objective {
    pub payload: ObjectivePayload,
    pub cmp: Cmp,
    pub threshold: Rat,
    /// The payload reference as written in the source text (file path).
    pub source: String,
}

impl Objective {
    pub fn is_probabilistic(&self) -> bool {
        !matches!(self.payload, ObjectivePayload::Reward(_))
    }

    /// Safety objectives are lower-bounded probabilistic objectives on a
    /// prefix-closed (bad-prefix DFA) language.
    pub fn is_safety(&self) -> bool {
        matches!(self.payload, ObjectivePayload::Safety(_)) && matches!(self.cmp, Cmp::Ge)
    }

    pub fn validate(&self) -> Result<(), FormatError> {
        if self.is_probabilistic() {
            if self.threshold < Rat::zero() || self.threshold > Rat::one() {
                return Err(FormatError::syntax(
                    "<objective>",
                    1,
                    format!("probability threshold {} outside [0,1]", self.threshold),
                ));
            }
        } else if self.threshold < Rat::zero() {
            return Err(FormatError::syntax(
                "<objective>",
                1,
                format!("reward threshold {} is negative", self.threshold),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.payload {
            ObjectivePayload::Safety(_) => {
                write!(f, "P{}{} SAFE({})", self.cmp, self.threshold, self.source)
            }
            ObjectivePayload::Reach(_) => {
                write!(f, "P{}{} REACH({})", self.cmp, self.threshold, self.source)
            }
            ObjectivePayload::Reward(_) => {
                write!(f, "E{}{} REW({})", self.cmp, self.threshold, self.source)
            }
        }
    }
}

/// Conjunction of objectives.
#[derive(Clone, Debug, Default)]
pub struct MoQuery {
    pub objectives: Vec<Objective>,
}

impl MoQuery {
    pub fn empty() -> Self {
        MoQuery::default()
    }

    pub fn single(o: Objective) -> Self {
        MoQuery { objectives: vec![o] }
    }

    pub fn is_empty(&self) -> bool {
        self.objectives.is_empty()
    }

    /// Union alphabet of the member objectives.
    pub fn alphabet(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for o in &self.objectives {
            out.extend(o.payload.alphabet().iter().cloned());
        }
        out
    }

    /// Conjunction: set union of member objectives.
    pub fn and(&self, other: &MoQuery) -> MoQuery {
        let mut objectives = self.objectives.clone();
        objectives.extend(other.objectives.iter().cloned());
        MoQuery { objectives }
    }

    /// Safe mo-queries have only safety members.
    pub fn is_safe(&self) -> bool {
        self.objectives.iter().all(|o| o.is_safety())
    }
}

impl fmt::Display for MoQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.objectives.is_empty() {
            return write!(f, "TRUE");
        }
        let parts: Vec<String> = self.objectives.iter().map(|o| o.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Strategy class for region-level quantification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrategyClass {
    Cmp,
    Prt,
    Fair(FairnessSpec),
}

impl fmt::Display for StrategyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StrategyClass::Cmp => write!(f, "cmp"),
            StrategyClass::Prt => write!(f, "prt"),
            StrategyClass::Fair(spec) => write!(f, "fair({spec})"),
        }
    }
}

/// Assume-guarantee obligation: on every sampled valuation of the region,
/// every witness-class strategy satisfying the assumption satisfies the
/// guarantee.
#[derive(Clone, Debug)]
pub struct AgTriple {
    pub model: Ppa,
    pub region: Region,
    pub class: StrategyClass,
    pub assumption: MoQuery,
    pub guarantee: MoQuery,
}

/// Resolves a payload reference (file path) to a DFA or reward function.
pub trait PayloadResolver {
    fn dfa(&mut self, path: &str) -> Result<Dfa, FormatError>;
    fn reward(&mut self, path: &str) -> Result<RewardFunction, FormatError>;
}

impl<F, G> PayloadResolver for (F, G)
where
    F: FnMut(&str) -> Result<Dfa, FormatError>,
    G: FnMut(&str) -> Result<RewardFunction, FormatError>,
{
    fn dfa(&mut self, path: &str) -> Result<Dfa, FormatError> {
        (self.0)(path)
    }
    fn reward(&mut self, path: &str) -> Result<RewardFunction, FormatError> {
        (self.1)(path)
    }
}

/// Grammar: `P>=9/10 SAFE(la.dfa)`, `P<1/10 REACH(good.dfa)`,
/// `E<=2 REW(rewards.rew)`.
pub fn parse_objective(
    src: &str,
    resolver: &mut dyn PayloadResolver,
) -> Result<Objective, FormatError> {
    let src = src.trim();
    let bail = |msg: String| FormatError::syntax("<objective>", 1, msg);
    let (head, rest) = src
        .split_once(char::is_whitespace)
        .ok_or_else(|| bail(format!("missing payload in objective `{src}`")))?;
    let kind_char = head
        .chars()
        .next()
        .ok_or_else(|| bail("empty objective".to_string()))?;
    let cmp_part = &head[1..];
    let (cmp, thr_src) = if let Some(r) = cmp_part.strip_prefix(">=") {
        (Cmp::Ge, r)
    } else if let Some(r) = cmp_part.strip_prefix("<=") {
        (Cmp::Le, r)
    } else if let Some(r) = cmp_part.strip_prefix('>') {
        (Cmp::Gt, r)
    } else if let Some(r) = cmp_part.strip_prefix('<') {
        (Cmp::Lt, r)
    } else {
        return Err(bail(format!("missing comparison in `{head}`")));
    };
    let threshold = parse_rational(thr_src).map_err(|err| FormatError::Poly {
        file: "<objective>".to_string(),
        line: 1,
        err,
    })?;
    let rest = rest.trim();
    let (ctor, inner) = if let Some(r) = rest.strip_prefix("SAFE(") {
        ("SAFE", r)
    } else if let Some(r) = rest.strip_prefix("REACH(") {
        ("REACH", r)
    } else if let Some(r) = rest.strip_prefix("REW(") {
        ("REW", r)
    } else {
        return Err(bail(format!(
            "expected SAFE(...), REACH(...) or REW(...), found `{rest}`"
        )));
    };
    let path = inner
        .strip_suffix(')')
        .ok_or_else(|| bail("missing `)` in objective payload".to_string()))?;
    let payload = match (kind_char, ctor) {
        ('P', "SAFE") => ObjectivePayload::Safety(resolver.dfa(path)?),
        ('P', "REACH") => ObjectivePayload::Reach(resolver.dfa(path)?),
        ('E', "REW") => ObjectivePayload::Reward(resolver.reward(path)?),
        _ => {
            return Err(bail(format!(
                "objective head `{kind_char}` does not match payload `{ctor}`"
            )))
        }
    };
    let o = Objective { payload, cmp, threshold, source: path.to_string() };
    o.validate()?;
    Ok(o)
}

/// `;`-separated objectives; an empty string is the trivial query.
pub fn parse_mo_query(
    src: &str,
    resolver: &mut dyn PayloadResolver,
) -> Result<MoQuery, FormatError> {
    let mut objectives = Vec::new();
    for part in src.split(';') {
        let part = part.trim();
        if part.is_empty() || part == "TRUE" {
            continue;
        }
        objectives.push(parse_objective(part, resolver)?);
    }
    Ok(MoQuery { objectives })
}

/// Grammar: `p:[0,1/10];q:[0,1]`.
pub fn parse_region(src: &str) -> Result<Region, FormatError> {
    let mut region = Region::new();
    for part in src.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let bail = |msg: String| FormatError::syntax("<region>", 1, msg);
        let (name, range) = part
            .split_once(':')
            .ok_or_else(|| bail(format!("expected `param:[lo,hi]`, found `{part}`")))?;
        let range = range.trim();
        let inner = range
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| bail(format!("expected `[lo,hi]`, found `{range}`")))?;
        let (lo, hi) = inner
            .split_once(',')
            .ok_or_else(|| bail(format!("expected `lo,hi`, found `{inner}`")))?;
        let lo = parse_rational(lo.trim()).map_err(|err| FormatError::Poly {
            file: "<region>".to_string(),
            line: 1,
            err,
        })?;
        let hi = parse_rational(hi.trim()).map_err(|err| FormatError::Poly {
            file: "<region>".to_string(),
            line: 1,
            err,
        })?;
        if lo > hi {
            return Err(bail(format!("empty interval for `{}`", name.trim())));
        }
        region = region.with_bound(name.trim(), lo, hi);
    }
    Ok(region)
}

/// Grammar: `cmp | prt | fair(a,c;b)`.
pub fn parse_class(src: &str) -> Result<StrategyClass, FormatError> {
    let src = src.trim();
    match src {
        "cmp" => Ok(StrategyClass::Cmp),
        "prt" => Ok(StrategyClass::Prt),
        _ => {
            if let Some(inner) = src.strip_prefix("fair(").and_then(|r| r.strip_suffix(')')) {
                let spec = FairnessSpec::parse(inner).ok_or_else(|| {
                    FormatError::syntax("<class>", 1, format!("bad fairness spec `{inner}`"))
                })?;
                Ok(StrategyClass::Fair(spec))
            } else {
                Err(FormatError::syntax(
                    "<class>",
                    1,
                    format!("expected cmp|prt|fair(...), found `{src}`"),
                ))
            }
        }
    }
}
