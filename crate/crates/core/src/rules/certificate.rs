//! Machine-checkable certificates: the premises, side conditions and
//! conclusion of one rule application, with enough material embedded to
//! replay every check.

use std::fmt;

use crate::algebra::Region;
use crate::automata::Ppa;
use crate::objectives::{MoQuery, StrategyClass};
use crate::report::VerdictRecord;

use super::monotone::{Direction, MonotoneTarget};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CertStatus {
    /// All premises hold and side conditions pass.
    Justified,
    /// Justified because the conclusion region is empty.
    Vacuous,
    /// Some premise verdict failed; its counterexample is embedded.
    PremiseFailed,
}

impl CertStatus {
    pub fn is_justified(&self) -> bool {
        matches!(self, CertStatus::Justified | CertStatus::Vacuous)
    }
}

impl fmt::Display for CertStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertStatus::Justified => write!(f, "JUSTIFIED"),
            CertStatus::Vacuous => write!(f, "VACUOUS"),
            CertStatus::PremiseFailed => write!(f, "PREMISE-FAILED"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SideCondition {
    pub name: String,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct Premise {
    pub description: String,
    pub record: VerdictRecord,
}

/// The statement a justified certificate entitles, with the composed model
/// embedded so it can be re-verified monolithically. `region` is `None`
/// when the premise regions intersect to the empty set.
#[derive(Clone, Debug)]
pub enum Conclusion {
    RegionSat {
        model: Ppa,
        region: Option<Region>,
        class: StrategyClass,
        query: MoQuery,
    },
    Triple {
        model: Ppa,
        region: Option<Region>,
        class: StrategyClass,
        assumption: MoQuery,
        guarantee: MoQuery,
    },
    Monotone {
        model: Ppa,
        region: Option<Region>,
        class: StrategyClass,
        param: String,
        direction: Direction,
        target: MonotoneTarget,
    },
}

impl Conclusion {
    pub fn is_empty_region(&self) -> bool {
        match self {
            Conclusion::RegionSat { region, .. }
            | Conclusion::Triple { region, .. }
            | Conclusion::Monotone { region, .. } => region.is_none(),
        }
    }

    pub fn describe(&self) -> String {
        let region_str = |r: &Option<Region>| match r {
            None => "EMPTY".to_string(),
            Some(r) => r.to_string(),
        };
        match self {
            Conclusion::RegionSat { model, region, class, query } => format!(
                "{} , {} |={} {}",
                model.name,
                region_str(region),
                class,
                query
            ),
            Conclusion::Triple { model, region, class, assumption, guarantee } => format!(
                "<{}> {} , {} |={} <{}>",
                assumption,
                model.name,
                region_str(region),
                class,
                guarantee
            ),
            Conclusion::Monotone { model, region, class, param, direction, target } => format!(
                "{} monotone {} in {} on {} over {} for {}",
                model.name,
                direction,
                param,
                region_str(region),
                class,
                target
            ),
        }
    }
}

/// Certificate of one rule application.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub rule: &'static str,
    pub status: CertStatus,
    pub side_conditions: Vec<SideCondition>,
    pub premises: Vec<Premise>,
    pub conclusion: Conclusion,
    pub grid: u32,
    pub seed: u64,
}

impl Certificate {
    pub fn is_justified(&self) -> bool {
        self.status.is_justified()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("certificate {}\n", self.rule));
        out.push_str(&format!("status {}\n", self.status));
        out.push_str(&format!("grid {}\n", self.grid));
        out.push_str(&format!("seed {}\n", self.seed));
        for sc in &self.side_conditions {
            out.push_str(&format!("side-condition {} ok {}\n", sc.name, sc.detail));
        }
        for (k, p) in self.premises.iter().enumerate() {
            out.push_str(&format!("premise {} {}\n", k + 1, p.description));
            for line in p.record.render().lines() {
                out.push_str(&format!("  {line}\n"));
            }
        }
        out.push_str(&format!("conclusion {}\n", self.conclusion.describe()));
        out
    }

    /// Justified when every premise verdict holds (and trivially on an
    /// empty conclusion region).
    pub fn status_from(premises: &[Premise], conclusion: &Conclusion) -> CertStatus {
        if premises.iter().any(|p| !p.record.holds()) {
            CertStatus::PremiseFailed
        } else if conclusion.is_empty_region() {
            CertStatus::Vacuous
        } else {
            CertStatus::Justified
        }
    }
}
