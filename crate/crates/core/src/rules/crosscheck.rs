//! Monolithic re-verification of compositional conclusions. A justified
//! certificate whose conclusion fails the direct check would expose a
//! soundness bug; the paper's theorems guarantee this never happens.

use std::fmt;

use crate::error::SemanticsError;
use crate::objectives::{check_ag_triple, region_sat, AgTriple, LoopOrder};
use crate::report::VerdictRecord;

use super::certificate::{Certificate, Conclusion};
use super::monotone::check_monotone;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Agreement {
    Agree,
    SoundnessBug,
}

impl fmt::Display for Agreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Agreement::Agree => write!(f, "AGREE"),
            Agreement::SoundnessBug => write!(f, "SOUNDNESS-BUG"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct AgreementReport {
    pub status: Agreement,
    pub detail: String,
    /// The monolithic verdict, when one was computed (non-empty region).
    pub record: Option<VerdictRecord>,
}

impl AgreementReport {
    pub fn render(&self) -> String {
        let mut out = format!("cross-check {}\n", self.status);
        out.push_str(&format!("detail {}\n", self.detail));
        if let Some(r) = &self.record {
            for line in r.render().lines() {
                out.push_str(&format!("  {line}\n"));
            }
        }
        out
    }
}

/// Re-verifies the conclusion of a justified certificate directly on the
/// composed model with the same grid and seed.
pub fn cross_check(cert: &Certificate) -> Result<AgreementReport, SemanticsError> {
    if !cert.is_justified() {
        return Err(SemanticsError::RuleMisuse(
            "cross-check requires a justified certificate".to_string(),
        ));
    }
    let (grid, seed) = (cert.grid, cert.seed);
    let record = match &cert.conclusion {
        Conclusion::RegionSat { model, region, class, query } => match region {
            None => None,
            Some(r) => Some(region_sat(
                model,
                r,
                class,
                query,
                grid,
                seed,
                LoopOrder::StrategiesOuter,
            )?),
        },
        Conclusion::Triple { model, region, class, assumption, guarantee } => match region {
            None => None,
            Some(r) => Some(check_ag_triple(
                &AgTriple {
                    model: model.clone(),
                    region: r.clone(),
                    class: class.clone(),
                    assumption: assumption.clone(),
                    guarantee: guarantee.clone(),
                },
                grid,
                seed,
                LoopOrder::StrategiesOuter,
            )?),
        },
        Conclusion::Monotone { model, region, class, param, direction, target } => match region {
            None => None,
            Some(r) => Some(check_monotone(
                model, r, param, *direction, class, target, grid, seed,
            )?),
        },
    };
    let report = match &record {
        None => AgreementReport {
            status: Agreement::Agree,
            detail: "empty conclusion region; trivially agrees".to_string(),
            record: None,
        },
        Some(rec) => {
            if rec.holds() {
                AgreementReport {
                    status: Agreement::Agree,
                    detail: "monolithic verdict matches the compositional conclusion".to_string(),
                    record: record.clone(),
                }
            } else {
                let wit = rec
                    .witness
                    .as_ref()
                    .map(|w| format!("{} under {}", w.sample, w.strategy))
                    .unwrap_or_default();
                AgreementReport {
                    status: Agreement::SoundnessBug,
                    detail: format!("monolithic check found a counterexample: {wit}"),
                    record: record.clone(),
                }
            }
        }
    };
    Ok(report)
}
