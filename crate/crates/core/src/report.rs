//! Deterministic line-oriented verdict and certificate reports.

use std::fmt;

/// Outcome of a satisfaction check over sampled valuations and the
/// enumerated witness strategy class.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// Every sampled valuation and witness strategy satisfied the query.
    HoldsOnSamples,
    /// A counterexample was found.
    Violated,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::HoldsOnSamples => write!(f, "HOLDS-ON-SAMPLES"),
            Verdict::Violated => write!(f, "VIOLATED"),
        }
    }
}

/// A counterexample: the sampled valuation, the strategy (rendered as
/// state:action pairs), and what failed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub sample: String,
    pub strategy: String,
    pub detail: String,
}

/// Replayable record of one satisfaction check.
#[derive(Clone, Debug)]
pub struct VerdictRecord {
    pub kind: &'static str,
    pub verdict: Verdict,
    /// For triples: the assumption was never satisfied on any sample.
    pub vacuous: bool,
    pub model: String,
    pub region: String,
    pub class: String,
    pub query: String,
    pub grid: u32,
    pub seed: u64,
    pub samples: usize,
    pub strategies: usize,
    /// Additional key-value lines (per-objective extremes and the like).
    pub extra: Vec<(String, String)>,
    pub witness: Option<Witness>,
}

impl VerdictRecord {
    pub fn holds(&self) -> bool {
        matches!(self.verdict, Verdict::HoldsOnSamples)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("verdict {}\n", self.verdict));
        if self.vacuous {
            out.push_str("vacuous true\n");
        }
        out.push_str(&format!("kind {}\n", self.kind));
        out.push_str(&format!("model {}\n", self.model));
        out.push_str(&format!("region {}\n", self.region));
        out.push_str(&format!("class {}\n", self.class));
        out.push_str(&format!("query {}\n", self.query));
        out.push_str(&format!("grid {}\n", self.grid));
        out.push_str(&format!("seed {}\n", self.seed));
        out.push_str(&format!("samples {}\n", self.samples));
        out.push_str(&format!("strategies {}\n", self.strategies));
        for (k, v) in &self.extra {
            out.push_str(&format!("{k} {v}\n"));
        }
        if let Some(w) = &self.witness {
            out.push_str(&format!("witness-sample {}\n", w.sample));
            out.push_str(&format!("witness-strategy {}\n", w.strategy));
            out.push_str(&format!("witness-detail {}\n", w.detail));
        }
        out
    }
}
