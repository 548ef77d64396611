//! Error types shared across the toolkit.

use thiserror::Error;

use crate::algebra::{LinSolveError, PolyParseError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("parameter `{0}` is unassigned")]
    MissingParameter(String),
    #[error("denominator vanishes at the given valuation")]
    DenominatorVanishes,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("model has no states, so no initial state")]
    NoInitialState,
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("unknown action `{0}`")]
    UnknownAction(String),
    #[error("transition from `{state}` via `{action}` targets undeclared state `{succ}`")]
    DanglingSuccessor { state: String, action: String, succ: String },
    #[error("label `{0}` is not in the declared alphabet")]
    LabelOutsideAlphabet(String),
    #[error("action names clash with alphabet symbols: {0}")]
    ActionAlphabetClash(String),
    #[error("DFA alphabet is not contained in the model alphabet: missing {0}")]
    AlphabetNotContained(String),
    #[error("DFA is not complete: no edge from `{state}` on `{symbol}`")]
    DfaIncomplete { state: String, symbol: String },
    #[error("DFA accepting state `{0}` is not absorbing")]
    DfaAcceptingNotAbsorbing(String),
    #[error("parameter `{0}` is unassigned")]
    MissingParameter(String),
}

impl From<AlgebraError> for ModelError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::MissingParameter(p) => ModelError::MissingParameter(p),
            AlgebraError::DenominatorVanishes => unreachable!("polynomials only"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StrategyError {
    #[error("strategy is not memoryless")]
    NotMemoryless,
    #[error("strategy is not complete")]
    NotComplete,
    #[error("horizon {horizon} is smaller than the path length {needed}")]
    HorizonTooSmall { horizon: usize, needed: usize },
    #[error("strategy assigns mass to disabled action `{action}` at `{at}`")]
    DisabledAction { action: String, at: String },
    #[error("strategy masses at `{0}` exceed one")]
    MassExceedsOne(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemanticsError {
    #[error("valuation is not well-defined for the model")]
    NotWellDefined,
    #[error("model must be parameter-free")]
    NotParameterFree,
    #[error("reward function is negative at the given valuation on symbol `{0}`")]
    NegativeReward(String),
    #[error("region is not well-defined at sample {0}")]
    RegionNotWellDefined(String),
    #[error("region is not graph-preserving at sample {0}")]
    RegionNotGraphPreserving(String),
    #[error("alphabet side condition violated: {0}")]
    AlphabetSideConditionViolated(String),
    #[error("interleaved components share symbols: {0}")]
    ComponentsNotDisjoint(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Strategy(#[from] StrategyError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("singular linear system: {0}")]
    Singular(#[from] LinSolveError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("rule misuse: {0}")]
    RuleMisuse(String),
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{file}:{line}: {msg}")]
    Syntax { file: String, line: usize, msg: String },
    #[error("{file}:{line}: {err}")]
    Poly { file: String, line: usize, err: PolyParseError },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Strategy(#[from] StrategyError),
    #[error("io error on {file}: {err}")]
    Io { file: String, err: String },
}

impl FormatError {
    pub fn syntax(file: &str, line: usize, msg: impl Into<String>) -> Self {
        FormatError::Syntax { file: file.to_string(), line, msg: msg.into() }
    }
}
