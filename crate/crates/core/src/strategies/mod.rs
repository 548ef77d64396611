//! Strategies, path and strategy projection, fairness, enumeration.

mod enumerate;
mod fairness;
mod parse;
mod projection;
mod strategy;

pub use enumerate::{enumerate_memoryless_deterministic, for_each_effective_strategy, Completeness};
pub use fairness::{bottom_sccs, is_fair_memoryless, FairnessSpec};
pub use parse::{parse_strategy, serialize_strategy};
pub use projection::{lift_paths, project_path, project_strategy, Projector};
pub use strategy::{path_probability, Fallback, Strategy, StrategyInfo};
