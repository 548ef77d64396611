//! Objectives, multi-objective queries, satisfaction at valuations and over
//! regions, and assume-guarantee triples.

mod arena;
mod objective;
mod satisfy;

pub use arena::{build_arena, eval_query, Arena, ObjectiveValue};
pub use objective::{
    parse_class, parse_mo_query, parse_objective, parse_region, AgTriple, Cmp, MoQuery,
    Objective, ObjectivePayload, StrategyClass,
};
pub use satisfy::{check_ag_triple, check_objective, region_sat, LoopOrder};
