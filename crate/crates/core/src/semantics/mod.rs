//! Probability measures on paths, language probabilities via DFA products,
//! expected total rewards, and closed-form solution functions.

mod chain;
mod prob;
mod reward;
mod rewfile;
mod solution;

pub use chain::{induced_chain, reach_values, Chain};
pub use prob::{
    extremal_language_prob, finite_path_prob, language_prob_reach, language_prob_safety,
    language_prob_safety_with_contrast, Extremal,
};
pub use reward::{expected_total_reward, expected_total_reward_chain, RewardFunction, RewardValue};
pub use rewfile::{parse_reward, serialize_reward};
pub use solution::{
    check_probability_bounds, lift_memoryless_to_product, solution_function,
    solution_function_product, SolutionFunction, SolutionKind, SolutionTarget,
};
