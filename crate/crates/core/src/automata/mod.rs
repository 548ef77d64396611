//! The pPA model: validation, instantiation, parallel composition, alphabet
//! and sink extensions, DFAs and the bad-prefix product.

mod compose;
mod dfa;
mod dot;
mod parse;
mod path;
mod ppa;

pub use compose::{
    alphabet_extend, dfa_product, parallel_compose, tau_extend, ComposedMeta, Composition,
    CompositeAction, Product, TauExtension,
};
pub use dfa::Dfa;
pub use dot::{dfa_to_dot, ppa_to_dot};
pub use parse::{parse_dfa, parse_ppa, serialize_dfa, serialize_ppa};
pub use path::FinitePath;
pub use ppa::{canonical_renumber, Ppa, ParametricDistribution, ValidationReport};
