//! Verification toolkit for parametric probabilistic automata (pPA).
//!
//! Core pieces:
//! - exact multivariate polynomial / rational-function arithmetic ([`algebra`]),
//! - the pPA model with parallel composition, alphabet and sink extensions,
//!   and the bad-prefix DFA product ([`automata`]),
//! - strategies, path and strategy projection, fairness ([`strategies`]),
//! - exact probability / expected-reward computation and closed-form
//!   solution functions ([`semantics`]),
//! - objectives, multi-objective queries, region satisfaction and
//!   assume-guarantee triples ([`objectives`]),
//! - the assume-guarantee rule engine with certificates and monolithic
//!   cross-checks ([`rules`]).
//!
//! All verification runs on arbitrary-precision rationals; the algebra layer
//! itself is generic over a scalar type (see [`scalar`]).

pub mod algebra;
pub mod automata;
pub mod error;
pub mod objectives;
pub mod report;
pub mod rules;
pub mod scalar;
pub mod semantics;
pub mod strategies;

use num::BigInt;

/// Exact rational scalar used by the whole toolkit.
pub type Rat = num::BigRational;

/// Concrete polynomial over [`Rat`].
pub type Poly = algebra::Polynomial<Rat>;

/// Concrete rational function over [`Rat`].
pub type RatFn = algebra::RationalFunction<Rat>;

/// Concrete valuation over [`Rat`].
pub type Valuation = algebra::Valuation<Rat>;

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}
