//! Exact arithmetic: multivariate polynomials, valuations, rational
//! functions, rectangular regions and grid sampling.

mod linsolve;
mod parse;
mod poly;
mod ratfn;
mod region;
mod valuation;

pub use linsolve::{solve_linear_system, LinSolveError};
pub use parse::{parse_polynomial, parse_rational, PolyParseError};
pub use poly::{Monomial, Polynomial};
pub use ratfn::RationalFunction;
pub use region::{Interval, Region};
pub use valuation::Valuation;
