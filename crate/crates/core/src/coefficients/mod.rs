//! Exact arithmetic in Q(q), q-numbers and q-binomials.

mod laurent;
mod parse;
mod qnum;
mod ratfunc;

pub use laurent::LaurentPoly;
pub use parse::{parse_scalar, ParseError};
pub use qnum::{q_binomial, q_number};
pub use ratfunc::ScalarQ;
