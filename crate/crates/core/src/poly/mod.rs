//! Exact arithmetic in `t`: Laurent polynomials over ℤ for every final
//! coefficient, and reduced rational functions over ℚ for the power-sum
//! oracle.

mod laurent;
mod ratfunc;

pub use laurent::LaurentPoly;
pub use ratfunc::{QPoly, RatFunc};
