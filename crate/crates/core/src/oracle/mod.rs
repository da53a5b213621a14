//! Independent ground truth: every vertex operator realized on power-sum
//! expansions over `ℚ(t)`, with coefficients read off as inner products.
//!
//! This path is slow and shares no code with the recurrences except the
//! partition types and the rational-function arithmetic. Words in `H_n`
//! also have a second expansion over products of one-row functions
//! ([`hall_littlewood_word_q`]) that reaches higher weights.

mod basis;
mod expansion;
mod operator;
mod qbasis;
mod relations;

pub use basis::{
    b_mu, basis_vector, hall_littlewood_word, inverse_z_t, max_degree_from_env, Basis, Oracle, DEFAULT_MAX_DEGREE,
};
pub use expansion::{inner, Form, PExpansion};
pub use operator::{apply_word, CoeffFn, Direction, OperatorSpec};
pub use qbasis::{hall_littlewood_word_q, QExpansion};
pub use relations::{verify_relations, RelationCheck, RelationConfig, Report};
