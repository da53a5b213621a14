//! Exact computation of spin Kostka polynomials `K⁻_{ξμ}(t)`, Stembridge
//! coefficients `b_{ξλ}` / `g_{ξλ}` and Kostka–Foulkes polynomials
//! `K_{λμ}(t)`.
//!
//! The fast path is a memoized recurrence built from vertex-operator
//! commutation relations ([`engine`], [`schur`]). An independent, slower
//! path realizes every vertex operator on power-sum expansions over `ℚ(t)`
//! and reads coefficients off as inner products ([`oracle`]).
//!
//! ```
//! use spin_kostka::{partition, strict, SpinKostkaEngine};
//!
//! let engine = SpinKostkaEngine::new();
//! let k = engine.spin_kostka(&strict![3, 1], &partition![2, 2]);
//! assert_eq!(k.to_string(), "4*t + 4");
//! ```

pub mod cli;
pub mod combinatorics;
pub mod engine;
pub mod error;
pub mod oracle;
pub mod poly;
pub mod schur;
pub mod straighten;

pub use combinatorics::{dominates, IntVector, Partition, StrictPartition};
pub use engine::SpinKostkaEngine;
pub use error::{Error, Result};
pub use poly::{LaurentPoly, RatFunc};
pub use schur::SchurExpansion;
