//! Partitions, strict partitions, integer vectors and the statistics, orders
//! and t-brackets built on them.

mod brackets;
mod compositions;
mod partition;
mod shape;
mod stats;
mod strips;

pub use brackets::{t_binomial, t_bracket, t_double_factorial, t_factorial, t_int, TBracket};
pub use compositions::{weak_compositions, WeakComposition, WeakCompositions};
pub use partition::{dominates, IntVector, Partition, StrictPartition};
pub use shape::{classify_shape, ShapeClass, ShapeKind};
pub use stats::{n_stat, parity, partition_stats, z_lambda, z_lambda_t, PartitionStats};
pub use strips::vertical_strip_subshapes;
