//! Exact computation of the Fine-to-Catalan invert-transform tower
//! `f_0..f_4`, the coloured-hill Catalan triangles `g_1..g_4`, and a
//! registry of binomial identities checked against brute-force oracles.
//!
//! * [`sequence`], [`triangle`], [`series`]: the transform machinery
//!   (invert transform, convolution triangles, Pascal-matrix powers,
//!   truncated power series).
//! * [`closedforms`]: explicit formulas for every triangle and sequence.
//! * [`oracle`]: exhaustive enumeration of the underlying combinatorial objects.
//! * [`identities`]: named identity checks with verdict reports.

pub mod arith;
pub mod closedforms;
mod error;
pub mod identities;
pub mod oracle;
pub mod sequence;
pub mod series;
pub mod triangle;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use sequence::{catalan, catalan_prefix, fine_sequence, invert_transform, Sequence, Tower};
pub use series::{series_power_coefficient, SeriesPoly};
pub use triangle::{convolution_triangle, pascal_power, triangle_times_pascal_power, PascalPower, Triangle};
