//! Exact counting: closed forms, exhaustive enumeration of `S_n` and `B_n`,
//! distribution tables, and truncated bivariate power series.

pub mod distribution;
pub mod enumerate;
pub mod numbers;
pub mod series;

pub use distribution::{distribution, DistributionTable};
pub use enumerate::{EnumOptions, Family};
