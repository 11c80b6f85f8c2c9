//! Hook-length statistics over `t`-regular partitions.
//!
//! The crate computes `b_{t,k}(n)`, the number of cells of hook length `k`
//! summed over all `t`-regular partitions of `n`, in two independent ways:
//! by walking Young diagrams ([`hook_gf::btk_enum`]) and by expanding
//! generating functions in a truncated power-series ring over big integers
//! ([`qseries::Series`]). On top of that it provides executable versions of
//! the partition sets and injections used to compare `b_{t,2}` against
//! `b_{t,1}` and `b_{t,3}`, exhaustive certificates for those injections,
//! and theorem-level sign checks over the decomposition series.

pub mod error;
pub mod hook_gf;
pub mod injections;
pub mod partition;
pub mod qseries;
pub mod report;
pub mod theorems;

pub use error::{Error, Result};
pub use hook_gf::{btk_enum, HookCount, Method, NamedSeries, SeriesCache, SeriesName};
pub use partition::{HookMultiset, Partition};
pub use qseries::Series;
