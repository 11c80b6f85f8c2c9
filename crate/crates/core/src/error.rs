use thiserror::Error;

use crate::partition::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus t must be at least 2, got {0}")]
    InvalidModulus(u32),

    #[error("hook length k must be at least 1, got {0}")]
    InvalidHookLength(u32),

    #[error("{what} must be at least 1, got {got}")]
    NonPositive { what: &'static str, got: u32 },

    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("{sub} is not a sub-multiset of {whole}")]
    NotSubmultiset { whole: Partition, sub: Partition },

    #[error("series constant term {0} is not a unit")]
    NonUnitConstant(String),

    #[error("{map}: {reason} (input {input})")]
    Precondition {
        map: &'static str,
        input: Partition,
        reason: String,
    },

    #[error("{map}: input {input} lies in O^5, outside the domain of the combined injection")]
    OutsideDomain { map: &'static str, input: Partition },

    #[error("{0}")]
    Unsupported(String),
}

pub(crate) fn check_modulus(t: u32) -> Result<()> {
    if t < 2 {
        return Err(Error::InvalidModulus(t));
    }
    Ok(())
}
