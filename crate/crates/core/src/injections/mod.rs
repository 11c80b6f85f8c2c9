//! Partition families, the injections between them, and exhaustive
//! certificates that those injections behave as claimed.
//!
//! The families split into two groups:
//!
//! * `O_t`, `R_t` and their subsets `O^1..O^5`, `R^1..R^4` compare
//!   `b_{t,2}` with `b_{t,1}`; [`maps::phi_total`] sends `O^1..O^4` into
//!   `R^1..R^4`.
//! * `A_t`, `S_t`, `B_t`, `C_t`, `D_1`, `D_2` compare `b_{t,2}` with
//!   `b_{t,3}`; [`maps::gamma`], [`maps::epsilon`] and [`maps::tau`] are the
//!   injections.
//!
//! Every map checks only the local conditions its formula needs. Which
//! subset a partition belongs to is decided by the classifiers in
//! [`families`], and [`verify::verify_injection`] enumerates each domain from
//! those classifiers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub mod families;
pub mod maps;
pub mod verify;

pub use families::{classify_a, classify_o, classify_r, classify_s, Classification};
pub use maps::{o5_weight_bound, MapId};
pub use verify::{verify_injection, VerificationReport, Violation, ViolationKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    O,
    R,
    A,
    S,
    B,
    C,
    D1,
    D2,
}

impl Family {
    /// Largest subset index for indexed families.
    fn max_index(self) -> Option<u8> {
        match self {
            Family::O => Some(5),
            Family::R => Some(4),
            Family::A | Family::S => Some(3),
            _ => None,
        }
    }
}

/// A named subset such as `O^3` or `B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubsetLabel {
    family: Family,
    index: Option<u8>,
}

impl SubsetLabel {
    pub fn new(family: Family, index: Option<u8>) -> Result<Self> {
        let ok = match (family.max_index(), index) {
            (Some(max), Some(i)) => (1..=max).contains(&i),
            (None, None) => true,
            _ => false,
        };
        if !ok {
            return Err(Error::Unsupported(format!(
                "{family:?} does not take subset index {index:?}"
            )));
        }
        Ok(Self { family, index })
    }

    pub(crate) const fn indexed(family: Family, index: u8) -> Self {
        Self {
            family,
            index: Some(index),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn index(&self) -> Option<u8> {
        self.index
    }
}

impl fmt::Display for SubsetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(i) => write!(f, "{:?}^{i}", self.family),
            None => write!(f, "{:?}", self.family),
        }
    }
}

/// Which branch of a piecewise map fired. Case numbering follows the
/// definitions in [`maps`]: `phi2` has cases 1 (`x ≠ 0`) and 2 (`x = 0`),
/// `epsilon` has 1 (`λ₁ ≥ 3`) and 2 (`λ₁ = 1`), `tau` and `eta` have 1–4,
/// `gamma` reports the `A` subset index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InjectionCase {
    pub map: MapId,
    pub case: Option<u8>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_validate_index() {
        assert!(SubsetLabel::new(Family::O, Some(5)).is_ok());
        assert!(SubsetLabel::new(Family::O, Some(6)).is_err());
        assert!(SubsetLabel::new(Family::R, Some(0)).is_err());
        assert!(SubsetLabel::new(Family::B, None).is_ok());
        assert!(SubsetLabel::new(Family::B, Some(1)).is_err());
        assert!(SubsetLabel::new(Family::A, None).is_err());
        assert_eq!(SubsetLabel::indexed(Family::R, 3).to_string(), "R^3");
        assert_eq!(
            SubsetLabel::new(Family::D2, None).unwrap().to_string(),
            "D2"
        );
    }
}
