//! Quality categories assigned to machined features.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Geometric-deviation quality category, derived from z-score binning.
///
/// The declaration order (`Low`, `Average`, `High`) is the fixed label
/// order used everywhere: confusion-matrix axes, class-vector storage,
/// and tie-breaking in argmax prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Quality {
    Low,
    Average,
    High,
}

impl Quality {
    pub const ALL: [Quality; 3] = [Quality::Low, Quality::Average, Quality::High];
    pub const COUNT: usize = 3;

    /// Position in the fixed label order.
    pub fn index(self) -> usize {
        match self {
            Quality::Low => 0,
            Quality::Average => 1,
            Quality::High => 2,
        }
    }

    pub fn from_index(index: usize) -> Option<Quality> {
        Quality::ALL.get(index).copied()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Quality::Low => "low",
            Quality::Average => "average",
            Quality::High => "high",
        }
    }
}

impl fmt::Display for Quality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Quality {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "low" => Ok(Quality::Low),
            "average" => Ok(Quality::Average),
            "high" => Ok(Quality::High),
            other => Err(Error::UnknownClass(other.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_round_trip() {
        for q in Quality::ALL {
            assert_eq!(Quality::from_index(q.index()), Some(q));
            assert_eq!(q.as_str().parse::<Quality>().unwrap(), q);
        }
        assert_eq!(Quality::from_index(3), None);
        assert!("bogus".parse::<Quality>().is_err());
    }

    #[test]
    fn fixed_order() {
        assert!(Quality::Low < Quality::Average && Quality::Average < Quality::High);
    }
}
