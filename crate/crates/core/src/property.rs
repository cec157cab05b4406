use core::fmt;
use core::str::FromStr;

/// The six axioms an inconsistency index is tested against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Property {
    /// A unique value `nu` marks exactly the consistent matrices.
    P1,
    /// Invariance under relabelling the alternatives.
    P2,
    /// Intensifying all preferences does not lower inconsistency.
    P3,
    /// Pushing one entry of a consistent matrix away does not lower inconsistency.
    P4,
    /// Continuity in the entries.
    P5,
    /// Invariance under inverting all preferences.
    P6,
}

impl Property {
    pub const ALL: [Property; 6] = [Self::P1, Self::P2, Self::P3, Self::P4, Self::P5, Self::P6];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::P1 => "P1",
            Self::P2 => "P2",
            Self::P3 => "P3",
            Self::P4 => "P4",
            Self::P5 => "P5",
            Self::P6 => "P6",
        }
    }

    pub fn ordinal(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Property {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|p| p.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or(UnknownName)
    }
}

/// A name that matched no index or property.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("unknown name")]
pub struct UnknownName;
