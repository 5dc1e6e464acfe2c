use std::fmt;
use std::str::FromStr;

use crate::Error;

/// The three infinite families whose descent classes are indexed by
/// (pseudo-)compositions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Symmetric group on `n` letters, indexed by compositions of `n`.
    A,
    /// Signed permutations of `[n]`, indexed by pseudo-compositions of `n`.
    B,
    /// Even signed permutations of `[n]`, indexed by pseudo-compositions of `n`.
    D,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::A, Family::B, Family::D];

    /// Whether the index set is `{0, ..., n-1}` rather than `[n-1]`.
    pub fn is_signed(self) -> bool {
        !matches!(self, Family::A)
    }

    /// Number of descent classes for rank parameter `n`.
    pub fn index_count_log2(self, n: u32) -> u32 {
        match self {
            Family::A => n.saturating_sub(1),
            Family::B | Family::D => n,
        }
    }

    pub fn letter(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::D => "D",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::InvalidInput(format!("unknown family {other:?}"))),
        }
    }
}
