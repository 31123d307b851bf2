use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Distance frequencies `(α_1, …, α_{N-1})` of an `N`-node network, where
/// `α_j` counts the unordered node pairs at distance `j`.
///
/// The node count is implied by the length. The total is not enforced on
/// construction so that malformed candidates can still be diagnosed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AlphaArray {
    counts: Vec<u64>,
}

impl AlphaArray {
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::Empty);
        }
        Ok(AlphaArray { counts })
    }

    /// Node count `N`.
    pub fn n(&self) -> usize {
        self.counts.len() + 1
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `α_j` for 1-based distance `j`; zero outside `1..N`.
    pub fn get(&self, distance: usize) -> u64 {
        if distance == 0 {
            return 0;
        }
        self.counts.get(distance - 1).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `N(N-1)/2`, the number of unordered node pairs.
    pub fn pair_count(&self) -> u64 {
        pair_count(self.n())
    }

    pub fn has_valid_total(&self) -> bool {
        self.total() == self.pair_count()
    }

    pub(crate) fn require_total(&self) -> Result<()> {
        if self.has_valid_total() {
            Ok(())
        } else {
            Err(Error::TotalMismatch {
                expected: self.pair_count(),
                found: self.total(),
            })
        }
    }

    /// True when the counts never increase from one distance to the next.
    pub fn is_non_increasing(&self) -> bool {
        self.counts.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn into_counts(self) -> Vec<u64> {
        self.counts
    }
}

pub fn pair_count(n: usize) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) / 2
}

impl fmt::Display for AlphaArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for AlphaArray {
    type Err = Error;

    /// Parses the comma-separated form, e.g. `"6,7,6,2,0,0"`.
    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        if text.is_empty() {
            return Err(Error::AlphaSyntax {
                text: s.to_string(),
                reason: "empty".into(),
            });
        }
        let counts = text
            .split(',')
            .map(|part| {
                part.trim().parse::<u64>().map_err(|e| Error::AlphaSyntax {
                    text: s.to_string(),
                    reason: format!("{:?}: {e}", part.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        AlphaArray::new(counts)
    }
}
