use std::fmt;

use serde::{Serialize, Serializer};

/// A checkable property of a distance frequency array (or of a pair of
/// them). Each has a stable string identifier used in reports and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    /// Counts sum to `N(N-1)/2`.
    Total,
    /// `α_1 >= N-1`.
    MinEdges,
    /// `α_{N-1}` is 0 or 1.
    LastCell,
    /// A zero count is followed only by zeros.
    ZeroTail,
    /// `α_2 <= (N-1)(N-2)/2`.
    SecondCell,
    /// Every tail sum is bounded by `β_i`.
    BetaBound,
    /// The complete graph's array majorizes this one.
    SandwichUpper,
    /// This array majorizes the chain's array.
    SandwichLower,
    /// Median does not exceed the chain median.
    MedianBound,
    /// Average does not exceed `(N+1)/3`.
    AverageBound,
    /// Closed-form Gini equals twice the Lorenz area minus one.
    GiniGeometric,
    /// Average recovered from the Gini index equals the average.
    GiniRoundTrip,
    /// Majorization implies the average does not increase.
    AverageMonotone,
    /// Majorization implies the Gini index does not decrease.
    GiniOrder,
}

impl Property {
    pub const ALPHA_BASICS: [Property; 5] = [
        Property::Total,
        Property::MinEdges,
        Property::LastCell,
        Property::ZeroTail,
        Property::SecondCell,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Property::Total => "alpha.total",
            Property::MinEdges => "alpha.min_edges",
            Property::LastCell => "alpha.last_cell",
            Property::ZeroTail => "alpha.zero_tail",
            Property::SecondCell => "alpha.second_cell",
            Property::BetaBound => "beta.tail_bound",
            Property::SandwichUpper => "sandwich.upper",
            Property::SandwichLower => "sandwich.lower",
            Property::MedianBound => "median.chain_bound",
            Property::AverageBound => "average.chain_bound",
            Property::GiniGeometric => "gini.geometric",
            Property::GiniRoundTrip => "gini.round_trip",
            Property::AverageMonotone => "pair.average_monotone",
            Property::GiniOrder => "pair.gini_order",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for Property {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.id())
    }
}
