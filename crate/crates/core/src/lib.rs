//! Shortest-path distance frequencies of undirected connected networks.
//!
//! The central object is the [`AlphaArray`]: for a connected graph on `N`
//! nodes, `α_j` counts the unordered node pairs at distance `j`. The crate
//! computes these arrays, derives exact statistics from them (average,
//! median, Gini index, tail bounds), compares them under extended (unsorted)
//! majorization via their Lorenz curves, and searches for graphs realizing a
//! candidate array.
//!
//! ```
//! use netdist::{generate_chain, stats, Rational};
//!
//! let chain = generate_chain(7).unwrap();
//! let alpha = chain.alpha_array().unwrap();
//! assert_eq!(alpha.to_string(), "6,5,4,3,2,1");
//! assert_eq!(stats::average_distance(&alpha).unwrap(), Rational::new(8, 3));
//! ```

pub mod alpha;
pub mod cli;
pub mod error;
pub mod graph;
pub mod majorization;
pub mod property;
pub mod rational;
pub mod realize;
pub mod stats;
pub mod verify;

pub use alpha::AlphaArray;
pub use error::{Error, ParseErrorKind, Result};
pub use graph::{
    generate_chain, generate_complete, generate_star, parse_edge_list, random_connected_graph,
    DistanceMatrix, Graph,
};
pub use majorization::{
    curve_dominates, extended_majorizes, gini_geometric, lorenz_points, Comparison, LorenzCurve,
};
pub use property::Property;
pub use rational::Rational;
pub use realize::{
    enumerate_realizable, is_realizable, strict_beta_example, RealizabilityResult,
    RealizabilityStatus,
};
pub use stats::StatsReport;
pub use verify::{run_campaign, verify_graph, VerificationReport};
