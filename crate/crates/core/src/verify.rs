//! Randomized harness checking the majorization properties on generated graphs.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::alpha::AlphaArray;
use crate::error::{Error, Result};
use crate::graph::{random_connected_graph, Graph};
use crate::majorization::{extended_majorizes, gini_geometric};
use crate::property::Property;
use crate::rational::Rational;
use crate::stats::{
    average_distance, average_from_gini, chain_alpha, chain_average, chain_median, check_beta,
    complete_alpha, gini, median_distance, validate_alpha,
};

/// Edge probabilities a campaign draws from, trees through complete graphs.
pub const EDGE_PROBABILITIES: [(i128, i128); 6] = [(0, 1), (1, 8), (1, 4), (1, 2), (3, 4), (1, 1)];

/// Properties of a single array that every connected graph satisfies.
/// Returns the violated ones; an array with the wrong total reports only
/// the properties that can still be evaluated.
pub fn verify_alpha(a: &AlphaArray) -> Vec<Property> {
    let mut violated = validate_alpha(a);
    if !check_beta(a) {
        violated.push(Property::BetaBound);
    }
    let n = a.n();
    let complete = complete_alpha(n).expect("n >= 2");
    let chain = chain_alpha(n).expect("n >= 2");
    if !extended_majorizes(complete.counts(), a.counts()).unwrap_or(false) {
        violated.push(Property::SandwichUpper);
    }
    if !extended_majorizes(a.counts(), chain.counts()).unwrap_or(false) {
        violated.push(Property::SandwichLower);
    }
    if !a.has_valid_total() {
        return violated;
    }

    let median = median_distance(a).expect("total checked");
    if median > chain_median(n).expect("n >= 2") {
        violated.push(Property::MedianBound);
    }
    let avg = average_distance(a).expect("total checked");
    if avg > chain_average(n).expect("n >= 2") {
        violated.push(Property::AverageBound);
    }
    let g = gini(a).expect("total checked");
    if gini_geometric(a.counts()).ok() != Some(g) {
        violated.push(Property::GiniGeometric);
    }
    if average_from_gini(g, n) != avg {
        violated.push(Property::GiniRoundTrip);
    }
    violated
}

/// Runs [`verify_alpha`] on the distance frequencies of a connected graph.
pub fn verify_graph(g: &Graph) -> Result<Vec<Property>> {
    Ok(verify_alpha(&g.alpha_array()?))
}

/// For two valid arrays of equal length: whenever one majorizes the other,
/// its average must not be larger and its Gini index not smaller.
pub fn verify_pair(a: &AlphaArray, b: &AlphaArray) -> Result<Vec<Property>> {
    let mut violated = Vec::new();
    let (avg_a, avg_b) = (average_distance(a)?, average_distance(b)?);
    let (gini_a, gini_b) = (gini(a)?, gini(b)?);
    for (x, y, avg_x, avg_y, g_x, g_y) in [
        (a, b, avg_a, avg_b, gini_a, gini_b),
        (b, a, avg_b, avg_a, gini_b, gini_a),
    ] {
        if extended_majorizes(x.counts(), y.counts())? {
            if avg_x > avg_y && !violated.contains(&Property::AverageMonotone) {
                violated.push(Property::AverageMonotone);
            }
            if g_x < g_y && !violated.contains(&Property::GiniOrder) {
                violated.push(Property::GiniOrder);
            }
        }
    }
    Ok(violated)
}

/// A random array passing every basic validity check (not necessarily
/// realizable) on a node count drawn from `n_range`.
pub fn random_valid_alpha<R: Rng>(
    rng: &mut R,
    n_range: std::ops::RangeInclusive<usize>,
) -> AlphaArray {
    let n = rng.gen_range(n_range);
    assert!(n >= 2);
    let total = crate::alpha::pair_count(n);
    let mut counts = vec![0u64; n - 1];
    if n == 2 {
        counts[0] = 1;
        return AlphaArray::new(counts).expect("non-empty");
    }
    // last non-zero distance; reaching N-1 forces α_{N-1} = 1
    let last = rng.gen_range(1..n);
    let mut rest = total;
    if last == n - 1 {
        counts[n - 2] = 1;
        rest -= 1;
    }
    let fill_to = if last == n - 1 { n - 2 } else { last };
    let min_first = (n - 1) as u64;
    // every index in 2..=fill_to needs at least one
    let reserved = fill_to as u64 - 1;
    let first = rng.gen_range(min_first..=rest - reserved);
    counts[0] = first;
    rest -= first;
    for c in counts.iter_mut().take(fill_to).skip(1) {
        *c = 1;
        rest -= 1;
    }
    if fill_to >= 2 {
        while rest > 0 {
            let idx = rng.gen_range(1..fill_to);
            let step = rng.gen_range(1..=rest);
            counts[idx] += step;
            rest -= step;
        }
    } else {
        counts[0] += rest;
    }
    AlphaArray::new(counts).expect("non-empty")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub trial: usize,
    pub seed: u64,
    pub n: usize,
    pub edges: usize,
    pub alpha: String,
    /// Other trial involved when a pairwise property failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partner: Option<usize>,
    pub property: Property,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub n_min: usize,
    pub n_max: usize,
    pub seed: u64,
    pub trials: usize,
    pub pairs_checked: usize,
    pub comparable_pairs: usize,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    trials: usize,
    n_min: usize,
    n_max: usize,
    seed: u64,
    pairs_checked: usize,
    comparable_pairs: usize,
    failures: &'a [Failure],
    elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// The JSON document. With `include_elapsed = false` the timing is
    /// written as zero so that repeated runs are byte-identical.
    pub fn to_json(&self, include_elapsed: bool) -> String {
        let doc = ReportJson {
            trials: self.trials,
            n_min: self.n_min,
            n_max: self.n_max,
            seed: self.seed,
            pairs_checked: self.pairs_checked,
            comparable_pairs: self.comparable_pairs,
            failures: &self.failures,
            elapsed_ms: if include_elapsed {
                self.elapsed.as_millis() as u64
            } else {
                0
            },
        };
        serde_json::to_string_pretty(&doc).expect("report serializes")
    }
}

struct Trial {
    seed: u64,
    graph: Graph,
    alpha: AlphaArray,
    violated: Vec<Property>,
}

/// Generates `trials` random connected graphs with node counts in
/// `n_min..=n_max`, checks every single-graph property, then pairs each
/// trial with a random same-size trial and checks the pairwise ones.
/// Everything except `elapsed` is a function of the arguments alone.
pub fn run_campaign(
    n_min: usize,
    n_max: usize,
    trials: usize,
    seed: u64,
) -> Result<VerificationReport> {
    if n_min < 2 || n_min > n_max {
        return Err(Error::InvalidRange(format!(
            "need 2 <= n_min <= n_max, got {n_min}..={n_max}"
        )));
    }
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let plan: Vec<(usize, Rational, u64)> = (0..trials)
        .map(|_| {
            let n = rng.gen_range(n_min..=n_max);
            let (num, den) = *EDGE_PROBABILITIES.choose(&mut rng).expect("non-empty");
            (n, Rational::new(num, den), rng.gen())
        })
        .collect();

    let results: Vec<Trial> = plan
        .par_iter()
        .map(|&(n, p, graph_seed)| {
            let graph = random_connected_graph(n, p, graph_seed).expect("n >= 2");
            let alpha = graph
                .alpha_array()
                .expect("generator yields connected graphs");
            let violated = verify_alpha(&alpha);
            Trial {
                seed: graph_seed,
                graph,
                alpha,
                violated,
            }
        })
        .collect();

    let failure = |i: usize, partner: Option<usize>, property| {
        let t: &Trial = &results[i];
        Failure {
            trial: i,
            seed: t.seed,
            n: t.graph.node_count(),
            edges: t.graph.edge_count(),
            alpha: t.alpha.to_string(),
            partner,
            property,
        }
    };

    let mut failures: Vec<Failure> = results
        .iter()
        .enumerate()
        .flat_map(|(i, t)| t.violated.iter().map(move |&p| (i, p)))
        .map(|(i, p)| failure(i, None, p))
        .collect();

    let mut by_size: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, t) in results.iter().enumerate() {
        by_size.entry(t.alpha.n()).or_default().push(i);
    }
    let pairs: Vec<(usize, usize)> = (0..results.len())
        .filter_map(|i| {
            let peers = &by_size[&results[i].alpha.n()];
            let j = *peers.choose(&mut rng).expect("contains i");
            (j != i).then_some((i, j))
        })
        .collect();

    let mut comparable_pairs = 0;
    for &(i, j) in &pairs {
        let (a, b) = (&results[i].alpha, &results[j].alpha);
        if extended_majorizes(a.counts(), b.counts())?
            || extended_majorizes(b.counts(), a.counts())?
        {
            comparable_pairs += 1;
        }
        for p in verify_pair(a, b)? {
            failures.push(failure(i, Some(j), p));
        }
    }

    Ok(VerificationReport {
        n_min,
        n_max,
        seed,
        trials,
        pairs_checked: pairs.len(),
        comparable_pairs,
        failures,
        elapsed: started.elapsed(),
    })
}
