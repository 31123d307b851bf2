//! Exact statistics of distance frequency arrays and the closed forms for the
//! chain and complete-graph baselines.

use serde::Serialize;

use crate::alpha::AlphaArray;
use crate::error::{Error, Result};
use crate::property::Property;
use crate::rational::Rational;

/// Every basic property the array violates, in a fixed order. An empty list
/// means the array is consistent with being a distance frequency array
/// (which does not make it realizable).
pub fn validate_alpha(a: &AlphaArray) -> Vec<Property> {
    let n = a.n() as u64;
    let counts = a.counts();
    let mut violated = Vec::new();

    if !a.has_valid_total() {
        violated.push(Property::Total);
    }
    if a.get(1) < n - 1 {
        violated.push(Property::MinEdges);
    }
    if counts[counts.len() - 1] > 1 {
        violated.push(Property::LastCell);
    }
    if let Some(first_zero) = counts.iter().position(|&c| c == 0) {
        if counts[first_zero..].iter().any(|&c| c != 0) {
            violated.push(Property::ZeroTail);
        }
    }
    if a.get(2) > (n - 1) * (n.saturating_sub(2)) / 2 {
        violated.push(Property::SecondCell);
    }
    violated
}

fn weighted_sum(a: &AlphaArray) -> i128 {
    a.counts()
        .iter()
        .enumerate()
        .map(|(i, &c)| (i as i128 + 1) * c as i128)
        .sum()
}

/// Mean of all pairwise distances: `2 Σ j·α_j / (N(N-1))`.
pub fn average_distance(a: &AlphaArray) -> Result<Rational> {
    a.require_total()?;
    Ok(Rational::new(weighted_sum(a), a.pair_count() as i128))
}

/// The distance holding the `k`-th smallest value (1-based) of the multiset.
fn order_statistic(a: &AlphaArray, k: u64) -> u64 {
    let mut seen = 0u64;
    for (i, &c) in a.counts().iter().enumerate() {
        seen += c;
        if seen >= k {
            return i as u64 + 1;
        }
    }
    unreachable!("k exceeds the multiset size")
}

/// Median of the multiset holding `α_j` copies of `j`; for an even number of
/// pairs, the mean of the two middle values.
pub fn median_distance(a: &AlphaArray) -> Result<Rational> {
    a.require_total()?;
    let m = a.pair_count();
    if m % 2 == 1 {
        Ok(Rational::from(order_statistic(a, m.div_ceil(2))))
    } else {
        let lo = order_statistic(a, m / 2);
        let hi = order_statistic(a, m / 2 + 1);
        Ok(Rational::new((lo + hi) as i128, 2))
    }
}

/// Gini index `(N - 2·d̄) / (N - 1)`.
pub fn gini(a: &AlphaArray) -> Result<Rational> {
    let avg = average_distance(a)?;
    let n = Rational::from(a.n());
    Ok((n - Rational::integer(2) * avg) / (n - Rational::ONE))
}

/// Inverse of [`gini`]: `N/2 - g·(N-1)/2`.
pub fn average_from_gini(g: Rational, n: usize) -> Rational {
    let n = Rational::from(n);
    let half = Rational::new(1, 2);
    n * half - g * (n - Rational::ONE) * half
}

/// `β_i = (N-i+1)(N-i)/2` for `i = 1..N-1`.
pub fn beta_bounds(n: usize) -> Result<Vec<u64>> {
    if n < 2 {
        return Err(Error::TooFewNodes { n, min: 2 });
    }
    let n = n as u64;
    Ok((1..n).map(|i| (n - i + 1) * (n - i) / 2).collect())
}

/// Tail sums `Σ_{j>=i} α_j` for `i = 1..N-1`.
pub fn tail_sums(a: &AlphaArray) -> Vec<u64> {
    let mut tails = vec![0u64; a.counts().len()];
    let mut acc = 0u64;
    for (i, &c) in a.counts().iter().enumerate().rev() {
        acc += c;
        tails[i] = acc;
    }
    tails
}

/// True iff `α_i <= Σ_{j>=i} α_j <= β_i` for every `i`.
pub fn check_beta(a: &AlphaArray) -> bool {
    let beta = beta_bounds(a.n()).expect("alpha arrays have n >= 2");
    tail_sums(a)
        .iter()
        .zip(a.counts())
        .zip(&beta)
        .all(|((&tail, &alpha), &b)| alpha <= tail && tail <= b)
}

/// Indices `i` (1-based) where `α_i < β_i` fails.
pub fn non_strict_beta_indices(a: &AlphaArray) -> Vec<usize> {
    let beta = beta_bounds(a.n()).expect("alpha arrays have n >= 2");
    a.counts()
        .iter()
        .zip(&beta)
        .enumerate()
        .filter(|(_, (&alpha, &b))| alpha >= b)
        .map(|(i, _)| i + 1)
        .collect()
}

/// `(N-1, N-2, …, 1)`.
pub fn chain_alpha(n: usize) -> Result<AlphaArray> {
    if n < 2 {
        return Err(Error::TooFewNodes { n, min: 2 });
    }
    AlphaArray::new((1..n).map(|j| (n - j) as u64).collect())
}

/// `(N(N-1)/2, 0, …, 0)`.
pub fn complete_alpha(n: usize) -> Result<AlphaArray> {
    if n < 2 {
        return Err(Error::TooFewNodes { n, min: 2 });
    }
    let mut counts = vec![0u64; n - 1];
    counts[0] = crate::alpha::pair_count(n);
    AlphaArray::new(counts)
}

/// `(N+1)/3`.
pub fn chain_average(n: usize) -> Result<Rational> {
    if n < 2 {
        return Err(Error::TooFewNodes { n, min: 2 });
    }
    Ok(Rational::new(n as i128 + 1, 3))
}

pub fn chain_median(n: usize) -> Result<Rational> {
    median_distance(&chain_alpha(n)?)
}

/// `⌊x⌋` for `x = ((2N+1) - √(2N²-2N+1)) / 2`, computed with integer square
/// roots so the floor is exact.
pub fn chain_median_floor(n: usize) -> Result<i128> {
    if n < 2 {
        return Err(Error::TooFewNodes { n, min: 2 });
    }
    let n = n as i128;
    let disc = 2 * n * n - 2 * n + 1;
    let root = isqrt(disc);
    let a = 2 * n + 1 - root;
    if root * root == disc {
        Ok(a.div_euclid(2))
    } else {
        // √disc lies strictly between root and root+1
        Ok((a - 1).div_euclid(2))
    }
}

/// The two admissible chain-median values `{⌊x⌋ - 1/2, ⌊x⌋}`.
pub fn chain_median_bracket(n: usize) -> Result<(Rational, Rational)> {
    let fl = Rational::integer(chain_median_floor(n)?);
    Ok((fl - Rational::new(1, 2), fl))
}

/// `N(1 - √2/2)`, the large-`N` approximation of the chain median, as the
/// exact value of its double-precision evaluation.
pub fn chain_median_asymptotic(n: usize) -> Result<Rational> {
    if n < 2 {
        return Err(Error::TooFewNodes { n, min: 2 });
    }
    let value = n as f64 * (1.0 - std::f64::consts::FRAC_1_SQRT_2);
    Rational::from_f64(value).ok_or(Error::Overflow)
}

fn isqrt(v: i128) -> i128 {
    debug_assert!(v >= 0);
    let mut r = (v as f64).sqrt() as i128;
    while r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    r
}

/// All statistics of one distance frequency array.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatsReport {
    pub n: usize,
    pub alpha: AlphaArray,
    pub average: Rational,
    pub median: Rational,
    pub gini: Rational,
    pub beta: Vec<u64>,
    pub beta_holds: bool,
    pub violations: Vec<Property>,
}

impl StatsReport {
    pub fn from_alpha(alpha: &AlphaArray) -> Result<Self> {
        Ok(StatsReport {
            n: alpha.n(),
            average: average_distance(alpha)?,
            median: median_distance(alpha)?,
            gini: gini(alpha)?,
            beta: beta_bounds(alpha.n())?,
            beta_holds: check_beta(alpha),
            violations: validate_alpha(alpha),
            alpha: alpha.clone(),
        })
    }
}
