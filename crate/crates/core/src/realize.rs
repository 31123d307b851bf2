//! Brute-force search for graphs realizing a given distance frequency array,
//! and the census of all realizable arrays for small node counts.
//!
//! Graphs are labeled and enumerated as edge subsets over the `C(N, 2)`
//! possible edges, taken in lexicographic order. Since `α_1` is the edge
//! count, only subsets of exactly that size are searched.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::alpha::AlphaArray;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::majorization::extended_majorizes;
use crate::property::Property;
use crate::stats::{chain_alpha, check_beta, complete_alpha, validate_alpha};

pub const MAX_SEARCH_NODES: usize = 8;
pub const MAX_CENSUS_NODES: usize = 7;

const CHUNK: u64 = 1 << 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RealizabilityStatus {
    Realizable,
    NotRealizable,
    Aborted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizabilityResult {
    pub status: RealizabilityStatus,
    /// Earliest graph in enumeration order with the queried array.
    pub witness: Option<Graph>,
    /// Edge subsets visited in enumeration order, up to and including the
    /// witness when one is found.
    pub candidates_examined: u64,
    /// Necessary conditions the array fails; non-empty only when the search
    /// was skipped.
    pub rejected_by: Vec<Property>,
}

/// All pairs `(u, v)`, `u < v`, in lexicographic order.
fn edge_slots(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// The `rank`-th `k`-subset of `0..m` in lexicographic order.
fn unrank_combination(m: usize, k: usize, mut rank: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut x = 0usize;
    for i in 0..k {
        loop {
            let count = binomial((m - x - 1) as u64, (k - i - 1) as u64);
            if rank < count {
                break;
            }
            rank -= count;
            x += 1;
        }
        out.push(x);
        x += 1;
    }
    out
}

/// Advances to the lexicographic successor; false when `c` was the last.
fn next_combination(c: &mut [usize], m: usize) -> bool {
    let k = c.len();
    let Some(i) = (0..k).rev().find(|&i| c[i] < m - k + i) else {
        return false;
    };
    c[i] += 1;
    for j in i + 1..k {
        c[j] = c[j - 1] + 1;
    }
    true
}

/// Adjacency bitmasks for graphs on at most eight nodes.
struct Masks {
    n: usize,
    adj: [u8; MAX_SEARCH_NODES],
}

impl Masks {
    fn from_slots(n: usize, slots: &[(usize, usize)], chosen: impl Iterator<Item = usize>) -> Self {
        let mut adj = [0u8; MAX_SEARCH_NODES];
        for s in chosen {
            let (u, v) = slots[s];
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Masks { n, adj }
    }

    /// Distance counts indexed by distance - 1, or `None` if disconnected.
    fn alpha(&self) -> Option<[u32; MAX_SEARCH_NODES]> {
        let full: u8 = ((1u16 << self.n) - 1) as u8;
        let mut counts = [0u32; MAX_SEARCH_NODES];
        for source in 0..self.n {
            let mut visited: u8 = 1 << source;
            let mut frontier = visited;
            let mut d = 0usize;
            while frontier != 0 {
                let mut next = 0u8;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj[v];
                }
                next &= !visited;
                visited |= next;
                frontier = next;
                if next != 0 {
                    // only count pairs once: targets above the source
                    counts[d] += (u16::from(next) >> (source + 1)).count_ones();
                    d += 1;
                }
            }
            if visited != full {
                return None;
            }
        }
        Some(counts)
    }
}

fn matches_target(counts: &[u32; MAX_SEARCH_NODES], target: &[u64]) -> bool {
    target
        .iter()
        .zip(counts.iter())
        .all(|(&t, &c)| t == c as u64)
}

/// Necessary conditions every connected graph's array satisfies; a failure
/// rules the array out without searching.
pub fn necessary_condition_failures(a: &AlphaArray) -> Vec<Property> {
    let mut failed = validate_alpha(a);
    if !check_beta(a) {
        failed.push(Property::BetaBound);
    }
    let n = a.n();
    let complete = complete_alpha(n).expect("n >= 2");
    let chain = chain_alpha(n).expect("n >= 2");
    if !extended_majorizes(complete.counts(), a.counts()).unwrap_or(false) {
        failed.push(Property::SandwichUpper);
    }
    if !extended_majorizes(a.counts(), chain.counts()).unwrap_or(false) {
        failed.push(Property::SandwichLower);
    }
    failed
}

/// Decides whether some connected graph on `N` labeled nodes has exactly the
/// distance frequencies `a`.
///
/// `budget` caps the number of edge subsets examined; when the space is
/// larger and no witness appears within the cap, the result is
/// [`RealizabilityStatus::Aborted`]. The reported witness is always the
/// earliest match in lexicographic order, independent of scheduling.
pub fn is_realizable(a: &AlphaArray, budget: Option<u64>) -> Result<RealizabilityResult> {
    let n = a.n();
    if !(2..=MAX_SEARCH_NODES).contains(&n) {
        return Err(Error::UnsupportedSize {
            n,
            min: 2,
            max: MAX_SEARCH_NODES,
        });
    }
    a.require_total()?;

    let rejected_by = necessary_condition_failures(a);
    if !rejected_by.is_empty() {
        return Ok(RealizabilityResult {
            status: RealizabilityStatus::NotRealizable,
            witness: None,
            candidates_examined: 0,
            rejected_by,
        });
    }

    let slots = edge_slots(n);
    let m = slots.len();
    let k = a.get(1) as usize;
    let space = binomial(m as u64, k as u64);
    let limit = budget.map_or(space, |b| b.min(space));
    let target = a.counts();

    let chunks = limit.div_ceil(CHUNK);
    let found = (0..chunks).into_par_iter().find_map_first(|chunk| {
        let start = chunk * CHUNK;
        let end = (start + CHUNK).min(limit);
        let mut comb = unrank_combination(m, k, start);
        let mut rank = start;
        while rank < end {
            let masks = Masks::from_slots(n, &slots, comb.iter().copied());
            if let Some(counts) = masks.alpha() {
                if matches_target(&counts, target) {
                    return Some((rank, comb));
                }
            }
            rank += 1;
            if !next_combination(&mut comb, m) {
                break;
            }
        }
        None
    });

    Ok(match found {
        Some((rank, comb)) => {
            let witness = Graph::new(n, comb.iter().map(|&s| slots[s]))?;
            RealizabilityResult {
                status: RealizabilityStatus::Realizable,
                witness: Some(witness),
                candidates_examined: rank + 1,
                rejected_by: Vec::new(),
            }
        }
        None => RealizabilityResult {
            status: if limit < space {
                RealizabilityStatus::Aborted
            } else {
                RealizabilityStatus::NotRealizable
            },
            witness: None,
            candidates_examined: limit,
            rejected_by: Vec::new(),
        },
    })
}

/// Every distinct array realized by a connected graph on `n` labeled nodes.
pub fn enumerate_realizable(n: usize) -> Result<BTreeSet<AlphaArray>> {
    if !(2..=MAX_CENSUS_NODES).contains(&n) {
        return Err(Error::UnsupportedSize {
            n,
            min: 2,
            max: MAX_CENSUS_NODES,
        });
    }
    let slots = edge_slots(n);
    let subsets: u64 = 1 << slots.len();
    let found: BTreeSet<Vec<u64>> = (0..subsets.div_ceil(CHUNK))
        .into_par_iter()
        .map(|chunk| {
            let mut local = BTreeSet::new();
            for bits in chunk * CHUNK..((chunk + 1) * CHUNK).min(subsets) {
                let chosen = (0..slots.len()).filter(|&s| bits >> s & 1 == 1);
                let masks = Masks::from_slots(n, &slots, chosen);
                if let Some(counts) = masks.alpha() {
                    local.insert(counts[..n - 1].iter().map(|&c| c as u64).collect());
                }
            }
            local
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    found.into_iter().map(AlphaArray::new).collect()
}

/// A connected graph whose array sits strictly below the β-bounds at every
/// index: the chain `0 - … - (n-2)` with node `n-1` joined to nodes 0, 1
/// and 2. Only the pair `(0, n-2)` reaches distance `n-2`.
pub fn strict_beta_example(n: usize) -> Result<Graph> {
    if n <= 3 {
        return Err(Error::TooFewNodes { n, min: 4 });
    }
    let hub = n - 1;
    let chain = (1..hub).map(|v| (v - 1, v));
    Graph::new(n, chain.chain([(0, hub), (1, hub), (2, hub)]))
}
