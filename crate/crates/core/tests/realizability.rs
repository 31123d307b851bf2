mod common;

use std::collections::BTreeSet;

use netdist::realize::necessary_condition_failures;
use netdist::stats::validate_alpha;
use netdist::verify::verify_alpha;
use netdist::{
    enumerate_realizable, is_realizable, strict_beta_example, AlphaArray, Graph,
    RealizabilityStatus,
};

use common::oracle_alpha;

/// Census built from every labeled graph with Floyd–Warshall distances.
fn oracle_census(n: usize) -> BTreeSet<Vec<u64>> {
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = BTreeSet::new();
    for bits in 0u32..(1 << slots.len()) {
        let edges = slots
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::new(n, edges).unwrap();
        if let Some(a) = oracle_alpha(&g) {
            out.insert(a);
        }
    }
    out
}

/// All arrays of length `n - 1` with the right total that pass the basic
/// validity checks.
fn valid_arrays(n: usize) -> Vec<AlphaArray> {
    fn rec(prefix: &mut Vec<u64>, len: usize, remaining: u64, out: &mut Vec<Vec<u64>>) {
        if prefix.len() == len - 1 {
            prefix.push(remaining);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for v in 0..=remaining {
            prefix.push(v);
            rec(prefix, len, remaining - v, out);
            prefix.pop();
        }
    }
    let mut all = Vec::new();
    rec(&mut Vec::new(), n - 1, (n * (n - 1) / 2) as u64, &mut all);
    all.into_iter()
        .map(|c| AlphaArray::new(c).unwrap())
        .filter(|a| validate_alpha(a).is_empty())
        .collect()
}

#[test]
fn census_matches_independent_enumeration() {
    for n in 2..=5 {
        let census: BTreeSet<Vec<u64>> = enumerate_realizable(n)
            .unwrap()
            .into_iter()
            .map(AlphaArray::into_counts)
            .collect();
        assert_eq!(census, oracle_census(n), "n={n}");
    }
}

#[test]
fn census_arrays_satisfy_every_property() {
    for n in 2..=7 {
        for a in enumerate_realizable(n).unwrap() {
            assert!(verify_alpha(&a).is_empty(), "n={n}: {a}");
        }
    }
}

#[test]
fn search_agrees_with_census() {
    for n in 2..=6 {
        let census = enumerate_realizable(n).unwrap();
        for a in valid_arrays(n) {
            let r = is_realizable(&a, None).unwrap();
            let expected = census.contains(&a);
            assert_eq!(r.status == RealizabilityStatus::Realizable, expected, "{a}");
            if let Some(w) = r.witness {
                assert_eq!(oracle_alpha(&w).unwrap(), a.counts(), "witness for {a}");
            } else {
                assert_eq!(r.status, RealizabilityStatus::NotRealizable);
            }
        }
    }
}

#[test]
fn necessary_conditions_never_reject_realizable_arrays() {
    for n in 2..=7 {
        for a in enumerate_realizable(n).unwrap() {
            assert!(necessary_condition_failures(&a).is_empty(), "{a}");
        }
    }
}

#[test]
fn counterexamples_need_exhaustion() {
    for s in ["4,1,1", "4,3,3,0"] {
        let a: AlphaArray = s.parse().unwrap();
        assert!(necessary_condition_failures(&a).is_empty());
        let r = is_realizable(&a, None).unwrap();
        assert_eq!(r.status, RealizabilityStatus::NotRealizable);
        assert!(r.candidates_examined > 0);
    }
}

#[test]
fn witness_is_schedule_independent() {
    let a: AlphaArray = "6,7,6,2,0,0".parse().unwrap();
    let first = is_realizable(&a, None).unwrap();
    for _ in 0..5 {
        assert_eq!(is_realizable(&a, None).unwrap(), first);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let serial = pool.install(|| is_realizable(&a, None).unwrap());
    assert_eq!(serial, first);
}

#[test]
fn eight_node_search_respects_budget() {
    let chain: AlphaArray = "7,6,5,4,3,2,1".parse().unwrap();
    let r = is_realizable(&chain, Some(1_000_000)).unwrap();
    assert_eq!(r.status, RealizabilityStatus::Realizable);
    assert_eq!(
        oracle_alpha(r.witness.as_ref().unwrap()).unwrap(),
        chain.counts()
    );

    let dense: AlphaArray = "14,14,0,0,0,0,0".parse().unwrap();
    let r = is_realizable(&dense, Some(1000)).unwrap();
    assert!(matches!(
        r.status,
        RealizabilityStatus::Realizable | RealizabilityStatus::Aborted
    ));
    if r.status == RealizabilityStatus::Aborted {
        assert_eq!(r.candidates_examined, 1000);
    }
}

#[test]
fn strict_beta_family_via_oracle() {
    for n in 4..=10 {
        let g = strict_beta_example(n).unwrap();
        let a = oracle_alpha(&g).unwrap();
        let beta: Vec<u64> = (1..n as u64)
            .map(|i| (n as u64 - i + 1) * (n as u64 - i) / 2)
            .collect();
        assert!(a.iter().zip(&beta).all(|(x, b)| x < b), "n={n}: {a:?}");
    }
}
