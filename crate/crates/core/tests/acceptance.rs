//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any criterion fails.
//!
//! Tolerances are fixed here:
//! * decimal renderings use 6 places with round-half-even;
//! * Gini golden values are compared at 0.001 against 3-place references;
//! * the large-chain median ratios are compared at 0.005;
//! * wall-clock limits are 10 s per realizability search and 60 s for the
//!   campaign and the census.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use netdist::stats::{
    average_distance, average_from_gini, chain_alpha, chain_median_bracket, gini, median_distance,
    non_strict_beta_indices, validate_alpha,
};
use netdist::verify::{random_valid_alpha, verify_alpha};
use netdist::{
    curve_dominates, enumerate_realizable, extended_majorizes, generate_chain, generate_complete,
    generate_star, gini_geometric, is_realizable, parse_edge_list, run_campaign,
    strict_beta_example, AlphaArray, Graph, Rational, RealizabilityStatus,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{floyd_warshall, oracle_alpha, SEVEN_NODE_EXAMPLE};

const GINI_TOL: f64 = 1e-3;
const ASYMPTOTIC_TOL: f64 = 5e-3;
const SEARCH_LIMIT: Duration = Duration::from_secs(10);
const BATCH_LIMIT: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

/// Name, graph, alpha, average, average rendered, median, Gini, Gini reference.
type Golden = (
    &'static str,
    Graph,
    &'static str,
    Rational,
    &'static str,
    Rational,
    Rational,
    f64,
);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if $cond {
        } else {
            return Err(format!($($fmt)+));
        }
    };
}

fn alpha(s: &str) -> AlphaArray {
    s.parse().expect("literal alpha array")
}

/// Golden statistics for the complete graph, the seven-node example and the
/// chain, all on seven nodes.
fn golden_statistics() -> Outcome {
    let cases: [Golden; 3] = [
        (
            "K7",
            generate_complete(7).unwrap(),
            "21,0,0,0,0,0",
            Rational::ONE,
            "1.000000",
            Rational::ONE,
            Rational::new(5, 6),
            0.833,
        ),
        (
            "example",
            parse_edge_list(SEVEN_NODE_EXAMPLE).unwrap(),
            "6,7,6,2,0,0",
            Rational::new(46, 21),
            "2.190476",
            Rational::integer(2),
            Rational::new(55, 126),
            0.437,
        ),
        (
            "chain7",
            generate_chain(7).unwrap(),
            "6,5,4,3,2,1",
            Rational::new(8, 3),
            "2.666667",
            Rational::integer(2),
            Rational::new(5, 18),
            0.278,
        ),
    ];
    for (name, g, counts, avg, avg_text, med, gi, gi_ref) in cases {
        let a = g.alpha_array().map_err(|e| e.to_string())?;
        ensure!(a.to_string() == counts, "{name}: alpha {a}");
        ensure!(
            oracle_alpha(&g).as_deref() == Some(a.counts()),
            "{name}: BFS disagrees with Floyd-Warshall"
        );
        let got_avg = average_distance(&a).unwrap();
        ensure!(got_avg == avg, "{name}: average {got_avg}");
        ensure!(
            got_avg.to_decimal(6) == avg_text,
            "{name}: average renders as {}",
            got_avg.to_decimal(6)
        );
        let got_med = median_distance(&a).unwrap();
        ensure!(got_med == med, "{name}: median {got_med}");
        let got_gini = gini(&a).unwrap();
        ensure!(got_gini == gi, "{name}: gini {got_gini}");
        ensure!(
            (got_gini.to_f64() - gi_ref).abs() < GINI_TOL,
            "{name}: gini {} vs {gi_ref}",
            got_gini.to_f64()
        );
    }
    Ok("K7, seven-node example and chain7 match exactly".into())
}

/// Exhaustive refutation of the two counterexamples and a verified witness.
fn realizability_counterexamples() -> Outcome {
    let mut notes = Vec::new();
    for (s, want) in [
        ("4,1,1", RealizabilityStatus::NotRealizable),
        ("4,3,3,0", RealizabilityStatus::NotRealizable),
        ("4,4,2,0", RealizabilityStatus::Realizable),
    ] {
        let a = alpha(s);
        ensure!(
            validate_alpha(&a).is_empty(),
            "{s} should pass the basic checks"
        );
        let start = Instant::now();
        let r = is_realizable(&a, None).map_err(|e| e.to_string())?;
        let took = start.elapsed();
        ensure!(r.status == want, "{s}: {:?}", r.status);
        ensure!(took < SEARCH_LIMIT, "{s}: search took {took:?}");
        match &r.witness {
            Some(w) => {
                ensure!(
                    oracle_alpha(w).as_deref() == Some(a.counts()),
                    "{s}: witness does not realize the array"
                );
            }
            None => ensure!(
                r.rejected_by.is_empty() && r.candidates_examined > 0,
                "{s}: rejected without a search"
            ),
        }
        notes.push(format!("{s}:{}", r.candidates_examined));
    }
    Ok(format!("candidates examined {}", notes.join(" ")))
}

fn campaign() -> Outcome {
    let start = Instant::now();
    let report = run_campaign(2, 40, 1000, 7).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    ensure!(
        report.failures.is_empty(),
        "{} failures, first {:?}",
        report.failures.len(),
        report.failures.first()
    );
    ensure!(report.trials == 1000, "ran {} trials", report.trials);
    ensure!(took < BATCH_LIMIT, "campaign took {took:?}");
    Ok(format!(
        "1000 trials, {} pairs ({} comparable) in {took:.2?}",
        report.pairs_checked, report.comparable_pairs
    ))
}

fn census() -> Outcome {
    let start = Instant::now();
    let expectations = [
        (4, ["3,2,1", "6,0,0"], "4,1,1"),
        (5, ["4,3,2,1", "10,0,0,0"], "4,3,3,0"),
    ];
    let mut sizes = Vec::new();
    for (n, present, absent) in expectations {
        let set = enumerate_realizable(n).map_err(|e| e.to_string())?;
        for a in &set {
            let bad = verify_alpha(a);
            ensure!(bad.is_empty(), "n={n}: {a} violates {bad:?}");
        }
        for s in present {
            ensure!(set.contains(&alpha(s)), "n={n}: missing {s}");
        }
        ensure!(!set.contains(&alpha(absent)), "n={n}: contains {absent}");
        sizes.push(format!("N={n}: {}", set.len()));
    }
    let took = start.elapsed();
    ensure!(took < BATCH_LIMIT, "census took {took:?}");
    Ok(format!("{} arrays", sizes.join(", ")))
}

fn chain_median_bounds() -> Outcome {
    let equal: Vec<usize> = vec![2, 5, 8, 11];
    for n in 2..=200usize {
        let a = chain_alpha(n).unwrap();
        let m = median_distance(&a).unwrap();
        let avg = average_distance(&a).unwrap();
        ensure!(
            avg == Rational::new(n as i128 + 1, 3),
            "N={n}: average {avg}"
        );
        let (lo, hi) = chain_median_bracket(n).unwrap();
        ensure!(
            m == lo || m == hi,
            "N={n}: median {m} outside {{{lo}, {hi}}}"
        );
        if equal.contains(&n) {
            ensure!(m == avg, "N={n}: median {m} differs from average {avg}");
        } else {
            ensure!(m < avg, "N={n}: median {m} not below average {avg}");
        }
    }
    Ok("N=2..200, equality exactly at 2, 5, 8, 11".into())
}

fn chain_median_asymptotics() -> Outcome {
    let n = 10_000usize;
    let a = chain_alpha(n).unwrap();
    let m = median_distance(&a).unwrap().to_f64();
    let avg = average_distance(&a).unwrap().to_f64();
    let ratio = m / avg;
    let target = 3.0 * (1.0 - std::f64::consts::SQRT_2 / 2.0);
    ensure!(
        (ratio - target).abs() < ASYMPTOTIC_TOL,
        "median/average {ratio} vs {target}"
    );
    let per_node = m / n as f64;
    ensure!(
        (per_node - 0.293).abs() < ASYMPTOTIC_TOL,
        "median/N {per_node}"
    );
    Ok(format!("median/average {ratio:.5}, median/N {per_node:.5}"))
}

fn identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..500 {
        let a = random_valid_alpha(&mut rng, 2..=60);
        let g = gini(&a).unwrap();
        ensure!(
            gini_geometric(a.counts()).unwrap() == g,
            "{a}: geometric gini differs"
        );
        ensure!(
            average_from_gini(g, a.n()) == average_distance(&a).unwrap(),
            "{a}: round trip fails"
        );
    }
    let mut comparable = 0;
    for _ in 0..500 {
        let n = 3 + (rand::Rng::gen_range(&mut rng, 0..6usize));
        let a = random_valid_alpha(&mut rng, n..=n);
        let b = random_valid_alpha(&mut rng, n..=n);
        let maj = extended_majorizes(a.counts(), b.counts()).unwrap();
        ensure!(
            curve_dominates(a.counts(), b.counts()).unwrap() == maj,
            "{a} vs {b}: curve test disagrees"
        );
        if maj {
            comparable += 1;
            ensure!(
                average_distance(&a).unwrap() <= average_distance(&b).unwrap(),
                "{a} vs {b}: average order"
            );
            ensure!(
                gini(&a).unwrap() >= gini(&b).unwrap(),
                "{a} vs {b}: gini order"
            );
        }
    }
    ensure!(comparable > 0, "no comparable pair sampled");
    Ok(format!("500 arrays, 500 pairs ({comparable} comparable)"))
}

fn stars() -> Outcome {
    for n in 5..=20usize {
        let g = generate_star(n).unwrap();
        let a = g.alpha_array().unwrap();
        let m = median_distance(&a).unwrap();
        let avg = average_distance(&a).unwrap();
        ensure!(m == Rational::integer(2), "N={n}: median {m}");
        ensure!(
            avg == Rational::new(2 * (n as i128 - 1), n as i128),
            "N={n}: average {avg}"
        );
        ensure!(avg < m, "N={n}: average not below median");
        ensure!(!a.is_non_increasing(), "N={n}: {a} is non-increasing");
    }
    Ok("N=5..20: median 2 above average 2(N-1)/N".into())
}

fn strict_beta() -> Outcome {
    for n in 4..=8usize {
        let g = strict_beta_example(n).unwrap();
        let a = g.alpha_array().unwrap();
        let d = floyd_warshall(&g);
        ensure!(
            d.iter().flatten().all(Option::is_some),
            "N={n}: example is disconnected"
        );
        let loose = non_strict_beta_indices(&a);
        ensure!(loose.is_empty(), "N={n}: {a} meets the bound at {loose:?}");
        // independent check straight from tail sums
        let tail: Vec<u64> = (0..a.counts().len())
            .map(|i| a.counts()[i..].iter().sum())
            .collect();
        for (i, t) in tail.iter().enumerate().skip(1) {
            let k = (n - i) as u64;
            ensure!(*t < k * (k - 1) / 2, "N={n}: tail {} = {t}", i + 1);
        }
    }
    Ok("N=4..8 strict at every index".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("golden statistics", golden_statistics),
        (
            "realizability counterexamples",
            realizability_counterexamples,
        ),
        ("random verification campaign", campaign),
        ("realizable census N=4,5", census),
        ("chain median bracket N=2..200", chain_median_bounds),
        ("chain median asymptotics N=10000", chain_median_asymptotics),
        ("Lorenz and Gini identities", identities),
        ("star graphs", stars),
        ("strict tail bound family", strict_beta),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("[PASS] {}. {name}: {detail} ({took:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {}. {name}: {why} ({took:.2?})", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
