//! Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
//!
//! Criterion 4 is a known failure: the follower's stated bound does not hold on
//! all LPT plans (see `follower_bound_counterexample` in tests/oracles.rs). Its
//! line is printed as FAIL and the test checks that it still fails, so a fix
//! elsewhere shows up here.

use std::io::Write;
use std::time::{Duration, Instant};

use efx_online::harness::{verify_claims, Suite, SuiteReport};

struct Criterion {
    number: u32,
    title: &'static str,
    suite: Suite,
    budget: Duration,
    known_failure: Option<&'static str>,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { number: 1, title: "LPT exactness", suite: Suite::LptExactness, budget: secs(10), known_failure: None },
        Criterion { number: 2, title: "greedy guarantee", suite: Suite::GreedyGuarantee, budget: secs(5), known_failure: None },
        Criterion { number: 3, title: "EF1 baseline", suite: Suite::Ef1Baseline, budget: secs(10), known_failure: None },
        Criterion {
            number: 4,
            title: "follower guarantee",
            suite: Suite::FollowerGuarantee,
            budget: secs(20),
            known_failure: Some("bound needs a minimum predicted bundle value LPT does not provide"),
        },
        Criterion { number: 5, title: "main allocator guarantee", suite: Suite::MainGuarantee, budget: secs(60), known_failure: None },
        Criterion { number: 6, title: "three-goods robustness", suite: Suite::ThreeGoods, budget: secs(5), known_failure: None },
        Criterion { number: 7, title: "golden example numbers", suite: Suite::ExampleNumbers, budget: secs(1), known_failure: None },
        Criterion { number: 8, title: "adversary defeats", suite: Suite::AdversaryDefeats, budget: secs(120), known_failure: None },
        Criterion { number: 9, title: "error consistency", suite: Suite::ErrorConsistency, budget: secs(120), known_failure: None },
        Criterion { number: 10, title: "figure curves", suite: Suite::FigureCurves, budget: secs(1), known_failure: None },
    ]
}

fn line(c: &Criterion, r: &SuiteReport, elapsed: Duration) -> String {
    let verdict = if r.passed && elapsed <= c.budget { "PASS" } else { "FAIL" };
    let mut s = format!(
        "{verdict} criterion {:>2} {:<26} {:>5} cases {:>4} failures {:>8.3}s (budget {}s)",
        c.number,
        c.title,
        r.cases,
        r.failures,
        elapsed.as_secs_f64(),
        c.budget.as_secs()
    );
    if let Some(why) = c.known_failure {
        s.push_str(&format!("  [known: {why}]"));
    }
    s
}

#[test]
fn acceptance() {
    let mut unexpected = Vec::new();
    for c in criteria() {
        let start = Instant::now();
        let report = verify_claims(c.suite);
        let elapsed = start.elapsed();
        let mut text = line(&c, &report, elapsed);
        if !report.passed {
            for d in report.detail.iter().take(3) {
                text.push_str(&format!("\n      {d}"));
            }
        }
        writeln!(std::io::stderr(), "{text}").unwrap();
        let ok = report.passed && elapsed <= c.budget;
        match (c.known_failure, ok) {
            (None, false) => unexpected.push(format!("criterion {} failed", c.number)),
            (Some(_), true) => unexpected.push(format!("criterion {} now passes; update the known failure", c.number)),
            _ => {}
        }
    }
    assert!(unexpected.is_empty(), "{unexpected:?}");
}
