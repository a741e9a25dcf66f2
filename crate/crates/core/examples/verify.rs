//! Runs the claim-verification suites and prints one line each.

use efx_online::harness::{verify_all, Suite};

fn main() {
    let reports = verify_all();
    for r in &reports {
        println!("{} {:<20} {:>5} cases {:>3} failures", if r.passed { "PASS" } else { "FAIL" }, r.suite.to_string(), r.cases, r.failures);
        if !r.passed {
            for line in r.detail.iter().take(2) {
                println!("     {line}");
            }
        }
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!("{failed} of {} suites failed", Suite::ALL.len());
}
