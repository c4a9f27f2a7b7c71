//! Run every invariant suite at a small size and list the results.

use zomega::verify::{verify_all, VerifyConfig};

fn main() {
    let report = verify_all(&VerifyConfig { cap_norm: 300, ..VerifyConfig::default() });
    for s in &report.suites {
        println!("{:<14} {:>6} checks  {}", s.name, s.checks, if s.passed { "ok" } else { "FAILED" });
    }
    println!("all passed: {}", report.passed);
}
