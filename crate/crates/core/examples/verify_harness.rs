//! Runs the built-in regression suite with reduced sizes.
//!
//! cargo run --release --example verify_harness

use catdeg::verify::{run_suite, VerifyOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let options = VerifyOptions {
        k_max: 5,
        random_monoids: 5,
        ..VerifyOptions::default()
    };
    let outcomes = run_suite("paper", &options)?;
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!("[{status}] {:<26} {}", o.name, o.detail);
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!("{} checks, {failed} failed", outcomes.len());
    if failed > 0 {
        std::process::exit(1);
    }
    Ok(())
}
