//! Run the acceptance criteria, optionally with the corrupted table.
//!
//! ```text
//! cargo run --release --example acceptance -- --corrupt-table
//! ```

use lspaths::acceptance::{run_acceptance_suite, AcceptanceConfig};

fn main() {
    let config = AcceptanceConfig {
        corrupt_table: std::env::args().any(|a| a == "--corrupt-table"),
        ..AcceptanceConfig::default()
    };
    let report = run_acceptance_suite(&config);
    for r in &report.results {
        let tag = if r.passed { "PASS" } else { "FAIL" };
        println!("{tag} {:>2} {:<45} {:>6} ms  {}", r.id, r.name, r.elapsed_ms, r.detail);
    }
    std::process::exit(if report.passed() { 0 } else { 1 });
}
