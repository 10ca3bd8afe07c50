//! Replay the reference facts for the order-eight ring and print each check.
//!
//! ```bash
//! cargo run -p ternions --example verify_reference
//! ```

use ternions::{verify_paper, PaperEvidence, SearchOptions};

fn main() -> ternions::Result<()> {
    let evidence = PaperEvidence::gather(&SearchOptions::default())?;
    let verification = verify_paper(&evidence);
    for check in &verification.checks {
        println!("{check}");
    }
    if !verification.passed() {
        std::process::exit(1);
    }
    Ok(())
}
