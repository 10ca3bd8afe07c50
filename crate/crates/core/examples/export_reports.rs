//! Write the JSON report and the DOT incidence graph of a snowflake.
//!
//! ```bash
//! cargo run -p ternions --example export_reports -- /tmp/snowflake
//! dot -Tsvg /tmp/snowflake.dot -o /tmp/snowflake.svg
//! ```

use std::path::PathBuf;

use ternions::{analyze, export_dot, report_json, JsonReport, RingCtx, SearchOptions, Side};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let stem = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "snowflake".into()));
    let ring = RingCtx::new(2)?;
    let run = analyze(&ring, 2, Side::Left, &SearchOptions::default())?;

    let json = stem.with_extension("json");
    let dot = stem.with_extension("dot");
    std::fs::write(&json, report_json(&JsonReport::snowflake(&run)))?;
    std::fs::write(&dot, export_dot(&run.snowflake, &run.core))?;
    println!("wrote {} and {}", json.display(), dot.display());
    Ok(())
}
