//! Left and right snowflakes: generators in different maximal ideals, the
//! same degree profile and the same core.
//!
//! ```bash
//! cargo run -p ternions --example twin_snowflakes -- 3
//! ```

use ternions::{twin_compare, RingCtx, SearchOptions};

fn main() -> ternions::Result<()> {
    let q: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let ring = RingCtx::new(q)?;
    let twin = twin_compare(&ring, 2, &SearchOptions::default())?;
    for run in [&twin.left, &twin.right] {
        let r = &run.report;
        println!(
            "{:>5}: {} submodules, generators in I1: {}, in I2: {}, histogram {:?}",
            r.side.to_string(),
            r.distinct_submodules,
            r.generators_in_i1,
            r.generators_in_i2,
            run.snowflake.histogram
        );
    }
    println!("histograms equal:  {}", twin.histograms_equal);
    println!("core points equal: {}", twin.core_points_equal);
    println!("core lines equal:  {}", twin.core_lines_equal);
    println!("transpose maps left onto right: {}", twin.transpose_duality);
    Ok(())
}
