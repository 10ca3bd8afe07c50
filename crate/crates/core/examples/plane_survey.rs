//! Run the core extraction for several prime fields and report whether each
//! core is a projective plane of order q.
//!
//! ```bash
//! cargo run --release -p ternions --example plane_survey -- 2 3 5 7
//! ```

use std::time::Instant;

use ternions::{analyze, RingCtx, SearchOptions, Side};

fn main() -> ternions::Result<()> {
    let mut fields: Vec<u32> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    if fields.is_empty() {
        fields = vec![2, 3, 5];
    }
    for q in fields {
        let start = Instant::now();
        let ring = RingCtx::new(q)?;
        for side in [Side::Left, Side::Right] {
            let run = analyze(&ring, 2, side, &SearchOptions::default())?;
            let core = &run.core;
            println!(
                "q={q} {side:>5}: {} submodules, {} points, {} lines, multiplicities {:?}, plane of order {:?}",
                run.report.distinct_submodules,
                core.points.len(),
                core.lines.len(),
                core.multiplicity_histogram(),
                core.verdict.order,
            );
        }
        println!("      ({:.2?})", start.elapsed());
    }
    Ok(())
}
