//! Extract the radical core of a snowflake and check it against the axioms
//! of a projective plane.
//!
//! ```bash
//! cargo run -p ternions --example core_plane -- 3
//! ```

use ternions::{analyze, RingCtx, SearchOptions, Side};

fn main() -> ternions::Result<()> {
    let q: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let ring = RingCtx::new(q)?;
    let run = analyze(&ring, 2, Side::Left, &SearchOptions::default())?;
    let core = &run.core;

    println!("{} submodules, {} core points, {} core lines", run.snowflake.submodules.len(), core.points.len(), core.lines.len());
    for (i, p) in core.points.iter().enumerate() {
        let coords: Vec<String> = run
            .snowflake
            .decode(p.representative)
            .iter()
            .map(|t| t.b.to_string())
            .collect();
        println!("  P{i:<2} = ({}) with {} radical tuples", coords.join(":"), p.members.len());
    }
    for (i, l) in core.lines.iter().enumerate() {
        println!("  L{i:<2} = {:?}, carried by {} submodules", l.points, l.multiplicity());
    }
    match core.verdict.order {
        Some(order) => println!("projective plane of order {order}"),
        None => {
            println!("not a projective plane:");
            for f in &core.verdict.failures {
                println!("  {f}");
            }
        }
    }
    Ok(())
}
