//! The snowflake for q = 2, n = 2: all 21 free left cyclic submodules with
//! their generators, and how many submodules pass through each triple.
//!
//! ```bash
//! cargo run -p ternions --example fano_snowflake -- right
//! ```

use ternions::{build_snowflake, ModTuple, RingCtx, SearchOptions, Side};

fn main() -> ternions::Result<()> {
    let side: Side = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(Side::Left);
    let ring = RingCtx::new(2)?;
    let sf = build_snowflake(&ring, 2, side, &SearchOptions::default())?;
    let show = |code| format!("{:?}", ModTuple::from_code(&ring, 2, code).unwrap().labels(&ring).unwrap());

    for (k, s) in sf.submodules.iter().enumerate() {
        let gens: Vec<String> = s.generators.iter().map(|&g| show(g)).collect();
        let els: Vec<String> = s.elements.iter().map(|&e| show(e)).collect();
        println!("S{k:<2} generated by {}: {}", gens.join(" = "), els.join(" "));
    }
    println!();
    for (degree, count) in sf.histogram.iter().rev() {
        let sample: Vec<String> = sf.tuples_of_degree(*degree).into_iter().take(7).map(show).collect();
        println!("{count:>2} triples on {degree} submodules, e.g. {}", sample.join(" "));
    }
    println!("the zero triple lies on all {}", sf.zero_degree);
    Ok(())
}
