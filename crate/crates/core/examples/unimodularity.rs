//! Unimodular versus free: the diagonal test, the brute-force witness search,
//! and a few tuples that are free without being unimodular.
//!
//! ```bash
//! cargo run -p ternions --example unimodularity
//! ```

use ternions::{is_free, is_unimodular_fast, is_unimodular_oracle, ModTuple, RingCtx, Side};

fn main() -> ternions::Result<()> {
    let ring = RingCtx::new(2)?;
    for labels in [[1, 0, 0], [3, 4, 0], [4, 6, 7], [6, 6, 6], [0, 0, 0]] {
        let t = ModTuple::from_labels(&ring, &labels)?;
        let witness = is_unimodular_oracle(&ring, &t)
            .map(|w| format!("{:?}", w.witnesses.iter().map(|&x| ring.paper_label(x).unwrap()).collect::<Vec<_>>()))
            .unwrap_or_else(|| "none".into());
        println!(
            "{labels:?}: unimodular={} (witness {witness}), free left={}, free right={}",
            is_unimodular_fast(&ring, &t),
            is_free(&ring, Side::Left, &t),
            is_free(&ring, Side::Right, &t),
        );
    }
    Ok(())
}
