//! The ring of order eight: labelled operation tables, units, idempotents,
//! nilpotents and the two maximal ideals.
//!
//! ```bash
//! cargo run -p ternions --example ring_tables
//! ```

use ternions::{Elem, Ideal, RingCtx};

fn labels(ring: &RingCtx, v: Vec<Elem>) -> Vec<u8> {
    let mut l: Vec<u8> = v.into_iter().map(|x| ring.label_enc(x).unwrap()).collect();
    l.sort();
    l
}

fn main() -> ternions::Result<()> {
    let ring = RingCtx::new(2)?;
    for label in 0..8 {
        println!("{label} = {}", ring.paper_unlabel(label)?);
    }

    let (add, mul) = ring.paper_label_tables()?;
    for (sym, table) in [("+", add), ("x", mul)] {
        println!("\n{sym} | 0 1 2 3 4 5 6 7");
        for (i, row) in table.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(u8::to_string).collect();
            println!("{i} | {}", cells.join(" "));
        }
    }

    println!("\nunits:       {:?}", labels(&ring, ring.units()));
    println!("idempotents: {:?}", labels(&ring, ring.idempotents()));
    println!("nilpotents:  {:?}", labels(&ring, ring.nilpotents()));
    for (name, ideal) in [("I1", Ideal::I1), ("I2", Ideal::I2), ("J", Ideal::J)] {
        println!("{name:<3}          {:?}", labels(&ring, ring.ideal_members(ideal)));
    }

    let ternary = RingCtx::new(3)?;
    println!("\nover GF(3): {} elements, {} units", ternary.order(), ternary.units().len());
    Ok(())
}
