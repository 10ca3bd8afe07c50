//! Prime-field arithmetic backing every ternion coordinate.
//!
//! ```bash
//! cargo run -p ternions --example field_arithmetic -- 7
//! ```

use ternions::FieldCtx;

fn main() {
    let q: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let field = match FieldCtx::new(q) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };

    println!("GF({q}) multiplication:");
    for a in field.residues() {
        let row: Vec<String> = field.residues().map(|b| field.mul(a, b).to_string()).collect();
        println!("  {a} | {}", row.join(" "));
    }
    println!("inverses:");
    for a in field.residues().skip(1) {
        println!("  {a}^-1 = {}", field.inv(a).unwrap());
    }
    println!("GF(4) is rejected: {}", FieldCtx::new(4).unwrap_err());
}
