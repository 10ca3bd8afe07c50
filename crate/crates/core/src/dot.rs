//! Graphviz DOT export of the snowflake as a bipartite incidence graph.
//!
//! Node `S<k>` is the k-th submodule in canonical order; node `t<code>` is a
//! nonzero tuple. Tuple nodes carry `degree` and `kind` (`core` when every
//! entry lies in the radical, else `peripheral`).

use std::fmt::Write;

use crate::ring::Ternion;
use crate::snowflake::{decode_tuple, CoreGeometry, SnowflakeStructure};

fn tuple_label(entries: &[Ternion], q: u32) -> String {
    let parts: Vec<String> = entries
        .iter()
        .map(|t| match (q, t.binary_label()) {
            (2, Some(l)) => l.to_string(),
            _ => format!("{}.{}.{}", t.a, t.b, t.c),
        })
        .collect();
    format!("({})", parts.join(","))
}

pub fn export_dot(sf: &SnowflakeStructure, core: &CoreGeometry) -> String {
    let mut out = String::new();
    let label = |code| tuple_label(&decode_tuple(sf.q, sf.n, code), sf.q);
    writeln!(out, "graph snowflake {{").unwrap();
    writeln!(out, "  // q={} n={} side={}", sf.q, sf.n, sf.side).unwrap();
    for (k, s) in sf.submodules.iter().enumerate() {
        writeln!(out, "  S{k} [shape=box, kind=submodule, label=\"{}\"];", label(s.canonical_generator)).unwrap();
    }
    for (&code, &degree) in &sf.degrees {
        let kind = if core.is_core_tuple(code) { "core" } else { "peripheral" };
        writeln!(out, "  t{code} [degree={degree}, kind={kind}, label=\"{}\"];", label(code)).unwrap();
    }
    for (k, s) in sf.submodules.iter().enumerate() {
        for &code in s.elements.iter().filter(|&&c| c != 0) {
            writeln!(out, "  S{k} -- t{code};").unwrap();
        }
    }
    writeln!(out, "}}").unwrap();
    out
}
