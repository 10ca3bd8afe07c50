//! Left and right snowflakes side by side.

use std::collections::BTreeSet;

use super::{analyze, Analysis, Submodule};
use crate::cyclic::{Side, TupleSpace};
use crate::error::Result;
use crate::ring::RingCtx;
use crate::search::SearchOptions;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinReport {
    pub left: Analysis,
    pub right: Analysis,
    pub histograms_equal: bool,
    pub core_points_equal: bool,
    pub core_lines_equal: bool,
    /// Entrywise transpose carries the left submodules exactly onto the right ones.
    pub transpose_duality: bool,
}

impl TwinReport {
    pub fn all_equal(&self) -> bool {
        self.histograms_equal && self.core_points_equal && self.core_lines_equal
    }
}

fn point_set(a: &Analysis) -> BTreeSet<u64> {
    a.core.points.iter().map(|p| p.representative).collect()
}

fn line_set(a: &Analysis) -> BTreeSet<Vec<u64>> {
    a.core
        .lines
        .iter()
        .map(|l| {
            let mut reps: Vec<u64> = l.points.iter().map(|&i| a.core.points[i].representative).collect();
            reps.sort_unstable();
            reps
        })
        .collect()
}

/// Whether transposing every left element set yields exactly the right element sets.
pub fn left_right_transpose_duality(
    ring: &RingCtx,
    n: usize,
    left: &[Submodule],
    right: &[Submodule],
) -> Result<bool> {
    let space = TupleSpace::new(ring, n)?;
    let mut buf = vec![0; space.len()];
    let transposed: BTreeSet<Vec<u64>> = left
        .iter()
        .map(|s| {
            let mut set: Vec<u64> = s
                .elements
                .iter()
                .map(|&code| {
                    space.decode_into(code, &mut buf);
                    for e in buf.iter_mut() {
                        *e = ring.transpose_enc(*e);
                    }
                    space.encode(&buf)
                })
                .collect();
            set.sort_unstable();
            set
        })
        .collect();
    let right: BTreeSet<Vec<u64>> = right.iter().map(|s| s.elements.clone()).collect();
    Ok(transposed.len() == left.len() && transposed == right)
}

pub fn twin_compare(ring: &RingCtx, n: usize, opts: &SearchOptions) -> Result<TwinReport> {
    let left = analyze(ring, n, Side::Left, opts)?;
    let right = analyze(ring, n, Side::Right, opts)?;
    compare_analyses(ring, n, left, right)
}

/// Compares two finished runs; `left` and `right` name the slots, not the sides they were run on.
pub fn compare_analyses(ring: &RingCtx, n: usize, left: Analysis, right: Analysis) -> Result<TwinReport> {
    let transpose_duality =
        left_right_transpose_duality(ring, n, &left.snowflake.submodules, &right.snowflake.submodules)?;
    Ok(TwinReport {
        histograms_equal: left.snowflake.histogram == right.snowflake.histogram,
        core_points_equal: point_set(&left) == point_set(&right),
        core_lines_equal: line_set(&left) == line_set(&right),
        transpose_duality,
        left,
        right,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_eight_twins() {
        let r = RingCtx::new(2).unwrap();
        let t = twin_compare(&r, 2, &SearchOptions::default()).unwrap();
        assert!(t.all_equal());
        assert!(t.transpose_duality);
        assert!(t.left.report.generators_in_i1);
        assert!(t.right.report.generators_in_i2);
    }

    #[test]
    fn duality_fails_against_same_side() {
        let r = RingCtx::new(2).unwrap();
        let t = twin_compare(&r, 2, &SearchOptions::default()).unwrap();
        let left = &t.left.snowflake.submodules;
        assert!(!left_right_transpose_duality(&r, 2, left, left).unwrap());
    }
}
