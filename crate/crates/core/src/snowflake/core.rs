//! The core of a snowflake: tuples with every entry in the Jacobson radical.
//!
//! Unit scaling acts on a radical tuple `((0,b_1,0), ..., (0,b_{n+1},0))`
//! as multiplication of `(b_1, ..., b_{n+1})` by a nonzero field element, so
//! each core point is a GF(q)* orbit of nonzero radical tuples, i.e. a point
//! of PG(n, q). Every submodule is a union of such orbits; the orbits it
//! contains form its line.

use std::collections::BTreeMap;

use super::plane::{verify_plane, PlaneVerdict};
use super::SnowflakeStructure;
use crate::error::{Error, Result};
use crate::ring::{RingCtx, Ternion};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorePoint {
    /// Member whose first nonzero radical coordinate is 1.
    pub representative: u64,
    /// All q-1 tuple codes of the orbit, ascending.
    pub members: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreLine {
    /// Indices into [`CoreGeometry::points`], ascending.
    pub points: Vec<usize>,
    /// Indices of the submodules carrying this line, ascending.
    pub carriers: Vec<usize>,
}

impl CoreLine {
    pub fn multiplicity(&self) -> usize {
        self.carriers.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreGeometry {
    pub q: u32,
    pub n: usize,
    /// Ordered by representative code.
    pub points: Vec<CorePoint>,
    /// Ordered lexicographically by point indices.
    pub lines: Vec<CoreLine>,
    pub verdict: PlaneVerdict,
}

impl CoreGeometry {
    pub fn multiplicities(&self) -> Vec<usize> {
        self.lines.iter().map(CoreLine::multiplicity).collect()
    }

    /// multiplicity -> number of lines.
    pub fn multiplicity_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for l in &self.lines {
            *h.entry(l.multiplicity()).or_insert(0) += 1;
        }
        h
    }

    /// Index of the point whose orbit contains `code`.
    pub fn point_of(&self, code: u64) -> Option<usize> {
        self.points.iter().position(|p| p.members.binary_search(&code).is_ok())
    }

    pub fn is_core_tuple(&self, code: u64) -> bool {
        self.point_of(code).is_some()
    }

    /// Lines as point index lists, the shape [`check_projective_plane`] takes.
    ///
    /// [`check_projective_plane`]: super::check_projective_plane
    pub fn line_sets(&self) -> Vec<Vec<usize>> {
        self.lines.iter().map(|l| l.points.clone()).collect()
    }
}

/// Radical orbits of PG(n, q), by ascending representative code.
pub(crate) fn radical_points(ring: &RingCtx, n: usize) -> Vec<CorePoint> {
    let q = ring.q() as u64;
    let field = ring.field();
    let radix = ring.order() as u64;
    let len = n + 1;
    let code_of = |digits: &[u8]| {
        digits
            .iter()
            .fold(0u64, |acc, &b| acc * radix + ring.encode(Ternion::new(0, b, 0)) as u64)
    };

    let mut digits = vec![0u8; len];
    let mut points = Vec::new();
    for v in 1..q.pow(len as u32) {
        let mut rest = v;
        for d in digits.iter_mut().rev() {
            *d = (rest % q) as u8;
            rest /= q;
        }
        if digits.iter().find(|&&d| d != 0) != Some(&1) {
            continue;
        }
        let mut members: Vec<u64> = (1..q as u8)
            .map(|lambda| {
                let scaled: Vec<u8> = digits.iter().map(|&d| field.mul(lambda, d)).collect();
                code_of(&scaled)
            })
            .collect();
        members.sort_unstable();
        points.push(CorePoint { representative: code_of(&digits), members });
    }
    points
}

/// Extracts the radical core of `sf` and checks it against the plane axioms.
pub fn extract_core(ring: &RingCtx, sf: &SnowflakeStructure) -> Result<CoreGeometry> {
    let points = radical_points(ring, sf.n);

    let mut lines: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (k, s) in sf.submodules.iter().enumerate() {
        let mut on = Vec::new();
        for (i, p) in points.iter().enumerate() {
            let inside = p.members.iter().filter(|&&m| s.contains(m)).count();
            if inside == p.members.len() {
                on.push(i);
            } else if inside != 0 {
                return Err(Error::DegenerateCore {
                    submodule: k,
                    reason: format!("splits the scaling class of point {i}"),
                });
            }
        }
        if on.is_empty() {
            return Err(Error::DegenerateCore {
                submodule: k,
                reason: "contains no core point".to_string(),
            });
        }
        lines.entry(on).or_default().push(k);
    }

    let lines: Vec<CoreLine> =
        lines.into_iter().map(|(points, carriers)| CoreLine { points, carriers }).collect();
    let mut core = CoreGeometry {
        q: ring.q(),
        n: sf.n,
        points,
        lines,
        verdict: PlaneVerdict::default(),
    };
    core.verdict = verify_plane(&core, ring.q());
    Ok(core)
}
