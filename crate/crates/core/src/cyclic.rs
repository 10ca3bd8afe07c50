//! Tuples over the ternions and the cyclic submodules they generate.
//!
//! A tuple `(r_1, ..., r_{n+1})` generates the left cyclic submodule
//! `{(α r_1, ..., α r_{n+1}) : α ∈ R}` (right: `r_i α`). It is free when
//! `α ↦ (α r_i)` is injective, and unimodular when `Σ r_i x_i = 1` for some
//! `x_i ∈ R`.
//!
//! The hot paths work on slices of element encodings; [`ModTuple`] is the
//! owned, validated form used at API boundaries.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{Elem, Ideal, RingCtx, Ternion};

/// Which side ring elements multiply from when scaling a tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    /// The maximal ideal that carries the non-unimodular free generators on this side.
    pub fn home_ideal(self) -> Ideal {
        match self {
            Side::Left => Ideal::I1,
            Side::Right => Ideal::I2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(format!("expected `left` or `right`, got `{other}`")),
        }
    }
}

/// Encoding of (n+1)-tuples as base-q^3 integers, first entry most significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TupleSpace {
    radix: u64,
    len: usize,
}

impl TupleSpace {
    pub fn new(ring: &RingCtx, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank(n));
        }
        Ok(TupleSpace { radix: ring.order() as u64, len: n + 1 })
    }

    /// Number of entries, n + 1.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Rank parameter n.
    pub fn rank(&self) -> usize {
        self.len - 1
    }

    /// q^{3(n+1)} as a wide integer, so oversize instances can be reported.
    pub fn cardinality(&self) -> u128 {
        (self.radix as u128).saturating_pow(self.len as u32)
    }

    #[inline]
    pub fn encode(&self, entries: &[Elem]) -> u64 {
        entries.iter().fold(0u64, |acc, &e| acc * self.radix + e as u64)
    }

    #[inline]
    pub fn decode_into(&self, mut code: u64, out: &mut [Elem]) {
        for slot in out.iter_mut().rev() {
            *slot = (code % self.radix) as Elem;
            code /= self.radix;
        }
    }

    pub fn decode(&self, code: u64) -> Vec<Elem> {
        let mut out = vec![0; self.len];
        self.decode_into(code, &mut out);
        out
    }
}

/// An (n+1)-tuple of ternions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModTuple {
    entries: Vec<Ternion>,
}

impl ModTuple {
    /// Builds a tuple of rank `entries.len() - 1`, checking every coordinate against `ring`.
    pub fn new(ring: &RingCtx, entries: Vec<Ternion>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::InvalidRank(entries.len().saturating_sub(1)));
        }
        for &t in &entries {
            ring.validate(t)?;
        }
        Ok(ModTuple { entries })
    }

    pub fn zero(n: usize) -> Self {
        ModTuple { entries: vec![Ternion::default(); n + 1] }
    }

    /// Tuple given by its 0..=7 labels (order-eight ring only).
    pub fn from_labels(ring: &RingCtx, labels: &[u8]) -> Result<Self> {
        let entries = labels.iter().map(|&l| ring.paper_unlabel(l)).collect::<Result<Vec<_>>>()?;
        ModTuple::new(ring, entries)
    }

    pub fn from_elems(ring: &RingCtx, elems: &[Elem]) -> Self {
        ModTuple { entries: elems.iter().map(|&e| ring.decode(e)).collect() }
    }

    pub fn from_code(ring: &RingCtx, n: usize, code: u64) -> Result<Self> {
        let space = TupleSpace::new(ring, n)?;
        if code as u128 >= space.cardinality() {
            return Err(Error::CodeOutOfRange { code, size: space.cardinality() });
        }
        Ok(ModTuple::from_elems(ring, &space.decode(code)))
    }

    pub fn entries(&self) -> &[Ternion] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn elems(&self, ring: &RingCtx) -> Vec<Elem> {
        self.entries.iter().map(|&t| ring.encode(t)).collect()
    }

    pub fn code(&self, ring: &RingCtx) -> u64 {
        let radix = ring.order() as u64;
        self.entries.iter().fold(0u64, |acc, &t| acc * radix + ring.encode(t) as u64)
    }

    pub fn labels(&self, ring: &RingCtx) -> Result<Vec<u8>> {
        self.entries.iter().map(|&t| ring.paper_label(t)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|t| *t == Ternion::default())
    }

    /// Entrywise transpose.
    pub fn transpose(&self, ring: &RingCtx) -> ModTuple {
        ModTuple { entries: self.entries.iter().map(|&t| ring.transpose(t)).collect() }
    }

    pub fn lies_in(&self, ring: &RingCtx, ideal: Ideal) -> bool {
        self.entries.iter().all(|&t| ring.in_ideal(ideal, t))
    }
}

/// Elements `x_1, ..., x_{n+1}` with `Σ r_i x_i = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnimodWitness {
    pub witnesses: Vec<Ternion>,
}

impl UnimodWitness {
    /// Recomputes `Σ r_i x_i` and compares it with unity.
    pub fn certifies(&self, ring: &RingCtx, t: &ModTuple) -> bool {
        if self.witnesses.len() != t.entries().len() {
            return false;
        }
        let sum = t
            .entries()
            .iter()
            .zip(&self.witnesses)
            .fold(Ternion::default(), |acc, (&r, &x)| ring.add(acc, ring.mul(r, x)));
        sum == Ternion::new(1, 0, 1)
    }
}

#[inline]
pub(crate) fn scale_elems(ring: &RingCtx, side: Side, alpha: Elem, src: &[Elem], dst: &mut [Elem]) {
    match side {
        Side::Left => {
            for (d, &r) in dst.iter_mut().zip(src) {
                *d = ring.mul_enc(alpha, r);
            }
        }
        Side::Right => {
            for (d, &r) in dst.iter_mut().zip(src) {
                *d = ring.mul_enc(r, alpha);
            }
        }
    }
}

/// Some entry has a nonzero top-left coordinate and some entry has a nonzero
/// bottom-right coordinate.
#[inline]
pub(crate) fn is_unimodular_elems(ring: &RingCtx, entries: &[Elem]) -> bool {
    entries.iter().any(|&e| !ring.in_ideal_enc(Ideal::I1, e))
        && entries.iter().any(|&e| !ring.in_ideal_enc(Ideal::I2, e))
}

/// Counts distinct scalings, stopping at the first repeated image.
pub(crate) fn is_free_elems(
    ring: &RingCtx,
    space: &TupleSpace,
    side: Side,
    entries: &[Elem],
    seen: &mut HashSet<u64>,
    buf: &mut [Elem],
) -> bool {
    seen.clear();
    for alpha in 0..ring.order() as Elem {
        scale_elems(ring, side, alpha, entries, buf);
        if !seen.insert(space.encode(buf)) {
            return false;
        }
    }
    true
}

/// Sorted tuple codes of the cyclic submodule generated by `entries`.
pub(crate) fn generate_elems(ring: &RingCtx, space: &TupleSpace, side: Side, entries: &[Elem]) -> Vec<u64> {
    let mut buf = vec![0; entries.len()];
    let mut set: Vec<u64> = (0..ring.order() as Elem)
        .map(|alpha| {
            scale_elems(ring, side, alpha, entries, &mut buf);
            space.encode(&buf)
        })
        .collect();
    set.sort_unstable();
    set.dedup();
    set
}

/// `α · t` (left) or `t · α` (right), entrywise.
pub fn scale(ring: &RingCtx, side: Side, alpha: Ternion, t: &ModTuple) -> ModTuple {
    let src = t.elems(ring);
    let mut dst = vec![0; src.len()];
    scale_elems(ring, side, ring.encode(alpha), &src, &mut dst);
    ModTuple::from_elems(ring, &dst)
}

/// The cyclic submodule generated by `gen`, as sorted tuple codes.
pub fn submodule_generate(ring: &RingCtx, side: Side, gen: &ModTuple) -> Vec<u64> {
    let space = TupleSpace { radix: ring.order() as u64, len: gen.entries().len() };
    generate_elems(ring, &space, side, &gen.elems(ring))
}

pub fn is_free(ring: &RingCtx, side: Side, gen: &ModTuple) -> bool {
    let space = TupleSpace { radix: ring.order() as u64, len: gen.entries().len() };
    let entries = gen.elems(ring);
    let mut buf = vec![0; entries.len()];
    is_free_elems(ring, &space, side, &entries, &mut HashSet::with_capacity(ring.order()), &mut buf)
}

pub fn is_unimodular_fast(ring: &RingCtx, t: &ModTuple) -> bool {
    is_unimodular_elems(ring, &t.elems(ring))
}

/// Exhaustive witness search in canonical order (x_1 most significant);
/// returns the first hit. Cost grows as q^{3(n+1)}.
pub fn is_unimodular_oracle(ring: &RingCtx, t: &ModTuple) -> Option<UnimodWitness> {
    fn search(ring: &RingCtx, r: &[Elem], x: &mut [Elem], level: usize, partial: Elem) -> bool {
        for cand in 0..ring.order() as Elem {
            x[level] = cand;
            let acc = ring.add_enc(partial, ring.mul_enc(r[level], cand));
            if level + 1 == r.len() {
                if acc == ring.one() {
                    return true;
                }
            } else if search(ring, r, x, level + 1, acc) {
                return true;
            }
        }
        false
    }

    let r = t.elems(ring);
    let mut x = vec![0; r.len()];
    search(ring, &r, &mut x, 0, ring.zero()).then(|| UnimodWitness {
        witnesses: x.iter().map(|&e| ring.decode(e)).collect(),
    })
}
