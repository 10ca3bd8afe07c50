//! Exhaustive classification of tuples and the snowflake incidence structure
//! formed by the free cyclic submodules of non-unimodular generators.

mod core;
mod plane;
mod twin;

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;

pub use self::core::{extract_core, CoreGeometry, CoreLine, CorePoint};
pub use self::plane::{check_projective_plane, verify_plane, PlaneFailure, PlaneVerdict};
pub use self::twin::{compare_analyses, left_right_transpose_duality, twin_compare, TwinReport};

use crate::cyclic::{generate_elems, is_free_elems, is_unimodular_elems, ModTuple, Side, TupleSpace};
use crate::error::Result;
use crate::ring::{Elem, Ideal, RingCtx, Ternion};
use crate::search::SearchOptions;

/// Which tuples an enumeration visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Domain {
    /// All of R^{n+1}.
    All,
    /// Only tuples whose entries all lie in the given ideal.
    IdealPower(#[serde(skip)] Ideal),
}

/// Tuple counts of one exhaustive run; the three classes partition `total`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TupleCounts {
    pub total: u64,
    pub unimodular: u64,
    pub nonunimodular_free: u64,
    pub nonunimodular_nonfree: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub q: u32,
    pub n: usize,
    pub side: Side,
    pub domain: Domain,
    pub counts: TupleCounts,
    pub distinct_submodules: usize,
    /// generators per submodule -> number of submodules with that many.
    pub generators_per_submodule: BTreeMap<usize, usize>,
    pub generators_in_i1: bool,
    pub generators_in_i2: bool,
    /// Union of all submodules equals the side's home ideal to the power n+1.
    pub union_equals_ideal_power: bool,
}

impl ClassificationReport {
    /// Containment flag for the side's home ideal.
    pub fn generators_in_home_ideal(&self) -> bool {
        match self.side {
            Side::Left => self.generators_in_i1,
            Side::Right => self.generators_in_i2,
        }
    }
}

/// A free cyclic submodule with every non-unimodular tuple that generates it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Submodule {
    pub side: Side,
    /// Smallest code in `generators`.
    pub canonical_generator: u64,
    /// Ascending tuple codes.
    pub generators: Vec<u64>,
    /// Ascending tuple codes; q^3 of them.
    pub elements: Vec<u64>,
}

impl Submodule {
    pub fn contains(&self, code: u64) -> bool {
        self.elements.binary_search(&code).is_ok()
    }

    pub fn canonical_tuple(&self, ring: &RingCtx, n: usize) -> ModTuple {
        ModTuple::from_code(ring, n, self.canonical_generator).expect("generator code in range")
    }
}

/// Report plus the deduplicated submodules it counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub report: ClassificationReport,
    pub submodules: Vec<Submodule>,
}

#[derive(Default)]
struct Tally {
    unimodular: u64,
    nonfree: u64,
    free: Vec<u64>,
}

/// Enumerates the domain in code order; returns its size and per-chunk tallies.
fn enumerate_domain(
    ring: &RingCtx,
    space: &TupleSpace,
    side: Side,
    domain: Domain,
    opts: &SearchOptions,
) -> Result<(u64, Vec<Tally>)> {
    let members: Vec<Elem> = match domain {
        Domain::All => (0..ring.order() as Elem).collect(),
        Domain::IdealPower(ideal) => ring.ideal_members(ideal),
    };
    let m = members.len() as u64;
    let total = opts.check_budget((m as u128).saturating_pow(space.len() as u32))?;

    let tallies = opts.map_chunks(total, |range| {
        let mut tally = Tally::default();
        let mut entries = vec![0 as Elem; space.len()];
        let mut buf = vec![0 as Elem; space.len()];
        let mut seen = HashSet::with_capacity(ring.order());
        for idx in range {
            let mut rest = idx;
            for slot in entries.iter_mut().rev() {
                *slot = members[(rest % m) as usize];
                rest /= m;
            }
            if is_unimodular_elems(ring, &entries) {
                tally.unimodular += 1;
            } else if is_free_elems(ring, space, side, &entries, &mut seen, &mut buf) {
                tally.free.push(space.encode(&entries));
            } else {
                tally.nonfree += 1;
            }
        }
        tally
    })?;
    Ok((total, tallies))
}

/// Classifies every tuple of `domain` and deduplicates the free cyclic
/// submodules generated by non-unimodular tuples.
pub fn classify(
    ring: &RingCtx,
    n: usize,
    side: Side,
    domain: Domain,
    opts: &SearchOptions,
) -> Result<Classification> {
    let space = TupleSpace::new(ring, n)?;
    let (total, tallies) = enumerate_domain(ring, &space, side, domain, opts)?;

    let mut counts = TupleCounts { total, ..TupleCounts::default() };
    let mut generators = Vec::new();
    for t in tallies {
        counts.unimodular += t.unimodular;
        counts.nonunimodular_nonfree += t.nonfree;
        generators.extend(t.free);
    }
    counts.nonunimodular_free = generators.len() as u64;

    let element_sets = opts.map_slice(&generators, |&code| {
        generate_elems(ring, &space, side, &space.decode(code))
    })?;

    // Generators arrive in ascending order, so the first one seen for a set is its minimum.
    let mut index: HashMap<&[u64], usize> = HashMap::new();
    let mut submodules: Vec<Submodule> = Vec::new();
    for (&code, set) in generators.iter().zip(&element_sets) {
        match index.get(set.as_slice()) {
            Some(&k) => submodules[k].generators.push(code),
            None => {
                index.insert(set.as_slice(), submodules.len());
                submodules.push(Submodule {
                    side,
                    canonical_generator: code,
                    generators: vec![code],
                    elements: set.clone(),
                });
            }
        }
    }

    let in_ideal = |code: u64, ideal: Ideal| {
        space.decode(code).iter().all(|&e| ring.in_ideal_enc(ideal, e))
    };
    let generators_in_i1 = generators.iter().all(|&c| in_ideal(c, Ideal::I1));
    let generators_in_i2 = generators.iter().all(|&c| in_ideal(c, Ideal::I2));

    let home = side.home_ideal();
    let mut union: Vec<u64> = submodules.iter().flat_map(|s| s.elements.iter().copied()).collect();
    union.sort_unstable();
    union.dedup();
    let ideal_power = (ring.ideal_members(home).len() as u128).pow(space.len() as u32);
    let union_equals_ideal_power =
        union.len() as u128 == ideal_power && union.iter().all(|&c| in_ideal(c, home));

    let mut generators_per_submodule = BTreeMap::new();
    for s in &submodules {
        *generators_per_submodule.entry(s.generators.len()).or_insert(0) += 1;
    }

    let report = ClassificationReport {
        q: ring.q(),
        n,
        side,
        domain,
        counts,
        distinct_submodules: submodules.len(),
        generators_per_submodule,
        generators_in_i1,
        generators_in_i2,
        union_equals_ideal_power,
    };
    Ok(Classification { report, submodules })
}

/// Classification over all of R^{n+1}.
pub fn classify_all(
    ring: &RingCtx,
    n: usize,
    side: Side,
    opts: &SearchOptions,
) -> Result<ClassificationReport> {
    classify(ring, n, side, Domain::All, opts).map(|c| c.report)
}

/// Distinct free cyclic submodules of non-unimodular generators, by canonical generator.
pub fn collect_submodules(
    ring: &RingCtx,
    n: usize,
    side: Side,
    opts: &SearchOptions,
) -> Result<Vec<Submodule>> {
    classify(ring, n, side, Domain::All, opts).map(|c| c.submodules)
}

/// Codes of unimodular tuples whose cyclic submodule on `side` is not free.
pub fn unimodular_nonfree(
    ring: &RingCtx,
    n: usize,
    side: Side,
    opts: &SearchOptions,
) -> Result<Vec<u64>> {
    let space = TupleSpace::new(ring, n)?;
    let total = opts.check_budget(space.cardinality())?;
    let parts = opts.map_chunks(total, |range| {
        let mut entries = vec![0 as Elem; space.len()];
        let mut buf = vec![0 as Elem; space.len()];
        let mut seen = HashSet::with_capacity(ring.order());
        let mut bad = Vec::new();
        for code in range {
            space.decode_into(code, &mut entries);
            if is_unimodular_elems(ring, &entries)
                && !is_free_elems(ring, &space, side, &entries, &mut seen, &mut buf)
            {
                bad.push(code);
            }
        }
        bad
    })?;
    Ok(parts.into_iter().flatten().collect())
}

/// Submodules together with how many of them pass through each tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnowflakeStructure {
    pub q: u32,
    pub n: usize,
    pub side: Side,
    pub submodules: Vec<Submodule>,
    /// Nonzero tuple code -> number of submodules containing it.
    pub degrees: BTreeMap<u64, usize>,
    /// degree -> number of nonzero tuples with that degree.
    pub histogram: BTreeMap<usize, usize>,
    /// Submodules containing the zero tuple.
    pub zero_degree: usize,
}

impl SnowflakeStructure {
    pub fn from_submodules(q: u32, n: usize, side: Side, submodules: Vec<Submodule>) -> Self {
        let mut degrees = BTreeMap::new();
        let mut zero_degree = 0;
        for s in &submodules {
            for &code in &s.elements {
                if code == 0 {
                    zero_degree += 1;
                } else {
                    *degrees.entry(code).or_insert(0) += 1;
                }
            }
        }
        let mut histogram = BTreeMap::new();
        for &d in degrees.values() {
            *histogram.entry(d).or_insert(0) += 1;
        }
        SnowflakeStructure { q, n, side, submodules, degrees, histogram, zero_degree }
    }

    pub fn max_degree(&self) -> usize {
        self.histogram.keys().next_back().copied().unwrap_or(0)
    }

    /// Nonzero tuples attaining `degree`, ascending.
    pub fn tuples_of_degree(&self, degree: usize) -> Vec<u64> {
        self.degrees.iter().filter(|(_, &d)| d == degree).map(|(&c, _)| c).collect()
    }

    /// Entries of a tuple code as ternions.
    pub fn decode(&self, code: u64) -> Vec<Ternion> {
        decode_tuple(self.q, self.n, code)
    }
}

/// Entries of a tuple code over GF(q), without a ring context.
pub fn decode_tuple(q: u32, n: usize, code: u64) -> Vec<Ternion> {
    let radix = (q as u64).pow(3);
    let mut out = vec![Ternion::default(); n + 1];
    let mut rest = code;
    for slot in out.iter_mut().rev() {
        *slot = Ternion::from_code(q, (rest % radix) as Elem);
        rest /= radix;
    }
    out
}

pub fn build_snowflake(
    ring: &RingCtx,
    n: usize,
    side: Side,
    opts: &SearchOptions,
) -> Result<SnowflakeStructure> {
    let submodules = collect_submodules(ring, n, side, opts)?;
    Ok(SnowflakeStructure::from_submodules(ring.q(), n, side, submodules))
}

/// Everything one run produces: counts, the snowflake and its core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    pub report: ClassificationReport,
    pub snowflake: SnowflakeStructure,
    pub core: CoreGeometry,
}

pub fn analyze(ring: &RingCtx, n: usize, side: Side, opts: &SearchOptions) -> Result<Analysis> {
    let Classification { report, submodules } = classify(ring, n, side, Domain::All, opts)?;
    let snowflake = SnowflakeStructure::from_submodules(ring.q(), n, side, submodules);
    let core = extract_core(ring, &snowflake)?;
    Ok(Analysis { report, snowflake, core })
}
