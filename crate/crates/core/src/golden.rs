//! Reference data for the order-eight ring of ternions, written out by hand,
//! and a verifier that replays every listed fact against the computation.
//!
//! Nothing in [`GOLDEN`] is produced by this crate; it is the yardstick the
//! computed results are held to.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::cyclic::{ModTuple, Side};
use crate::error::Result;
use crate::ring::{Ideal, LabelTable, RingCtx, Ternion};
use crate::search::SearchOptions;
use crate::snowflake::{analyze, classify, compare_analyses, ClassificationReport, Domain, TwinReport};

/// A labelled triple.
pub type Triple = [u8; 3];

#[derive(Debug, Clone, Copy)]
pub struct GoldenSubmodule {
    pub generators: [Triple; 2],
    pub elements: [Triple; 8],
}

#[derive(Debug, Clone, Copy)]
pub struct GoldenPaperData {
    /// Label -> matrix entries `(a, b, c)` of `[[a, b], [0, c]]`.
    pub labels: [(u8, Triple); 8],
    pub addition: LabelTable,
    pub multiplication: LabelTable,
    pub i1: [u8; 4],
    pub i2: [u8; 4],
    pub radical: [u8; 2],
    pub units: [u8; 2],
    pub nilpotents: [u8; 2],
    /// Idempotents other than 0 and 1.
    pub idempotents: [u8; 4],
    pub submodules: [GoldenSubmodule; 21],
    pub degree_nine: [Triple; 7],
    pub degree_three: [Triple; 14],
    /// Number of nonzero triples lying on exactly one submodule.
    pub degree_one_count: usize,
}

const fn sub(g0: Triple, g1: Triple, elements: [Triple; 8]) -> GoldenSubmodule {
    GoldenSubmodule { generators: [g0, g1], elements }
}

pub const GOLDEN: GoldenPaperData = GoldenPaperData {
    labels: [
        (0, [0, 0, 0]),
        (1, [1, 0, 1]),
        (2, [1, 1, 1]),
        (3, [1, 1, 0]),
        (4, [0, 0, 1]),
        (5, [1, 0, 0]),
        (6, [0, 1, 0]),
        (7, [0, 1, 1]),
    ],
    addition: [
        [0, 1, 2, 3, 4, 5, 6, 7],
        [1, 0, 6, 7, 5, 4, 2, 3],
        [2, 6, 0, 4, 3, 7, 1, 5],
        [3, 7, 4, 0, 2, 6, 5, 1],
        [4, 5, 3, 2, 0, 1, 7, 6],
        [5, 4, 7, 6, 1, 0, 3, 2],
        [6, 2, 1, 5, 7, 3, 0, 4],
        [7, 3, 5, 1, 6, 2, 4, 0],
    ],
    multiplication: [
        [0, 0, 0, 0, 0, 0, 0, 0],
        [0, 1, 2, 3, 4, 5, 6, 7],
        [0, 2, 1, 3, 7, 5, 6, 4],
        [0, 3, 5, 3, 6, 5, 6, 0],
        [0, 4, 4, 0, 4, 0, 0, 4],
        [0, 5, 3, 3, 0, 5, 6, 6],
        [0, 6, 6, 0, 6, 0, 0, 6],
        [0, 7, 7, 0, 7, 0, 0, 7],
    ],
    i1: [0, 4, 6, 7],
    i2: [0, 3, 5, 6],
    radical: [0, 6],
    units: [1, 2],
    nilpotents: [0, 6],
    idempotents: [3, 4, 5, 7],
    submodules: [
        sub([4, 6, 7], [7, 6, 4], [[0, 0, 0], [4, 6, 7], [7, 6, 4], [6, 6, 0], [4, 0, 4], [0, 6, 6], [6, 0, 6], [7, 0, 7]]),
        sub([4, 7, 6], [7, 4, 6], [[0, 0, 0], [4, 7, 6], [7, 4, 6], [6, 0, 6], [4, 4, 0], [0, 6, 6], [6, 6, 0], [7, 7, 0]]),
        sub([6, 4, 7], [6, 7, 4], [[0, 0, 0], [6, 4, 7], [6, 7, 4], [6, 6, 0], [0, 4, 4], [6, 0, 6], [0, 6, 6], [0, 7, 7]]),
        sub([4, 4, 7], [7, 7, 4], [[0, 0, 0], [4, 4, 7], [7, 7, 4], [6, 6, 0], [4, 4, 4], [0, 0, 6], [6, 6, 6], [7, 7, 7]]),
        sub([4, 7, 4], [7, 4, 7], [[0, 0, 0], [4, 7, 4], [7, 4, 7], [6, 0, 6], [4, 4, 4], [0, 6, 0], [6, 6, 6], [7, 7, 7]]),
        sub([7, 4, 4], [4, 7, 7], [[0, 0, 0], [7, 4, 4], [4, 7, 7], [0, 6, 6], [4, 4, 4], [6, 0, 0], [6, 6, 6], [7, 7, 7]]),
        sub([4, 4, 6], [7, 7, 6], [[0, 0, 0], [4, 4, 6], [7, 7, 6], [6, 6, 6], [4, 4, 0], [0, 0, 6], [6, 6, 0], [7, 7, 0]]),
        sub([4, 6, 4], [7, 6, 7], [[0, 0, 0], [4, 6, 4], [7, 6, 7], [6, 6, 6], [4, 0, 4], [0, 6, 0], [6, 0, 6], [7, 0, 7]]),
        sub([6, 4, 4], [6, 7, 7], [[0, 0, 0], [6, 4, 4], [6, 7, 7], [6, 6, 6], [0, 4, 4], [6, 0, 0], [0, 6, 6], [0, 7, 7]]),
        sub([6, 6, 7], [6, 6, 4], [[0, 0, 0], [6, 6, 7], [6, 6, 4], [6, 6, 0], [0, 0, 4], [6, 6, 6], [0, 0, 6], [0, 0, 7]]),
        sub([6, 7, 6], [6, 4, 6], [[0, 0, 0], [6, 7, 6], [6, 4, 6], [6, 0, 6], [0, 4, 0], [6, 6, 6], [0, 6, 0], [0, 7, 0]]),
        sub([7, 6, 6], [4, 6, 6], [[0, 0, 0], [7, 6, 6], [4, 6, 6], [0, 6, 6], [4, 0, 0], [6, 6, 6], [6, 0, 0], [7, 0, 0]]),
        sub([0, 6, 7], [0, 6, 4], [[0, 0, 0], [0, 6, 7], [0, 6, 4], [0, 6, 0], [0, 0, 4], [0, 6, 6], [0, 0, 6], [0, 0, 7]]),
        sub([0, 7, 6], [0, 4, 6], [[0, 0, 0], [0, 7, 6], [0, 4, 6], [0, 0, 6], [0, 4, 0], [0, 6, 6], [0, 6, 0], [0, 7, 0]]),
        sub([0, 4, 7], [0, 7, 4], [[0, 0, 0], [0, 4, 7], [0, 7, 4], [0, 6, 0], [0, 4, 4], [0, 0, 6], [0, 6, 6], [0, 7, 7]]),
        sub([6, 0, 7], [6, 0, 4], [[0, 0, 0], [6, 0, 7], [6, 0, 4], [6, 0, 0], [0, 0, 4], [6, 0, 6], [0, 0, 6], [0, 0, 7]]),
        sub([7, 0, 6], [4, 0, 6], [[0, 0, 0], [7, 0, 6], [4, 0, 6], [0, 0, 6], [4, 0, 0], [6, 0, 6], [6, 0, 0], [7, 0, 0]]),
        sub([4, 0, 7], [7, 0, 4], [[0, 0, 0], [4, 0, 7], [7, 0, 4], [6, 0, 0], [4, 0, 4], [0, 0, 6], [6, 0, 6], [7, 0, 7]]),
        sub([6, 7, 0], [6, 4, 0], [[0, 0, 0], [6, 7, 0], [6, 4, 0], [6, 0, 0], [0, 4, 0], [6, 6, 0], [0, 6, 0], [0, 7, 0]]),
        sub([7, 6, 0], [4, 6, 0], [[0, 0, 0], [7, 6, 0], [4, 6, 0], [0, 6, 0], [4, 0, 0], [6, 6, 0], [6, 0, 0], [7, 0, 0]]),
        sub([4, 7, 0], [7, 4, 0], [[0, 0, 0], [4, 7, 0], [7, 4, 0], [6, 0, 0], [4, 4, 0], [0, 6, 0], [6, 6, 0], [7, 7, 0]]),
    ],
    degree_nine: [[6, 0, 0], [0, 6, 0], [0, 0, 6], [6, 6, 0], [6, 0, 6], [0, 6, 6], [6, 6, 6]],
    degree_three: [
        [4, 0, 0], [0, 4, 0], [0, 0, 4], [4, 4, 0], [4, 0, 4], [0, 4, 4], [4, 4, 4],
        [7, 0, 0], [0, 7, 0], [0, 0, 7], [7, 7, 0], [7, 0, 7], [0, 7, 7], [7, 7, 7],
    ],
    degree_one_count: 42,
};

/// Everything the verifier looks at, computed by the crate for q = 2, n = 2.
#[derive(Debug, Clone)]
pub struct PaperEvidence {
    pub ring: RingCtx,
    /// Run labelled "left"; `twin.right` is the run labelled "right".
    pub twin: TwinReport,
    /// Left-labelled run restricted to tuples over I2.
    pub left_over_i2: ClassificationReport,
}

impl PaperEvidence {
    pub fn gather(opts: &SearchOptions) -> Result<Self> {
        Self::gather_with_sides(Side::Left, Side::Right, opts)
    }

    /// Runs the two halves on the given sides; swapping them models a
    /// mixed-up scaling convention.
    pub fn gather_with_sides(left: Side, right: Side, opts: &SearchOptions) -> Result<Self> {
        let ring = RingCtx::new(2)?;
        let l = analyze(&ring, 2, left, opts)?;
        let r = analyze(&ring, 2, right, opts)?;
        let twin = compare_analyses(&ring, 2, l, r)?;
        let left_over_i2 = classify(&ring, 2, left, Domain::IdealPower(Ideal::I2), opts)?.report;
        Ok(PaperEvidence { ring, twin, left_over_i2 })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    /// What was confirmed, or the first differing item.
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{status}] ({}) {}: {}", self.id, self.name, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperVerification {
    pub checks: Vec<CheckOutcome>,
}

impl PaperVerification {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed)
    }
}

type Check = std::result::Result<String, String>;
type CheckFn = fn(&PaperEvidence) -> Check;

fn sorted<T: Ord + Clone>(v: &[T]) -> Vec<T> {
    let mut v = v.to_vec();
    v.sort();
    v
}

fn triple_set(ts: &[Triple]) -> BTreeSet<Triple> {
    ts.iter().copied().collect()
}

fn labels_of(ring: &RingCtx, n: usize, code: u64) -> Triple {
    let t = ModTuple::from_code(ring, n, code).expect("code in range");
    let l = t.labels(ring).expect("order-eight ring");
    [l[0], l[1], l[2]]
}

fn fmt_triple(t: &Triple) -> String {
    format!("({},{},{})", t[0], t[1], t[2])
}

fn golden_triples_in(ideal: &[u8], t: &Triple) -> bool {
    t.iter().all(|x| ideal.contains(x))
}

fn check_tables(ev: &PaperEvidence) -> Check {
    let ring = &ev.ring;
    for (label, [a, b, c]) in GOLDEN.labels {
        let t = ring.paper_unlabel(label).map_err(|e| e.to_string())?;
        if t != Ternion::new(a, b, c) {
            return Err(format!("label {label} is {t}, expected [{a} {b}; 0 {c}]"));
        }
    }
    let (add, mul) = ring.paper_label_tables().map_err(|e| e.to_string())?;
    for (name, got, want) in [("+", &add, &GOLDEN.addition), ("x", &mul, &GOLDEN.multiplication)] {
        for i in 0..8 {
            for j in 0..8 {
                if got[i][j] != want[i][j] {
                    return Err(format!("{i} {name} {j} = {}, expected {}", got[i][j], want[i][j]));
                }
            }
        }
    }
    Ok("8 labels and 128 table cells match".into())
}

fn check_ideals(ev: &PaperEvidence) -> Check {
    let ring = &ev.ring;
    for (name, ideal, want) in [
        ("I1", Ideal::I1, &GOLDEN.i1[..]),
        ("I2", Ideal::I2, &GOLDEN.i2[..]),
        ("J", Ideal::J, &GOLDEN.radical[..]),
    ] {
        let got: Vec<u8> =
            sorted(&ring.ideal_members(ideal).iter().map(|&x| ring.label_enc(x).unwrap()).collect::<Vec<_>>());
        if got != sorted(want) {
            return Err(format!("{name} = {got:?}, expected {want:?}"));
        }
    }
    Ok(format!("I1 = {:?}, I2 = {:?}, J = {:?}", GOLDEN.i1, GOLDEN.i2, GOLDEN.radical))
}

fn check_element_kinds(ev: &PaperEvidence) -> Check {
    let ring = &ev.ring;
    let labels = |v: Vec<u16>| sorted(&v.into_iter().map(|x| ring.label_enc(x).unwrap()).collect::<Vec<_>>());
    let units = labels(ring.units());
    if units != sorted(&GOLDEN.units) {
        return Err(format!("units {units:?}, expected {:?}", GOLDEN.units));
    }
    let nil = labels(ring.nilpotents());
    if nil != sorted(&GOLDEN.nilpotents) {
        return Err(format!("nilpotents {nil:?}, expected {:?}", GOLDEN.nilpotents));
    }
    let idem: Vec<u8> = labels(ring.idempotents()).into_iter().filter(|&l| l != 0 && l != 1).collect();
    if idem != sorted(&GOLDEN.idempotents) {
        return Err(format!("nontrivial idempotents {idem:?}, expected {:?}", GOLDEN.idempotents));
    }
    Ok(format!(
        "units {:?}, nilpotents {:?}, idempotents {:?}",
        GOLDEN.units, GOLDEN.nilpotents, GOLDEN.idempotents
    ))
}

fn check_submodules(ev: &PaperEvidence) -> Check {
    let ring = &ev.ring;
    let subs = &ev.twin.left.snowflake.submodules;
    let want_count = GOLDEN.submodules.len();
    if subs.len() != want_count {
        return Err(format!("{} distinct submodules, expected {want_count}", subs.len()));
    }
    let generator_total: usize = subs.iter().map(|s| s.generators.len()).sum();
    let want_generators = 2 * want_count;
    if generator_total != want_generators {
        return Err(format!("{generator_total} generators, expected {want_generators}"));
    }

    let computed: BTreeMap<BTreeSet<Triple>, BTreeSet<Triple>> = subs
        .iter()
        .map(|s| {
            let els = s.elements.iter().map(|&c| labels_of(ring, 2, c)).collect();
            let gens = s.generators.iter().map(|&c| labels_of(ring, 2, c)).collect();
            (els, gens)
        })
        .collect();
    for g in &GOLDEN.submodules {
        let els = triple_set(&g.elements);
        match computed.get(&els) {
            None => {
                return Err(format!(
                    "no computed submodule equals the set generated by {}",
                    fmt_triple(&g.generators[0])
                ))
            }
            Some(gens) if *gens != triple_set(&g.generators) => {
                let got: Vec<String> = gens.iter().map(fmt_triple).collect();
                return Err(format!(
                    "set of {} has generators {}, expected {} and {}",
                    fmt_triple(&g.generators[0]),
                    got.join(" "),
                    fmt_triple(&g.generators[0]),
                    fmt_triple(&g.generators[1])
                ));
            }
            Some(_) => {}
        }
    }

    let union: BTreeSet<Triple> = computed.keys().flatten().copied().collect();
    let want_union = GOLDEN.i1.len().pow(3);
    if union.len() != want_union || !union.iter().all(|t| golden_triples_in(&GOLDEN.i1, t)) {
        return Err(format!("union covers {} triples, expected all {want_union} over I1", union.len()));
    }
    Ok(format!(
        "{want_count} element sets with {want_generators} generators match; union is all {want_union} I1-triples"
    ))
}

fn check_degrees(ev: &PaperEvidence) -> Check {
    let ring = &ev.ring;
    let sf = &ev.twin.left.snowflake;
    let want: BTreeMap<usize, usize> = BTreeMap::from([
        (9, GOLDEN.degree_nine.len()),
        (3, GOLDEN.degree_three.len()),
        (1, GOLDEN.degree_one_count),
    ]);
    if sf.histogram != want {
        return Err(format!("histogram {:?}, expected {want:?}", sf.histogram));
    }
    for (degree, golden) in [(9, &GOLDEN.degree_nine[..]), (3, &GOLDEN.degree_three[..])] {
        let got: BTreeSet<Triple> =
            sf.tuples_of_degree(degree).iter().map(|&c| labels_of(ring, 2, c)).collect();
        if let Some(extra) = got.symmetric_difference(&triple_set(golden)).next() {
            return Err(format!("degree-{degree} triples differ at {}", fmt_triple(extra)));
        }
    }
    if sf.zero_degree != GOLDEN.submodules.len() {
        return Err(format!("zero triple lies on {} submodules, expected {}", sf.zero_degree, GOLDEN.submodules.len()));
    }
    Ok(format!(
        "degree 9: {}, degree 3: {}, degree 1: {}; special triples match",
        GOLDEN.degree_nine.len(),
        GOLDEN.degree_three.len(),
        GOLDEN.degree_one_count
    ))
}

fn check_fano_core(ev: &PaperEvidence) -> Check {
    let ring = &ev.ring;
    let core = &ev.twin.left.core;
    let (points, lines, mult) = (7, 7, 3);
    if core.points.len() != points || core.lines.len() != lines {
        return Err(format!("{} points and {} lines, expected {points} and {lines}", core.points.len(), core.lines.len()));
    }
    if let Some((i, m)) = core.multiplicities().into_iter().enumerate().find(|&(_, m)| m != mult) {
        return Err(format!("line {i} carried by {m} submodules, expected {mult}"));
    }
    let reps: BTreeSet<Triple> = core.points.iter().map(|p| labels_of(ring, 2, p.representative)).collect();
    if reps != triple_set(&GOLDEN.degree_nine) {
        return Err("core points are not the seven radical triples".into());
    }
    if !core.verdict.is_projective_plane || core.verdict.order != Some(2) {
        let why = core.verdict.failures.first().map(|f| f.to_string()).unwrap_or_default();
        return Err(format!("plane axioms fail at order 2: {why}"));
    }
    Ok(format!("{points} points, {lines} lines, each carried by {mult} submodules; plane of order 2"))
}

fn check_no_left_over_i2(ev: &PaperEvidence) -> Check {
    let found = ev.left_over_i2.counts.nonunimodular_free;
    if found != 0 {
        return Err(format!("{found} non-unimodular free left generators over I2, expected 0"));
    }
    Ok(format!("0 of {} triples over I2 qualify", ev.left_over_i2.counts.total))
}

fn check_right_twin(ev: &PaperEvidence) -> Check {
    let ring = &ev.ring;
    let right = &ev.twin.right.snowflake;
    let want = GOLDEN.submodules.len();
    if right.submodules.len() != want {
        return Err(format!("{} right submodules, expected {want}", right.submodules.len()));
    }
    for s in &right.submodules {
        for &g in &s.generators {
            let t = labels_of(ring, 2, g);
            if !golden_triples_in(&GOLDEN.i2, &t) {
                return Err(format!("right generator {} not over I2", fmt_triple(&t)));
            }
        }
    }
    if !ev.twin.histograms_equal {
        return Err(format!("right histogram {:?} differs from left", right.histogram));
    }
    if !ev.twin.core_points_equal || !ev.twin.core_lines_equal {
        return Err("right core differs from the left Fano plane".into());
    }
    Ok(format!("{want} right submodules over I2, same histogram, same Fano plane"))
}

/// Replays every reference fact against `ev`, one outcome per check.
pub fn verify_paper(ev: &PaperEvidence) -> PaperVerification {
    let checks: [(&'static str, CheckFn); 8] = [
        ("operation tables", check_tables),
        ("ideals and radical", check_ideals),
        ("units, nilpotents, idempotents", check_element_kinds),
        ("free submodules of non-unimodular triples", check_submodules),
        ("degree profile", check_degrees),
        ("radical core is the Fano plane", check_fano_core),
        ("no free left submodules from triples over I2", check_no_left_over_i2),
        ("right-side twin", check_right_twin),
    ];
    let checks = checks
        .iter()
        .enumerate()
        .map(|(i, (name, f))| {
            let (passed, detail) = match f(ev) {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckOutcome { id: i + 1, name, passed, detail }
        })
        .collect();
    PaperVerification { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_is_internally_consistent() {
        assert_eq!(GOLDEN.submodules.len(), 21);
        let gens: BTreeSet<Triple> = GOLDEN.submodules.iter().flat_map(|s| s.generators).collect();
        assert_eq!(gens.len(), 42);
        for s in &GOLDEN.submodules {
            assert!(s.elements.contains(&s.generators[0]) && s.elements.contains(&s.generators[1]));
            assert_eq!(triple_set(&s.elements).len(), 8);
        }
    }

    #[test]
    fn all_checks_pass() {
        let ev = PaperEvidence::gather(&SearchOptions::default()).unwrap();
        let v = verify_paper(&ev);
        for c in &v.checks {
            assert!(c.passed, "{c}");
        }
        assert_eq!(v.passed_count(), 8);
    }

    #[test]
    fn swapped_sides_fail_the_second_ideal_check() {
        let ev = PaperEvidence::gather_with_sides(Side::Right, Side::Left, &SearchOptions::default()).unwrap();
        let v = verify_paper(&ev);
        assert!(!v.checks[6].passed, "{}", v.checks[6]);
        assert!(v.checks[6].detail.starts_with("42 "));
    }

    #[test]
    fn missing_dedup_fails_the_listing_check() {
        let mut ev = PaperEvidence::gather(&SearchOptions::default()).unwrap();
        let subs = &mut ev.twin.left.snowflake.submodules;
        let split: Vec<_> = subs
            .iter()
            .flat_map(|s| {
                s.generators.iter().map(move |&g| {
                    let mut one = s.clone();
                    one.generators = vec![g];
                    one.canonical_generator = g;
                    one
                })
            })
            .collect();
        *subs = split;
        let v = verify_paper(&ev);
        let first = v.first_failure().unwrap();
        assert_eq!(first.id, 4);
        assert_eq!(first.detail, "42 distinct submodules, expected 21");
    }
}
