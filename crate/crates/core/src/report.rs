//! Canonical JSON rendering of classification, snowflake, core and twin runs.
//!
//! Field order is fixed by the struct declarations below. Output is a single
//! line with `", "` and `": "` separators, followed by a newline.

use std::io;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use serde_json::ser::Formatter;

use crate::cyclic::Side;
use crate::snowflake::{decode_tuple, Analysis, Classification, ClassificationReport, CoreGeometry, Submodule, TwinReport};

pub const SCHEMA_VERSION: &str = "1";

struct Spaced;

impl Formatter for Spaced {
    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        if first {
            Ok(())
        } else {
            w.write_all(b", ")
        }
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        if first {
            Ok(())
        } else {
            w.write_all(b", ")
        }
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        w.write_all(b": ")
    }
}

/// Serializes any report in the canonical layout.
pub fn report_json<T: Serialize>(report: &T) -> Vec<u8> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Spaced);
    report.serialize(&mut ser).expect("report types serialize infallibly");
    out.push(b'\n');
    out
}

/// A tuple as coordinate triples, plus 0..=7 labels over GF(2).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JsonTuple {
    pub coords: Vec<[u8; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<u8>>,
}

impl JsonTuple {
    pub fn new(q: u32, n: usize, code: u64) -> Self {
        let entries = decode_tuple(q, n, code);
        let labels = (q == 2).then(|| entries.iter().map(|t| t.binary_label().unwrap()).collect());
        JsonTuple { coords: entries.iter().map(|t| [t.a, t.b, t.c]).collect(), labels }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JsonCounts {
    pub total_tuples: u64,
    pub unimodular: u64,
    pub nonunimodular_nonfree: u64,
    pub nonunimodular_free_generators: u64,
    pub distinct_submodules: usize,
    pub generators_per_submodule: IntKeyed,
}

/// Integer-keyed counts written as a JSON object with string keys, largest key first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntKeyed(pub Vec<(usize, usize)>);

impl IntKeyed {
    fn from_map(map: &std::collections::BTreeMap<usize, usize>) -> Self {
        IntKeyed(map.iter().rev().map(|(&k, &v)| (k, v)).collect())
    }
}

impl Serialize for IntKeyed {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(&k.to_string(), v)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JsonSubmodule {
    pub canonical_generator: JsonTuple,
    pub generators: Vec<JsonTuple>,
    pub elements: Vec<JsonTuple>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JsonPoint {
    pub representative: JsonTuple,
    pub members: Vec<JsonTuple>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JsonVerdict {
    pub is_projective_plane: bool,
    pub order: Option<u32>,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JsonCore {
    pub points: Vec<JsonPoint>,
    pub lines: Vec<Vec<usize>>,
    pub line_multiplicities: Vec<usize>,
    pub verdict: JsonVerdict,
}

impl JsonCore {
    pub fn new(core: &CoreGeometry) -> Self {
        let tuple = |c| JsonTuple::new(core.q, core.n, c);
        JsonCore {
            points: core
                .points
                .iter()
                .map(|p| JsonPoint {
                    representative: tuple(p.representative),
                    members: p.members.iter().map(|&m| tuple(m)).collect(),
                })
                .collect(),
            lines: core.line_sets(),
            line_multiplicities: core.multiplicities(),
            verdict: JsonVerdict {
                is_projective_plane: core.verdict.is_projective_plane,
                order: core.verdict.order,
                failures: core.verdict.failures.iter().map(|f| f.to_string()).collect(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JsonContainment {
    #[serde(rename = "generators_in_I1", skip_serializing_if = "Option::is_none")]
    pub generators_in_i1: Option<bool>,
    #[serde(rename = "generators_in_I2", skip_serializing_if = "Option::is_none")]
    pub generators_in_i2: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JsonCoverage {
    pub union_equals_ideal_power: bool,
}

/// Schema "1" report for one side. Optional sections are omitted when absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JsonReport {
    pub schema_version: &'static str,
    pub q: u32,
    pub n: usize,
    pub side: Side,
    pub counts: JsonCounts,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_histogram: Option<IntKeyed>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zero_tuple_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub submodules: Option<Vec<JsonSubmodule>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub core: Option<JsonCore>,
    pub containment: JsonContainment,
    pub coverage: JsonCoverage,
}

fn submodules_json(q: u32, n: usize, subs: &[Submodule]) -> Vec<JsonSubmodule> {
    let tuple = |c| JsonTuple::new(q, n, c);
    subs.iter()
        .map(|s| JsonSubmodule {
            canonical_generator: tuple(s.canonical_generator),
            generators: s.generators.iter().map(|&g| tuple(g)).collect(),
            elements: s.elements.iter().map(|&e| tuple(e)).collect(),
        })
        .collect()
}

impl JsonReport {
    fn base(r: &ClassificationReport) -> Self {
        let containment = match r.side {
            Side::Left => JsonContainment { generators_in_i1: Some(r.generators_in_i1), generators_in_i2: None },
            Side::Right => JsonContainment { generators_in_i1: None, generators_in_i2: Some(r.generators_in_i2) },
        };
        JsonReport {
            schema_version: SCHEMA_VERSION,
            q: r.q,
            n: r.n,
            side: r.side,
            counts: JsonCounts {
                total_tuples: r.counts.total,
                unimodular: r.counts.unimodular,
                nonunimodular_nonfree: r.counts.nonunimodular_nonfree,
                nonunimodular_free_generators: r.counts.nonunimodular_free,
                distinct_submodules: r.distinct_submodules,
                generators_per_submodule: IntKeyed::from_map(&r.generators_per_submodule),
            },
            degree_histogram: None,
            zero_tuple_degree: None,
            submodules: None,
            core: None,
            containment,
            coverage: JsonCoverage { union_equals_ideal_power: r.union_equals_ideal_power },
        }
    }

    /// Counts, containment, coverage and every submodule.
    pub fn classification(c: &Classification) -> Self {
        let mut rep = Self::base(&c.report);
        rep.submodules = Some(submodules_json(c.report.q, c.report.n, &c.submodules));
        rep
    }

    /// Classification plus degree histogram and zero-tuple degree.
    pub fn snowflake(a: &Analysis) -> Self {
        let mut rep = Self::base(&a.report);
        rep.degree_histogram = Some(IntKeyed::from_map(&a.snowflake.histogram));
        rep.zero_tuple_degree = Some(a.snowflake.zero_degree);
        rep.submodules = Some(submodules_json(a.report.q, a.report.n, &a.snowflake.submodules));
        rep
    }

    /// Counts, degree histogram and the core; submodules omitted.
    pub fn core(a: &Analysis) -> Self {
        let mut rep = Self::base(&a.report);
        rep.degree_histogram = Some(IntKeyed::from_map(&a.snowflake.histogram));
        rep.zero_tuple_degree = Some(a.snowflake.zero_degree);
        rep.core = Some(JsonCore::new(&a.core));
        rep
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JsonTwin {
    pub schema_version: &'static str,
    pub q: u32,
    pub n: usize,
    pub histograms_equal: bool,
    pub core_points_equal: bool,
    pub core_lines_equal: bool,
    pub transpose_duality: bool,
    pub left: JsonReport,
    pub right: JsonReport,
}

impl JsonTwin {
    pub fn new(t: &TwinReport) -> Self {
        JsonTwin {
            schema_version: SCHEMA_VERSION,
            q: t.left.report.q,
            n: t.left.report.n,
            histograms_equal: t.histograms_equal,
            core_points_equal: t.core_points_equal,
            core_lines_equal: t.core_lines_equal,
            transpose_duality: t.transpose_duality,
            left: JsonReport::core(&t.left),
            right: JsonReport::core(&t.right),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Ideal, RingCtx};
    use crate::search::SearchOptions;
    use crate::snowflake::{analyze, classify, Domain};

    fn text(bytes: Vec<u8>) -> String {
        String::from_utf8(bytes).unwrap()
    }

    #[test]
    fn order_eight_snowflake_fields() {
        let r = RingCtx::new(2).unwrap();
        let a = analyze(&r, 2, Side::Left, &SearchOptions::default()).unwrap();
        let s = text(report_json(&JsonReport::snowflake(&a)));
        assert!(s.starts_with(r#"{"schema_version": "1", "q": 2, "n": 2, "side": "left", "counts": {"#));
        assert!(s.contains(r#""nonunimodular_free_generators": 42, "distinct_submodules": 21"#));
        assert!(s.contains(r#""degree_histogram": {"9": 7, "3": 14, "1": 42}, "zero_tuple_degree": 21"#));
        assert!(s.contains(r#""containment": {"generators_in_I1": true}"#));
        assert!(s.ends_with("\"coverage\": {\"union_equals_ideal_power\": true}}\n"));
        assert!(s.contains(r#"{"coords": [[0, 0, 1], [0, 1, 0], [0, 1, 1]], "labels": [4, 6, 7]}"#));

        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["submodules"].as_array().unwrap().len(), 21);
    }

    #[test]
    fn empty_run_has_zero_counts_and_empty_arrays() {
        let r = RingCtx::new(2).unwrap();
        let c = classify(&r, 2, Side::Left, Domain::IdealPower(Ideal::I2), &SearchOptions::default()).unwrap();
        let s = text(report_json(&JsonReport::classification(&c)));
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["counts"]["nonunimodular_free_generators"], 0);
        assert_eq!(v["counts"]["distinct_submodules"], 0);
        assert_eq!(v["counts"]["generators_per_submodule"], serde_json::json!({}));
        assert_eq!(v["submodules"], serde_json::json!([]));
    }

    #[test]
    fn ternary_tuples_have_no_labels() {
        let t = JsonTuple::new(3, 1, 27 + 2);
        assert_eq!(t.coords, vec![[0, 0, 1], [0, 0, 2]]);
        assert!(t.labels.is_none());
        assert_eq!(text(report_json(&t)), "{\"coords\": [[0, 0, 1], [0, 0, 2]]}\n");
    }

    #[test]
    fn core_report_and_twin() {
        let r = RingCtx::new(2).unwrap();
        let t = crate::snowflake::twin_compare(&r, 2, &SearchOptions::default()).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&report_json(&JsonTwin::new(&t))).unwrap();
        assert_eq!(v["core_lines_equal"], true);
        assert_eq!(v["right"]["containment"]["generators_in_I2"], true);
        assert_eq!(v["left"]["core"]["points"].as_array().unwrap().len(), 7);
        assert_eq!(v["left"]["core"]["line_multiplicities"], serde_json::json!([3, 3, 3, 3, 3, 3, 3]));
        assert_eq!(v["left"]["core"]["verdict"]["order"], 2);
        assert!(v["left"].get("submodules").is_none());
    }
}
