//! Free cyclic submodules over the ring of ternions.
//!
//! The ternions over GF(q) are the upper-triangular 2x2 matrices
//! `[[a, b], [0, c]]`. This crate enumerates every tuple of R^{n+1},
//! separates unimodular tuples from the rest, collects the free cyclic
//! submodules generated by non-unimodular tuples, and studies how they
//! overlap: the resulting incidence structure (the "snowflake") has a core
//! made of tuples over the Jacobson radical, which for n = 2 is checked
//! against the axioms of a projective plane of order q.
//!
//! ```
//! use ternions::{analyze, RingCtx, SearchOptions, Side};
//!
//! let ring = RingCtx::new(2).unwrap();
//! let run = analyze(&ring, 2, Side::Left, &SearchOptions::default()).unwrap();
//! assert_eq!(run.report.distinct_submodules, 21);
//! assert_eq!(run.core.points.len(), 7);
//! assert!(run.core.verdict.is_projective_plane);
//! ```

pub mod cli;
pub mod cyclic;
pub mod dot;
pub mod error;
pub mod galois;
pub mod golden;
pub mod report;
pub mod ring;
pub mod search;
pub mod snowflake;

pub use cyclic::{
    is_free, is_unimodular_fast, is_unimodular_oracle, scale, submodule_generate, ModTuple, Side,
    TupleSpace, UnimodWitness,
};
pub use error::{Error, Result};
pub use dot::export_dot;
pub use galois::FieldCtx;
pub use golden::{verify_paper, PaperEvidence, PaperVerification, GOLDEN};
pub use report::{report_json, JsonReport, JsonTwin};
pub use ring::{Elem, Ideal, RingCtx, Ternion};
pub use search::{SearchOptions, DEFAULT_BUDGET};
pub use snowflake::{
    analyze, build_snowflake, check_projective_plane, classify, classify_all, collect_submodules,
    extract_core, twin_compare, unimodular_nonfree, verify_plane, Analysis, Classification,
    ClassificationReport, CoreGeometry, CoreLine, CorePoint, Domain, PlaneFailure, PlaneVerdict,
    SnowflakeStructure, Submodule, TupleCounts, TwinReport,
};
