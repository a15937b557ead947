//! Exact geodesics in the Farey graph and the bridge-splitting invariants
//! they compute for 2-bridge links.
//!
//! - [`rational`]: extended rationals, continued fractions, `PGL(2,Z)` maps.
//! - [`farey`]: ladders, pivots, spines, distances and geodesic sets.
//! - [`bridge`]: `S(q,p)` presentations and (0,2)/(0,3) splitting reports.
//! - [`oracle`]: brute-force search used to cross-check [`farey`].

pub mod bridge;
pub mod error;
pub mod farey;
pub mod oracle;
pub mod rational;

pub use bridge::{
    classify_02, classify_03, components, is_keen_02, is_strongly_keen_02,
    make_strongly_keen_example, splitting_distance_02, CompositeLink, SplittingCase,
    SplittingDistance, SplittingKind, SplittingReport, TwoBridgeLink,
};
pub use error::{Error, Result};
pub use farey::{
    all_geodesics, distance, geodesic_count, is_adjacent, is_unique_geodesic, ladder, Caps,
    FareyTriangle, GeodesicSet, Label, Ladder, Path,
};
pub use rational::{
    cf_eval, cf_expand, convergents, det, normalize_pair, ContinuedFraction, ExtendedRational,
    MobiusMap,
};
