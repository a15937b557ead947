//! JSON bodies printed by `--json`.
//!
//! Every body is flattened into an [`Envelope`] carrying the schema version
//! `"v": 1`, and deserializes back into the same value.

use farey_core::{
    ContinuedFraction, ExtendedRational, FareyTriangle, GeodesicSet, Label, Ladder, Path,
    SplittingDistance, SplittingReport,
};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub v: u32,
    #[serde(flatten)]
    pub body: T,
}

impl<T> Envelope<T> {
    pub fn new(body: T) -> Self {
        Self { v: SCHEMA_VERSION, body }
    }
}

/// Output of `cf` and `eval`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CfReport {
    pub slope: ExtendedRational,
    pub cf: ContinuedFraction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceReport {
    pub source: ExtendedRational,
    pub target: ExtendedRational,
    pub distance: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeodesicsReport {
    pub source: ExtendedRational,
    pub target: ExtendedRational,
    pub distance: u64,
    pub unique: bool,
    pub count: usize,
    pub geodesics: Vec<Path>,
}

impl From<GeodesicSet> for GeodesicsReport {
    fn from(g: GeodesicSet) -> Self {
        Self {
            unique: g.is_unique(),
            count: g.paths.len(),
            source: g.source,
            target: g.target,
            distance: g.length,
            geodesics: g.paths,
        }
    }
}

impl From<GeodesicsReport> for GeodesicSet {
    fn from(r: GeodesicsReport) -> Self {
        GeodesicSet {
            source: r.source,
            target: r.target,
            length: r.distance,
            paths: r.geodesics,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderReport {
    pub source: ExtendedRational,
    pub target: ExtendedRational,
    #[serde(rename = "type")]
    pub ladder_type: Vec<u64>,
    pub triangles: Vec<FareyTriangle>,
    pub pivots: Vec<ExtendedRational>,
    /// `null` for ladders of fewer than three triangles.
    pub spine: Option<Path>,
}

impl From<&Ladder> for LadderReport {
    fn from(l: &Ladder) -> Self {
        Self {
            source: l.source().clone(),
            target: l.target().clone(),
            ladder_type: l.ladder_type().to_vec(),
            triangles: l.triangles(),
            pivots: l.pivots(),
            spine: l.spine().ok(),
        }
    }
}

fn join(v: &[ExtendedRational]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

impl LadderReport {
    pub fn to_text(&self) -> String {
        let ty = self.ladder_type.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        let mut s = format!("type ({ty})\n");
        s += &format!("triangles {}\n", self.triangles.len());
        s += &format!("pivots {}\n", join(&self.pivots));
        match &self.spine {
            Some(p) => s += &format!("spine {}\n", join(p.vertices())),
            None => s += "spine undefined\n",
        }
        for t in &self.triangles {
            let side = match t.label {
                Label::L => 'L',
                Label::R => 'R',
            };
            s += &format!("{side} {}\n", join(&t.vertices));
        }
        s
    }
}

/// Output of `gen-keen`: the generated link and its full report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenKeenReport {
    pub n: u64,
    pub cf: ContinuedFraction,
    #[serde(flatten)]
    pub report: SplittingReport,
}

pub fn report_text(r: &SplittingReport) -> String {
    let splitting = serde_json::to_value(r.splitting).expect("plain enum");
    let case = serde_json::to_value(r.case).expect("plain enum");
    let distance = match r.distance {
        SplittingDistance::Exact(d) => d.to_string(),
        SplittingDistance::AtLeast(d) => format!(">={d}"),
    };
    let mut s = format!("splitting {}\n", splitting.as_str().unwrap_or_default());
    s += &format!("link {}\n", r.link);
    s += &format!("components {}\n", r.components);
    s += &format!("distance {distance}\n");
    s += &format!("keen {}\n", r.keen);
    s += &format!("strongly_keen {}\n", r.strongly_keen);
    s += &format!("case {}\n", case.as_str().unwrap_or_default());
    if let Some(paths) = &r.geodesics {
        for p in paths {
            s += &format!("geodesic {}\n", join(p.vertices()));
        }
    }
    s += &format!("reason {}\n", r.reason);
    s
}
