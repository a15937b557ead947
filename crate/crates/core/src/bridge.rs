//! 2-bridge links and the distance/keenness classification of their
//! (0,2)- and (0,3)-bridge splittings.
//!
//! A (0,2)-splitting of `S(q,p)` glues rational tangles of slopes `1/0` and
//! `p/q`; its distance is the Farey distance between those slopes. The
//! (0,3) classifier covers connected sums of at most two 2-bridge links.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::farey::{all_geodesics, distance, is_unique_geodesic, Caps, Path};
use crate::rational::{cf_eval, ContinuedFraction, ExtendedRational};

/// The presentation `S(q,p)`: tangles of slopes `1/0` and `p/q`.
///
/// `q = 0` (with `p = 1`) is the 2-component trivial link and `q = 1` the
/// trivial knot; `q ≥ 2` gives a genuine 2-bridge link.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoBridgeLink {
    q: BigInt,
    p: BigInt,
}

impl TwoBridgeLink {
    pub fn new(q: impl Into<BigInt>, p: impl Into<BigInt>) -> Result<Self> {
        let (q, p) = (q.into(), p.into());
        let invalid = |reason| Error::InvalidLink {
            q: q.to_string(),
            p: p.to_string(),
            reason,
        };
        if q.is_negative() {
            return Err(invalid("q must be non-negative"));
        }
        if p.is_negative() || p > q && !q.is_zero() {
            return Err(invalid("p must satisfy 0 <= p <= q"));
        }
        if !p.gcd(&q).is_one() {
            return Err(invalid("p and q must be coprime"));
        }
        Ok(Self { q, p })
    }

    /// `S(0,1)`.
    pub fn trivial_link() -> Self {
        Self {
            q: BigInt::zero(),
            p: BigInt::one(),
        }
    }

    /// `S(1,0)`.
    pub fn unknot() -> Self {
        Self {
            q: BigInt::one(),
            p: BigInt::zero(),
        }
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    /// The second tangle slope `p/q` (`1/0` when `q = 0`).
    pub fn slope(&self) -> ExtendedRational {
        ExtendedRational::new(self.p.clone(), self.q.clone())
            .expect("validated presentations are never 0/0")
    }

    pub fn is_trivial_link(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_unknot(&self) -> bool {
        self.q.is_one()
    }

    /// Number of link components: 2 when `q` is even (including 0), else 1.
    pub fn components(&self) -> u8 {
        if self.q.is_even() {
            2
        } else {
            1
        }
    }
}

pub fn components(link: &TwoBridgeLink) -> u8 {
    link.components()
}

impl fmt::Display for TwoBridgeLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({},{})", self.q, self.p)
    }
}

impl FromStr for TwoBridgeLink {
    type Err = Error;

    /// Accepts `q/p`, `q,p` or `S(q,p)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidLink {
            q: s.to_string(),
            p: String::new(),
            reason: "expected q/p or S(q,p)",
        };
        let t = s.trim();
        let inner = t
            .strip_prefix("S(")
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(t);
        let (q, p) = inner.split_once([',', '/']).ok_or_else(bad)?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        Self::new(q, p)
    }
}

impl Serialize for TwoBridgeLink {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TwoBridgeLink {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// An ordered connected sum of one or two 2-bridge links.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<TwoBridgeLink>", into = "Vec<TwoBridgeLink>")]
pub struct CompositeLink {
    summands: Vec<TwoBridgeLink>,
}

impl CompositeLink {
    pub fn new(summands: Vec<TwoBridgeLink>) -> Result<Self> {
        if summands.is_empty() || summands.len() > 2 {
            return Err(Error::InvalidComposite(summands.len()));
        }
        Ok(Self { summands })
    }

    pub fn summands(&self) -> &[TwoBridgeLink] {
        &self.summands
    }
}

impl TryFrom<Vec<TwoBridgeLink>> for CompositeLink {
    type Error = Error;

    fn try_from(v: Vec<TwoBridgeLink>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<CompositeLink> for Vec<TwoBridgeLink> {
    fn from(c: CompositeLink) -> Self {
        c.summands
    }
}

impl fmt::Display for CompositeLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.summands.iter().enumerate() {
            if i > 0 {
                f.write_str(" # ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// An exact splitting distance, or a lower bound when the exact value is
/// outside what the model decides.
///
/// Serialized as a bare number, or as the string `">=n"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplittingDistance {
    Exact(u64),
    AtLeast(u64),
}

impl Serialize for SplittingDistance {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Self::Exact(d) => serializer.serialize_u64(*d),
            Self::AtLeast(d) => serializer.collect_str(&format_args!(">={d}")),
        }
    }
}

impl<'de> Deserialize<'de> for SplittingDistance {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Exact(u64),
            Bound(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Exact(d) => Ok(Self::Exact(d)),
            Raw::Bound(s) => s
                .strip_prefix(">=")
                .and_then(|n| n.parse().ok())
                .map(Self::AtLeast)
                .ok_or_else(|| de::Error::custom(format!("bad distance marker {s:?}"))),
        }
    }
}

/// Which branch of the classification produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SplittingCase {
    /// (0,2): `S(0,1)`, both tangles of slope `1/0`.
    #[serde(rename = "trivial-link")]
    TrivialLink,
    /// (0,2): `q = 1`.
    #[serde(rename = "unknot")]
    Unknot,
    /// (0,2): `q ≥ 2`.
    #[serde(rename = "two-bridge")]
    TwoBridge,
    /// (0,3): a summand is the 2-component trivial link; distance 0.
    #[serde(rename = "reducible")]
    Reducible,
    /// (0,3) distance 1: the link is a trivial knot.
    #[serde(rename = "i")]
    TrivialKnot,
    /// (0,3) distance 1: a single nontrivial 2-bridge link.
    #[serde(rename = "ii")]
    SingleTwoBridge,
    /// (0,3) distance 1: a connected sum of two nontrivial 2-bridge links.
    #[serde(rename = "iii")]
    ConnectedSum,
    /// Outside the decided cases; distance is only bounded below.
    #[serde(rename = "beyond-model")]
    BeyondModel,
}

/// Splitting type of a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SplittingKind {
    #[serde(rename = "(0,2)")]
    ZeroTwo,
    #[serde(rename = "(0,3)")]
    ZeroThree,
}

/// Distance and keenness of one bridge splitting.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingReport {
    pub splitting: SplittingKind,
    pub link: CompositeLink,
    pub components: u8,
    pub distance: SplittingDistance,
    pub keen: bool,
    pub strongly_keen: bool,
    pub case: SplittingCase,
    pub reason: String,
    /// Whether exactly one geodesic realizes the distance, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unique: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub geodesics: Option<Vec<Path>>,
}

impl SplittingReport {
    /// The implications every report must satisfy: strongly keen implies
    /// keen, and a keen splitting of distance 1 is strongly keen.
    pub fn is_consistent(&self) -> bool {
        let strong_implies_keen = !self.strongly_keen || self.keen;
        let dist_one = self.distance == SplittingDistance::Exact(1) && self.keen;
        strong_implies_keen && (!dist_one || self.strongly_keen)
    }
}

const KEEN_02: &str =
    "both sides are rational tangles, and the complement of a rational tangle contains exactly one essential disk";
const NOT_KEEN_03: &str =
    "a distance-1 (0,3)-splitting has a second pair of disjoint essential disks, so the realizing pair is not unique";
const REDUCIBLE_03: &str =
    "a 2-component trivial summand makes the link exterior reducible, so the splitting has distance 0";

/// Hempel distance of the (0,2)-splitting of `S(q,p)`.
pub fn splitting_distance_02(link: &TwoBridgeLink, caps: &Caps) -> Result<u64> {
    distance(&ExtendedRational::infinity(), &link.slope(), caps)
}

/// Always true: the disk on each side of a (0,2)-splitting is unique.
pub fn is_keen_02(_link: &TwoBridgeLink) -> bool {
    true
}

/// True iff exactly one Farey geodesic joins `1/0` and the link's slope.
pub fn is_strongly_keen_02(link: &TwoBridgeLink, caps: &Caps) -> Result<bool> {
    is_unique_geodesic(&ExtendedRational::infinity(), &link.slope(), caps)
}

/// Full report for the (0,2)-splitting of `link`. With `with_geodesics`
/// the realizing geodesics are enumerated as well.
pub fn classify_02(link: &TwoBridgeLink, caps: &Caps, with_geodesics: bool) -> Result<SplittingReport> {
    let inf = ExtendedRational::infinity();
    let slope = link.slope();
    let d = splitting_distance_02(link, caps)?;
    let (unique, geodesics) = if with_geodesics {
        let set = all_geodesics(&inf, &slope, caps)?;
        (set.is_unique(), Some(set.paths))
    } else {
        (is_strongly_keen_02(link, caps)?, None)
    };
    let case = if link.is_trivial_link() {
        SplittingCase::TrivialLink
    } else if link.is_unknot() {
        SplittingCase::Unknot
    } else {
        SplittingCase::TwoBridge
    };
    Ok(SplittingReport {
        splitting: SplittingKind::ZeroTwo,
        link: CompositeLink {
            summands: vec![link.clone()],
        },
        components: link.components(),
        distance: SplittingDistance::Exact(d),
        keen: is_keen_02(link),
        strongly_keen: unique,
        case,
        reason: KEEN_02.to_string(),
        unique: Some(unique),
        geodesics,
    })
}

/// `S(q,p)` with `p/q = [a1, ..., a_{n-1}]`, every `ai ≥ 3`; its
/// (0,2)-splitting is strongly keen of distance `n`. Entries default to 3.
pub fn make_strongly_keen_example(n: usize, entries: Option<&[u64]>) -> Result<TwoBridgeLink> {
    if n < 2 {
        return Err(Error::InvalidKeenRequest(format!("n must be at least 2, got {n}")));
    }
    let entries: Vec<u64> = match entries {
        Some(e) => e.to_vec(),
        None => vec![3; n - 1],
    };
    if entries.len() != n - 1 {
        return Err(Error::InvalidKeenRequest(format!(
            "expected {} entries for n = {n}, got {}",
            n - 1,
            entries.len()
        )));
    }
    if let Some(bad) = entries.iter().find(|&&a| a < 3) {
        return Err(Error::InvalidKeenRequest(format!("entry {bad} is below 3")));
    }
    let slope = cf_eval(&ContinuedFraction::from_u64s(&entries)?);
    TwoBridgeLink::new(slope.denom().clone(), slope.numer().clone())
}

/// Distance and keenness of the (0,3)-splitting of a composite.
pub fn classify_03(link: &CompositeLink) -> SplittingReport {
    let s = link.summands();
    let components = s.iter().map(|l| l.components()).sum::<u8>() - (s.len() as u8 - 1);
    let report = |distance, keen, case, reason: &str| SplittingReport {
        splitting: SplittingKind::ZeroThree,
        link: link.clone(),
        components,
        distance,
        keen,
        strongly_keen: keen,
        case,
        reason: reason.to_string(),
        unique: None,
        geodesics: None,
    };
    if s.iter().any(TwoBridgeLink::is_trivial_link) {
        // Distance 0 is realized by disjoint disks; keenness is not decided
        // here, so the report stays conservative.
        return report(SplittingDistance::Exact(0), false, SplittingCase::Reducible, REDUCIBLE_03);
    }
    let nontrivial = s.iter().filter(|l| !l.is_unknot()).count();
    let case = match nontrivial {
        0 => SplittingCase::TrivialKnot,
        1 => SplittingCase::SingleTwoBridge,
        2 => SplittingCase::ConnectedSum,
        _ => SplittingCase::BeyondModel,
    };
    if case == SplittingCase::BeyondModel {
        return report(SplittingDistance::AtLeast(2), false, case, "outside the composite 2-bridge model");
    }
    report(SplittingDistance::Exact(1), false, case, NOT_KEEN_03)
}
