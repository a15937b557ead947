use thiserror::Error;

/// Every failure the engine can report.
///
/// Variants split into domain errors (bad input, violated precondition) and
/// resource errors (a configured cap was hit); see [`Error::is_resource`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("0/0 is not a slope")]
    ZeroOverZero,

    #[error("cannot parse slope {0:?}: expected p/q")]
    ParseSlope(String),

    #[error("cannot parse continued fraction {0:?}: expected a1,a2,...")]
    ParseContinuedFraction(String),

    #[error("continued fraction entries must be positive, got {0}")]
    NonPositiveEntry(String),

    #[error("{0} is outside [0,1); normalize the pair first")]
    OutsideUnitInterval(String),

    #[error("matrix ({a} {b}; {c} {d}) has determinant {det}, expected +1 or -1")]
    NotUnimodular {
        a: String,
        b: String,
        c: String,
        d: String,
        det: String,
    },

    #[error("endpoints coincide at {0}: no ladder exists (distance 0)")]
    EmptyLadder(String),

    #[error("{0} and {1} are adjacent: the ladder is a single edge (distance 1)")]
    DegenerateLadder(String, String),

    #[error("spine undefined for a ladder with {0} triangles (needs at least 3)")]
    SpineUndefined(usize),

    #[error("ladder has {size} triangles, exceeding the cap of {cap}")]
    LadderTooLarge { size: String, cap: usize },

    #[error("more than {cap} geodesics")]
    EnumerationOverflow { cap: usize },

    #[error("{slope} lies outside the bounded subgraph of bound {bound}")]
    OutOfBound { slope: String, bound: u64 },

    #[error("oracle budget exhausted: {0}")]
    OracleBudget(String),

    #[error("invalid 2-bridge presentation S({q},{p}): {reason}")]
    InvalidLink {
        q: String,
        p: String,
        reason: &'static str,
    },

    #[error("a composite link needs 1 or 2 summands, got {0}")]
    InvalidComposite(usize),

    #[error("invalid keen example request: {0}")]
    InvalidKeenRequest(String),
}

impl Error {
    /// True for failures caused by a configured cap rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::LadderTooLarge { .. } | Error::EnumerationOverflow { .. } | Error::OracleBudget(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
