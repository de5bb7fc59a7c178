//! Error type shared by the whole crate.
//!
//! Errors split into two families that the CLI maps to different exit codes:
//! mathematical rejections (the input is a well-formed curve that the theory
//! rules out, e.g. a non-unibranch singularity or a non-symmetric value
//! semigroup) and malformed input (parse or schema problems).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    // ---- algebra ----
    #[error("weighted degree of the zero polynomial is undefined")]
    ZeroPolynomialDegree,
    #[error("no image assigned to variable `{0}` in substitution")]
    UnassignedVariable(String),
    #[error("series logarithm of a non-unit (constant term {0})")]
    NonUnitLog(String),
    #[error("denominator factor `{0}` does not split over the rationals")]
    IrrationalFactor(String),
    #[error("division by zero")]
    DivisionByZero,

    // ---- semigroups ----
    #[error("generators {0:?} have gcd != 1: not a numerical semigroup")]
    NotNumericalSemigroup(Vec<u64>),
    #[error("gap set {0:?} is not the complement of a numerical semigroup")]
    InvalidGapSet(Vec<u64>),
    #[error("delta bound {0} exceeds the enumeration guard {1}")]
    DeltaBoundExceeded(u64, u64),

    // ---- curves ----
    #[error("parametrization is a constant map")]
    ConstantMap,
    #[error("parametrization is not birational onto its image (generic fiber has {0} points)")]
    NotBirational(usize),
    #[error("not unibranch: parameters {fiber} map to the same singular point")]
    NotAlgebraic { fiber: String },
    #[error("value semigroup <{generators}> at {location} is not symmetric: curve is not Gorenstein")]
    NotGorenstein {
        location: String,
        generators: String,
    },
    #[error("declared point {0} is not a singular branch point")]
    NotSingular(String),
    #[error("singular branch points must be rational: factor `{0}` does not split")]
    IrrationalSingularPoint(String),
    #[error("differential has a pole at undeclared point {0}")]
    PoleOutsideDeclared(String),
    #[error("differential has nonzero residue {residue} at {location}")]
    NonzeroResidue { location: String, residue: String },
    #[error("base point {0} collides with a singular branch point")]
    BasePointCollision(String),
    #[error("differentials are not independent: dimension {found}, declared genus {expected}")]
    GenusMismatch { expected: usize, found: usize },
    #[error("input is not Gorenstein of declared genus: solution space has dimension {found}, expected {expected}")]
    CanonicalDimension { expected: usize, found: usize },
    #[error("logarithmic abelian integral: simple pole at {0}")]
    LogarithmicIntegral(String),
    #[error("monomial curve requires delta >= 1")]
    SmoothSemigroup,

    // ---- sato / theta / kp ----
    #[error("truncation weight {given} is below the exact tau weight {needed}")]
    TruncationTooSmall { given: u64, needed: u64 },
    #[error("partition of weight {0} is outside the truncation window {1}")]
    OutsideTruncation(u64, u64),
    #[error("tau function is truncated: multi-singularity curves use implicitization")]
    TauNotExact,
    #[error("degree bound violated: no polynomial of degree <= {0} vanishes on the divisor")]
    DegreeBoundViolated(u32),
    #[error("implicitization underdetermined: kernel dimension {0} after sample augmentation")]
    Underdetermined(usize),
    #[error("singular base point, re-sample: theta vanishes at the chosen base")]
    SingularBasePoint,
    #[error("could not find a base point off the theta divisor in {0} attempts")]
    BaseSamplingExhausted(u32),
    #[error("basis is not normalized: {0}")]
    BasisNotNormalized(String),

    // ---- input ----
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors that reject a mathematically valid file (CLI exit 1),
    /// false for malformed input (CLI exit 2).
    pub fn is_math_rejection(&self) -> bool {
        !matches!(self, Error::Parse(_) | Error::Io(_))
    }
}
