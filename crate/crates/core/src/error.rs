use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series have different root counts ({left} vs {right})")]
    RootCountMismatch { left: usize, right: usize },

    #[error("root count must be at least 1")]
    NoRoots,

    #[error("univariate factor known to degree {given}, but degree {needed} is required")]
    InsufficientDegree { given: usize, needed: usize },

    #[error("series has zero constant term and is not invertible")]
    NotAUnit,

    #[error("degree {degree} is outside the truncation range 0..={trunc}")]
    DegreeOutOfRange { degree: usize, trunc: usize },

    #[error("surface evaluation needs exactly 2 roots, got {0}")]
    NotASurface(usize),

    #[error("inconsistent surface data: {0}")]
    InconsistentSurface(String),

    #[error("dimension {0} is not a positive even integer")]
    OddDimension(u32),

    #[error("trace {0} is even; the trace on H^{{1,1}} of an antisymplectic involution is odd")]
    TraceParity(i64),

    #[error("trace {0} is outside -19..=21 (needs a >= 1 and b >= 2 on H^2)")]
    TraceRange(i64),

    #[error("{name} = {value} is outside {min}..={max}")]
    ParameterRange {
        name: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("cross-check failed: {0}")]
    CrossCheck(String),
}
