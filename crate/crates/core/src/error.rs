use thiserror::Error;

/// Every failure the library can report.
///
/// Each variant has a stable machine-readable name ([`Error::name`]) and a
/// stable process exit code ([`Error::exit_code`]); the CLI relies on both.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("torus element is not central: {0}")]
    NotCentral(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("non-integral grading: {0}")]
    NonIntegralGrading(String),
    #[error("dim g(-1) odd part is odd ({0}); the adjusted symplectic space is not supported")]
    OddDimensionalOddPart(usize),
    #[error("not of type I: {0}")]
    NotTypeI(String),
    #[error("nilpotent element does not lie in the Levi subalgebra: {0}")]
    NilpotentNotInLevi(String),
    #[error("invalid Levi datum: {0}")]
    InvalidLevi(String),
    #[error("Weyl group of order {order} exceeds the bound {bound}")]
    GroupTooLarge { order: usize, bound: usize },
    #[error("elements are not comparable in the Bruhat order: {0}")]
    NotComparable(String),
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("weight is not integral: {0}")]
    NonIntegral(String),
    #[error("weight is atypical: {0}")]
    AtypicalWeight(String),
    #[error("parse error: {0}")]
    ParseError(String),
    #[error("divergent expansion direction: {0}")]
    DivergentDirection(String),
    #[error("coefficient not divisible by the orbit size: {0}")]
    NonIntegralDivision(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("Verma combination is not a parabolic combination: {0}")]
    NotParabolic(String),
    #[error("I/O error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable error name, used in JSON error reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::UnsupportedFamily(_) => "UnsupportedFamily",
            Error::SizeMismatch(_) => "SizeMismatch",
            Error::NotCentral(_) => "NotCentral",
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::NonIntegralGrading(_) => "NonIntegralGrading",
            Error::OddDimensionalOddPart(_) => "OddDimensionalOddPart",
            Error::NotTypeI(_) => "NotTypeI",
            Error::NilpotentNotInLevi(_) => "NilpotentNotInLevi",
            Error::InvalidLevi(_) => "InvalidLevi",
            Error::GroupTooLarge { .. } => "GroupTooLarge",
            Error::NotComparable(_) => "NotComparable",
            Error::NotDominant(_) => "NotDominant",
            Error::NonIntegral(_) => "NonIntegral",
            Error::AtypicalWeight(_) => "AtypicalWeight",
            Error::ParseError(_) => "ParseError",
            Error::DivergentDirection(_) => "DivergentDirection",
            Error::NonIntegralDivision(_) => "NonIntegralDivision",
            Error::InexactDivision(_) => "InexactDivision",
            Error::NotParabolic(_) => "NotParabolic",
            Error::Io(_) => "Io",
        }
    }

    /// Stable process exit code. 1 is reserved for failed verification
    /// reports and 2 for command-line usage errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::UnsupportedFamily(_) => 10,
            Error::SizeMismatch(_) => 11,
            Error::NotCentral(_) => 12,
            Error::InvalidPartition(_) => 13,
            Error::NonIntegralGrading(_) => 14,
            Error::OddDimensionalOddPart(_) => 15,
            Error::NotTypeI(_) => 16,
            Error::NilpotentNotInLevi(_) => 17,
            Error::InvalidLevi(_) => 18,
            Error::GroupTooLarge { .. } => 19,
            Error::NotComparable(_) => 20,
            Error::NotDominant(_) => 21,
            Error::NonIntegral(_) => 22,
            Error::AtypicalWeight(_) => 23,
            Error::ParseError(_) => 24,
            Error::DivergentDirection(_) => 25,
            Error::NonIntegralDivision(_) => 26,
            Error::InexactDivision(_) => 27,
            Error::NotParabolic(_) => 28,
            Error::Io(_) => 29,
        }
    }
}
