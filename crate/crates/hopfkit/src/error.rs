use thiserror::Error;

/// Every failure the library reports. Mathematical negatives (a system with no
/// solution, a missing antipode) are kept apart from malformed input so that the
/// command line can map them to different exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("not an ideal: {0}")]
    NotIdeal(String),
    #[error("ideal is not nilpotent within {0} steps")]
    NotNilpotentWithin(usize),
    #[error("characteristic {char} too small for dimension {dim}; supply a certified candidate")]
    SmallCharUnsupported { char: u64, dim: usize },
    #[error("certification failed: {0}")]
    CertificationFailed(String),
    #[error("NotSeparable")]
    NotSeparable,
    #[error("NoAntipode")]
    NoAntipode,
    #[error("invalid object: {0}")]
    InvalidObject(String),
    #[error("no section in the ambient category: {0}")]
    NoSection(String),
    #[error("obstructed at tower step {step}: class coordinates {class:?}")]
    Obstructed { step: usize, class: Vec<String> },
    #[error("not a cocycle: {0}")]
    NotCocycle(String),
    #[error("not normalized: {0}")]
    NotNormalized(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for outcomes that are mathematical answers rather than bad input.
    pub fn is_mathematical(&self) -> bool {
        matches!(
            self,
            Error::Inconsistent
                | Error::NotNilpotentWithin(_)
                | Error::CertificationFailed(_)
                | Error::NotSeparable
                | Error::NoAntipode
                | Error::NoSection(_)
                | Error::Obstructed { .. }
                | Error::NotCocycle(_)
                | Error::NotNormalized(_)
                | Error::Verification(_)
                | Error::NotIdeal(_)
                | Error::InvalidObject(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
