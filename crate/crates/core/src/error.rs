use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polynomials or ideals live in different rings")]
    RingMismatch,
    #[error("{what} has {size} elements, above the configured cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("monomial does not divide every term of the polynomial")]
    NotDivisible,
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("ideal is not generated in a single degree")]
    NotEquigenerated,
    #[error("vertex cover is not flagged minimal")]
    NotMinimal,
    #[error("variety is smooth: the graph has only one minimal vertex cover")]
    SmoothVariety,
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
    #[error("invalid vertex name `{0}`")]
    InvalidName(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by the zero polynomial")]
    ZeroDivisor,
}

impl Error {
    /// True for errors that signal an instance too large for the configured
    /// limits rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::ResourceLimit(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
