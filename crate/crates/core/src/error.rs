use thiserror::Error;

/// Errors raised by the exact kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("interval endpoint {0} is a root of the polynomial")]
    EndpointIsRoot(String),
    #[error("polynomial degree is too low for this operation")]
    DegreeTooLow,
    #[error("sequence has no value at index {0}")]
    SequenceExhausted(usize),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("index {0} is outside the range of this closed form")]
    BadIndex(usize),
    #[error("polynomial is not hyperbolic")]
    NotHyperbolic,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomials share a root")]
    NotCoprime,
    #[error("degrees differ by more than one")]
    DegreeGapTooLarge,
    #[error("corpus entry {0} is not hyperbolic")]
    CorpusNotHyperbolic(usize),
    #[error("prefix of order {order} cannot act on a polynomial of degree {degree}")]
    PrefixTooShort { order: usize, degree: usize },
    #[error("Q_0 is the zero polynomial")]
    ZeroQ0,
    #[error("series orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Short variant name, as printed by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::BothZero => "BothZero",
            Error::EndpointIsRoot(_) => "EndpointIsRoot",
            Error::DegreeTooLow => "DegreeTooLow",
            Error::SequenceExhausted(_) => "SequenceExhausted",
            Error::BadParameter(_) => "BadParameter",
            Error::BadIndex(_) => "BadIndex",
            Error::NotHyperbolic => "NotHyperbolic",
            Error::NotSquarefree => "NotSquarefree",
            Error::NotCoprime => "NotCoprime",
            Error::DegreeGapTooLarge => "DegreeGapTooLarge",
            Error::CorpusNotHyperbolic(_) => "CorpusNotHyperbolic",
            Error::PrefixTooShort { .. } => "PrefixTooShort",
            Error::ZeroQ0 => "ZeroQ0",
            Error::OrderMismatch(..) => "OrderMismatch",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
