use thiserror::Error;

/// Failures raised by the algebra, extraction and quasi-polynomial layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,
    #[error("rational function with zero denominator")]
    ZeroDenominator,
    #[error("denominator factors {0} and {1} are not coprime in z")]
    CoprimalityFailure(String, String),
    #[error("rational function has a pole at t = 0")]
    PoleAtZero,
    #[error("enumeration guard exceeded: n = {n} > {max}")]
    GuardExceeded { n: usize, max: usize },
    #[error("denominator has a non-cyclotomic factor of degree {0}")]
    NonCyclotomicDenominator(usize),
    #[error("leading growth is oscillatory (period {0} component attains the top degree)")]
    PeriodicLeadingTerm(u64),
    #[error("quasi-polynomial has no growing term")]
    NoLeadingTerm,
    #[error("invalid product spec: {0}")]
    InvalidSpec(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable identifier used on diagnostic output.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::ZeroGcd => "ZeroGcd",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::CoprimalityFailure(..) => "CoprimalityFailure",
            Error::PoleAtZero => "PoleAtZero",
            Error::GuardExceeded { .. } => "GuardExceeded",
            Error::NonCyclotomicDenominator(_) => "NonCyclotomicDenominator",
            Error::PeriodicLeadingTerm(_) => "PeriodicLeadingTerm",
            Error::NoLeadingTerm => "NoLeadingTerm",
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::Parse(_) => "ParseError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
