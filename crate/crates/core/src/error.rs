use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial has no leading coefficient")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("polynomial degree {degree} is below the required minimum {min}")]
    DegreeTooSmall { degree: isize, min: usize },
    #[error("expected a polynomial of degree {expected}, got degree {got}")]
    WrongDegree { expected: usize, got: isize },
    #[error("interval endpoint {0} is a root")]
    EndpointIsRoot(String),
    #[error("interval ({0}, {1}) is empty")]
    BadInterval(String, String),
    #[error("0 is a root of the polynomial")]
    ZeroIsRoot,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("coefficients are not in the one-double-root case")]
    NotInDoubleCase,
    #[error("coefficients are not in the triple-and-single case")]
    NotInTripleCase,
    #[error("coefficients are not in a two-double-roots case")]
    NotInTwoDoubleCase,
    #[error("coefficients do not describe a quadruple root")]
    NotQuadruple,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("only cubics and quartics can be classified, got degree {0}")]
    UnsupportedDegree(isize),
    #[error("invalid rational token `{0}`")]
    InvalidRational(String),
    #[error("unknown configuration label `{0}`")]
    UnknownLabel(String),
}

pub type Result<T> = std::result::Result<T, Error>;
