use thiserror::Error;

/// Errors raised by the series engine and everything built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series is not invertible: constant term is not a unit")]
    NotInvertible,
    #[error("composition needs an inner series with zero constant term")]
    CompositionDomain,
    #[error("series has no compositional inverse: linear coefficient is not a unit")]
    NonInvertibleComposition,
    #[error("substitution at infinity needs an inner series of the form z + c_0 + O(1/z)")]
    LaurentDomain,
    #[error("descending series product needs operands without a z term")]
    LaurentProduct,
    #[error("Jacobi parameters reach level {available} but order {order} needs level {needed}")]
    JacobiDepth { order: usize, needed: usize, available: usize },
    #[error("moments admit no Jacobi parameters: gamma_{level} vanishes but deeper moments do not terminate")]
    NoJacobiRepresentation { level: usize },
    #[error("functional has zero variance")]
    ZeroVariance,
    #[error("inexact division in the coefficient ring ({0})")]
    NotDivisible(&'static str),
    #[error("partition oracle is capped at n = {max}, got {n}")]
    OrderCap { n: usize, max: usize },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error("canonical triple needs rho exactly when gamma is non-zero")]
    MalformedTriple,
    #[error("functional is not a free convolution semigroup at time 1: cumulants beyond the second are non-zero with zero variance")]
    NotASemigroup,
    #[error("alphabet or order mismatch between multivariate operands")]
    ShapeMismatch,
    #[error("independent computation routes disagree: {0}")]
    RouteMismatch(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
