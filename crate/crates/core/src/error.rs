use thiserror::Error;

use crate::rootlat::Series;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid component {series}{rank}: {reason}")]
    InvalidComponent {
        series: Series,
        rank: usize,
        reason: &'static str,
    },
    #[error("unknown simple root label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("{0} is not a subset of the simple roots")]
    NotASubset(String),
    #[error(
        "color `{color}` has {got} functional values but there are {expected} spherical roots"
    )]
    FunctionalArity {
        color: String,
        expected: usize,
        got: usize,
    },
    #[error("functional value {0} has a denominator not dividing 2")]
    BadDenominator(String),
    #[error("color `{0}` is not moved by any simple root")]
    EmptyMovedBy(String),
    #[error("invalid Cartan data: {0}")]
    InvalidCartan(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
