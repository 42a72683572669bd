use crate::derivative::FunctionTag;
use crate::formulas::MethodTag;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("row {n} requested but triangle only generated up to row {generated_up_to}")]
    OutOfRange { n: usize, generated_up_to: usize },

    #[error("{method} produced a non-integral value at ({n}, {k}): {value}")]
    NonIntegral {
        method: MethodTag,
        n: usize,
        k: usize,
        value: String,
    },

    #[error("series division by a series with zero constant term")]
    ZeroConstantTerm,

    #[error("method {method} does not compute {what}")]
    Unsupported {
        method: MethodTag,
        what: &'static str,
    },

    #[error("{func} has a pole at x = {pole} (evaluated at x = {x})")]
    Pole {
        func: FunctionTag,
        x: f64,
        pole: f64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
