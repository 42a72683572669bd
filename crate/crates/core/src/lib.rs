//! Exact computation of higher-order tangent, secant and arctangent numbers.
//!
//! The tangent numbers of order `k` are the scaled Maclaurin coefficients of
//! `tan^k t / k!`, the secant numbers of order `k` those of `sec t tan^k t / k!`
//! and the arctangent numbers of order `k` those of `arctan^k t / k!`. This
//! crate builds them by their triangle recurrences ([`triangle`]), by eight
//! alternative closed forms and recurrences ([`formulas`]), and checks all of
//! them against a power-series oracle ([`series`]). The closed-form nth
//! derivatives of the eight trigonometric and hyperbolic functions built on
//! these numbers live in [`derivative`].

pub mod crosscheck;
pub mod derivative;
mod error;
pub mod formulas;
pub mod number;
pub mod series;
pub mod triangle;

pub use crosscheck::{crosscheck, CheckCount, CrossCheckReport, Mismatch};
pub use derivative::{
    derivative_poly, eval_derivative, validate_derivative, BaseVariable, DerivativeOracle,
    DerivativePolynomial, FunctionTag, Prefactor, ValidationReport, ValidationStatus,
};
pub use error::{Error, Result};
pub use formulas::{MethodTag, TBasisCoefficients, Tables};
pub use number::{ExactInt, ExactRational};
pub use series::TruncatedSeries;
pub use triangle::{Triangle, TriangleKind};
