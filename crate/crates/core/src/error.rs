use thiserror::Error;

use crate::trinomial::EquivClass;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// The operation is not defined at this input (zero polynomial, excluded parameter, ...).
    #[error("undefined input: {0}")]
    UndefinedInput(String),

    /// Caller violated a precondition (mismatched fields, reducible input, off-curve point, ...).
    #[error("usage error: {0}")]
    Usage(String),

    /// Input lies outside the domain where a construction makes sense.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    /// Root isolation could not separate the roots at this working precision.
    #[error("precision of {bits} bits is insufficient to isolate the roots")]
    NeedPrecision { bits: u32 },

    /// The trinomial has `a = 0` or `b = 0` and has no `x^5 + tx + t` representative.
    #[error("trinomial is not normalizable to t-form (class {0})")]
    NotNormalizable(EquivClass),

    /// A curve point whose associated element is rational.
    #[error("degenerate point: {0}")]
    DegeneratePoint(String),

    #[error("unsupported j-invariant {0} for twist detection")]
    UnsupportedJ(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
