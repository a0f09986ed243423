use thiserror::Error;

/// Runtime failures a caller may want to handle.
///
/// Violations of internal algebraic invariants (a closed form producing a
/// non-polynomial, a transcendental part failing to cancel) are bugs, not
/// runtime conditions, and panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A truncated expansion was requested at an order at or below the
    /// valuation of a nonzero function, so no nonzero coefficient is visible.
    #[error("order too small")]
    OrderTooSmall,

    /// A limit was requested for a function with a genuine pole at q = 1.
    #[error("pole at q=1")]
    PoleAtOne,

    /// Adaptive order raising hit the configured cap before the constant
    /// term of the expansion was resolved.
    #[error("order cap exceeded ({0})")]
    OrderCap(i64),

    /// An infinite series was requested outside |q| < 1.
    #[error("divergent series")]
    DivergentSeries,
}

pub type Result<T> = std::result::Result<T, Error>;
