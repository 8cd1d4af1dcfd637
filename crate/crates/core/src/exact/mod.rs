//! Exact arithmetic: arbitrary-precision rationals, dense univariate
//! polynomials, rational functions, Sturm chains, and positivity
//! certificates with replayable witnesses.

pub mod descartes;
pub mod field;
pub mod laurent;
pub mod mobius;
pub mod poly;
pub mod positivity;
pub mod rational;
pub mod sturm;

pub use descartes::sign_changes;
pub use field::{Field, Ring};
pub use laurent::LaurentU;
pub use mobius::{fractional_substitute, interval_to_positive_axis, to_positive_axis};
pub use poly::{resultant, BiPoly, Poly};
pub use positivity::{
    certify_positive, PositivityCertificate, PositivityMethod, PositivityOutcome, Refutation,
};
pub use rational::{format_rational, parse_rational, rat, rat_i, RatFunc, Rational};
pub use sturm::{
    count_roots_in, count_roots_positive_axis, isolate_roots, sign, sign_constant_on,
    IsolatingInterval, SturmChain,
};

use thiserror::Error;

/// Errors surfaced by the exact-arithmetic layer. Anything that indicates an
/// internal algebraic impossibility (lost cancellation, singular systems on
/// valid data) is a panic, not an `ExactError`: those are bugs, not inputs.
#[derive(Debug, Clone, Error)]
pub enum ExactError {
    /// Sturm counting requires nonvanishing at the interval endpoints.
    #[error("polynomial vanishes at interval endpoint {at}")]
    BoundaryRoot { at: String },
    #[error("division by zero polynomial")]
    ZeroDivisor,
    #[error("empty interval: lo >= hi")]
    EmptyInterval,
    #[error("{0}")]
    Malformed(String),
}

/// Default width bound for isolating intervals: 2^-40.
pub fn default_tolerance() -> Rational {
    Rational::new(1.into(), num_bigint::BigInt::from(1u64 << 40))
}
