//! Exact certification of canonical Sasaki structures on fiber joins.
//!
//! A ray in the Sasaki cone of a fiber join is encoded by a rational
//! parameter `c` in (-1, 1) (equivalently a positive weight pair). The
//! crate constructs, in exact rational arithmetic, the polynomial whose
//! strict positivity on (-1, 1) characterizes the extremal representative
//! of the ray, and the companion polynomial whose roots are the rays
//! carrying constant scalar curvature. Verdicts ship with replayable
//! certificates: Sturm root counts, coefficient-sign witnesses after
//! Mobius substitution, and polynomial identities checked by exact
//! division.
//!
//! Everything in this crate is pure: no interior mutability, no
//! randomness, no floating point in any certified path.

pub mod closedforms;
pub mod csc;
pub mod exact;
pub mod extremality;
pub mod integrals;
pub mod join;
pub mod params;

pub use exact::{
    certify_positive, IsolatingInterval, Poly, PositivityCertificate, PositivityOutcome,
    RatFunc, Rational,
};
pub use params::{JoinDim, JoinParams};
