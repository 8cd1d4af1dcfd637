//! Extremality of Sasaki rays on fiber joins.
//!
//! A ray is parameterized by a rational `c` in the open unit interval (or
//! by a positive weight pair, see the conversions in `params`). The moment
//! construction produces a profile polynomial `F_c(z)` with `F(±1) = 0`;
//! the ray is extremal exactly when `F > 0` on `(-1, 1)`, equivalently
//! when the reduced numerator `p(z) = F / (λ(1-z²))` is positive there.
//! Everything here is exact: verdicts come with replayable certificates
//! and refutations carry a rational witness point.

mod build;
mod cone;

pub use build::{build_profile, coefficient_system, ray_numerator, reduced_profile};
pub use cone::{
    certify_cone, certify_cone_with_hints, quadrant_transform, refute_on_grid,
    replay_cone_certificate, ConeCertificate, ConeOutcome, ConeProblem, RefutedRay, RowWitness,
};

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::exact::poly::Poly;
use crate::exact::positivity::{certify_positive, PositivityOutcome};
use crate::exact::rational::{in_open_unit, serde_rational, Rational};
use crate::params::JoinParams;

/// Exact record of one ray's extremality check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RayAnalysis {
    #[serde(with = "serde_rational")]
    pub c: Rational,
    /// Full profile `F_c(z)`, vanishing at `z = ±1`.
    pub profile: Poly<Rational>,
    /// `F / (1 - z²)`, the positivity carrier.
    pub reduced: Poly<Rational>,
    /// Normalized numerator `p` with `F = prefactor·(1-z²)·p`.
    pub numerator: Poly<Rational>,
    #[serde(with = "serde_rational")]
    pub prefactor: Rational,
    pub outcome: PositivityOutcome,
}

impl RayAnalysis {
    pub fn is_extremal(&self) -> bool {
        self.outcome.is_positive()
    }
}

/// Decide extremality of the single ray at `c`.
pub fn analyze_ray(params: &JoinParams, c: &Rational) -> RayAnalysis {
    assert!(in_open_unit(c), "ray parameter must satisfy |c| < 1");
    let profile = build_profile(params, c);
    let reduced = reduced_profile(&profile);
    let (numerator, prefactor) = ray_numerator(params, c, &reduced);
    assert!(prefactor.is_positive());
    let outcome = certify_positive(&numerator, &Rational::from_integer((-1).into()), &Rational::from_integer(1.into()))
        .expect("ray numerator positivity check");
    RayAnalysis { c: c.clone(), profile, reduced, numerator, prefactor, outcome }
}
