//! Strict-positivity certificates for polynomials on open rational
//! intervals, with machine-replayable witnesses, and exact refutations
//! when positivity fails.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::field::Ring;
use super::mobius::interval_to_positive_axis;
use super::poly::Poly;
use super::rational::{serde_rational, Rational};
use super::sturm::{count_roots_in, isolate_roots, IsolatingInterval, SturmChain};
use super::ExactError;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PositivityMethod {
    /// Square-free reduction plus a Sturm count of zero interior roots.
    SturmRootCount,
    /// All coefficients nonnegative after the interval-to-positive-axis
    /// substitution.
    MobiusNonnegCoeffs,
    /// Boundary roots split off; the remaining cofactor was constant.
    EndpointDeflation,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PositivityWitness {
    NonnegCoeffs {
        transformed: Poly<Rational>,
    },
    RootCount {
        squarefree: Poly<Rational>,
        interior_roots: usize,
        #[serde(with = "serde_rational")]
        sample: Rational,
        #[serde(with = "serde_rational")]
        value: Rational,
    },
    Constant {
        #[serde(with = "serde_rational")]
        value: Rational,
    },
}

/// Witness that `poly > 0` on the open interval `(lo, hi)`.
///
/// Boundary roots are deflated first: `poly = cofactor · (x-lo)^a · (hi-x)^b`
/// with both split factors positive on the open interval, so positivity of
/// the cofactor decides. `replay` re-derives the verdict from the stored
/// data and fails loudly on any mismatch.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PositivityCertificate {
    pub poly: Poly<Rational>,
    #[serde(with = "serde_rational")]
    pub lo: Rational,
    #[serde(with = "serde_rational")]
    pub hi: Rational,
    pub deflated_at_lo: u32,
    pub deflated_at_hi: u32,
    pub cofactor: Poly<Rational>,
    pub method: PositivityMethod,
    pub witness: PositivityWitness,
}

/// Exact evidence that strict positivity fails.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Refutation {
    /// A rational point of the open interval where the value is <= 0.
    NonpositiveSample {
        #[serde(with = "serde_rational")]
        point: Rational,
        #[serde(with = "serde_rational")]
        value: Rational,
    },
    /// An interior root that the polynomial does not cross (even
    /// multiplicity): no rational nonpositive sample exists, but the value
    /// vanishes inside the isolated interval.
    InteriorZero { interval: IsolatingInterval },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PositivityOutcome {
    Positive(PositivityCertificate),
    NotPositive(Refutation),
}

impl PositivityOutcome {
    pub fn is_positive(&self) -> bool {
        matches!(self, PositivityOutcome::Positive(_))
    }

    pub fn certificate(&self) -> Option<&PositivityCertificate> {
        match self {
            PositivityOutcome::Positive(c) => Some(c),
            _ => None,
        }
    }

    pub fn refutation(&self) -> Option<&Refutation> {
        match self {
            PositivityOutcome::NotPositive(r) => Some(r),
            _ => None,
        }
    }
}

/// Decide strict positivity of `p` on the open interval `(lo, hi)`.
pub fn certify_positive(
    p: &Poly<Rational>,
    lo: &Rational,
    hi: &Rational,
) -> Result<PositivityOutcome, ExactError> {
    if lo >= hi {
        return Err(ExactError::EmptyInterval);
    }
    let mid = (lo.clone() + hi.clone()) / Rational::from_integer(2.into());
    if p.is_zero() {
        return Ok(PositivityOutcome::NotPositive(Refutation::NonpositiveSample {
            point: mid,
            value: Rational::from_integer(0.into()),
        }));
    }

    // Split off boundary roots; each split factor is positive inside.
    let mut cofactor = p.clone();
    let mut deflated_at_lo = 0u32;
    let mut deflated_at_hi = 0u32;
    while cofactor.eval(lo).is_zero() {
        let (q, r) = cofactor.div_linear(lo);
        debug_assert!(r.is_zero());
        cofactor = q;
        deflated_at_lo += 1;
    }
    while cofactor.eval(hi).is_zero() {
        // hi - x, kept positive on the interval
        cofactor = cofactor.div_exact(&Poly::linear(hi.clone(), -Rational::from_integer(1.into())), "deflate hi");
        deflated_at_hi += 1;
    }

    let done = |method, witness| {
        Ok(PositivityOutcome::Positive(PositivityCertificate {
            poly: p.clone(),
            lo: lo.clone(),
            hi: hi.clone(),
            deflated_at_lo,
            deflated_at_hi,
            cofactor: cofactor.clone(),
            method,
            witness,
        }))
    };

    if cofactor.degree() == Some(0) {
        let value = cofactor.coeff(0);
        return if value.is_positive() {
            done(PositivityMethod::EndpointDeflation, PositivityWitness::Constant { value })
        } else {
            Ok(PositivityOutcome::NotPositive(Refutation::NonpositiveSample {
                point: mid.clone(),
                value: p.eval(&mid),
            }))
        };
    }

    // Fast sufficient check: nonnegative coefficients on the positive axis.
    let transformed = interval_to_positive_axis(&cofactor, lo, hi);
    if transformed.coeffs().iter().all(|c| !c.is_negative()) {
        // cofactor(lo) != 0 puts a strictly positive constant coefficient
        // in front, so the value is positive for every y > 0.
        debug_assert!(transformed.coeff(0).is_positive());
        return done(
            PositivityMethod::MobiusNonnegCoeffs,
            PositivityWitness::NonnegCoeffs { transformed },
        );
    }

    // Decisive route: no interior roots plus one positive interior sample.
    let squarefree = cofactor.squarefree();
    let interior = count_roots_in(&cofactor, lo, hi)?;
    if interior == 0 {
        let value = cofactor.eval(&mid);
        return if value.is_positive() {
            done(
                PositivityMethod::SturmRootCount,
                PositivityWitness::RootCount {
                    squarefree,
                    interior_roots: 0,
                    sample: mid,
                    value,
                },
            )
        } else {
            Ok(PositivityOutcome::NotPositive(Refutation::NonpositiveSample {
                point: mid.clone(),
                value: p.eval(&mid),
            }))
        };
    }

    // Interior roots exist, so strict positivity fails. Produce the most
    // explicit refutation available: a rational nonpositive sample if the
    // polynomial crosses, otherwise the isolated touching root.
    let tol = (hi.clone() - lo.clone()) / Rational::from_integer(1024.into());
    let roots = isolate_roots(&cofactor, lo, hi, &tol)?;
    debug_assert!(!roots.is_empty());
    for r in &roots {
        for pt in [&r.lo, &r.hi, &r.midpoint()] {
            let v = p.eval(pt);
            if !v.is_positive() {
                return Ok(PositivityOutcome::NotPositive(Refutation::NonpositiveSample {
                    point: pt.clone(),
                    value: v,
                }));
            }
        }
    }
    Ok(PositivityOutcome::NotPositive(Refutation::InteriorZero {
        interval: roots[0].clone(),
    }))
}

impl PositivityCertificate {
    /// Re-derive the verdict from the stored witness. Every exact claim is
    /// recomputed; returns false on any mismatch.
    pub fn replay(&self) -> bool {
        // Deflation bookkeeping must reconstruct the original polynomial.
        let one = Rational::from_integer(1.into());
        let mut rebuilt = self.cofactor.clone();
        for _ in 0..self.deflated_at_lo {
            rebuilt = rebuilt * Poly::linear(-self.lo.clone(), one.clone());
        }
        for _ in 0..self.deflated_at_hi {
            rebuilt = rebuilt * Poly::linear(self.hi.clone(), -one.clone());
        }
        if rebuilt != self.poly || self.lo >= self.hi {
            return false;
        }
        match (&self.method, &self.witness) {
            (PositivityMethod::EndpointDeflation, PositivityWitness::Constant { value }) => {
                self.cofactor == Poly::constant(value.clone()) && value.is_positive()
            }
            (PositivityMethod::MobiusNonnegCoeffs, PositivityWitness::NonnegCoeffs { transformed }) => {
                let again = interval_to_positive_axis(&self.cofactor, &self.lo, &self.hi);
                again == *transformed
                    && !again.is_zero()
                    && again.coeffs().iter().all(|c| !c.is_negative())
                    && again.coeff(0).is_positive()
            }
            (
                PositivityMethod::SturmRootCount,
                PositivityWitness::RootCount { squarefree, interior_roots, sample, value },
            ) => {
                if *interior_roots != 0 || !value.is_positive() {
                    return false;
                }
                if self.cofactor.squarefree() != *squarefree {
                    return false;
                }
                if self.cofactor.eval(sample) != *value {
                    return false;
                }
                if !(self.lo < *sample && *sample < self.hi) {
                    return false;
                }
                let chain = SturmChain::of(squarefree);
                chain.variations_at(&self.lo) == chain.variations_at(&self.hi)
            }
            _ => false,
        }
    }
}

impl Refutation {
    /// Check the refutation against the polynomial it refers to.
    pub fn replay(&self, p: &Poly<Rational>, lo: &Rational, hi: &Rational) -> bool {
        match self {
            Refutation::NonpositiveSample { point, value } => {
                lo <= point && point <= hi && p.eval(point) == *value && !value.is_positive()
            }
            Refutation::InteriorZero { interval } => {
                lo <= &interval.lo
                    && &interval.hi <= hi
                    && count_roots_in(p, &interval.lo, &interval.hi).map_or(false, |n| n >= 1)
            }
        }
    }
}
