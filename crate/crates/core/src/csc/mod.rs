//! Constant-scalar-curvature rays.
//!
//! The extremal representative of the ray at `c` has constant scalar
//! curvature exactly when a locus polynomial `h(c)` vanishes. `h` is built
//! twice (from the moment integrals and from the explicit coefficient
//! form) and the copies must agree; its boundary values have closed forms
//! whose signs force at least one root in the open interval. Every root
//! is delivered with an isolating interval, an exact rational value when
//! one is detected, and extremality evidence for the ray it defines.

pub mod weights;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::closedforms::{dim5, dim7};
use crate::exact::field::Ring;
use crate::exact::poly::{bipoly_eval_inner, resultant, BiPoly, Poly};
use crate::exact::rational::{
    rat, rat_i, serde_rational, serde_rational_opt, simplest_in_interval, RatFunc, Rational,
};
use crate::exact::sturm::{count_roots_in, isolate_roots, IsolatingInterval};
use crate::extremality::{analyze_ray, ConeCertificate, ConeOutcome, ConeProblem, RayAnalysis};
use crate::integrals::{alpha_symbolic, beta_symbolic};
use crate::params::{weights_from_ray, JoinDim, JoinParams};

/// Isolating intervals are shrunk to this width (as a power of two)
/// before being reported.
pub const DEFAULT_TOLERANCE_BITS: u32 = 64;

/// The polynomial in the ray parameter whose roots in the open interval
/// are the CSC rays. Cubic for one curve factor, quintic for two.
///
/// Construction is double-entry: the explicit coefficient form and the
/// moment-integral form `(α₁β₀ - α₀β₁)·scalar·(1-c²)^(2m-1)` must agree
/// exactly, and the boundary values must equal their closed forms.
pub fn locus(params: &JoinParams) -> Poly<Rational> {
    let explicit = match params.dim() {
        JoinDim::Five => {
            let f = &params.factors[0];
            dim5::csc_cubic(&f.x, &f.s)
        }
        JoinDim::Seven => {
            let (f1, f2) = (&params.factors[0], &params.factors[1]);
            dim7::csc_quintic(&f1.x, &f1.s, &f2.x, &f2.s)
        }
    };

    let m = params.beta_weight();
    let a0 = alpha_symbolic(params, 0, m + 1);
    let a1 = alpha_symbolic(params, 1, m + 1);
    let b0 = beta_symbolic(params, 0);
    let b1 = beta_symbolic(params, 1);
    let defect = a1 * b0 - a0 * b1;
    let scalar = match params.dim() {
        JoinDim::Five => rat(3, 4),
        JoinDim::Seven => rat(9, 4),
    };
    let clear = Poly::new(vec![rat_i(1), rat_i(0), rat_i(-1)]).pow(2 * m as usize - 1);
    let from_integrals = (defect * RatFunc::from_poly(clear) * RatFunc::from_rational(scalar))
        .expect_polynomial("integral form of the CSC locus");
    assert_eq!(from_integrals, explicit, "the two locus constructions disagree");

    let one = rat_i(1);
    let (at_plus, at_minus) = (explicit.eval(&one), explicit.eval(&-one.clone()));
    let scale = match params.dim() {
        JoinDim::Five => 4,
        JoinDim::Seven => 24,
    };
    let mut plus = rat_i(scale);
    let mut minus = rat_i(-scale);
    for x in params.xs() {
        let m1 = rat_i(1) - &x;
        let p1 = rat_i(1) + &x;
        plus *= &m1 * &m1;
        minus *= &p1 * &p1;
    }
    assert_eq!(at_plus, plus, "upper boundary identity");
    assert_eq!(at_minus, minus, "lower boundary identity");
    explicit
}

/// Verify the two identities behind the one-curve locus certificate:
/// the locus factors through the eliminated curvature weight, and with
/// that weight substituted the ray numerator splits into linear factors
/// with no roots in the closed fiber interval. Together they make every
/// locus ray extremal, wherever the root lies.
pub fn verify_locus_split(params: &JoinParams) {
    assert_eq!(params.dim(), JoinDim::Five);
    let x = &params.factors[0].x;
    let s = &params.factors[0].s;
    let sigma = dim5::weight_on_csc_locus(x);

    // h(c) = x (c - x)(1 - c²) (σ(c) - s): the multiplier has no roots at
    // any locus point, so h(ĉ) = 0 forces σ(ĉ) = s.
    let h = dim5::csc_cubic(x, s);
    let multiplier = Poly::new(vec![-x * x, x.clone(), x * x, -x.clone()]);
    let lhs = RatFunc::from_poly(h);
    let rhs = RatFunc::from_poly(multiplier) * (sigma.clone() - RatFunc::from_rational(s.clone()));
    assert_eq!(lhs, rhs, "locus does not factor through the eliminated weight");

    // With s = σ(c), the numerator takes the displayed product form whose
    // linear factors are positive on [-1, 1] for every |c| < 1.
    let c = RatFunc::var();
    let xf = RatFunc::from_rational(x.clone());
    let direct = dim5::profile_numerator(&c, &xf, &sigma);
    let split = dim5::profile_on_csc_locus(&c, &xf);
    assert_eq!(direct, split, "numerator does not split on the locus");
}

/// Positivity of the cone numerator over a parameter interval: the
/// interval carries no vanishing point of the two-variable numerator, so
/// the sign at the midpoint slice rules the whole region, including the
/// (possibly irrational) root inside.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegionCertificate {
    #[serde(with = "serde_rational")]
    pub lo: Rational,
    #[serde(with = "serde_rational")]
    pub hi: Rational,
    /// Numerator value at the interval midpoint, fiber center.
    #[serde(with = "serde_rational")]
    pub sample: Rational,
}

/// How the extremality of a CSC ray was established.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "data")]
pub enum ExtremalityEvidence {
    /// The root is exactly rational: a full single-ray analysis.
    ExactRay(RayAnalysis),
    /// Every ray of the cone is extremal.
    WholeCone(ConeCertificate),
    /// One-curve locus factorization: identities checked by
    /// `verify_locus_split`, valid for every root simultaneously.
    LocusSplit,
    /// Interval region proof around the root.
    Region(RegionCertificate),
    /// No evidence found; the ray is CSC-critical but its extremality is
    /// left open.
    Undetermined,
}

/// One certified CSC ray.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CscRayCertificate {
    pub root: IsolatingInterval,
    /// Exact rational root when the interval pinned one down.
    #[serde(with = "serde_rational_opt")]
    pub exact_root: Option<Rational>,
    /// Primitive Reeb weight pair for quasi-regular (rational) roots.
    pub quasi_regular: Option<(i64, i64)>,
    pub evidence: ExtremalityEvidence,
}

impl CscRayCertificate {
    /// `Some(true)`: the CSC ray is extremal (certified); `Some(false)`:
    /// certified not extremal; `None`: left open.
    pub fn is_extremal(&self) -> Option<bool> {
        match &self.evidence {
            ExtremalityEvidence::ExactRay(a) => Some(a.is_extremal()),
            ExtremalityEvidence::WholeCone(_)
            | ExtremalityEvidence::LocusSplit
            | ExtremalityEvidence::Region(_) => Some(true),
            ExtremalityEvidence::Undetermined => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CscReport {
    pub locus: Poly<Rational>,
    pub rays: Vec<CscRayCertificate>,
    pub tolerance_bits: u32,
    /// Whole-cone outcome, when the evidence path needed one.
    pub cone: Option<ConeOutcome>,
}

/// Find and certify every CSC ray of the join.
pub fn solve(params: &JoinParams) -> CscReport {
    solve_with(params, None, DEFAULT_TOLERANCE_BITS)
}

/// As `solve`, with a caller-prepared cone problem (avoids the slow fully
/// symbolic construction when a closed form exists) and an interval
/// width target of `2^(-tolerance_bits)`.
pub fn solve_with(
    params: &JoinParams,
    cone: Option<&ConeProblem>,
    tolerance_bits: u32,
) -> CscReport {
    let h = locus(params);
    let tol = pow2_inv(tolerance_bits);
    let one = rat_i(1);
    let roots = isolate_roots(&h, &-one.clone(), &one, &tol)
        .expect("locus has nonzero boundary values");
    assert!(!roots.is_empty(), "boundary signs force at least one root");

    let mut pinned = Vec::with_capacity(roots.len());
    let mut any_interval_root = false;
    for iv in roots {
        let (iv, exact) = pin_root(&h, &iv, tolerance_bits);
        if exact.is_none() {
            any_interval_root = true;
        }
        pinned.push((iv, exact));
    }

    if params.dim() == JoinDim::Five {
        verify_locus_split(params);
    }

    // Shared dim-7 evidence for roots that are not exactly rational.
    let mut cone_outcome = None;
    let owned_problem;
    let problem: Option<&ConeProblem> = if params.dim() == JoinDim::Seven && any_interval_root {
        let p = match cone {
            Some(p) => p,
            None => {
                owned_problem = ConeProblem::symbolic(params);
                &owned_problem
            }
        };
        cone_outcome = Some(p.certify(&[]));
        Some(p)
    } else {
        None
    };

    let mut rays = Vec::with_capacity(pinned.len());
    for (root, exact) in pinned {
        let quasi_regular = exact.as_ref().map(weights_from_ray);
        let evidence = match &exact {
            Some(c0) => ExtremalityEvidence::ExactRay(analyze_ray(params, c0)),
            None => match params.dim() {
                JoinDim::Five => ExtremalityEvidence::LocusSplit,
                JoinDim::Seven => {
                    let problem = problem.expect("cone evidence prepared");
                    match cone_outcome.as_ref() {
                        Some(ConeOutcome::AllExtremal { certificate }) => {
                            ExtremalityEvidence::WholeCone(certificate.clone())
                        }
                        _ => match region_evidence(&h, &problem.numerator, &root) {
                            Some((_, cert)) => ExtremalityEvidence::Region(cert),
                            None => ExtremalityEvidence::Undetermined,
                        },
                    }
                }
            },
        };
        rays.push(CscRayCertificate { root, exact_root: exact, quasi_regular, evidence });
    }

    CscReport { locus: h, rays, tolerance_bits, cone: cone_outcome }
}

fn pow2_inv(bits: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << bits)
}

/// Shrink the isolating interval to width `2^(-bits)` by Sturm bisection;
/// an exact rational root hit on the way is returned instead.
fn refine_to_width(
    h: &Poly<Rational>,
    iv: &IsolatingInterval,
    bits: u32,
) -> Result<IsolatingInterval, Rational> {
    let mut iv = iv.clone();
    let target = pow2_inv(bits);
    while iv.width() > target {
        let mid = iv.midpoint();
        if h.eval(&mid).is_zero() {
            return Err(mid);
        }
        let left = count_roots_in(h, &iv.lo, &mid).expect("midpoint is not a root");
        if left > 0 {
            iv.hi = mid;
        } else {
            iv.lo = mid;
        }
    }
    Ok(iv)
}

/// Refine and try to recognize the root as an exact rational: at a ladder
/// of widths, take the simplest rational in the interval and test it.
fn pin_root(
    h: &Poly<Rational>,
    iv: &IsolatingInterval,
    tolerance_bits: u32,
) -> (IsolatingInterval, Option<Rational>) {
    let mut iv = iv.clone();
    for bits in [tolerance_bits, 2 * tolerance_bits, 4 * tolerance_bits] {
        match refine_to_width(h, &iv, bits) {
            Ok(refined) => iv = refined,
            Err(exact) => return (iv, Some(exact)),
        }
        let candidate = simplest_in_interval(&iv.lo, &iv.hi);
        if h.eval(&candidate).is_zero() {
            return (iv, Some(candidate));
        }
    }
    (iv, None)
}

/// Certify that the cone numerator is positive on `[lo, hi] × (-1, 1)`:
/// no fiber-discriminant root, no leading-coefficient root and no edge
/// root meets the parameter interval, so the fiber root count is constant
/// there; the midpoint slice has none and is positive.
pub fn region_holds(numer: &BiPoly, lo: &Rational, hi: &Rational) -> Option<RegionCertificate> {
    let in_z: Poly<RatFunc> = numer.map(|q| RatFunc::from_poly(q.clone()));
    let dz = in_z.derivative();
    if dz.is_zero() {
        return None;
    }
    let res = resultant(&in_z, &dz).expect_polynomial("fiber discriminant");
    if res.is_zero() {
        return None;
    }
    let lead = numer.leading()?.clone();
    let edge_hi = numer.eval(&Poly::one());
    let edge_lo = numer.eval(&Poly::constant(rat_i(-1)));
    for q in [&res, &lead, &edge_hi, &edge_lo] {
        match count_roots_in(q, lo, hi) {
            Ok(0) => {}
            _ => return None,
        }
    }
    let mid = (lo + hi) / rat_i(2);
    let slice = bipoly_eval_inner(numer, &mid);
    let one = rat_i(1);
    match count_roots_in(&slice, &-one.clone(), &one) {
        Ok(0) => {}
        _ => return None,
    }
    let sample = slice.eval(&rat_i(0));
    if !sample.is_positive() {
        return None;
    }
    Some(RegionCertificate { lo: lo.clone(), hi: hi.clone(), sample })
}

/// Shrink the root interval (keeping the root inside) until `region_holds`
/// succeeds, up to twelve halvings.
fn region_evidence(
    h: &Poly<Rational>,
    numer: &BiPoly,
    root: &IsolatingInterval,
) -> Option<(IsolatingInterval, RegionCertificate)> {
    let mut iv = root.clone();
    for _ in 0..=12 {
        if let Some(cert) = region_holds(numer, &iv.lo, &iv.hi) {
            return Some((iv, cert));
        }
        let mid = iv.midpoint();
        if h.eval(&mid).is_zero() {
            return None; // exactly rational root; handled on the exact path
        }
        let left = count_roots_in(h, &iv.lo, &mid).ok()?;
        if left > 0 {
            iv.hi = mid;
        } else {
            iv.lo = mid;
        }
    }
    None
}
