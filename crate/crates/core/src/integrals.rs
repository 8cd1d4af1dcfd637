//! Moment integrals over the fiber coordinate: exact evaluation of
//! `∫_{-1}^{1} t^r · Π(1+x_i t) · (c t + 1)^{-m} dt` and its relatives,
//! numerically for rational `c` and symbolically over the rational
//! function field in `c`.
//!
//! Strategy: substitute `u = c t + 1`, expand the numerator in `u`, and
//! integrate pure powers. The expansion never produces a `u^{-1}` term for
//! in-range weights; that cancellation is asserted on every call rather
//! than assumed.

use crate::exact::field::Field;
use crate::exact::laurent::LaurentU;
use crate::exact::poly::Poly;
use crate::exact::rational::{RatFunc, Rational};
use crate::params::JoinParams;

/// `∫_{-1}^{1} numer(t) · (c t + 1)^{-m} dt`, exactly.
pub fn moment_integral<F: Field>(numer: &Poly<F>, m: u32, c: &F) -> F {
    if c.is_zero() {
        // Plain polynomial integration.
        let mut acc = F::zero();
        for (j, a) in numer.coeffs().iter().enumerate() {
            if j % 2 == 0 {
                let span = F::from_int(2) * F::from_int(j as i64 + 1).inv();
                acc = acc + a.clone() * span;
            }
        }
        return acc;
    }
    let integrand = LaurentU::from_tpoly(numer, c).shift(-(m as i64));
    let anti = integrand.antiderivative_t(c);
    let upper = F::one() + c.clone();
    let lower = F::one() - c.clone();
    anti.eval_u(&upper) - anti.eval_u(&lower)
}

fn alpha_numerator<F: Field>(params: &JoinParams, r: u32) -> Poly<F> {
    volume_numerator(params) * Poly::var().pow(r as usize)
}

/// `Π_i (1 + x_i t)` as a polynomial in `t`.
pub(crate) fn volume_numerator<F: Field>(params: &JoinParams) -> Poly<F> {
    let mut numer = Poly::<F>::one();
    for f in &params.factors {
        numer = numer * Poly::linear(F::one(), F::from_rational(f.x.clone()));
    }
    numer
}

/// `Σ_i x_i s_i Π_{j≠i} (1 + x_j t)` as a polynomial in `t`.
pub(crate) fn curvature_numerator<F: Field>(params: &JoinParams) -> Poly<F> {
    let n = params.factors.len();
    let mut numer = Poly::<F>::zero();
    for i in 0..n {
        let mut term = Poly::constant(
            F::from_rational(params.factors[i].x.clone() * params.factors[i].s.clone()),
        );
        for (j, f) in params.factors.iter().enumerate() {
            if j != i {
                term = term * Poly::linear(F::one(), F::from_rational(f.x.clone()));
            }
        }
        numer = numer + term;
    }
    numer
}

/// Volume-type moment: `∫_{-1}^{1} (c t + 1)^{-m} t^r Π(1+x_i t) dt`.
///
/// Requires `r <= m - 2`; together with the factor count this keeps the
/// expansion free of logarithmic terms, which is asserted independently.
pub fn alpha<F: Field>(params: &JoinParams, r: u32, m: u32, c: &F) -> F {
    assert!(r + 2 <= m, "moment order r={r} too large for weight m={m}");
    moment_integral(&alpha_numerator(params, r), m, c)
}

/// Curvature-type moment with its boundary contributions:
/// `∫_{-1}^{1} (c t + 1)^{-m} t^r Σ_i x_i s_i Π_{j≠i}(1+x_j t) dt
///  + (-1)^r (1-c)^{-m} Π(1-x_i) + (1+c)^{-m} Π(1+x_i)`
/// where `m` is the factor count plus two.
pub fn beta<F: Field>(params: &JoinParams, r: u32, c: &F) -> F {
    let m = params.beta_weight();
    assert!(r + 2 <= m, "moment order r={r} too large for weight m={m}");
    let numer = curvature_numerator(params) * Poly::var().pow(r as usize);
    let integral = moment_integral(&numer, m, c);

    let mut lower_prod = F::one();
    let mut upper_prod = F::one();
    for f in &params.factors {
        lower_prod = lower_prod * (F::one() - F::from_rational(f.x.clone()));
        upper_prod = upper_prod * (F::one() + F::from_rational(f.x.clone()));
    }
    let lower_pole = pow_f(&(F::one() - c.clone()).inv(), m);
    let upper_pole = pow_f(&(F::one() + c.clone()).inv(), m);
    let sign = if r % 2 == 0 { F::one() } else { -F::one() };
    integral + sign * lower_pole * lower_prod + upper_pole * upper_prod
}

fn pow_f<F: Field>(a: &F, n: u32) -> F {
    let mut out = F::one();
    for _ in 0..n {
        out = out * a.clone();
    }
    out
}

/// `alpha` over the rational function field in `c`. Integrating drops the
/// weight by one, so each endpoint pole has order at most `m - 1`; asserted.
pub fn alpha_symbolic(params: &JoinParams, r: u32, m: u32) -> RatFunc {
    let c = RatFunc::var();
    let out = alpha::<RatFunc>(params, r, m, &c);
    assert_pole_shape(&out, m - 1);
    out
}

/// `beta` over the rational function field in `c`. The boundary terms carry
/// the full weight, so each endpoint pole has order at most the weight.
pub fn beta_symbolic(params: &JoinParams, r: u32) -> RatFunc {
    let c = RatFunc::var();
    let out = beta::<RatFunc>(params, r, &c);
    assert_pole_shape(&out, params.beta_weight());
    out
}

/// The only admissible poles are at c = ±1, each of order at most `m`.
fn assert_pole_shape(rf: &RatFunc, m: u32) {
    let den = rf.denom();
    assert!(
        den.degree().map_or(true, |d| d <= 2 * m as usize),
        "pole order exceeds weight {m}: denominator degree {:?}",
        den.degree()
    );
    // (1 - c^2)^m must clear the denominator exactly.
    let one_minus_c2 = Poly::new(vec![
        Rational::from_integer(1.into()),
        Rational::from_integer(0.into()),
        Rational::from_integer((-1).into()),
    ]);
    let cleared = RatFunc::from_poly(one_minus_c2.pow(m as usize)) * rf.clone();
    assert!(
        cleared.is_polynomial(),
        "denominator has a factor other than (1-c)(1+c)"
    );
}
