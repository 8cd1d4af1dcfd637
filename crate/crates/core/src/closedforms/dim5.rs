//! Closed forms for joins over a single curve (five-dimensional total space).
//!
//! The base data is a pair of positive integers `k1 != k2` and a genus `g`,
//! reduced to the asymmetry `x = (k1 - k2)/(k1 + k2)` and the curvature weight
//! `s = 2(1 - g)/(k1 - k2)`. All functions take the ray parameter `c`, `x` and
//! `s` as generic field elements so they work with plain rationals as well as
//! with rational functions of a symbolic ray parameter.

use crate::exact::field::{Field, Ring};
use crate::exact::poly::Poly;
use crate::exact::rational::{RatFunc, Rational};

fn int<F: Ring>(n: i64) -> F {
    F::from_int(n)
}

/// Four times the scale factor relating the reduced profile `q` to its
/// normalized numerator: `numerator = scale4 * q`. Expanded form of
/// `2 (1 + x^2)(1 + c^2) - 8 c x + 4 (1 - c^2)(1 - x^2)`, which is strictly
/// positive for |c| < 1, |x| < 1.
pub fn profile_scale4<F: Ring>(c: &F, x: &F) -> F {
    let c2 = c.clone() * c.clone();
    let x2 = x.clone() * x.clone();
    let mixed = c.clone() * x.clone();
    (int::<F>(3) + int::<F>(3) * c2.clone() * x2.clone() - c2 - x2 - int::<F>(4) * mixed)
        * int::<F>(2)
}

/// Normalized numerator of the reduced profile: the quadratic in the fiber
/// coordinate z whose positivity on (-1, 1) decides extremality of the ray.
/// Satisfies `p(1) = profile_scale4 * (1 + x)` and
/// `p(-1) = profile_scale4 * (1 - x)`.
pub fn profile_numerator<F: Field>(c: &F, x: &F, s: &F) -> Poly<F> {
    let c2 = c.clone() * c.clone();
    let x2 = x.clone() * x.clone();
    let x3 = x2.clone() * x.clone();
    let sx = s.clone() * x.clone();
    let a0 = c2.clone() * sx.clone()
        + int::<F>(3) * c2.clone() * x2.clone()
        - c2.clone()
        - int::<F>(2) * c.clone() * sx.clone() * x.clone()
        + int::<F>(3) * c.clone() * x3.clone()
        - int::<F>(7) * c.clone() * x.clone()
        + sx.clone() * x2.clone()
        - int::<F>(4) * x2.clone()
        + int::<F>(6);
    let a1 = int::<F>(2)
        * x.clone()
        * (int::<F>(3) * c2.clone() * x2.clone() - c2 - int::<F>(4) * c.clone() * x.clone()
            - x2.clone()
            + int::<F>(3));
    let a2 = (c.clone() - x.clone())
        * (-c.clone() * sx.clone() + int::<F>(3) * c.clone() * x2 - c.clone() + sx * x.clone()
            - int::<F>(2) * x.clone());
    Poly::new(vec![a0, a1, a2])
}

/// The cubic in the ray parameter whose roots inside (-1, 1) are the CSC rays.
/// Boundary values: `h(1) = 4 (1 - x)^2`, `h(-1) = -4 (1 + x)^2`, and
/// `h(x) = 3 x (1 - x^2)^2` independently of `s`, so `x` is never a root.
pub fn csc_cubic<F: Field>(x: &F, s: &F) -> Poly<F> {
    let x2 = x.clone() * x.clone();
    let sx = s.clone() * x.clone();
    Poly::new(vec![
        x.clone() * (sx.clone() - int::<F>(2)),
        int::<F>(5) + x2.clone() - sx.clone(),
        -x.clone() * (int::<F>(6) + sx.clone()),
        -(F::one() - sx - int::<F>(3) * x2),
    ])
}

/// The CSC cubic pushed to the positive half line by c = (1 - b)/(1 + b) and
/// cleared of denominators. For s x <= 0 the coefficient signs are
/// (+, +, -, -), so there is exactly one sign change and hence exactly one
/// CSC ray.
pub fn csc_halfline_cubic<F: Field>(x: &F, s: &F) -> Poly<F> {
    let sx = s.clone() * x.clone();
    let one_minus = F::one() - x.clone();
    let one_plus = F::one() + x.clone();
    Poly::new(vec![
        int::<F>(4) * one_minus.clone() * one_minus.clone(),
        int::<F>(4) * one_minus * (int::<F>(2) + int::<F>(2) * x.clone() - sx.clone()),
        -int::<F>(4)
            * one_plus.clone()
            * (int::<F>(2) * (F::one() - x.clone()) - sx),
        -int::<F>(4) * one_plus.clone() * one_plus,
    ])
}

/// Curvature weight forced by membership of the ray parameter in the CSC
/// locus: `csc_cubic(x, s)` vanishes at `c` exactly when `s` equals this
/// rational function of `c`. The poles c = +-1 and c = x are never roots of
/// the cubic, so the expression is regular at every CSC ray.
pub fn weight_on_csc_locus(x: &Rational) -> RatFunc {
    let x2 = x * x;
    let num = Poly::new(vec![
        -Rational::from_int(2) * x,
        &x2 + Rational::from_int(5),
        -Rational::from_int(6) * x,
        Rational::from_int(3) * &x2 - Rational::one(),
    ]);
    let den = Poly::new(vec![
        -&x2,
        x.clone(),
        x2.clone(),
        -x.clone(),
    ]);
    RatFunc::new(num, den)
}

/// Factored form taken by the profile numerator on the CSC locus: with
/// `s = weight_on_csc_locus(c)`,
/// `p(z) = profile_scale4 * (1 + c z) * ((1 - c x) + (x - c) z) / (1 - c^2)`.
/// Both linear factors have their root outside [-1, 1], so a CSC ray is
/// automatically extremal.
pub fn profile_on_csc_locus<F: Field>(c: &F, x: &F) -> Poly<F> {
    let scale = profile_scale4(c, x);
    let inv = (F::one() - c.clone() * c.clone()).inv();
    let first = Poly::new(vec![F::one(), c.clone()]);
    let second = Poly::new(vec![
        F::one() - c.clone() * x.clone(),
        x.clone() - c.clone(),
    ]);
    (first * second).scale(&(scale * inv))
}
