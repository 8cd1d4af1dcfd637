//! Shared helpers for the integration suites: an adaptive Simpson
//! integrator serving as a numeric oracle built independently of the
//! exact evaluators, plus seeded random parameter generators.

#![allow(dead_code)]

pub mod rootcount;

use fiberjoin_core::params::JoinParams;
use fiberjoin_core::Rational;
use num_traits::ToPrimitive;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("rational fits in f64")
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

fn adaptive(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    // the second bound stops refinement at the f64 noise floor, where the
    // panel sums are dominated by rounding rather than truncation error
    if depth == 0 || delta.abs() <= 15.0 * tol || delta.abs() <= 1e-15 * (left.abs() + right.abs())
    {
        left + right + delta / 15.0
    } else {
        let half = tol / 2.0;
        adaptive(f, a, m, fa, flm, fm, left, half, depth - 1)
            + adaptive(f, m, b, fm, frm, fb, right, half, depth - 1)
    }
}

/// Adaptive Simpson quadrature with Richardson extrapolation.
pub fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(a, b, fa, fm, fb);
    adaptive(f, a, b, fa, fm, fb, whole, tol, 48)
}

/// Numeric `∫_{-1}^{1} t^r Π(1+x_i t) (c t + 1)^{-m} dt` by quadrature.
pub fn alpha_oracle(params: &JoinParams, r: u32, m: u32, c: &Rational) -> f64 {
    let xs: Vec<f64> = params.factors.iter().map(|f| to_f64(&f.x)).collect();
    let cf = to_f64(c);
    let f = move |t: f64| {
        let mut v = t.powi(r as i32);
        for x in &xs {
            v *= 1.0 + x * t;
        }
        v / (cf * t + 1.0).powi(m as i32)
    };
    integrate(&f, -1.0, 1.0, 1e-13)
}

/// Numeric counterpart of the curvature moment: quadrature for the
/// integral, closed-form floats for the two boundary terms.
pub fn beta_oracle(params: &JoinParams, r: u32, c: &Rational) -> f64 {
    let m = params.beta_weight();
    let xs: Vec<f64> = params.factors.iter().map(|f| to_f64(&f.x)).collect();
    let ss: Vec<f64> = params.factors.iter().map(|f| to_f64(&f.s)).collect();
    let cf = to_f64(c);
    let xs2 = xs.clone();
    let f = move |t: f64| {
        let mut sum = 0.0;
        for i in 0..xs2.len() {
            let mut term = xs2[i] * ss[i];
            for (j, x) in xs2.iter().enumerate() {
                if j != i {
                    term *= 1.0 + x * t;
                }
            }
            sum += term;
        }
        sum * t.powi(r as i32) / (cf * t + 1.0).powi(m as i32)
    };
    let integral = integrate(&f, -1.0, 1.0, 1e-13);

    let lower: f64 = xs.iter().map(|x| 1.0 - x).product();
    let upper: f64 = xs.iter().map(|x| 1.0 + x).product();
    let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
    integral + sign * (1.0 - cf).powi(-(m as i32)) * lower + (1.0 + cf).powi(-(m as i32)) * upper
}

/// Random asymmetry in (-1, 1) excluding zero, denominator up to 19.
pub fn random_x(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let den = rng.random_range(2i64..=19);
        let num = rng.random_range(-(den - 1)..=den - 1);
        if num != 0 {
            return rat(num, den);
        }
    }
}

/// Random transverse curvature parameter, small rational of either sign.
pub fn random_s(rng: &mut ChaCha8Rng) -> Rational {
    let den = rng.random_range(1i64..=5);
    let num = rng.random_range(-8 * den..=8 * den);
    rat(num, den)
}

/// Random ray parameter with |c| <= 9/10.
pub fn random_c(rng: &mut ChaCha8Rng) -> Rational {
    let den = rng.random_range(10i64..=300);
    let bound = 9 * den / 10;
    rat(rng.random_range(-bound..=bound), den)
}

pub fn random_params5(rng: &mut ChaCha8Rng) -> JoinParams {
    JoinParams::dim5(random_x(rng), random_s(rng))
}

pub fn random_params7(rng: &mut ChaCha8Rng) -> JoinParams {
    JoinParams::dim7(random_x(rng), random_s(rng), random_x(rng), random_s(rng))
}

pub fn random_params(rng: &mut ChaCha8Rng) -> JoinParams {
    if rng.random_bool(0.5) {
        random_params5(rng)
    } else {
        random_params7(rng)
    }
}
