//! Linear-fractional substitutions into polynomials, cleared of
//! denominators. Used to move positivity questions between intervals and
//! the positive axis, where coefficient signs become meaningful.

use super::field::Ring;
use super::poly::Poly;

/// `(c·x + d)^deg(p) · p((a·x + b)/(c·x + d))`.
///
/// For `x` ranging where `c·x + d > 0`, the result has the same sign as
/// `p` at the substituted point.
pub fn fractional_substitute<R: Ring>(p: &Poly<R>, a: &R, b: &R, c: &R, d: &R) -> Poly<R> {
    let deg = match p.degree() {
        None => return Poly::zero(),
        Some(d) => d,
    };
    let num = Poly::linear(b.clone(), a.clone());
    let den = Poly::linear(d.clone(), c.clone());
    let mut out = Poly::zero();
    // Horner in projective form: powers of num and den sum to deg.
    let mut den_pow = Poly::one();
    let mut num_pows = Vec::with_capacity(deg + 1);
    num_pows.push(Poly::one());
    for _ in 0..deg {
        num_pows.push(num_pows.last().unwrap().clone() * num.clone());
    }
    for i in (0..=deg).rev() {
        let term = Poly::constant(p.coeff(i)) * num_pows[i].clone() * den_pow.clone();
        out = out + term;
        if i > 0 {
            den_pow = den_pow * den.clone();
        }
    }
    out
}

/// Substitute `x = (1-u)/(1+u)`, mapping `u in (0, inf)` onto `x in (-1, 1)`
/// (decreasing). Result is `(1+u)^deg · p((1-u)/(1+u))`, same sign as `p`.
pub fn to_positive_axis<R: Ring>(p: &Poly<R>) -> Poly<R> {
    fractional_substitute(p, &(-R::one()), &R::one(), &R::one(), &R::one())
}

/// Substitute `x = (lo + hi·y)/(1+y)`, mapping `y in (0, inf)` onto
/// `x in (lo, hi)` (increasing).
pub fn interval_to_positive_axis<R: Ring>(p: &Poly<R>, lo: &R, hi: &R) -> Poly<R> {
    fractional_substitute(p, hi, lo, &R::one(), &R::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{poly_i, rat, rat_i, Rational};

    #[test]
    fn substitution_agrees_pointwise() {
        let p = poly_i(&[3, -1, 0, 2]);
        let (a, b, c, d) = (rat_i(2), rat(1, 3), rat_i(1), rat_i(5));
        let q = fractional_substitute(&p, &a, &b, &c, &d);
        for x in [rat_i(0), rat(1, 2), rat_i(-3), rat(7, 11)] {
            let den = c.clone() * x.clone() + d.clone();
            let arg = (a.clone() * x.clone() + b.clone()) / den.clone();
            let mut den_pow = Rational::from_integer(1.into());
            for _ in 0..p.degree().unwrap() {
                den_pow *= den.clone();
            }
            assert_eq!(q.eval(&x), p.eval(&arg) * den_pow);
        }
    }

    #[test]
    fn unit_transform_is_involutive_up_to_scale() {
        let p = poly_i(&[1, 4, -2, 9]);
        let twice = to_positive_axis(&to_positive_axis(&p));
        // Applying the substitution twice multiplies by 2^deg.
        assert_eq!(twice, p.scale(&rat_i(8)));
    }
}
