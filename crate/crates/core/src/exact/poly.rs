//! Dense univariate polynomials, coefficients stored lowest degree first
//! with no trailing zeros. `Poly<Poly<Rational>>` serves as the bivariate
//! representation where one is needed (outer variable's coefficients are
//! polynomials in the inner variable).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{Field, Ring};
use super::rational::{format_rational, parse_rational, Rational};

#[derive(Clone, PartialEq)]
pub struct Poly<R: Ring> {
    coeffs: Vec<R>,
}

/// Bivariate polynomial: coefficients of the outer variable are
/// polynomials in the inner variable.
pub type BiPoly = Poly<Poly<Rational>>;

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![R::one()] }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The variable `x`.
    pub fn var() -> Self {
        Self { coeffs: vec![R::zero(), R::one()] }
    }

    /// `a + b x`.
    pub fn linear(a: R, b: R) -> Self {
        Self::new(vec![a, b])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the stored range).
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Evaluate into another ring through a coefficient embedding.
    pub fn eval_in<S: Ring>(&self, embed: impl Fn(&R) -> S, x: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + embed(c);
        }
        acc
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, a: &R) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * a.clone()).collect())
    }

    /// Multiply by `x^k`.
    pub fn mul_xpow(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * R::from_int(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out * self.clone();
        }
        out
    }

    /// Substitute another polynomial for the variable (Horner).
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * inner.clone() + Self::constant(c.clone());
        }
        acc
    }

    /// Synthetic division by the monic linear factor `x - a`:
    /// returns (quotient, remainder) with `self = q·(x-a) + r`.
    pub fn div_linear(&self, a: &R) -> (Self, R) {
        if self.is_zero() {
            return (Self::zero(), R::zero());
        }
        let mut q = vec![R::zero(); self.coeffs.len() - 1];
        let mut carry = R::zero();
        for i in (0..self.coeffs.len()).rev() {
            let v = self.coeffs[i].clone() + carry.clone() * a.clone();
            if i == 0 {
                return (Poly::new(q), v);
            }
            q[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }
}

impl<F: Field> Poly<F> {
    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let lead_inv = d.leading().unwrap().inv();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap().clone() * lead_inv.clone();
            for i in 0..dd {
                let t = rem[k + i].clone() - factor.clone() * d.coeffs[i].clone();
                rem[k + i] = t;
            }
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
            quot[k] = factor;
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, d: &Self, what: &str) -> Self {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "{what}: division left remainder {r:?}");
        q
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.inv()),
        }
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Largest square-free divisor: `self / gcd(self, self')`, monic.
    pub fn squarefree(&self) -> Self {
        if self.degree().map_or(true, |d| d == 0) {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g, "squarefree").monic()
    }
}

impl Poly<Rational> {
    /// Positive scalar `s` and integer-coefficient polynomial `q` with
    /// `self = q / s` (s clears all denominators).
    pub fn clear_denominators(&self) -> (Poly<Rational>, Rational) {
        use num_integer::Integer;
        let mut lcm = num_bigint::BigInt::from(1);
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let s = Rational::from_integer(lcm);
        (self.scale(&s), s)
    }

    /// Render as a human-readable string in the given variable.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = vec![];
        for (i, c) in self.coeffs.iter().enumerate() {
            if Ring::is_zero(c) {
                continue;
            }
            let coeff = format_rational(c);
            let part = match i {
                0 => coeff,
                1 if coeff == "1" => var.to_string(),
                1 if coeff == "-1" => format!("-{var}"),
                1 => format!("{coeff}*{var}"),
                _ if coeff == "1" => format!("{var}^{i}"),
                _ if coeff == "-1" => format!("-{var}^{i}"),
                _ => format!("{coeff}*{var}^{i}"),
            };
            parts.push(part);
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl<R: Ring> Add for Poly<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(R::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(R::zero);
            out.push(a + b);
        }
        Self::new(out)
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = out[i + j].clone() + a.clone() * b.clone();
                out[i + j] = t;
            }
        }
        Self::new(out)
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn from_rational(q: Rational) -> Self {
        Poly::constant(R::from_rational(q))
    }
}

impl<R: Ring> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

/// Resultant of two polynomials over a field, by the Euclidean remainder
/// recursion. Zero iff the polynomials share a common factor.
pub fn resultant<F: Field>(f: &Poly<F>, g: &Poly<F>) -> F {
    fn go<F: Field>(f: &Poly<F>, g: &Poly<F>) -> F {
        let df = f.degree().expect("resultant of zero polynomial");
        match g.degree() {
            None => {
                if df == 0 {
                    F::one()
                } else {
                    F::zero()
                }
            }
            Some(0) => pow_f(g.leading().unwrap(), df),
            Some(dg) => {
                let (_, r) = f.divrem(g);
                let sign = if (df * dg) % 2 == 1 { -F::one() } else { F::one() };
                match r.degree() {
                    None => F::zero(),
                    Some(dr) => {
                        sign * pow_f(g.leading().unwrap(), df - dr) * go(g, &r)
                    }
                }
            }
        }
    }
    fn pow_f<F: Field>(a: &F, n: usize) -> F {
        let mut out = F::one();
        for _ in 0..n {
            out = out * a.clone();
        }
        out
    }
    go(f, g)
}

/// Swap the roles of inner and outer variable of a bivariate polynomial.
pub fn bipoly_transpose(p: &BiPoly) -> BiPoly {
    let inner_deg = p
        .coeffs()
        .iter()
        .filter_map(|q| q.degree())
        .max()
        .unwrap_or(0);
    let mut rows = vec![vec![]; inner_deg + 1];
    for (outer, q) in p.coeffs().iter().enumerate() {
        for (inner, c) in q.coeffs().iter().enumerate() {
            rows[inner].resize(outer + 1, Rational::from_integer(0.into()));
            rows[inner][outer] = c.clone();
        }
    }
    Poly::new(rows.into_iter().map(Poly::new).collect())
}

/// Evaluate the inner variable, leaving a polynomial in the outer one.
pub fn bipoly_eval_inner(p: &BiPoly, x: &Rational) -> Poly<Rational> {
    Poly::new(p.coeffs().iter().map(|q| q.eval(x)).collect())
}

/// All coefficients of all inner polynomials.
pub fn bipoly_flat_coeffs(p: &BiPoly) -> impl Iterator<Item = &Rational> {
    p.coeffs().iter().flat_map(|q| q.coeffs().iter())
}

impl serde::Serialize for Poly<Rational> {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(self.coeffs.iter().map(format_rational))
    }
}

impl<'de> serde::Deserialize<'de> for Poly<Rational> {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(de)?;
        let coeffs = strs
            .iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{poly_i, rat, rat_i};

    #[test]
    fn divrem_reconstructs() {
        let a = poly_i(&[1, -2, 0, 4, 7]);
        let d = poly_i(&[3, 0, 2]);
        let (q, r) = a.divrem(&d);
        assert_eq!(q * d + r, a);
    }

    #[test]
    fn gcd_of_common_factor() {
        // (x-1)(x+2) and (x-1)(x-3) share x-1
        let a = poly_i(&[-1, 1]) * poly_i(&[2, 1]);
        let b = poly_i(&[-1, 1]) * poly_i(&[-3, 1]);
        assert_eq!(a.gcd(&b), poly_i(&[-1, 1]));
    }

    #[test]
    fn squarefree_strips_multiplicity() {
        let p = poly_i(&[-1, 1]).pow(3) * poly_i(&[2, 1]);
        let sf = p.squarefree();
        assert_eq!(sf, (poly_i(&[-1, 1]) * poly_i(&[2, 1])).monic());
    }

    #[test]
    fn div_linear_matches_divrem() {
        let p = poly_i(&[2, -3, 0, 5]);
        let a = rat(1, 2);
        let (q, r) = p.div_linear(&a);
        let (q2, r2) = p.divrem(&Poly::linear(-a.clone(), rat_i(1)));
        assert_eq!(q, q2);
        assert_eq!(Poly::constant(r), r2);
    }

    #[test]
    fn resultant_detects_common_roots() {
        let a = poly_i(&[-1, 1]) * poly_i(&[2, 1]);
        let b = poly_i(&[-1, 1]) * poly_i(&[-3, 1]);
        assert!(Ring::is_zero(&resultant(&a, &b)));
        let c = poly_i(&[-5, 1]) * poly_i(&[-3, 1]);
        assert!(!Ring::is_zero(&resultant(&a, &c)));
        // res(x^2-2, x^2-3) = 1 (classical value)
        let r = resultant(&poly_i(&[-2, 0, 1]), &poly_i(&[-3, 0, 1]));
        assert_eq!(r, rat_i(1));
    }

    #[test]
    fn transpose_round_trips() {
        // p(z, c) = (1 + 2c) + (3c^2) z
        let p: BiPoly = Poly::new(vec![poly_i(&[1, 2]), poly_i(&[0, 0, 3])]);
        let t = bipoly_transpose(&p);
        assert_eq!(bipoly_transpose(&t), p);
        // coefficient of c^0 in t is 1 (z^0 term only)
        assert_eq!(t.coeff(0), poly_i(&[1]));
    }
}
