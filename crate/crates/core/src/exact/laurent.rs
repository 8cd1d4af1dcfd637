//! Sparse Laurent expansions in `u = c·t + 1`, the substitution under
//! which the moment integrands become sums of pure powers. Antiderivatives
//! in `t` are exact term by term; the `u^{-1}` term, whose antiderivative
//! would be a logarithm, must never appear and is asserted away.

use std::collections::BTreeMap;

use super::field::Field;
use super::poly::Poly;

/// Finite sum of terms `a_k · u^k`, k possibly negative.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentU<F: Field> {
    terms: BTreeMap<i64, F>,
}

impl<F: Field> LaurentU<F> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn term(k: i64, a: F) -> Self {
        let mut t = Self::zero();
        t.add_term(k, a);
        t
    }

    pub fn add_term(&mut self, k: i64, a: F) {
        if a.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(F::zero);
        *entry = entry.clone() + a;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn coeff(&self, k: i64) -> F {
        self.terms.get(&k).cloned().unwrap_or_else(F::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, a) in &other.terms {
            out.add_term(k, a.clone());
        }
        out
    }

    pub fn scale(&self, a: &F) -> Self {
        let mut out = Self::zero();
        for (&k, c) in &self.terms {
            out.add_term(k, c.clone() * a.clone());
        }
        out
    }

    /// Multiply by a polynomial in `u`.
    pub fn mul_upoly(&self, p: &Poly<F>) -> Self {
        let mut out = Self::zero();
        for (&k, a) in &self.terms {
            for (j, b) in p.coeffs().iter().enumerate() {
                out.add_term(k + j as i64, a.clone() * b.clone());
            }
        }
        out
    }

    /// Shift all exponents by `d` (multiplication by `u^d`).
    pub fn shift(&self, d: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&k, a)| (k + d, a.clone())).collect(),
        }
    }

    /// Convert a polynomial in `t` to an expansion in `u = c·t + 1`,
    /// i.e. substitute `t = (u - 1)/c`. Requires `c != 0`.
    pub fn from_tpoly(p: &Poly<F>, c: &F) -> Self {
        assert!(!c.is_zero(), "u-substitution requires c != 0");
        let cinv = c.inv();
        // t = (1/c)·u - 1/c as a polynomial in u
        let t_of_u = Poly::linear(-cinv.clone(), cinv);
        let as_upoly = p.compose(&t_of_u);
        let mut out = Self::zero();
        for (j, a) in as_upoly.coeffs().iter().enumerate() {
            out.add_term(j as i64, a.clone());
        }
        out
    }

    /// Antiderivative with respect to `t` (where `u = c·t + 1`, so
    /// `d/dt = c·d/du`), with no constant term fixed by the caller.
    /// Panics if a `u^{-1}` term is present: its antiderivative is not a
    /// Laurent expansion. Such a term signals an implementation bug, never
    /// an input condition.
    pub fn antiderivative_t(&self, c: &F) -> Self {
        assert!(!c.is_zero(), "antiderivative in u requires c != 0");
        assert!(
            self.coeff(-1).is_zero(),
            "logarithmic term: u^-1 coefficient did not cancel"
        );
        let cinv = c.inv();
        let mut out = Self::zero();
        for (&k, a) in &self.terms {
            let kk = F::from_int(k + 1);
            out.add_term(k + 1, a.clone() * cinv.clone() * kk.inv());
        }
        out
    }

    /// Evaluate at a point `u0`.
    pub fn eval_u(&self, u0: &F) -> F {
        let mut acc = F::zero();
        for (&k, a) in &self.terms {
            acc = acc + a.clone() * int_pow(u0, k);
        }
        acc
    }

    /// Interpret as a polynomial in `u`; panics on negative exponents.
    pub fn into_upoly(self) -> Poly<F> {
        if let Some(min) = self.min_exp() {
            assert!(min >= 0, "negative powers remain: u^{min}");
        }
        let max = self.terms.keys().next_back().copied().unwrap_or(0);
        let mut coeffs = vec![F::zero(); (max + 1) as usize];
        for (k, a) in self.terms {
            coeffs[k as usize] = a;
        }
        Poly::new(coeffs)
    }
}

fn int_pow<F: Field>(a: &F, k: i64) -> F {
    let base = if k >= 0 { a.clone() } else { a.inv() };
    let mut out = F::one();
    for _ in 0..k.unsigned_abs() {
        out = out * base.clone();
    }
    out
}
