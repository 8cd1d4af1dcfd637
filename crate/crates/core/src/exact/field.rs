//! Coefficient traits. `Ring` is what dense polynomial arithmetic needs;
//! `Field` adds division and unlocks divrem/gcd/rational functions.
//! Rational functions over a field are again a field, so symbolic
//! parameters are handled by instantiating the same algorithms at
//! `RatFuncOver<Rational>` instead of `Rational`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use super::rational::Rational;

pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(q: Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }
}

pub trait Field: Ring + Div<Output = Self> {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::one() / self.clone()
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(q: Rational) -> Self {
        q
    }
}

impl Field for Rational {}

/// Reduced fraction of polynomials over `F`: gcd(num, den) = 1 and the
/// denominator is monic. Equality is therefore structural.
#[derive(Clone, PartialEq)]
pub struct RatFuncOver<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFuncOver<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self { num, den: Poly::one() };
        }
        let g = num.gcd(&den);
        let (num, r1) = num.divrem(&g);
        debug_assert!(r1.is_zero());
        let (den, r2) = den.divrem(&g);
        debug_assert!(r2.is_zero());
        // Normalize to a monic denominator.
        let lead = den.leading().expect("nonzero").clone();
        Self {
            num: num.scale(&lead.inv()),
            den: den.scale(&lead.inv()),
        }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        Self { num: p, den: Poly::one() }
    }

    /// The identity function `x`.
    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    pub fn numer(&self) -> &Poly<F> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// The numerator if the reduced denominator is 1; panics otherwise.
    /// Use after operations that must cancel all denominators.
    pub fn expect_polynomial(&self, what: &str) -> Poly<F> {
        assert!(
            self.den == Poly::one(),
            "{what}: denominator did not cancel (degree {:?})",
            self.den.degree()
        );
        self.num.clone()
    }

    pub fn eval(&self, x: &F) -> Option<F> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }
}

impl<F: Field> fmt::Debug for RatFuncOver<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?})/({:?})", self.num, self.den)
        }
    }
}

impl<F: Field> Add for RatFuncOver<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.num.clone() * rhs.den.clone() + rhs.num.clone() * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl<F: Field> Sub for RatFuncOver<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Field> Mul for RatFuncOver<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl<F: Field> Div for RatFuncOver<F> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.num.is_zero(), "division by zero rational function");
        Self::new(self.num * rhs.den, self.den * rhs.num)
    }
}

impl<F: Field> Neg for RatFuncOver<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { num: -self.num, den: self.den }
    }
}

impl<F: Field> Ring for RatFuncOver<F> {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_rational(q: Rational) -> Self {
        Self::from_poly(Poly::constant(F::from_rational(q)))
    }
}

impl<F: Field> Field for RatFuncOver<F> {}

/// Sign of a rational: -1, 0, or 1.
pub fn rational_sign(q: &Rational) -> i8 {
    if Zero::is_zero(q) {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}
