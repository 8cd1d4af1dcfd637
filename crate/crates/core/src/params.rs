//! The transverse parameters of a fiber join over a product of Kähler
//! factors: one pair `(x_i, s_i)` per factor. `x_i` in (-1,0)∪(0,1)
//! measures the asymmetry of the two polarizations on factor `i`; `s_i`
//! carries the factor's normalized scalar curvature relative to that
//! asymmetry.

use serde::{Deserialize, Serialize};

use crate::exact::rational::{serde_rational, Rational};
use num_traits::Signed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JoinDim {
    /// One curve factor: five-dimensional join.
    Five,
    /// Two factors of complex dimension one each: seven-dimensional join.
    Seven,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorParams {
    #[serde(with = "serde_rational")]
    pub x: Rational,
    #[serde(with = "serde_rational")]
    pub s: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JoinParams {
    pub factors: Vec<FactorParams>,
}

impl JoinParams {
    pub fn dim5(x: Rational, s: Rational) -> Self {
        let p = Self { factors: vec![FactorParams { x, s }] };
        p.check();
        p
    }

    pub fn dim7(x1: Rational, s1: Rational, x2: Rational, s2: Rational) -> Self {
        let p = Self {
            factors: vec![FactorParams { x: x1, s: s1 }, FactorParams { x: x2, s: s2 }],
        };
        p.check();
        p
    }

    fn check(&self) {
        for f in &self.factors {
            let ax = f.x.abs();
            assert!(
                ax > Rational::from_integer(0.into()) && ax < Rational::from_integer(1.into()),
                "factor asymmetry x must satisfy 0 < |x| < 1, got {}",
                f.x
            );
        }
    }

    pub fn dim(&self) -> JoinDim {
        match self.factors.len() {
            1 => JoinDim::Five,
            2 => JoinDim::Seven,
            n => panic!("unsupported factor count {n}"),
        }
    }

    pub fn xs(&self) -> Vec<Rational> {
        self.factors.iter().map(|f| f.x.clone()).collect()
    }

    /// Weight of the inverse quartic/quintic factor in the moment
    /// integrals that pair against the scalar curvature: number of
    /// factors plus two.
    pub fn beta_weight(&self) -> u32 {
        self.factors.len() as u32 + 2
    }
}

/// Ray parameter of the Reeb field with weights `(w1, w2)`:
/// `c = (w1 - w2)/(w1 + w2)`, always inside the open unit interval.
pub fn ray_from_weights(w1: i64, w2: i64) -> Rational {
    assert!(w1 > 0 && w2 > 0, "Reeb weights must be positive");
    Rational::new((w1 - w2).into(), (w1 + w2).into())
}

/// Primitive positive weight pair of a rational ray parameter: the inverse
/// of `ray_from_weights` up to overall scale, `w = (b + a, b - a)/gcd`
/// for `c = a/b` in lowest terms.
pub fn weights_from_ray(c: &Rational) -> (i64, i64) {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    assert!(c.abs() < Rational::from_integer(1.into()), "|c| < 1 required");
    let a = c.numer();
    let b = c.denom();
    let w1 = (b + a).to_i64().expect("weight fits in 64 bits");
    let w2 = (b - a).to_i64().expect("weight fits in 64 bits");
    let g = w1.gcd(&w2);
    (w1 / g, w2 / g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn weights_and_rays_invert_each_other() {
        for (w1, w2) in [(1, 1), (3, 2), (301, 1), (7, 300)] {
            assert_eq!(weights_from_ray(&ray_from_weights(w1, w2)), (w1, w2));
        }
        // Non-primitive pairs come back reduced.
        assert_eq!(weights_from_ray(&ray_from_weights(4, 2)), (2, 1));
        assert_eq!(weights_from_ray(&rat(-299, 301)), (1, 300));
    }
}
