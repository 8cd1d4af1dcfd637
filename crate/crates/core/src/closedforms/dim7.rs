//! Closed form of the CSC locus for joins over a product of two curves
//! (seven-dimensional total space).

use crate::exact::field::{Field, Ring};
use crate::exact::poly::Poly;

fn int<F: Ring>(n: i64) -> F {
    F::from_int(n)
}

/// The quintic in the ray parameter whose roots inside (-1, 1) are the CSC
/// rays. Boundary values `h(1) = 24 (1 - x1)^2 (1 - x2)^2` and
/// `h(-1) = -24 (1 + x1)^2 (1 + x2)^2` force a sign change, so the locus is
/// never empty.
pub fn csc_quintic<F: Field>(x1: &F, s1: &F, x2: &F, s2: &F) -> Poly<F> {
    let xx = x1.clone() * x2.clone();
    let x1sq = x1.clone() * x1.clone();
    let x2sq = x2.clone() * x2.clone();
    let xxsq = xx.clone() * xx.clone();
    let ssum = s1.clone() + s2.clone();
    // The two cross pairings of weights against asymmetries.
    let own = s1.clone() * x1.clone() + s2.clone() * x2.clone();
    let cross = s1.clone() * x2.clone() + s2.clone() * x1.clone();
    let own_sq = s1.clone() * x1sq.clone() + s2.clone() * x2sq.clone();

    let c0 = int::<F>(3) * own_sq.clone() - ssum.clone() * xxsq.clone()
        - int::<F>(6) * (x1.clone() + x2.clone());
    let c1 = cross.clone() * xx.clone()
        - own.clone() * (int::<F>(4) * xx.clone() + int::<F>(3))
        + int::<F>(3)
            * (xxsq.clone()
                + x1sq.clone()
                + x2sq.clone()
                + int::<F>(10) * xx.clone()
                + int::<F>(7));
    let c2 = int::<F>(4)
        * (ssum.clone() * (xx.clone() + F::one()) * xx.clone()
            - own_sq.clone()
            - int::<F>(3)
                * (x1.clone() + x2.clone())
                * (int::<F>(2) * xx.clone() + int::<F>(3)));
    let c3 = int::<F>(4)
        * ((own.clone() - cross.clone()) * xx.clone()
            + own.clone()
            + int::<F>(3) * xx.clone() * (xx.clone() + int::<F>(5))
            + int::<F>(6) * (x1sq.clone() + x2sq.clone()));
    let c4 = own_sq - int::<F>(3) * ssum.clone() * xxsq.clone()
        - int::<F>(4) * ssum * xx.clone()
        - int::<F>(6) * (x1.clone() + x2.clone()) * (int::<F>(4) * xx.clone() + F::one());
    let c5 = int::<F>(3) * xx.clone() * cross - own
        + int::<F>(3)
            * (int::<F>(3) * xxsq - x1sq + int::<F>(2) * xx - x2sq + F::one());
    Poly::new(vec![c0, c1, c2, c3, c4, c5])
}
