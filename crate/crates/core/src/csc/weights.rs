//! Weight-space forms of the CSC condition for a join over a product of
//! two rational curves, written directly in the four bundle degrees. Three
//! routes to the same locus are built independently and reconciled by
//! exact identities at construction time:
//!
//! * the locus in the ray parameter `c` (a quintic, `twist_locus`),
//! * its homogenization in the Reeb weights `(w1, w2)` under
//!   `c = (w1 - w2)/(w1 + w2)` (`weight_quintic`),
//! * the CSC equation of the quasi-regular quotient orbifold with the
//!   weight-dependent degrees substituted and denominators cleared
//!   (`quotient_locus`).

use crate::closedforms::dim7;
use crate::exact::field::Ring;
use crate::exact::poly::{BiPoly, Poly};
use crate::exact::rational::{rat, rat_i, Rational};

/// Bundle degrees, rows indexed by bundle, columns by curve factor:
/// `k[j][i]` is the degree of bundle `j + 1` over factor `i + 1`.
pub type DegreeMatrix = [[i64; 2]; 2];

fn validate(k: &DegreeMatrix) {
    for row in k {
        for &e in row {
            assert!(e > 0, "bundle degrees must be positive");
        }
    }
    for i in 0..2 {
        assert_ne!(k[0][i], k[1][i], "equal degrees over factor {} collapse the join", i + 1);
    }
}

/// Outer variable `w1`.
fn w1() -> BiPoly {
    Poly::new(vec![Poly::zero(), Poly::one()])
}

/// Inner variable `w2`.
fn w2() -> BiPoly {
    Poly::constant(Poly::var())
}

fn ci(n: i64) -> BiPoly {
    Poly::constant(Poly::constant(rat_i(n)))
}

/// CSC locus in the ray parameter for the product-of-curves join:
/// a quintic in `c` with integer coefficients in the degrees. Checked
/// against the general two-factor locus with `x_i, s_i` substituted.
pub fn twist_locus(k: &DegreeMatrix) -> Poly<Rational> {
    validate(k);
    let [[ka1, kb1], [ka2, kb2]] = *k;
    let c = Poly::<Rational>::var();
    let one = Poly::<Rational>::one();
    let cm = c.clone() - one.clone();
    let cp = c.clone() + one;
    let csq = c.clone() * c.clone() - Poly::one();

    let t0 = (csq.clone() * csq).scale(&rat_i(18 * ka1 * kb1 * ka2 * kb2)) * c;
    let t1 = cm.pow(5).scale(&rat_i(3 * ka1 * ka1 * kb1 * kb1));
    let t2 = cp.pow(5).scale(&rat_i(3 * ka2 * ka2 * kb2 * kb2));
    let t3 = (cp.clone() * cm.pow(4))
        .scale(&rat_i(ka1 * kb1 * (ka1 + kb1 - 3 * kb1 * ka2 - 3 * ka1 * kb2)));
    let t4 = (cp.pow(2) * cm.pow(3)).scale(&rat_i(
        kb1 * kb1 * ka2 + ka1 * ka1 * kb2 - 4 * ka1 * kb1 * ka2 - 4 * ka1 * kb1 * kb2,
    ));
    let t5 = (cp.pow(3) * cm.pow(2)).scale(&rat_i(
        ka1 * kb2 * kb2 + kb1 * ka2 * ka2 - 4 * kb1 * ka2 * kb2 - 4 * ka1 * ka2 * kb2,
    ));
    let t6 = (cp.pow(4) * cm)
        .scale(&rat_i(ka2 * kb2 * (ka2 + kb2 - 3 * ka1 * kb2 - 3 * kb1 * ka2)));
    let locus = t0 + t1 + t2 + t3 + t4 + t5 + t6;

    // Same locus through the generic two-factor quintic: x_i and s_i of
    // the regular quotient, scaled by the squared degree sums.
    let (n1, n2) = (ka1 - ka2, kb1 - kb2);
    let (d1, d2) = (ka1 + ka2, kb1 + kb2);
    let generic = dim7::csc_quintic(&rat(n1, d1), &rat(2, n1), &rat(n2, d2), &rat(2, n2));
    assert_eq!(
        locus,
        generic.scale(&rat(d1 * d1 * d2 * d2, 4)),
        "the two constructions of the twist locus disagree"
    );
    locus
}

/// Homogeneous quintic in the Reeb weights whose positive integer zeros
/// are the quasi-regular CSC rays; outer variable `w1`, inner `w2`.
/// Checked to equal `-1/32` times the homogenization of `twist_locus`.
pub fn weight_quintic(k: &DegreeMatrix) -> BiPoly {
    validate(k);
    let [[ka1, kb1], [ka2, kb2]] = *k;
    let coeffs = [
        3 * ka1 * ka1 * kb1 * kb1,
        ka1 * kb1 * (3 * kb1 * ka2 + 3 * ka1 * kb2 - ka1 - kb1),
        9 * ka1 * kb1 * ka2 * kb2 + kb1 * kb1 * ka2 + ka1 * ka1 * kb2
            - 4 * ka1 * kb1 * kb2
            - 4 * ka1 * kb1 * ka2,
        4 * ka1 * ka2 * kb2 + 4 * kb1 * ka2 * kb2
            - 9 * ka1 * kb1 * ka2 * kb2
            - kb1 * ka2 * ka2
            - ka1 * kb2 * kb2,
        ka2 * kb2 * (ka2 + kb2 - 3 * kb1 * ka2 - 3 * ka1 * kb2),
        -3 * ka2 * ka2 * kb2 * kb2,
    ];
    // coeffs[j] multiplies w1^j w2^(5-j)
    let quintic = Poly::new(
        (0..=5)
            .map(|j| Poly::<Rational>::var().pow(5 - j).scale(&rat_i(coeffs[j])))
            .collect(),
    );

    let fcr = twist_locus(k);
    assert_eq!(fcr.degree(), Some(5));
    let diff = w1() - w2();
    let sum = w1() + w2();
    let mut hom = BiPoly::zero();
    for (j, a) in fcr.coeffs().iter().enumerate() {
        hom = hom + (diff.pow(j) * sum.pow(5 - j)).scale(&Poly::constant(a.clone()));
    }
    assert_eq!(
        quintic,
        hom.scale(&Poly::constant(rat(-1, 32))),
        "weight quintic disagrees with the homogenized twist locus"
    );
    quintic
}

/// Weighted bundle-degree difference `n_i(w) = w2·k[1][i] - w1·k[2][i]`
/// of the quasi-regular quotient, as a polynomial in the weights.
pub fn quotient_degree(k: &DegreeMatrix, i: usize) -> BiPoly {
    Poly::new(vec![
        Poly::new(vec![Rational::from_int(0), rat_i(k[0][i])]),
        Poly::constant(rat_i(-k[1][i])),
    ])
}

/// Weighted degree sum `d_i(w) = w2·k[1][i] + w1·k[2][i]`, the denominator
/// of the quotient asymmetry `x_i = n_i/d_i`.
pub fn quotient_degree_sum(k: &DegreeMatrix, i: usize) -> BiPoly {
    Poly::new(vec![
        Poly::new(vec![Rational::from_int(0), rat_i(k[0][i])]),
        Poly::constant(rat_i(k[1][i])),
    ])
}

/// CSC equation of the quasi-regular quotient orbifold with
/// `x_i = n_i(w)/d_i(w)` substituted and cleared by `d1²d2²`. Checked to
/// equal `-8·n1·n2` times the weight quintic: away from the degenerate
/// weights (where some `n_i(w) = 0` and the quotient collapses to a
/// product with a Hirzebruch orbifold) the two formulations cut out the
/// same rays.
pub fn quotient_locus(k: &DegreeMatrix) -> BiPoly {
    validate(k);
    let n1 = quotient_degree(k, 0);
    let n2 = quotient_degree(k, 1);
    let d1 = quotient_degree_sum(k, 0);
    let d2 = quotient_degree_sum(k, 1);
    let dw = w1() - w2();
    let sw = w1() + w2();
    let ww = w1() * w2();
    let nn = n1.clone() * n2.clone();
    let dd = d1.clone() * d2.clone();

    let t1 = dw.clone() * nn.clone() * dd.clone() * dd.clone() * ci(9);
    let t2 = sw * nn.clone() * (n1.clone() * d2.clone() + n2.clone() * d1.clone())
        * dd.clone()
        * ci(-6);
    let t3 = dw.clone() * nn.clone() * nn.clone() * dd * ci(6);
    let t4 = n2.clone()
        * (ww.clone() * ci(4) - n1.clone() * dw.clone())
        * n1.clone()
        * n1.clone()
        * d2.clone()
        * d2
        * ci(3);
    let t5 = n1.clone()
        * (ww.clone() * ci(4) - n2.clone() * dw.clone())
        * n2.clone()
        * n2.clone()
        * d1.clone()
        * d1
        * ci(3);
    let cofactor = nn.clone();
    let t6 = (ww * (n1 + n2) * ci(4) - dw * nn.clone() * ci(3)) * nn.clone() * nn * ci(-1);
    let cleared = t1 + t2 + t3 + t4 + t5 + t6;

    let quintic = weight_quintic(k);
    assert_eq!(
        cleared,
        (cofactor * quintic).scale(&Poly::constant(rat_i(-8))),
        "quotient CSC equation disagrees with the weight quintic"
    );
    cleared
}
