//! Template bundle matrices over two-curve bases whose whole cone is
//! certified, together with the explicit profile tables they produce.
//!
//! Both families use K = [[10 a, 100 b], [2 a, b]]: for the product family
//! (a, b) = (g1, g2) are the two genera, and for the family over a
//! polystable-bundle base a = b = g is the genus of the single base curve.
//! The asymmetries are x1 = 2/3 and x2 = 99/101 in both cases; only the
//! curvature weights differ.

use crate::exact::poly::{BiPoly, Poly};
use crate::exact::field::Ring;
use crate::exact::rational::{rat, rat_i, Rational};
use crate::params::JoinParams;

fn quartic(c: [i64; 5]) -> Poly<Rational> {
    Poly::new(c.iter().map(|&n| rat_i(n)).collect())
}

fn normalizer() -> Poly<Rational> {
    quartic([544829, -1814364, 2225984, -1185624, 229199])
}

fn h21() -> Poly<Rational> {
    quartic([1849633, -3952908, 2583653, -545438, 68368])
}
fn h22() -> Poly<Rational> {
    quartic([5029446, -10073556, 5505031, -421486, -29519])
}
fn h23() -> Poly<Rational> {
    quartic([1085299, -2250304, 1327594, -148704, -11901])
}
fn h24() -> Poly<Rational> {
    quartic([2453521, -4733176, 2196021, 235654, -147064])
}
fn h31() -> Poly<Rational> {
    quartic([173925883, -629489348, 863749558, -530449308, 122385903])
}
fn h32() -> Poly<Rational> {
    quartic([86771822, -314540932, 432305747, -265928422, 61453077])
}
fn h33() -> Poly<Rational> {
    quartic([169929491, -609982556, 828678836, -502956696, 114452421])
}
fn h34() -> Poly<Rational> {
    quartic([42386813, -152393768, 207385193, -126091058, 28743168])
}
fn h41() -> Poly<Rational> {
    quartic([72852912, -233877440, 270006303, -130233426, 21229919])
}
fn h42() -> Poly<Rational> {
    quartic([365166252, -1171579852, 1351415507, -650974422, 105863967])
}
fn h43() -> Poly<Rational> {
    quartic([184191678, -594750598, 693107613, -339776268, 57173843])
}
fn h44() -> Poly<Rational> {
    quartic([184642524, -595846924, 693799609, -339679914, 57031029])
}

// Rewrites of the degree-one and degree-two rows when the first genus is 1.
#[cfg(test)]
fn t21() -> Poly<Rational> {
    quartic([5671303, -12465928, 8863948, -2529108, 469713])
}
fn t22() -> Poly<Rational> {
    quartic([515185, -1068076, 661802, -131428, 23509])
}
#[cfg(test)]
fn t31() -> Poly<Rational> {
    quartic([35584455, -129799228, 179764056, -111588384, 26063877])
}
fn t32() -> Poly<Rational> {
    quartic([44385009, -162147164, 224920554, -139837364, 32709909])
}

// Tables for the family over a polystable-bundle base.
fn p21() -> Poly<Rational> {
    quartic([5793707, -13073132, 9976937, -3421902, 734322])
}
fn p31() -> Poly<Rational> {
    quartic([181918667, -668502932, 933891002, -585434532, 138252867])
}
fn p41() -> Poly<Rational> {
    quartic([356026968, -1129159208, 1277664093, -594396318, 89753413])
}
fn p42() -> Poly<Rational> {
    quartic([90261864, -287866464, 328807949, -155647254, 24416469])
}

/// Profile table for one template family. With q the reduced profile of the
/// ray at parameter c,
/// `1212 * genus_product * normalizer(c) * q(z) = sum_j cube[j](c) (1+z)^j`.
#[derive(Clone, Debug)]
pub struct FamilyTables {
    /// Rows are bundles, columns are base factors.
    pub k: [[i64; 2]; 2],
    pub params: JoinParams,
    pub genus_product: i64,
    /// Strictly positive on (-1, 1); certified downstream, not assumed.
    pub normalizer: Poly<Rational>,
    /// Numerator coefficients in powers of (1 + z), constant term first.
    pub cube: [Poly<Rational>; 4],
}

impl FamilyTables {
    pub fn multiplier(&self) -> Rational {
        rat_i(1212 * self.genus_product)
    }

    /// Numerator expanded in the fiber coordinate: outer variable z, inner
    /// variable the ray parameter.
    pub fn numerator(&self) -> BiPoly {
        let one_plus_z: BiPoly = Poly::new(vec![Poly::one(), Poly::one()]);
        let mut power = BiPoly::one();
        let mut out = BiPoly::zero();
        for part in &self.cube {
            out = out + power.clone() * Poly::constant(part.clone());
            power = power * one_plus_z.clone();
        }
        out
    }

    /// Numerator at z = 1. Equals `4000 * genus_product * normalizer`.
    pub fn numerator_at_one(&self) -> Poly<Rational> {
        let mut out = Poly::zero();
        let mut w = Rational::one();
        for part in &self.cube {
            out = out + part.scale(&w);
            w = w * rat_i(2);
        }
        out
    }
}

/// Family over a product of curves of genera `g1, g2 >= 1`.
pub fn product_family(g1: i64, g2: i64) -> FamilyTables {
    assert!(g1 >= 1 && g2 >= 1, "genus must be at least 1");
    let a = rat_i(g1 - 2);
    let b = rat_i(g2 - 2);
    let h2 = h21().scale(&rat_i(6))
        + h22().scale(&b)
        + (h23().scale(&rat_i(5)) + h24().scale(&b)).scale(&a);
    let h3 = h31().scale(&rat_i(2))
        + h32().scale(&(rat_i(2) * &b))
        + (h33() + h34().scale(&(rat_i(2) * &b))).scale(&a);
    let h4 = h41().scale(&rat_i(10))
        + h42().scale(&b)
        + (h43().scale(&rat_i(2)) + h44().scale(&b)).scale(&a);
    FamilyTables {
        k: [[10 * g1, 100 * g2], [2 * g1, g2]],
        params: JoinParams::dim7(
            rat(2, 3),
            rat(2 * (1 - g1), 8 * g1),
            rat(99, 101),
            rat(2 * (1 - g2), 99 * g2),
        ),
        genus_product: g1 * g2,
        normalizer: normalizer(),
        cube: [
            normalizer().scale(&rat_i(8 * g1 * g2)),
            h2.scale(&rat_i(4)),
            h3.scale(&rat_i(2)),
            h4,
        ],
    }
}

/// Family over a ruled surface cut out by a polystable rank-2 bundle over a
/// single curve of genus `g >= 1`. The first factor is the fiber direction,
/// so its curvature weight is genus-free.
pub fn polystable_family(g: i64) -> FamilyTables {
    assert!(g >= 1, "genus must be at least 1");
    let b = rat_i(g - 2);
    FamilyTables {
        k: [[10 * g, 100 * g], [2 * g, g]],
        params: JoinParams::dim7(
            rat(2, 3),
            rat(1, 4 * g),
            rat(99, 101),
            rat(2 * (1 - g), 99 * g),
        ),
        genus_product: g,
        normalizer: normalizer(),
        cube: [
            normalizer().scale(&rat_i(8 * g)),
            p21().scale(&rat_i(4)) + t22().scale(&(rat_i(20) * &b)),
            p31().scale(&rat_i(2)) + t32().scale(&(rat_i(4) * &b)),
            p41() + p42().scale(&(rat_i(2) * &b)),
        ],
    }
}
