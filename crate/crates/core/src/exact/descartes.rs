//! Descartes' rule of signs.

use super::poly::Poly;
use super::rational::Rational;
use super::sturm::sign;

/// Number of sign changes in the coefficient sequence (zeros skipped).
/// Bounds the number of positive real roots, counted with multiplicity,
/// and matches it in parity; one sign change therefore certifies exactly
/// one positive root.
pub fn sign_changes(p: &Poly<Rational>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for c in p.coeffs() {
        let s = sign(c);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}
