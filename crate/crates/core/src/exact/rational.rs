//! Arbitrary-precision rationals and the canonical string form used in
//! reports and certificates.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use super::ExactError;

/// Arbitrary-precision rational number, always stored reduced with a
/// positive denominator (maintained by the backing implementation).
pub type Rational = num_rational::BigRational;

/// Rational function in one variable over the rationals, reduced with a
/// monic denominator.
pub type RatFunc = super::field::RatFuncOver<Rational>;

/// `rat(n, d)` is n/d. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn rat_i(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical form: `"p/q"` with q > 1, plain `"p"` for integers.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Strict parse of the canonical form: optional sign, digits, optional
/// `/digits` with a positive denominator. Whitespace is rejected.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let bad = || ExactError::Malformed(format!("not a rational: {s:?}"));
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let check = |part: &str, sign_ok: bool| -> Result<BigInt, ExactError> {
        let digits = part.strip_prefix('-').unwrap_or(part);
        if digits.is_empty()
            || !digits.bytes().all(|b| b.is_ascii_digit())
            || (!sign_ok && part.starts_with('-'))
        {
            return Err(bad());
        }
        part.parse::<BigInt>().map_err(|_| bad())
    };
    let numer = check(num_str, true)?;
    match den_str {
        None => Ok(Rational::from_integer(numer)),
        Some(d) => {
            let denom = check(d, false)?;
            if denom.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

/// Serde adapter: a `Rational` field as its canonical string.
pub mod serde_rational {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(de)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Vec<Rational>`.
pub mod serde_rational_vec {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(v.iter().map(format_rational))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Rational>, D::Error> {
        let strs = Vec::<String>::deserialize(de)?;
        strs.iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Serde adapter for `Option<Rational>`.
pub mod serde_rational_opt {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Option<Rational>, ser: S) -> Result<S::Ok, S::Error> {
        match q {
            Some(q) => ser.serialize_some(&format_rational(q)),
            None => ser.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Option<Rational>, D::Error> {
        let s = Option::<String>::deserialize(de)?;
        s.map(|s| parse_rational(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// True if |q| < 1.
pub fn in_open_unit(q: &Rational) -> bool {
    q.abs() < Rational::one()
}

/// Polynomial with rational coefficients from integer literals, lowest
/// degree first.
pub fn poly_i(coeffs: &[i64]) -> Poly<Rational> {
    Poly::new(coeffs.iter().map(|&c| rat_i(c)).collect())
}

/// The rational with the smallest denominator (Stern-Brocot simplest) in
/// the closed interval `[lo, hi]`. Used to test whether an isolating
/// interval has pinned down an exact rational root.
pub fn simplest_in_interval(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo <= hi, "empty interval");
    let zero = Rational::zero();
    if lo <= &zero && &zero <= hi {
        return zero;
    }
    if hi < &zero {
        return -simplest_positive(&-hi.clone(), &-lo.clone());
    }
    simplest_positive(lo, hi)
}

fn simplest_positive(lo: &Rational, hi: &Rational) -> Rational {
    let floor = lo.floor();
    if &floor == lo {
        return lo.clone();
    }
    let next = &floor + Rational::one();
    if &next <= hi {
        return next;
    }
    // Same integer part; recurse on the inverted fractional parts. The
    // order swaps under inversion.
    let fl = lo - &floor;
    let fh = hi - &floor;
    floor + (Rational::one() / simplest_positive(&fh.recip(), &fl.recip()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "5", "-5", "3/7", "-299/301", "7794656/61155675"] {
            let q = parse_rational(s).unwrap();
            assert_eq!(format_rational(&q), s);
        }
        // Non-canonical inputs normalize.
        assert_eq!(format_rational(&parse_rational("4/6").unwrap()), "2/3");
        assert_eq!(format_rational(&parse_rational("8/4").unwrap()), "2");
    }

    #[test]
    fn simplest_rational_prefers_small_denominators() {
        let cases = [
            (rat(1, 3), rat(1, 2), rat(1, 2)),
            (rat(-1, 2), rat(1, 3), rat(0, 1)),
            (rat(7, 10), rat(5, 7), rat(5, 7)),
            (rat(-5, 7), rat(-7, 10), rat(-5, 7)),
            (rat(299, 1000), rat(301, 1000), rat(3, 10)),
            (rat(5, 2), rat(7, 2), rat(3, 1)),
        ];
        for (lo, hi, want) in cases {
            let got = simplest_in_interval(&lo, &hi);
            assert_eq!(got, want, "[{lo}, {hi}]");
            assert!(lo <= got && got <= hi);
        }
        // An exact root squeezed by a tight interval is recovered.
        let c = rat(-299, 301);
        let eps = Rational::new(1.into(), BigInt::one() << 80);
        assert_eq!(simplest_in_interval(&(&c - &eps), &(&c + &eps)), c);
    }

    #[test]
    fn parse_rejects_junk() {
        for s in ["", "1/0", "1/-2", "a", "1.5", " 1", "1 ", "+1", "1/ 2", "--1", "1//2"] {
            assert!(parse_rational(s).is_err(), "accepted {s:?}");
        }
    }
}
