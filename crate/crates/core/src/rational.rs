//! Exact rational scalars.
//!
//! [`Rational`] is `num_rational::BigRational`, which keeps every value
//! reduced with a positive denominator, so zero is always `0/1`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn frac(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `"p"` or `"p/q"` with integer `p` and positive integer `q`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), Some(q.trim())),
        None => (text, None),
    };
    let numer: BigInt = numer.parse().map_err(|_| {
        Error::Parse(format!(
            "bad rational `{text}`: numerator is not an integer"
        ))
    })?;
    let denom: BigInt = match denom {
        None => BigInt::one(),
        Some(q) => {
            if q.starts_with('-') || q.starts_with('+') {
                return Err(Error::Parse(format!(
                    "bad rational `{text}`: denominator must be a positive integer"
                )));
            }
            q.parse().map_err(|_| {
                Error::Parse(format!(
                    "bad rational `{text}`: denominator is not an integer"
                ))
            })?
        }
    };
    if denom.is_zero() {
        return Err(Error::Parse(format!(
            "bad rational `{text}`: zero denominator"
        )));
    }
    Ok(Rational::new(numer, denom))
}

/// Renders as `p/q`, or `p` when the denominator is one.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// `(-1)^e` as a rational.
pub fn sign_power(exponent: usize) -> Rational {
    if exponent.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Exact integer power with a possibly negative exponent.
pub fn pow_i64(base: &Rational, exponent: i64) -> Result<Rational> {
    if exponent < 0 && base.is_zero() {
        return Err(Error::DimensionMismatch(
            "zero raised to a negative power".into(),
        ));
    }
    let mut acc = Rational::one();
    let mut square = if exponent < 0 {
        base.recip()
    } else {
        base.clone()
    };
    let mut e = exponent.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &square;
        }
        square = &square * &square;
        e >>= 1;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("2").unwrap(), int(2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational("3/6").unwrap(), frac(1, 2));
        assert_eq!(parse_rational(" -4/8 ").unwrap(), frac(-1, 2));
    }

    #[test]
    fn rejects_bad_syntax() {
        assert!(
            matches!(parse_rational("1/0"), Err(Error::Parse(m)) if m.contains("zero denominator"))
        );
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("a").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn canonical_form() {
        let r = frac(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        let z = frac(0, -5);
        assert_eq!(format_rational(&z), "0");
        assert_eq!(format_rational(&frac(-3, 2)), "-3/2");
        assert_eq!(format_rational(&int(13)), "13");
    }

    #[test]
    fn negative_powers() {
        assert_eq!(pow_i64(&int(2), -3).unwrap(), frac(1, 8));
        assert_eq!(pow_i64(&frac(2, 3), 2).unwrap(), frac(4, 9));
        assert_eq!(pow_i64(&int(5), 0).unwrap(), int(1));
        assert!(pow_i64(&int(0), -1).is_err());
    }
}
