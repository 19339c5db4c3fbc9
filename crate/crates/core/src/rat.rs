//! Exact rational scalars.
//!
//! `Rat` is `num_rational::BigRational`, which is always stored reduced with a
//! positive denominator, so sign tests read a single integer sign.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;

/// Sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(x: &Rat) -> Sign {
        if x.is_positive() {
            Sign::Positive
        } else if x.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn from_ordering(o: Ordering) -> Sign {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_ordering((self.as_i8() * rhs.as_i8()).cmp(&0))
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        })
    }
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `[-]digits`, `[-]digits/digits` or `[-]digits.digits` into an exact
/// rational. Decimals are read exactly (`0.25` is `1/4`).
pub fn parse_rat(token: &str) -> Result<Rat> {
    let bad = || Error::InvalidRational(token.to_string());
    let (negative, body) = match token.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, token),
    };
    let all_digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    let digits = |s: &str| -> Result<BigInt> {
        if all_digits(s) {
            s.parse::<BigInt>().map_err(|_| bad())
        } else {
            Err(bad())
        }
    };

    let value = if let Some((num, den)) = body.split_once('/') {
        let den = digits(den)?;
        if den.is_zero() {
            return Err(bad());
        }
        Rat::new(digits(num)?, den)
    } else if let Some((whole, frac)) = body.split_once('.') {
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let numer = digits(whole)? * &scale + digits(frac)?;
        Rat::new(numer, scale)
    } else {
        Rat::from_integer(digits(body)?)
    };
    Ok(if negative { -value } else { value })
}

/// Canonical text form: `n` for integers, `n/d` otherwise.
pub fn fmt_rat(x: &Rat) -> String {
    x.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_fractions_and_decimals() {
        assert_eq!(parse_rat("-6").unwrap(), int(-6));
        assert_eq!(parse_rat("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rat("-4/6").unwrap(), ratio(-2, 3));
        assert_eq!(parse_rat("0.25").unwrap(), ratio(1, 4));
        assert_eq!(parse_rat("-1.50").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rat("0").unwrap(), int(0));
    }

    #[test]
    fn rejects_malformed_tokens() {
        for t in ["", "-", "x", "1/0", "1/", "/2", ".5", "5.", "1e3", "+1", "1/-2", "--1", "1.2.3"] {
            assert_eq!(parse_rat(t), Err(Error::InvalidRational(t.to_string())), "{t}");
        }
    }

    #[test]
    fn canonical_form() {
        let x = Rat::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!(fmt_rat(&x), "-3/2");
        assert_eq!(fmt_rat(&int(7)), "7");
        assert!(x.denom() > &BigInt::zero());
    }

    #[test]
    fn sign_products() {
        assert_eq!(Sign::Negative * Sign::Negative, Sign::Positive);
        assert_eq!(Sign::Negative * Sign::Zero, Sign::Zero);
        assert_eq!(Sign::of(&ratio(-1, 3)), Sign::Negative);
    }
}
