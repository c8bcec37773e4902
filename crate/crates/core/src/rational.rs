//! Exact rational arithmetic used for every verdict that must not depend on
//! floating-point rounding.
//!
//! [`Rational`] wraps `num_rational::Ratio<i64>` and fixes the wire format:
//! JSON `{"num": n, "den": d}` with a reduced fraction and positive
//! denominator, and display `n/d` (just `n` when the denominator is 1), which
//! is also the CSV cell format.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact rational number with `i64` numerator and denominator.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Rational(Ratio<i64>);

impl Rational {
    /// Builds `num/den`, reducing and normalizing the sign.
    ///
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(Ratio::new(num, den))
    }

    /// The integer `n` as a rational.
    pub fn from_integer(n: i64) -> Self {
        Rational(Ratio::from_integer(n))
    }

    /// Zero.
    pub fn zero() -> Self {
        Rational(Ratio::zero())
    }

    /// One.
    pub fn one() -> Self {
        Rational(Ratio::one())
    }

    /// Reduced numerator (sign lives here).
    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    /// Reduced denominator, always positive.
    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    /// Nearest `f64` value.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().expect("ratio representable as f64")
    }

    /// True when the value is exactly zero.
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// True when the value is strictly negative.
    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Parses `"n"` or `"n/d"`.
    pub fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        match text.split_once('/') {
            None => text.parse::<i64>().ok().map(Rational::from_integer),
            Some((n, d)) => {
                let n = n.trim().parse::<i64>().ok()?;
                let d = d.trim().parse::<i64>().ok()?;
                (d != 0).then(|| Rational::new(n, d))
            }
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<u32> for Rational {
    fn from(n: u32) -> Self {
        Rational::from_integer(n as i64)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(self.0 / rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

#[derive(Serialize, Deserialize)]
struct RationalWire {
    num: i64,
    den: i64,
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RationalWire { num: self.numer(), den: self.denom() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = RationalWire::deserialize(deserializer)?;
        if wire.den == 0 {
            return Err(D::Error::custom("rational with zero denominator"));
        }
        Ok(Rational::new(wire.num, wire.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_normalizes_sign() {
        let r = Rational::new(2, -4);
        assert_eq!(r.numer(), -1);
        assert_eq!(r.denom(), 2);
        assert_eq!(r, Rational::new(-3, 6));
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = Rational::new(1, 3);
        let b = Rational::new(1, 6);
        assert_eq!(a + b, Rational::new(1, 2));
        assert_eq!(a - b, Rational::new(1, 6));
        assert_eq!(a * b, Rational::new(1, 18));
        assert_eq!(a / b, Rational::from_integer(2));
    }

    #[test]
    fn wire_format_round_trips() {
        let r = Rational::new(5, 12);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, r#"{"num":5,"den":12}"#);
        let back: Rational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn display_matches_csv_convention() {
        assert_eq!(Rational::new(2, 9).to_string(), "2/9");
        assert_eq!(Rational::from_integer(7).to_string(), "7");
        assert_eq!(Rational::new(-1, 2).to_string(), "-1/2");
    }

    #[test]
    fn parse_accepts_integers_and_fractions() {
        assert_eq!(Rational::parse("3"), Some(Rational::from_integer(3)));
        assert_eq!(Rational::parse("2/9"), Some(Rational::new(2, 9)));
        assert_eq!(Rational::parse(" -1 / 2 "), Some(Rational::new(-1, 2)));
        assert_eq!(Rational::parse("1/0"), None);
        assert_eq!(Rational::parse("x"), None);
    }
}
