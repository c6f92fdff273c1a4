//! Fixed-point decimal numbers used for numeric output.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::coeff::Rational;

/// `mantissa · 10^(-scale)`.
#[derive(Debug, Clone)]
pub struct Decimal {
    mantissa: BigInt,
    scale: u32,
}

fn pow10(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), e as usize)
}

/// Rounds `num / den` to the nearest integer, ties away from zero.
pub(crate) fn round_div(num: &BigInt, den: &BigInt) -> BigInt {
    let negative = (num.sign() == Sign::Minus) != (den.sign() == Sign::Minus);
    let (q, r) = num.abs().div_rem(&den.abs());
    let q = if r * 2 >= den.abs() { q + 1 } else { q };
    if negative {
        -q
    } else {
        q
    }
}

impl Decimal {
    pub fn new(mantissa: BigInt, scale: u32) -> Self {
        Self { mantissa, scale }
    }

    pub fn zero() -> Self {
        Self::new(BigInt::zero(), 0)
    }

    /// Nearest decimal with `scale` fractional digits.
    pub fn from_rational(q: &Rational, scale: u32) -> Self {
        let num = q.numer() * pow10(scale);
        Self::new(round_div(&num, q.denom()), scale)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.mantissa.clone(), pow10(self.scale))
    }

    pub fn to_f64(&self) -> f64 {
        // Keep 20 significant digits before handing off to floating point.
        let digits = self.mantissa.abs().to_string().len() as i64;
        let drop = (digits - 20).clamp(0, self.scale as i64) as u32;
        let m = round_div(&self.mantissa, &pow10(drop));
        m.to_f64().unwrap_or(f64::NAN) / 10f64.powi((self.scale - drop) as i32)
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    /// Decimal exponent of the leading digit, `None` for zero.
    fn leading_exponent(&self) -> Option<i64> {
        if self.mantissa.is_zero() {
            return None;
        }
        let len = self.mantissa.abs().to_string().len() as i64;
        Some(len - 1 - self.scale as i64)
    }

    /// Rounds to `places` fractional digits.
    pub fn round_to_scale(&self, places: u32) -> Self {
        match places.cmp(&self.scale) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => Self::new(&self.mantissa * pow10(places - self.scale), places),
            Ordering::Less => {
                Self::new(round_div(&self.mantissa, &pow10(self.scale - places)), places)
            }
        }
    }

    /// Rounds to `digits` significant digits; integers keep all their digits.
    pub fn round_significant(&self, digits: u32) -> Self {
        match self.leading_exponent() {
            None => Self::new(BigInt::zero(), digits.saturating_sub(1)),
            Some(lead) => {
                let places = (digits as i64 - 1 - lead).max(0) as u32;
                self.round_to_scale(places)
            }
        }
    }

    pub fn to_fixed_string(&self, places: u32) -> String {
        self.round_to_scale(places).to_string()
    }

    pub fn to_significant_string(&self, digits: u32) -> String {
        self.round_significant(digits).to_string()
    }

    /// Shortest representation: trailing fractional zeros dropped.
    pub fn to_plain_string(&self) -> String {
        let s = self.to_string();
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    }

    /// `|self − other| / |other|`, as a float.
    pub fn relative_error(&self, reference: &Decimal) -> f64 {
        let diff = self.to_rational() - reference.to_rational();
        let r = reference.to_rational();
        if r.is_zero() {
            return Decimal::from_rational(&diff.abs(), 40).to_f64();
        }
        Decimal::from_rational(&(diff / r).abs(), 40).to_f64()
    }
}

impl PartialEq for Decimal {
    fn eq(&self, other: &Self) -> bool {
        self.to_rational() == other.to_rational()
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.mantissa.abs().to_string();
        let sign = if self.mantissa.is_negative() { "-" } else { "" };
        let scale = self.scale as usize;
        if scale == 0 {
            return write!(f, "{sign}{digits}");
        }
        let padded = if digits.len() <= scale {
            format!("{}{}", "0".repeat(scale + 1 - digits.len()), digits)
        } else {
            digits
        };
        let (int, frac) = padded.split_at(padded.len() - scale);
        write!(f, "{sign}{int}.{frac}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    #[test]
    fn rational_rounding() {
        assert_eq!(Decimal::from_rational(&rat(15, 8), 3).to_string(), "1.875");
        assert_eq!(Decimal::from_rational(&rat(2, 3), 4).to_string(), "0.6667");
        assert_eq!(Decimal::from_rational(&rat(-1, 8), 2).to_string(), "-0.13");
        assert_eq!(Decimal::from_rational(&rat(1, 1000), 2).to_string(), "0.00");
    }

    #[test]
    fn significant_digits() {
        let d = Decimal::from_rational(&rat(1234567, 1000000), 6);
        assert_eq!(d.to_significant_string(3), "1.23");
        assert_eq!(d.to_significant_string(1), "1");
        assert_eq!(Decimal::from_rational(&rat(12345, 1), 0).to_significant_string(2), "12345");
        assert_eq!(d.to_fixed_string(5), "1.23457");
    }

    #[test]
    fn value_equality_ignores_scale() {
        let a = Decimal::from_rational(&rat(15, 8), 3);
        let b = Decimal::from_rational(&rat(15, 8), 10);
        assert_eq!(a, b);
        assert_eq!(b.to_plain_string(), "1.875");
        assert!((a.to_f64() - 1.875).abs() < 1e-15);
    }
}
