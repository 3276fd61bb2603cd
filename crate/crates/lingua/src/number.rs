//! Exact decimal numbers.
//!
//! A [`Number`] is a big-integer mantissa scaled by a power of ten, kept
//! normalized (no trailing zero fraction digits). Addition, subtraction
//! and multiplication are exact; division rounds half-even at a caller
//! supplied fraction-digit budget. Size limits are not enforced here —
//! the interpreter checks `oversized` on every operation result instead.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_bigint::Sign;

/// An exact decimal: `mantissa * 10^(-scale)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Number {
    mantissa: BigInt,
    scale: u32,
}

fn pow10(exp: u32) -> BigInt {
    BigInt::from(10u8).pow(exp)
}

impl Number {
    pub fn new(mantissa: BigInt, scale: u32) -> Number {
        let mut n = Number { mantissa, scale };
        n.normalize();
        n
    }

    pub fn from_int(i: i64) -> Number {
        Number { mantissa: BigInt::from(i), scale: 0 }
    }

    pub fn zero() -> Number {
        Number::from_int(0)
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.sign() == Sign::NoSign
    }

    /// Number of fraction digits in the normalized representation.
    pub fn fraction_digits(&self) -> u32 {
        self.scale
    }

    fn normalize(&mut self) {
        if self.is_zero() {
            self.scale = 0;
            return;
        }
        let ten = BigInt::from(10u8);
        while self.scale > 0 && (&self.mantissa % &ten).sign() == Sign::NoSign {
            self.mantissa /= &ten;
            self.scale -= 1;
        }
    }

    /// Both mantissas brought to a common scale.
    fn aligned(&self, other: &Number) -> (BigInt, BigInt, u32) {
        let scale = self.scale.max(other.scale);
        let lhs = &self.mantissa * pow10(scale - self.scale);
        let rhs = &other.mantissa * pow10(scale - other.scale);
        (lhs, rhs, scale)
    }

    pub fn add(&self, other: &Number) -> Number {
        let (lhs, rhs, scale) = self.aligned(other);
        Number::new(lhs + rhs, scale)
    }

    pub fn sub(&self, other: &Number) -> Number {
        let (lhs, rhs, scale) = self.aligned(other);
        Number::new(lhs - rhs, scale)
    }

    pub fn mul(&self, other: &Number) -> Number {
        Number::new(&self.mantissa * &other.mantissa, self.scale + other.scale)
    }

    pub fn neg(&self) -> Number {
        Number { mantissa: -self.mantissa.clone(), scale: self.scale }
    }

    /// Exact quotient rounded half-even to `fraction_digits` places.
    /// `None` when the divisor is zero.
    pub fn div_half_even(&self, other: &Number, fraction_digits: u32) -> Option<Number> {
        if other.is_zero() {
            return None;
        }
        // self / other = mantissa_l / mantissa_r * 10^(scale_r - scale_l);
        // scale the numerator so the integer quotient carries
        // `fraction_digits` fraction digits.
        let exp = other.scale as i64 - self.scale as i64 + fraction_digits as i64;
        let (mut num, mut den) = (self.mantissa.clone(), other.mantissa.clone());
        if exp >= 0 {
            num *= pow10(exp as u32);
        } else {
            den *= pow10((-exp) as u32);
        }
        let negative = (num.sign() == Sign::Minus) != (den.sign() == Sign::Minus);
        let (num, den) = (num.magnitude().clone(), den.magnitude().clone());
        let mut quot = &num / &den;
        let rem = &num % &den;
        let twice = &rem * 2u32;
        let two = num_bigint::BigUint::from(2u32);
        let round_up = match twice.cmp(&den) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => (&quot % &two) == 1u32.into(), // tie: to even
        };
        if round_up {
            quot += 1u32;
        }
        let mantissa = BigInt::from(quot);
        Some(Number::new(if negative { -mantissa } else { mantissa }, fraction_digits))
    }

    /// True when `|self| > 10^digits` — the magnitude side of `oversized`.
    pub fn magnitude_exceeds(&self, digits: u32) -> bool {
        // |m| * 10^(-s) > 10^d  iff  |m| > 10^(d + s)
        self.mantissa.magnitude() > pow10(digits + self.scale).magnitude()
    }

    /// The value as a 1-based collection index, when it is an exact
    /// integer that fits.
    pub fn as_index(&self) -> Option<u64> {
        if self.scale != 0 {
            return None;
        }
        u64::try_from(&self.mantissa).ok()
    }
}

impl PartialOrd for Number {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Number {
    fn cmp(&self, other: &Self) -> Ordering {
        let (lhs, rhs, _) = self.aligned(other);
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale == 0 {
            return write!(f, "{}", self.mantissa);
        }
        let sign = if self.mantissa.sign() == Sign::Minus { "-" } else { "" };
        let magnitude = self.mantissa.magnitude();
        let divisor = pow10(self.scale);
        let int_part = magnitude / divisor.magnitude();
        let frac_part = magnitude % divisor.magnitude();
        write!(f, "{sign}{int_part}.{frac_part:0width$}", width = self.scale as usize)
    }
}

/// Parse error for number literals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadNumber;

impl FromStr for Number {
    type Err = BadNumber;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (sign, body) = match s.strip_prefix('-') {
            Some(rest) => (-1i8, rest),
            None => (1, s),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, fr)) => (i, fr),
            None => (body, ""),
        };
        if int_part.is_empty()
            || !int_part.bytes().all(|b| b.is_ascii_digit())
            || (!frac_part.is_empty() && !frac_part.bytes().all(|b| b.is_ascii_digit()))
            || (body.contains('.') && frac_part.is_empty())
        {
            return Err(BadNumber);
        }
        let digits = format!("{int_part}{frac_part}");
        let mantissa = BigInt::parse_bytes(digits.as_bytes(), 10).ok_or(BadNumber)?;
        let mantissa = if sign < 0 { -mantissa } else { mantissa };
        Ok(Number::new(mantissa, frac_part.len() as u32))
    }
}
