//! Exact fixed-point decimals on big integers.
//!
//! A value is `mantissa / 10^scale`.  Roots are computed by integer Newton
//! iteration and floor-truncated, so every digit printed is a true digit of
//! the exact real value and repeated runs are bit-identical.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactDecimal {
    pub mantissa: BigInt,
    pub scale: u32,
}

impl ExactDecimal {
    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        ExactDecimal {
            mantissa: value.into(),
            scale: 0,
        }
    }

    fn pow10(e: u32) -> BigInt {
        BigInt::from(10u8).pow(e)
    }

    /// Rescales to exactly `scale` fractional digits, truncating toward zero
    /// when digits are dropped.
    pub fn with_scale(&self, scale: u32) -> ExactDecimal {
        let mantissa = match scale.cmp(&self.scale) {
            Ordering::Equal => self.mantissa.clone(),
            Ordering::Greater => &self.mantissa * Self::pow10(scale - self.scale),
            Ordering::Less => &self.mantissa / Self::pow10(self.scale - scale),
        };
        ExactDecimal { mantissa, scale }
    }

    pub fn abs_diff(&self, other: &ExactDecimal) -> ExactDecimal {
        let scale = self.scale.max(other.scale);
        let a = self.with_scale(scale);
        let b = other.with_scale(scale);
        ExactDecimal {
            mantissa: (a.mantissa - b.mantissa).abs(),
            scale,
        }
    }

    /// Exact comparison of `self` and `ratio * other` for a rational ratio
    /// `num/den`; avoids any intermediate rounding.
    pub fn cmp_scaled(&self, other: &ExactDecimal, num: u64, den: u64) -> Ordering {
        let scale = self.scale.max(other.scale);
        let a = self.with_scale(scale).mantissa * BigInt::from(den);
        let b = other.with_scale(scale).mantissa * BigInt::from(num);
        a.cmp(&b)
    }
}

impl PartialOrd for ExactDecimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_scaled(other, 1, 1))
    }
}

impl fmt::Display for ExactDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mantissa.is_negative() {
            let flipped = ExactDecimal {
                mantissa: -self.mantissa.clone(),
                scale: self.scale,
            };
            return write!(f, "-{flipped}");
        }
        let digits = self.mantissa.to_string();
        if self.scale == 0 {
            return write!(f, "{digits}");
        }
        let scale = self.scale as usize;
        if digits.len() <= scale {
            write!(f, "0.{}{}", "0".repeat(scale - digits.len()), digits)
        } else {
            let (int_part, frac_part) = digits.split_at(digits.len() - scale);
            write!(f, "{int_part}.{frac_part}")
        }
    }
}

/// Floor of the `n`-th root of a nonnegative integer, by Newton iteration
/// with a bit-length seed, corrected to the exact floor.
pub fn nth_root_floor(x: &BigInt, n: u32) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidArgument("zeroth root is undefined".into()));
    }
    if x.is_negative() {
        return Err(Error::InvalidArgument(
            "nth root of a negative integer".into(),
        ));
    }
    if x.is_zero() || n == 1 {
        return Ok(x.clone());
    }
    let bits = x.bits();
    let mut guess = BigInt::from(1u8) << (bits / n as u64 + 1);
    let n_big = BigInt::from(n);
    let n_minus_1 = BigInt::from(n - 1);
    loop {
        let next: BigInt = (&n_minus_1 * &guess + x / guess.pow(n - 1)) / &n_big;
        if next >= guess {
            break;
        }
        guess = next;
    }
    while guess.pow(n) > *x {
        guess -= 1;
    }
    while (guess.clone() + 1u32).pow(n) <= *x {
        guess += 1;
    }
    Ok(guess)
}

/// `floor(base^(num/den) * 10^scale)` for a nonnegative integer base:
/// computes `base^num * 10^(scale*den)` exactly and takes the `den`-th root.
pub fn pow_frac(base: &BigInt, num: u32, den: u32, scale: u32) -> Result<ExactDecimal> {
    if den == 0 {
        return Err(Error::InvalidArgument("zero denominator exponent".into()));
    }
    if base.is_negative() {
        return Err(Error::InvalidArgument("negative base".into()));
    }
    let n = base.pow(num) * BigInt::from(10u8).pow(scale * den);
    Ok(ExactDecimal {
        mantissa: nth_root_floor(&n, den)?,
        scale,
    })
}

/// `floor((num / denom) * 10^scale)` where `denom` is a positive decimal:
/// the exact quotient of an integer by a fixed-point value.
pub fn ratio(num: &BigInt, denom: &ExactDecimal, scale: u32) -> Result<ExactDecimal> {
    if !denom.mantissa.is_positive() {
        return Err(Error::InvalidArgument("ratio by nonpositive value".into()));
    }
    let mantissa = num * BigInt::from(10u8).pow(scale + denom.scale) / &denom.mantissa;
    Ok(ExactDecimal { mantissa, scale })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_are_exact_floors() {
        for (x, n, expect) in [
            (8u64, 3u32, 2u64),
            (9, 2, 3),
            (10, 2, 3),
            (63, 3, 3),
            (64, 3, 4),
        ] {
            assert_eq!(
                nth_root_floor(&BigInt::from(x), n).unwrap(),
                BigInt::from(expect)
            );
        }
        // Exactness at scale: floor sqrt of 10^40.
        let big = BigInt::from(10u8).pow(40);
        assert_eq!(nth_root_floor(&big, 2).unwrap(), BigInt::from(10u8).pow(20));
        assert!(nth_root_floor(&BigInt::from(-4), 2).is_err());
        assert!(nth_root_floor(&BigInt::from(4), 0).is_err());
    }

    #[test]
    fn pow_frac_cube_root_of_36() {
        // 6^(2/3) = 3.30192724889462668387...
        let v = pow_frac(&BigInt::from(6u8), 2, 3, 20).unwrap();
        assert!(v.to_string().starts_with("3.301927248894626683"), "{v}");
    }

    #[test]
    fn display_inserts_decimal_point() {
        let v = ExactDecimal {
            mantissa: BigInt::from(1234u32),
            scale: 2,
        };
        assert_eq!(v.to_string(), "12.34");
        let v = ExactDecimal {
            mantissa: BigInt::from(7u32),
            scale: 3,
        };
        assert_eq!(v.to_string(), "0.007");
        assert_eq!(ExactDecimal::from_integer(5u32).to_string(), "5");
    }

    #[test]
    fn scaled_comparison_is_exact() {
        let a = ExactDecimal {
            mantissa: BigInt::from(102u32),
            scale: 2,
        }; // 1.02
        let b = ExactDecimal::from_integer(1u32);
        // 1.02 vs 1.02 * 1 exactly
        assert_eq!(a.cmp_scaled(&b, 102, 100), Ordering::Equal);
        assert_eq!(a.cmp_scaled(&b, 103, 100), Ordering::Less);
        assert_eq!(a.cmp_scaled(&b, 101, 100), Ordering::Greater);
    }

    #[test]
    fn ratio_truncates_exactly() {
        // 1 / 3 at 5 digits = 0.33333
        let denom = ExactDecimal::from_integer(3u32);
        let v = ratio(&BigInt::from(1u8), &denom, 5).unwrap();
        assert_eq!(v.to_string(), "0.33333");
    }
}
