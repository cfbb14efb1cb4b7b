//! Macaulay binomial-expansion calculus.
//!
//! Every nonnegative integer `k` has a unique representation in a fixed
//! degree `i >= 1` as
//!
//! ```text
//! k = C(k_i, i) + C(k_{i-1}, i-1) + ... + C(k_j, j)
//! ```
//!
//! with strictly decreasing tops `k_i > k_{i-1} > ... > k_j >= j >= 1`.
//! The shifted-expansion operator adds a constant to every top and another
//! to every bottom, with the convention that `C(s, c) = 0` whenever `s < c`
//! or `c < 0`.  The three classical growth bounds for Hilbert functions are
//! instances of that operator.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Binomial coefficient `C(n, k)` for a (possibly huge) top and small bottom,
/// with the vanishing convention: zero when `n < k` or `k < 0`.
///
/// For `n >= k >= 0` this is the ordinary binomial coefficient, computed by
/// the product formula with exact stepwise division.
pub fn binomial(n: &BigInt, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let kb = BigInt::from(k);
    if *n < kb {
        return BigInt::zero();
    }
    // Symmetry keeps the product short when the bottom is close to the top.
    let complement = n - &kb;
    let k = if complement < kb {
        i64::try_from(complement).expect("complement below k fits i64")
    } else {
        k
    };
    let mut acc = BigInt::one();
    for step in 0..k {
        acc = acc * (n - BigInt::from(step)) / BigInt::from(step + 1);
    }
    acc
}

/// Convenience wrapper for machine-word arguments.
pub fn binom_u64(n: u64, k: u64) -> BigInt {
    binomial(&BigInt::from(n), k as i64)
}

/// The unique `i`-binomial (Macaulay) expansion of a nonnegative integer.
///
/// `parts` lists `(top, bottom)` pairs with strictly decreasing tops and
/// bottoms stepping down by one from `degree`; the empty list represents
/// zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacaulayExpansion {
    pub value: BigInt,
    pub degree: u32,
    pub parts: Vec<(BigInt, u32)>,
}

impl MacaulayExpansion {
    /// Re-evaluates `sum C(top + top_shift, bottom + bottom_shift)` under the
    /// vanishing convention.  No inputs are rejected: degenerate binomials
    /// contribute zero.
    pub fn shift(&self, top_shift: i64, bottom_shift: i64) -> BigInt {
        let mut acc = BigInt::zero();
        for (top, bottom) in &self.parts {
            let shifted_top = top + BigInt::from(top_shift);
            let shifted_bottom = *bottom as i64 + bottom_shift;
            acc += binomial(&shifted_top, shifted_bottom);
        }
        acc
    }

    /// Checks the structural invariants: strictly decreasing tops, bottoms
    /// stepping down by one from `degree`, `top >= bottom`, and the parts
    /// summing back to `value`.
    pub fn is_valid(&self) -> bool {
        if self.degree == 0 {
            return false;
        }
        let mut sum = BigInt::zero();
        let mut expected_bottom = self.degree;
        let mut prev_top: Option<&BigInt> = None;
        for (top, bottom) in &self.parts {
            if *bottom != expected_bottom || *bottom < 1 {
                return false;
            }
            if *top < BigInt::from(*bottom) {
                return false;
            }
            if let Some(p) = prev_top {
                if top >= p {
                    return false;
                }
            }
            sum += binomial(top, *bottom as i64);
            prev_top = Some(top);
            expected_bottom -= 1;
        }
        sum == self.value
    }
}

impl fmt::Display for MacaulayExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .parts
            .iter()
            .map(|(top, bottom)| format!("C({top},{bottom})"))
            .collect();
        write!(f, "{}", rendered.join("+"))
    }
}

/// Greedy construction of the unique `i`-binomial expansion of `k`.
///
/// Picks the largest `C(top, i) <= k`, recurses on the remainder with
/// `i - 1`, and stops at remainder zero.  Rejects `i = 0` and negative `k`.
pub fn expand<T: Into<BigInt>>(k: T, i: u32) -> Result<MacaulayExpansion> {
    let k: BigInt = k.into();
    if i == 0 {
        return Err(Error::InvalidArgument(
            "binomial expansion degree must be >= 1".into(),
        ));
    }
    if k.is_negative() {
        return Err(Error::InvalidArgument(format!(
            "cannot expand negative integer {k}"
        )));
    }
    let mut parts = Vec::new();
    let mut remainder = k.clone();
    let mut bottom = i;
    while !remainder.is_zero() {
        debug_assert!(bottom >= 1, "greedy expansion ran out of bottoms");
        let top = largest_top(&remainder, bottom);
        remainder -= binomial(&top, bottom as i64);
        parts.push((top, bottom));
        bottom -= 1;
    }
    let expansion = MacaulayExpansion {
        value: k,
        degree: i,
        parts,
    };
    debug_assert!(expansion.is_valid());
    Ok(expansion)
}

/// Largest `top` with `C(top, bottom) <= limit`, assuming `limit >= 1`.
fn largest_top(limit: &BigInt, bottom: u32) -> BigInt {
    let b = bottom as i64;
    // C(bottom, bottom) = 1 <= limit, so the search interval is nonempty.
    let mut lo = BigInt::from(bottom);
    let mut hi = lo.clone() + 1u32;
    while binomial(&hi, b) <= *limit {
        lo = hi.clone();
        hi = &hi * 2u32;
    }
    // Invariant: C(lo, b) <= limit < C(hi, b).
    while &lo + 1u32 < hi {
        let mid: BigInt = (&lo + &hi) / 2u32;
        if binomial(&mid, b) <= *limit {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Macaulay's bound: the maximal admissible entry in degree `d + 1` of an
/// O-sequence whose degree-`d` entry is `h`.  Evaluates
/// `((h)_(d))^{+1}_{+1}`; rejects `d = 0`.
pub fn macaulay_bound<T: Into<BigInt>>(h: T, d: u32) -> Result<BigInt> {
    Ok(expand(h, d)?.shift(1, 1))
}

/// Green's bound: the maximal degree-`d` entry after quotienting by a
/// generic linear form.  Evaluates `((h)_(d))^{-1}_{0}`; rejects `d = 0`.
pub fn green_bound<T: Into<BigInt>>(h: T, d: u32) -> Result<BigInt> {
    Ok(expand(h, d)?.shift(-1, 0))
}

/// Gotzmann's persistent-growth value `((h)_(d))^{s}_{s}`: the forced entry
/// in degree `d + s` once maximal growth is attained and no new generators
/// appear.  Rejects `d = 0` and `s = 0`.
pub fn gotzmann_growth<T: Into<BigInt>>(h: T, d: u32, s: u32) -> Result<BigInt> {
    if s == 0 {
        return Err(Error::InvalidArgument(
            "gotzmann growth requires s >= 1".into(),
        ));
    }
    Ok(expand(h, d)?.shift(s as i64, s as i64))
}
