//! Asymptotics of the minimal Gorenstein middle entries: the inductive
//! lower-bound chain at full Perazzo codimensions, the limiting constant of
//! the minimal degree-k entry, and exact-decimal convergence scans.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::binomial::{binom_u64, expand};
use crate::decimal::{pow_frac, ratio, ExactDecimal};
use crate::perazzo::{self, PerazzoParams};
use crate::{Error, Result};

/// One step of the inductive chain at degree `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuChainEntry {
    pub k: u32,
    /// Value produced by the two-term shifted-expansion recursion.
    pub value: BigInt,
    /// The certified floor `C(m + d - k - 1, d - k)`.
    pub floor: BigInt,
    /// Recursion term `((value_{k-1})_(d-k+1))^{-1}_{-1}` (absent at k = 1).
    pub term_down: Option<BigInt>,
    /// Recursion term `((value_{k-1})_(d-k+1))^{2k-d}_{2k-d+1}`.
    pub term_cross: Option<BigInt>,
}

/// Lower-bound chain for the minimal entries at the full Perazzo
/// codimension of type `m`, socle degree `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuChain {
    pub d: u32,
    pub m: u32,
    pub codimension: BigInt,
    pub entries: Vec<MuChainEntry>,
}

/// Runs the two-term recursion from `value_1 = m + C(m+d-2, d-1)` down to
/// `k = floor(d/2)`, recording both shift terms and the binomial floor at
/// every step.
///
/// The floors are the certified bounds; the raw recursion values are the
/// inductive witnesses and can overshoot true minimal entries at small
/// sizes, so nothing downstream treats them as bounds on real algebras.
pub fn mu_lower_chain(d: u32, m: u32) -> Result<MuChain> {
    if d < 4 {
        return Err(Error::InvalidArgument(format!(
            "chain requires socle degree d >= 4 (got {d})"
        )));
    }
    if m < 3 {
        return Err(Error::InvalidArgument(format!(
            "chain requires type m >= 3 (got {m})"
        )));
    }
    let p = PerazzoParams::new(m, d)?;
    let codimension = perazzo::codimension(p);
    let (md, dd) = (m as u64, d as u64);
    let mut entries = vec![MuChainEntry {
        k: 1,
        value: codimension.clone(),
        floor: binom_u64(md + dd - 2, dd - 1),
        term_down: None,
        term_cross: None,
    }];
    for k in 2..=d / 2 {
        let prev = entries.last().expect("chain is nonempty").value.clone();
        let e = expand(prev, d - k + 1)?;
        let term_down = e.shift(-1, -1);
        let cross_top = 2 * k as i64 - d as i64;
        let term_cross = e.shift(cross_top, cross_top + 1);
        let value = &term_down + &term_cross;
        entries.push(MuChainEntry {
            k,
            value,
            floor: binom_u64(md + dd - k as u64 - 1, dd - k as u64),
            term_down: Some(term_down),
            term_cross: Some(term_cross),
        });
    }
    Ok(MuChain {
        d,
        m,
        codimension,
        entries,
    })
}

/// The limiting constant `((d-1)!)^((d-k)/(d-1)) / (d-k)!` with its exact
/// symbolic pieces retained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitConstant {
    pub d: u32,
    pub k: u32,
    /// `(d-1)!`, the base of the fractional power.
    pub factorial_base: BigInt,
    /// Exponent numerator `d - k`.
    pub exp_num: u32,
    /// Exponent denominator `d - 1`.
    pub exp_den: u32,
    /// `(d-k)!`, the divisor.
    pub factorial_divisor: BigInt,
    pub value: ExactDecimal,
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Evaluates the limiting constant to `digits` fractional digits (plus
/// internal guard digits so every printed digit is exact).
pub fn limit_constant(d: u32, k: u32, digits: u32) -> Result<LimitConstant> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!(
            "limit constant requires d >= 2 (got {d})"
        )));
    }
    if k < 1 || k > d / 2 {
        return Err(Error::InvalidArgument(format!(
            "limit constant requires 1 <= k <= d/2 (got k={k}, d={d})"
        )));
    }
    let factorial_base = factorial(d - 1);
    let factorial_divisor = factorial(d - k);
    let guard = 10;
    let powered = pow_frac(&factorial_base, d - k, d - 1, digits + guard)?;
    let divided = ExactDecimal {
        mantissa: powered.mantissa / &factorial_divisor,
        scale: digits + guard,
    };
    Ok(LimitConstant {
        d,
        k,
        factorial_base,
        exp_num: d - k,
        exp_den: d - 1,
        factorial_divisor,
        value: divided.with_scale(digits),
    })
}

/// One row of a convergence scan at the full Perazzo codimension of type `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioRow {
    pub m: u64,
    pub codimension: BigInt,
    /// Certified floor over `r^((d-k)/(d-1))`.
    pub lower_ratio: ExactDecimal,
    /// Realized full Perazzo entry over the same power of `r`: an existence
    /// ceiling on the minimal entry, not a limit witness.
    pub perazzo_ratio: ExactDecimal,
    /// `|limit - lower_ratio|`.
    pub lower_gap: ExactDecimal,
    /// Whether the gap shrank relative to the previous row of the scan.
    pub gap_decreased: Option<bool>,
}

/// Evaluates floor and realized ratios against `r^((d-k)/(d-1))` at the
/// full Perazzo codimensions of the given types, to `digits` exact digits.
pub fn ratio_scan(d: u32, k: u32, types: &[u64], digits: u32) -> Result<Vec<RatioRow>> {
    if digits < 30 {
        return Err(Error::InvalidArgument(
            "ratio scans keep at least 30 digits".into(),
        ));
    }
    let limit = limit_constant(d, k, digits)?;
    let mut out: Vec<RatioRow> = Vec::with_capacity(types.len());
    for &m in types {
        if m < 3 {
            return Err(Error::InvalidArgument(format!(
                "ratio scan requires types m >= 3 (got {m})"
            )));
        }
        let m32 =
            u32::try_from(m).map_err(|_| Error::InvalidArgument(format!("type {m} too large")))?;
        let p = PerazzoParams::new(m32, d)?;
        let codimension = perazzo::codimension(p);
        let denom = pow_frac(&codimension, d - k, d - 1, digits + 10)?;
        let floor = binom_u64(m + d as u64 - k as u64 - 1, (d - k) as u64);
        let lower_ratio = ratio(&floor, &denom, digits)?;
        let hf = perazzo::hilbert_function(p);
        let realized = hf.entries[k as usize].clone();
        let perazzo_ratio = ratio(&realized, &denom, digits)?;
        let lower_gap = limit.value.abs_diff(&lower_ratio);
        let gap_decreased = out.last().map(|prev: &RatioRow| lower_gap < prev.lower_gap);
        out.push(RatioRow {
            m,
            codimension,
            lower_ratio,
            perazzo_ratio,
            lower_gap,
            gap_decreased,
        });
    }
    Ok(out)
}
