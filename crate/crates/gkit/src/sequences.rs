//! Sequence-level predicates on candidate Hilbert functions.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::binomial::{binomial, macaulay_bound};
use crate::{Error, Result};

/// A finite integer sequence `(h_0, ..., h_d)` proposed as a Hilbert
/// function.  For Gorenstein candidates `h_0 = h_d = 1` and the sequence is
/// symmetric; neither is assumed by the container itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertCandidate {
    pub entries: Vec<BigInt>,
}

impl HilbertCandidate {
    pub fn new(entries: Vec<BigInt>) -> Self {
        Self { entries }
    }

    pub fn from_u64(entries: &[u64]) -> Self {
        Self {
            entries: entries.iter().map(|&e| BigInt::from(e)).collect(),
        }
    }

    /// Parses a comma- or whitespace-separated list of nonnegative integers.
    pub fn parse(text: &str) -> Result<Self> {
        let tokens: Vec<&str> = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.is_empty() {
            return Err(Error::Parse("empty candidate".into()));
        }
        let mut entries = Vec::with_capacity(tokens.len());
        for t in tokens {
            let v: BigInt = t
                .parse()
                .map_err(|_| Error::Parse(format!("invalid integer `{t}` in candidate")))?;
            if v < BigInt::zero() {
                return Err(Error::Parse(format!("negative entry `{t}` in candidate")));
            }
            entries.push(v);
        }
        Ok(Self { entries })
    }

    /// The socle degree `d`: one less than the length.
    pub fn socle_degree(&self) -> usize {
        self.entries.len().saturating_sub(1)
    }

    /// The codimension `r = h_1` (zero for the length-one sequence).
    pub fn codimension(&self) -> BigInt {
        self.entries.get(1).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.entries.len();
        (0..n / 2).all(|k| self.entries[k] == self.entries[n - 1 - k])
    }

    /// O-sequence test: `h_0 = 1` and `h_{k+1} <= ((h_k)_(k))^{+1}_{+1}` for
    /// every `1 <= k < d`.
    pub fn is_o_sequence(&self) -> bool {
        match self.entries.first() {
            Some(h0) if h0.is_one() => {}
            _ => return false,
        }
        for k in 1..self.socle_degree() {
            let bound = match macaulay_bound(self.entries[k].clone(), k as u32) {
                Ok(b) => b,
                Err(_) => return false,
            };
            if self.entries[k + 1] > bound {
                return false;
            }
        }
        true
    }

    /// Gorenstein-shape test: symmetric, `h_0 = h_d = 1`, and an O-sequence.
    ///
    /// Deliberately nothing deeper: a `true` here is a necessary condition
    /// only, and stronger verdicts belong to the elimination module.
    /// Degenerate candidates with `d <= 1` are accepted.
    pub fn is_gorenstein_shape(&self) -> bool {
        if self.entries.is_empty() {
            return false;
        }
        let d = self.socle_degree();
        if !self.entries[0].is_one() || !self.entries[d].is_one() {
            return false;
        }
        self.is_symmetric() && self.is_o_sequence()
    }
}

impl fmt::Display for HilbertCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", rendered.join(","))
    }
}

/// Outcome of the componentwise partial order on a fixed `(r, d)` family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CompareOutcome {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// Componentwise comparison on the middle entries `h_2 ... h_{d-2}`.
///
/// Both candidates must share socle degree and codimension; otherwise they
/// belong to different families and the comparison is an error.
pub fn compare(a: &HilbertCandidate, b: &HilbertCandidate) -> Result<CompareOutcome> {
    if a.entries.len() != b.entries.len() {
        return Err(Error::NotComparable(format!(
            "socle degrees differ ({} vs {})",
            a.socle_degree(),
            b.socle_degree()
        )));
    }
    if a.codimension() != b.codimension() {
        return Err(Error::NotComparable(format!(
            "codimensions differ ({} vs {})",
            a.codimension(),
            b.codimension()
        )));
    }
    let d = a.socle_degree();
    let (mut any_less, mut any_greater) = (false, false);
    if d >= 4 {
        for k in 2..=d - 2 {
            if a.entries[k] < b.entries[k] {
                any_less = true;
            } else if a.entries[k] > b.entries[k] {
                any_greater = true;
            }
        }
    }
    Ok(match (any_less, any_greater) {
        (false, false) => CompareOutcome::Equal,
        (true, false) => CompareOutcome::Less,
        (false, true) => CompareOutcome::Greater,
        (true, true) => CompareOutcome::Incomparable,
    })
}

/// The compressed-algebra ceiling `C(r + k - 1, k)` for the degree-`k` entry
/// at codimension `r`.
pub fn compressed_upper(r: u64, k: u64) -> BigInt {
    binomial(&BigInt::from(r + k - 1), k as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cand(entries: &[u64]) -> HilbertCandidate {
        HilbertCandidate::from_u64(entries)
    }

    #[test]
    fn parses_comma_and_space_lists() {
        let a = HilbertCandidate::parse("1,13,12,13,1").unwrap();
        let b = HilbertCandidate::parse("1 13  12 13 1").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.socle_degree(), 4);
        assert_eq!(a.codimension(), BigInt::from(13));
        assert!(HilbertCandidate::parse("").is_err());
        assert!(HilbertCandidate::parse("1,x,3").is_err());
        assert!(HilbertCandidate::parse("1,-2,1").is_err());
    }

    #[test]
    fn o_sequence_examples() {
        assert!(cand(&[1, 13, 12, 13, 1]).is_o_sequence());
        assert!(!cand(&[1, 2, 4]).is_o_sequence());
        assert!(!cand(&[2, 5]).is_o_sequence());
        assert!(cand(&[1]).is_o_sequence());
    }

    #[test]
    fn o_sequence_prefixes_stay_valid() {
        let h = cand(&[1, 13, 12, 13, 1]);
        for len in 1..=h.entries.len() {
            let prefix = HilbertCandidate::new(h.entries[..len].to_vec());
            assert!(prefix.is_o_sequence(), "prefix of length {len}");
        }
    }

    #[test]
    fn gorenstein_shape_examples() {
        assert!(cand(&[1, 13, 12, 13, 1]).is_gorenstein_shape());
        assert!(!cand(&[1, 3, 2, 4, 1]).is_gorenstein_shape());
        assert!(cand(&[1, 1]).is_gorenstein_shape());
        assert!(cand(&[1]).is_gorenstein_shape());
        assert!(!cand(&[1, 2, 4, 2, 1]).is_gorenstein_shape());
    }

    #[test]
    fn compare_examples() {
        let a = cand(&[1, 13, 12, 13, 1]);
        let b = cand(&[1, 13, 13, 13, 1]);
        assert_eq!(compare(&a, &b).unwrap(), CompareOutcome::Less);
        assert_eq!(compare(&b, &a).unwrap(), CompareOutcome::Greater);
        assert_eq!(compare(&a, &a).unwrap(), CompareOutcome::Equal);
        let c = cand(&[1, 20, 18, 20, 1]);
        assert!(compare(&c, &a).is_err());
        let shorter = cand(&[1, 13, 13, 1]);
        assert!(compare(&shorter, &a).is_err());
    }

    #[test]
    fn incomparable_needs_mixed_entries() {
        let a = cand(&[1, 9, 5, 7, 5, 9, 1]);
        let b = cand(&[1, 9, 7, 5, 7, 9, 1]);
        assert_eq!(compare(&a, &b).unwrap(), CompareOutcome::Incomparable);
    }

    #[test]
    fn compressed_upper_examples() {
        assert_eq!(compressed_upper(13, 2), BigInt::from(91));
        assert_eq!(compressed_upper(20, 2), BigInt::from(210));
        assert_eq!(compressed_upper(7, 1), BigInt::from(7));
    }
}
