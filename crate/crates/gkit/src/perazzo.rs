//! Full Perazzo algebras: closed-form Hilbert functions, codimensions, the
//! defining bidegree-(1, d-1) polynomials, and power-sum extensions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::binomial::binom_u64;
use crate::poly::{monomials_of_degree, ExactPolynomial};
use crate::sequences::HilbertCandidate;
use crate::{Error, Result};

/// Parameters of a full Perazzo algebra: type `m` (number of `u`-variables)
/// and socle degree `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerazzoParams {
    pub m: u32,
    pub d: u32,
}

impl PerazzoParams {
    pub fn new(m: u32, d: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidArgument(format!(
                "full Perazzo type must satisfy m >= 2 (got {m})"
            )));
        }
        if d < 3 {
            return Err(Error::InvalidArgument(format!(
                "full Perazzo socle degree must satisfy d >= 3 (got {d})"
            )));
        }
        Ok(Self { m, d })
    }

    /// Number of degree-(d-1) monomials in the `u`-variables:
    /// `tau = C(m + d - 2, d - 1)`.
    pub fn tau(&self) -> BigInt {
        binom_u64((self.m + self.d - 2) as u64, (self.d - 1) as u64)
    }
}

/// Codimension `m + C(m + d - 2, d - 1)` of the full Perazzo algebra.
pub fn codimension(p: PerazzoParams) -> BigInt {
    BigInt::from(p.m) + p.tau()
}

/// The full Perazzo Hilbert function: length `d + 1`, `h_0 = h_d = 1`, and
/// `h_k = C(m + k - 1, k) + C(m + d - k - 1, d - k)` for `0 < k < d` (the
/// formula is symmetric under `k <-> d - k`).
pub fn hilbert_function(p: PerazzoParams) -> HilbertCandidate {
    let (m, d) = (p.m as u64, p.d as u64);
    let mut entries = Vec::with_capacity(p.d as usize + 1);
    entries.push(BigInt::one());
    for k in 1..d {
        entries.push(binom_u64(m + k - 1, k) + binom_u64(m + d - k - 1, d - k));
    }
    entries.push(BigInt::one());
    HilbertCandidate::new(entries)
}

/// The full Perazzo polynomial `f = sum_j x_j M_j` in variables
/// `x_1..x_tau, u_1..u_m`, where `M_j` runs over the degree-(d-1) monomial
/// basis of the `u`-variables in graded lexicographic order.
pub fn full_polynomial(p: PerazzoParams) -> Result<ExactPolynomial> {
    let tau = usize::try_from(p.tau()).map_err(|_| {
        Error::InvalidArgument(format!(
            "full Perazzo polynomial for m={} d={} is too large to materialize",
            p.m, p.d
        ))
    })?;
    let m = p.m as usize;
    let num_vars = tau + m;
    let u_monomials = monomials_of_degree(m, p.d - 1);
    debug_assert_eq!(u_monomials.len(), tau);
    let mut f = ExactPolynomial::zero(num_vars);
    for (j, u_exps) in u_monomials.iter().enumerate() {
        let mut exps = vec![0u32; num_vars];
        exps[j] = 1;
        exps[tau..].copy_from_slice(u_exps);
        f.add_term(exps, BigRational::one())?;
    }
    Ok(f)
}

/// Adds `s` power-sum variables: the Hilbert function gains `s` in every
/// middle degree while the end entries stay 1.
pub fn extend_with_powers(p: PerazzoParams, s: u64) -> HilbertCandidate {
    let base = hilbert_function(p);
    let d = base.socle_degree();
    let entries = base
        .entries
        .into_iter()
        .enumerate()
        .map(|(k, h)| {
            if k == 0 || k == d {
                h
            } else {
                h + BigInt::from(s)
            }
        })
        .collect();
    HilbertCandidate::new(entries)
}

/// Strict decrease through the first half: `h_1 > h_2 > ... > h_{floor(d/2)}`.
/// Vacuously true when `d <= 3` leaves nothing to compare.
pub fn is_totally_nonunimodal(h: &HilbertCandidate) -> bool {
    let half = h.socle_degree() / 2;
    (1..half).all(|k| h.entries[k] > h.entries[k + 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(m: u32, d: u32) -> PerazzoParams {
        PerazzoParams::new(m, d).unwrap()
    }

    #[test]
    fn rejects_out_of_range_parameters() {
        assert!(PerazzoParams::new(1, 4).is_err());
        assert!(PerazzoParams::new(3, 2).is_err());
    }

    #[test]
    fn hilbert_function_worked_values() {
        assert_eq!(
            hilbert_function(params(3, 4)),
            HilbertCandidate::from_u64(&[1, 13, 12, 13, 1])
        );
        assert_eq!(
            hilbert_function(params(3, 5)),
            HilbertCandidate::from_u64(&[1, 18, 16, 16, 18, 1])
        );
        assert_eq!(
            hilbert_function(params(4, 5)),
            HilbertCandidate::from_u64(&[1, 39, 30, 30, 39, 1])
        );
        assert_eq!(
            hilbert_function(params(6, 4)),
            HilbertCandidate::from_u64(&[1, 62, 42, 62, 1])
        );
        assert_eq!(
            hilbert_function(params(3, 6)),
            HilbertCandidate::from_u64(&[1, 24, 21, 20, 21, 24, 1])
        );
    }

    #[test]
    fn codimension_worked_values() {
        assert_eq!(codimension(params(3, 4)), BigInt::from(13));
        assert_eq!(codimension(params(4, 5)), BigInt::from(39));
        assert_eq!(codimension(params(10, 5)), BigInt::from(725));
        assert_eq!(codimension(params(9, 5)), BigInt::from(504));
    }

    #[test]
    fn codimension_matches_h1() {
        for m in 2..=12 {
            for d in 3..=12 {
                let p = params(m, d);
                assert_eq!(hilbert_function(p).codimension(), codimension(p));
            }
        }
    }

    #[test]
    fn hilbert_functions_are_symmetric_o_sequences() {
        for m in 2..=12 {
            for d in 3..=12 {
                let h = hilbert_function(params(m, d));
                assert!(h.is_symmetric(), "m={m} d={d}");
                assert!(h.is_o_sequence(), "m={m} d={d}");
                assert!(h.is_gorenstein_shape(), "m={m} d={d}");
            }
        }
    }

    #[test]
    fn full_polynomial_small_cases() {
        // m=2, d=3: f = x1 u1^2 + x2 u1 u2 + x3 u2^2 in 5 variables.
        let f = full_polynomial(params(2, 3)).unwrap();
        assert_eq!(f.num_vars(), 5);
        assert_eq!(f.num_terms(), 3);
        let one = BigRational::one();
        assert_eq!(f.coefficient(&[1, 0, 0, 2, 0]), one);
        assert_eq!(f.coefficient(&[0, 1, 0, 1, 1]), one);
        assert_eq!(f.coefficient(&[0, 0, 1, 0, 2]), one);

        let f = full_polynomial(params(3, 4)).unwrap();
        assert_eq!(f.num_terms(), 10);
        assert_eq!(f.num_vars(), 13);
        assert_eq!(f.bihomogeneous_degree((10, 3)), Some((1, 3)));

        let f = full_polynomial(params(2, 4)).unwrap();
        assert_eq!(f.num_terms(), 4);
    }

    #[test]
    fn extension_adds_to_middle_entries() {
        assert_eq!(
            extend_with_powers(params(3, 4), 0),
            HilbertCandidate::from_u64(&[1, 13, 12, 13, 1])
        );
        assert_eq!(
            extend_with_powers(params(3, 4), 7),
            HilbertCandidate::from_u64(&[1, 20, 19, 20, 1])
        );
        assert_eq!(
            extend_with_powers(params(3, 5), 2),
            HilbertCandidate::from_u64(&[1, 20, 18, 18, 20, 1])
        );
    }

    #[test]
    fn total_nonunimodality_examples() {
        assert!(is_totally_nonunimodal(&HilbertCandidate::from_u64(&[
            1, 13, 12, 13, 1
        ])));
        assert!(!is_totally_nonunimodal(&HilbertCandidate::from_u64(&[
            1, 5, 7, 5, 1
        ])));
    }

    #[test]
    fn nonunimodality_threshold_exists_and_persists() {
        for d in 4..=8u32 {
            let threshold =
                (3..=40u32).find(|&m| is_totally_nonunimodal(&hilbert_function(params(m, d))));
            let threshold = threshold.unwrap_or_else(|| panic!("no threshold below 41 for d={d}"));
            for m in threshold..=40 {
                assert!(
                    is_totally_nonunimodal(&hilbert_function(params(m, d))),
                    "d={d} m={m} regressed after threshold {threshold}"
                );
            }
        }
    }
}
