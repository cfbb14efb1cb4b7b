//! Macaulay–Matlis duality made computational: differential operators acting
//! on polynomials, catalecticant matrices, and Hilbert functions of
//! `Q/Ann(f)` as exact catalecticant ranks.
//!
//! Operators act as true derivatives (`X_i = d/dx_i`, falling-factorial
//! multipliers).  All ranks are computed over the integers by fraction-free
//! elimination after clearing denominators, so results are exact and
//! bit-identical across runs.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::{monomials_of_degree, ExactPolynomial};
use crate::sequences::HilbertCandidate;
use crate::{Error, Result};

/// Applies `alpha(d/dx_1, ..., d/dx_n)` to `f`, termwise with
/// falling-factorial multipliers.
pub fn apply_operator(alpha: &ExactPolynomial, f: &ExactPolynomial) -> Result<ExactPolynomial> {
    if alpha.num_vars() != f.num_vars() {
        return Err(Error::InvalidArgument(format!(
            "operator has {} variables, polynomial has {}",
            alpha.num_vars(),
            f.num_vars()
        )));
    }
    let mut out = ExactPolynomial::zero(f.num_vars());
    for (op_exps, op_coeff) in alpha.terms() {
        for (f_exps, f_coeff) in f.terms() {
            if let Some((exps, multiplier)) = differentiate(f_exps, op_exps) {
                out.add_term(
                    exps,
                    op_coeff * f_coeff * BigRational::from_integer(multiplier),
                )?;
            }
        }
    }
    Ok(out)
}

/// Derivative of the monomial `x^f_exps` by the operator monomial
/// `X^op_exps`: `None` when it vanishes, otherwise the surviving exponent
/// vector and the integer multiplier.
fn differentiate(f_exps: &[u32], op_exps: &[u32]) -> Option<(Vec<u32>, BigInt)> {
    let mut exps = Vec::with_capacity(f_exps.len());
    let mut multiplier = BigInt::one();
    for (&fe, &oe) in f_exps.iter().zip(op_exps) {
        if fe < oe {
            return None;
        }
        for t in 0..oe {
            multiplier *= BigInt::from(fe - t);
        }
        exps.push(fe - oe);
    }
    Some((exps, multiplier))
}

/// Rank of an integer matrix by single-step fraction-free (Bareiss)
/// elimination; every interior division is exact.
pub fn bareiss_rank(mut mat: Vec<Vec<BigInt>>) -> usize {
    let rows = mat.len();
    if rows == 0 {
        return 0;
    }
    let cols = mat[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(rank, pivot_row);
        let pivot = mat[rank][col].clone();
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = &pivot * &mat[r][c] - &mat[r][col] * &mat[rank][c];
                mat[r][c] = num / &prev;
            }
            mat[r][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Rank of a list of sparse rational rows (`(column, coefficient)` pairs):
/// drops empty rows, restricts to support columns, clears denominators per
/// row, and runs Bareiss.
fn sparse_rank(rows: &[Vec<(usize, BigRational)>]) -> usize {
    let live: Vec<&Vec<(usize, BigRational)>> = rows.iter().filter(|r| !r.is_empty()).collect();
    if live.is_empty() {
        return 0;
    }
    let mut support: Vec<usize> = live
        .iter()
        .flat_map(|r| r.iter().map(|(c, _)| *c))
        .collect();
    support.sort_unstable();
    support.dedup();
    let col_of: HashMap<usize, usize> = support.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut mat = Vec::with_capacity(live.len());
    for row in live {
        let denom_lcm = row
            .iter()
            .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
        let mut dense = vec![BigInt::zero(); support.len()];
        for (c, v) in row {
            dense[col_of[c]] = v.numer() * (&denom_lcm / v.denom());
        }
        mat.push(dense);
    }
    bareiss_rank(mat)
}

/// Image rows of the degree-`k` operator monomials acting on `f`, as sparse
/// vectors over interned image monomials.  Operators dividing no term of `f`
/// contribute an (explicitly recorded) empty row; the result equals the
/// dense computation because skipped rows are identically zero.
fn operator_image_rows(
    f: &ExactPolynomial,
    operators: &[Vec<u32>],
) -> Vec<Vec<(usize, BigRational)>> {
    let mut intern: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut rows = Vec::with_capacity(operators.len());
    for op in operators {
        let divides_some = f
            .terms()
            .any(|(fe, _)| fe.iter().zip(op).all(|(a, b)| a >= b));
        if !divides_some {
            rows.push(Vec::new());
            continue;
        }
        let mut acc: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (fe, fc) in f.terms() {
            if let Some((exps, multiplier)) = differentiate(fe, op) {
                let entry = acc.entry(exps).or_insert_with(BigRational::zero);
                *entry += fc * BigRational::from_integer(multiplier);
            }
        }
        let mut row = Vec::new();
        for (exps, coeff) in acc {
            if coeff.is_zero() {
                continue;
            }
            let next_id = intern.len();
            let id = *intern.entry(exps).or_insert(next_id);
            row.push((id, coeff));
        }
        rows.push(row);
    }
    rows
}

/// The catalecticant pairing matrix at operator degree `k`: rows indexed by
/// the degree-`k` operator monomials and columns by the degree-`(d-k)`
/// monomials, both in graded lexicographic order; the `(i, j)` entry is the
/// coefficient of column monomial `j` in (row operator `i`)(f).
#[derive(Debug, Clone)]
pub struct CatalecticantMatrix {
    pub operator_degree: u32,
    pub form_degree: u32,
    pub row_monomials: Vec<Vec<u32>>,
    pub col_monomials: Vec<Vec<u32>>,
    entries: Vec<Vec<(usize, BigRational)>>,
}

impl CatalecticantMatrix {
    /// Assembles the matrix for homogeneous `f` of degree `d >= k`.
    pub fn assemble(f: &ExactPolynomial, k: u32) -> Result<Self> {
        let d = f.homogeneous_degree().ok_or_else(|| {
            Error::InvalidArgument("polynomial must be homogeneous and nonzero".into())
        })?;
        if k > d {
            return Err(Error::InvalidArgument(format!(
                "operator degree {k} exceeds form degree {d}"
            )));
        }
        let row_monomials = monomials_of_degree(f.num_vars(), k);
        let col_monomials = monomials_of_degree(f.num_vars(), d - k);
        let col_index: HashMap<&Vec<u32>, usize> = col_monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mut entries = Vec::with_capacity(row_monomials.len());
        for op in &row_monomials {
            let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
            for (fe, fc) in f.terms() {
                if let Some((exps, multiplier)) = differentiate(fe, op) {
                    let col = col_index[&exps];
                    let entry = acc.entry(col).or_insert_with(BigRational::zero);
                    *entry += fc * BigRational::from_integer(multiplier);
                }
            }
            entries.push(
                acc.into_iter()
                    .filter(|(_, v)| !v.is_zero())
                    .collect::<Vec<_>>(),
            );
        }
        Ok(Self {
            operator_degree: k,
            form_degree: d,
            row_monomials,
            col_monomials,
            entries,
        })
    }

    pub fn entry(&self, row: usize, col: usize) -> BigRational {
        self.entries[row]
            .iter()
            .find(|(c, _)| *c == col)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn dense(&self) -> Vec<Vec<BigRational>> {
        let mut out = vec![vec![BigRational::zero(); self.col_monomials.len()]; self.entries.len()];
        for (r, row) in self.entries.iter().enumerate() {
            for (c, v) in row {
                out[r][*c] = v.clone();
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        sparse_rank(&self.entries)
    }

    /// Dense-path rank over the full column set; must agree with
    /// [`CatalecticantMatrix::rank`].
    pub fn rank_dense(&self) -> usize {
        let dense = self.dense();
        let mut mat = Vec::with_capacity(dense.len());
        for row in &dense {
            let denom_lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            mat.push(
                row.iter()
                    .map(|v| v.numer() * (&denom_lcm / v.denom()))
                    .collect::<Vec<_>>(),
            );
        }
        bareiss_rank(mat)
    }
}

/// Hilbert function of `Q/Ann(f)` for homogeneous nonzero `f` of degree
/// `d >= 1`: entry `k` is the rank of the catalecticant pairing at operator
/// degree `k`.
///
/// Uses the sparse image-row path throughout, so large variable counts never
/// materialize full monomial bases of high degree.
pub fn ann_hilbert_function(f: &ExactPolynomial) -> Result<HilbertCandidate> {
    let d = f.homogeneous_degree().ok_or_else(|| {
        Error::InvalidArgument("polynomial must be homogeneous and nonzero".into())
    })?;
    if d == 0 {
        return Err(Error::InvalidArgument(
            "polynomial must have degree >= 1".into(),
        ));
    }
    let mut entries = Vec::with_capacity(d as usize + 1);
    for k in 0..=d {
        let operators = monomials_of_degree(f.num_vars(), k);
        let rows = operator_image_rows(f, &operators);
        entries.push(BigInt::from(sparse_rank(&rows)));
    }
    Ok(HilbertCandidate::new(entries))
}

/// Variables with identically zero partial derivative.  Such variables act
/// trivially on `f`; they lower the computed `h_1` below the ambient
/// variable count and are reported rather than silently re-embedded.
pub fn zero_partial_variables(f: &ExactPolynomial) -> Vec<usize> {
    (0..f.num_vars())
        .filter(|&v| f.terms().all(|(exps, _)| exps[v] == 0))
        .collect()
}

/// Bigraded Hilbert table of `Q/Ann(f)` for `f` bihomogeneous of bidegree
/// `(d1, d2)` under the variable split `(n, m)`: maps `(i, j)` with
/// `0 <= i <= d1`, `0 <= j <= d2` to `dim A_(i,j)`, the rank of the bigraded
/// catalecticant block.
pub fn bigraded_hilbert(
    f: &ExactPolynomial,
    split: (usize, usize),
) -> Result<BTreeMap<(u32, u32), u64>> {
    let (n, m) = split;
    if n + m != f.num_vars() {
        return Err(Error::InvalidArgument(format!(
            "split {n}+{m} does not cover {} variables",
            f.num_vars()
        )));
    }
    let (d1, d2) = f.bihomogeneous_degree(split).ok_or_else(|| {
        Error::InvalidArgument("polynomial is not bihomogeneous under the split".into())
    })?;
    let mut table = BTreeMap::new();
    for i in 0..=d1 {
        for j in 0..=d2 {
            let x_part = monomials_of_degree(n, i);
            let u_part = monomials_of_degree(m, j);
            let mut operators = Vec::with_capacity(x_part.len() * u_part.len());
            for xe in &x_part {
                for ue in &u_part {
                    let mut exps = Vec::with_capacity(n + m);
                    exps.extend_from_slice(xe);
                    exps.extend_from_slice(ue);
                    operators.push(exps);
                }
            }
            let rows = operator_image_rows(f, &operators);
            table.insert((i, j), sparse_rank(&rows) as u64);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perazzo;

    fn poly_from_text(text: &str) -> ExactPolynomial {
        ExactPolynomial::parse_text(text).unwrap()
    }

    #[test]
    fn apply_operator_examples() {
        // (X1^2)(x1^4) = 12 x1^2
        let alpha = poly_from_text("1 2");
        let f = poly_from_text("1 4");
        let g = apply_operator(&alpha, &f).unwrap();
        assert_eq!(g.coefficient(&[2]), BigRational::from_integer(12.into()));
        assert_eq!(g.num_terms(), 1);

        // (X1 X2)(x1^3 + x2^3) = 0
        let alpha = poly_from_text("1 1 1");
        let f = poly_from_text("1 3 0\n1 0 3");
        assert!(apply_operator(&alpha, &f).unwrap().is_zero());

        // (X1)(full Perazzo, m=2, d=3) = u1^2
        let f = perazzo::full_polynomial(perazzo::PerazzoParams::new(2, 3).unwrap()).unwrap();
        let alpha = poly_from_text("1 1 0 0 0 0");
        let g = apply_operator(&alpha, &f).unwrap();
        assert_eq!(g.num_terms(), 1);
        assert_eq!(g.coefficient(&[0, 0, 0, 2, 0]), BigRational::one());
    }

    #[test]
    fn apply_operator_rejects_mismatched_vars() {
        let alpha = poly_from_text("1 1");
        let f = poly_from_text("1 1 1");
        assert!(apply_operator(&alpha, &f).is_err());
    }

    #[test]
    fn ann_hilbert_function_small_cases() {
        // Principal power: x^4 -> (1,1,1,1,1).
        let f = poly_from_text("1 4");
        assert_eq!(
            ann_hilbert_function(&f).unwrap(),
            HilbertCandidate::from_u64(&[1, 1, 1, 1, 1])
        );
        // x^3 + y^3 -> (1,2,2,1).
        let f = poly_from_text("1 3 0\n1 0 3");
        assert_eq!(
            ann_hilbert_function(&f).unwrap(),
            HilbertCandidate::from_u64(&[1, 2, 2, 1])
        );
    }

    #[test]
    fn ann_hilbert_rejects_bad_inputs() {
        assert!(ann_hilbert_function(&ExactPolynomial::zero(2)).is_err());
        assert!(ann_hilbert_function(&poly_from_text("1 2 0\n1 0 1")).is_err());
        assert!(ann_hilbert_function(&poly_from_text("5 0 0")).is_err());
    }

    #[test]
    fn matches_perazzo_formula_small() {
        for (m, d) in [(2u32, 3u32), (2, 4), (3, 4), (2, 5), (3, 5)] {
            let p = perazzo::PerazzoParams::new(m, d).unwrap();
            let f = perazzo::full_polynomial(p).unwrap();
            assert_eq!(
                ann_hilbert_function(&f).unwrap(),
                perazzo::hilbert_function(p),
                "m={m} d={d}"
            );
        }
    }

    #[test]
    fn catalecticant_matrix_shape_and_duality() {
        let p = perazzo::PerazzoParams::new(2, 3).unwrap();
        let f = perazzo::full_polynomial(p).unwrap();
        for k in 0..=3u32 {
            let cat = CatalecticantMatrix::assemble(&f, k).unwrap();
            let dual = CatalecticantMatrix::assemble(&f, 3 - k).unwrap();
            assert_eq!(cat.rank(), dual.rank(), "duality at k={k}");
            assert_eq!(cat.rank(), cat.rank_dense(), "sparse==dense at k={k}");
        }
        let cat = CatalecticantMatrix::assemble(&f, 1).unwrap();
        assert_eq!(cat.row_monomials.len(), 5);
        assert_eq!(cat.col_monomials.len(), 15);
        // entry(X1 row, u1^2 column) = 1: X1(f) = u1^2.
        let row = cat
            .row_monomials
            .iter()
            .position(|m| m == &[1, 0, 0, 0, 0])
            .unwrap();
        let col = cat
            .col_monomials
            .iter()
            .position(|m| m == &[0, 0, 0, 2, 0])
            .unwrap();
        assert_eq!(cat.entry(row, col), BigRational::one());
    }

    #[test]
    fn rational_coefficients_are_exact() {
        // 3/2 x^2 y + 5/7 y^3: rank at k=1 is 2.
        let f = poly_from_text("3/2 2 1\n5/7 0 3");
        let cat = CatalecticantMatrix::assemble(&f, 1).unwrap();
        assert_eq!(cat.rank(), 2);
        assert_eq!(cat.rank(), cat.rank_dense());
    }

    #[test]
    fn bigraded_table_small_case() {
        let p = perazzo::PerazzoParams::new(2, 3).unwrap();
        let f = perazzo::full_polynomial(p).unwrap();
        let table = bigraded_hilbert(&f, (3, 2)).unwrap();
        assert_eq!(table[&(0, 0)], 1);
        assert_eq!(table[&(0, 1)], 2);
        // Row/column sums reproduce the total Hilbert function.
        let h = ann_hilbert_function(&f).unwrap();
        for k in 0..=3u32 {
            let total: u64 = table
                .iter()
                .filter(|((i, j), _)| i + j == k)
                .map(|(_, v)| *v)
                .sum();
            assert_eq!(BigInt::from(total), h.entries[k as usize], "degree {k}");
        }
    }

    #[test]
    fn bigraded_rejects_bad_split() {
        let f = poly_from_text("1 3 0\n1 0 3");
        assert!(bigraded_hilbert(&f, (1, 2)).is_err());
        // x^3 + y^3 is not bihomogeneous under (1, 1).
        assert!(bigraded_hilbert(&f, (1, 1)).is_err());
    }

    #[test]
    fn zero_partial_detection() {
        let f = poly_from_text("1 3 0 0\n1 0 3 0");
        assert_eq!(zero_partial_variables(&f), vec![2]);
    }

    #[test]
    fn bareiss_rank_basics() {
        let m = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect()
        };
        assert_eq!(bareiss_rank(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(bareiss_rank(m(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(bareiss_rank(m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(bareiss_rank(m(&[&[0, 5, 1], &[0, 0, 3]])), 2);
        assert_eq!(bareiss_rank(Vec::new()), 0);
    }

    #[test]
    fn ranks_are_deterministic() {
        let p = perazzo::PerazzoParams::new(3, 4).unwrap();
        let f = perazzo::full_polynomial(p).unwrap();
        let first = ann_hilbert_function(&f).unwrap();
        let second = ann_hilbert_function(&f).unwrap();
        assert_eq!(first, second);
    }
}
