//! Exact multivariate polynomials with arbitrary-precision rational
//! coefficients, indexed by exponent vectors.
//!
//! Two serialized forms are supported:
//!
//! * text, one term per line: `coeff  e1 e2 ... eN` with the coefficient an
//!   integer or `p/q`;
//! * JSON: `{"vars": N, "terms": [{"c": "3/2", "e": [1,0,2]}]}`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A polynomial as a map from exponent vectors to nonzero rational
/// coefficients.  The `BTreeMap` keeps term order deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactPolynomial {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl ExactPolynomial {
    pub fn zero(num_vars: usize) -> Self {
        Self {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigRational {
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Adds `coeff * x^exponents`; zero coefficients are never stored.
    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: BigRational) -> Result<()> {
        if exponents.len() != self.num_vars {
            return Err(Error::InvalidArgument(format!(
                "exponent vector has length {}, expected {}",
                exponents.len(),
                self.num_vars
            )));
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(exponents);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    /// Builds a monomial `x^exponents` with coefficient one.
    pub fn monomial(num_vars: usize, exponents: Vec<u32>) -> Result<Self> {
        let mut p = Self::zero(num_vars);
        p.add_term(exponents, BigRational::one())?;
        Ok(p)
    }

    /// The common total degree, or `None` when the polynomial is zero or
    /// inhomogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degree = None;
        for exps in self.terms.keys() {
            let d: u32 = exps.iter().sum();
            match degree {
                None => degree = Some(d),
                Some(prev) if prev != d => return None,
                _ => {}
            }
        }
        degree
    }

    /// Degrees in the two variable blocks of a split, when bihomogeneous.
    pub fn bihomogeneous_degree(&self, split: (usize, usize)) -> Option<(u32, u32)> {
        let (n, m) = split;
        if n + m != self.num_vars {
            return None;
        }
        let mut bidegree = None;
        for exps in self.terms.keys() {
            let d1: u32 = exps[..n].iter().sum();
            let d2: u32 = exps[n..].iter().sum();
            match bidegree {
                None => bidegree = Some((d1, d2)),
                Some(prev) if prev != (d1, d2) => return None,
                _ => {}
            }
        }
        bidegree
    }

    /// Text form, one `coeff e1 .. eN` line per term.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (exps, coeff) in &self.terms {
            let c = if coeff.denom().is_one() {
                coeff.numer().to_string()
            } else {
                format!("{}/{}", coeff.numer(), coeff.denom())
            };
            let es: Vec<String> = exps.iter().map(|e| e.to_string()).collect();
            let _ = writeln!(out, "{c} {}", es.join(" "));
        }
        out
    }

    /// Parses the text form.  Blank lines and `#` comments are skipped; the
    /// variable count is taken from the first term.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut poly: Option<ExactPolynomial> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let coeff_text = fields.next().expect("nonempty line has a first field");
            let coeff = parse_rational(coeff_text)
                .ok_or_else(|| Error::Parse(format!("line {}: bad coefficient", lineno + 1)))?;
            let mut exps = Vec::new();
            for f in fields {
                let e: u32 = f.parse().map_err(|_| {
                    Error::Parse(format!("line {}: bad exponent `{f}`", lineno + 1))
                })?;
                exps.push(e);
            }
            let p = poly.get_or_insert_with(|| ExactPolynomial::zero(exps.len()));
            p.add_term(exps, coeff)?;
        }
        poly.ok_or_else(|| Error::Parse("polynomial file contains no terms".into()))
    }

    pub fn to_json(&self) -> PolynomialJson {
        PolynomialJson {
            vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(exps, coeff)| TermJson {
                    c: if coeff.denom().is_one() {
                        coeff.numer().to_string()
                    } else {
                        format!("{}/{}", coeff.numer(), coeff.denom())
                    },
                    e: exps.clone(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &PolynomialJson) -> Result<Self> {
        let mut poly = ExactPolynomial::zero(json.vars);
        for term in &json.terms {
            let coeff = parse_rational(&term.c)
                .ok_or_else(|| Error::Parse(format!("bad coefficient `{}`", term.c)))?;
            poly.add_term(term.e.clone(), coeff)?;
        }
        Ok(poly)
    }

    /// Parses either serialized form, sniffing JSON by a leading `{`.
    pub fn parse_auto(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            let json: PolynomialJson = serde_json::from_str(text)?;
            Self::from_json(&json)
        } else {
            Self::parse_text(text)
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolynomialJson {
    pub vars: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub c: String,
    pub e: Vec<u32>,
}

fn parse_rational(text: &str) -> Option<BigRational> {
    if let Some((num, den)) = text.split_once('/') {
        let n: BigInt = num.parse().ok()?;
        let d: BigInt = den.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = text.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}

/// All exponent vectors of total degree `degree` in `num_vars` variables, in
/// graded lexicographic order (lexicographically descending within the fixed
/// degree).
pub fn monomials_of_degree(num_vars: usize, degree: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; num_vars];
    fill(&mut out, &mut current, 0, degree);
    return out;

    fn fill(out: &mut Vec<Vec<u32>>, current: &mut Vec<u32>, var: usize, remaining: u32) {
        if var + 1 == current.len() {
            current[var] = remaining;
            out.push(current.clone());
            return;
        }
        for e in (0..=remaining).rev() {
            current[var] = e;
            fill(out, current, var + 1, remaining - e);
        }
        current[var] = 0;
    }
}
