//! Exact-arithmetic toolkit for Hilbert functions of Artinian Gorenstein
//! algebras.
//!
//! What lives where:
//!
//! * [`binomial`] — Macaulay binomial-expansion calculus: the unique
//!   `i`-binomial decomposition of an integer, the shifted-expansion
//!   operators, and the classical Macaulay / Green / Gotzmann growth bounds.
//! * [`sequences`] — predicates on candidate Hilbert functions: O-sequence
//!   validity, symmetric Gorenstein shape, the componentwise partial order,
//!   and the compressed-algebra ceiling.
//! * [`perazzo`] — full Perazzo algebras: closed-form Hilbert functions,
//!   codimensions, the defining bigraded polynomials, and power-sum
//!   extensions.
//! * [`poly`] / [`apolarity`] — exact multivariate polynomials over the
//!   rationals, differential-operator application, and Hilbert functions of
//!   `Q/Ann(f)` via catalecticant ranks.
//! * [`elimination`] — sound non-Gorenstein certificates: closed-form
//!   socle-degree-4/5 tests and a branch-and-prune generic-linear-section
//!   search.
//! * [`delta`] — bookkeeping of `delta(r) = r - mu(r)` intervals with
//!   provenance separating recomputed bounds from cited facts.
//! * [`asymptotics`] — the inductive lower-bound chain for minimal entries
//!   and high-precision evaluation of the limiting constant.
//! * [`cli`] / [`reproduce`] — the `gkit` command-line front end and the
//!   regression suite behind `gkit reproduce`.
//!
//! Everything is exact: integers are arbitrary precision, coefficients are
//! rationals, and every bound or rank is bit-reproducible across runs.

pub mod apolarity;
pub mod asymptotics;
pub mod binomial;
pub mod cli;
pub mod decimal;
pub mod delta;
pub mod elimination;
pub mod perazzo;
pub mod poly;
pub mod reproduce;
pub mod sequences;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not comparable family: {0}")]
    NotComparable(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
