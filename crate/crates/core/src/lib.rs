//! Exact-arithmetic toolkit for Diophantine equations over triangular
//! numbers `t_n = n(n+1)/2` and tetrahedral numbers `T_n = n(n+1)(n+2)/6`.
//!
//! The crate is organized in four layers:
//!
//! * [`figurate`] — arbitrary-precision integer kernel: figurate evaluation
//!   and inversion, integer roots, digit expansions, palindrome tests.
//! * [`polyring`] — sparse multivariate polynomials and rational functions
//!   with exact rational coefficients; every algebraic identity shipped by
//!   the crate is verified symbolically in this ring.
//! * [`families`] — a registry of constructive solution families (Pell-style
//!   recurrences, closed-form parametrizations, palindrome constructions),
//!   each emitting exactly verified [`families::SolutionRecord`]s, plus the
//!   symbolic identity registry and a correction ledger for formulas whose
//!   published form is refuted by their own worked examples.
//! * [`search`] — exhaustive, doubly verified searches over the bounded
//!   ranges behind the crate's reproduced solution counts.
//!
//! All arithmetic is exact; there is no floating-point fallback anywhere in
//! a result path.

pub mod error;
pub mod families;
pub mod figurate;
pub mod polyring;
pub mod search;

pub use error::{Error, Result};
pub use figurate::{Int, Rat};
