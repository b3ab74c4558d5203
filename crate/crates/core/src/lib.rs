//! Exact binomial sums `a(n, m, k, z)`, the kernel tables `s(n, k, a, b)`,
//! the polynomial families `p_m`, `q_m`, `F_n`, `L_n`, and mechanical
//! verification of the shift-operator identities that tie them together.
//!
//! Everything is computed with exact arithmetic: arbitrary-precision
//! rationals for scalars, Laurent polynomials in `z` for the symbolic sum
//! parameter, and dense polynomials in `x` for shift operators.
//!
//! ```
//! use binsum::sums::a_signed;
//! use binsum::polyfam::p_poly;
//! use binsum::verify::apply_shift_poly;
//! use binsum::exact::Rational;
//!
//! // x^2 - x - 1 annihilates a(n, 5, 0) = F_{n+1}
//! let op = p_poly(2, &Rational::from_integer((-1).into()), &Rational::from_integer(0.into()));
//! let seq = |n: usize| Rational::from_integer(a_signed(n as u64, 5, 0));
//! assert_eq!(apply_shift_poly(&op, &seq, 7), Rational::from_integer(0.into()));
//! ```

pub mod cli;
pub mod error;
pub mod exact;
pub mod kernel;
pub mod polyfam;
pub mod sums;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{binomial, LaurentPoly, Rational, XPoly};
