//! Exact symbolic-numeric certification toolkit for two sharpened
//! forms of the classical triangle inequality `p >= 3*sqrt(3)*r`.
//!
//! The library mechanically replays every computational step behind two
//! best-constant results for `p >= 3*sqrt(3)*r`: the `lambda`-family
//! `sqrt(3)*p >= 10r - r*(2r/R)^lambda` and the `k`-family
//! `p >= 3*sqrt(3)*r + k*(1 - (2r/R)^5)*r`.  Everything runs in exact
//! rational arithmetic; transcendental values are carried as validated
//! rational intervals, so every reported sign is a certificate rather
//! than a floating-point observation.
//!
//! Capabilities, one module each:
//!
//! - [`kernel`]: exact rationals and outward-rounded interval `ln`,
//!   `sqrt`, `exp` at arbitrary precision.
//! - [`poly`]: dense univariate polynomials over the rationals, with
//!   subresultant remainder sequences and squarefree parts.
//! - [`discrimination`]: discriminant sequences, revised sign lists and
//!   exact real/imaginary root counts.
//! - [`resultant`]: Sylvester resultants, bivariate elimination in one
//!   variable by evaluation-interpolation, and the radical-elimination
//!   identities behind the degree-80 factorization check.
//! - [`isolation`]: Sturm chains, root counting in intervals, isolation
//!   and bisection refinement to arbitrary width.
//! - [`expr`] and [`logsqrt`]: expression trees with `ln`/`sqrt`,
//!   closed-form differentiation of log/sqrt expressions and certified
//!   sign evaluation.
//! - [`analytic`]: the full monotonicity-chain and best-constant
//!   certificates for both theorems.
//! - [`suite`], [`report`], [`dataio`]: orchestration, data files and
//!   machine-readable certification reports.
//!
//! Run `cargo run --example conjecture` for an end-to-end tour, or use
//! the `certipoly` binary (`certipoly verify all`).

pub mod analytic;
pub mod dataio;
pub mod discrimination;
pub mod error;
pub mod expr;
pub mod isolation;
pub mod kernel;
pub mod logsqrt;
pub mod poly;
pub mod report;
pub mod resultant;
pub mod suite;

pub use error::Error;
pub use kernel::{PrecisionBudget, Rational, RationalInterval};
pub use poly::UnivariatePolynomial;
