//! Exact-arithmetic toolkit for truncated Maclaurin series.
//!
//! The crate centres on [`Series`], a truncated power series with
//! arbitrary-precision rational coefficients, and on the sign structure of
//! reciprocal and quotient series: when does `1/f(x)` have non-positive
//! coefficients past the constant term (the Kaluza sign property), and what
//! do log-convexity, hypergeometric parameter inequalities and coefficient
//! ratio monotonicity say about it.
//!
//! Everything that decides a verdict is computed in exact rational
//! arithmetic. The single exception is [`means`], which evaluates power means
//! in `f64` because the values are irrational.
//!
//! ```
//! use kaluza_core::{generators::{named_series, NamedSeries}, theorems::kaluza_sign_check};
//!
//! let f2 = named_series(NamedSeries::F2, 20);
//! assert!(kaluza_sign_check(&f2).unwrap().holds);
//! ```

pub mod error;
pub mod generators;
pub mod means;
pub mod oracle;
pub mod rational;
pub mod report;
pub mod scan;
pub mod sequence;
pub mod series;
pub mod theorems;

pub use error::{Error, Result};
pub use generators::{HypergeomParams, NamedSeries};
pub use rational::Rational;
pub use sequence::{PropertyVerdict, ShapeClass};
pub use series::Series;
pub use theorems::{Hyper4Conditions, KaluzaReport, SixParams};
