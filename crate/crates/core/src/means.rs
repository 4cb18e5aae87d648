//! Power means `m(a, b, t) = ((a^t + b^t)/2)^(1/t)` in `f64`, and the
//! counterexample showing that `a_n <= m(a_{n-1}, a_{n+1}, t)` with
//! `t >= 1/100` does not give the Kaluza sign property.
//!
//! The mean is irrational for the parameters of interest, so this module is
//! the only inexact one. The counterexample's decisive fact, the sign of
//! coefficient 2 of the reciprocal, is still computed exactly.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{format_rational, rat, serde_str, to_decimal_string, to_f64, Rational};
use crate::sequence::PropertyVerdict;
use crate::series::{reciprocal, Series};

/// Absolute slack used when comparing `a_n` against a power mean.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeanParams {
    a: f64,
    b: f64,
    t: f64,
}

impl MeanParams {
    pub fn new(a: f64, b: f64, t: f64) -> Result<Self> {
        for (name, v) in [("a", a), ("b", b), ("t", t)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidParameter(format!("{name} = {v} must be positive and finite")));
            }
        }
        Ok(MeanParams { a, b, t })
    }
}

/// `((a^t + b^t)/2)^(1/t)`.
///
/// For `|t ln a|, |t ln b| < 1` the mean is evaluated as
/// `exp(ln_1p((expm1(t ln a) + expm1(t ln b))/2) / t)`, which keeps full
/// relative precision as `t -> 0`. Otherwise a log-sum-exp form avoids
/// overflow of `a^t`.
pub fn power_mean(p: &MeanParams) -> f64 {
    let (la, lb) = (p.t * p.a.ln(), p.t * p.b.ln());
    let log_mean = if la.abs() < 1.0 && lb.abs() < 1.0 {
        (0.5 * (la.exp_m1() + lb.exp_m1())).ln_1p()
    } else {
        let (hi, lo) = if la >= lb { (la, lb) } else { (lb, la) };
        hi + (lo - hi).exp().ln_1p() - std::f64::consts::LN_2
    };
    (log_mean / p.t).exp()
}

/// `a_n <= m(a_{n-1}, a_{n+1}, t) + tolerance` for `1 <= n <= len-2`.
/// Witness values are `(a_{n-1}, a_n, a_{n+1})`.
pub fn kaluza4_condition_check(seq: &[Rational], t: f64, tolerance: f64) -> Result<PropertyVerdict> {
    if let Some(index) = seq.iter().position(|a| !a.is_positive()) {
        return Err(Error::NonPositive {
            what: "power-mean condition needs a positive sequence",
            index,
            value: seq[index].clone(),
        });
    }
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::InvalidParameter(format!("t = {t} must be positive")));
    }
    for n in 1..seq.len().saturating_sub(1) {
        let m = power_mean(&MeanParams::new(to_f64(&seq[n - 1]), to_f64(&seq[n + 1]), t)?);
        if to_f64(&seq[n]) > m + tolerance {
            return Ok(PropertyVerdict::fail(
                n,
                vec![seq[n - 1].clone(), seq[n].clone(), seq[n + 1].clone()],
            ));
        }
    }
    Ok(PropertyVerdict::pass())
}

/// `q0 + sum_{n>=1} x^n / n` truncated at `order`.
pub fn counterexample_series(q0: &Rational, order: usize) -> Series {
    Series::from_fn(order, |n| if n == 0 { q0.clone() } else { rat(1, n as i64) })
}

#[derive(Clone, Debug, Serialize)]
pub struct Theorem2Report {
    #[serde(with = "serde_str")]
    pub q0: Rational,
    #[serde(with = "serde_str")]
    pub t: Rational,
    pub tolerance: f64,
    /// The power-mean condition over the coefficient prefix.
    pub mean_condition: PropertyVerdict,
    /// `m(q0, 1/2, t)`, the mean bounding `a_1 = 1`.
    pub mean_at_first_index: f64,
    pub reciprocal: Series,
    /// Sign of reciprocal coefficient 2, decided exactly.
    pub q2_positive: bool,
    /// Reciprocal coefficients 0..=2 at five significant digits.
    pub decimals: Vec<String>,
    /// The mean condition holds and the reciprocal has a positive
    /// coefficient past the constant term.
    pub counterexample: bool,
}

/// Builds `q0 + sum x^n/n`, checks the power-mean condition at `t` and
/// looks for a positive reciprocal coefficient. The default `q0 = 1999/1000`
/// and `t = 1/100` reproduce the classic counterexample.
pub fn theorem2_verify(order: usize, q0: &Rational, t: &Rational, tolerance: f64) -> Result<Theorem2Report> {
    if order < 4 {
        return Err(Error::OrderTooLow { needed: 4, got: order });
    }
    if !q0.is_positive() || !t.is_positive() {
        return Err(Error::InvalidParameter(format!(
            "q0 = {} and t = {} must be positive",
            format_rational(q0),
            format_rational(t)
        )));
    }
    let q = counterexample_series(q0, order);
    let tf = to_f64(t);
    let mean_condition = kaluza4_condition_check(q.coeffs(), tf, tolerance)?;
    let mean_at_first_index = power_mean(&MeanParams::new(to_f64(q0), 0.5, tf)?);
    let reciprocal = reciprocal(&q)?;
    let q2_positive = reciprocal.coeff(2).is_positive();
    let any_positive = reciprocal.coeffs()[1..].iter().any(Signed::is_positive);
    let decimals = reciprocal.coeffs()[..3]
        .iter()
        .map(|c| if c.is_zero() { "0".into() } else { to_decimal_string(c, 5) })
        .collect();
    Ok(Theorem2Report {
        q0: q0.clone(),
        t: t.clone(),
        tolerance,
        counterexample: mean_condition.holds() && any_positive,
        mean_condition,
        mean_at_first_index,
        reciprocal,
        q2_positive,
        decimals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn m(a: f64, b: f64, t: f64) -> f64 {
        power_mean(&MeanParams::new(a, b, t).unwrap())
    }

    #[test]
    fn mean_examples() {
        for t in [1e-6, 0.01, 0.5, 1.0, 3.0, 50.0] {
            assert!((m(2.5, 2.5, t) - 2.5).abs() <= 2.5 * 1e-12, "t = {t}");
        }
        assert!((m(1.0, 4.0, 1.0) - 2.5).abs() < 1e-14);
        assert!((m(1.999, 0.5, 0.01) - 1.00215).abs() < 1e-5);
    }

    #[test]
    fn mean_small_t_approaches_geometric_mean() {
        assert!((m(0.1, 10.0, 1e-6) - 1.0).abs() < 1e-4);
        assert!((m(2.0, 8.0, 1e-9) - 4.0).abs() < 1e-6);
    }

    #[test]
    fn mean_large_t_does_not_overflow() {
        let v = m(1e5, 2.0, 200.0);
        assert!(v.is_finite() && v < 1e5 && v > 0.99 * 1e5);
    }

    #[test]
    fn mean_rejects_non_positive() {
        assert!(MeanParams::new(0.0, 1.0, 1.0).is_err());
        assert!(MeanParams::new(1.0, -1.0, 1.0).is_err());
        assert!(MeanParams::new(1.0, 1.0, 0.0).is_err());
        assert!(MeanParams::new(f64::NAN, 1.0, 1.0).is_err());
    }

    #[test]
    fn kaluza4_examples() {
        let q = counterexample_series(&rat(1999, 1000), 4);
        assert!(kaluza4_condition_check(q.coeffs(), 0.01, DEFAULT_TOLERANCE).unwrap().holds());
        let geo: Vec<Rational> = (0..8).map(|n| rat(3, 1) * rat(2, 5).pow(n)).collect();
        for t in [0.01, 1.0, 4.0] {
            assert!(kaluza4_condition_check(&geo, t, DEFAULT_TOLERANCE).unwrap().holds());
        }
        let r = kaluza4_condition_check(&[int(1), int(10), int(1)], 1.0, DEFAULT_TOLERANCE).unwrap();
        assert_eq!(r.witness_index(), Some(1));
        assert!(kaluza4_condition_check(&[int(1), int(0), int(1)], 1.0, DEFAULT_TOLERANCE).is_err());
    }

    #[test]
    fn theorem2_default() {
        let r = theorem2_verify(4, &rat(1999, 1000), &rat(1, 100), DEFAULT_TOLERANCE).unwrap();
        assert!(r.mean_condition.holds());
        assert!(r.q2_positive && r.counterexample);
        assert_eq!(r.reciprocal.coeff(0), &rat(1000, 1999));
        assert_eq!(r.reciprocal.coeff(1), &rat(-1_000_000, 1999 * 1999));
        // q2 = (2 - q0) / (2 q0^3) = 500000 / 1999^3
        assert_eq!(r.reciprocal.coeff(2), &rat(500_000, 1999 * 1999 * 1999));
        assert_eq!(r.decimals, vec!["0.50025", "-0.25025", "0.000062594"]);
        assert!((r.mean_at_first_index - 1.00215).abs() < 1e-4);
    }

    #[test]
    fn theorem2_needs_order_four() {
        assert!(theorem2_verify(3, &rat(1999, 1000), &rat(1, 100), DEFAULT_TOLERANCE).is_err());
    }

    #[test]
    fn larger_constant_allows_smaller_t() {
        let t = rat(1, 1000);
        let r = theorem2_verify(6, &rat(19999, 10000), &t, DEFAULT_TOLERANCE).unwrap();
        assert!(r.counterexample);
        let r = theorem2_verify(6, &rat(1999, 1000), &t, DEFAULT_TOLERANCE).unwrap();
        assert!(!r.mean_condition.holds());
    }
}
