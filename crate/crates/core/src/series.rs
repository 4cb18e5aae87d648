//! Truncated power series over exact rationals.
//!
//! A [`Series`] of order `N` stores the coefficients `a_0..=a_N` of
//! `sum a_n x^n`; everything beyond `x^N` is unknown, not zero. Binary
//! operations require equal orders and never truncate silently; use
//! [`Series::resized`] to change the order explicitly.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{format_rational, serde_str, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Builds a series from `a_0..=a_N`. The list must be non-empty.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::TooShort { needed: 1, got: 0 });
        }
        Ok(Series { coeffs })
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        Series {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| Rational::zero())
    }

    /// `1 + 0x + ... + 0x^N`.
    pub fn unit(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    /// Truncates to `order`, or extends with explicit zero coefficients.
    pub fn resized(&self, order: usize) -> Series {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Rational::zero());
        Series { coeffs }
    }

    pub fn is_unit(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn same_order(&self, other: &Series) -> Result<usize> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(self.order())
    }

    pub fn scale(&self, alpha: &Rational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| alpha * a).collect(),
        }
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        linear_combine(&Rational::one(), self, &Rational::one(), other)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("series serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Series> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(c))?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    order: usize,
    #[serde(with = "serde_str::vec")]
    coeffs: Vec<Rational>,
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesJson {
            order: self.order(),
            coeffs: self.coeffs.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Series {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SeriesJson::deserialize(d)?;
        if raw.coeffs.len() != raw.order + 1 {
            return Err(D::Error::custom(format!(
                "order {} needs {} coefficients, found {}",
                raw.order,
                raw.order + 1,
                raw.coeffs.len()
            )));
        }
        Ok(Series { coeffs: raw.coeffs })
    }
}

/// `alpha*f + beta*g`, termwise.
pub fn linear_combine(alpha: &Rational, f: &Series, beta: &Rational, g: &Series) -> Result<Series> {
    f.same_order(g)?;
    Ok(Series {
        coeffs: f
            .coeffs
            .iter()
            .zip(&g.coeffs)
            .map(|(a, b)| alpha * a + beta * b)
            .collect(),
    })
}

/// Cauchy product `c_n = sum_{k<=n} a_k b_{n-k}`, truncated to the common order.
pub fn cauchy_product(f: &Series, g: &Series) -> Result<Series> {
    let order = f.same_order(g)?;
    Ok(Series::from_fn(order, |n| {
        (0..=n).fold(Rational::zero(), |acc, k| acc + &f.coeffs[k] * &g.coeffs[n - k])
    }))
}

/// `f^k` by repeated Cauchy products; `f^0` is the unit series.
pub fn power_integer(f: &Series, k: u32) -> Series {
    let mut acc = Series::unit(f.order());
    for _ in 0..k {
        acc = cauchy_product(&acc, f).expect("orders match");
    }
    acc
}

/// Coefficients of `1/g`: `q_0 = 1/b_0`, `q_n = -(sum_{k=1}^n b_k q_{n-k}) / b_0`.
pub fn reciprocal(g: &Series) -> Result<Series> {
    quotient(&Series::unit(g.order()), g)
}

/// Coefficients of `f/g`: `q_n = (a_n - sum_{k=0}^{n-1} q_k b_{n-k}) / b_0`.
pub fn quotient(f: &Series, g: &Series) -> Result<Series> {
    let order = f.same_order(g)?;
    let b0 = &g.coeffs[0];
    if b0.is_zero() {
        return Err(Error::NonInvertible);
    }
    let inv_b0 = b0.recip();
    let mut q: Vec<Rational> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = f.coeffs[n].clone();
        for (k, qk) in q.iter().enumerate() {
            acc -= qk * &g.coeffs[n - k];
        }
        q.push(acc * &inv_b0);
    }
    Ok(Series { coeffs: q })
}

/// Termwise product `a_n b_n`.
pub fn hadamard_product(f: &Series, g: &Series) -> Result<Series> {
    f.same_order(g)?;
    Ok(Series {
        coeffs: f.coeffs.iter().zip(&g.coeffs).map(|(a, b)| a * b).collect(),
    })
}

/// Row `n` of Pascal's triangle.
fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    for k in 0..=n {
        row.push(c.clone());
        c = c * BigInt::from(n - k) / BigInt::from(k + 1);
    }
    row
}

/// `u_n = sum_k C(n,k) a_k b_{n-k}`.
pub fn binomial_convolution(f: &Series, g: &Series) -> Result<Series> {
    let order = f.same_order(g)?;
    Ok(Series::from_fn(order, |n| {
        binomial_row(n)
            .into_iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (k, c)| {
                acc + Rational::from_integer(c) * &f.coeffs[k] * &g.coeffs[n - k]
            })
    }))
}

/// `(p, k) / k!` for `k = 0..=order`.
fn pochhammer_over_factorial(p: &Rational, order: usize) -> Vec<Rational> {
    let mut w = Vec::with_capacity(order + 1);
    let mut cur = Rational::one();
    for k in 0..=order {
        w.push(cur.clone());
        cur = cur * (p + Rational::from_integer(k.into())) / Rational::from_integer((k + 1).into());
    }
    w
}

/// `v_n = sum_k (alpha,k)(beta,n-k) / (k!(n-k)!) a_k b_{n-k}` with
/// `alpha, beta > 0` and `alpha + beta = 1`.
pub fn davenport_polya_convolution(
    f: &Series,
    g: &Series,
    alpha: &Rational,
    beta: &Rational,
) -> Result<Series> {
    let order = f.same_order(g)?;
    if !alpha.is_positive() || !beta.is_positive() {
        return Err(Error::InvalidParameter(format!(
            "alpha and beta must be positive, got {} and {}",
            format_rational(alpha),
            format_rational(beta)
        )));
    }
    if !(alpha + beta).is_one() {
        return Err(Error::InvalidParameter(format!(
            "alpha + beta must equal 1, got {}",
            format_rational(&(alpha + beta))
        )));
    }
    let wa = pochhammer_over_factorial(alpha, order);
    let wb = pochhammer_over_factorial(beta, order);
    Ok(Series::from_fn(order, |n| {
        (0..=n).fold(Rational::zero(), |acc, k| {
            acc + &wa[k] * &wb[n - k] * &f.coeffs[k] * &g.coeffs[n - k]
        })
    }))
}

/// Coefficients of `(1/x) * integral_0^x f`, i.e. `a_n / (n+1)`.
pub fn integrate_termwise(f: &Series) -> Series {
    Series {
        coeffs: f
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, a)| a / Rational::from_integer((n + 1).into()))
            .collect(),
    }
}

/// `f'`, whose order is one less than `f`'s.
pub fn differentiate(f: &Series) -> Result<Series> {
    if f.order() == 0 {
        return Err(Error::OrderTooLow { needed: 1, got: 0 });
    }
    Ok(Series {
        coeffs: f.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(n, a)| a * Rational::from_integer((n + 1).into()))
            .collect(),
    })
}

/// `f^exponent` for `f_0 = 1` and any rational exponent.
///
/// From `f g' = p f' g` with `g = f^p`:
/// `n g_n = sum_{k=1}^n (p k - (n - k)) f_k g_{n-k}`, `g_0 = 1`.
pub fn power_rational(f: &Series, exponent: &Rational) -> Result<Series> {
    if !f.coeffs[0].is_one() {
        return Err(Error::NormalizeFirst(f.coeffs[0].clone()));
    }
    let mut g: Vec<Rational> = Vec::with_capacity(f.coeffs.len());
    g.push(Rational::one());
    for n in 1..=f.order() {
        let mut acc = Rational::zero();
        for k in 1..=n {
            let w = exponent * Rational::from_integer(k.into()) - Rational::from_integer((n - k).into());
            acc += w * &f.coeffs[k] * &g[n - k];
        }
        g.push(acc / Rational::from_integer(n.into()));
    }
    Ok(Series { coeffs: g })
}

/// `sum_{n<=N} a_n x^n`, exactly (Horner).
pub fn evaluate_partial_sum(f: &Series, x: &Rational) -> Rational {
    f.coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, a| acc * x + a)
}
