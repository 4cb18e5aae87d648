//! Named example series and Gaussian hypergeometric coefficients.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, rat, serde_str, Rational};
use crate::series::Series;

/// Rising factorial `(a, n) = a (a+1) ... (a+n-1)`, with `(a, 0) = 1`.
pub fn pochhammer(a: &Rational, n: usize) -> Rational {
    (0..n).fold(Rational::one(), |acc, k| acc * (a + int(k as i64)))
}

/// Parameters `(a, b; c)` of `2F1(a, b; c; x)`. `c` is never zero or a
/// negative integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergeomParams {
    #[serde(with = "serde_str")]
    a: Rational,
    #[serde(with = "serde_str")]
    b: Rational,
    #[serde(with = "serde_str")]
    c: Rational,
}

impl HypergeomParams {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if c.is_zero() || (c.is_integer() && c.is_negative()) {
            return Err(Error::InvalidHypergeomC(c));
        }
        Ok(HypergeomParams { a, b, c })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }
}

impl fmt::Display for HypergeomParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}; {})",
            format_rational(&self.a),
            format_rational(&self.b),
            format_rational(&self.c)
        )
    }
}

/// `alpha_n = (a,n)(b,n) / ((c,n) n!)` for `n = 0..=order`, built with the
/// term ratio `alpha_{n+1}/alpha_n = (a+n)(b+n) / ((c+n)(n+1))`.
pub fn gauss_2f1(params: &HypergeomParams, order: usize) -> Series {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut cur = Rational::one();
    for n in 0..=order {
        coeffs.push(cur.clone());
        let n = int(n as i64);
        cur = cur * (&params.a + &n) * (&params.b + &n) / ((&params.c + &n) * (n + Rational::one()));
    }
    Series::new(coeffs).expect("non-empty")
}

/// The example series used throughout the crate's documentation and report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NamedSeries {
    /// `sum (2^n + 1)/2 x^n`
    F1,
    /// `-log(1-x)/x = 2F1(1,1;2;x)`
    F2,
    /// `2F1(1/2,1/2;1;x)`
    F3,
    /// `1 + 77/80 x + 19/20 x^2 + 3/2 x^3 + 5/2 x^4 + 9/2 x^5 + sum_{n>=6} (2^{n-2}+1)/2 x^n`
    F4,
    /// `1 + sum_{n>=1} x^n / n`
    F5,
    Cosh,
    Cos,
    /// `sinh(x)/x`
    Sinhc,
    /// `sin(x)/x`
    Sinc,
    /// `1999/1000 + sum_{n>=1} x^n / n`
    Thm2q,
}

impl NamedSeries {
    pub const ALL: [NamedSeries; 10] = [
        NamedSeries::F1,
        NamedSeries::F2,
        NamedSeries::F3,
        NamedSeries::F4,
        NamedSeries::F5,
        NamedSeries::Cosh,
        NamedSeries::Cos,
        NamedSeries::Sinhc,
        NamedSeries::Sinc,
        NamedSeries::Thm2q,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedSeries::F1 => "f1",
            NamedSeries::F2 => "f2",
            NamedSeries::F3 => "f3",
            NamedSeries::F4 => "f4",
            NamedSeries::F5 => "f5",
            NamedSeries::Cosh => "cosh",
            NamedSeries::Cos => "cos",
            NamedSeries::Sinhc => "sinhc",
            NamedSeries::Sinc => "sinc",
            NamedSeries::Thm2q => "thm2q",
        }
    }
}

impl fmt::Display for NamedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedSeries {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedSeries::ALL
            .into_iter()
            .find(|n| n.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownSeries(s.to_string()))
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn pow2(n: usize) -> BigInt {
    BigInt::one() << n
}

/// `sum_n s(n) x^{2n} / m(n)!`-style even series, where `den(n)` gives the
/// factorial argument for the coefficient of `x^{2n}`.
fn even_series(order: usize, den: impl Fn(usize) -> usize, alternating: bool) -> Series {
    Series::from_fn(order, |k| {
        if k.is_odd() {
            return Rational::zero();
        }
        let n = k / 2;
        let sign = if alternating && n.is_odd() { -1 } else { 1 };
        Rational::new(BigInt::from(sign), factorial(den(n)))
    })
}

/// Coefficients `a_0..=a_order` of the named series.
pub fn named_series(name: NamedSeries, order: usize) -> Series {
    match name {
        NamedSeries::F1 => Series::from_fn(order, |n| Rational::new(pow2(n) + 1, BigInt::from(2))),
        NamedSeries::F2 => Series::from_fn(order, |n| rat(1, n as i64 + 1)),
        NamedSeries::F3 => gauss_2f1(
            &HypergeomParams::new(rat(1, 2), rat(1, 2), int(1)).expect("valid"),
            order,
        ),
        NamedSeries::F4 => {
            let head = [rat(1, 1), rat(77, 80), rat(19, 20), rat(3, 2), rat(5, 2), rat(9, 2)];
            Series::from_fn(order, |n| match head.get(n) {
                Some(v) => v.clone(),
                None => Rational::new(pow2(n - 2) + 1, BigInt::from(2)),
            })
        }
        NamedSeries::F5 => Series::from_fn(order, |n| if n == 0 { int(1) } else { rat(1, n as i64) }),
        NamedSeries::Cosh => even_series(order, |n| 2 * n, false),
        NamedSeries::Cos => even_series(order, |n| 2 * n, true),
        NamedSeries::Sinhc => even_series(order, |n| 2 * n + 1, false),
        NamedSeries::Sinc => even_series(order, |n| 2 * n + 1, true),
        NamedSeries::Thm2q => Series::from_fn(order, |n| {
            if n == 0 {
                rat(1999, 1000)
            } else {
                rat(1, n as i64)
            }
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::reciprocal;

    fn v(xs: &[(i64, i64)]) -> Vec<Rational> {
        xs.iter().map(|&(n, d)| rat(n, d)).collect()
    }

    fn hp(a: Rational, b: Rational, c: Rational) -> HypergeomParams {
        HypergeomParams::new(a, b, c).unwrap()
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&rat(7, 3), 0), int(1));
        assert_eq!(pochhammer(&rat(1, 2), 2), rat(3, 4));
        assert_eq!(pochhammer(&int(3), 3), int(60));
        assert_eq!(pochhammer(&int(-2), 3), int(0));
    }

    #[test]
    fn gauss_2f1_examples() {
        let s = gauss_2f1(&hp(int(3), int(3), int(6)), 4);
        assert_eq!(s.coeffs(), v(&[(1, 1), (3, 2), (12, 7), (25, 14), (25, 14)]));
        let s = gauss_2f1(&hp(rat(1, 2), rat(1, 2), int(1)), 3);
        assert_eq!(s.coeffs(), v(&[(1, 1), (1, 4), (9, 64), (25, 256)]));
        let s = gauss_2f1(&hp(rat(5, 7), int(0), rat(-1, 3)), 5);
        assert!(s.is_unit());
    }

    #[test]
    fn gauss_2f1_matches_pochhammer_definition() {
        let p = hp(rat(1, 4), rat(7, 2), rat(-3, 4));
        let s = gauss_2f1(&p, 12);
        for n in 0..=12 {
            let direct = pochhammer(p.a(), n) * pochhammer(p.b(), n)
                / (pochhammer(p.c(), n) * Rational::from_integer(factorial(n)));
            assert_eq!(s.coeff(n), &direct, "n = {n}");
        }
    }

    #[test]
    fn invalid_c_rejected() {
        for c in [int(0), int(-1), int(-7)] {
            assert!(matches!(
                HypergeomParams::new(int(1), int(1), c),
                Err(Error::InvalidHypergeomC(_))
            ));
        }
        assert!(HypergeomParams::new(int(-2), int(1), rat(-1, 2)).is_ok());
    }

    #[test]
    fn named_examples() {
        assert_eq!(named_series(NamedSeries::F1, 3).coeffs(), v(&[(1, 1), (3, 2), (5, 2), (9, 2)]));
        assert_eq!(
            named_series(NamedSeries::Sinc, 4).coeffs(),
            v(&[(1, 1), (0, 1), (-1, 6), (0, 1), (1, 120)])
        );
        assert_eq!(named_series(NamedSeries::F5, 3).coeffs(), v(&[(1, 1), (1, 1), (1, 2), (1, 3)]));
        assert_eq!(
            named_series(NamedSeries::F4, 7).coeffs(),
            v(&[(1, 1), (77, 80), (19, 20), (3, 2), (5, 2), (9, 2), (17, 2), (33, 2)])
        );
        assert_eq!(
            named_series(NamedSeries::Thm2q, 3).coeffs(),
            v(&[(1999, 1000), (1, 1), (1, 2), (1, 3)])
        );
        assert_eq!(
            named_series(NamedSeries::Cos, 6).coeffs(),
            v(&[(1, 1), (0, 1), (-1, 2), (0, 1), (1, 24), (0, 1), (-1, 720)])
        );
    }

    #[test]
    fn name_round_trip() {
        for n in NamedSeries::ALL {
            assert_eq!(n.name().parse::<NamedSeries>().unwrap(), n);
        }
        assert!(matches!("f9".parse::<NamedSeries>(), Err(Error::UnknownSeries(_))));
    }

    #[test]
    fn f2_and_f3_are_hypergeometric() {
        assert_eq!(named_series(NamedSeries::F2, 25), gauss_2f1(&hp(int(1), int(1), int(2)), 25));
        assert_eq!(
            named_series(NamedSeries::F3, 25),
            gauss_2f1(&hp(rat(1, 2), rat(1, 2), int(1)), 25)
        );
    }

    #[test]
    fn ratio_recurrence_holds() {
        for p in [hp(int(3), int(3), int(6)), hp(rat(1, 4), rat(2, 3), rat(5, 2)), hp(int(-3), int(2), rat(1, 2))] {
            let s = gauss_2f1(&p, 20);
            for n in 0..20 {
                let k = int(n as i64);
                let lhs = s.coeff(n + 1) * (p.c() + &k) * (&k + int(1));
                let rhs = s.coeff(n) * (p.a() + &k) * (p.b() + &k);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn sinhc_and_sinc_reciprocal_tables() {
        let rs = reciprocal(&named_series(NamedSeries::Sinhc, 10)).unwrap();
        let rc = reciprocal(&named_series(NamedSeries::Sinc, 10)).unwrap();
        assert_eq!(
            rs.coeffs(),
            v(&[(1, 1), (0, 1), (-1, 6), (0, 1), (7, 360), (0, 1), (-31, 15120), (0, 1), (127, 604800), (0, 1), (-73, 3421440)])
        );
        assert_eq!(
            rc.coeffs(),
            v(&[(1, 1), (0, 1), (1, 6), (0, 1), (7, 360), (0, 1), (31, 15120), (0, 1), (127, 604800), (0, 1), (73, 3421440)])
        );
    }
}
