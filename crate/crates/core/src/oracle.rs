//! Independent reference computations used to cross-check [`crate::series`].
//!
//! Nothing here calls into the series module's arithmetic. Reciprocals and
//! quotients are obtained by assembling the lower-triangular convolution
//! matrix of the denominator and solving it by forward substitution; the
//! power identity uses its own naive convolution.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{named_series, NamedSeries};
use crate::rational::{rat, Rational};
use crate::series::{power_rational, quotient, reciprocal, Series};

/// Largest order the dense solver accepts.
pub const MAX_ORDER: usize = 64;

fn check_order(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        return Err(Error::InvalidParameter(format!(
            "oracle supports order <= {MAX_ORDER}, got {order}"
        )));
    }
    Ok(())
}

/// Solves `T(g) x = rhs`, where `T(g)[i][j] = g_{i-j}` for `j <= i`.
fn solve_lower_toeplitz(g: &[Rational], rhs: &[Rational]) -> Result<Vec<Rational>> {
    let n = rhs.len();
    let matrix: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| if j <= i { g[i - j].clone() } else { Rational::zero() }).collect())
        .collect();
    if matrix[0][0].is_zero() {
        return Err(Error::NonInvertible);
    }
    let mut x: Vec<Rational> = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = rhs[i].clone();
        for (j, xj) in x.iter().enumerate() {
            acc -= &matrix[i][j] * xj;
        }
        x.push(acc / &matrix[i][i]);
    }
    Ok(x)
}

/// `1/g` by dense linear solve.
pub fn reciprocal_via_linear_solve(g: &Series) -> Result<Series> {
    check_order(g.order())?;
    let mut e = vec![Rational::zero(); g.order() + 1];
    e[0] = Rational::one();
    Series::new(solve_lower_toeplitz(g.coeffs(), &e)?)
}

/// `f/g` by dense linear solve.
pub fn quotient_via_linear_solve(f: &Series, g: &Series) -> Result<Series> {
    if f.order() != g.order() {
        return Err(Error::OrderMismatch { left: f.order(), right: g.order() });
    }
    check_order(g.order())?;
    Series::new(solve_lower_toeplitz(g.coeffs(), f.coeffs())?)
}

fn naive_product(f: &[Rational], g: &[Rational]) -> Vec<Rational> {
    (0..f.len())
        .map(|n| (0..=n).fold(Rational::zero(), |acc, k| acc + &f[k] * &g[n - k]))
        .collect()
}

fn naive_power(f: &[Rational], k: u64) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); f.len()];
    out[0] = Rational::one();
    for _ in 0..k {
        out = naive_product(&out, f);
    }
    out
}

/// Checks that `g = f^(p/q)` through the polynomial identity
/// `g^q = f^p` (or `g^q f^|p| = 1` for `p < 0`), truncated at the common
/// order. Requires `f_0 = g_0 = 1`.
pub fn power_identity_check(f: &Series, exponent: &Rational, g: &Series) -> Result<bool> {
    if f.order() != g.order() {
        return Err(Error::OrderMismatch { left: f.order(), right: g.order() });
    }
    check_order(f.order())?;
    for s in [f, g] {
        if !s.coeff(0).is_one() {
            return Err(Error::NormalizeFirst(s.coeff(0).clone()));
        }
    }
    let to_u64 = |v: &num_bigint::BigInt| -> Result<u64> {
        u64::try_from(v.abs()).ok().filter(|&x| x <= 256).ok_or_else(|| {
            Error::InvalidParameter("oracle exponent numerator and denominator must be at most 256".into())
        })
    };
    let (p, q) = (exponent.numer(), exponent.denom());
    let (pa, qa) = (to_u64(p)?, to_u64(q)?);
    let gq = naive_power(g.coeffs(), qa);
    let fp = naive_power(f.coeffs(), pa);
    if p.is_negative() {
        let prod = naive_product(&gq, &fp);
        Ok(prod[0].is_one() && prod[1..].iter().all(Zero::is_zero))
    } else {
        Ok(gq == fp)
    }
}

/// Random series of the given order: numerators in `-20..=20`,
/// denominators in `1..=10`, constant term non-zero.
pub fn random_series<R: Rng + ?Sized>(rng: &mut R, order: usize) -> Series {
    Series::from_fn(order, |n| loop {
        let c = Rational::new(BigInt::from(rng.random_range(-20..=20)), BigInt::from(rng.random_range(1..=10)));
        if n > 0 || !c.is_zero() {
            break c;
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfTestCase {
    pub name: String,
    pub passed: bool,
}

/// Cross-checks the recurrences against the dense solver on every named
/// series and on `random_cases` seeded random pairs, and the rational power
/// against the polynomial identity.
pub fn self_test(seed: u64, random_cases: usize) -> Result<Vec<SelfTestCase>> {
    let mut out = Vec::new();
    let mut push = |name: String, passed: bool| out.push(SelfTestCase { name, passed });
    for name in NamedSeries::ALL {
        let f = named_series(name, 20);
        push(format!("reciprocal {name}"), reciprocal(&f)? == reciprocal_via_linear_solve(&f)?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut agree = true;
    for _ in 0..random_cases {
        let order = rng.random_range(0..=12);
        let (f, g) = (random_series(&mut rng, order), random_series(&mut rng, order));
        agree &= reciprocal(&g)? == reciprocal_via_linear_solve(&g)?;
        agree &= quotient(&f, &g)? == quotient_via_linear_solve(&f, &g)?;
    }
    push(format!("{random_cases} random reciprocals and quotients"), agree);
    for (name, e) in [(NamedSeries::F4, rat(1, 2)), (NamedSeries::F2, rat(9, 5)), (NamedSeries::F1, rat(-2, 3))] {
        let f = named_series(name, 16);
        let g = power_rational(&f, &e)?;
        push(format!("power {name}^{e}"), power_identity_check(&f, &e, &g)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn self_test_passes() {
        let cases = self_test(7, 40).unwrap();
        assert!(cases.iter().all(|c| c.passed), "{cases:?}");
        assert_eq!(cases, self_test(7, 40).unwrap());
    }

    #[test]
    fn random_series_has_nonzero_constant() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for order in 0..20 {
            let s = random_series(&mut rng, order);
            assert_eq!(s.order(), order);
            assert!(!s.coeff(0).is_zero());
        }
    }

    #[test]
    fn reciprocal_matches_recurrence() {
        for name in NamedSeries::ALL {
            let f = named_series(name, 15);
            assert_eq!(reciprocal_via_linear_solve(&f).unwrap(), reciprocal(&f).unwrap(), "{name}");
        }
    }

    #[test]
    fn quotient_matches_recurrence() {
        let f = named_series(NamedSeries::F3, 12);
        let g = named_series(NamedSeries::F2, 12);
        assert_eq!(quotient_via_linear_solve(&f, &g).unwrap(), quotient(&f, &g).unwrap());
    }

    #[test]
    fn rejects_bad_inputs() {
        let z = Series::new(vec![int(0), int(1)]).unwrap();
        assert!(matches!(reciprocal_via_linear_solve(&z), Err(Error::NonInvertible)));
        assert!(reciprocal_via_linear_solve(&Series::unit(65)).is_err());
        assert!(quotient_via_linear_solve(&Series::unit(2), &Series::unit(3)).is_err());
    }

    #[test]
    fn power_identity() {
        let f = named_series(NamedSeries::F1, 10);
        for e in [rat(1, 2), rat(9, 5), rat(-2, 3), int(3), int(0)] {
            let g = power_rational(&f, &e).unwrap();
            assert!(power_identity_check(&f, &e, &g).unwrap(), "{e}");
        }
        let g = power_rational(&f, &rat(1, 2)).unwrap();
        assert!(!power_identity_check(&f, &rat(1, 3), &g).unwrap());
    }
}
