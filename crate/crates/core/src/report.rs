//! Regenerates the worked coefficient tables and compares them against the
//! published values: exactly for rationals, to the printed digits for
//! decimals.

use std::fmt;

use num_traits::Signed;
use serde::Serialize;

use crate::error::Result;
use crate::generators::{gauss_2f1, named_series, HypergeomParams, NamedSeries};
use crate::means::{kaluza4_condition_check, power_mean, MeanParams, DEFAULT_TOLERANCE};
use crate::oracle::power_identity_check;
use crate::rational::{format_rational, int, matches_printed_decimal, parse_rational, rat, to_decimal_string, to_f64};
use crate::scan::{default_alpha_grid, hyper_grid, scan_hyper, scan_power_with};
use crate::sequence::{classify_shape, is_log_convex_from, ShapeClass};
use crate::series::{
    cauchy_product, differentiate, integrate_termwise, power_integer, power_rational, quotient, reciprocal, Series,
};
use crate::theorems::{hyper2_witness, kaluza_sign_check, parity_reciprocal_check};

/// Produces the named series at a given order.
pub type SeriesSource<'a> = &'a (dyn Fn(NamedSeries, usize) -> Series + Sync);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableCheck {
    pub name: &'static str,
    pub section: &'static str,
    pub passed: bool,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for TableCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "PASS {}", self.name)
        } else {
            write!(f, "FAIL {}: expected {}, got {}", self.name, self.expected, self.actual)
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReproReport {
    pub tables: Vec<TableCheck>,
}

impl ReproReport {
    pub fn all_passed(&self) -> bool {
        self.tables.iter().all(|t| t.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &TableCheck> {
        self.tables.iter().filter(|t| !t.passed)
    }
}

impl fmt::Display for ReproReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.tables {
            writeln!(f, "{t}")?;
        }
        let passed = self.tables.iter().filter(|t| t.passed).count();
        write!(f, "{passed}/{} tables passed", self.tables.len())
    }
}

struct Outcome {
    passed: bool,
    expected: String,
    actual: String,
}

impl Outcome {
    fn eq(expected: impl fmt::Display, actual: impl fmt::Display) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Outcome { passed: expected == actual, expected, actual }
    }
}

type Check<'a> = Box<dyn Fn() -> Result<Outcome> + 'a>;

fn list(v: &[impl AsRef<str>]) -> String {
    format!("[{}]", v.iter().map(AsRef::as_ref).collect::<Vec<_>>().join(", "))
}

/// Compares the leading coefficients of `s` with `expected` exactly.
fn exact_prefix(expected: &[&str], s: &Series) -> Result<Outcome> {
    let want = expected.iter().map(|e| parse_rational(e)).collect::<Result<Vec<_>>>()?;
    let got: Vec<String> = s.coeffs().iter().take(want.len()).map(format_rational).collect();
    let want: Vec<String> = want.iter().map(format_rational).collect();
    Ok(Outcome::eq(list(&want), list(&got)))
}

/// Compares the leading coefficients of `s` with printed decimals.
fn decimal_prefix(expected: &[&str], s: &Series) -> Result<Outcome> {
    let mut passed = s.order() + 1 >= expected.len();
    for (c, e) in s.coeffs().iter().zip(expected) {
        passed &= matches_printed_decimal(c, e)?;
    }
    let got: Vec<String> = s
        .coeffs()
        .iter()
        .zip(expected)
        .map(|(c, e)| to_decimal_string(c, e.trim_start_matches(['-', '0', '.']).len().max(1)))
        .collect();
    Ok(Outcome { passed, expected: list(expected), actual: list(&got) })
}

fn kaluza_summary(label: &str, f: &Series) -> Result<String> {
    let k = kaluza_sign_check(f)?;
    Ok(match k.first_positive_index {
        None => format!("{label}: holds"),
        Some(i) => format!("{label}: fails at {i}"),
    })
}

fn even_part(s: &Series) -> Vec<crate::Rational> {
    s.coeffs().iter().step_by(2).cloned().collect()
}

fn tables<'a>(src: SeriesSource<'a>) -> Vec<(&'static str, &'static str, Check<'a>)> {
    let f = move |n: NamedSeries, order: usize| src(n, order);
    vec![
        ("ex1-recip-cosh", "ex1", Box::new(move || {
            exact_prefix(
                &["1", "0", "-1/2", "0", "5/24", "0", "-61/720", "0", "277/8064", "0", "-50521/3628800"],
                &reciprocal(&f(NamedSeries::Cosh, 10))?,
            )
        })),
        ("ex1-recip-cos", "ex1", Box::new(move || {
            exact_prefix(
                &["1", "0", "1/2", "0", "5/24", "0", "61/720", "0", "277/8064", "0", "50521/3628800"],
                &reciprocal(&f(NamedSeries::Cos, 10))?,
            )
        })),
        ("ex1-recip-sinhc", "ex1", Box::new(move || {
            exact_prefix(
                &["1", "0", "-1/6", "0", "7/360", "0", "-31/15120", "0", "127/604800", "0", "-73/3421440"],
                &reciprocal(&f(NamedSeries::Sinhc, 10))?,
            )
        })),
        ("ex1-recip-sinc", "ex1", Box::new(move || {
            exact_prefix(
                &["1", "0", "1/6", "0", "7/360", "0", "31/15120", "0", "127/604800", "0", "73/3421440"],
                &reciprocal(&f(NamedSeries::Sinc, 10))?,
            )
        })),
        ("ex1-parity", "ex1", Box::new(move || {
            let cosh = parity_reciprocal_check(&even_part(&f(NamedSeries::Cosh, 10)), 10)?;
            let sinhc = parity_reciprocal_check(&even_part(&f(NamedSeries::Sinhc, 10)), 10)?;
            Ok(Outcome::eq("cosh: true, sinhc: true", format!("cosh: {}, sinhc: {}", cosh.holds(), sinhc.holds())))
        })),
        ("ex2-f1-prefix", "ex2", Box::new(move || exact_prefix(&["1", "3/2", "5/2", "9/2"], &f(NamedSeries::F1, 3)))),
        ("ex2-f1-shape", "ex2", Box::new(move || {
            Ok(Outcome::eq(ShapeClass::NonDecreasing, classify_shape(f(NamedSeries::F1, 20).coeffs())?))
        })),
        ("ex3-f2-prefix", "ex3", Box::new(move || {
            exact_prefix(&["1", "1/2", "1/3", "1/4", "1/5"], &f(NamedSeries::F2, 4))
        })),
        ("ex3-f3-prefix", "ex3", Box::new(move || exact_prefix(&["1", "1/4", "9/64", "25/256"], &f(NamedSeries::F3, 3)))),
        ("ex3-f3-is-2f1", "ex3", Box::new(move || {
            let g = gauss_2f1(&HypergeomParams::new(rat(1, 2), rat(1, 2), int(1))?, 12);
            Ok(Outcome::eq(&g, f(NamedSeries::F3, 12)))
        })),
        ("ex3-shapes", "ex3", Box::new(move || {
            let a = classify_shape(f(NamedSeries::F2, 20).coeffs())?;
            let b = classify_shape(f(NamedSeries::F3, 20).coeffs())?;
            Ok(Outcome::eq("f2: non-increasing, f3: non-increasing", format!("f2: {a}, f3: {b}")))
        })),
        ("ex4-f4-prefix", "ex4", Box::new(move || {
            exact_prefix(&["1", "77/80", "19/20", "3/2", "5/2", "9/2", "17/2"], &f(NamedSeries::F4, 6))
        })),
        ("ex4-f4-shape", "ex4", Box::new(move || {
            Ok(Outcome::eq(ShapeClass::ValleyAt(2), classify_shape(f(NamedSeries::F4, 20).coeffs())?))
        })),
        ("ex5-derivative", "ex5", Box::new(move || {
            exact_prefix(&["1/2", "2/3", "3/4", "4/5"], &differentiate(&f(NamedSeries::F2, 4))?)
        })),
        ("ex5-recip-derivative", "ex5", Box::new(move || {
            exact_prefix(&["2", "-8/3", "5/9"], &reciprocal(&differentiate(&f(NamedSeries::F2, 4))?)?)
        })),
        ("ex5-integral", "ex5", Box::new(move || {
            exact_prefix(&["1", "1/4", "1/9", "1/16", "1/25"], &integrate_termwise(&f(NamedSeries::F2, 4)))
        })),
        ("ex5-kaluza", "ex5", Box::new(move || {
            let f2 = f(NamedSeries::F2, 21);
            let actual = [
                kaluza_summary("f2", &f2.resized(20))?,
                kaluza_summary("f2'", &differentiate(&f2)?)?,
                kaluza_summary("integral", &integrate_termwise(&f2.resized(20)))?,
            ];
            Ok(Outcome::eq("f2: holds, f2': fails at 2, integral: holds", actual.join(", ")))
        })),
        ("ex6-recip-product", "ex6", Box::new(move || {
            let p = cauchy_product(&f(NamedSeries::F1, 3), &f(NamedSeries::F2, 3))?;
            exact_prefix(&["1", "-2", "5/12", "-1/6"], &reciprocal(&p)?)
        })),
        ("ex6-recip-quotient", "ex6", Box::new(move || {
            let q = quotient(&f(NamedSeries::F2, 3), &f(NamedSeries::F1, 3))?;
            exact_prefix(&["1", "1", "5/3", "37/12"], &reciprocal(&q)?)
        })),
        ("ex7-recip-f1-cubed", "ex7", Box::new(move || {
            exact_prefix(&["1", "-9/2", "6", "-9/4"], &reciprocal(&power_integer(&f(NamedSeries::F1, 3), 3))?)
        })),
        ("ex7-recip-f2-power", "ex7", Box::new(move || {
            let g = power_rational(&f(NamedSeries::F2, 3), &rat(9, 5))?;
            decimal_prefix(&["1", "-0.9", "0.03", "-0.009"], &reciprocal(&g)?)
        })),
        ("ex8-f4-sqrt", "ex8", Box::new(move || {
            exact_prefix(
                &["1", "77/160", "18391/51200", "4727893/8192000", "190367203/209715200"],
                &power_rational(&f(NamedSeries::F4, 4), &rat(1, 2))?,
            )
        })),
        ("ex8-f4-sqrt-identity", "ex8", Box::new(move || {
            let f4 = f(NamedSeries::F4, 12);
            let g = power_rational(&f4, &rat(1, 2))?;
            Ok(Outcome::eq(true, power_identity_check(&f4, &rat(1, 2), &g)?))
        })),
        ("ex8-f4-sqrt-not-log-convex", "ex8", Box::new(move || {
            let g = power_rational(&f(NamedSeries::F4, 4), &rat(1, 2))?;
            let v = is_log_convex_from(g.coeffs(), 3, false)?;
            Ok(Outcome::eq("fails at 3", match v.witness_index() {
                Some(i) => format!("fails at {i}"),
                None => "holds".into(),
            }))
        })),
        ("ex8-alpha-scan", "ex8", Box::new(move || {
            let r = scan_power_with(
                &[NamedSeries::F1, NamedSeries::F2, NamedSeries::F3],
                &default_alpha_grid(),
                20,
                src,
            )?;
            Ok(Outcome::eq("60 cases, 0 violations", format!("{} cases, {} violations", r.rows.len(), r.violations())))
        })),
        ("f5-recip", "f5", Box::new(move || exact_prefix(&["1", "-1", "1/2", "-1/3"], &reciprocal(&f(NamedSeries::F5, 3))?))),
        ("f5-log-convex-from-2", "f5", Box::new(move || {
            let s = f(NamedSeries::F5, 40);
            let from2 = is_log_convex_from(s.coeffs(), 2, false)?.holds();
            let from1 = is_log_convex_from(s.coeffs(), 1, false)?.holds();
            Ok(Outcome::eq("from 1: false, from 2: true", format!("from 1: {from1}, from 2: {from2}")))
        })),
        ("f5-kaluza", "f5", Box::new(move || {
            Ok(Outcome::eq("f5: fails at 2", kaluza_summary("f5", &f(NamedSeries::F5, 20))?))
        })),
        ("thm2-recip-decimals", "thm2", Box::new(move || {
            decimal_prefix(&["0.50025", "-0.25025", "0.000062594"], &reciprocal(&f(NamedSeries::Thm2q, 4))?)
        })),
        ("thm2-q2-exact", "thm2", Box::new(move || {
            let q2 = reciprocal(&f(NamedSeries::Thm2q, 4))?.coeff(2).clone();
            let want = rat(500_000, 1999 * 1999 * 1999);
            Ok(Outcome::eq(
                format!("{} > 0", format_rational(&want)),
                format!("{} {} 0", format_rational(&q2), if q2.is_positive() { ">" } else { "<=" }),
            ))
        })),
        ("thm2-mean", "thm2", Box::new(move || {
            let q = f(NamedSeries::Thm2q, 2);
            let m = power_mean(&MeanParams::new(to_f64(q.coeff(0)), to_f64(q.coeff(2)), 0.01)?);
            Ok(Outcome {
                passed: (m - 1.00215).abs() <= 1e-4 && to_f64(q.coeff(1)) < m,
                expected: "1 < m = 1.00215".into(),
                actual: format!("{} < m = {m:.5}", format_rational(q.coeff(1))),
            })
        })),
        ("thm2-mean-condition", "thm2", Box::new(move || {
            let q = f(NamedSeries::Thm2q, 40);
            let v = kaluza4_condition_check(q.coeffs(), 0.01, DEFAULT_TOLERANCE)?;
            Ok(Outcome::eq(true, v.holds()))
        })),
        ("hyper-2f1-336", "hyper", Box::new(|| {
            let g = gauss_2f1(&HypergeomParams::new(int(3), int(3), int(6))?, 4);
            exact_prefix(&["1", "3/2", "12/7", "25/14", "25/14"], &g)
        })),
        ("hyper-2f1-336-recip", "hyper", Box::new(|| {
            let g = gauss_2f1(&HypergeomParams::new(int(3), int(3), int(6))?, 3);
            exact_prefix(&["1", "-3/2", "15/28", "-1/56"], &reciprocal(&g)?)
        })),
        ("hyper-hyper2-witness", "hyper", Box::new(|| {
            let w = hyper2_witness(&HypergeomParams::new(int(3), int(3), int(6))?)?;
            Ok(Outcome::eq("15/28", format_rational(&w)))
        })),
        ("hyper-scan-336", "hyper", Box::new(|| {
            let grid = hyper_grid(&[int(3)], &[int(3)], &[int(6)])?;
            let row = scan_hyper(&grid, 10)?.rows.remove(0);
            Ok(Outcome::eq(
                "fails at 2 with 15/28",
                format!(
                    "fails at {} with {}",
                    row.witness_index.map_or("-".into(), |i| i.to_string()),
                    row.witness_value.unwrap_or_default()
                ),
            ))
        })),
    ]
}

/// Runs every table whose name starts with `filter` or whose section equals
/// it; all tables when `filter` is `None`.
pub fn reproduce_paper(filter: Option<&str>) -> ReproReport {
    reproduce_paper_with(filter, &named_series)
}

/// As [`reproduce_paper`], drawing named series from `source`. A table whose
/// computation errors is reported as a failure carrying the error text.
pub fn reproduce_paper_with(filter: Option<&str>, source: SeriesSource<'_>) -> ReproReport {
    let tables = tables(source)
        .into_iter()
        .filter(|(name, section, _)| filter.is_none_or(|f| *section == f || name.starts_with(f)))
        .map(|(name, section, check)| match check() {
            Ok(o) => TableCheck { name, section, passed: o.passed, expected: o.expected, actual: o.actual },
            Err(e) => TableCheck { name, section, passed: false, expected: "a value".into(), actual: format!("error: {e}") },
        })
        .collect();
    ReproReport { tables }
}

/// Distinct section tags in table order.
pub fn sections() -> Vec<&'static str> {
    let mut out: Vec<&'static str> = Vec::new();
    for (_, s, _) in tables(&named_series) {
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    #[test]
    fn full_run_passes() {
        let r = reproduce_paper(None);
        assert!(r.all_passed(), "{r}");
        assert!(r.tables.len() >= 30);
    }

    #[test]
    fn filter_selects_section() {
        let r = reproduce_paper(Some("thm2"));
        assert!(!r.tables.is_empty());
        assert!(r.tables.iter().all(|t| t.section == "thm2"));
        assert!(reproduce_paper(Some("nothing")).tables.is_empty());
    }

    #[test]
    fn corrupted_generator_fails_named_table() {
        let corrupt = |n: NamedSeries, order: usize| {
            let s = named_series(n, order);
            if n == NamedSeries::Cosh {
                let mut c = s.into_coeffs();
                c[2] = Rational::new(1.into(), 3.into());
                Series::new(c).unwrap()
            } else {
                s
            }
        };
        let r = reproduce_paper_with(Some("ex1"), &corrupt);
        let failed: Vec<_> = r.failures().map(|t| t.name).collect();
        assert!(failed.contains(&"ex1-recip-cosh"), "{failed:?}");
        assert!(!failed.contains(&"ex1-recip-sinc"));
        let line = r.tables.iter().find(|t| t.name == "ex1-recip-cosh").unwrap().to_string();
        assert!(line.starts_with("FAIL ex1-recip-cosh: expected [1, 0, -1/2"), "{line}");
    }

    #[test]
    fn errors_become_failures() {
        let zero = |_: NamedSeries, order: usize| Series::zero(order);
        let r = reproduce_paper_with(Some("f5"), &zero);
        assert!(r.tables.iter().all(|t| !t.passed));
    }

    #[test]
    fn sections_are_listed_once() {
        let s = sections();
        assert_eq!(s.first(), Some(&"ex1"));
        assert!(s.contains(&"thm2") && s.contains(&"hyper"));
    }
}
