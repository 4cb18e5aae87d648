//! Grid scans for Kaluza violations, evaluated in parallel with results in
//! grid order.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::generators::{gauss_2f1, named_series, HypergeomParams, NamedSeries};
use crate::rational::{format_rational, rat, Rational};
use crate::series::{power_rational, Series};
use crate::theorems::{hyper1_predicate, hyper2_witness, kaluza_sign_check};

/// `1/20, 2/20, ..., 20/20`.
pub fn default_alpha_grid() -> Vec<Rational> {
    (0..20).map(|k| rat(k + 1, 20)).collect()
}

/// Cartesian product `a x b x c` in lexicographic order.
pub fn hyper_grid(a: &[Rational], b: &[Rational], c: &[Rational]) -> Result<Vec<HypergeomParams>> {
    let mut out = Vec::with_capacity(a.len() * b.len() * c.len());
    for x in a {
        for y in b {
            for z in c {
                out.push(HypergeomParams::new(x.clone(), y.clone(), z.clone())?);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub params: Vec<(String, String)>,
    pub holds: bool,
    pub witness_index: Option<usize>,
    pub witness_value: Option<String>,
    /// Extra predicate columns, e.g. `hyper1`.
    pub extra: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanResult {
    pub columns: Vec<String>,
    pub rows: Vec<ScanRow>,
}

impl ScanResult {
    pub fn violations(&self) -> usize {
        self.rows.iter().filter(|r| !r.holds).count()
    }

    /// Header line plus one line per row. Values contain no commas.
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for r in &self.rows {
            let mut cells: Vec<String> = r.params.iter().map(|(_, v)| v.clone()).collect();
            cells.extend(r.extra.iter().map(|(_, v)| v.clone()));
            cells.push(r.holds.to_string());
            cells.push(r.witness_index.map(|i| i.to_string()).unwrap_or_default());
            cells.push(r.witness_value.clone().unwrap_or_default());
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

fn kaluza_row(f: &Series, params: Vec<(String, String)>, extra: Vec<(String, String)>) -> Result<ScanRow> {
    let k = kaluza_sign_check(f)?;
    Ok(ScanRow {
        params,
        holds: k.holds,
        witness_index: k.first_positive_index,
        witness_value: k.first_positive_index.map(|i| format_rational(k.reciprocal.coeff(i))),
        extra,
    })
}

fn columns(params: &[&str], extra: &[&str]) -> Vec<String> {
    params
        .iter()
        .chain(extra)
        .chain(&["holds", "witness_index", "witness_value"])
        .map(|s| s.to_string())
        .collect()
}

/// Kaluza check of `2F1(a,b;c;x)` at `order` for each grid point, with the
/// `hyper1` predicate and the coefficient-2 witness alongside.
pub fn scan_hyper(grid: &[HypergeomParams], order: usize) -> Result<ScanResult> {
    let rows = grid
        .par_iter()
        .map(|p| {
            let params = vec![
                ("a".to_string(), format_rational(p.a())),
                ("b".to_string(), format_rational(p.b())),
                ("c".to_string(), format_rational(p.c())),
            ];
            let extra = vec![
                ("hyper1".to_string(), hyper1_predicate(p)?.holds.to_string()),
                ("hyper2".to_string(), format_rational(&hyper2_witness(p)?)),
            ];
            kaluza_row(&gauss_2f1(p, order), params, extra)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanResult {
        columns: columns(&["a", "b", "c"], &["hyper1", "hyper2"]),
        rows,
    })
}

/// Kaluza check of `f^alpha` for each named series and exponent.
pub fn scan_power(names: &[NamedSeries], alphas: &[Rational], order: usize) -> Result<ScanResult> {
    scan_power_with(names, alphas, order, &named_series)
}

/// As [`scan_power`], drawing the base series from `source`.
pub fn scan_power_with(
    names: &[NamedSeries],
    alphas: &[Rational],
    order: usize,
    source: &(dyn Fn(NamedSeries, usize) -> Series + Sync),
) -> Result<ScanResult> {
    let jobs: Vec<(NamedSeries, &Rational)> = names
        .iter()
        .flat_map(|&n| alphas.iter().map(move |a| (n, a)))
        .collect();
    let rows = jobs
        .par_iter()
        .map(|&(name, alpha)| {
            let f = power_rational(&source(name, order), alpha)?;
            let params = vec![
                ("series".to_string(), name.name().to_string()),
                ("alpha".to_string(), format_rational(alpha)),
            ];
            kaluza_row(&f, params, Vec::new())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanResult {
        columns: columns(&["series", "alpha"], &[]),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn power_scan_has_no_violations() {
        let r = scan_power(
            &[NamedSeries::F1, NamedSeries::F2, NamedSeries::F3],
            &default_alpha_grid(),
            20,
        )
        .unwrap();
        assert_eq!(r.rows.len(), 60);
        assert_eq!(r.violations(), 0);
        assert_eq!(r.rows[0].params[1].1, "1/20");
    }

    #[test]
    fn hyper_scan_flags_336() {
        let grid = hyper_grid(&[int(3)], &[int(1), int(3)], &[int(6)]).unwrap();
        let r = scan_hyper(&grid, 10).unwrap();
        assert!(r.rows[0].holds);
        let bad = &r.rows[1];
        assert!(!bad.holds);
        assert_eq!(bad.witness_index, Some(2));
        assert_eq!(bad.witness_value.as_deref(), Some("15/28"));
        assert_eq!(bad.extra[0].1, "false");
        let csv = r.to_csv();
        assert!(csv.starts_with("a,b,c,hyper1,hyper2,holds,witness_index,witness_value\n"));
        assert!(csv.contains("3,3,6,false,15/28,false,2,15/28\n"));
    }

    #[test]
    fn empty_grid_gives_header_only() {
        let r = scan_hyper(&[], 10).unwrap();
        assert_eq!(r.to_csv(), "a,b,c,hyper1,hyper2,holds,witness_index,witness_value\n");
    }

    #[test]
    fn scan_is_deterministic() {
        let v = [rat(1, 4), rat(1, 2), int(1), int(2)];
        let grid = hyper_grid(&v, &v, &v).unwrap();
        assert_eq!(scan_hyper(&grid, 12).unwrap(), scan_hyper(&grid, 12).unwrap());
    }
}
