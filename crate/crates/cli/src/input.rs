use std::fs;
use std::io::Read;

use clap::Args;
use kaluza_core::generators::{gauss_2f1, named_series};
use kaluza_core::rational::{parse_rational, parse_rational_list};
use kaluza_core::{HypergeomParams, NamedSeries, Rational, Series};

use crate::CliError;

pub fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// A comma-separated list of rationals given as one flag value. The empty
/// string is the empty list.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RatList(pub Vec<Rational>);

pub fn rational_list(s: &str) -> Result<RatList, String> {
    if s.trim().is_empty() {
        return Ok(RatList::default());
    }
    parse_rational_list(s).map(RatList).map_err(|e| e.to_string())
}

pub fn series_name(s: &str) -> Result<NamedSeries, String> {
    s.parse().map_err(|e: kaluza_core::Error| e.to_string())
}

/// Decimal or rational, for the floating-point commands.
pub fn real(s: &str) -> Result<f64, String> {
    if let Ok(r) = parse_rational(s) {
        return Ok(kaluza_core::rational::to_f64(&r));
    }
    s.trim().parse::<f64>().map_err(|_| format!("invalid number {s:?}"))
}

/// Where a series comes from: a JSON file (`-` for stdin), an inline
/// coefficient list, a named series or a `2F1`.
#[derive(Args, Debug, Clone, Default)]
pub struct SeriesInput {
    /// Series JSON file, `-` for stdin
    #[arg(long = "in", value_name = "FILE")]
    pub path: Option<String>,
    /// Comma-separated coefficients, e.g. `1,1/2,1/3`
    #[arg(long, value_name = "LIST", value_parser = rational_list, allow_hyphen_values = true)]
    pub coeffs: Option<RatList>,
    /// Named series (f1..f5, cosh, cos, sinhc, sinc, thm2q)
    #[arg(long, value_parser = series_name)]
    pub series: Option<NamedSeries>,
    /// Gauss hypergeometric series 2F1(a,b;c;x)
    #[arg(long, num_args = 3, value_names = ["A", "B", "C"], value_parser = rational, allow_hyphen_values = true)]
    pub hyper: Option<Vec<Rational>>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct SecondInput {
    /// Second series JSON file, `-` for stdin
    #[arg(long = "in2", value_name = "FILE")]
    pub path2: Option<String>,
    #[arg(long, value_name = "LIST", value_parser = rational_list, allow_hyphen_values = true)]
    pub coeffs2: Option<RatList>,
    #[arg(long, value_parser = series_name)]
    pub series2: Option<NamedSeries>,
    #[arg(long, num_args = 3, value_names = ["A", "B", "C"], value_parser = rational, allow_hyphen_values = true)]
    pub hyper2: Option<Vec<Rational>>,
}

impl From<SecondInput> for SeriesInput {
    fn from(s: SecondInput) -> Self {
        SeriesInput { path: s.path2, coeffs: s.coeffs2, series: s.series2, hyper: s.hyper2 }
    }
}

fn read_source(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::usage(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::usage(format!("reading {path}: {e}")))
    }
}

impl SeriesInput {
    /// Loads the series. Generated series use `order`; files and inline
    /// lists keep their own length.
    pub fn load(&self, order: usize, what: &str) -> Result<Series, CliError> {
        let given = [self.path.is_some(), self.coeffs.is_some(), self.series.is_some(), self.hyper.is_some()];
        match given.iter().filter(|&&g| g).count() {
            0 => return Err(CliError::usage(format!("{what}: no series given"))),
            1 => {}
            _ => return Err(CliError::usage(format!("{what}: give exactly one series source"))),
        }
        if let Some(p) = &self.path {
            return Ok(Series::from_json(&read_source(p)?)?);
        }
        if let Some(c) = &self.coeffs {
            return Ok(Series::new(c.0.clone())?);
        }
        if let Some(n) = self.series {
            return Ok(named_series(n, order));
        }
        let h = self.hyper.as_ref().expect("one source is set");
        Ok(gauss_2f1(&HypergeomParams::new(h[0].clone(), h[1].clone(), h[2].clone())?, order))
    }
}
