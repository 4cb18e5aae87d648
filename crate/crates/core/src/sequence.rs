//! Structural properties of finite coefficient sequences.
//!
//! Every check certifies only the prefix it is given and reports the first
//! violating index in a [`PropertyVerdict`]. Comparisons are exact; ratio
//! comparisons are done by cross-multiplication.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{serde_str, Rational};

/// Outcome of a sequence check.
///
/// `witness_index` is `None` exactly when the property holds; otherwise it is
/// the first index violating the defining inequality and `witness_values`
/// carries the quantities compared there (documented per check).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyVerdict {
    holds: bool,
    #[serde(rename = "witness")]
    witness_index: Option<usize>,
    #[serde(with = "serde_str::vec")]
    witness_values: Vec<Rational>,
}

impl PropertyVerdict {
    pub fn pass() -> Self {
        PropertyVerdict {
            holds: true,
            witness_index: None,
            witness_values: Vec::new(),
        }
    }

    pub fn fail(index: usize, values: Vec<Rational>) -> Self {
        PropertyVerdict {
            holds: false,
            witness_index: Some(index),
            witness_values: values,
        }
    }

    pub fn holds(&self) -> bool {
        self.holds
    }

    pub fn witness_index(&self) -> Option<usize> {
        self.witness_index
    }

    pub fn witness_values(&self) -> &[Rational] {
        &self.witness_values
    }
}

/// Shape of a positive log-convex sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeClass {
    NonDecreasing,
    NonIncreasing,
    /// `a_0 >= ... >= a_k <= a_{k+1} <= ...`
    ValleyAt(usize),
}

impl fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeClass::NonDecreasing => f.write_str("non-decreasing"),
            ShapeClass::NonIncreasing => f.write_str("non-increasing"),
            ShapeClass::ValleyAt(k) => write!(f, "valley at {k}"),
        }
    }
}

fn require_positive(seq: &[Rational], what: &'static str) -> Result<()> {
    match seq.iter().position(|a| !a.is_positive()) {
        Some(index) => Err(Error::NonPositive {
            what,
            index,
            value: seq[index].clone(),
        }),
        None => Ok(()),
    }
}

fn require_len(seq: &[Rational], needed: usize) -> Result<()> {
    if seq.len() < needed {
        return Err(Error::TooShort {
            needed,
            got: seq.len(),
        });
    }
    Ok(())
}

#[derive(Clone, Copy)]
enum Curvature {
    Convex,
    Concave,
}

fn log_curvature(seq: &[Rational], from_index: usize, strict: bool, kind: Curvature) -> Result<PropertyVerdict> {
    require_len(seq, 3)?;
    let what = match kind {
        Curvature::Convex => "log-convexity defined for positive sequences",
        Curvature::Concave => "log-concavity defined for positive sequences",
    };
    require_positive(seq, what)?;
    if from_index == 0 {
        return Err(Error::InvalidParameter("from_index must be at least 1".into()));
    }
    for n in from_index..seq.len() - 1 {
        let square = &seq[n] * &seq[n];
        let outer = &seq[n - 1] * &seq[n + 1];
        let ord = match kind {
            Curvature::Convex => square.cmp(&outer),
            Curvature::Concave => outer.cmp(&square),
        };
        let ok = if strict { ord == Ordering::Less } else { ord != Ordering::Greater };
        if !ok {
            return Ok(PropertyVerdict::fail(
                n,
                vec![seq[n - 1].clone(), seq[n].clone(), seq[n + 1].clone()],
            ));
        }
    }
    Ok(PropertyVerdict::pass())
}

/// `a_n^2 <= a_{n-1} a_{n+1}` for every `n >= 1`. Witness values are
/// `(a_{n-1}, a_n, a_{n+1})`.
pub fn is_log_convex(seq: &[Rational]) -> Result<PropertyVerdict> {
    is_log_convex_from(seq, 1, false)
}

/// Log-convexity checked from `from_index` on; `strict` demands `<`.
pub fn is_log_convex_from(seq: &[Rational], from_index: usize, strict: bool) -> Result<PropertyVerdict> {
    log_curvature(seq, from_index, strict, Curvature::Convex)
}

/// `a_n^2 >= a_{n-1} a_{n+1}` for every `n >= 1`.
pub fn is_log_concave(seq: &[Rational]) -> Result<PropertyVerdict> {
    is_log_concave_from(seq, 1, false)
}

pub fn is_log_concave_from(seq: &[Rational], from_index: usize, strict: bool) -> Result<PropertyVerdict> {
    log_curvature(seq, from_index, strict, Curvature::Concave)
}

/// Scans `0..len` for a weak rise followed by a weak fall under `cmp(i-1, i)`.
/// Returns the peak index (end of the longest non-decreasing prefix), or the
/// index of the first rise after the fall began.
pub(crate) fn rise_then_fall(len: usize, cmp: impl Fn(usize, usize) -> Ordering) -> std::result::Result<usize, usize> {
    let mut i = 1;
    while i < len && cmp(i - 1, i) != Ordering::Greater {
        i += 1;
    }
    let peak = i - 1;
    while i < len {
        if cmp(i - 1, i) == Ordering::Less {
            return Err(i);
        }
        i += 1;
    }
    Ok(peak)
}

/// Non-decreasing up to some index, then non-increasing. Witness values are
/// `(a_{n-1}, a_n)` at the offending rise.
pub fn is_unimodal(seq: &[Rational]) -> Result<PropertyVerdict> {
    require_len(seq, 1)?;
    Ok(match rise_then_fall(seq.len(), |i, j| seq[i].cmp(&seq[j])) {
        Ok(_) => PropertyVerdict::pass(),
        Err(n) => PropertyVerdict::fail(n, vec![seq[n - 1].clone(), seq[n].clone()]),
    })
}

/// Classifies a positive log-convex sequence. `a_0 <= a_1` resolves to
/// `NonDecreasing`; otherwise the valley is the first `k` with
/// `a_k <= a_{k+1}`. Input that fits no class is a precondition error.
pub fn classify_shape(seq: &[Rational]) -> Result<ShapeClass> {
    require_len(seq, 1)?;
    require_positive(seq, "shape classification needs a positive sequence")?;
    let first_violation = |from: usize, want: Ordering| {
        (from + 1..seq.len()).find(|&i| seq[i - 1].cmp(&seq[i]) == want.reverse())
    };
    if seq.len() < 2 || seq[0] <= seq[1] {
        return match first_violation(0, Ordering::Less) {
            None => Ok(ShapeClass::NonDecreasing),
            Some(i) => Err(Error::precondition("starts rising but later falls", Some(i))),
        };
    }
    match (1..seq.len() - 1).find(|&k| seq[k] <= seq[k + 1]) {
        None => Ok(ShapeClass::NonIncreasing),
        Some(k) => match first_violation(k, Ordering::Less) {
            None => Ok(ShapeClass::ValleyAt(k)),
            Some(i) => Err(Error::precondition("rises after the valley and then falls again", Some(i))),
        },
    }
}

/// Direction verdicts for the ratio sequence `a_n / b_n`. Witness values are
/// `(a_{n-1}/b_{n-1}, a_n/b_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioMonotonicity {
    pub non_decreasing: PropertyVerdict,
    pub non_increasing: PropertyVerdict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Increasing,
    Decreasing,
    Constant,
    Neither,
}

impl RatioMonotonicity {
    pub fn direction(&self) -> Direction {
        match (self.non_decreasing.holds(), self.non_increasing.holds()) {
            (true, true) => Direction::Constant,
            (true, false) => Direction::Increasing,
            (false, true) => Direction::Decreasing,
            (false, false) => Direction::Neither,
        }
    }
}

fn ratio_inputs(numer: &[Rational], denom: &[Rational]) -> Result<()> {
    if numer.len() != denom.len() {
        return Err(Error::LengthMismatch {
            left: numer.len(),
            right: denom.len(),
        });
    }
    require_len(denom, 1)?;
    require_positive(denom, "ratio denominators")
}

/// Compares `a_i/b_i` with `a_j/b_j` for positive `b` without dividing.
fn ratio_cmp(numer: &[Rational], denom: &[Rational], i: usize, j: usize) -> Ordering {
    (&numer[i] * &denom[j]).cmp(&(&numer[j] * &denom[i]))
}

fn ratio_at(numer: &[Rational], denom: &[Rational], i: usize) -> Rational {
    &numer[i] / &denom[i]
}

/// Monotonicity of `a_n / b_n` in both directions; `strict` demands strict
/// inequalities.
pub fn ratio_monotonicity(numer: &[Rational], denom: &[Rational], strict: bool) -> Result<RatioMonotonicity> {
    ratio_inputs(numer, denom)?;
    let scan = |want: Ordering| {
        for n in 1..numer.len() {
            let ord = ratio_cmp(numer, denom, n - 1, n);
            let ok = if strict { ord == want } else { ord != want.reverse() };
            if !ok {
                return PropertyVerdict::fail(n, vec![ratio_at(numer, denom, n - 1), ratio_at(numer, denom, n)]);
            }
        }
        PropertyVerdict::pass()
    };
    Ok(RatioMonotonicity {
        non_decreasing: scan(Ordering::Less),
        non_increasing: scan(Ordering::Greater),
    })
}

/// Whether `a_n / b_n` rises (weakly) to a peak and then falls (weakly).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioUnimodal {
    pub verdict: PropertyVerdict,
    /// End of the longest non-decreasing prefix of the ratio sequence. A
    /// monotone increasing ratio peaks at the last index.
    pub peak: Option<usize>,
}

pub fn ratio_unimodal(numer: &[Rational], denom: &[Rational]) -> Result<RatioUnimodal> {
    ratio_inputs(numer, denom)?;
    Ok(match rise_then_fall(numer.len(), |i, j| ratio_cmp(numer, denom, i, j)) {
        Ok(peak) => RatioUnimodal {
            verdict: PropertyVerdict::pass(),
            peak: Some(peak),
        },
        Err(n) => RatioUnimodal {
            verdict: PropertyVerdict::fail(n, vec![ratio_at(numer, denom, n - 1), ratio_at(numer, denom, n)]),
            peak: None,
        },
    })
}

/// Checks `p_0 > 0` and `p` non-increasing.
pub(crate) fn require_jurkat_denominator(p: &[Rational]) -> Result<()> {
    require_len(p, 1)?;
    if !p[0].is_positive() {
        return Err(Error::precondition("p_0 must be positive", Some(0)));
    }
    if let Some(i) = (1..p.len()).find(|&i| p[i] > p[i - 1]) {
        return Err(Error::precondition("p must be non-increasing", Some(i)));
    }
    Ok(())
}

/// Backward difference with the convention `diff a_0 = a_0`.
fn backward_diff(a: &[Rational], n: usize) -> Rational {
    if n == 0 {
        a[0].clone()
    } else {
        &a[n] - &a[n - 1]
    }
}

/// The difference condition `diff q_n >= (q_0/p_0) diff p_n` for every
/// `n >= 1` (`<=` when `reversed`). Requires `p_0 > 0` and `p`
/// non-increasing. Witness values are `(diff q_n, (q_0/p_0) diff p_n)`.
pub fn jurkat_condition(q: &[Rational], p: &[Rational], reversed: bool) -> Result<PropertyVerdict> {
    if q.len() != p.len() {
        return Err(Error::LengthMismatch {
            left: q.len(),
            right: p.len(),
        });
    }
    require_jurkat_denominator(p)?;
    let scale = &q[0] / &p[0];
    for n in 1..q.len() {
        let lhs = backward_diff(q, n);
        let rhs = &scale * backward_diff(p, n);
        let ok = if reversed { lhs <= rhs } else { lhs >= rhs };
        if !ok {
            return Ok(PropertyVerdict::fail(n, vec![lhs, rhs]));
        }
    }
    Ok(PropertyVerdict::pass())
}

fn small_positive<R: Rng + ?Sized>(rng: &mut R, max_num: i64, max_den: i64) -> Rational {
    Rational::new(rng.random_range(1..=max_num).into(), rng.random_range(1..=max_den).into())
}

/// A random positive log-convex sequence of length `len`: `a_0` drawn from
/// `{1..10}/{1..10}`, then `a_{n+1} = r_n a_n` with a non-decreasing sequence
/// of positive rational ratios `r_n`.
pub fn random_log_convex<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<Rational> {
    let mut seq = Vec::with_capacity(len);
    if len == 0 {
        return seq;
    }
    seq.push(small_positive(rng, 10, 10));
    let mut ratio = small_positive(rng, 10, 10);
    while seq.len() < len {
        let next = seq.last().expect("non-empty") * &ratio;
        seq.push(next);
        // Ratio steps of zero keep stretches geometric.
        let step = Rational::new(rng.random_range(0..=3).into(), rng.random_range(1..=10).into());
        ratio += step;
    }
    debug_assert!(seq.iter().all(|a| !a.is_zero()));
    seq
}
