//! Theorem-level predicates over series and hypergeometric parameters.
//!
//! Reports certify the truncation order they were computed at and nothing
//! beyond it. Parameter predicates are decided with exact rational
//! inequalities.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{gauss_2f1, HypergeomParams};
use crate::rational::{format_rational, int, serde_str, Rational};
use crate::sequence::{
    ratio_monotonicity, ratio_unimodal, require_jurkat_denominator, rise_then_fall, jurkat_condition,
    PropertyVerdict, RatioMonotonicity,
};
use crate::series::{evaluate_partial_sum, quotient, reciprocal, Series};

/// Sign scan of a reciprocal series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KaluzaReport {
    /// Every reciprocal coefficient at index `1..=order` is `<= 0`.
    pub holds: bool,
    pub first_positive_index: Option<usize>,
    pub order: usize,
    pub reciprocal: Series,
}

/// Computes `1/f` and scans indices `1..=N` for a strictly positive
/// coefficient. Requires `a_0 > 0`.
pub fn kaluza_sign_check(f: &Series) -> Result<KaluzaReport> {
    if !f.coeff(0).is_positive() {
        return Err(Error::NonPositive {
            what: "Kaluza sign check needs a positive constant term",
            index: 0,
            value: f.coeff(0).clone(),
        });
    }
    let reciprocal = reciprocal(f)?;
    let first_positive_index = (1..=f.order()).find(|&n| reciprocal.coeff(n).is_positive());
    Ok(KaluzaReport {
        holds: first_positive_index.is_none(),
        first_positive_index,
        order: f.order(),
        reciprocal,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExpectedSign {
    Nonnegative,
    Nonpositive,
}

impl ExpectedSign {
    fn admits(self, x: &Rational) -> bool {
        match self {
            ExpectedSign::Nonnegative => !x.is_negative(),
            ExpectedSign::Nonpositive => !x.is_positive(),
        }
    }
}

/// Checks the sign of `coeffs[n]` for `n >= 1`. Witness value is the
/// offending coefficient.
pub fn sign_scan(coeffs: &[Rational], expect: ExpectedSign) -> PropertyVerdict {
    match (1..coeffs.len()).find(|&n| !expect.admits(&coeffs[n])) {
        Some(n) => PropertyVerdict::fail(n, vec![coeffs[n].clone()]),
        None => PropertyVerdict::pass(),
    }
}

/// A boolean parameter predicate together with the inequalities that failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateOutcome {
    pub holds: bool,
    pub failed: Vec<String>,
}

impl PredicateOutcome {
    fn from_checks(checks: &[(bool, &str)]) -> Self {
        let failed: Vec<String> = checks
            .iter()
            .filter(|(ok, _)| !ok)
            .map(|(_, name)| name.to_string())
            .collect();
        PredicateOutcome {
            holds: failed.is_empty(),
            failed,
        }
    }
}

fn require_positive_params(params: &HypergeomParams) -> Result<()> {
    for (name, v) in [("a", params.a()), ("b", params.b()), ("c", params.c())] {
        if !v.is_positive() {
            return Err(Error::InvalidParameter(format!(
                "{name} = {} must be positive",
                format_rational(v)
            )));
        }
    }
    Ok(())
}

/// `2ab(c+1) <= (a+1)(b+1)c` and `c >= a+b-1`, for `a, b, c > 0`. Together
/// they make the `2F1` coefficients positive and log-convex.
pub fn hyper1_predicate(params: &HypergeomParams) -> Result<PredicateOutcome> {
    require_positive_params(params)?;
    let (a, b, c) = (params.a(), params.b(), params.c());
    let one = Rational::one();
    let lhs = int(2) * a * b * (c + &one);
    let rhs = (a + &one) * (b + &one) * c;
    Ok(PredicateOutcome::from_checks(&[
        (lhs <= rhs, "2ab(c+1) <= (a+1)(b+1)c"),
        (*c >= a + b - &one, "c >= a+b-1"),
    ]))
}

/// Closed form of coefficient 2 of `1 / 2F1(a,b;c;x)`:
/// `(ab/c) (ab/c - (a+1)(b+1) / (2(c+1)))`. Positive exactly when
/// `2ab(c+1) > (a+1)(b+1)c`.
pub fn hyper2_witness(params: &HypergeomParams) -> Result<Rational> {
    require_positive_params(params)?;
    let (a, b, c) = (params.a(), params.b(), params.c());
    let one = Rational::one();
    let t = a * b / c;
    let s = (a + &one) * (b + &one) / (int(2) * (c + &one));
    Ok(&t * (&t - s))
}

/// `ab/c <= 0`, `c <= a+b-1` and `c <= ab`, for `a, b, c > -1`, `c != 0`.
/// These force every coefficient of `1 / 2F1(a,b;c;x)` to be non-negative.
pub fn nonneg_reciprocal_predicate(params: &HypergeomParams) -> Result<PredicateOutcome> {
    let minus_one = -Rational::one();
    for (name, v) in [("a", params.a()), ("b", params.b()), ("c", params.c())] {
        if *v <= minus_one {
            return Err(Error::InvalidParameter(format!(
                "{name} = {} must exceed -1",
                format_rational(v)
            )));
        }
    }
    let (a, b, c) = (params.a(), params.b(), params.c());
    let ab = a * b;
    Ok(PredicateOutcome::from_checks(&[
        (!(&ab / c).is_positive(), "ab/c <= 0"),
        (*c <= a + b - Rational::one(), "c <= a+b-1"),
        (*c <= ab, "c <= ab"),
    ]))
}

/// Verifies `1/f` has non-negative coefficients for `a_0 > 0 >= a_1 >= a_2 >= ...`.
/// Witness value is the first negative reciprocal coefficient.
pub fn propo_reciprocal_nonneg_check(f: &Series) -> Result<PropertyVerdict> {
    let a = f.coeffs();
    if !a[0].is_positive() {
        return Err(Error::precondition("a_0 must be positive", Some(0)));
    }
    if a.len() > 1 && a[1].is_positive() {
        return Err(Error::precondition("a_1 must be <= 0", Some(1)));
    }
    if let Some(i) = (2..a.len()).find(|&i| a[i] > a[i - 1]) {
        return Err(Error::precondition("a_1, a_2, ... must be non-increasing", Some(i)));
    }
    let r = reciprocal(f)?;
    Ok(match r.coeffs().iter().position(Signed::is_negative) {
        Some(n) => PropertyVerdict::fail(n, vec![r.coeff(n).clone()]),
        None => PropertyVerdict::pass(),
    })
}

/// Two parameter triples `(a1, b1; c1)` over `(a2, b2; c2)`, all positive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SixParams {
    #[serde(with = "serde_str")]
    pub a1: Rational,
    #[serde(with = "serde_str")]
    pub b1: Rational,
    #[serde(with = "serde_str")]
    pub c1: Rational,
    #[serde(with = "serde_str")]
    pub a2: Rational,
    #[serde(with = "serde_str")]
    pub b2: Rational,
    #[serde(with = "serde_str")]
    pub c2: Rational,
}

impl SixParams {
    pub fn new(values: [Rational; 6]) -> Result<Self> {
        if let Some(i) = values.iter().position(|v| !v.is_positive()) {
            return Err(Error::InvalidParameter(format!(
                "parameter {} = {} must be positive",
                ["a1", "b1", "c1", "a2", "b2", "c2"][i],
                format_rational(&values[i])
            )));
        }
        let [a1, b1, c1, a2, b2, c2] = values;
        Ok(SixParams { a1, b1, c1, a2, b2, c2 })
    }

    /// Numerator and denominator exchanged.
    pub fn swapped(&self) -> SixParams {
        SixParams {
            a1: self.a2.clone(),
            b1: self.b2.clone(),
            c1: self.c2.clone(),
            a2: self.a1.clone(),
            b2: self.b1.clone(),
            c2: self.c1.clone(),
        }
    }

    pub fn numerator(&self) -> HypergeomParams {
        HypergeomParams::new(self.a1.clone(), self.b1.clone(), self.c1.clone()).expect("positive c")
    }

    pub fn denominator(&self) -> HypergeomParams {
        HypergeomParams::new(self.a2.clone(), self.b2.clone(), self.c2.clone()).expect("positive c")
    }
}

/// Which of the three parameter conditions for monotonicity of
/// `2F1(a1,b1;c1;x) / 2F1(a2,b2;c2;x)` hold, forwards and reversed.
///
/// The reversed form of a condition is the forward form with numerator and
/// denominator exchanged. For conditions 1 and 3 this is the same as flipping
/// every inequality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hyper4Conditions {
    pub params: SixParams,
    pub forward: [bool; 3],
    pub reversed: [bool; 3],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QuotientDirection {
    Increasing,
    Decreasing,
    /// Both a forward and a reversed condition hold (e.g. identical triples).
    Constant,
    None,
}

impl Hyper4Conditions {
    pub fn increasing(&self) -> bool {
        self.forward.iter().any(|&c| c)
    }

    pub fn decreasing(&self) -> bool {
        self.reversed.iter().any(|&c| c)
    }

    pub fn direction(&self) -> QuotientDirection {
        match (self.increasing(), self.decreasing()) {
            (true, true) => QuotientDirection::Constant,
            (true, false) => QuotientDirection::Increasing,
            (false, true) => QuotientDirection::Decreasing,
            (false, false) => QuotientDirection::None,
        }
    }

    /// Names of the satisfied conditions, e.g. `cond1`, `cond3_reversed`.
    pub fn satisfied(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (i, &ok) in self.forward.iter().enumerate() {
            if ok {
                out.push(format!("cond{}", i + 1));
            }
        }
        for (i, &ok) in self.reversed.iter().enumerate() {
            if ok {
                out.push(format!("cond{}_reversed", i + 1));
            }
        }
        out
    }
}

fn forward_conditions(p: &SixParams) -> [bool; 3] {
    let sums = &p.a1 + &p.b1 >= &p.a2 + &p.b2;
    let cs = p.c2 >= p.c1;
    [
        p.a1 >= p.a2 && p.b1 >= p.b2 && cs,
        sums && cs && p.a2 <= p.a1 && p.a1 <= p.b1 && p.b1 <= p.b2,
        sums && cs && &p.a1 * &p.b1 >= &p.a2 * &p.b2,
    ]
}

pub fn hyper4_predicate(params: &SixParams) -> Hyper4Conditions {
    Hyper4Conditions {
        params: params.clone(),
        forward: forward_conditions(params),
        reversed: forward_conditions(&params.swapped()),
    }
}

/// `D(n) = A n^2 + B n + C`, the difference
/// `(a1+n)(b1+n)(c2+n) - (a2+n)(b2+n)(c1+n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuoQuadratic {
    #[serde(with = "serde_str")]
    pub a: Rational,
    #[serde(with = "serde_str")]
    pub b: Rational,
    #[serde(with = "serde_str")]
    pub c: Rational,
}

impl QuoQuadratic {
    pub fn of(p: &SixParams) -> Self {
        QuoQuadratic {
            a: (&p.a1 + &p.b1 + &p.c2) - (&p.a2 + &p.b2 + &p.c1),
            b: (&p.a1 * &p.b1 + &p.a1 * &p.c2 + &p.b1 * &p.c2) - (&p.a2 * &p.b2 + &p.a2 * &p.c1 + &p.b2 * &p.c1),
            c: &p.a1 * &p.b1 * &p.c2 - &p.a2 * &p.b2 * &p.c1,
        }
    }

    pub fn at(&self, n: u64) -> Rational {
        let n = Rational::from_integer(n.into());
        (&self.a * &n + &self.b) * &n + &self.c
    }
}

/// Both sides of `(a2+n)(b2+n)(c1+n) <= (a1+n)(b1+n)(c2+n)`.
pub fn quo_sides(p: &SixParams, n: u64) -> (Rational, Rational) {
    let n = Rational::from_integer(n.into());
    (
        (&p.a2 + &n) * (&p.b2 + &n) * (&p.c1 + &n),
        (&p.a1 + &n) * (&p.b1 + &n) * (&p.c2 + &n),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuoReport {
    pub verdict: PropertyVerdict,
    pub quadratic: QuoQuadratic,
}

/// Smallest `n` in `(lo, hi]` with `D(n) < 0`, given `D(lo) >= 0`,
/// `D(hi) < 0` and a sign pattern that switches once on that range.
fn first_negative(d: &QuoQuadratic, mut lo: u64, mut hi: u64) -> u64 {
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if d.at(mid).is_negative() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Decides `(a2+n)(b2+n)(c1+n) <= (a1+n)(b1+n)(c2+n)` for every integer
/// `n >= 0` exactly, through the sign of the quadratic `D(n)`. Witness
/// values are `(lhs, rhs, D(n))` at the first failing `n`.
pub fn quo_inequality_exact(params: &SixParams) -> QuoReport {
    let d = QuoQuadratic::of(params);
    let witness = if d.at(0).is_negative() {
        Some(0)
    } else if d.a.is_negative() || (d.a.is_zero() && d.b.is_negative()) {
        // Eventually negative, and D(0) >= 0: non-negative on a prefix.
        let mut hi = 1u64;
        while !d.at(hi).is_negative() {
            hi *= 2;
        }
        Some(first_negative(&d, hi / 2, hi))
    } else if d.a.is_positive() {
        let vertex = -&d.b / (int(2) * &d.a);
        if vertex.is_positive() {
            let m: u64 = vertex.floor().to_integer().try_into().expect("vertex fits in u64");
            if d.at(m).is_negative() {
                Some(first_negative(&d, 0, m))
            } else if d.at(m + 1).is_negative() {
                Some(m + 1)
            } else {
                None
            }
        } else {
            None
        }
    } else {
        // A = 0, B >= 0: non-decreasing from D(0) >= 0.
        None
    };
    let verdict = match witness {
        None => PropertyVerdict::pass(),
        Some(n) => {
            let (lhs, rhs) = quo_sides(params, n);
            PropertyVerdict::fail(n as usize, vec![lhs, rhs, d.at(n)])
        }
    };
    QuoReport { verdict, quadratic: d }
}

/// Result of checking the sign of `k = q/p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JurkatReport {
    pub expect: ExpectedSign,
    /// Sign of `k_n` for `n >= 1`.
    pub sign: PropertyVerdict,
    /// The difference condition (reversed for the non-positive branch).
    pub hypothesis: PropertyVerdict,
    pub quotient: Series,
}

/// Computes `k = q/p` and checks the expected sign of `k_n`, `n >= 1`.
///
/// Requires `p_0 > 0` and `p` non-increasing. The non-positive branch also
/// requires `q` strictly decreasing; without it the reversed difference
/// condition does not control the sign.
pub fn jurkat_quotient_sign(q: &Series, p: &Series, expect: ExpectedSign) -> Result<JurkatReport> {
    if q.order() != p.order() {
        return Err(Error::OrderMismatch {
            left: q.order(),
            right: p.order(),
        });
    }
    require_jurkat_denominator(p.coeffs())?;
    if expect == ExpectedSign::Nonpositive {
        let qc = q.coeffs();
        if let Some(i) = (1..qc.len()).find(|&i| qc[i] >= qc[i - 1]) {
            return Err(Error::precondition("q must be strictly decreasing", Some(i)));
        }
    }
    let hypothesis = jurkat_condition(q.coeffs(), p.coeffs(), expect == ExpectedSign::Nonpositive)?;
    let k = quotient(q, p)?;
    Ok(JurkatReport {
        expect,
        sign: sign_scan(k.coeffs(), expect),
        hypothesis,
        quotient: k,
    })
}

fn require_positive_coeffs(s: &Series, what: &'static str) -> Result<()> {
    match s.coeffs().iter().position(|c| !c.is_positive()) {
        Some(index) => Err(Error::NonPositive {
            what,
            index,
            value: s.coeff(index).clone(),
        }),
        None => Ok(()),
    }
}

fn require_increasing_points(points: &[Rational], upper: Option<&Rational>) -> Result<()> {
    if points.is_empty() {
        return Err(Error::InvalidParameter("need at least one sample point".into()));
    }
    if !points[0].is_positive() || upper.is_some_and(|u| points[points.len() - 1] >= *u) {
        return Err(Error::InvalidParameter("sample points must lie inside (0, 1)".into()));
    }
    if points.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter("sample points must be strictly increasing".into()));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sample {
    #[serde(with = "serde_str")]
    pub x: Rational,
    #[serde(with = "serde_str")]
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientMonotoneReport {
    /// Coefficient-ratio monotonicity, the hypothesis of the prediction.
    pub hypothesis: RatioMonotonicity,
    pub samples: Vec<Sample>,
    pub samples_non_decreasing: bool,
    pub samples_non_increasing: bool,
    /// `None` when the coefficient ratios are not monotone, so nothing is predicted.
    pub agreement: Option<bool>,
    /// Samples are partial sums of the truncations, not the full series.
    pub truncated: bool,
}

fn partial_sum_quotients(numer: &Series, denom: &Series, points: &[Rational]) -> Vec<Sample> {
    points
        .iter()
        .map(|x| Sample {
            x: x.clone(),
            value: evaluate_partial_sum(numer, x) / evaluate_partial_sum(denom, x),
        })
        .collect()
}

/// Compares the monotonicity predicted by the coefficient ratios `a_n/b_n`
/// with the ordering of the truncated quotient sampled at `sample_points`.
pub fn quotient_monotone_prediction(
    numer: &Series,
    denom: &Series,
    sample_points: &[Rational],
) -> Result<QuotientMonotoneReport> {
    if numer.order() != denom.order() {
        return Err(Error::OrderMismatch {
            left: numer.order(),
            right: denom.order(),
        });
    }
    require_positive_coeffs(denom, "denominator coefficients")?;
    require_increasing_points(sample_points, Some(&Rational::one()))?;
    let hypothesis = ratio_monotonicity(numer.coeffs(), denom.coeffs(), false)?;
    let samples = partial_sum_quotients(numer, denom, sample_points);
    let up = samples.windows(2).all(|w| w[0].value <= w[1].value);
    let down = samples.windows(2).all(|w| w[0].value >= w[1].value);
    let agreement = match (hypothesis.non_decreasing.holds(), hypothesis.non_increasing.holds()) {
        (true, true) => Some(up && down),
        (true, false) => Some(up),
        (false, true) => Some(down),
        (false, false) => None,
    };
    Ok(QuotientMonotoneReport {
        hypothesis,
        samples,
        samples_non_decreasing: up,
        samples_non_increasing: down,
        agreement,
        truncated: true,
    })
}

/// Grid estimate of where the quotient switches from increasing to
/// decreasing. The location is approximate: it is the grid point with the
/// largest sampled value of the truncated quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TurningPoint {
    /// Rise-then-fall over the samples. Witness values are the two samples
    /// around the second rise.
    pub verdict: PropertyVerdict,
    pub coefficient_peak: usize,
    #[serde(with = "serde_str")]
    pub x0: Rational,
    pub flat: bool,
    pub approximate: bool,
    pub samples: Vec<Sample>,
}

pub fn turning_point_locate(numer: &Series, denom: &Series, grid: &[Rational]) -> Result<TurningPoint> {
    if numer.order() != denom.order() {
        return Err(Error::OrderMismatch {
            left: numer.order(),
            right: denom.order(),
        });
    }
    require_positive_coeffs(denom, "denominator coefficients")?;
    require_increasing_points(grid, None)?;
    let unimodal = ratio_unimodal(numer.coeffs(), denom.coeffs())?;
    let coefficient_peak = match unimodal.peak {
        Some(p) => p,
        None => {
            return Err(Error::precondition(
                "coefficient ratios are not unimodal",
                unimodal.verdict.witness_index(),
            ))
        }
    };
    let samples = partial_sum_quotients(numer, denom, grid);
    let flat = samples.windows(2).all(|w| w[0].value == w[1].value);
    let (verdict, peak) = match rise_then_fall(samples.len(), |i, j| samples[i].value.cmp(&samples[j].value)) {
        Ok(p) => (PropertyVerdict::pass(), p),
        Err(n) => (
            PropertyVerdict::fail(n, vec![samples[n - 1].value.clone(), samples[n].value.clone()]),
            0,
        ),
    };
    let peak = if flat { 0 } else { peak };
    Ok(TurningPoint {
        verdict,
        coefficient_peak,
        x0: samples[peak].x.clone(),
        flat,
        approximate: true,
        samples,
    })
}

/// Builds `f = sum a_{2n} x^{2n}` and `g = sum (-1)^n a_{2n} x^{2n}` to order
/// `N` and verifies that their reciprocals vanish at odd indices and satisfy
/// `b_{2n} = (-1)^n c_{2n}`. Witness values are `(b_k, c_k)`.
pub fn parity_reciprocal_check(even_coeffs: &[Rational], order: usize) -> Result<PropertyVerdict> {
    if even_coeffs.is_empty() {
        return Err(Error::TooShort { needed: 1, got: 0 });
    }
    if let Some(index) = even_coeffs.iter().position(|a| !a.is_positive()) {
        return Err(Error::NonPositive {
            what: "even coefficients",
            index,
            value: even_coeffs[index].clone(),
        });
    }
    let coeff = |k: usize, alternating: bool| -> Rational {
        if k % 2 == 1 {
            return Rational::zero();
        }
        match even_coeffs.get(k / 2) {
            Some(a) if alternating && (k / 2) % 2 == 1 => -a,
            Some(a) => a.clone(),
            None => Rational::zero(),
        }
    };
    let f = Series::from_fn(order, |k| coeff(k, false));
    let g = Series::from_fn(order, |k| coeff(k, true));
    let b = reciprocal(&f)?;
    let c = reciprocal(&g)?;
    for k in 0..=order {
        let (bk, ck) = (b.coeff(k), c.coeff(k));
        let ok = if k % 2 == 1 {
            bk.is_zero() && ck.is_zero()
        } else if (k / 2) % 2 == 1 {
            *bk == -ck
        } else {
            bk == ck
        };
        if !ok {
            return Ok(PropertyVerdict::fail(k, vec![bk.clone(), ck.clone()]));
        }
    }
    Ok(PropertyVerdict::pass())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CombinedReport {
    pub conditions: Hyper4Conditions,
    pub quotient: Series,
    /// `q_n >= 0` for `n >= 1`; checked when a forward condition holds.
    pub nonnegative: Option<PropertyVerdict>,
    /// `q_n <= 0` for `n >= 1`; checked when a reversed condition holds.
    pub nonpositive: Option<PropertyVerdict>,
}

impl CombinedReport {
    pub fn holds(&self) -> bool {
        [&self.nonnegative, &self.nonpositive]
            .into_iter()
            .flatten()
            .all(PropertyVerdict::holds)
    }
}

/// Coefficient signs of `2F1(a1,b1;c1;x) / 2F1(a2,b2;c2;x)` under the
/// monotonicity conditions plus positivity and log-convexity of the
/// denominator coefficients (`2a2b2(c2+1) <= (a2+1)(b2+1)c2`, `c2 >= a2+b2-1`).
pub fn combined_theorem_check(params: &SixParams, order: usize) -> Result<CombinedReport> {
    let conditions = hyper4_predicate(params);
    if conditions.direction() == QuotientDirection::None {
        return Err(Error::precondition(
            "none of the three monotonicity conditions holds in either direction",
            None,
        ));
    }
    let denom = params.denominator();
    let one = Rational::one();
    let (a2, b2, c2) = (&params.a2, &params.b2, &params.c2);
    if int(2) * a2 * b2 * (c2 + &one) > (a2 + &one) * (b2 + &one) * c2 {
        return Err(Error::precondition("denominator hypothesis 2a2b2(c2+1) <= (a2+1)(b2+1)c2 fails", None));
    }
    if *c2 < a2 + b2 - &one {
        return Err(Error::precondition("denominator hypothesis c2 >= a2+b2-1 fails", None));
    }
    let quotient = quotient(&gauss_2f1(&params.numerator(), order), &gauss_2f1(&denom, order))?;
    let nonnegative = conditions
        .increasing()
        .then(|| sign_scan(quotient.coeffs(), ExpectedSign::Nonnegative));
    let nonpositive = conditions
        .decreasing()
        .then(|| sign_scan(quotient.coeffs(), ExpectedSign::Nonpositive));
    Ok(CombinedReport {
        conditions,
        quotient,
        nonnegative,
        nonpositive,
    })
}
