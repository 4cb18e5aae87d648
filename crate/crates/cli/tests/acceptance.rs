//! Acceptance suite: twelve criteria, one PASS/FAIL line each.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use kaluza_core::generators::{gauss_2f1, named_series};
use kaluza_core::means::{power_mean, theorem2_verify, MeanParams, DEFAULT_TOLERANCE};
use kaluza_core::oracle::{power_identity_check, quotient_via_linear_solve, random_series, reciprocal_via_linear_solve};
use kaluza_core::rational::{int, matches_printed_decimal, parse_rational, rat};
use kaluza_core::sequence::{is_log_convex, random_log_convex};
use kaluza_core::series::{
    cauchy_product, differentiate, integrate_termwise, power_integer, power_rational, quotient, reciprocal,
};
use kaluza_core::theorems::{
    hyper1_predicate, hyper2_witness, hyper4_predicate, kaluza_sign_check, parity_reciprocal_check, quo_inequality_exact,
    quo_sides,
};
use kaluza_core::{HypergeomParams, NamedSeries, Rational, Series, SixParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

/// Description, check, runtime limit in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn r(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

fn prefix_eq(label: &str, s: &Series, want: &[&str]) -> Outcome {
    let want: Vec<Rational> = want.iter().map(|w| r(w)).collect();
    ensure(s.coeffs().len() >= want.len() && s.coeffs()[..want.len()] == want[..], || {
        format!("{label}: got {s}, want prefix {want:?}")
    })
}

fn zero() -> Rational {
    Rational::from_integer(0.into())
}

fn criterion_1() -> Outcome {
    let tables: [(NamedSeries, [&str; 11]); 4] = [
        (NamedSeries::Cosh, ["1", "0", "-1/2", "0", "5/24", "0", "-61/720", "0", "277/8064", "0", "-50521/3628800"]),
        (NamedSeries::Cos, ["1", "0", "1/2", "0", "5/24", "0", "61/720", "0", "277/8064", "0", "50521/3628800"]),
        (NamedSeries::Sinhc, ["1", "0", "-1/6", "0", "7/360", "0", "-31/15120", "0", "127/604800", "0", "-73/3421440"]),
        (NamedSeries::Sinc, ["1", "0", "1/6", "0", "7/360", "0", "31/15120", "0", "127/604800", "0", "73/3421440"]),
    ];
    for (name, want) in tables {
        prefix_eq(name.name(), &reciprocal(&named_series(name, 10)).unwrap(), &want)?;
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    let p = HypergeomParams::new(int(3), int(3), int(6)).unwrap();
    prefix_eq("1/2F1(3,3;6)", &reciprocal(&gauss_2f1(&p, 3)).unwrap(), &["1", "-3/2", "15/28", "-1/56"])?;
    let w = hyper2_witness(&p).unwrap();
    ensure(w == rat(15, 28), || format!("hyper2 witness {w}"))
}

fn criterion_3() -> Outcome {
    let rep = theorem2_verify(4, &rat(1999, 1000), &rat(1, 100), DEFAULT_TOLERANCE).unwrap();
    ensure(rep.q2_positive && *rep.reciprocal.coeff(2) > zero(), || "q2 not positive".into())?;
    for (c, printed) in rep.reciprocal.coeffs().iter().zip(["0.50025", "-0.25025", "0.000062594"]) {
        ensure(matches_printed_decimal(c, printed).unwrap(), || format!("{c} does not round to {printed}"))?;
    }
    ensure(rep.decimals == ["0.50025", "-0.25025", "0.000062594"], || format!("decimals {:?}", rep.decimals))?;
    ensure((rep.mean_at_first_index - 1.00215).abs() <= 1e-4, || format!("mean {}", rep.mean_at_first_index))?;
    ensure(rep.mean_condition.holds(), || "power-mean condition fails".into())
}

fn criterion_4() -> Outcome {
    let f4 = named_series(NamedSeries::F4, 4);
    let g = power_rational(&f4, &rat(1, 2)).unwrap();
    prefix_eq(
        "f4^(1/2)",
        &g,
        &["1", "77/160", "18391/51200", "4727893/8192000", "190367203/209715200"],
    )?;
    ensure(power_identity_check(&f4, &rat(1, 2), &g).unwrap(), || "g^2 != f4".into())?;
    let a = g.coeffs();
    ensure(&a[3] * &a[3] > &a[2] * &a[4], || "a3^2 <= a2 a4".into())
}

fn criterion_5() -> Outcome {
    let f = |n, order| named_series(n, order);
    let f1f2 = cauchy_product(&f(NamedSeries::F1, 3), &f(NamedSeries::F2, 3)).unwrap();
    prefix_eq("1/(f1 f2)", &reciprocal(&f1f2).unwrap(), &["1", "-2", "5/12", "-1/6"])?;
    let q = quotient(&f(NamedSeries::F2, 3), &f(NamedSeries::F1, 3)).unwrap();
    prefix_eq("1/(f2/f1)", &reciprocal(&q).unwrap(), &["1", "1", "5/3", "37/12"])?;
    let cube = power_integer(&f(NamedSeries::F1, 3), 3);
    prefix_eq("1/f1^3", &reciprocal(&cube).unwrap(), &["1", "-9/2", "6", "-9/4"])?;
    let p = power_rational(&f(NamedSeries::F2, 3), &rat(9, 5)).unwrap();
    prefix_eq("1/f2^(9/5)", &reciprocal(&p).unwrap(), &["1", "-9/10", "3/100", "-9/1000"])?;
    let d = differentiate(&f(NamedSeries::F2, 3)).unwrap();
    prefix_eq("1/f2'", &reciprocal(&d).unwrap(), &["2", "-8/3", "5/9"])?;
    prefix_eq("integral f2", &integrate_termwise(&f(NamedSeries::F2, 4)), &["1", "1/4", "1/9", "1/16", "1/25"])?;
    prefix_eq("1/f5", &reciprocal(&f(NamedSeries::F5, 3)).unwrap(), &["1", "-1", "1/2", "-1/3"])
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for case in 0..100 {
        let seq = random_log_convex(&mut rng, 41);
        ensure(is_log_convex(&seq).unwrap().holds(), || format!("case {case}: generator not log-convex"))?;
        let k = kaluza_sign_check(&Series::new(seq).unwrap()).unwrap();
        ensure(k.holds, || format!("case {case}: positive coefficient at {:?}", k.first_positive_index))?;
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let values = [rat(1, 4), rat(1, 2), int(1), int(2), int(4)];
    let one = int(1);
    for a in &values {
        for b in &values {
            for c in &values {
                let p = HypergeomParams::new(a.clone(), b.clone(), c.clone()).unwrap();
                let label = format!("({a},{b},{c})");
                let series = gauss_2f1(&p, 40);
                if hyper1_predicate(&p).unwrap().holds {
                    ensure(is_log_convex(series.coeffs()).unwrap().holds(), || format!("{label}: not log-convex"))?;
                    ensure(kaluza_sign_check(&series).unwrap().holds, || format!("{label}: Kaluza fails"))?;
                }
                let w = hyper2_witness(&p).unwrap();
                let strict = int(2) * a * b * (c + &one) > (a + &one) * (b + &one) * c;
                ensure((w > zero()) == strict, || format!("{label}: witness sign {w}"))?;
                let q2 = reciprocal(&series.resized(2)).unwrap().coeff(2).clone();
                ensure(w == q2, || format!("{label}: witness {w} vs coefficient {q2}"))?;
            }
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for case in 0..200 {
        let order = rng.random_range(0..=12);
        let f = random_series(&mut rng, order);
        let g = random_series(&mut rng, order);
        ensure(reciprocal(&g).unwrap() == reciprocal_via_linear_solve(&g).unwrap(), || {
            format!("case {case}: reciprocal of {g}")
        })?;
        ensure(quotient(&f, &g).unwrap() == quotient_via_linear_solve(&f, &g).unwrap(), || {
            format!("case {case}: quotient {f} / {g}")
        })?;
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    for name in [NamedSeries::Cosh, NamedSeries::Sinhc] {
        let even: Vec<Rational> = named_series(name, 20).coeffs().iter().step_by(2).cloned().collect();
        ensure(parity_reciprocal_check(&even, 20).unwrap().holds(), || format!("{name} pair"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for case in 0..50 {
        let len = rng.random_range(1..=15);
        let even: Vec<Rational> = (0..len).map(|_| rat(rng.random_range(1..=30), rng.random_range(1..=12))).collect();
        let order = 2 * len;
        let v = parity_reciprocal_check(&even, order).unwrap();
        ensure(v.holds(), || format!("case {case}: fails at {:?}", v.witness_index()))?;
    }
    Ok(())
}

fn positive(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.random_range(1..=16), rng.random_range(1..=4))
}

/// Draws a tuple; every fourth draw is built to satisfy one of the three
/// monotonicity conditions.
fn random_six(rng: &mut ChaCha8Rng, i: usize) -> SixParams {
    let mut v: [Rational; 6] = std::array::from_fn(|_| positive(rng));
    let bump = |x: &Rational, rng: &mut ChaCha8Rng| x + rat(rng.random_range(0..=8), 4);
    match i % 4 {
        1 => {
            v[0] = bump(&v[3], rng);
            v[1] = bump(&v[4], rng);
            v[5] = bump(&v[2], rng);
        }
        2 => {
            let mut s = [positive(rng), positive(rng), positive(rng)];
            s.sort();
            let (a2, a1, b1) = (s[0].clone(), s[1].clone(), s[2].clone());
            let b2 = &a1 + &b1 - &a2 - rat(rng.random_range(0..=4), 8);
            let b2 = if b2 < b1 { b1.clone() } else { b2 };
            v = [a1, b1, v[2].clone(), a2, b2, bump(&v[2], rng)];
        }
        3 => {
            v[0] = bump(&v[3], rng);
            v[1] = bump(&v[4], rng);
            v[5] = bump(&v[2], rng);
            v.swap(0, 1);
        }
        _ => {}
    }
    SixParams::new(v).unwrap()
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut implied = 0;
    for case in 0..400 {
        let p = random_six(&mut rng, case);
        let rep = quo_inequality_exact(&p);
        let brute = (0..=1000u64).find(|&n| {
            let (lhs, rhs) = quo_sides(&p, n);
            lhs > rhs
        });
        match (rep.verdict.witness_index(), brute) {
            (None, None) => {}
            (Some(w), Some(b)) if w as u64 == b => {}
            (Some(w), None) if w > 1000 => {
                let (lhs, rhs) = quo_sides(&p, w as u64);
                ensure(lhs > rhs, || format!("case {case}: late witness {w} does not fail"))?;
            }
            (exact, brute) => return Err(format!("case {case}: {p:?} exact {exact:?} vs brute {brute:?}")),
        }
        let c = hyper4_predicate(&p);
        if c.increasing() {
            implied += 1;
            ensure(rep.verdict.holds(), || format!("case {case}: {:?} holds but quo fails", c.satisfied()))?;
        }
        if c.decreasing() {
            implied += 1;
            ensure(quo_inequality_exact(&p.swapped()).verdict.holds(), || {
                format!("case {case}: {:?} holds but reversed quo fails", c.satisfied())
            })?;
        }
    }
    ensure(implied >= 50, || format!("only {implied} tuples satisfied a condition"))
}

fn criterion_11() -> Outcome {
    let axis: Vec<f64> = (0..20).map(|i| 10f64.powf(-2.0 + 4.0 * i as f64 / 19.0)).collect();
    let ts: Vec<f64> = (0..20).map(|i| 10f64.powf(-4.0 + 5.0 * i as f64 / 19.0)).collect();
    let tol = 1e-12;
    for &a in &axis {
        for &b in &axis {
            let mut prev = 0.0;
            for &t in &ts {
                let m = power_mean(&MeanParams::new(a, b, t).unwrap());
                let lower = (a * b).sqrt();
                ensure(m >= lower * (1.0 - tol), || format!("m({a},{b},{t}) = {m} < sqrt(ab) = {lower}"))?;
                ensure(m <= a.max(b) * (1.0 + tol), || format!("m({a},{b},{t}) = {m} > max"))?;
                ensure(m >= prev * (1.0 - tol), || format!("m({a},{b},.) decreases at t = {t}: {prev} -> {m}"))?;
                prev = m;
            }
        }
    }
    Ok(())
}

fn criterion_12() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_kaluza"))
        .arg("reproduce-paper")
        .output()
        .map_err(|e| e.to_string())?;
    let stdout = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = stdout.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).collect();
    ensure(out.status.code() == Some(0), || format!("exit {:?}\n{stdout}", out.status.code()))?;
    ensure(!lines.is_empty() && lines.iter().all(|l| l.starts_with("PASS ")), || stdout.to_string())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 12] = [
        ("exact reciprocal tables for cosh, cos, sinhc, sinc", criterion_1, 1),
        ("2F1(3,3;6) reciprocal and hyper2 witness", criterion_2, 1),
        ("power-mean counterexample", criterion_3, 1),
        ("square root of f4 and its log-convexity failure", criterion_4, 1),
        ("product, quotient, power, derivative and integral examples", criterion_5, 2),
        ("100 random log-convex sequences have the Kaluza property", criterion_6, 30),
        ("hypergeometric predicate grid", criterion_7, 60),
        ("oracle equivalence on 200 random cases", criterion_8, 10),
        ("parity of reciprocals", criterion_9, 10),
        ("quotient inequality against brute force", criterion_10, 30),
        ("power-mean bounds and monotonicity", criterion_11, 5),
        ("reproduce-paper exits 0", criterion_12, 120),
    ];
    let mut failed = Vec::new();
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            ensure(elapsed <= Duration::from_secs(limit), || format!("took {elapsed:?}, limit {limit}s"))
        });
        match &result {
            Ok(()) => println!("criterion {:>2}: PASS {name} ({elapsed:.2?})", i + 1),
            Err(e) => {
                println!("criterion {:>2}: FAIL {name} ({elapsed:.2?}): {e}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
