//! One PASS/FAIL line per acceptance criterion. Identities are exact, so the
//! only tolerance is zero; each criterion also carries a wall-time bound.

mod common;

use std::time::{Duration, Instant};

use motivic::curve::{
    check_dec_zeta, check_functional_equation, check_symmetric_power_decomposition, check_zeta_rationality,
};
use motivic::moduli::{
    check_inversion_consistency, check_j_linear_term, check_j_squared_cancellation, check_rank2, check_rank3,
    check_unstable_rank2_hn_sum, lefschetz_cube_probe, m2_chi, m3_chi, var_rank2_check, var_rank3_check,
    x_identity_all,
};
use motivic::realize::{
    check_counts_against_curve, check_hodge_consistency, check_poincare_rank2, count_cross_check, fixture_curve,
    newstead_oracle,
};
use motivic::report::{CheckOutcome, Verdict};
use motivic::ring::{GenusContext, TruncationWindow};
use proptest::test_runner::{Config, TestRunner};

/// Exact identities: coefficients must agree with zero difference.
const TOLERANCE: i64 = 0;
const PROPTEST_CASES: u32 = 128;

type Outcome = Result<(), String>;

fn expect(what: &str, o: motivic::Result<CheckOutcome>, want: Verdict) -> Outcome {
    let o = o.map_err(|e| format!("{what}: {e}"))?;
    if o.verdict == want {
        Ok(())
    } else {
        Err(format!("{what}: {:?}, witness {:?}", o.verdict, o.witness))
    }
}

fn pass(what: &str, o: motivic::Result<CheckOutcome>) -> Outcome {
    expect(what, o, Verdict::Pass)
}

fn adic(g: u32) -> GenusContext {
    let ctx = GenusContext::adic(g as i64).unwrap();
    assert_eq!(ctx.window(), TruncationWindow::default_adic(g));
    ctx
}

fn dim(g: u32, r: u32) -> GenusContext {
    GenusContext::dimensional(g as i64, r).unwrap()
}

fn vanishes_above(what: &str, x: &motivic::ring::MotiveSeries, deg: i64) -> Outcome {
    match x.first_nonzero_above(deg) {
        None => Ok(()),
        Some((e, c)) => Err(format!("{what}: nonzero coefficient {c} at 𝕃^{e} above {deg}")),
    }
}

fn rank2() -> Outcome {
    for g in 2..=6 {
        pass(&format!("rank2 g={g}"), check_rank2(adic(g)))?;
        let m = m2_chi(adic(g)).map_err(|e| e.to_string())?;
        vanishes_above(&format!("m2 g={g}"), &m, 3 * (g as i64 - 1))?;
    }
    Ok(())
}

fn rank3() -> Outcome {
    for g in 2..=5 {
        pass(&format!("rank3 g={g}"), check_rank3(adic(g)))?;
        let m = m3_chi(adic(g)).map_err(|e| e.to_string())?;
        vanishes_above(&format!("m3 g={g}"), &m, 8 * (g as i64 - 1))?;
    }
    Ok(())
}

fn intermediate() -> Outcome {
    for g in 2..=5 {
        pass(&format!("j-squared g={g}"), check_j_squared_cancellation(adic(g)))?;
        pass(&format!("j-linear g={g}"), check_j_linear_term(adic(g)))?;
    }
    for g in 2..=10 {
        pass(&format!("x-identity g={g}"), x_identity_all(g))?;
    }
    Ok(())
}

fn zeta() -> Outcome {
    for g in 2..=8 {
        pass(&format!("rationality g={g}"), check_zeta_rationality(adic(g), 4 * g))?;
        pass(&format!("functional equation g={g}"), check_functional_equation(adic(g)))?;
    }
    Ok(())
}

fn symmetric_powers() -> Outcome {
    for g in 2..=8 {
        for k in g..=3 * g {
            pass(&format!("symmetric power g={g} k={k}"), check_symmetric_power_decomposition(adic(g), k as i64))?;
        }
    }
    Ok(())
}

fn dec_zeta() -> Outcome {
    for g in 2..=6 {
        for i in 1..=3 {
            pass(&format!("deczeta-chow g={g} i={i}"), check_dec_zeta(adic(g), i))?;
        }
        for i in 2..=3 {
            pass(&format!("deczeta-var g={g} i={i}"), check_dec_zeta(dim(g, 3), i))?;
        }
    }
    Ok(())
}

fn dimensional() -> Outcome {
    for g in 2..=4 {
        pass(&format!("var-rank2 g={g}"), var_rank2_check(dim(g, 2)))?;
        pass(&format!("var-rank3 g={g}"), var_rank3_check(dim(g, 3)))?;
        pass(&format!("hn-sum g={g}"), check_unstable_rank2_hn_sum(dim(g, 2)))?;
        expect(&format!("l3 probe g={g}"), lefschetz_cube_probe(dim(g, 2)), Verdict::Flagged)?;
    }
    Ok(())
}

fn inversion() -> Outcome {
    for g in 2..=4 {
        for n in [2, 3] {
            let what = format!("inversion g={g} n={n}");
            let o = check_inversion_consistency(adic(g), n, 1).map_err(|e| format!("{what}: {e}"))?;
            if o.verdict != Verdict::Flagged || o.note.is_none() {
                return Err(format!("{what}: {:?} note {:?}", o.verdict, o.note));
            }
            let fixed = o.details["equals_fixed"].as_bool() == Some(true);
            let varying = o.details["equals_jacobian_times_fixed"].as_bool() == Some(true);
            if fixed == varying {
                return Err(format!("{what}: fixed={fixed} varying={varying}"));
            }
            if o.details["exponents"].as_array().is_none_or(|a| a.is_empty()) {
                return Err(format!("{what}: no composition exponents recorded"));
            }
        }
    }
    Ok(())
}

fn realizations() -> Outcome {
    let p2 = newstead_oracle(2).map_err(|e| e.to_string())?;
    if p2.to_string() != "1 + t^2 + 4t^3 + t^4 + t^6" {
        return Err(format!("oracle at g=2 is {p2}"));
    }
    for g in 2..=6 {
        pass(&format!("poincare g={g}"), check_poincare_rank2(g))?;
        pass(&format!("hodge g={g}"), check_hodge_consistency(g))?;
    }
    let curve = fixture_curve(2).map_err(|e| e.to_string())?;
    let (data, brute) = check_counts_against_curve(&curve, 6).map_err(|e| e.to_string())?;
    pass("brute counts", Ok(brute))?;
    pass("count cross-check", count_cross_check(&data, 6))
}

fn properties() -> Outcome {
    fn suite<S: proptest::strategy::Strategy>(
        name: &str,
        strategy: S,
        body: fn(S::Value) -> Result<(), proptest::test_runner::TestCaseError>,
    ) -> Outcome {
        let mut runner = TestRunner::new(Config::with_cases(PROPTEST_CASES));
        runner.run(&strategy, body).map_err(|e| format!("{name}: {e}"))
    }
    suite("ring axioms", common::genus_and_three_polys(), common::ring_axioms)?;
    suite("duality closure", common::duality_inputs(), common::duality_closure)?;
    suite("unit inverse", common::unit_inputs(), common::unit_inverse)?;
    suite("window soundness", common::window_inputs(), common::window_soundness)?;
    suite("realization homomorphism", common::homomorphism_inputs(), common::realization_homomorphism)
}

struct Criterion {
    name: &'static str,
    bound: Duration,
    run: fn() -> Outcome,
}

const fn criterion(name: &'static str, secs: u64, run: fn() -> Outcome) -> Criterion {
    Criterion { name, bound: Duration::from_secs(secs), run }
}

const CRITERIA: &[Criterion] = &[
    criterion("rank-2 decomposition, g=2..6", 5, rank2),
    criterion("rank-3 decomposition, g=2..5", 60, rank3),
    criterion("rank-3 intermediate identities", 5, intermediate),
    criterion("zeta rationality and functional equation, g=2..8", 5, zeta),
    criterion("symmetric powers, g<=k<=3g, g=2..8", 5, symmetric_powers),
    criterion("decomposed zeta in both completions, g=2..6", 10, dec_zeta),
    criterion("dimensional completion rank 2 and 3, g=2..4", 30, dimensional),
    criterion("inversion formula reading, g=2..4", 30, inversion),
    criterion("realizations", 10, realizations),
    criterion("property suites, 128 cases each", 60, properties),
];

fn main() {
    assert_eq!(TOLERANCE, 0);
    let mut failed = 0;
    for (i, c) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match &result {
            Ok(()) if elapsed <= c.bound => "PASS",
            _ => "FAIL",
        };
        print!(
            "{verdict} {:>2} {} ({:.2} s, bound {} s, tolerance {TOLERANCE})",
            i + 1,
            c.name,
            elapsed.as_secs_f64(),
            c.bound.as_secs()
        );
        match result {
            Err(e) => print!(": {e}"),
            Ok(()) if elapsed > c.bound => print!(": over time"),
            Ok(()) => {}
        }
        println!();
        if verdict == "FAIL" {
            failed += 1;
        }
    }
    println!("{} of {} criteria pass", CRITERIA.len() - failed, CRITERIA.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
