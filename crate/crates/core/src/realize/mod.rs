//! Ring homomorphisms out of the λ-basis ring: Betti (Poincaré polynomial),
//! Hodge (E-polynomial) and point counting over a finite field.
//!
//! Conventions: `h¹(C)` is `2g` classes of degree 1, so `λ^a ↦ C(2g,a) t^a`
//! and `𝕃 ↦ t²`; in Hodge terms `λ^a ↦ Σ_i C(g,i) C(g,a−i) u^i v^{a−i}` and
//! `𝕃 ↦ uv`; over `F_q`, `λ^a ↦ (−1)^a e_a` and `𝕃 ↦ q`.

mod counting;
mod finite_field;
mod poly;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

pub use counting::{sym_count_oracle, CountingData, CountsFile};
pub use finite_field::{fixture_curve, FiniteField, HyperellipticCurve};
pub use poly::{Hodge, Laurent};

use crate::curve::{jacobian_poly, sym_power_poly};
use crate::error::{Error, Result};
use crate::moduli::{m2_chi, DecompositionTemplate};
use crate::report::{CheckMode, CheckOutcome, Witness};
use crate::ring::{CoeffPoly, GenusContext, LambdaMonomial, MotivePoly, MotiveSeries};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealizationTarget {
    Poincare,
    Hodge,
    Count(CountingData),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealizedValue {
    Poincare(Laurent),
    Hodge(Hodge),
    Count(BigRational),
}

impl RealizedValue {
    pub fn to_json(&self) -> Value {
        match self {
            RealizedValue::Poincare(p) => json!({ "target": "poincare", "value": p.to_json() }),
            RealizedValue::Hodge(h) => json!({ "target": "hodge", "value": h.to_json() }),
            RealizedValue::Count(c) => json!({ "target": "count", "value": c.to_string() }),
        }
    }
}

impl std::fmt::Display for RealizedValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RealizedValue::Poincare(p) => write!(f, "{p}"),
            RealizedValue::Hodge(h) => write!(f, "{}", h.to_json()),
            RealizedValue::Count(c) => write!(f, "{c}"),
        }
    }
}

/// A realized series: exact when the input was a polynomial class, otherwise
/// the image of the terms inside `window` only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub value: RealizedValue,
    pub window: (i64, i64),
    pub partial: bool,
}

fn lambda_poincare(g: u32, a: u32) -> Laurent {
    Laurent::monomial(a as i64, binomial(BigInt::from(2 * g), BigInt::from(a)))
}

fn lambda_hodge(g: u32, a: u32) -> Hodge {
    let mut out = Hodge::zero();
    for i in 0..=a.min(g) {
        if a - i > g {
            continue;
        }
        let c = binomial(BigInt::from(g), BigInt::from(i)) * binomial(BigInt::from(g), BigInt::from(a - i));
        out.add_term(i as i64, (a - i) as i64, &c);
    }
    out
}

fn count_lambda(data: &CountingData, a: u32) -> BigInt {
    let e = data.elementary(a as usize);
    if a % 2 == 1 {
        -e
    } else {
        e
    }
}

fn q_power(q: u64, e: i64) -> BigRational {
    let qb = BigRational::from_integer(BigInt::from(q));
    if e >= 0 {
        num_traits::pow(qb, e as usize)
    } else {
        num_traits::pow(qb.recip(), (-e) as usize)
    }
}

fn monomial_image(m: &LambdaMonomial, target: &RealizationTarget, g: u32) -> RealizedValue {
    let exps = m.exps();
    match target {
        RealizationTarget::Poincare => RealizedValue::Poincare(
            exps.iter()
                .enumerate()
                .fold(Laurent::one(), |acc, (i, &k)| acc.mul(&lambda_poincare(g, i as u32 + 1).pow(k))),
        ),
        RealizationTarget::Hodge => RealizedValue::Hodge(
            exps.iter()
                .enumerate()
                .fold(Hodge::one(), |acc, (i, &k)| acc.mul(&lambda_hodge(g, i as u32 + 1).pow(k))),
        ),
        RealizationTarget::Count(d) => RealizedValue::Count(BigRational::from_integer(
            exps.iter()
                .enumerate()
                .fold(BigInt::one(), |acc, (i, &k)| acc * count_lambda(d, i as u32 + 1).pow(k)),
        )),
    }
}

fn check_target(target: &RealizationTarget, g: u32) -> Result<()> {
    if let RealizationTarget::Count(d) = target {
        if d.genus() != g {
            return Err(Error::ContextMismatch(format!(
                "counting data of genus {} for a genus-{g} class",
                d.genus()
            )));
        }
    }
    Ok(())
}

fn zero_value(target: &RealizationTarget) -> RealizedValue {
    match target {
        RealizationTarget::Poincare => RealizedValue::Poincare(Laurent::zero()),
        RealizationTarget::Hodge => RealizedValue::Hodge(Hodge::zero()),
        RealizationTarget::Count(_) => RealizedValue::Count(BigRational::zero()),
    }
}

fn accumulate(acc: &mut RealizedValue, e: i64, c: &CoeffPoly, target: &RealizationTarget, g: u32) {
    for (m, n) in c.terms() {
        let img = monomial_image(m, target, g);
        match (&mut *acc, img) {
            (RealizedValue::Poincare(a), RealizedValue::Poincare(p)) => {
                *a = a.add(&p.mul(&Laurent::monomial(2 * e, n.clone())));
            }
            (RealizedValue::Hodge(a), RealizedValue::Hodge(h)) => {
                *a = a.add(&h.mul(&Hodge::monomial(e, e, n.clone())));
            }
            (RealizedValue::Count(a), RealizedValue::Count(v)) => {
                let RealizationTarget::Count(d) = target else { unreachable!() };
                *a += v * q_power(d.q(), e) * BigRational::from_integer(n.clone());
            }
            _ => unreachable!("image kinds follow the target"),
        }
    }
}

/// Image of an exact class.
pub fn realize_poly(x: &MotivePoly, g: u32, target: &RealizationTarget) -> Result<RealizedValue> {
    check_target(target, g)?;
    let mut acc = zero_value(target);
    for (e, c) in x.terms() {
        accumulate(&mut acc, e, c, target, g);
    }
    Ok(acc)
}

/// Image of a series on its effective window; `partial` unless the series
/// is a polynomial class.
pub fn realize(x: &MotiveSeries, target: &RealizationTarget) -> Result<Realization> {
    let g = x.ctx().g();
    check_target(target, g)?;
    let mut acc = zero_value(target);
    for (e, c) in x.terms() {
        accumulate(&mut acc, e, c, target, g);
    }
    Ok(Realization {
        value: acc,
        window: x.effective_window(),
        partial: !x.is_polynomial(),
    })
}

/// `((1+t³)^{2g} − t^{2g}(1+t)^{2g}) / ((1−t²)(1−t⁴))`, divided exactly.
pub fn newstead_oracle(g: u32) -> Result<Laurent> {
    if g < 2 {
        return Err(Error::InvalidGenus(g as i64));
    }
    let one_t3 = Laurent::from_coeffs([1, 0, 0, 1]);
    let one_t = Laurent::from_coeffs([1, 1]);
    let num = one_t3
        .pow(2 * g)
        .sub(&Laurent::monomial(2 * g as i64, 1).mul(&one_t.pow(2 * g)));
    let den = Laurent::from_coeffs([1, 0, -1]).mul(&Laurent::from_coeffs([1, 0, 0, 0, -1]));
    num.div_exact(&den)
        .ok_or_else(|| Error::Oracle(format!("oracle division leaves a remainder at g={g}")))
}

/// Poincaré image of the rank-2 template against [`newstead_oracle`].
pub fn check_poincare_rank2(g: u32) -> Result<CheckOutcome> {
    let template = DecompositionTemplate::rank2(g).to_poly();
    let RealizedValue::Poincare(p) = realize_poly(&template, g, &RealizationTarget::Poincare)? else {
        unreachable!()
    };
    let oracle = newstead_oracle(g)?;
    let witness = (p != oracle).then(|| {
        let e = (0..=p.degree().max(oracle.degree()).unwrap_or(0))
            .find(|&e| p.coeff(e) != oracle.coeff(e))
            .unwrap_or(0);
        let mut w = Witness::scalar(format!("t^{e}"), p.coeff(e), oracle.coeff(e));
        w.exponent = Some(e);
        w
    });
    Ok(CheckOutcome::from_witness(CheckMode::Exact, witness).with_details(json!({ "poincare": p.to_json() })))
}

/// The classes whose realizations the consistency checks look at.
pub fn named_classes(g: u32) -> Vec<(String, MotivePoly)> {
    let mut out = vec![
        ("jac".to_string(), jacobian_poly(g)),
        ("m2".to_string(), DecompositionTemplate::rank2(g).to_poly()),
        ("m3".to_string(), DecompositionTemplate::rank3(g).to_poly()),
    ];
    for k in 0..=2 * g {
        out.push((format!("ck:{k}"), sym_power_poly(g, k)));
    }
    out
}

/// Resolves `jac`, `m2`, `m3` or `ck:<k>` to its exact class.
pub fn named_class(g: u32, name: &str) -> Result<MotivePoly> {
    if g < 2 {
        return Err(Error::InvalidGenus(g as i64));
    }
    match name {
        "jac" => Ok(jacobian_poly(g)),
        "m2" => Ok(DecompositionTemplate::rank2(g).to_poly()),
        "m3" => Ok(DecompositionTemplate::rank3(g).to_poly()),
        _ => {
            let k = name
                .strip_prefix("ck:")
                .and_then(|k| k.parse::<u32>().ok())
                .ok_or_else(|| Error::Config(format!("unknown class {name:?}")))?;
            Ok(sym_power_poly(g, k))
        }
    }
}

/// Hodge image at `u = v = t` equals the Poincaré image.
pub fn check_hodge_consistency(g: u32) -> Result<CheckOutcome> {
    for (name, class) in named_classes(g) {
        let RealizedValue::Hodge(h) = realize_poly(&class, g, &RealizationTarget::Hodge)? else {
            unreachable!()
        };
        let RealizedValue::Poincare(p) = realize_poly(&class, g, &RealizationTarget::Poincare)? else {
            unreachable!()
        };
        if h.diagonal() != p {
            return Ok(CheckOutcome::fail(
                CheckMode::Exact,
                Witness::scalar(name, h.diagonal(), p),
            ));
        }
    }
    Ok(CheckOutcome::pass(CheckMode::Exact))
}

fn count_of(x: &MotivePoly, data: &CountingData) -> Result<BigRational> {
    match realize_poly(x, data.genus(), &RealizationTarget::Count(data.clone()))? {
        RealizedValue::Count(c) => Ok(c),
        _ => unreachable!(),
    }
}

/// `#C_k(F_q)` from the realization against [`sym_count_oracle`] for
/// `k ≤ k_max`; the moduli classes realize to non-negative integers; and
/// `χ(M(2,L))` minus its template realizes to 0.
pub fn count_cross_check(data: &CountingData, k_max: usize) -> Result<CheckOutcome> {
    let g = data.genus();
    if g < 2 {
        return Err(Error::InvalidGenus(g as i64));
    }
    for k in 0..=k_max {
        let realized = count_of(&sym_power_poly(g, k as u32), data)?;
        let oracle = BigRational::from_integer(sym_count_oracle(data, k)?);
        if realized != oracle {
            return Ok(CheckOutcome::fail(
                CheckMode::Exact,
                Witness::scalar(format!("k={k}"), realized, oracle),
            ));
        }
    }
    let mut moduli = serde_json::Map::new();
    for (name, t) in [("m2", DecompositionTemplate::rank2(g)), ("m3", DecompositionTemplate::rank3(g))] {
        let c = count_of(&t.to_poly(), data)?;
        if !c.is_integer() || c.is_negative() {
            return Ok(CheckOutcome::fail(
                CheckMode::Exact,
                Witness::scalar(name, &c, "a non-negative integer"),
            ));
        }
        moduli.insert(name.into(), json!(c.to_string()));
    }
    let ctx = GenusContext::adic(g as i64)?;
    let diff = m2_chi(ctx)?.sub(&DecompositionTemplate::rank2(g).to_series(ctx))?;
    let r = realize(&diff, &RealizationTarget::Count(data.clone()))?;
    if r.value != RealizedValue::Count(BigRational::zero()) {
        return Ok(CheckOutcome::fail(CheckMode::Exact, Witness::scalar("m2 − template", r.value, 0)));
    }
    Ok(CheckOutcome::pass(CheckMode::Exact).with_details(json!({
        "q": data.q(),
        "counts": data.counts(),
        "k_max": k_max,
        "moduli_counts": moduli,
    })))
}

/// Brute-force `N_j` for `j ≤ j_max` against the values reconstructed from
/// `N_1..N_g`.
pub fn check_counts_against_curve(curve: &HyperellipticCurve, j_max: usize) -> Result<(CountingData, CheckOutcome)> {
    let g = curve.genus() as usize;
    let brute = curve.point_counts(j_max.max(g))?;
    let data = CountingData::new(curve.p, brute[..g].iter().map(|&n| n as i64).collect())?;
    let rebuilt = data.extended_counts(brute.len());
    for (j, (b, r)) in brute.iter().zip(&rebuilt).enumerate() {
        if BigInt::from(*b) != *r {
            let w = Witness::scalar(format!("N_{}", j + 1), r, b);
            return Ok((data, CheckOutcome::fail(CheckMode::Exact, w)));
        }
    }
    Ok((data, CheckOutcome::pass(CheckMode::Exact).with_details(json!({ "brute_counts": brute }))))
}
