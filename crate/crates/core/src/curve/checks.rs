//! Checkers for the identities satisfied by symmetric powers and the zeta function.

use serde_json::json;

use super::classes::{jacobian_poly, sym_power_poly};
use super::zeta::{dec_zeta_rhs, zeta_at_lefschetz, zeta_closed_form, ZetaSeries};
use crate::error::{Error, Result};
use crate::report::{CheckMode, CheckOutcome, Witness};
use crate::ring::{GenusContext, Mode, MotivePoly, MotiveSeries};

fn series_outcome(location: &str, lhs: &MotiveSeries, rhs: &MotiveSeries) -> Result<CheckOutcome> {
    let cmp = lhs.equals(rhs)?;
    let out = CheckOutcome::from_witness(lhs.mode().into(), Witness::from_comparison(location, &cmp));
    Ok(out.with_window(cmp.window()))
}

/// `(1 − t)(1 − 𝕃t) Z(C, t)` has coefficient `λ^k h¹` at `t^k` for `k ≤ 2g`
/// and zero for `2g < k ≤ t_max`.
pub fn check_zeta_rationality(ctx: GenusContext, t_max: u32) -> Result<CheckOutcome> {
    let g = ctx.g();
    if t_max < 2 * g + 1 {
        return Err(Error::Domain(format!("t_max {t_max} cannot see past degree 2g = {}", 2 * g)));
    }
    let numerator = ZetaSeries::new(g, t_max).rationality_numerator();
    for (k, p) in numerator.iter().enumerate() {
        let expected = if k as u32 <= 2 * g {
            MotivePoly::lambda_class(g, k as u32)?
        } else {
            MotivePoly::zero()
        };
        if let Some(w) = Witness::from_polys(format!("t^{k}"), p, &expected) {
            return Ok(CheckOutcome::fail(CheckMode::Exact, w));
        }
    }
    Ok(CheckOutcome::pass(CheckMode::Exact).with_details(json!({ "t_max": t_max })))
}

/// Numerator symmetry `λ^a = λ^{2g−a} 𝕃^{a−g}` for `0 ≤ a ≤ 2g`.
pub fn check_functional_equation(ctx: GenusContext) -> Result<CheckOutcome> {
    let g = ctx.g();
    for a in 0..=2 * g {
        let lhs = MotivePoly::lambda_class(g, a)?;
        let rhs = MotivePoly::lambda_class(g, 2 * g - a)?.shift(a as i64 - g as i64);
        if let Some(w) = Witness::from_polys(format!("a={a}"), &lhs, &rhs) {
            return Ok(CheckOutcome::fail(CheckMode::Exact, w));
        }
    }
    Ok(CheckOutcome::pass(CheckMode::Exact))
}

/// Expected value of `h(C_k)` for `k ≥ g` from the Jacobian.
pub fn symmetric_power_via_jacobian(g: u32, k: u32) -> Result<MotivePoly> {
    if k < g {
        return Err(Error::Domain(format!("decomposition needs k ≥ g, got k={k}, g={g}")));
    }
    let spread = MotivePoly::geometric_block(g, (k - g) as i64);
    let mut out = jacobian_poly(g).mul(&spread);
    if k <= 2 * g - 2 {
        out.add_assign(&sym_power_poly(g, 2 * g - 2 - k).shift((k - g + 1) as i64));
    }
    Ok(out)
}

pub fn check_symmetric_power_decomposition(ctx: GenusContext, k: i64) -> Result<CheckOutcome> {
    let g = ctx.g();
    let k = u32::try_from(k).map_err(|_| Error::Domain(format!("k={k} < 0")))?;
    let expected = symmetric_power_via_jacobian(g, k)?;
    let actual = sym_power_poly(g, k);
    Ok(CheckOutcome::from_witness(
        CheckMode::Exact,
        Witness::from_polys(format!("k={k}"), &actual, &expected),
    ))
}

/// `Z(C, 𝕃^i)` against `(1 + 𝕃^i)^{h¹} / ((1 − 𝕃^i)(1 − 𝕃^{i+1}))`, ADIC only.
pub fn check_zeta_closed_form(ctx: GenusContext, i: i64) -> Result<CheckOutcome> {
    let lhs = zeta_at_lefschetz(ctx, i)?;
    let rhs = zeta_closed_form(ctx, i)?;
    series_outcome(&format!("i={i}"), &lhs, &rhs)
}

/// ADIC: `Z(C, 𝕃^i)` against the decomposed right-hand side.
/// DIMENSIONAL: `𝕃^{(2i−1)(g−1)} Z(C, 𝕃^{−i})` against it.
pub fn check_dec_zeta(ctx: GenusContext, i: i64) -> Result<CheckOutcome> {
    let rhs = dec_zeta_rhs(ctx, i)?;
    let lhs = match ctx.mode() {
        Mode::Adic => zeta_at_lefschetz(ctx, i)?,
        Mode::Dimensional => {
            zeta_at_lefschetz(ctx, -i)?.shift((2 * i - 1) * (ctx.g() as i64 - 1))
        }
    };
    series_outcome(&format!("i={i}"), &lhs, &rhs)
}
