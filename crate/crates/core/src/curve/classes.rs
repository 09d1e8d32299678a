//! Classes of symmetric powers, the Jacobian and `(1 + 𝕃^m)^{h¹}`.

use crate::error::{Error, Result};
use crate::ring::{GenusContext, MotivePoly, MotiveSeries};

/// `h(C_k) = Σ_{b + c ≤ k} λ^b h¹(C) · 𝕃^c`, with `b` capped at `2g`.
pub fn sym_power_poly(g: u32, k: u32) -> MotivePoly {
    let mut out = MotivePoly::zero();
    for b in 0..=k.min(2 * g) {
        let lam = MotivePoly::lambda_class(g, b).expect("b ≤ 2g");
        for c in 0..=(k - b) {
            out.add_assign(&lam.shift(c as i64));
        }
    }
    out
}

/// `h(J(C)) = Σ_{a=0}^{2g} λ^a h¹(C)`.
pub fn jacobian_poly(g: u32) -> MotivePoly {
    binomial_h1_poly(g, 0)
}

/// `(1 + 𝕃^m)^{h¹(C)} = Σ_{a=0}^{2g} λ^a h¹(C) · 𝕃^{ma}`.
pub fn binomial_h1_poly(g: u32, m: u32) -> MotivePoly {
    let mut out = MotivePoly::zero();
    for a in 0..=2 * g {
        let lam = MotivePoly::lambda_class(g, a).expect("a ≤ 2g");
        out.add_assign(&lam.shift((m * a) as i64));
    }
    out
}

pub fn sym_power_class(ctx: GenusContext, k: i64) -> Result<MotiveSeries> {
    let k = u32::try_from(k).map_err(|_| Error::Domain(format!("symmetric power index {k} < 0")))?;
    Ok(MotiveSeries::from_poly(ctx, &sym_power_poly(ctx.g(), k)))
}

pub fn jacobian_class(ctx: GenusContext) -> MotiveSeries {
    MotiveSeries::from_poly(ctx, &jacobian_poly(ctx.g()))
}

pub fn binomial_h1_series(ctx: GenusContext, m: i64) -> Result<MotiveSeries> {
    let m = u32::try_from(m).map_err(|_| Error::Domain(format!("binomial twist {m} < 0")))?;
    Ok(MotiveSeries::from_poly(ctx, &binomial_h1_poly(ctx.g(), m)))
}
