//! Bundle stacks, Harder–Narasimhan corrections and the moduli classes they
//! leave behind.
//!
//! Everything except [`bun_chi`] and [`bgm_chi`] works in either completion:
//! `1/(1 − 𝕃^i)` is expanded with [`MotiveSeries::inverse_one_minus_l`] and
//! `Z(C, 𝕃^i)` with [`zeta_value`].

use crate::curve::{jacobian_class, zeta_at_lefschetz};
use crate::error::{Error, Result};
use crate::ring::{GenusContext, Mode, MotivePoly, MotiveSeries, UnitSign};

fn inv(ctx: GenusContext, i: i64) -> Result<MotiveSeries> {
    MotiveSeries::inverse_one_minus_l(ctx, i)
}

fn poly(ctx: GenusContext, p: &MotivePoly) -> MotiveSeries {
    MotiveSeries::from_poly(ctx, p)
}

fn require_adic(ctx: GenusContext, what: &str) -> Result<()> {
    if ctx.mode() != Mode::Adic {
        return Err(Error::Contract {
            mode: ctx.mode(),
            detail: format!("{what} is an 𝕃-adic expansion"),
        });
    }
    Ok(())
}

/// `Z(C, 𝕃^i)` for `i ≥ 1`. In DIMENSIONAL mode it is expanded as
/// `𝕃^{(2i+1)(g−1)} Z(C, 𝕃^{−(i+1)})`, the form in which it converges there.
pub fn zeta_value(ctx: GenusContext, i: i64) -> Result<MotiveSeries> {
    if i < 1 {
        return Err(Error::Domain(format!("zeta value at 𝕃^{i} needs i ≥ 1")));
    }
    match ctx.mode() {
        Mode::Adic => zeta_at_lefschetz(ctx, i),
        Mode::Dimensional => {
            let g1 = ctx.g() as i64 - 1;
            Ok(zeta_at_lefschetz(ctx, -(i + 1))?.shift((2 * i + 1) * g1))
        }
    }
}

fn check_rank(r: u32) -> Result<()> {
    if !(2..=3).contains(&r) {
        return Err(Error::Domain(format!("rank {r} unsupported; use 2 or 3")));
    }
    Ok(())
}

/// `Π_{i=1}^{r−1} Z(C, 𝕃^i)` in whichever completion `ctx` names.
pub(crate) fn bun_class(ctx: GenusContext, r: u32) -> Result<MotiveSeries> {
    check_rank(r)?;
    let factors = (1..r as i64).map(|i| zeta_value(ctx, i)).collect::<Result<Vec<_>>>()?;
    MotiveSeries::product(ctx, &factors)
}

/// `χ(Bun_{r,L}) = Π_{i=1}^{r−1} Z(C, 𝕃^i)`, ADIC only.
pub fn bun_chi(ctx: GenusContext, r: u32) -> Result<MotiveSeries> {
    require_adic(ctx, "χ(Bun_{r,L})")?;
    bun_class(ctx, r)
}

/// `χ(B𝔾_m) = 1/(1 − 𝕃)`, ADIC only.
pub fn bgm_chi(ctx: GenusContext) -> Result<MotiveSeries> {
    require_adic(ctx, "χ(B𝔾_m)")?;
    MotiveSeries::geom_unit_inverse(ctx, 1, UnitSign::OneMinusLi)
}

/// `χ(J) 𝕃^g / ((1 − 𝕃)(1 − 𝕃²))`.
pub fn unstable_rank2_chi(ctx: GenusContext) -> Result<MotiveSeries> {
    jacobian_class(ctx)
        .shift(ctx.g() as i64)
        .mul(&inv(ctx, 1)?)?
        .mul(&inv(ctx, 2)?)
}

/// `χ(M(2, L)) = Z(C, 𝕃) − χ(J) 𝕃^g / ((1 − 𝕃)(1 − 𝕃²))`.
pub fn m2_chi(ctx: GenusContext) -> Result<MotiveSeries> {
    bun_class(ctx, 2)?.sub(&unstable_rank2_chi(ctx)?)
}

/// The three Harder–Narasimhan terms for rank 3, with `B = 1/(1 − 𝕃)`:
/// `𝕃^{2g}/(1−𝕃³)·J·B·Z(C,𝕃)`, `𝕃^{2g−1}/(1−𝕃³)·J·B·Z(C,𝕃)` and
/// `𝕃^{3g−1}/(1−𝕃²)²·(J·B)²`.
pub fn unstable_rank3_terms(ctx: GenusContext) -> Result<[MotiveSeries; 3]> {
    let g = ctx.g() as i64;
    let jb = jacobian_class(ctx).mul(&inv(ctx, 1)?)?;
    let jbz = jb.mul(&zeta_value(ctx, 1)?)?;
    let inv3 = inv(ctx, 3)?;
    let t1 = jbz.mul(&inv3)?.shift(2 * g);
    let t2 = jbz.mul(&inv3)?.shift(2 * g - 1);
    let t3 = jb.mul(&jb)?.mul(&inv(ctx, 2)?.pow(2)?)?.shift(3 * g - 1);
    Ok([t1, t2, t3])
}

/// `T₁ + T₂ − T₃` from [`unstable_rank3_terms`].
pub fn unstable_rank3_chi(ctx: GenusContext) -> Result<MotiveSeries> {
    let [t1, t2, t3] = unstable_rank3_terms(ctx)?;
    t1.add(&t2)?.sub(&t3)
}

/// `𝕃^{2g−1}(1+𝕃)/((1−𝕃)(1−𝕃³))·J·Z(C,𝕃) − 𝕃^{3g−1}/((1−𝕃)²(1−𝕃²)²)·J²`.
pub fn unstable_rank3_reduced(ctx: GenusContext) -> Result<MotiveSeries> {
    let g = ctx.g() as i64;
    let gc = ctx.g();
    let j = jacobian_class(ctx);
    let one_plus_l = poly(ctx, &MotivePoly::geometric_block(gc, 1));
    let linear = j
        .mul(&zeta_value(ctx, 1)?)?
        .mul(&one_plus_l)?
        .mul(&inv(ctx, 1)?)?
        .mul(&inv(ctx, 3)?)?
        .shift(2 * g - 1);
    let quadratic = j
        .mul(&j)?
        .mul(&inv(ctx, 1)?.pow(2)?)?
        .mul(&inv(ctx, 2)?.pow(2)?)?
        .shift(3 * g - 1);
    linear.sub(&quadratic)
}

/// `χ(M(3, L)) = Z(C, 𝕃) Z(C, 𝕃²) − (T₁ + T₂ − T₃)`.
pub fn m3_chi(ctx: GenusContext) -> Result<MotiveSeries> {
    bun_class(ctx, 3)?.sub(&unstable_rank3_chi(ctx)?)
}
