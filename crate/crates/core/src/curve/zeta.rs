//! The motivic zeta function `Z(C, t) = Σ h(C_k) t^k` and its specializations
//! at `t = 𝕃^i`.

use super::classes::{binomial_h1_poly, jacobian_poly, sym_power_poly};
use crate::error::{Error, Result};
use crate::ring::{GenusContext, Mode, MotivePoly, MotiveSeries, UnitSign};

/// `Z(C, t)` truncated in `t`; each coefficient is an exact class.
#[derive(Debug, Clone, PartialEq)]
pub struct ZetaSeries {
    g: u32,
    coeffs: Vec<MotivePoly>,
}

impl ZetaSeries {
    pub fn new(g: u32, t_max: u32) -> Self {
        ZetaSeries {
            g,
            coeffs: (0..=t_max).map(|k| sym_power_poly(g, k)).collect(),
        }
    }

    /// Default `t`-precision `4g`, enough to see the numerator terminate.
    pub fn with_default_precision(g: u32) -> Self {
        Self::new(g, 4 * g)
    }

    pub fn genus(&self) -> u32 {
        self.g
    }

    pub fn t_max(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    pub fn coeff(&self, k: u32) -> Option<&MotivePoly> {
        self.coeffs.get(k as usize)
    }

    /// Coefficients of `(1 − t)(1 − 𝕃t) Z(C, t)` up to `t^{t_max}`.
    pub fn rationality_numerator(&self) -> Vec<MotivePoly> {
        let one_plus_l = MotivePoly::one(self.g).add(&MotivePoly::lefschetz(self.g, 1));
        let zero = MotivePoly::zero();
        (0..self.coeffs.len())
            .map(|k| {
                let z = |j: usize| if j <= k { &self.coeffs[k - j] } else { &zero };
                z(0).sub(&one_plus_l.mul(z(1))).add(&z(2).shift(1))
            })
            .collect()
    }
}

/// `Z(C, 𝕃^i) = Σ_k h(C_k) 𝕃^{ik}` expanded in the completion of `ctx`.
///
/// ADIC mode needs `i ≥ 1`; DIMENSIONAL mode needs `i ≤ −2` so that the
/// summands `h(C_k) 𝕃^{ik}`, of top degree `k(1 + i)`, drift to −∞.
pub fn zeta_at_lefschetz(ctx: GenusContext, i: i64) -> Result<MotiveSeries> {
    let g = ctx.g();
    let w = ctx.window();
    let mut partial = MotivePoly::zero();
    match ctx.mode() {
        Mode::Adic => {
            if i < 1 {
                return Err(Error::Contract {
                    mode: Mode::Adic,
                    detail: format!("Z(C, 𝕃^{i}) does not converge 𝕃-adically; need i ≥ 1"),
                });
            }
            // h(C_k) 𝕃^{ik} starts at 𝕃^{ik}
            let mut k: u32 = 0;
            while i * k as i64 <= w.e_max {
                partial.add_assign(&sym_power_poly(g, k).shift(i * k as i64));
                k += 1;
            }
        }
        Mode::Dimensional => {
            if i > -2 {
                return Err(Error::Contract {
                    mode: Mode::Dimensional,
                    detail: format!("Z(C, 𝕃^{i}) does not converge dimensionally; need i ≤ −2"),
                });
            }
            let mut k: u32 = 0;
            while (1 + i) * k as i64 >= w.e_min {
                partial.add_assign(&sym_power_poly(g, k).shift(i * k as i64));
                k += 1;
            }
        }
    }
    Ok(MotiveSeries::from_partial_sum(ctx, &partial))
}

/// Closed form `(1 + 𝕃^i)^{h¹} / ((1 − 𝕃^i)(1 − 𝕃^{i+1}))` in ADIC mode.
pub fn zeta_closed_form(ctx: GenusContext, i: i64) -> Result<MotiveSeries> {
    if ctx.mode() != Mode::Adic || i < 1 {
        return Err(Error::Contract {
            mode: ctx.mode(),
            detail: format!("closed form at 𝕃^{i} is only expanded 𝕃-adically for i ≥ 1"),
        });
    }
    let numerator = MotiveSeries::from_poly(ctx, &binomial_h1_poly(ctx.g(), i as u32));
    numerator
        .mul(&MotiveSeries::geom_unit_inverse(ctx, i, UnitSign::OneMinusLi)?)?
        .mul(&MotiveSeries::geom_unit_inverse(ctx, i + 1, UnitSign::OneMinusLi)?)
}

/// The first two blocks of the decomposed zeta value: the finite part
/// `Σ_{k<g} h(C_k) 𝕃^{ak} + Σ_{k'≤g−2} h(C_{k'}) 𝕃^{b − c·k'}`.
pub(crate) fn dec_zeta_blocks(g: u32, a: i64, b: i64, c: i64) -> MotivePoly {
    let mut out = MotivePoly::zero();
    for k in 0..g {
        out.add_assign(&sym_power_poly(g, k).shift(a * k as i64));
    }
    for k in 0..g.saturating_sub(1) {
        out.add_assign(&sym_power_poly(g, k).shift(b - c * k as i64));
    }
    out
}

/// Finite part of `Z(C, 𝕃^i)` in the ADIC decomposition (`i ≥ 1`).
pub fn dec_zeta_finite_adic(g: u32, i: i64) -> MotivePoly {
    let g1 = g as i64 - 1;
    dec_zeta_blocks(g, i, (2 * i + 1) * g1, i + 1)
}

/// Right-hand side of the decomposed zeta value.
///
/// ADIC (`i ≥ 1`): `Σ_{k=0}^{g−1} h(C_k)𝕃^{ik} + Σ_{k'=0}^{g−2} h(C_{k'})𝕃^{(2i+1)(g−1)−(i+1)k'}
///   + h(J)·𝕃^{ig}/((1−𝕃^i)(1−𝕃^{i+1}))`.
///
/// DIMENSIONAL (`i ≥ 2`): `Σ_{k=0}^{g−1} [C_k]𝕃^{(i−1)k} + Σ_{k'=0}^{g−2} [C_{k'}]𝕃^{(2i−1)(g−1)−ik'}
///   + [J]·𝕃^{(i−1)g}/((𝕃^{i−1}−1)(𝕃^i−1))`, which equals `𝕃^{(2i−1)(g−1)} Z(C, 𝕃^{−i})`.
pub fn dec_zeta_rhs(ctx: GenusContext, i: i64) -> Result<MotiveSeries> {
    let g = ctx.g();
    let g1 = g as i64 - 1;
    let jac = MotiveSeries::from_poly(ctx, &jacobian_poly(g));
    match ctx.mode() {
        Mode::Adic => {
            if i < 1 {
                return Err(Error::Domain(format!("ADIC decomposition needs i ≥ 1, got {i}")));
            }
            let finite = MotiveSeries::from_poly(ctx, &dec_zeta_finite_adic(g, i));
            let tail = jac
                .shift(i * g as i64)
                .mul(&MotiveSeries::geom_unit_inverse(ctx, i, UnitSign::OneMinusLi)?)?
                .mul(&MotiveSeries::geom_unit_inverse(ctx, i + 1, UnitSign::OneMinusLi)?)?;
            finite.add(&tail)
        }
        Mode::Dimensional => {
            // 𝕃^{i−1} − 1 vanishes at i = 1
            if i < 2 {
                return Err(Error::Domain(format!(
                    "DIMENSIONAL decomposition needs i ≥ 2, got {i}"
                )));
            }
            let finite = MotiveSeries::from_poly(ctx, &dec_zeta_blocks(g, i - 1, (2 * i - 1) * g1, i));
            let tail = jac
                .shift((i - 1) * g as i64)
                .mul(&MotiveSeries::geom_unit_inverse(ctx, i - 1, UnitSign::LiMinusOne)?)?
                .mul(&MotiveSeries::geom_unit_inverse(ctx, i, UnitSign::LiMinusOne)?)?;
            finite.add(&tail)
        }
    }
}
