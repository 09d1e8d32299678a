//! Checkers for the rank-2 and rank-3 decompositions and the intermediate
//! identities behind the rank-3 one.

use num_bigint::BigInt;
use serde_json::json;

use super::classes::{m2_chi, m3_chi, unstable_rank3_chi, unstable_rank3_reduced};
use super::template::DecompositionTemplate;
use crate::curve::{dec_zeta_finite_adic, sym_power_poly};
use crate::error::{Error, Result};
use crate::report::{CheckMode, CheckOutcome, Witness};
use crate::ring::{CoeffPoly, GenusContext, MotivePoly, MotiveSeries};

pub(crate) fn compare(location: &str, lhs: &MotiveSeries, rhs: &MotiveSeries) -> Result<CheckOutcome> {
    let cmp = lhs.equals(rhs)?;
    Ok(CheckOutcome::from_witness(lhs.mode().into(), Witness::from_comparison(location, &cmp))
        .with_window(cmp.window()))
}

/// Fails if `x` has a nonzero coefficient above `degree` inside its window.
pub(crate) fn vanishes_above(x: &MotiveSeries, degree: i64) -> CheckOutcome {
    match x.first_nonzero_above(degree) {
        None => CheckOutcome::pass(x.mode().into()),
        Some((e, c)) => CheckOutcome::fail(
            x.mode().into(),
            Witness::from_coeffs(format!("above degree {degree}"), e, c, &CoeffPoly::zero()),
        ),
    }
}

/// `m` against `template` on the shared window, plus vanishing above the
/// template's top degree. The window must reach that degree.
pub(crate) fn check_against_template(
    m: &MotiveSeries,
    template: &DecompositionTemplate,
) -> Result<CheckOutcome> {
    let top = template.top_degree();
    let (lo, hi) = m.effective_window();
    if hi < top || lo > 0 {
        return Err(Error::Config(format!(
            "window [{lo}, {hi}] does not cover [0, {top}] for rank {} at g={}",
            template.rank, template.genus
        )));
    }
    let rhs = template.to_series(m.ctx());
    let out = CheckOutcome::combine(
        m.mode().into(),
        [compare(&format!("rank {}", template.rank), m, &rhs)?, vanishes_above(m, top)],
    );
    Ok(out.with_details(json!({ "top_degree": top, "blocks": template.blocks.len() })))
}

pub fn check_rank2(ctx: GenusContext) -> Result<CheckOutcome> {
    check_against_template(&m2_chi(ctx)?, &DecompositionTemplate::rank2(ctx.g()))
}

/// Rank 3: the three-term and reduced corrections agree, and the resulting
/// class matches the template.
pub fn check_rank3(ctx: GenusContext) -> Result<CheckOutcome> {
    let forms = compare("unstable forms", &unstable_rank3_chi(ctx)?, &unstable_rank3_reduced(ctx)?)?;
    let main = check_against_template(&m3_chi(ctx)?, &DecompositionTemplate::rank3(ctx.g()))?;
    let details = main.details.clone();
    Ok(CheckOutcome::combine(ctx.mode().into(), [forms, main]).with_details(details))
}

fn lp(g: u32, e: i64) -> MotivePoly {
    MotivePoly::lefschetz(g, e)
}

fn inv(ctx: GenusContext, i: i64) -> Result<MotiveSeries> {
    MotiveSeries::inverse_one_minus_l(ctx, i)
}

/// The coefficients of `χ(J)²` in `χ(M(3, L))`, as stated over the common
/// denominator `D = (1−𝕃)(1−𝕃²)²(1−𝕃³)` and as produced by the pipeline
/// factors; the stated ones must match the produced ones and sum to zero.
pub fn check_j_squared_cancellation(ctx: GenusContext) -> Result<CheckOutcome> {
    let g = ctx.g();
    let gi = g as i64;
    let s = |p: MotivePoly| MotiveSeries::from_poly(ctx, &p);
    let (i1, i2, i3) = (inv(ctx, 1)?, inv(ctx, 2)?, inv(ctx, 3)?);
    let inv_d = i1.mul(&i2)?.mul(&i2)?.mul(&i3)?;
    let one_plus_l = MotivePoly::geometric_block(g, 1);

    let stated = [
        s(lp(g, 3 * gi)).mul(&inv_d)?,
        s(one_plus_l.mul(&one_plus_l).shift(3 * gi - 1)).mul(&inv_d)?.neg(),
        s(MotivePoly::geometric_block(g, 2).shift(3 * gi - 1)).mul(&inv_d)?,
    ];
    // tail of Z(𝕃) times tail of Z(𝕃²); reduced J-linear correction against
    // the tail of Z(𝕃); reduced J² correction
    let produced = [
        s(lp(g, gi)).mul(&i1)?.mul(&i2)?.mul(&s(lp(g, 2 * gi)))?.mul(&i2)?.mul(&i3)?,
        s(one_plus_l.shift(2 * gi - 1)).mul(&i1)?.mul(&i3)?.mul(&s(lp(g, gi)))?.mul(&i1)?.mul(&i2)?.neg(),
        s(lp(g, 3 * gi - 1)).mul(&i1)?.mul(&i1)?.mul(&i2)?.mul(&i2)?,
    ];
    let mut parts = Vec::new();
    for (n, (a, b)) in stated.iter().zip(&produced).enumerate() {
        parts.push(compare(&format!("J² term {}", n + 1), a, b)?);
    }
    let total = MotiveSeries::sum(ctx, &stated)?;
    parts.push(compare("J² total", &total, &MotiveSeries::zero(ctx))?);
    Ok(CheckOutcome::combine(ctx.mode().into(), parts))
}

/// Closed form of the `χ(J)`-linear part of `χ(M(3, L))`:
/// `Σ_{k=0}^{g−2} χ(C_k) 𝕃^{2k+g}(1−𝕃^{g−1−k})(1−𝕃^{4g−4−4k}) / ((1−𝕃)(1−𝕃²))`.
pub fn j_linear_closed_form(ctx: GenusContext) -> Result<MotiveSeries> {
    let g = ctx.g();
    let gi = g as i64;
    let one = MotivePoly::one(g);
    let mut numerator = MotivePoly::zero();
    for k in 0..g as i64 - 1 {
        let f = one.sub(&lp(g, gi - 1 - k)).mul(&one.sub(&lp(g, 4 * gi - 4 - 4 * k)));
        numerator.add_assign(&sym_power_poly(g, k as u32).mul(&f).shift(2 * k + gi));
    }
    MotiveSeries::from_poly(ctx, &numerator).mul(&inv(ctx, 1)?)?.mul(&inv(ctx, 2)?)
}

/// The `χ(J)`-linear part, in the stated form, in the form produced by the
/// pipeline, and against the closed form; finally the `J`-free part plus
/// `χ(J)` times the closed form reproduces the rank-3 template.
pub fn check_j_linear_term(ctx: GenusContext) -> Result<CheckOutcome> {
    let g = ctx.g();
    let gi = g as i64;
    let s = |p: &MotivePoly| MotiveSeries::from_poly(ctx, p);
    let (i1, i2, i3) = (inv(ctx, 1)?, inv(ctx, 2)?, inv(ctx, 3)?);
    let a1 = s(&dec_zeta_finite_adic(g, 1));
    let a2 = s(&dec_zeta_finite_adic(g, 2));
    let t2 = DecompositionTemplate::rank2(g).to_series(ctx);
    let one_plus_l = MotivePoly::geometric_block(g, 1);

    let x1 = s(&lp(g, gi)).mul(&i1)?.mul(&i2)?;
    let x2 = s(&lp(g, 2 * gi)).mul(&i2)?.mul(&i3)?;
    let stated = a1
        .mul(&x2)?
        .add(&a2.mul(&x1)?)?
        .sub(&t2.mul(&s(&one_plus_l.mul(&one_plus_l).shift(2 * gi - 1)))?.mul(&i2)?.mul(&i3)?)?;
    let produced = a1
        .mul(&x2)?
        .add(&a2.mul(&x1)?)?
        .sub(&a1.mul(&s(&one_plus_l.shift(2 * gi - 1)))?.mul(&i1)?.mul(&i3)?)?;
    let closed = j_linear_closed_form(ctx)?;

    let jac = crate::curve::jacobian_class(ctx);
    let assembled = a1.mul(&a2)?.add(&jac.mul(&closed)?)?;
    let template = DecompositionTemplate::rank3(g).to_series(ctx);

    Ok(CheckOutcome::combine(
        ctx.mode().into(),
        [
            compare("stated vs produced", &stated, &produced)?,
            compare("closed form", &stated, &closed)?,
            compare("assembled rank 3", &assembled, &template)?,
        ],
    ))
}

/// Dense integer polynomial in one variable `x`, used for the univariate identity.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Dense(Vec<BigInt>);

impl Dense {
    fn monomial(e: usize) -> Self {
        let mut v = vec![BigInt::from(0); e + 1];
        v[e] = BigInt::from(1);
        Dense(v)
    }

    /// `1 − x^e`
    fn one_minus(e: usize) -> Self {
        Dense::monomial(0).sub(&Dense::monomial(e))
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| *c == BigInt::from(0)) {
            self.0.pop();
        }
        self
    }

    fn add(&self, o: &Dense) -> Dense {
        let n = self.0.len().max(o.0.len());
        let z = BigInt::from(0);
        Dense((0..n).map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z)).collect()).trim()
    }

    fn sub(&self, o: &Dense) -> Dense {
        self.add(&Dense(o.0.iter().map(|c| -c).collect()))
    }

    fn mul(&self, o: &Dense) -> Dense {
        if self.0.is_empty() || o.0.is_empty() {
            return Dense(Vec::new());
        }
        let mut v = vec![BigInt::from(0); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Dense(v).trim()
    }

    fn product(items: &[Dense]) -> Dense {
        items.iter().fold(Dense::monomial(0), |acc, p| acc.mul(p))
    }
}

/// The four-term univariate identity behind the `χ(J)`-linear comparison,
/// checked after clearing the denominator `(1−x)(1−x²)(1−x³)`.
pub fn x_identity_check(g: u32, k: i64) -> Result<CheckOutcome> {
    if g < 2 {
        return Err(Error::InvalidGenus(g as i64));
    }
    let top = g as i64 - 2;
    if k < 0 || k > top {
        return Err(Error::Domain(format!("k={k} outside 0..={top}")));
    }
    let (g, k) = (g as usize, k as usize);
    let m = Dense::monomial;
    let om = Dense::one_minus;
    let diff = |a: usize, b: usize| m(a).sub(&m(b));

    // each numerator times the missing denominator factors
    let t1 = Dense::product(&[diff(k + 2 * g, 3 * g - 3), om(2 * g - 2 - 2 * k), om(3)]);
    let t2 = Dense::product(&[diff(k + 2 * g + 1, 2 * g + k - 2), om(3 * g - 3 - 3 * k), om(2)]);
    let t3 = Dense::product(&[
        diff(2 * k + g, 5 * g - 4 - 2 * k),
        om(g - 2 - k),
        Dense::monomial(0).add(&m(1)),
        om(3),
    ]);
    let t4 = Dense::product(&[diff(2 * k + g + 1, 4 * g - k - 2), om(2 * g - 4 - 2 * k), om(3)]);
    let lhs = t1.sub(&t2).add(&t3).sub(&t4);
    let rhs = Dense::product(&[m(2 * k + g), om(g - 1 - k), om(4 * g - 4 - 4 * k), om(3)]);

    if lhs == rhs {
        return Ok(CheckOutcome::pass(CheckMode::Exact));
    }
    let z = BigInt::from(0);
    let n = lhs.0.len().max(rhs.0.len());
    let e = (0..n)
        .find(|&i| lhs.0.get(i).unwrap_or(&z) != rhs.0.get(i).unwrap_or(&z))
        .expect("polynomials differ somewhere");
    let (a, b) = (lhs.0.get(e).unwrap_or(&z), rhs.0.get(e).unwrap_or(&z));
    let mut w = Witness::scalar(format!("k={k}, x^{e}"), a, b);
    w.exponent = Some(e as i64);
    Ok(CheckOutcome::fail(CheckMode::Exact, w))
}

/// [`x_identity_check`] for every `0 ≤ k ≤ g − 2`.
pub fn x_identity_all(g: u32) -> Result<CheckOutcome> {
    let parts = (0..=g as i64 - 2).map(|k| x_identity_check(g, k)).collect::<Result<Vec<_>>>()?;
    Ok(CheckOutcome::combine(CheckMode::Exact, parts).with_details(json!({ "cases": g - 1 })))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank2_small_genera() {
        for g in 2..=4 {
            let out = check_rank2(GenusContext::adic(g).unwrap()).unwrap();
            assert!(out.is_pass(), "g={g}: {:?}", out.witness);
        }
    }

    #[test]
    fn perturbations_fail_with_witness() {
        let ctx = GenusContext::adic(3).unwrap();
        let m = m2_chi(ctx).unwrap();
        let bump = MotiveSeries::from_poly(ctx, &MotivePoly::lefschetz(3, 4));
        let out = check_against_template(&m.add(&bump).unwrap(), &DecompositionTemplate::rank2(3)).unwrap();
        assert_eq!(out.verdict, crate::report::Verdict::Fail);
        assert_eq!(out.witness.unwrap().exponent, Some(4));

        // a coefficient above the top degree trips the vanishing check
        let high = MotiveSeries::from_poly(ctx, &MotivePoly::lefschetz(3, 7));
        let out = vanishes_above(&m.add(&high).unwrap(), 6);
        assert_eq!(out.witness.unwrap().exponent, Some(7));

        let out = check_against_template(&m, &DecompositionTemplate::rank3(3)).unwrap();
        assert!(!out.is_pass());
    }

    #[test]
    fn rank3_genus_two() {
        let out = check_rank3(GenusContext::adic(2).unwrap()).unwrap();
        assert!(out.is_pass(), "{:?}", out.witness);
    }

    #[test]
    fn j_terms_genus_two_and_three() {
        for g in 2..=3 {
            let ctx = GenusContext::adic(g).unwrap();
            assert!(check_j_squared_cancellation(ctx).unwrap().is_pass());
            let out = check_j_linear_term(ctx).unwrap();
            assert!(out.is_pass(), "g={g}: {:?}", out.witness);
        }
    }

    #[test]
    fn x_identity_cases() {
        assert!(x_identity_check(2, 0).unwrap().is_pass());
        for g in 2..=10 {
            assert!(x_identity_all(g).unwrap().is_pass());
        }
        assert!(x_identity_check(3, 2).is_err());
        assert!(x_identity_check(3, -1).is_err());
    }

    #[test]
    fn dense_arithmetic() {
        // (1 − x)(1 + x) = 1 − x²
        let p = Dense::one_minus(1).mul(&Dense::monomial(0).add(&Dense::monomial(1)));
        assert_eq!(p, Dense::one_minus(2));
        assert_eq!(Dense::one_minus(0), Dense(Vec::new()));
    }

    #[test]
    fn narrow_window_is_a_config_error() {
        use crate::ring::{Mode, TruncationWindow};
        let w = TruncationWindow::new(0, 5, Mode::Adic).unwrap();
        let ctx = GenusContext::new(2, w).unwrap();
        assert!(matches!(check_rank3(ctx), Err(Error::Config(_))));
    }
}
