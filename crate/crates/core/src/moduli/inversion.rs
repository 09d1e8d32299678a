//! The inversion formula expressing the class of `M(n, d)` as a signed sum
//! over compositions of `n`.

use num_integer::Integer;
use num_rational::Rational64;
use serde::Serialize;
use serde_json::json;

use super::classes::{m2_chi, m3_chi};
use super::checks::compare;
use crate::curve::{binomial_h1_poly, jacobian_poly};
use crate::error::{Error, Result};
use crate::report::{CheckMode, CheckOutcome, Verdict, Witness};
use crate::ring::{GenusContext, Mode, MotiveSeries, UnitSign};

/// `p/q − ⌊p/q⌋`.
pub fn frac_part(p: i64, q: i64) -> Result<Rational64> {
    if q <= 0 {
        return Err(Error::Domain(format!("fractional part needs a positive denominator, got {q}")));
    }
    let x = Rational64::new(p, q);
    Ok(x - x.floor())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InversionSpec {
    pub n: u32,
    pub d: i64,
    /// Every composition of `n`, in lexicographic order.
    pub compositions: Vec<Vec<u32>>,
}

impl InversionSpec {
    pub fn new(n: u32, d: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("rank n must be ≥ 1".into()));
        }
        if (n as i64).gcd(&d) != 1 {
            return Err(Error::Domain(format!("n={n} and d={d} are not coprime")));
        }
        let mut compositions = Vec::new();
        compose(n, &mut Vec::new(), &mut compositions);
        Ok(InversionSpec { n, d, compositions })
    }

    /// `Σ_{i<j} n_i n_j (g−1) + Σ_{i<s} (n_i + n_{i+1}) ⟨−(n_1 + … + n_i) d / n⟩`,
    /// required to be an integer.
    pub fn exponent(&self, parts: &[u32], g: u32) -> Result<i64> {
        let g1 = g as i64 - 1;
        let mut cross = 0i64;
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                cross += parts[i] as i64 * parts[j] as i64;
            }
        }
        let mut total = Rational64::from_integer(cross * g1);
        let mut prefix = 0i64;
        for w in parts.windows(2) {
            prefix += w[0] as i64;
            let f = frac_part(-prefix * self.d, self.n as i64)?;
            total += f * Rational64::from_integer((w[0] + w[1]) as i64);
        }
        if !total.is_integer() {
            return Err(Error::Invariant(format!(
                "non-integral exponent {total} for composition {parts:?} of n={}, d={}",
                self.n, self.d
            )));
        }
        Ok(total.to_integer())
    }
}

// first part varies slowest, smallest first: lexicographic order
fn compose(rest: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if rest == 0 {
        out.push(prefix.clone());
        return;
    }
    for first in 1..=rest {
        prefix.push(first);
        compose(rest - first, prefix, out);
        prefix.pop();
    }
}

fn geom(ctx: GenusContext, i: i64) -> Result<MotiveSeries> {
    MotiveSeries::geom_unit_inverse(ctx, i, UnitSign::OneMinusLi)
}

/// One summand of the formula, sign included.
pub fn inversion_term(ctx: GenusContext, spec: &InversionSpec, parts: &[u32]) -> Result<MotiveSeries> {
    let g = ctx.g();
    let s = parts.len() as u32;
    let mut acc = MotiveSeries::from_poly(ctx, &jacobian_poly(g)).pow(s)?;
    acc = acc.mul(&geom(ctx, 1)?.pow(s - 1)?)?;
    for &nj in parts {
        for i in 1..nj as i64 {
            acc = acc
                .mul(&MotiveSeries::from_poly(ctx, &binomial_h1_poly(g, i as u32)))?
                .mul(&geom(ctx, i)?)?
                .mul(&geom(ctx, i + 1)?)?;
        }
    }
    for w in parts.windows(2) {
        acc = acc.mul(&geom(ctx, (w[0] + w[1]) as i64)?)?;
    }
    acc = acc.shift(spec.exponent(parts, g)?);
    Ok(if s.is_multiple_of(2) { acc.neg() } else { acc })
}

/// The full signed sum over compositions, ADIC only.
pub fn inversion_formula(ctx: GenusContext, spec: &InversionSpec) -> Result<MotiveSeries> {
    if ctx.mode() != Mode::Adic {
        return Err(Error::Contract {
            mode: ctx.mode(),
            detail: "the inversion formula is expanded 𝕃-adically".into(),
        });
    }
    let terms = spec
        .compositions
        .iter()
        .map(|c| inversion_term(ctx, spec, c))
        .collect::<Result<Vec<_>>>()?;
    MotiveSeries::sum(ctx, &terms)
}

pub const INVERSION_NOTE: &str = "inversion-fixed-vs-varying-determinant";

/// Compares the formula for `(n, d)` with the fixed-determinant class and
/// with `χ(J)` times it. Exactly one reading must hold; which one is
/// reported as a flag.
pub fn check_inversion_consistency(ctx: GenusContext, n: u32, d: i64) -> Result<CheckOutcome> {
    let spec = InversionSpec::new(n, d)?;
    let fixed = match n {
        2 => m2_chi(ctx)?,
        3 => m3_chi(ctx)?,
        _ => return Err(Error::Domain(format!("no fixed-determinant class for n={n}"))),
    };
    let formula = inversion_formula(ctx, &spec)?;
    let jac = MotiveSeries::from_poly(ctx, &jacobian_poly(ctx.g()));
    let as_fixed = compare("fixed", &formula, &fixed)?;
    let as_varying = compare("J × fixed", &formula, &jac.mul(&fixed)?)?;

    let exponents: Vec<_> = spec
        .compositions
        .iter()
        .map(|c| Ok(json!({ "composition": c, "exponent": spec.exponent(c, ctx.g())? })))
        .collect::<Result<_>>()?;
    let details = json!({
        "n": n,
        "d": d,
        "exponents": exponents,
        "equals_fixed": as_fixed.is_pass(),
        "equals_jacobian_times_fixed": as_varying.is_pass(),
    });
    let window = as_varying.window.or(as_fixed.window);
    let out = match (as_fixed.is_pass(), as_varying.is_pass()) {
        (false, true) => CheckOutcome::flagged(
            CheckMode::Adic,
            format!("{INVERSION_NOTE}: formula = χ(J) × fixed-determinant class"),
        ),
        (true, false) => CheckOutcome::flagged(
            CheckMode::Adic,
            format!("{INVERSION_NOTE}: formula = fixed-determinant class"),
        ),
        (true, true) => CheckOutcome::fail(
            CheckMode::Adic,
            Witness::scalar("readings", "both hold", "exactly one"),
        ),
        (false, false) => {
            let mut f = as_fixed;
            f.verdict = Verdict::Fail;
            f
        }
    };
    let out = match window {
        Some(w) => out.with_window(w),
        None => out,
    };
    Ok(out.with_details(details))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fractional_parts() {
        assert_eq!(frac_part(-1, 2).unwrap(), Rational64::new(1, 2));
        assert_eq!(frac_part(0, 5).unwrap(), Rational64::from_integer(0));
        assert_eq!(frac_part(7, 3).unwrap(), Rational64::new(1, 3));
        assert_eq!(frac_part(-1, 3).unwrap(), Rational64::new(2, 3));
        assert!(frac_part(1, 0).is_err());
    }

    #[test]
    fn compositions_are_lexicographic_and_complete() {
        let s = InversionSpec::new(3, 1).unwrap();
        assert_eq!(s.compositions, vec![vec![1, 1, 1], vec![1, 2], vec![2, 1], vec![3]]);
        for n in 1..=6 {
            let s = InversionSpec::new(n, 1).unwrap();
            assert_eq!(s.compositions.len(), 1 << (n - 1));
            let mut sorted = s.compositions.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted, s.compositions);
        }
        assert!(InversionSpec::new(2, 2).is_err());
    }

    #[test]
    fn rank2_two_part_exponent_is_g() {
        let s = InversionSpec::new(2, 1).unwrap();
        for g in 2..=6 {
            assert_eq!(s.exponent(&[1, 1], g).unwrap(), g as i64);
        }
    }

    #[test]
    fn exponents_integral_for_small_ranks() {
        for n in 1..=4u32 {
            for d in -(n as i64)..=n as i64 {
                let Ok(s) = InversionSpec::new(n, d) else { continue };
                for c in &s.compositions {
                    s.exponent(c, 3).unwrap();
                }
            }
        }
    }

    #[test]
    fn single_part_term_is_j_times_zeta() {
        let ctx = GenusContext::adic(2).unwrap();
        let s = InversionSpec::new(2, 1).unwrap();
        let t = inversion_term(ctx, &s, &[2]).unwrap();
        let expected = MotiveSeries::from_poly(ctx, &jacobian_poly(2))
            .mul(&crate::curve::zeta_at_lefschetz(ctx, 1).unwrap())
            .unwrap();
        assert!(t.equals(&expected).unwrap().is_equal());
    }

    #[test]
    fn rank2_reading() {
        let ctx = GenusContext::adic(2).unwrap();
        let out = check_inversion_consistency(ctx, 2, 1).unwrap();
        assert_eq!(out.verdict, Verdict::Flagged);
        assert_eq!(out.details["equals_jacobian_times_fixed"], true);
    }

    #[test]
    fn rank_one_formula_is_jacobian() {
        let ctx = GenusContext::adic(2).unwrap();
        let s = InversionSpec::new(1, 0).unwrap();
        let f = inversion_formula(ctx, &s).unwrap();
        assert_eq!(f.to_poly(), jacobian_poly(2));
    }
}
