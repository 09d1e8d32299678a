//! Window-truncated Laurent series in 𝕃 over the λ-coefficient algebra.
//!
//! A [`MotiveSeries`] stores the coefficients it knows exactly on its
//! *effective window* `[lo, hi]`, which is always contained in the nominal
//! window of its [`GenusContext`]. Two flags record what lies beyond:
//! `closed_below` means every term below `lo` is zero, `closed_above` the
//! same above `hi`. A closed side always extends to the nominal window edge.
//!
//! In ADIC mode constructed series are closed below and truncated above; in
//! DIMENSIONAL mode the reverse. Products shrink the effective window by the
//! support offsets of the operands, and the shrink is recorded in the result
//! instead of producing silently wrong coefficients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::coeff::CoeffPoly;
use super::poly::MotivePoly;
use super::window::{GenusContext, Mode, TruncationWindow};
use crate::error::{Error, Result};

const NEG_INF: i64 = i64::MIN / 4;
const POS_INF: i64 = i64::MAX / 4;

/// Which unit `1 − 𝕃^i` (up to sign) is being inverted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitSign {
    /// `1 − 𝕃^i`, invertible in the ADIC completion.
    OneMinusLi,
    /// `𝕃^i − 1`, invertible in the DIMENSIONAL completion.
    LiMinusOne,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MotiveSeries {
    ctx: GenusContext,
    lo: i64,
    hi: i64,
    closed_below: bool,
    closed_above: bool,
    coeffs: BTreeMap<i64, CoeffPoly>,
}

/// Outcome of [`MotiveSeries::equals`]. Never a claim of ring equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    EqualUpTo { lo: i64, hi: i64 },
    Unequal {
        exponent: i64,
        lhs: CoeffPoly,
        rhs: CoeffPoly,
        lo: i64,
        hi: i64,
    },
}

impl Comparison {
    pub fn is_equal(&self) -> bool {
        matches!(self, Comparison::EqualUpTo { .. })
    }

    pub fn window(&self) -> (i64, i64) {
        match *self {
            Comparison::EqualUpTo { lo, hi } | Comparison::Unequal { lo, hi, .. } => (lo, hi),
        }
    }
}

impl MotiveSeries {
    fn raw(
        ctx: GenusContext,
        lo: i64,
        hi: i64,
        closed_below: bool,
        closed_above: bool,
        coeffs: BTreeMap<i64, CoeffPoly>,
    ) -> Self {
        let w = ctx.window();
        let lo = if closed_below { w.e_min } else { lo.max(w.e_min) };
        let hi = if closed_above { w.e_max } else { hi.min(w.e_max) };
        let mut coeffs = coeffs;
        coeffs.retain(|&e, c| e >= lo && e <= hi && !c.is_zero());
        MotiveSeries {
            ctx,
            lo,
            hi,
            closed_below,
            closed_above,
            coeffs,
        }
    }

    /// Builds a series from exact coefficients, dropping whatever falls outside
    /// the window and opening the side where something nonzero was dropped.
    fn from_terms(
        ctx: GenusContext,
        lo: i64,
        hi: i64,
        closed_below: bool,
        closed_above: bool,
        terms: BTreeMap<i64, CoeffPoly>,
    ) -> Self {
        let w = ctx.window();
        let dropped_below = terms.iter().any(|(&e, c)| e < w.e_min && !c.is_zero());
        let dropped_above = terms.iter().any(|(&e, c)| e > w.e_max && !c.is_zero());
        Self::raw(
            ctx,
            lo,
            hi,
            closed_below && !dropped_below,
            closed_above && !dropped_above,
            terms,
        )
    }

    pub fn zero(ctx: GenusContext) -> Self {
        let w = ctx.window();
        Self::raw(ctx, w.e_min, w.e_max, true, true, BTreeMap::new())
    }

    pub fn one(ctx: GenusContext) -> Self {
        Self::from_poly(ctx, &MotivePoly::one(ctx.g()))
    }

    /// Embeds an exact class into the window.
    pub fn from_poly(ctx: GenusContext, p: &MotivePoly) -> Self {
        let w = ctx.window();
        let terms = p.terms().map(|(e, c)| (e, c.clone())).collect();
        Self::from_terms(ctx, w.e_min, w.e_max, true, true, terms)
    }

    /// `λ^a h¹(C)` for `0 ≤ a ≤ 2g`, duality-normalized.
    pub fn lambda_class(ctx: GenusContext, a: i64) -> Result<Self> {
        let g = ctx.g();
        if a < 0 || a > 2 * g as i64 {
            return Err(Error::Domain(format!(
                "λ-index {a} outside 0..={} at genus {g}",
                2 * g
            )));
        }
        Ok(Self::from_poly(ctx, &MotivePoly::lambda_class(g, a as u32)?))
    }

    /// The monomial `𝕃^e`; `e` must lie in the window.
    pub fn lefschetz_power(ctx: GenusContext, e: i64) -> Result<Self> {
        let w = ctx.window();
        if !w.contains(e) {
            return Err(Error::OutOfWindow {
                exponent: e,
                e_min: w.e_min,
                e_max: w.e_max,
            });
        }
        Ok(Self::from_poly(ctx, &MotivePoly::lefschetz(ctx.g(), e)))
    }

    /// Inverse of `1 − 𝕃^i` (ADIC) or `𝕃^i − 1` (DIMENSIONAL) as a geometric series.
    pub fn geom_unit_inverse(ctx: GenusContext, i: i64, sign: UnitSign) -> Result<Self> {
        if i < 1 {
            return Err(Error::Domain(format!("unit exponent must be ≥ 1, got {i}")));
        }
        let w = ctx.window();
        let one = CoeffPoly::one(ctx.g());
        let mut terms = BTreeMap::new();
        match (ctx.mode(), sign) {
            (Mode::Adic, UnitSign::OneMinusLi) => {
                // Σ_{m≥0} 𝕃^{im}
                let mut e = 0;
                while e <= w.e_max {
                    terms.insert(e, one.clone());
                    e += i;
                }
                Ok(Self::from_terms(ctx, w.e_min, w.e_max, true, false, terms))
            }
            (Mode::Dimensional, UnitSign::LiMinusOne) => {
                // 𝕃^{-i} Σ_{m≥0} 𝕃^{-im}
                let mut e = -i;
                while e >= w.e_min {
                    terms.insert(e, one.clone());
                    e -= i;
                }
                Ok(Self::from_terms(ctx, w.e_min, w.e_max, false, true, terms))
            }
            (mode, sign) => Err(Error::Contract {
                mode,
                detail: format!("{sign:?} with i = {i} has no expansion in this completion"),
            }),
        }
    }

    /// Truncation of an infinite series whose omitted part lies entirely beyond
    /// the truncated edge of the window (above for ADIC, below for DIMENSIONAL).
    /// `partial` must already contain every contribution that lands in the window.
    pub fn from_partial_sum(ctx: GenusContext, partial: &MotivePoly) -> Self {
        let w = ctx.window();
        let terms = partial.terms().map(|(e, c)| (e, c.clone())).collect();
        let adic = ctx.mode() == Mode::Adic;
        Self::from_terms(ctx, w.e_min, w.e_max, adic, !adic, terms)
    }

    /// `(1 − 𝕃^i)^{-1}` expanded in whichever direction the completion allows:
    /// `Σ 𝕃^{im}` in ADIC mode and `−(𝕃^i − 1)^{-1}` in DIMENSIONAL mode.
    pub fn inverse_one_minus_l(ctx: GenusContext, i: i64) -> Result<Self> {
        match ctx.mode() {
            Mode::Adic => Self::geom_unit_inverse(ctx, i, UnitSign::OneMinusLi),
            Mode::Dimensional => Ok(Self::geom_unit_inverse(ctx, i, UnitSign::LiMinusOne)?.neg()),
        }
    }

    pub fn ctx(&self) -> GenusContext {
        self.ctx
    }

    pub fn mode(&self) -> Mode {
        self.ctx.mode()
    }

    /// Range on which every coefficient is exact.
    pub fn effective_window(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    pub fn closed_below(&self) -> bool {
        self.closed_below
    }

    pub fn closed_above(&self) -> bool {
        self.closed_above
    }

    /// True when nothing was discarded on either side: the series is an exact class.
    pub fn is_polynomial(&self) -> bool {
        self.closed_below && self.closed_above
    }

    pub fn is_zero_in_window(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exact coefficient of `𝕃^e`, or `None` when `e` is outside the effective window.
    pub fn coeff(&self, e: i64) -> Option<CoeffPoly> {
        if e < self.lo || e > self.hi {
            return None;
        }
        Some(self.coeffs.get(&e).cloned().unwrap_or_default())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &CoeffPoly)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// The stored terms as an exact class. Only meaningful for polynomial series.
    pub fn to_poly(&self) -> MotivePoly {
        let mut p = MotivePoly::zero();
        for (&e, c) in &self.coeffs {
            p.add_term(e, c);
        }
        p
    }

    /// First exponent above `degree` (within the effective window) with a nonzero coefficient.
    pub fn first_nonzero_above(&self, degree: i64) -> Option<(i64, &CoeffPoly)> {
        self.coeffs
            .range(degree.saturating_add(1)..)
            .next()
            .map(|(&e, c)| (e, c))
    }

    fn check_same(&self, other: &MotiveSeries) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch(format!(
                "{:?} vs {:?}",
                self.ctx, other.ctx
            )));
        }
        Ok(())
    }

    fn is_exact_zero(&self) -> bool {
        self.is_polynomial() && self.coeffs.is_empty()
    }

    /// Lowest exponent that may carry a nonzero term.
    fn support_floor(&self) -> i64 {
        if !self.closed_below {
            return NEG_INF;
        }
        match self.min_exponent() {
            Some(e) => e,
            None if self.closed_above => POS_INF,
            None => self.hi + 1,
        }
    }

    /// Highest exponent that may carry a nonzero term.
    fn support_ceiling(&self) -> i64 {
        if !self.closed_above {
            return POS_INF;
        }
        match self.max_exponent() {
            Some(e) => e,
            None if self.closed_below => NEG_INF,
            None => self.lo - 1,
        }
    }

    pub fn add(&self, other: &MotiveSeries) -> Result<MotiveSeries> {
        self.check_same(other)?;
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        let mut terms = self.coeffs.clone();
        for (&e, c) in &other.coeffs {
            let slot = terms.entry(e).or_default();
            slot.add_assign(c);
        }
        Ok(Self::raw(
            self.ctx,
            lo,
            hi,
            self.closed_below && other.closed_below,
            self.closed_above && other.closed_above,
            terms,
        ))
    }

    pub fn neg(&self) -> MotiveSeries {
        MotiveSeries {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c.neg())).collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &MotiveSeries) -> Result<MotiveSeries> {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: impl Into<BigInt>) -> MotiveSeries {
        let s = s.into();
        let coeffs = self.coeffs.iter().map(|(&e, c)| (e, c.scale(&s))).collect();
        Self::raw(self.ctx, self.lo, self.hi, self.closed_below, self.closed_above, coeffs)
    }

    /// Multiplication by `𝕃^k`. Unlike [`lefschetz_power`](Self::lefschetz_power)
    /// the shift itself need not lie in the window.
    pub fn shift(&self, k: i64) -> MotiveSeries {
        let terms = self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect();
        let lo = if self.closed_below { NEG_INF } else { self.lo + k };
        let hi = if self.closed_above { POS_INF } else { self.hi + k };
        Self::from_terms(self.ctx, lo, hi, self.closed_below, self.closed_above, terms)
    }

    /// Cauchy product restricted to the exponents it determines exactly.
    pub fn mul(&self, other: &MotiveSeries) -> Result<MotiveSeries> {
        self.check_same(other)?;
        if self.is_exact_zero() || other.is_exact_zero() {
            return Ok(Self::zero(self.ctx));
        }
        if (!self.closed_below && !other.closed_above) || (!self.closed_above && !other.closed_below)
        {
            return Err(Error::Contract {
                mode: self.mode(),
                detail: "both operands have unbounded support in the summation direction".into(),
            });
        }
        let (fx, cx) = (self.support_floor(), self.support_ceiling());
        let (fy, cy) = (other.support_floor(), other.support_ceiling());

        let hi = (if self.closed_above { POS_INF } else { self.hi.saturating_add(fy) })
            .min(if other.closed_above { POS_INF } else { other.hi.saturating_add(fx) });
        let lo = (if self.closed_below { NEG_INF } else { self.lo.saturating_add(cy) })
            .max(if other.closed_below { NEG_INF } else { other.lo.saturating_add(cx) });

        let mut terms: BTreeMap<i64, CoeffPoly> = BTreeMap::new();
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in &other.coeffs {
                let e = ea + eb;
                if e < lo || e > hi {
                    continue;
                }
                terms.entry(e).or_default().add_product(ca, cb);
            }
        }
        Ok(Self::from_terms(
            self.ctx,
            lo,
            hi,
            self.closed_below && other.closed_below,
            self.closed_above && other.closed_above,
            terms,
        ))
    }

    pub fn pow(&self, n: u32) -> Result<MotiveSeries> {
        let mut acc = Self::one(self.ctx);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn sum<'a>(ctx: GenusContext, items: impl IntoIterator<Item = &'a MotiveSeries>) -> Result<MotiveSeries> {
        let mut acc = Self::zero(ctx);
        for s in items {
            acc = acc.add(s)?;
        }
        Ok(acc)
    }

    pub fn product<'a>(ctx: GenusContext, items: impl IntoIterator<Item = &'a MotiveSeries>) -> Result<MotiveSeries> {
        let mut acc = Self::one(ctx);
        for s in items {
            acc = acc.mul(s)?;
        }
        Ok(acc)
    }

    /// Re-expresses the series in another window of the same completion.
    pub fn restrict(&self, window: TruncationWindow) -> Result<MotiveSeries> {
        if window.mode != self.mode() {
            return Err(Error::ContextMismatch(format!(
                "cannot move a {} series into a {} window",
                self.mode(),
                window.mode
            )));
        }
        let ctx = self.ctx.with_window(window)?;
        let lo = if self.closed_below { NEG_INF } else { self.lo };
        let hi = if self.closed_above { POS_INF } else { self.hi };
        Ok(Self::from_terms(
            ctx,
            lo,
            hi,
            self.closed_below,
            self.closed_above,
            self.coeffs.clone(),
        ))
    }

    /// Coefficient comparison on the intersection of effective windows.
    pub fn equals(&self, other: &MotiveSeries) -> Result<Comparison> {
        if self.ctx.g() != other.ctx.g() || self.mode() != other.mode() {
            return Err(Error::ContextMismatch(format!(
                "genus/mode {}/{} vs {}/{}",
                self.ctx.g(),
                self.mode(),
                other.ctx.g(),
                other.mode()
            )));
        }
        compare_on_overlap(self, other)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SeriesJson::from(self)).expect("series serialization is infallible")
    }
}

/// Compares coefficient tables on the overlap of effective windows, without
/// requiring the two series to come from the same completion.
pub fn compare_on_overlap(x: &MotiveSeries, y: &MotiveSeries) -> Result<Comparison> {
    if x.ctx.g() != y.ctx.g() {
        return Err(Error::ContextMismatch(format!(
            "genus {} vs {}",
            x.ctx.g(),
            y.ctx.g()
        )));
    }
    let lo = x.lo.max(y.lo);
    let hi = x.hi.min(y.hi);
    if lo > hi {
        return Err(Error::EmptyWindow(x.lo, x.hi, y.lo, y.hi));
    }
    let keys: std::collections::BTreeSet<i64> = x
        .coeffs
        .range(lo..=hi)
        .chain(y.coeffs.range(lo..=hi))
        .map(|(&e, _)| e)
        .collect();
    for e in keys {
        let a = x.coeffs.get(&e).cloned().unwrap_or_default();
        let b = y.coeffs.get(&e).cloned().unwrap_or_default();
        if a != b {
            return Ok(Comparison::Unequal {
                exponent: e,
                lhs: a,
                rhs: b,
                lo,
                hi,
            });
        }
    }
    Ok(Comparison::EqualUpTo { lo, hi })
}

#[derive(Serialize)]
struct MonomialJson {
    lambda: Vec<u32>,
    value: String,
}

#[derive(Serialize)]
struct TermJson {
    exponent: i64,
    coeff: Vec<MonomialJson>,
}

#[derive(Serialize)]
struct SeriesJson {
    genus: u32,
    mode: Mode,
    window: [i64; 2],
    effective_window: [i64; 2],
    closed_below: bool,
    closed_above: bool,
    terms: Vec<TermJson>,
}

pub(crate) fn coeff_json(c: &CoeffPoly) -> serde_json::Value {
    serde_json::to_value(coeff_terms(c)).expect("coefficient serialization is infallible")
}

fn coeff_terms(c: &CoeffPoly) -> Vec<MonomialJson> {
    c.terms()
        .map(|(m, v)| MonomialJson {
            lambda: m.exps().to_vec(),
            value: v.to_string(),
        })
        .collect()
}

impl From<&MotiveSeries> for SeriesJson {
    fn from(s: &MotiveSeries) -> Self {
        let w = s.ctx.window();
        SeriesJson {
            genus: s.ctx.g(),
            mode: s.mode(),
            window: [w.e_min, w.e_max],
            effective_window: [s.lo, s.hi],
            closed_below: s.closed_below,
            closed_above: s.closed_above,
            terms: s
                .coeffs
                .iter()
                .map(|(&e, c)| TermJson {
                    exponent: e,
                    coeff: coeff_terms(c),
                })
                .collect(),
        }
    }
}
