//! Strategies and property bodies shared by the property suite and the
//! acceptance target.
#![allow(dead_code)]

use motivic::realize::{realize_poly, CountingData, RealizationTarget, RealizedValue};
use motivic::ring::{CoeffPoly, GenusContext, LambdaMonomial, Mode, MotivePoly, MotiveSeries, TruncationWindow};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub fn coeff(g: u32) -> impl Strategy<Value = CoeffPoly> {
    prop::collection::vec((prop::collection::vec(0u32..=2, g as usize), -4i64..=4), 0..=3).prop_map(|terms| {
        let mut c = CoeffPoly::zero();
        for (exps, n) in terms {
            c.add_term(LambdaMonomial::from_exps(exps), &BigInt::from(n));
        }
        c
    })
}

/// Polynomials with `𝕃`-exponents in `lo..=hi`.
pub fn poly(g: u32, lo: i64, hi: i64) -> impl Strategy<Value = MotivePoly> {
    prop::collection::vec((lo..=hi, coeff(g)), 0..=4).prop_map(|terms| {
        let mut p = MotivePoly::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    })
}

pub fn genus_and_three_polys() -> impl Strategy<Value = (u32, MotivePoly, MotivePoly, MotivePoly)> {
    (2u32..=4).prop_flat_map(|g| (Just(g), poly(g, -3, 5), poly(g, -3, 5), poly(g, -3, 5)))
}

pub fn ring_axioms((g, a, b, c): (u32, MotivePoly, MotivePoly, MotivePoly)) -> Result<(), TestCaseError> {
    let one = MotivePoly::one(g);
    prop_assert_eq!(a.mul(&b), b.mul(&a));
    prop_assert_eq!(a.add(&b), b.add(&a));
    prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
    prop_assert_eq!(a.mul(&one), a.clone());
    prop_assert!(a.sub(&a).is_zero());
    prop_assert_eq!(a.add(&b).sub(&b), a.clone());
    Ok(())
}

/// Brute-force counts of the genus-`g` fixture curve over `F_3`.
pub fn counting_data(g: u32) -> CountingData {
    let c = motivic::realize::fixture_curve(g).unwrap();
    let n = c.point_counts(g as usize).unwrap();
    CountingData::new(3, n.into_iter().map(|x| x as i64).collect()).unwrap()
}

fn binom(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// Canonical form is closed under the duality rewrite: constructing `λ^a`
/// for any `0 ≤ a ≤ 2g` yields only indices `≤ g`, the rewrite commutes with
/// `𝕃`-shifts, and every realization sees the class it would see before
/// rewriting.
pub fn duality_closure((g, a, b): (u32, u32, u32)) -> Result<(), TestCaseError> {
    let la = MotivePoly::lambda_class(g, a).unwrap();
    let lb = MotivePoly::lambda_class(g, b).unwrap();
    let prod = la.mul(&lb);
    for (_, c) in prod.terms() {
        for (m, _) in c.terms() {
            prop_assert_eq!(m.genus(), g);
            prop_assert!(m.weight() <= 2 * g);
        }
    }
    if a > g {
        let d = a - g;
        prop_assert_eq!(&la, &MotivePoly::lambda_class(g, g - d).unwrap().shift(d as i64));
    }
    let ctx = GenusContext::adic(g as i64).unwrap();
    let s = MotiveSeries::lambda_class(ctx, a as i64).unwrap();
    prop_assert_eq!(s.to_poly(), la.clone());

    let RealizedValue::Poincare(p) = realize_poly(&la, g, &RealizationTarget::Poincare).unwrap() else {
        unreachable!()
    };
    prop_assert_eq!(p.coeff(a as i64), binom(2 * g, a));
    prop_assert_eq!(p.terms().count(), 1);
    let RealizedValue::Hodge(h) = realize_poly(&la, g, &RealizationTarget::Hodge).unwrap() else {
        unreachable!()
    };
    for i in 0..=a {
        prop_assert_eq!(h.coeff(i as i64, (a - i) as i64), binom(g, i) * binom(g, a - i));
    }
    let data = counting_data(g);
    let RealizedValue::Count(n) = realize_poly(&la, g, &RealizationTarget::Count(data.clone())).unwrap() else {
        unreachable!()
    };
    let sign = if a % 2 == 1 { -1 } else { 1 };
    prop_assert_eq!(n, BigRational::from_integer(data.elementary(a as usize) * sign));
    Ok(())
}

pub fn duality_inputs() -> impl Strategy<Value = (u32, u32, u32)> {
    (2u32..=5).prop_flat_map(|g| (Just(g), 0..=2 * g, 0..=2 * g))
}

fn ctx(g: u32, mode: Mode, lo: i64, hi: i64) -> GenusContext {
    GenusContext::new(g as i64, TruncationWindow::new(lo, hi, mode).unwrap()).unwrap()
}

/// `(1 − 𝕃^i)^{-1} · (1 − 𝕃^i) = 1` on the effective window in both modes,
/// and multiplying an arbitrary class by the inverse and back is the identity.
pub fn unit_inverse((g, i, width, x): (u32, i64, i64, MotivePoly)) -> Result<(), TestCaseError> {
    for (mode, lo, hi) in [(Mode::Adic, 0, width), (Mode::Dimensional, -width, 6)] {
        let c = ctx(g, mode, lo, hi);
        let inv = MotiveSeries::inverse_one_minus_l(c, i).unwrap();
        let unit = MotiveSeries::from_poly(c, &MotivePoly::one(g).sub(&MotivePoly::lefschetz(g, i)));
        let prod = inv.mul(&unit).unwrap();
        let cmp = prod.equals(&MotiveSeries::one(c)).unwrap();
        prop_assert!(cmp.is_equal(), "{:?} i={} {:?}", mode, i, cmp);
        let (elo, ehi) = cmp.window();
        prop_assert!(elo <= ehi);
        prop_assert!(elo <= 0 && 0 <= ehi);

        let shifted = if mode == Mode::Adic { x.clone() } else { x.shift(-6) };
        let xs = MotiveSeries::from_poly(c, &shifted);
        let back = xs.mul(&inv).unwrap().mul(&unit).unwrap();
        prop_assert!(back.equals(&xs).unwrap().is_equal());
    }
    Ok(())
}

pub fn unit_inputs() -> impl Strategy<Value = (u32, i64, i64, MotivePoly)> {
    (2u32..=3, 1i64..=4, 6i64..=16).prop_flat_map(|(g, i, w)| (Just(g), Just(i), Just(w), poly(g, 0, 5)))
}

/// Every coefficient a truncated product reports on its effective window
/// equals the exact product's coefficient, and the window never leaves the
/// nominal one.
pub fn window_soundness((g, w, a, b): (u32, i64, MotivePoly, MotivePoly)) -> Result<(), TestCaseError> {
    let exact = a.mul(&b);
    for (mode, lo, hi) in [(Mode::Adic, 0, w), (Mode::Dimensional, -w, 0)] {
        let c = ctx(g, mode, lo, hi);
        let (pa, pb) = if mode == Mode::Adic { (a.clone(), b.clone()) } else { (a.shift(-8), b.shift(-8)) };
        let exact = if mode == Mode::Adic { exact.clone() } else { exact.shift(-16) };
        // an open side makes the truncation genuinely lossy
        let tail = if mode == Mode::Adic {
            MotiveSeries::inverse_one_minus_l(c, 1).unwrap()
        } else {
            MotiveSeries::one(c)
        };
        let sa = MotiveSeries::from_poly(c, &pa);
        let sb = MotiveSeries::from_poly(c, &pb);
        let prod = sa.mul(&sb).unwrap();
        let (elo, ehi) = prod.effective_window();
        prop_assert!(lo <= elo && ehi <= hi);
        for e in elo..=ehi {
            prop_assert_eq!(prod.coeff(e).unwrap(), exact.coeff(e), "{:?} e={}", mode, e);
        }
        if mode == Mode::Adic {
            let exact_tail: MotivePoly = (0..=hi).fold(MotivePoly::zero(), |acc, k| acc.add(&exact.shift(k)));
            let t = prod.mul(&tail).unwrap();
            let (tlo, thi) = t.effective_window();
            for e in tlo..=thi {
                prop_assert_eq!(t.coeff(e).unwrap(), exact_tail.coeff(e), "tail e={}", e);
            }
        }
    }
    Ok(())
}

pub fn window_inputs() -> impl Strategy<Value = (u32, i64, MotivePoly, MotivePoly)> {
    (2u32..=3, 2i64..=12).prop_flat_map(|(g, w)| (Just(g), Just(w), poly(g, 0, 8), poly(g, 0, 8)))
}

/// Each realization is a ring homomorphism on exact classes.
pub fn realization_homomorphism((g, a, b): (u32, MotivePoly, MotivePoly)) -> Result<(), TestCaseError> {
    let targets = [
        RealizationTarget::Poincare,
        RealizationTarget::Hodge,
        RealizationTarget::Count(counting_data(g)),
    ];
    for t in &targets {
        let ra = realize_poly(&a, g, t).unwrap();
        let rb = realize_poly(&b, g, t).unwrap();
        let rp = realize_poly(&a.mul(&b), g, t).unwrap();
        let rs = realize_poly(&a.add(&b), g, t).unwrap();
        match (ra, rb, rp, rs) {
            (RealizedValue::Poincare(x), RealizedValue::Poincare(y), RealizedValue::Poincare(p), RealizedValue::Poincare(s)) => {
                prop_assert_eq!(x.mul(&y), p);
                prop_assert_eq!(x.add(&y), s);
            }
            (RealizedValue::Hodge(x), RealizedValue::Hodge(y), RealizedValue::Hodge(p), RealizedValue::Hodge(s)) => {
                prop_assert_eq!(x.mul(&y), p);
                prop_assert_eq!(x.add(&y), s);
            }
            (RealizedValue::Count(x), RealizedValue::Count(y), RealizedValue::Count(p), RealizedValue::Count(s)) => {
                prop_assert_eq!(&x * &y, p);
                prop_assert_eq!(x + y, s);
            }
            _ => prop_assert!(false, "target kinds differ"),
        }
    }
    let one = realize_poly(&MotivePoly::one(g), g, &RealizationTarget::Poincare).unwrap();
    prop_assert_eq!(one.to_string(), "1");
    Ok(())
}

pub fn homomorphism_inputs() -> impl Strategy<Value = (u32, MotivePoly, MotivePoly)> {
    (2u32..=3).prop_flat_map(|g| (Just(g), poly(g, -2, 4), poly(g, -2, 4)))
}
