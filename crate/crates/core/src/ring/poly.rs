//! Exact (untruncated) Laurent polynomials in 𝕃 with λ-polynomial coefficients.
//!
//! Classes of actual varieties in scope (symmetric powers, the Jacobian,
//! products of those with powers of 𝕃) are finite objects, so identities
//! among them are decided here without any window.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use super::coeff::CoeffPoly;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MotivePoly {
    terms: BTreeMap<i64, CoeffPoly>,
}

impl MotivePoly {
    pub fn zero() -> Self {
        MotivePoly::default()
    }

    pub fn one(g: u32) -> Self {
        Self::term(0, CoeffPoly::one(g))
    }

    pub fn term(e: i64, c: CoeffPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        MotivePoly { terms }
    }

    /// `𝕃^e`.
    pub fn lefschetz(g: u32, e: i64) -> Self {
        Self::term(e, CoeffPoly::one(g))
    }

    /// The class `λ^a h¹(C)` in canonical form: for `a = g + δ` this is
    /// `λ^{g−δ} 𝕃^δ`, and it vanishes for `a > 2g`.
    pub fn lambda_class(g: u32, a: u32) -> Result<Self> {
        if a > 2 * g {
            return Err(Error::Domain(format!(
                "λ^{a} h¹ requested at genus {g}; index must lie in 0..={}",
                2 * g
            )));
        }
        Ok(if a <= g {
            Self::term(0, CoeffPoly::lambda(g, a))
        } else {
            let delta = a - g;
            Self::term(delta as i64, CoeffPoly::lambda(g, g - delta))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &CoeffPoly)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, e: i64) -> CoeffPoly {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, e: i64, c: &CoeffPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        slot.add_assign(c);
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add_assign(&mut self, other: &MotivePoly) {
        for (&e, c) in &other.terms {
            self.add_term(e, c);
        }
    }

    pub fn add(&self, other: &MotivePoly) -> MotivePoly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &MotivePoly) -> MotivePoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MotivePoly {
        MotivePoly {
            terms: self.terms.iter().map(|(&e, c)| (e, c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &BigInt) -> MotivePoly {
        let mut out = MotivePoly::zero();
        for (&e, c) in &self.terms {
            out.add_term(e, &c.scale(s));
        }
        out
    }

    /// Multiplication by `𝕃^k`.
    pub fn shift(&self, k: i64) -> MotivePoly {
        MotivePoly {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &MotivePoly) -> MotivePoly {
        let mut terms: BTreeMap<i64, CoeffPoly> = BTreeMap::new();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &other.terms {
                terms.entry(ea + eb).or_default().add_product(ca, cb);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MotivePoly { terms }
    }

    pub fn sum<'a>(items: impl IntoIterator<Item = &'a MotivePoly>) -> MotivePoly {
        let mut out = MotivePoly::zero();
        for p in items {
            out.add_assign(p);
        }
        out
    }

    /// `1 + 𝕃 + … + 𝕃^n` (empty sum for `n < 0`).
    pub fn geometric_block(g: u32, n: i64) -> MotivePoly {
        let mut out = MotivePoly::zero();
        for l in 0..=n {
            out.add_term(l, &CoeffPoly::one(g));
        }
        out
    }

    /// Lowest exponent at which `self` and `other` differ.
    pub fn first_difference(&self, other: &MotivePoly) -> Option<(i64, CoeffPoly, CoeffPoly)> {
        let diff = self.sub(other);
        diff.min_exponent()
            .map(|e| (e, self.coeff(e), other.coeff(e)))
    }
}

impl fmt::Display for MotivePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match *e {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})·𝕃")?,
                _ => write!(f, "({c})·𝕃^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_class_applies_duality() {
        assert_eq!(
            MotivePoly::lambda_class(2, 4).unwrap(),
            MotivePoly::lefschetz(2, 2)
        );
        assert_eq!(
            MotivePoly::lambda_class(2, 3).unwrap(),
            MotivePoly::term(1, CoeffPoly::lambda(2, 1))
        );
        assert!(MotivePoly::lambda_class(2, 5).is_err());
    }

    #[test]
    fn geometric_block_bounds() {
        assert!(MotivePoly::geometric_block(2, -1).is_zero());
        let b = MotivePoly::geometric_block(2, 2);
        assert_eq!((b.min_exponent(), b.max_exponent()), (Some(0), Some(2)));
    }

    #[test]
    fn difference_witness_is_lowest_exponent() {
        let a = MotivePoly::lefschetz(2, 1).add(&MotivePoly::lefschetz(2, 3));
        let b = MotivePoly::lefschetz(2, 3);
        let (e, lhs, rhs) = a.first_difference(&b).unwrap();
        assert_eq!(e, 1);
        assert_eq!(lhs, CoeffPoly::one(2));
        assert!(rhs.is_zero());
        assert!(a.first_difference(&a).is_none());
    }
}
