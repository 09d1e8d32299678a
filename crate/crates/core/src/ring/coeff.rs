//! Coefficient algebra `Z[λ¹h¹, …, λ^g h¹]`.
//!
//! The λ-classes are treated as free commuting variables. Only indices
//! `1..=g` can be stored: classes above the middle index are rewritten by
//! duality before they ever reach this layer, so every value here is in
//! canonical form and equality is structural.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Product `Π_a (λ^a h¹)^{exps[a-1]}` for `a = 1..=g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LambdaMonomial(Vec<u32>);

impl LambdaMonomial {
    pub fn unit(g: u32) -> Self {
        LambdaMonomial(vec![0; g as usize])
    }

    /// The single factor `λ^a h¹` for `1 ≤ a ≤ g`, or the unit for `a = 0`.
    pub fn lambda(g: u32, a: u32) -> Self {
        assert!(a <= g, "λ^{a} is not canonical at genus {g}");
        let mut exps = vec![0; g as usize];
        if a > 0 {
            exps[a as usize - 1] = 1;
        }
        LambdaMonomial(exps)
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        LambdaMonomial(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn genus(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Total λ-degree, i.e. `Σ_a a · exps[a]`.
    pub fn weight(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &e)| (i as u32 + 1) * e)
            .sum()
    }

    pub fn mul(&self, other: &LambdaMonomial) -> LambdaMonomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        LambdaMonomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for LambdaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("·")?;
            }
            first = false;
            write!(f, "λ{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Finite integer combination of λ-monomials. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CoeffPoly {
    terms: BTreeMap<LambdaMonomial, BigInt>,
}

impl CoeffPoly {
    pub fn zero() -> Self {
        CoeffPoly::default()
    }

    pub fn one(g: u32) -> Self {
        Self::monomial(LambdaMonomial::unit(g), BigInt::one())
    }

    pub fn constant(g: u32, c: impl Into<BigInt>) -> Self {
        Self::monomial(LambdaMonomial::unit(g), c.into())
    }

    pub fn lambda(g: u32, a: u32) -> Self {
        Self::monomial(LambdaMonomial::lambda(g, a), BigInt::one())
    }

    pub fn monomial(m: LambdaMonomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        CoeffPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LambdaMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &LambdaMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Coefficient of the unit monomial.
    pub fn constant_term(&self) -> BigInt {
        self.terms
            .iter()
            .find(|(m, _)| m.is_unit())
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    pub fn add_term(&mut self, m: LambdaMonomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add_assign(&mut self, other: &CoeffPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c);
        }
    }

    pub fn sub_assign(&mut self, other: &CoeffPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), &-c);
        }
    }

    /// `self += a · b`, the inner step of every Cauchy product.
    pub fn add_product(&mut self, a: &CoeffPoly, b: &CoeffPoly) {
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(ma.mul(mb), &(ca * cb));
            }
        }
    }

    pub fn add(&self, other: &CoeffPoly) -> CoeffPoly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &CoeffPoly) -> CoeffPoly {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn mul(&self, other: &CoeffPoly) -> CoeffPoly {
        let mut out = CoeffPoly::zero();
        out.add_product(self, other);
        out
    }

    pub fn neg(&self) -> CoeffPoly {
        CoeffPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, s: &BigInt) -> CoeffPoly {
        if s.is_zero() {
            return CoeffPoly::zero();
        }
        CoeffPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }
}

impl fmt::Display for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if i == 0 {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if m.is_unit() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}{m}")?;
            }
        }
        Ok(())
    }
}
