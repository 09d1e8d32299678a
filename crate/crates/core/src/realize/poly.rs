//! Laurent polynomials in one and two variables with integer coefficients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

/// `Σ c_e t^e`, `e ∈ ℤ`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Laurent {
    terms: BTreeMap<i64, BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(e: i64, c: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.add_term(e, &c.into());
        out
    }

    /// From dense coefficients, constant term first.
    pub fn from_coeffs<I: IntoIterator<Item = C>, C: Into<BigInt>>(coeffs: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in coeffs.into_iter().enumerate() {
            out.add_term(e as i64, &c.into());
        }
        out
    }

    pub fn add_term(&mut self, e: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add(&self, o: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&e, c) in &o.terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, o: &Laurent) -> Laurent {
        self.add(&o.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, s: &BigInt) -> Laurent {
        let mut out = Laurent::zero();
        for (&e, c) in &self.terms {
            out.add_term(e, &(c * s));
        }
        out
    }

    pub fn mul(&self, o: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &o.terms {
                out.add_term(a + b, &(ca * cb));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Laurent {
        (0..n).fold(Laurent::one(), |acc, _| acc.mul(self))
    }

    /// Exact division by a polynomial whose lowest and highest coefficients
    /// are `±1`; `None` if there is a remainder.
    pub fn div_exact(&self, d: &Laurent) -> Option<Laurent> {
        let dd = d.degree()?;
        let lead = d.coeff(dd);
        if lead.clone() * &lead != BigInt::one() {
            return None;
        }
        let mut rem = self.clone();
        let mut q = Laurent::zero();
        let floor = self.min_degree().unwrap_or(0) - d.min_degree().unwrap_or(0);
        while let Some(top) = rem.degree() {
            let shift = top - dd;
            if shift < floor {
                break;
            }
            let c = rem.coeff(top) * &lead;
            q.add_term(shift, &c);
            rem = rem.sub(&d.mul(&Laurent::monomial(shift, c)));
        }
        rem.is_zero().then_some(q)
    }

    /// `{"min_degree": e₀, "coeffs": [c_{e₀}, …]}` with decimal strings.
    pub fn to_json(&self) -> Value {
        match (self.min_degree(), self.degree()) {
            (Some(lo), Some(hi)) => json!({
                "min_degree": lo,
                "coeffs": (lo..=hi).map(|e| self.coeff(e).to_string()).collect::<Vec<_>>(),
            }),
            _ => json!({ "min_degree": 0, "coeffs": [] }),
        }
    }
}

impl std::fmt::Display for Laurent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c < &BigInt::zero();
            let mag = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let show_coeff = !mag.is_one() || e == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

/// `Σ c_{ij} u^i v^j`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Hodge {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl Hodge {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    pub fn monomial(i: i64, j: i64, c: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.add_term(i, j, &c.into());
        out
    }

    pub fn add_term(&mut self, i: i64, j: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: i64, j: i64) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Hodge) -> Hodge {
        let mut out = self.clone();
        for (&(i, j), c) in &o.terms {
            out.add_term(i, j, c);
        }
        out
    }

    pub fn scale(&self, s: &BigInt) -> Hodge {
        let mut out = Hodge::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(i, j, &(c * s));
        }
        out
    }

    pub fn mul(&self, o: &Hodge) -> Hodge {
        let mut out = Hodge::zero();
        for (&(a, b), ca) in &self.terms {
            for (&(c, d), cb) in &o.terms {
                out.add_term(a + c, b + d, &(ca * cb));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Hodge {
        (0..n).fold(Hodge::one(), |acc, _| acc.mul(self))
    }

    /// Substitute `u = v = t`.
    pub fn diagonal(&self) -> Laurent {
        let mut out = Laurent::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(i + j, c);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(&(i, j), c)| json!({ "u": i, "v": j, "coeff": c.to_string() }))
                .collect(),
        )
    }
}
