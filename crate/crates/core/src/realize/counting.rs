//! Point counts, Frobenius symmetric functions and the symmetric-power oracle.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Wire form `{"q": 3, "counts": [N₁, …, N_g]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsFile {
    pub q: u64,
    pub counts: Vec<i64>,
}

/// Point counts `N_j = #C(F_{q^j})`, `j = 1..g`, with the derived
/// elementary symmetric functions `e_0..e_{2g}` of the Frobenius eigenvalues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountingData {
    q: u64,
    counts: Vec<i64>,
    power_sums: Vec<BigInt>,
    elementary: Vec<BigInt>,
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).expect("q ≥ 2 has a divisor");
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
    }
    r == 1
}

impl CountingData {
    pub fn new(q: u64, counts: Vec<i64>) -> Result<Self> {
        if !is_prime_power(q) {
            return Err(Error::Domain(format!("q = {q} is not a prime power")));
        }
        let g = counts.len();
        if g == 0 {
            return Err(Error::Domain("need at least N₁".into()));
        }
        let qb = BigInt::from(q);
        // p_j = q^j + 1 − N_j
        let power_sums: Vec<BigInt> = counts
            .iter()
            .enumerate()
            .map(|(j, &n)| qb.pow(j as u32 + 1) + 1 - n)
            .collect();
        let mut e = vec![BigInt::one()];
        for a in 1..=g {
            // a·e_a = Σ_{m=1}^{a} (−1)^{m−1} e_{a−m} p_m
            let mut s = BigInt::zero();
            for m in 1..=a {
                let t = &e[a - m] * &power_sums[m - 1];
                if m % 2 == 1 {
                    s += t;
                } else {
                    s -= t;
                }
            }
            if !(&s % a).is_zero() {
                return Err(Error::Oracle(format!(
                    "counts {counts:?} over F_{q} give a non-integral e_{a}"
                )));
            }
            e.push(s / a);
        }
        // e_{g+δ} = q^δ e_{g−δ}
        for delta in 1..=g {
            e.push(qb.pow(delta as u32) * &e[g - delta]);
        }
        Ok(CountingData { q, counts, power_sums, elementary: e })
    }

    pub fn from_file(f: CountsFile) -> Result<Self> {
        Self::new(f.q, f.counts)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let f: CountsFile = serde_json::from_str(text)
            .map_err(|e| Error::Config(format!("counts file: {e}")))?;
        Self::from_file(f)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn genus(&self) -> u32 {
        self.counts.len() as u32
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    pub fn power_sums(&self) -> &[BigInt] {
        &self.power_sums
    }

    /// `e_a` for `0 ≤ a ≤ 2g`, zero beyond.
    pub fn elementary(&self, a: usize) -> BigInt {
        self.elementary.get(a).cloned().unwrap_or_default()
    }

    /// `N_j` for any `j ≥ 1`, extending past `g` through the eigenvalue
    /// power sums `p_j = Σ_{m=1}^{j−1} (−1)^{m−1} e_m p_{j−m} + (−1)^{j−1} j e_j`.
    pub fn extended_counts(&self, j_max: usize) -> Vec<BigInt> {
        let mut p: Vec<BigInt> = vec![BigInt::zero()];
        for j in 1..=j_max {
            let mut s = BigInt::zero();
            for m in 1..j {
                let t = self.elementary(m) * &p[j - m];
                if m % 2 == 1 {
                    s += t;
                } else {
                    s -= t;
                }
            }
            let last = self.elementary(j) * j;
            if j % 2 == 1 {
                s += last;
            } else {
                s -= last;
            }
            p.push(s);
        }
        let qb = BigInt::from(self.q);
        (1..=j_max).map(|j| qb.pow(j as u32) + 1 - &p[j]).collect()
    }
}

/// `#C_k(F_q)`: the coefficient of `t^k` in `exp(Σ_j N_j t^j / j)`.
pub fn sym_count_oracle(data: &CountingData, k: usize) -> Result<BigInt> {
    let n = data.extended_counts(k);
    let mut f: Vec<BigRational> = vec![BigRational::one()];
    // k f_k = Σ_{j=1}^{k} N_j f_{k−j}
    for m in 1..=k {
        let mut s = BigRational::zero();
        for j in 1..=m {
            s += BigRational::from_integer(n[j - 1].clone()) * &f[m - j];
        }
        f.push(s / BigRational::from_integer(BigInt::from(m)));
    }
    let v = &f[k];
    if !v.is_integer() || v.is_negative() {
        return Err(Error::Oracle(format!("#C_{k} evaluates to {v}")));
    }
    Ok(v.to_integer())
}
