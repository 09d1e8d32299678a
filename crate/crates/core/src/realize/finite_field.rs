//! Naive point counting on hyperelliptic curves `y² = f(x)` over `F_{p^n}`.

use crate::error::{Error, Result};

/// Polynomials over `F_p` as coefficient vectors, constant term first.
type Fp = Vec<u64>;

fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_inv(a: u64, p: u64) -> u64 {
    // Fermat; p is prime
    let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn poly_rem(a: &Fp, m: &Fp, p: u64) -> Fp {
    let mut r = trim(a.clone());
    let m = trim(m.clone());
    let dm = m.len() - 1;
    let inv_lead = fp_inv(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = r[top] * inv_lead % p;
        let shift = top - dm;
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * mi % p) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn poly_gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn derivative(a: &Fp, p: u64) -> Fp {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % p) * c % p).collect())
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Monic polynomials of degree `d` over `F_p`, in counting order.
fn monic_of_degree(d: usize, p: u64) -> impl Iterator<Item = Fp> {
    (0..p.pow(d as u32)).map(move |mut idx| {
        let mut v = Vec::with_capacity(d + 1);
        for _ in 0..d {
            v.push(idx % p);
            idx /= p;
        }
        v.push(1);
        v
    })
}

fn is_irreducible(m: &Fp, p: u64) -> bool {
    let n = m.len() - 1;
    (1..=n / 2).all(|d| monic_of_degree(d, p).all(|f| !poly_rem(m, &f, p).is_empty()))
}

/// `F_{p^n}`, elements encoded as integers `Σ c_i p^i` in `0..p^n`.
#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u64,
    n: usize,
    modulus: Fp,
}

impl FiniteField {
    pub fn new(p: u64, n: usize) -> Result<Self> {
        if !is_prime(p) || n == 0 {
            return Err(Error::Domain(format!("F_{{{p}^{n}}} is not a field size")));
        }
        let modulus = monic_of_degree(n, p)
            .find(|m| is_irreducible(m, p))
            .expect("irreducible polynomials exist in every degree");
        Ok(FiniteField { p, n, modulus })
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.n as u32)
    }

    fn decode(&self, mut x: u64) -> Fp {
        let mut v = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            v.push(x % self.p);
            x /= self.p;
        }
        trim(v)
    }

    fn encode(&self, a: &Fp) -> u64 {
        a.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn mul(&self, x: u64, y: u64) -> u64 {
        let prod = poly_mul(&self.decode(x), &self.decode(y), self.p);
        self.encode(&poly_rem(&prod, &self.modulus, self.p))
    }

    pub fn add(&self, x: u64, y: u64) -> u64 {
        let (a, b) = (self.decode(x), self.decode(y));
        let n = a.len().max(b.len());
        let s: Fp = (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p)
            .collect();
        self.encode(&trim(s))
    }

    /// The prime-field element `c` as a field element.
    pub fn scalar(&self, c: u64) -> u64 {
        c % self.p
    }
}

/// `y² = f(x)` with `f ∈ F_p[x]` squarefree of odd degree `2g + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperellipticCurve {
    pub p: u64,
    /// Coefficients of `f`, constant term first.
    pub f: Vec<u64>,
}

impl HyperellipticCurve {
    pub fn new(p: u64, f: Vec<u64>) -> Result<Self> {
        if !is_prime(p) || p == 2 {
            return Err(Error::Domain(format!("need an odd prime, got {p}")));
        }
        let f = trim(f.into_iter().map(|c| c % p).collect());
        if f.len() < 4 || !f.len().is_multiple_of(2) {
            return Err(Error::Domain("f must have odd degree ≥ 3".into()));
        }
        if poly_gcd(&f, &derivative(&f, p), p).len() != 1 {
            return Err(Error::Domain("f is not squarefree".into()));
        }
        Ok(HyperellipticCurve { p, f })
    }

    pub fn genus(&self) -> u32 {
        ((self.f.len() - 2) / 2) as u32
    }

    /// `#C(F_{p^n})`: affine solutions plus the single point at infinity.
    pub fn count_points(&self, n: usize) -> Result<u64> {
        let k = FiniteField::new(self.p, n)?;
        let q = k.order();
        let mut is_square = vec![false; q as usize];
        for y in 0..q {
            is_square[k.mul(y, y) as usize] = true;
        }
        let mut total = 1u64;
        for x in 0..q {
            // Horner
            let fx = self.f.iter().rev().fold(0, |acc, &c| k.add(k.mul(acc, x), k.scalar(c)));
            total += match fx {
                0 => 1,
                v if is_square[v as usize] => 2,
                _ => 0,
            };
        }
        Ok(total)
    }

    /// `N_1, …, N_m`.
    pub fn point_counts(&self, m: usize) -> Result<Vec<u64>> {
        (1..=m).map(|n| self.count_points(n)).collect()
    }
}

/// A fixed test curve of genus `g` over `F_3`: `y² = x⁵ − x` for `g = 2`,
/// otherwise the first squarefree `x^{2g+1} + a x + b`.
pub fn fixture_curve(g: u32) -> Result<HyperellipticCurve> {
    if g < 1 {
        return Err(Error::InvalidGenus(g as i64));
    }
    let p = 3;
    let deg = 2 * g as usize + 1;
    if g == 2 {
        return HyperellipticCurve::new(p, vec![0, p - 1, 0, 0, 0, 1]);
    }
    for a in 0..p {
        for b in 0..p {
            let mut f = vec![0; deg + 1];
            f[0] = b;
            f[1] = a;
            f[deg] = 1;
            if let Ok(c) = HyperellipticCurve::new(p, f) {
                return Ok(c);
            }
        }
    }
    Err(Error::Oracle(format!("no squarefree fixture of genus {g} over F_3")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small() {
        let k = FiniteField::new(3, 2).unwrap();
        assert_eq!(k.order(), 9);
        // every nonzero element has an inverse
        for x in 1..9 {
            assert!((1..9).any(|y| k.mul(x, y) == 1));
        }
        assert!(FiniteField::new(4, 1).is_err());
    }

    #[test]
    fn elliptic_curve_count() {
        // y² = x³ − x over F_3: x ∈ {0, 1, 2} all give 0, plus ∞
        let e = HyperellipticCurve::new(3, vec![0, 2, 0, 1]).unwrap();
        assert_eq!(e.count_points(1).unwrap(), 4);
        // Hasse bound over F_9
        let n2 = e.count_points(2).unwrap() as i64;
        assert!((n2 - 10).abs() <= 6);
    }

    #[test]
    fn fixture_genera() {
        for g in 2..=4 {
            assert_eq!(fixture_curve(g).unwrap().genus(), g);
        }
        assert!(HyperellipticCurve::new(3, vec![0, 0, 0, 1]).is_err());
    }
}
