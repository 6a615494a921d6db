use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::Field;
use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};

/// The field `F_q`, `q = p^n`, modelled as `F_p[t]/(modulus)`.
///
/// The modulus is the smallest monic irreducible of degree `n` when coefficient
/// tuples are compared from the constant term up, so `(p, n)` determines the
/// model completely.
#[derive(Clone)]
pub struct FieldSpec {
    p: u64,
    n: u32,
    q: u64,
    /// Monic modulus, constant term first, length `n + 1`. Absent for prime fields.
    modulus: Option<Arc<[u64]>>,
}

/// An element of a [`FieldSpec`], packed as `sum c_i p^i` over its coefficient
/// vector `c_0 .. c_{n-1}` in the basis `1, t, .., t^(n-1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FieldElement(u64);

impl FieldElement {
    pub fn index(self) -> u64 {
        self.0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.n == other.n
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.modulus {
            None => write!(f, "F_{}", self.p),
            Some(m) => write!(f, "F_{}^{} mod {:?}", self.p, self.n, m),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Builds `F_{p^n}` with its canonical modulus.
pub fn field_make(p: u64, n: u32) -> Result<FieldSpec> {
    FieldSpec::new(p, n)
}

impl FieldSpec {
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        if n < 1 {
            return Err(Error::InvalidDegree(n));
        }
        let q = p.checked_pow(n).ok_or(Error::FieldTooLarge { p, n })?;
        let prime = FieldSpec {
            p,
            n: 1,
            q: p,
            modulus: None,
        };
        if n == 1 {
            return Ok(prime);
        }
        let modulus = canonical_modulus(&prime, n);
        Ok(FieldSpec {
            p,
            n,
            q,
            modulus: Some(modulus.into()),
        })
    }

    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1)
    }

    /// Smallest `F_{p^n}` with `p^n = q`, if `q` is a prime power.
    pub fn with_order(q: u64) -> Result<Self> {
        let p = (2..=q).find(|d| q % d == 0).ok_or(Error::InvalidPrime(q))?;
        let mut n = 0u32;
        let mut rest = q;
        while rest % p == 0 {
            rest /= p;
            n += 1;
        }
        if rest != 1 {
            return Err(Error::InvalidPrime(q));
        }
        Self::new(p, n)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> Option<&[u64]> {
        self.modulus.as_deref()
    }

    pub fn element(&self, coeffs: &[u64]) -> FieldElement {
        assert!(coeffs.len() <= self.n as usize, "too many coefficients");
        let mut idx = 0u64;
        for &c in coeffs.iter().rev() {
            idx = idx * self.p + c % self.p;
        }
        FieldElement(idx)
    }

    /// Element with packed index `idx` (must be below `q`).
    pub fn element_at(&self, idx: u64) -> FieldElement {
        assert!(idx < self.q, "index {idx} outside field of order {}", self.q);
        FieldElement(idx)
    }

    /// Coefficient vector of length `n`, constant term first.
    pub fn coefficients(&self, a: FieldElement) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.n as usize);
        let mut idx = a.0;
        for _ in 0..self.n {
            out.push(idx % self.p);
            idx /= self.p;
        }
        out
    }

    /// The class of `t` (a generator of `F_q` over `F_p` when `n > 1`).
    pub fn generator(&self) -> FieldElement {
        if self.n == 1 {
            FieldElement(0)
        } else {
            FieldElement(self.p)
        }
    }

    fn mul_ext(&self, a: u64, b: u64) -> u64 {
        let p = self.p;
        let n = self.n as usize;
        let x = self.coefficients(FieldElement(a));
        let y = self.coefficients(FieldElement(b));
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi * yj) % p;
            }
        }
        let modulus = self.modulus.as_ref().expect("extension field has a modulus");
        for k in (n..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            // t^k = t^(k-n) * t^n and t^n = -(m_0 + .. + m_{n-1} t^(n-1))
            for (i, &m) in modulus[..n].iter().enumerate() {
                let sub = c * m % p;
                prod[k - n + i] = (prod[k - n + i] + p - sub) % p;
            }
        }
        self.element(&prod[..n]).0
    }
}

/// Walks monic degree-`n` candidates with the constant term as most significant
/// digit and returns the first irreducible one.
fn canonical_modulus(prime: &FieldSpec, n: u32) -> Vec<u64> {
    let p = prime.p;
    let n = n as usize;
    let ring = PolyRing::new(prime.clone());
    let total = p.pow(n as u32);
    for k in 0..total {
        let mut digits = vec![0u64; n];
        let mut rest = k;
        for slot in (0..n).rev() {
            digits[slot] = rest % p;
            rest /= p;
        }
        let mut coeffs: Vec<u64> = digits;
        coeffs.push(1);
        let poly = Poly::from_vec(
            &ring,
            coeffs.iter().map(|&c| FieldElement(c)).collect(),
        );
        if ring.is_irreducible(&poly) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

impl Field for FieldSpec {
    type Elem = FieldElement;

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn absolute_degree(&self) -> u32 {
        self.n
    }

    fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        if self.n == 1 {
            return FieldElement((a.0 + b.0) % self.p);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.n {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place = place.wrapping_mul(self.p);
        }
        FieldElement(out)
    }

    fn neg(&self, a: &FieldElement) -> FieldElement {
        if self.n == 1 {
            return FieldElement((self.p - a.0) % self.p);
        }
        let mut x = a.0;
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.n {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place = place.wrapping_mul(self.p);
        }
        FieldElement(out)
    }

    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        if self.n == 1 {
            return FieldElement(((a.0 as u128 * b.0 as u128) % self.p as u128) as u64);
        }
        FieldElement(self.mul_ext(a.0, b.0))
    }

    fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q - 2))
    }

    fn from_u64(&self, k: u64) -> FieldElement {
        FieldElement(k % self.p)
    }

    fn elements(&self, cap: u64) -> Result<Vec<FieldElement>> {
        if self.q > cap {
            return Err(Error::budget("field order q", self.q, cap));
        }
        Ok((0..self.q).map(FieldElement).collect())
    }
}
