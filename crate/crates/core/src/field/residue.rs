use num_bigint::BigUint;

use super::Field;
use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};

/// The residue field `K[t]/(pi)` of an irreducible `pi` over a base field `K`.
///
/// Elements are coefficient vectors of length `deg pi` over `K`, constant term
/// first. The class of `t` is the root of `pi` returned by [`ResidueField::root`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueField<F: Field> {
    ring: PolyRing<F>,
    modulus: Poly<F::Elem>,
    degree: usize,
}

impl<F: Field> ResidueField<F> {
    /// `modulus` must be monic and irreducible over `base`. Irreducibility is
    /// the caller's promise; it is only checked in debug builds.
    pub fn new(base: F, modulus: Poly<F::Elem>) -> Result<Self> {
        let ring = PolyRing::new(base);
        let degree = modulus.degree().ok_or(Error::DivisionByZero)?;
        if degree == 0 {
            return Err(Error::InvalidDegree(0));
        }
        if !ring.is_monic(&modulus) {
            return Err(Error::NotMonic);
        }
        debug_assert!(ring.is_irreducible(&modulus));
        Ok(ResidueField {
            ring,
            modulus,
            degree,
        })
    }

    pub fn base(&self) -> &F {
        self.ring.field()
    }

    pub fn base_ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn modulus(&self) -> &Poly<F::Elem> {
        &self.modulus
    }

    /// Degree of the extension over the base field.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The class of `t`, a root of the modulus.
    pub fn root(&self) -> Vec<F::Elem> {
        self.from_poly(&self.ring.x())
    }

    /// Embeds a base-field element.
    pub fn embed(&self, c: &F::Elem) -> Vec<F::Elem> {
        let mut v = vec![self.base().zero(); self.degree];
        v[0] = c.clone();
        v
    }

    /// Reduces a polynomial in `t` to its residue class.
    pub fn from_poly(&self, a: &Poly<F::Elem>) -> Vec<F::Elem> {
        let r = self.ring.rem(a, &self.modulus).expect("modulus is nonzero");
        let mut v = r.coeffs().to_vec();
        v.resize(self.degree, self.base().zero());
        v
    }

    pub fn to_poly(&self, a: &[F::Elem]) -> Poly<F::Elem> {
        Poly::from_vec(&self.ring, a.to_vec())
    }

    /// Returns `Some(c)` when `a` lies in the base field.
    pub fn as_base(&self, a: &[F::Elem]) -> Option<F::Elem> {
        let k = self.base();
        if a[1..].iter().all(|c| k.is_zero(c)) {
            Some(a[0].clone())
        } else {
            None
        }
    }

    /// Relative trace down to the base field, `sum_k a^(Q^k)` with `Q` the base order.
    pub fn trace(&self, a: &[F::Elem]) -> F::Elem {
        let q = self.base().order();
        let mut acc = self.zero();
        let mut conj = a.to_vec();
        for _ in 0..self.degree {
            acc = self.add(&acc, &conj);
            conj = self.pow_big(&conj, &q);
        }
        self.as_base(&acc)
            .expect("trace lands in the base field")
    }
}

impl<F: Field> Field for ResidueField<F> {
    type Elem = Vec<F::Elem>;

    fn characteristic(&self) -> u64 {
        self.base().characteristic()
    }

    fn absolute_degree(&self) -> u32 {
        self.base().absolute_degree() * self.degree as u32
    }

    fn zero(&self) -> Self::Elem {
        vec![self.base().zero(); self.degree]
    }

    fn one(&self) -> Self::Elem {
        self.embed(&self.base().one())
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.iter().all(|c| self.base().is_zero(c))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let k = self.base();
        a.iter().zip(b).map(|(x, y)| k.add(x, y)).collect()
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        let k = self.base();
        a.iter().map(|x| k.neg(x)).collect()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let prod = self.ring.mul(&self.to_poly(a), &self.to_poly(b));
        self.from_poly(&prod)
    }

    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        // s*a + t*m = 1 with gcd(a, m) = 1 because m is irreducible.
        let (g, s, _) = self.ring.xgcd(&self.to_poly(a), &self.modulus);
        debug_assert!(g.degree() == Some(0));
        let ginv = self.base().inv(&g.coeffs()[0])?;
        Ok(self.from_poly(&self.ring.scale(&s, &ginv)))
    }

    fn from_u64(&self, k: u64) -> Self::Elem {
        self.embed(&self.base().from_u64(k))
    }

    fn elements(&self, cap: u64) -> Result<Vec<Self::Elem>> {
        let order = self.order();
        if order > BigUint::from(cap) {
            return Err(Error::budget("residue field order", order, cap));
        }
        let base = self.base().elements(cap)?;
        let mut out: Vec<Self::Elem> = vec![Vec::new()];
        for _ in 0..self.degree {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    base.iter().map(move |c| {
                        let mut v = prefix.clone();
                        v.push(c.clone());
                        v
                    })
                })
                .collect();
        }
        Ok(out)
    }
}
