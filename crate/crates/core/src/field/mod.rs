//! Finite field arithmetic.
//!
//! [`FieldSpec`] is a concrete `F_{p^n}` with a canonical modulus. [`ResidueField`]
//! builds `F[t]/(pi)` on top of any [`Field`], which is how poles living in
//! extensions of the base field are handled.

mod prime_power;
mod residue;

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigUint;

use crate::error::Result;

pub use prime_power::{field_make, is_prime, FieldElement, FieldSpec};
pub use residue::ResidueField;

/// Default cap on the number of elements any exhaustive enumeration may visit.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 20;

/// A finite field together with its element representation.
///
/// Elements are plain values; every operation goes through the field so the
/// modulus never has to be stored per element.
pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + Eq + Hash + Debug + Send + Sync;

    fn characteristic(&self) -> u64;

    /// Degree over the prime field.
    fn absolute_degree(&self) -> u32;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    /// Image of the integer `k` under `Z -> F`.
    fn from_u64(&self, k: u64) -> Self::Elem;

    /// All elements, in a fixed deterministic order.
    fn elements(&self, cap: u64) -> Result<Vec<Self::Elem>>;

    fn order(&self) -> BigUint {
        BigUint::from(self.characteristic()).pow(self.absolute_degree())
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn pow_big(&self, a: &Self::Elem, e: &BigUint) -> Self::Elem {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    /// The absolute Frobenius `a -> a^p`.
    fn frobenius(&self, a: &Self::Elem) -> Self::Elem {
        self.pow(a, self.characteristic())
    }

    /// Trace down to the prime field, `sum_k a^(p^k)`.
    fn absolute_trace(&self, a: &Self::Elem) -> Self::Elem {
        let mut acc = self.zero();
        let mut conj = a.clone();
        for _ in 0..self.absolute_degree() {
            acc = self.add(&acc, &conj);
            conj = self.frobenius(&conj);
        }
        acc
    }

    /// The unique `b` with `b^p = a`, namely `a^(p^(N-1))` for `N` the absolute degree.
    fn pth_root(&self, a: &Self::Elem) -> Self::Elem {
        let mut b = a.clone();
        for _ in 1..self.absolute_degree() {
            b = self.frobenius(&b);
        }
        b
    }
}
