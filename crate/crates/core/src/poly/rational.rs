use super::{Poly, PolyRing};
use crate::error::{Error, Result};
use crate::field::Field;

/// A reduced quotient `num / den` with `den` monic and `gcd(num, den) = 1`.
///
/// No bound on `deg num` is imposed here; behaviour at infinity is a property
/// checked by admissibility, not a type invariant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFn<T> {
    num: Poly<T>,
    den: Poly<T>,
}

impl<T: Clone + Eq> RationalFn<T> {
    pub fn num(&self) -> &Poly<T> {
        &self.num
    }

    pub fn den(&self) -> &Poly<T> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Field> PolyRing<F> {
    /// Reduces `num / den` to lowest terms with a monic denominator.
    pub fn rational(&self, num: Poly<F::Elem>, den: Poly<F::Elem>) -> Result<RationalFn<F::Elem>> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = self.gcd(&num, &den);
        let num = self.div_exact(&num, &g)?;
        let den = self.div_exact(&den, &g)?;
        let (lc, den) = self.make_monic(&den);
        let num = self.scale(&num, &self.field().inv(&lc)?);
        Ok(RationalFn { num, den })
    }

    pub fn rational_from_poly(&self, a: Poly<F::Elem>) -> RationalFn<F::Elem> {
        RationalFn {
            num: a,
            den: self.one(),
        }
    }

    pub fn rat_zero(&self) -> RationalFn<F::Elem> {
        self.rational_from_poly(Poly::zero())
    }

    pub fn rat_add(&self, a: &RationalFn<F::Elem>, b: &RationalFn<F::Elem>) -> RationalFn<F::Elem> {
        let num = self.add(&self.mul(&a.num, &b.den), &self.mul(&b.num, &a.den));
        let den = self.mul(&a.den, &b.den);
        self.rational(num, den).expect("product of monic denominators is nonzero")
    }

    pub fn rat_neg(&self, a: &RationalFn<F::Elem>) -> RationalFn<F::Elem> {
        RationalFn {
            num: self.neg(&a.num),
            den: a.den.clone(),
        }
    }

    pub fn rat_sub(&self, a: &RationalFn<F::Elem>, b: &RationalFn<F::Elem>) -> RationalFn<F::Elem> {
        self.rat_add(a, &self.rat_neg(b))
    }

    pub fn rat_mul(&self, a: &RationalFn<F::Elem>, b: &RationalFn<F::Elem>) -> RationalFn<F::Elem> {
        let num = self.mul(&a.num, &b.num);
        let den = self.mul(&a.den, &b.den);
        self.rational(num, den).expect("nonzero denominator")
    }

    pub fn rat_scale(&self, a: &RationalFn<F::Elem>, c: &F::Elem) -> RationalFn<F::Elem> {
        if self.field().is_zero(c) {
            return self.rat_zero();
        }
        RationalFn {
            num: self.scale(&a.num, c),
            den: a.den.clone(),
        }
    }

    /// `a^p`, computed coefficientwise through the Frobenius.
    pub fn rat_frobenius(&self, a: &RationalFn<F::Elem>) -> RationalFn<F::Elem> {
        let p = self.field().characteristic();
        RationalFn {
            num: self.pow(&a.num, p),
            den: self.pow(&a.den, p),
        }
    }

    /// `z^p - z`.
    pub fn artin_schreier(&self, z: &RationalFn<F::Elem>) -> RationalFn<F::Elem> {
        self.rat_sub(&self.rat_frobenius(z), z)
    }
}
