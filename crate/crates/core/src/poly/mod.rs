//! Dense univariate polynomials and rational functions over a [`Field`].

mod admissible;
mod factor;
mod partial_fraction;
mod rational;
mod squarefree;
mod text;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::field::Field;

pub use admissible::{Admissibility, NonAdmissible, Normalized};
pub use factor::{necklace_count, Factorization};
pub use partial_fraction::{PartialFractions, PrincipalPart};
pub use rational::RationalFn;
pub use squarefree::SquarefreeDecomp;
pub use text::{format_poly, format_rational, parse_poly, parse_rational};

/// Dense coefficients, constant term first, never with trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Eq> Poly<T> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// Builds a polynomial from raw coefficients, trimming trailing zeros.
    pub fn from_vec<F: Field<Elem = T>>(ring: &PolyRing<F>, mut coeffs: Vec<T>) -> Self {
        let k = ring.field();
        while coeffs.last().is_some_and(|c| k.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&T> {
        self.coeffs.get(i)
    }

    /// `None` for the zero polynomial, which sorts below every real degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }
}

/// Polynomial arithmetic over a fixed field `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing<F: Field> {
    field: F,
}

type P<F> = Poly<<F as Field>::Elem>;

impl<F: Field> PolyRing<F> {
    pub fn new(field: F) -> Self {
        PolyRing { field }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn poly(&self, coeffs: Vec<F::Elem>) -> P<F> {
        Poly::from_vec(self, coeffs)
    }

    pub fn one(&self) -> P<F> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> P<F> {
        self.poly(vec![c])
    }

    pub fn x(&self) -> P<F> {
        self.monomial(self.field.one(), 1)
    }

    pub fn monomial(&self, c: F::Elem, k: usize) -> P<F> {
        let mut v = vec![self.field.zero(); k + 1];
        v[k] = c;
        self.poly(v)
    }

    /// `x - a`
    pub fn linear(&self, a: &F::Elem) -> P<F> {
        self.poly(vec![self.field.neg(a), self.field.one()])
    }

    pub fn is_monic(&self, a: &P<F>) -> bool {
        a.leading().is_some_and(|c| self.field.is_one(c))
    }

    pub fn is_one(&self, a: &P<F>) -> bool {
        a.degree() == Some(0) && self.field.is_one(&a.coeffs[0])
    }

    pub fn add(&self, a: &P<F>, b: &P<F>) -> P<F> {
        let k = &self.field;
        let n = a.coeffs.len().max(b.coeffs.len());
        let zero = k.zero();
        let v = (0..n)
            .map(|i| {
                k.add(
                    a.coeffs.get(i).unwrap_or(&zero),
                    b.coeffs.get(i).unwrap_or(&zero),
                )
            })
            .collect();
        self.poly(v)
    }

    pub fn neg(&self, a: &P<F>) -> P<F> {
        Poly {
            coeffs: a.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        }
    }

    pub fn sub(&self, a: &P<F>, b: &P<F>) -> P<F> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &P<F>, c: &F::Elem) -> P<F> {
        self.poly(a.coeffs.iter().map(|x| self.field.mul(x, c)).collect())
    }

    pub fn mul(&self, a: &P<F>, b: &P<F>) -> P<F> {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let k = &self.field;
        let mut v = vec![k.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if k.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                v[i + j] = k.add(&v[i + j], &k.mul(x, y));
            }
        }
        self.poly(v)
    }

    pub fn pow(&self, a: &P<F>, mut e: u64) -> P<F> {
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

    /// Euclidean division: `a = quo * b + rem` with `deg rem < deg b`.
    pub fn divmod(&self, a: &P<F>, b: &P<F>) -> Result<(P<F>, P<F>)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let k = &self.field;
        let lead_inv = k.inv(b.leading().expect("nonzero"))?;
        let mut rem = a.coeffs.clone();
        let Some(da) = a.degree().filter(|&da| da >= db) else {
            return Ok((Poly::zero(), a.clone()));
        };
        let mut quo = vec![k.zero(); da - db + 1];
        for i in (db..=da).rev() {
            let c = k.mul(&rem[i], &lead_inv);
            if k.is_zero(&c) {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                let t = k.mul(&c, bj);
                rem[i - db + j] = k.sub(&rem[i - db + j], &t);
            }
            quo[i - db] = c;
        }
        rem.truncate(db);
        Ok((self.poly(quo), self.poly(rem)))
    }

    pub fn rem(&self, a: &P<F>, b: &P<F>) -> Result<P<F>> {
        Ok(self.divmod(a, b)?.1)
    }

    /// Exact quotient; panics in debug builds when `b` does not divide `a`.
    pub fn div_exact(&self, a: &P<F>, b: &P<F>) -> Result<P<F>> {
        let (q, r) = self.divmod(a, b)?;
        debug_assert!(r.is_zero(), "inexact division");
        Ok(q)
    }

    pub fn divides(&self, b: &P<F>, a: &P<F>) -> bool {
        self.rem(a, b).is_ok_and(|r| r.is_zero())
    }

    /// Returns `(lc, a / lc)`; the zero polynomial maps to `(0, 0)`.
    pub fn make_monic(&self, a: &P<F>) -> (F::Elem, P<F>) {
        match a.leading() {
            None => (self.field.zero(), Poly::zero()),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("leading coefficient is nonzero");
                (lc.clone(), self.scale(a, &inv))
            }
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, a: &P<F>, b: &P<F>) -> P<F> {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.rem(&x, &y).expect("y is nonzero");
            x = std::mem::replace(&mut y, r);
        }
        self.make_monic(&x).1
    }

    /// Extended gcd: `(g, s, t)` with `s a + t b = g` and `g` monic (or zero).
    pub fn xgcd(&self, a: &P<F>, b: &P<F>) -> (P<F>, P<F>, P<F>) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.divmod(&r0, &r1).expect("r1 is nonzero");
            r0 = std::mem::replace(&mut r1, r);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = self.sub(&t0, &self.mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("nonzero");
                (
                    self.scale(&r0, &inv),
                    self.scale(&s0, &inv),
                    self.scale(&t0, &inv),
                )
            }
        }
    }

    pub fn derivative(&self, a: &P<F>) -> P<F> {
        let k = &self.field;
        let v = a
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| k.mul(&k.from_u64(i as u64), c))
            .collect();
        self.poly(v)
    }

    pub fn eval(&self, a: &P<F>, x: &F::Elem) -> F::Elem {
        let k = &self.field;
        a.coeffs
            .iter()
            .rev()
            .fold(k.zero(), |acc, c| k.add(&k.mul(&acc, x), c))
    }

    /// `a^e mod m`.
    pub fn pow_mod(&self, a: &P<F>, e: &BigUint, m: &P<F>) -> Result<P<F>> {
        let mut acc = self.rem(&self.one(), m)?;
        let base = self.rem(a, m)?;
        for i in (0..e.bits()).rev() {
            acc = self.rem(&self.mul(&acc, &acc), m)?;
            if e.bit(i) {
                acc = self.rem(&self.mul(&acc, &base), m)?;
            }
        }
        Ok(acc)
    }

    /// Irreducibility via `gcd(x^(q^i) - x, a) = 1` for `1 <= i <= deg a / 2`.
    pub fn is_irreducible(&self, a: &P<F>) -> bool {
        let Some(n) = a.degree() else { return false };
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let q = self.field.order();
        let x = self.x();
        let mut frob = self.rem(&x, a).expect("nonzero");
        for _ in 1..=n / 2 {
            frob = self.pow_mod(&frob, &q, a).expect("nonzero");
            let g = self.gcd(&self.sub(&frob, &x), a);
            if !self.is_one(&g) {
                return false;
            }
        }
        true
    }

    pub fn is_squarefree(&self, a: &P<F>) -> bool {
        match a.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.is_one(&self.gcd(a, &self.derivative(a))),
        }
    }

    /// For `a` with vanishing derivative, the unique `b` with `b^p = a`.
    pub fn pth_root(&self, a: &P<F>) -> P<F> {
        let k = &self.field;
        let p = k.characteristic() as usize;
        debug_assert!(self.derivative(a).is_zero());
        let v = a
            .coeffs
            .iter()
            .step_by(p)
            .map(|c| k.pth_root(c))
            .collect();
        self.poly(v)
    }

    /// Substitutes `x -> x + c` (Taylor shift).
    pub fn shift(&self, a: &P<F>, c: &F::Elem) -> P<F> {
        let lin = self.poly(vec![c.clone(), self.field.one()]);
        a.coeffs.iter().rev().fold(Poly::zero(), |acc, coef| {
            self.add(&self.mul(&acc, &lin), &self.constant(coef.clone()))
        })
    }

    /// Maps coefficients into an extension ring through `embed`.
    pub fn lift<G: Field>(
        &self,
        target: &PolyRing<G>,
        a: &P<F>,
        embed: impl Fn(&F::Elem) -> G::Elem,
    ) -> P<G> {
        target.poly(a.coeffs.iter().map(embed).collect())
    }

    /// Number of monic polynomials of degree `n`, i.e. `q^n`.
    pub fn monic_count(&self, n: usize) -> BigUint {
        self.field.order().pow(n as u32)
    }

    /// All monic polynomials of degree `n`, ordered by their lower coefficients
    /// read as base-`q` digits with the constant term least significant.
    pub fn monic_polys(&self, n: usize, cap: u64) -> Result<Vec<P<F>>> {
        let count = self.monic_count(n);
        if count > BigUint::from(cap) {
            return Err(Error::budget(format!("monic polynomials of degree {n}"), count, cap));
        }
        let elems = self.field.elements(cap)?;
        let q = elems.len();
        let total: usize = count.try_into().expect("bounded by cap");
        let mut out = Vec::with_capacity(total);
        let mut digits = vec![0usize; n];
        for _ in 0..total {
            let mut v: Vec<F::Elem> = digits.iter().map(|&d| elems[d].clone()).collect();
            v.push(self.field.one());
            out.push(Poly { coeffs: v });
            for d in digits.iter_mut() {
                *d += 1;
                if *d < q {
                    break;
                }
                *d = 0;
            }
        }
        Ok(out)
    }
}

/// `q^n` as an exact integer.
pub fn big_pow(q: u64, n: u32) -> BigUint {
    BigUint::from(q).pow(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{field_make, FieldSpec};
    use proptest::prelude::*;

    fn ring(p: u64, n: u32) -> PolyRing<FieldSpec> {
        PolyRing::new(field_make(p, n).unwrap())
    }

    fn ints(r: &PolyRing<FieldSpec>, v: &[u64]) -> Poly<crate::field::FieldElement> {
        r.poly(v.iter().map(|&c| r.field().element_at(c)).collect())
    }

    #[test]
    fn zero_degree_sorts_first() {
        let r = ring(3, 1);
        assert_eq!(Poly::<crate::field::FieldElement>::zero().degree(), None);
        assert!(Poly::<crate::field::FieldElement>::zero().degree() < r.one().degree());
        assert_eq!(ints(&r, &[1, 2, 0, 0]).degree(), Some(1));
    }

    #[test]
    fn gcd_of_shared_root() {
        let r = ring(3, 1);
        let a = ints(&r, &[2, 0, 1]); // x^2 - 1
        let b = ints(&r, &[2, 1]); // x - 1
        assert_eq!(r.gcd(&a, &b), ints(&r, &[2, 1]));
    }

    #[test]
    fn derivative_kills_pth_powers() {
        for p in [2u64, 3, 5, 7] {
            let r = ring(p, 1);
            let xp = r.monomial(r.field().one(), p as usize);
            assert!(r.derivative(&xp).is_zero());
        }
    }

    #[test]
    fn irreducibility() {
        let r = ring(2, 1);
        // Oracle: a quadratic is irreducible iff it has no root.
        assert!(r.is_irreducible(&ints(&r, &[1, 1, 1])));
        assert!(!r.is_irreducible(&ints(&r, &[1, 0, 1])));
        assert!(!r.is_irreducible(&ints(&r, &[1])));
        assert!(!r.is_irreducible(&Poly::zero()));
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2 has no roots but is reducible.
        assert!(!r.is_irreducible(&ints(&r, &[1, 0, 1, 0, 1])));
        assert!(r.is_irreducible(&ints(&r, &[1, 1, 0, 0, 1])));
    }

    #[test]
    fn division_by_zero_polynomial() {
        let r = ring(5, 1);
        assert_eq!(r.divmod(&r.x(), &Poly::zero()).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn monic_enumeration_counts() {
        let r = ring(2, 2);
        let all = r.monic_polys(2, 1 << 10).unwrap();
        assert_eq!(all.len(), 16);
        let set: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(set.len(), 16);
        assert!(matches!(r.monic_polys(6, 100), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn shift_matches_evaluation() {
        let r = ring(5, 1);
        let a = ints(&r, &[3, 1, 4, 1, 2]);
        let c = r.field().element_at(2);
        let s = r.shift(&a, &c);
        for x in r.field().elements(10).unwrap() {
            assert_eq!(r.eval(&s, &x), r.eval(&a, &r.field().add(&x, &c)));
        }
    }

    fn poly_strategy() -> impl Strategy<Value = (u64, u32, Vec<u64>, Vec<u64>)> {
        prop_oneof![Just((2u64, 1u32)), Just((2, 2)), Just((3, 1)), Just((5, 1)), Just((3, 2))]
            .prop_flat_map(|(p, n)| {
                let q = p.pow(n);
                (
                    Just(p),
                    Just(n),
                    prop::collection::vec(0..q, 0..7),
                    prop::collection::vec(0..q, 1..6),
                )
            })
    }

    proptest! {
        #[test]
        fn divmod_and_xgcd((p, n, a, b) in poly_strategy()) {
            let r = ring(p, n);
            let a = ints(&r, &a);
            let b = ints(&r, &b);
            prop_assume!(!b.is_zero());
            let (q, rem) = r.divmod(&a, &b).unwrap();
            prop_assert!(rem.degree() < b.degree());
            prop_assert_eq!(r.add(&r.mul(&q, &b), &rem), a.clone());
            let (g, s, t) = r.xgcd(&a, &b);
            prop_assert_eq!(r.add(&r.mul(&s, &a), &r.mul(&t, &b)), g.clone());
            prop_assert_eq!(g.clone(), r.gcd(&a, &b));
            prop_assert!(r.divides(&g, &a) && r.divides(&g, &b));
        }
    }
}
