use super::{Poly, PolyRing, RationalFn};
use crate::error::{Error, Result};
use crate::field::Field;

/// Why a rational function fails the admissibility normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonAdmissible<T> {
    /// `deg num > deg den`: the polynomial part is not constant.
    PoleAtInfinity { degree: usize },
    /// A principal part has a nonzero coefficient at an index divisible by `p`.
    PDivisibleCoefficient { factor: Poly<T>, index: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Admissibility<T> {
    Admissible,
    NotAdmissible(NonAdmissible<T>),
}

impl<T> Admissibility<T> {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Admissibility::Admissible)
    }
}

/// Result of [`PolyRing::normalize_to_admissible`]: `original - function = delta^p - delta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized<T> {
    pub function: RationalFn<T>,
    pub delta: RationalFn<T>,
}

impl<F: Field> PolyRing<F> {
    pub fn admissibility(&self, f: &RationalFn<F::Elem>) -> Admissibility<F::Elem> {
        if f.num().degree() > f.den().degree() {
            return Admissibility::NotAdmissible(NonAdmissible::PoleAtInfinity {
                degree: f.num().degree().unwrap() - f.den().degree().unwrap(),
            });
        }
        let p = self.field().characteristic() as usize;
        for part in self.principal_parts(f).parts {
            let e = &part.pole_field;
            // principal parts start at index 1, so there is never a constant term
            let bad = (1..=part.order() / p)
                .rev()
                .map(|k| k * p)
                .find(|&i| !e.is_zero(&part.coeffs[i - 1]));
            if let Some(index) = bad {
                return Admissibility::NotAdmissible(NonAdmissible::PDivisibleCoefficient {
                    factor: part.factor,
                    index,
                });
            }
        }
        Admissibility::Admissible
    }

    pub fn is_admissible(&self, f: &RationalFn<F::Elem>) -> bool {
        self.admissibility(f).is_admissible()
    }

    /// Removes every `p`-divisible index from every principal part (and from
    /// the polynomial part) by subtracting `delta^p - delta`.
    ///
    /// Within one orbit the indices are cleared from the highest down: taking
    /// `b = c_{pk}^(1/p)` and `z = sum of conjugates of b (x - alpha)^(-k)`, the
    /// subtraction of `z^p - z` kills index `pk` and adds `b` at index `k < pk`.
    pub fn normalize_to_admissible(
        &self,
        f: &RationalFn<F::Elem>,
    ) -> Result<Normalized<F::Elem>> {
        let k = self.field();
        let p = k.characteristic() as usize;
        let pf = self.principal_parts(f);
        let mut delta = self.rat_zero();

        for part in &pf.parts {
            let e = &part.pole_field;
            let mut coeffs = part.coeffs.clone();
            let mut witness = vec![e.zero(); part.order() / p];
            for i in (1..=part.order() / p).rev().map(|k| k * p) {
                let c = coeffs[i - 1].clone();
                if e.is_zero(&c) {
                    continue;
                }
                let b = e.pth_root(&c);
                let j = i / p;
                coeffs[i - 1] = e.zero();
                coeffs[j - 1] = e.add(&coeffs[j - 1], &b);
                witness[j - 1] = e.add(&witness[j - 1], &b);
            }
            delta = self.rat_add(&delta, &self.conjugate_sum(e, &witness));
        }

        let mut poly = pf.polynomial_part.coeffs().to_vec();
        let mut poly_witness = vec![k.zero(); poly.len() / p + 1];
        while let Some(top) = poly.len().checked_sub(1).filter(|&t| t >= 1) {
            if k.is_zero(&poly[top]) {
                poly.pop();
                continue;
            }
            if top % p != 0 {
                return Err(Error::RamifiedAtInfinity { order: top });
            }
            let b = k.pth_root(&poly[top]);
            poly.pop();
            // subtracting (b x^j)^p - b x^j removes x^(pj) and adds b x^j
            poly[top / p] = k.add(&poly[top / p], &b);
            poly_witness[top / p] = k.add(&poly_witness[top / p], &b);
        }
        delta = self.rat_add(&delta, &self.rational_from_poly(self.poly(poly_witness)));

        let function = self.rat_sub(f, &self.artin_schreier(&delta));
        debug_assert!(self.is_admissible(&function));
        if function.den().degree() == Some(0) && function.num().degree() <= Some(0) {
            let c = function.num().coeff(0).cloned().unwrap_or_else(|| k.zero());
            if k.is_zero(&k.absolute_trace(&c)) {
                return Err(Error::IsArtinSchreierTrivial);
            }
        }
        Ok(Normalized { function, delta })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{field_make, FieldElement, FieldSpec};
    use proptest::prelude::*;

    fn ring(p: u64, n: u32) -> PolyRing<FieldSpec> {
        PolyRing::new(field_make(p, n).unwrap())
    }

    fn ints(r: &PolyRing<FieldSpec>, v: &[u64]) -> Poly<FieldElement> {
        r.poly(v.iter().map(|&c| r.field().element_at(c)).collect())
    }

    #[test]
    fn admissibility_examples() {
        let r = ring(2, 1);
        let inv_x = r.rational(r.one(), r.x()).unwrap();
        assert!(r.is_admissible(&inv_x));
        let inv_x2 = r.rational(r.one(), ints(&r, &[0, 0, 1])).unwrap();
        assert_eq!(
            r.admissibility(&inv_x2),
            Admissibility::NotAdmissible(NonAdmissible::PDivisibleCoefficient {
                factor: r.x(),
                index: 2
            })
        );
        let x3 = r.rational_from_poly(ints(&r, &[0, 0, 0, 1]));
        assert_eq!(
            r.admissibility(&x3),
            Admissibility::NotAdmissible(NonAdmissible::PoleAtInfinity { degree: 3 })
        );
    }

    #[test]
    fn admissible_input_is_fixed() {
        let r = ring(3, 1);
        let f = r.rational(ints(&r, &[1, 2]), ints(&r, &[0, 0, 1])).unwrap();
        assert!(r.is_admissible(&f));
        let n = r.normalize_to_admissible(&f).unwrap();
        assert_eq!(n.function, f);
        assert!(n.delta.is_zero());
    }

    #[test]
    fn inverse_square_over_f2() {
        let r = ring(2, 1);
        let f = r.rational(r.one(), ints(&r, &[0, 0, 1])).unwrap();
        let n = r.normalize_to_admissible(&f).unwrap();
        let inv_x = r.rational(r.one(), r.x()).unwrap();
        assert_eq!(n.function, inv_x);
        assert_eq!(n.delta, inv_x);
        // Oracle: (1/x)^2 - 1/x + 1/x = 1/x^2 by direct rational arithmetic.
        let lhs = r.rat_sub(&f, &n.function);
        let rhs = r.rat_sub(&r.rat_mul(&inv_x, &inv_x), &inv_x);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn x_to_the_p_stays_ramified() {
        for p in [2u64, 3, 5] {
            let r = ring(p, 1);
            let f = r.rational_from_poly(r.monomial(r.field().one(), p as usize));
            assert_eq!(
                r.normalize_to_admissible(&f).unwrap_err(),
                Error::RamifiedAtInfinity { order: 1 }
            );
        }
    }

    #[test]
    fn artin_schreier_trivial_inputs() {
        let r = ring(3, 2);
        let z = r.rational(ints(&r, &[4, 1]), ints(&r, &[2, 5, 1])).unwrap();
        let f = r.artin_schreier(&z);
        assert_eq!(r.normalize_to_admissible(&f).unwrap_err(), Error::IsArtinSchreierTrivial);
        assert_eq!(r.normalize_to_admissible(&r.rat_zero()).unwrap_err(), Error::IsArtinSchreierTrivial);
    }

    #[test]
    fn conjugate_orbit_normalization() {
        // 1/(x^2+x+1)^2 over F_2: the p-divisible index lives in F_4.
        let r = ring(2, 1);
        let pi = ints(&r, &[1, 1, 1]);
        let f = r.rational(r.one(), r.pow(&pi, 2)).unwrap();
        assert!(!r.is_admissible(&f));
        let n = r.normalize_to_admissible(&f).unwrap();
        assert!(r.is_admissible(&n.function));
        assert_eq!(r.rat_sub(&f, &n.function), r.artin_schreier(&n.delta));
        assert_eq!(n.function.den(), &pi);
    }

    fn rational_strategy() -> impl Strategy<Value = (u64, u32, Vec<u64>, Vec<u64>, usize, u64)> {
        prop_oneof![Just((2u64, 1u32)), Just((2, 2)), Just((3, 1)), Just((3, 2)), Just((5, 1))]
            .prop_flat_map(|(p, n)| {
                let q = p.pow(n);
                (
                    Just(p),
                    Just(n),
                    prop::collection::vec(0..q, 0..10),
                    prop::collection::vec(0..q, 1..3),
                    1usize..(2 * p as usize + 1),
                    1..p,
                )
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn normalization_identities((p, n, num, low, m, u) in rational_strategy()) {
            let r = ring(p, n);
            let mut v = low.clone();
            v.push(1);
            let den = r.pow(&ints(&r, &v), m as u64);
            let f = r.rational(ints(&r, &num), den).unwrap();
            match r.normalize_to_admissible(&f) {
                Ok(norm) => {
                    prop_assert!(r.is_admissible(&norm.function));
                    prop_assert_eq!(r.rat_sub(&f, &norm.function), r.artin_schreier(&norm.delta));
                    let again = r.normalize_to_admissible(&norm.function).unwrap();
                    prop_assert_eq!(&again.function, &norm.function);
                    prop_assert!(again.delta.is_zero());
                    let scaled = r.rat_scale(&norm.function, &r.field().from_u64(u));
                    prop_assert!(r.is_admissible(&scaled));
                }
                Err(Error::RamifiedAtInfinity { order }) => prop_assert!(order % p as usize != 0),
                Err(Error::IsArtinSchreierTrivial) => {}
                Err(e) => prop_assert!(false, "unexpected error {e}"),
            }
        }
    }
}
