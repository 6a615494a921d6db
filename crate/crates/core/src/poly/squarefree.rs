use std::collections::BTreeMap;

use super::{Poly, PolyRing};
use crate::error::{Error, Result};
use crate::field::Field;

/// `g = prod_j parts[j]^j` with each part monic, squarefree and the parts
/// pairwise coprime. Only multiplicities with a nontrivial part are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomp<T> {
    pub parts: BTreeMap<usize, Poly<T>>,
}

impl<F: Field> PolyRing<F> {
    /// Squarefree decomposition in characteristic `p`.
    ///
    /// The part of `g` whose multiplicities are prime to `p` is peeled off with
    /// repeated gcds against the derivative; what is left is a `p`-th power,
    /// whose root is decomposed recursively and its multiplicities scaled by `p`.
    pub fn squarefree_decompose(&self, g: &Poly<F::Elem>) -> Result<SquarefreeDecomp<F::Elem>> {
        if !self.is_monic(g) {
            return Err(Error::NotMonic);
        }
        let mut parts = BTreeMap::new();
        self.sfd_into(g, 1, &mut parts);
        Ok(SquarefreeDecomp { parts })
    }

    fn sfd_into(&self, g: &Poly<F::Elem>, scale: usize, parts: &mut BTreeMap<usize, Poly<F::Elem>>) {
        if g.degree().unwrap_or(0) == 0 {
            return;
        }
        let p = self.field().characteristic() as usize;
        let mut c = self.gcd(g, &self.derivative(g));
        let mut w = self.div_exact(g, &c).expect("gcd is nonzero");
        let mut i = 1usize;
        while !self.is_one(&w) {
            let y = self.gcd(&w, &c);
            let z = self.div_exact(&w, &y).expect("nonzero");
            if !self.is_one(&z) {
                self.push_part(parts, i * scale, z);
            }
            i += 1;
            c = self.div_exact(&c, &y).expect("nonzero");
            w = y;
        }
        if !self.is_one(&c) {
            let root = self.pth_root(&c);
            self.sfd_into(&root, scale * p, parts);
        }
    }

    fn push_part(&self, parts: &mut BTreeMap<usize, Poly<F::Elem>>, m: usize, z: Poly<F::Elem>) {
        let merged = match parts.remove(&m) {
            Some(prev) => self.mul(&prev, &z),
            None => z,
        };
        parts.insert(m, merged);
    }

    pub fn reconstruct(&self, d: &SquarefreeDecomp<F::Elem>) -> Poly<F::Elem> {
        d.parts
            .iter()
            .fold(self.one(), |acc, (&j, g)| self.mul(&acc, &self.pow(g, j as u64)))
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
    fn reads_off_exponents() {
        let r = ring(5, 1);
        let g = ints(&r, &[0, 0, 1, 1]); // x^2 (x + 1)
        let d = r.squarefree_decompose(&g).unwrap();
        assert_eq!(d.parts.len(), 2);
        assert_eq!(d.parts[&1], ints(&r, &[1, 1]));
        assert_eq!(d.parts[&2], r.x());
    }

    #[test]
    fn pth_power_input() {
        let r = ring(2, 1);
        let g = ints(&r, &[0, 0, 1]); // x^2, derivative vanishes
        assert!(r.derivative(&g).is_zero());
        let d = r.squarefree_decompose(&g).unwrap();
        assert_eq!(d.parts.len(), 1);
        assert_eq!(d.parts[&2], r.x());
        assert_eq!(r.reconstruct(&d), g);
    }

    #[test]
    fn squarefree_input_is_its_own_part() {
        let r = ring(3, 1);
        let g = ints(&r, &[1, 0, 1]); // x^2 + 1, irreducible over F_3
        let d = r.squarefree_decompose(&g).unwrap();
        assert_eq!(d.parts.len(), 1);
        assert_eq!(d.parts[&1], g);
    }

    #[test]
    fn mixed_multiplicities_in_char_3() {
        let r = ring(3, 1);
        // (x+1)^3 (x+2)^6 x^4 : multiplicities divisible and not divisible by p
        let f = r.mul(
            &r.pow(&ints(&r, &[1, 1]), 3),
            &r.mul(&r.pow(&ints(&r, &[2, 1]), 6), &r.pow(&r.x(), 4)),
        );
        let d = r.squarefree_decompose(&f).unwrap();
        assert_eq!(d.parts[&3], ints(&r, &[1, 1]));
        assert_eq!(d.parts[&6], ints(&r, &[2, 1]));
        assert_eq!(d.parts[&4], r.x());
        assert_eq!(r.reconstruct(&d), f);
    }

    #[test]
    fn non_monic_rejected() {
        let r = ring(3, 1);
        assert_eq!(
            r.squarefree_decompose(&ints(&r, &[1, 2])).unwrap_err(),
            Error::NotMonic
        );
    }

    fn factors_strategy() -> impl Strategy<Value = (u64, u32, Vec<(Vec<u64>, usize)>)> {
        prop_oneof![Just((2u64, 1u32)), Just((2, 2)), Just((3, 1)), Just((5, 1))].prop_flat_map(
            |(p, n)| {
                let q = p.pow(n);
                let factor = (prop::collection::vec(0..q, 1..3), 1usize..(2 * p as usize + 2));
                (Just(p), Just(n), prop::collection::vec(factor, 1..4))
            },
        )
    }

    proptest! {
        #[test]
        fn decomposition_reconstructs((p, n, factors) in factors_strategy()) {
            let r = ring(p, n);
            let mut g = r.one();
            for (low, m) in &factors {
                let mut v = low.clone();
                v.push(1);
                g = r.mul(&g, &r.pow(&ints(&r, &v), *m as u64));
            }
            let d = r.squarefree_decompose(&g).unwrap();
            prop_assert_eq!(r.reconstruct(&d), g);
            let parts: Vec<_> = d.parts.values().cloned().collect();
            for (i, a) in parts.iter().enumerate() {
                prop_assert!(r.is_monic(a));
                prop_assert!(r.is_squarefree(a));
                for b in &parts[i + 1..] {
                    prop_assert!(r.is_one(&r.gcd(a, b)));
                }
            }
        }
    }
}
