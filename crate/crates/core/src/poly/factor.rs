use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use super::{Poly, PolyRing};
use crate::error::{Error, Result};
use crate::field::Field;

/// Monic irreducible factors with multiplicities, in the order they were found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<T> {
    pub unit: T,
    pub factors: Vec<(Poly<T>, usize)>,
}

/// Number of monic irreducibles of degree `e` over `F_q`:
/// `(1/e) sum_{m | e} mu(m) q^(e/m)`.
pub fn necklace_count(q: &BigUint, e: usize) -> BigUint {
    assert!(e >= 1);
    let mut acc = BigInt::zero();
    for m in (1..=e).filter(|m| e % m == 0) {
        let mu = mobius(m);
        if mu == 0 {
            continue;
        }
        let term = BigInt::from(q.pow((e / m) as u32));
        acc += if mu > 0 { term } else { -term };
    }
    debug_assert!(!acc.is_negative());
    (acc / BigInt::from(e)).to_biguint().expect("nonnegative")
}

fn mobius(mut n: usize) -> i32 {
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

impl<F: Field> PolyRing<F> {
    /// All monic irreducibles of degree `1..=max_degree`, grouped by degree and
    /// ordered within a degree as in [`PolyRing::monic_polys`].
    pub fn irreducibles_up_to(&self, max_degree: usize, cap: u64) -> Result<Vec<Poly<F::Elem>>> {
        let needed = self.monic_count(max_degree);
        if needed > BigUint::from(cap) {
            return Err(Error::budget(
                format!("irreducible table up to degree {max_degree}"),
                needed,
                cap,
            ));
        }
        let mut out = Vec::new();
        for e in 1..=max_degree {
            out.extend(
                self.monic_polys(e, cap)?
                    .into_iter()
                    .filter(|f| self.is_irreducible(f)),
            );
        }
        Ok(out)
    }

    /// Complete factorization by squarefree decomposition, distinct-degree
    /// splitting, then trial division by monic candidates of the right degree.
    pub fn factor(&self, a: &Poly<F::Elem>) -> Result<Factorization<F::Elem>> {
        let (unit, monic) = self.make_monic(a);
        if monic.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut factors = Vec::new();
        let sfd = self.squarefree_decompose(&monic)?;
        for (&m, part) in &sfd.parts {
            for (e, block) in self.distinct_degree(part)? {
                for pi in self.split_equal_degree(&block, e)? {
                    factors.push((pi, m));
                }
            }
        }
        factors.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()));
        Ok(Factorization { unit, factors })
    }

    /// For squarefree monic `a`, pairs `(e, product of all degree-e factors)`.
    fn distinct_degree(&self, a: &Poly<F::Elem>) -> Result<Vec<(usize, Poly<F::Elem>)>> {
        let q = self.field().order();
        let x = self.x();
        let mut rest = a.clone();
        let mut frob = x.clone();
        let mut out = Vec::new();
        let mut e = 0;
        while rest.degree().unwrap_or(0) > 0 {
            e += 1;
            if rest.degree().unwrap() < 2 * e {
                let d = rest.degree().unwrap();
                out.push((d, rest));
                break;
            }
            frob = self.pow_mod(&frob, &q, &rest)?;
            let g = self.gcd(&self.sub(&frob, &x), &rest);
            if !self.is_one(&g) {
                rest = self.div_exact(&rest, &g)?;
                frob = self.rem(&frob, &rest)?;
                out.push((e, g));
            }
        }
        Ok(out)
    }

    fn split_equal_degree(&self, block: &Poly<F::Elem>, e: usize) -> Result<Vec<Poly<F::Elem>>> {
        let n = block.degree().expect("nonzero");
        if n == e {
            return Ok(vec![block.clone()]);
        }
        let mut rest = block.clone();
        let mut out = Vec::new();
        for cand in self.monic_polys(e, u64::MAX)? {
            if rest.degree() == Some(e) {
                break;
            }
            if self.divides(&cand, &rest) {
                rest = self.div_exact(&rest, &cand)?;
                out.push(cand);
            }
        }
        if rest.degree() == Some(e) {
            out.push(rest);
        }
        debug_assert_eq!(out.len(), n / e);
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{field_make, FieldElement, FieldSpec};

    fn ring(p: u64, n: u32) -> PolyRing<FieldSpec> {
        PolyRing::new(field_make(p, n).unwrap())
    }

    fn ints(r: &PolyRing<FieldSpec>, v: &[u64]) -> Poly<FieldElement> {
        r.poly(v.iter().map(|&c| r.field().element_at(c)).collect())
    }

    #[test]
    fn small_tables() {
        let r = ring(2, 1);
        assert_eq!(
            r.irreducibles_up_to(1, 1 << 10).unwrap(),
            vec![r.x(), ints(&r, &[1, 1])]
        );
        let two = r.irreducibles_up_to(2, 1 << 10).unwrap();
        assert_eq!(two.len(), 3);
        assert_eq!(two[2], ints(&r, &[1, 1, 1]));
        let r3 = ring(3, 1);
        assert_eq!(
            r3.irreducibles_up_to(1, 1 << 10).unwrap(),
            vec![r3.x(), ints(&r3, &[1, 1]), ints(&r3, &[2, 1])]
        );
    }

    #[test]
    fn table_respects_cap() {
        let r = ring(3, 1);
        assert!(matches!(
            r.irreducibles_up_to(5, 100),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn counts_match_necklace_formula() {
        for (p, n, dmax) in [(2u64, 1u32, 6usize), (3, 1, 4), (2, 2, 3), (5, 1, 3), (3, 2, 2)] {
            let r = ring(p, n);
            let table = r.irreducibles_up_to(dmax, 1 << 16).unwrap();
            let q = r.field().order();
            for e in 1..=dmax {
                let got = table.iter().filter(|f| f.degree() == Some(e)).count();
                assert_eq!(BigUint::from(got), necklace_count(&q, e), "q={q} e={e}");
            }
            let set: std::collections::HashSet<_> = table.iter().collect();
            assert_eq!(set.len(), table.len());
        }
    }

    #[test]
    fn necklace_values() {
        let q = BigUint::from(2u32);
        let got: Vec<_> = (1..=6).map(|e| necklace_count(&q, e)).collect();
        let want: Vec<BigUint> = [2u32, 1, 2, 3, 6, 9].into_iter().map(BigUint::from).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn factors_reconstruct() {
        let r = ring(2, 1);
        // x^3 (x+1)^2 (x^2+x+1)^2 (x^3+x+1)(x^3+x^2+1)
        let parts = [
            (r.x(), 3usize),
            (ints(&r, &[1, 1]), 2),
            (ints(&r, &[1, 1, 1]), 2),
            (ints(&r, &[1, 1, 0, 1]), 1),
            (ints(&r, &[1, 0, 1, 1]), 1),
        ];
        let f = parts
            .iter()
            .fold(r.one(), |acc, (g, m)| r.mul(&acc, &r.pow(g, *m as u64)));
        let fac = r.factor(&f).unwrap();
        let mut got = fac.factors.clone();
        let mut want = parts.to_vec();
        got.sort_by_key(|(g, m)| (g.coeffs().to_vec(), *m));
        want.sort_by_key(|(g, m)| (g.coeffs().to_vec(), *m));
        assert_eq!(got, want);
    }
}
