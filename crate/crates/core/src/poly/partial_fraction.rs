use super::{Poly, PolyRing, RationalFn};
use crate::field::{Field, ResidueField};

/// Principal part of a rational function at one Galois orbit of poles.
///
/// The orbit is the root set of the irreducible `factor`; `pole` is the class
/// of `t` in `F[t]/(factor)` and `coeffs[i - 1]` is the coefficient of
/// `(x - pole)^(-i)`. The other poles of the orbit carry the conjugate data.
#[derive(Clone, Debug)]
pub struct PrincipalPart<F: Field> {
    pub pole_field: ResidueField<F>,
    pub factor: Poly<F::Elem>,
    pub pole: Vec<F::Elem>,
    pub coeffs: Vec<Vec<F::Elem>>,
}

impl<F: Field> PrincipalPart<F> {
    /// Pole order `d_alpha`, shared by every pole in the orbit.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Number of conjugate poles, `deg factor`.
    pub fn orbit_size(&self) -> usize {
        self.pole_field.degree()
    }

    /// `c_i` for `1 <= i <= order`.
    pub fn coeff(&self, i: usize) -> &[F::Elem] {
        &self.coeffs[i - 1]
    }
}

/// `f = polynomial_part + sum over orbits of the conjugate principal parts`.
#[derive(Clone, Debug)]
pub struct PartialFractions<F: Field> {
    pub polynomial_part: Poly<F::Elem>,
    pub parts: Vec<PrincipalPart<F>>,
}

impl<F: Field> PolyRing<F> {
    /// Partial fraction decomposition, one residue-field computation per
    /// irreducible factor of the denominator.
    pub fn principal_parts(&self, f: &RationalFn<F::Elem>) -> PartialFractions<F> {
        let (polynomial_part, _) = self
            .divmod(f.num(), f.den())
            .expect("denominator is nonzero");
        let fac = self.factor(f.den()).expect("denominator is monic and nonzero");
        let parts = fac
            .factors
            .into_iter()
            .map(|(pi, m)| {
                let pole_field =
                    ResidueField::new(self.field().clone(), pi.clone()).expect("monic irreducible");
                let pole = pole_field.root();
                let coeffs = self.laurent_principal(&pole_field, &pole, f);
                debug_assert_eq!(coeffs.len(), m);
                PrincipalPart {
                    pole_field,
                    factor: pi,
                    pole,
                    coeffs,
                }
            })
            .collect();
        PartialFractions {
            polynomial_part,
            parts,
        }
    }

    /// Principal part `c_1 .. c_m` of `f` at a point `beta` of an extension
    /// field, `m` being the pole order there (empty when `beta` is not a pole).
    ///
    /// Shifts `x -> u + beta`, strips `u^m` from the denominator and inverts
    /// the remaining unit as a power series truncated at `u^m`.
    pub fn laurent_principal(
        &self,
        ext: &ResidueField<F>,
        beta: &[F::Elem],
        f: &RationalFn<F::Elem>,
    ) -> Vec<Vec<F::Elem>> {
        let er = PolyRing::new(ext.clone());
        let beta = beta.to_vec();
        let num = er.shift(&self.lift(&er, f.num(), |c| ext.embed(c)), &beta);
        let den = er.shift(&self.lift(&er, f.den(), |c| ext.embed(c)), &beta);
        let m = den
            .coeffs()
            .iter()
            .position(|c| !ext.is_zero(c))
            .expect("denominator is nonzero");
        if m == 0 {
            return Vec::new();
        }
        let unit = &den.coeffs()[m..];
        let u0_inv = ext.inv(&unit[0]).expect("leading unit term is nonzero");
        let mut inv = vec![u0_inv.clone()];
        for k in 1..m {
            let mut acc = ext.zero();
            for i in 1..=k.min(unit.len() - 1) {
                acc = ext.add(&acc, &ext.mul(&unit[i], &inv[k - i]));
            }
            inv.push(ext.neg(&ext.mul(&acc, &u0_inv)));
        }
        let series: Vec<Vec<F::Elem>> = (0..m)
            .map(|k| {
                (0..=k).fold(ext.zero(), |acc, i| match num.coeff(i) {
                    Some(h) => ext.add(&acc, &ext.mul(h, &inv[k - i])),
                    None => acc,
                })
            })
            .collect();
        // coefficient of u^(-i) is the series coefficient of u^(m - i)
        (1..=m).map(|i| series[m - i].clone()).collect()
    }

    /// `sum over conjugates sigma of sum_i sigma(c_i) / (x - sigma(alpha))^i`
    /// as a rational function over the base field, where `alpha` is the root
    /// of `ext`'s modulus and `coeffs[i - 1] = c_i`.
    pub fn conjugate_sum(
        &self,
        ext: &ResidueField<F>,
        coeffs: &[Vec<F::Elem>],
    ) -> RationalFn<F::Elem> {
        let m = coeffs.len();
        if m == 0 || coeffs.iter().all(|c| ext.is_zero(c)) {
            return self.rat_zero();
        }
        let er = PolyRing::new(ext.clone());
        let alpha = ext.root();
        let lin = er.linear(&alpha);
        let pi = self.lift(&er, ext.modulus(), |c| ext.embed(c));
        let cofactor = er.div_exact(&pi, &lin).expect("alpha is a root");
        let cofactor_m = er.pow(&cofactor, m as u64);
        // c_i / (x - alpha)^i = c_i (x - alpha)^(m - i) cofactor^m / pi^m
        let mut local = Poly::zero();
        for (idx, c) in coeffs.iter().enumerate() {
            let i = idx + 1;
            let term = er.scale(&er.pow(&lin, (m - i) as u64), c);
            local = er.add(&local, &term);
        }
        let local = er.mul(&local, &cofactor_m);
        let traced = self.poly(local.coeffs().iter().map(|c| ext.trace(c)).collect());
        self.rational(traced, self.pow(ext.modulus(), m as u64))
            .expect("nonzero denominator")
    }

    /// Inverse of [`PolyRing::principal_parts`].
    pub fn recombine(&self, pf: &PartialFractions<F>) -> RationalFn<F::Elem> {
        pf.parts.iter().fold(
            self.rational_from_poly(pf.polynomial_part.clone()),
            |acc, part| self.rat_add(&acc, &self.conjugate_sum(&part.pole_field, &part.coeffs)),
        )
    }
}
