use std::collections::BTreeMap;

use num_bigint::BigUint;

use super::{CensusRecord, Mode};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement, FieldSpec};
use crate::partitions::PartitionKappa;
use crate::poly::{Poly, PolyRing};

/// Hard cap on the number of `(g, h)` pairs the oracle may visit.
pub const NAIVE_PAIR_BUDGET: u64 = 10_000_000;

/// Exhaustive census: every `h/g` with `g = prod g_j^j` built from pairwise
/// coprime squarefree `g_j` of degree `kappa_j`, and every `h` with
/// `deg h <= deg g` coprime to `g`, is tested for admissibility and for its
/// pole orders.
pub fn census_naive(field: &FieldSpec, kappa: &PartitionKappa, budget: u64) -> Result<CensusRecord> {
    // #tuples <= q^(sum kappa_j) and #h <= q^(deg g + 1), so q^(d+3) bounds the pairs
    let pairs = BigUint::from(field.q()).pow(kappa.d() + 3);
    if pairs > BigUint::from(budget) {
        return Err(Error::budget(
            format!("naive census of {kappa} over F_{}", field.q()),
            pairs,
            budget,
        ));
    }
    let ring = PolyRing::new(field.clone());
    let cap = budget;
    let slots: Vec<(u32, u32)> = kappa.kappa().into_iter().collect();
    let want = kappa.kappa();

    let mut squarefree: Vec<Vec<Poly<FieldElement>>> = Vec::new();
    for &(_, k) in &slots {
        let all = ring.monic_polys(k as usize, cap)?;
        squarefree.push(all.into_iter().filter(|g| ring.is_squarefree(g)).collect());
    }

    let mut denominators = Vec::new();
    coprime_tuples(&ring, &slots, &squarefree, 0, ring.one(), &mut denominators);

    let mut count = 0u64;
    for g in &denominators {
        let deg = g.degree().expect("monic");
        let numerators = all_polys_below(&ring, deg + 1, cap)?;
        for h in numerators {
            if !ring.is_one(&ring.gcd(&h, g)) {
                continue;
            }
            let f = ring.rational(h, g.clone())?;
            if !ring.is_admissible(&f) {
                continue;
            }
            let mut orders: BTreeMap<u32, u32> = BTreeMap::new();
            for part in ring.principal_parts(&f).parts {
                *orders.entry(part.order() as u32).or_default() += part.orbit_size() as u32;
            }
            if orders == want {
                count += 1;
            }
        }
    }
    Ok(CensusRecord::new(field, kappa, BigUint::from(count), Mode::Naive))
}

fn coprime_tuples(
    ring: &PolyRing<FieldSpec>,
    slots: &[(u32, u32)],
    choices: &[Vec<Poly<FieldElement>>],
    slot: usize,
    acc: Poly<FieldElement>,
    out: &mut Vec<Poly<FieldElement>>,
) {
    let Some(&(j, _)) = slots.get(slot) else {
        out.push(acc);
        return;
    };
    for g in &choices[slot] {
        // coprime to every earlier g_i iff coprime to their product
        if !ring.is_one(&ring.gcd(g, &acc)) {
            continue;
        }
        let next = ring.mul(&acc, &ring.pow(g, u64::from(j)));
        coprime_tuples(ring, slots, choices, slot + 1, next, out);
    }
}

/// Every polynomial (monic or not, including zero) of degree `< len`.
fn all_polys_below(ring: &PolyRing<FieldSpec>, len: usize, cap: u64) -> Result<Vec<Poly<FieldElement>>> {
    let elems = ring.field().elements(cap)?;
    let q = elems.len();
    let mut out = Vec::new();
    let mut digits = vec![0usize; len];
    loop {
        out.push(ring.poly(digits.iter().map(|&d| elems[d]).collect()));
        let mut i = 0;
        while i < len {
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i == len {
            return Ok(out);
        }
    }
}
