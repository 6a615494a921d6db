use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{CensusRecord, Mode};
use crate::error::Result;
use crate::field::{FieldSpec, DEFAULT_ENUMERATION_CAP};
use crate::partitions::PartitionKappa;
use crate::poly::PolyRing;

/// How many monic irreducibles of each degree exist, read off an explicit
/// enumeration. Built once and shared read-only across censuses.
#[derive(Clone, Debug)]
pub struct IrreducibleTable {
    field: FieldSpec,
    /// `by_degree[e]` for `1 <= e <= max_degree`; index 0 unused.
    by_degree: Vec<u64>,
}

impl IrreducibleTable {
    pub fn build(field: &FieldSpec, max_degree: usize, cap: u64) -> Result<Self> {
        let ring = PolyRing::new(field.clone());
        let mut by_degree = vec![0u64; max_degree + 1];
        for pi in ring.irreducibles_up_to(max_degree, cap)? {
            by_degree[pi.degree().expect("nonzero")] += 1;
        }
        Ok(IrreducibleTable {
            field: field.clone(),
            by_degree,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn max_degree(&self) -> usize {
        self.by_degree.len() - 1
    }

    pub fn count(&self, degree: usize) -> u64 {
        self.by_degree.get(degree).copied().unwrap_or(0)
    }
}

/// Number of admissible principal parts of order `j` at one Galois orbit of
/// degree `e`: `(Q - 1) Q^(n_j)` with `Q = q^e` and `n_j` the number of
/// indices `1 <= i < j` prime to `p`. Zero when `p | j`.
pub fn local_count(q: u64, p: u64, j: u32, e: u32) -> BigUint {
    if u64::from(j) % p == 0 {
        return BigUint::zero();
    }
    let below = u64::from(j - 1);
    let free = (below - below / p) as u32;
    let big_q = BigUint::from(q).pow(e);
    (&big_q - 1u32) * big_q.pow(free)
}

pub fn census_constructive(field: &FieldSpec, kappa: &PartitionKappa) -> Result<CensusRecord> {
    let max_degree = kappa.kappa().into_values().max().unwrap_or(0);
    let table = IrreducibleTable::build(field, max_degree as usize, DEFAULT_ENUMERATION_CAP)?;
    census_constructive_with(&table, kappa)
}

/// Constructive census against a prebuilt table, which must cover degree
/// `max_j kappa_j`.
pub fn census_constructive_with(table: &IrreducibleTable, kappa: &PartitionKappa) -> Result<CensusRecord> {
    let field = table.field();
    let (q, p) = (field.q(), field.p());
    let slots: Vec<(u32, u32)> = kappa.kappa().into_iter().collect();
    let count = if slots.iter().any(|&(j, _)| u64::from(j) % p == 0) {
        BigUint::zero()
    } else {
        assert!(
            slots.iter().all(|&(_, k)| k as usize <= table.max_degree()),
            "irreducible table too small for {kappa}"
        );
        let mut search = Assign {
            table,
            q,
            p,
            slots: &slots,
            memo: HashMap::new(),
        };
        let mut used = vec![0u64; table.max_degree() + 1];
        BigUint::from(q) * search.run(0, &mut used)
    };
    Ok(CensusRecord::new(field, kappa, count, Mode::Constructive))
}

/// Backtracking over slots; the state only records how many irreducibles of
/// each degree are already taken, since local counts depend on degree alone.
struct Assign<'a> {
    table: &'a IrreducibleTable,
    q: u64,
    p: u64,
    slots: &'a [(u32, u32)],
    memo: HashMap<(usize, Vec<u64>), BigUint>,
}

impl Assign<'_> {
    fn run(&mut self, slot: usize, used: &mut Vec<u64>) -> BigUint {
        let Some(&(j, total)) = self.slots.get(slot) else {
            return BigUint::one();
        };
        let key = (slot, used.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut acc = BigUint::zero();
        for shape in degree_shapes(total) {
            // shape[e] irreducibles of degree e, all distinct and unused
            let mut ways = BigUint::one();
            for (e, &m) in shape.iter().enumerate().skip(1) {
                if m == 0 {
                    continue;
                }
                let free = self.table.count(e).saturating_sub(used[e]);
                ways *= binomial(free, m) * local_count(self.q, self.p, j, e as u32).pow(m as u32);
            }
            if ways.is_zero() {
                continue;
            }
            for (e, &m) in shape.iter().enumerate() {
                used[e] += m;
            }
            acc += ways * self.run(slot + 1, used);
            for (e, &m) in shape.iter().enumerate() {
                used[e] -= m;
            }
        }
        self.memo.insert(key, acc.clone());
        acc
    }
}

/// Partitions of `n` as multiplicity vectors indexed by part size.
fn degree_shapes(n: u32) -> Vec<Vec<u64>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for e in (1..=max.min(rest)).rev() {
            cur[e] += 1;
            go(rest - e, e, cur, out);
            cur[e] -= 1;
        }
    }
    let n = n as usize;
    let mut out = Vec::new();
    go(n, n, &mut vec![0; n + 1], &mut out);
    out
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}
