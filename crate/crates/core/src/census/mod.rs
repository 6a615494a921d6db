//! Exact counts of admissible rational functions.
//!
//! `#S_g^kappa(F_q)` counts admissible `f = h/g` over `F_q` whose poles have the
//! multiplicity vector `kappa`. Two independent routes compute it:
//! [`census_constructive`] from local data at each Galois orbit of poles, and
//! [`census_naive`] by enumerating every candidate `h/g` and testing it.

mod bounds;
mod constructive;
mod naive;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, DEFAULT_ENUMERATION_CAP};
use crate::partitions::{enumerate_all, Family, PartitionKappa};
use crate::text_serde;

pub use bounds::{sandwich_bounds, verify_bounds, BoundRegime, BoundReport, Bounds};
pub use constructive::{census_constructive, census_constructive_with, local_count, IrreducibleTable};
pub use naive::{census_naive, NAIVE_PAIR_BUDGET};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Constructive,
    Naive,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Constructive => "constructive",
            Mode::Naive => "naive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub q: u64,
    pub p: u64,
    pub d: u32,
    pub kappa: PartitionKappa,
    #[serde(serialize_with = "text_serde::display")]
    pub count: BigUint,
    pub bounds: Bounds,
    pub mode: Mode,
}

impl CensusRecord {
    pub(crate) fn new(field: &FieldSpec, kappa: &PartitionKappa, count: BigUint, mode: Mode) -> Self {
        CensusRecord {
            q: field.q(),
            p: field.p(),
            d: kappa.d(),
            kappa: kappa.clone(),
            bounds: sandwich_bounds(field.p(), field.q(), kappa),
            count,
            mode,
        }
    }
}

/// Per-p-rank totals of a full census at fixed `(q, d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AggregateCensus {
    pub q: u64,
    pub p: u64,
    pub d: u32,
    pub mode: Mode,
    pub records: Vec<CensusRecord>,
    pub strata: Vec<StratumTotal>,
    /// `#S_g(F_q)`
    #[serde(serialize_with = "text_serde::display")]
    pub total: BigUint,
    /// `#S_g(F_q) / (p - 1)`, the count of covers up to the scaling action.
    #[serde(serialize_with = "text_serde::display")]
    pub total_as: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumTotal {
    pub r: u32,
    pub tau: u64,
    /// `#S_{g,tau}(F_q)`
    #[serde(serialize_with = "text_serde::display")]
    pub count: BigUint,
    /// `#S_{g,tau}(F_q) / (p - 1)`
    #[serde(serialize_with = "text_serde::display")]
    pub count_as: BigUint,
}

/// Number of monic squarefree polynomials of degree `n` over `F_q`.
pub fn count_squarefree(field: &FieldSpec, n: u32) -> BigUint {
    let q = BigUint::from(field.q());
    if n <= 1 {
        q.pow(n)
    } else {
        q.pow(n) - q.pow(n - 1)
    }
}

/// Rejects a multiplicity vector that does not partition `d + 2`.
pub fn check_kappa(d: u32, kappa: &PartitionKappa) -> Result<()> {
    if kappa.d_plus_2() != d + 2 {
        return Err(Error::InvalidKappa(format!(
            "{kappa} sums to {}, expected d + 2 = {}",
            kappa.d_plus_2(),
            d + 2
        )));
    }
    Ok(())
}

/// Census of every `kappa` in `Omega_p(r+1, d+2)`, `0 <= r <= floor(d/2)`,
/// summed per stratum. Individual censuses run in parallel; results keep the
/// enumeration order.
pub fn aggregate(field: &FieldSpec, d: u32, mode: Mode, cap: u64) -> Result<AggregateCensus> {
    let p = field.p();
    let kappas = enumerate_all(Family::Omega(p), d + 2);
    let records: Vec<CensusRecord> = match mode {
        Mode::Constructive => {
            let max_degree = kappas
                .iter()
                .flat_map(|k| k.kappa().into_values())
                .max()
                .unwrap_or(0);
            let table = IrreducibleTable::build(field, max_degree as usize, cap)?;
            kappas
                .par_iter()
                .map(|k| census_constructive_with(&table, k))
                .collect::<Result<_>>()?
        }
        Mode::Naive => kappas
            .par_iter()
            .map(|k| census_naive(field, k, NAIVE_PAIR_BUDGET))
            .collect::<Result<_>>()?,
    };
    Ok(summarize(field, d, mode, records))
}

pub(crate) fn summarize(field: &FieldSpec, d: u32, mode: Mode, records: Vec<CensusRecord>) -> AggregateCensus {
    let p = field.p();
    let unit = BigUint::from(p - 1);
    let mut per_r: BTreeMap<u32, BigUint> = (0..=d / 2).map(|r| (r, BigUint::zero())).collect();
    for rec in &records {
        *per_r.entry(rec.kappa.r()).or_default() += &rec.count;
    }
    let strata: Vec<StratumTotal> = per_r
        .into_iter()
        .map(|(r, count)| {
            let (count_as, rest) = count.div_rem(&unit);
            assert!(rest.is_zero(), "(p - 1) divides every stratum count");
            StratumTotal {
                r,
                tau: u64::from(r) * (p - 1),
                count,
                count_as,
            }
        })
        .collect();
    let total: BigUint = strata.iter().map(|s| &s.count).sum();
    let total_as = &total / &unit;
    AggregateCensus {
        q: field.q(),
        p,
        d,
        mode,
        records,
        strata,
        total,
        total_as,
    }
}

/// Convenience wrapper using the default enumeration cap.
pub fn aggregate_default(field: &FieldSpec, d: u32, mode: Mode) -> Result<AggregateCensus> {
    aggregate(field, d, mode, DEFAULT_ENUMERATION_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::field_make;
    use crate::poly::PolyRing;

    #[test]
    fn squarefree_counts_match_enumeration() {
        for (p, n) in [(2u64, 1u32), (3, 1), (2, 2), (5, 1)] {
            let field = field_make(p, n).unwrap();
            let ring = PolyRing::new(field.clone());
            for deg in 0..=4u32 {
                let brute = ring
                    .monic_polys(deg as usize, 1 << 12)
                    .unwrap()
                    .iter()
                    .filter(|g| ring.is_squarefree(g))
                    .count();
                assert_eq!(count_squarefree(&field, deg), BigUint::from(brute), "q={} N={deg}", field.q());
            }
        }
    }

    #[test]
    fn squarefree_examples() {
        let f3 = field_make(3, 1).unwrap();
        assert_eq!(count_squarefree(&f3, 2), BigUint::from(6u32));
        assert_eq!(count_squarefree(&f3, 0), BigUint::from(1u32));
        let f2 = field_make(2, 1).unwrap();
        assert_eq!(count_squarefree(&f2, 3), BigUint::from(4u32));
    }

    #[test]
    fn kappa_must_match_d() {
        let k: PartitionKappa = "2+2".parse().unwrap();
        assert!(check_kappa(2, &k).is_ok());
        assert!(matches!(check_kappa(3, &k), Err(Error::InvalidKappa(_))));
    }

    #[test]
    fn aggregate_over_f2_d2() {
        let f2 = field_make(2, 1).unwrap();
        let agg = aggregate_default(&f2, 2, Mode::Constructive).unwrap();
        let labels: Vec<String> = agg.records.iter().map(|r| r.kappa.to_string()).collect();
        assert_eq!(labels, vec!["4", "2+2"]);
        let naive = aggregate_default(&f2, 2, Mode::Naive).unwrap();
        for (a, b) in agg.records.iter().zip(&naive.records) {
            assert_eq!(a.count, b.count);
        }
        assert_eq!(agg.total, naive.total);
        assert_eq!(agg.total_as, agg.total);
        let sum: BigUint = agg.strata.iter().map(|s| &s.count).sum();
        assert_eq!(sum, agg.total);
    }
}
