use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::CensusRecord;
use crate::error::{Error, Result};
use crate::partitions::{lambda_stats, PartitionKappa};
use crate::text_serde;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundRegime {
    /// Every part `<= p`: `(1 - (d+2)/q)^(l1+1) q^(d+3) <= count <= (1 - 1/q)^l2 q^(d+3)`.
    Sandwich,
    /// Some part `> p`: only `count <= (1 - 1/q)^l2 q^(d+2)`, and `lower` is 0.
    Degenerate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub regime: BoundRegime,
    /// Raw value of the lower bound, kept even when vacuous.
    #[serde(serialize_with = "text_serde::display")]
    pub lower: BigRational,
    /// The base `1 - (d+2)/q` is negative, so the lower bound carries no information.
    pub lower_vacuous: bool,
    #[serde(serialize_with = "text_serde::display")]
    pub upper: BigRational,
}

impl Bounds {
    /// Lower bound as a column value: the number, or `vacuous`.
    pub fn lower_label(&self) -> String {
        if self.lower_vacuous {
            "vacuous".into()
        } else {
            self.lower.to_string()
        }
    }
}

pub fn sandwich_bounds(p: u64, q: u64, kappa: &PartitionKappa) -> Bounds {
    let stats = lambda_stats(kappa);
    let d = kappa.d();
    let q_big = BigInt::from(q);
    let qq = BigRational::from_integer(q_big.clone());
    let one = BigRational::one();
    let shrink = (&one - BigRational::new(BigInt::one(), q_big.clone())).pow(stats.lambda2 as i32);
    if kappa.parts_at_most(p) {
        let base = &one - BigRational::new(BigInt::from(d + 2), q_big);
        Bounds {
            regime: BoundRegime::Sandwich,
            lower_vacuous: base.is_negative(),
            lower: base.pow(stats.lambda1 as i32 + 1) * qq.pow(d as i32 + 3),
            upper: shrink * qq.pow(d as i32 + 3),
        }
    } else {
        Bounds {
            regime: BoundRegime::Degenerate,
            lower: BigRational::zero(),
            lower_vacuous: false,
            upper: shrink * qq.pow(d as i32 + 2),
        }
    }
}

/// Outcome of a successful bound check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub regime: BoundRegime,
    pub lower_checked: bool,
    #[serde(serialize_with = "text_serde::display")]
    pub count: BigUint,
}

/// Checks the record against its bounds. A failure here is a bug, never an
/// expected runtime condition.
pub fn verify_bounds(record: &CensusRecord) -> Result<BoundReport> {
    let b = &record.bounds;
    let count = BigRational::from_integer(BigInt::from(record.count.clone()));
    let context = || {
        format!(
            "q={} p={} d={} kappa={} count={} lower={} upper={} regime={:?}",
            record.q,
            record.p,
            record.d,
            record.kappa,
            record.count,
            b.lower_label(),
            b.upper,
            b.regime
        )
    };
    if count > b.upper {
        return Err(Error::BoundViolation(format!("count above upper bound: {}", context())));
    }
    let lower_checked = b.regime == BoundRegime::Sandwich && !b.lower_vacuous;
    if lower_checked && count < b.lower {
        return Err(Error::BoundViolation(format!("count below lower bound: {}", context())));
    }
    Ok(BoundReport {
        regime: b.regime,
        lower_checked,
        count: record.count.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::census_constructive;
    use crate::field::field_make;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn f2_record() {
        let rec = census_constructive(&field_make(2, 1).unwrap(), &"2+2".parse().unwrap()).unwrap();
        assert_eq!(rec.bounds.upper, rat(16, 1));
        assert!(rec.bounds.lower_vacuous);
        assert_eq!(rec.bounds.lower_label(), "vacuous");
        let report = verify_bounds(&rec).unwrap();
        assert!(!report.lower_checked);
    }

    #[test]
    fn large_q_brackets_ordinary_count() {
        for n in [3u32, 4] {
            let f = field_make(2, n).unwrap();
            let rec = census_constructive(&f, &"2+2".parse().unwrap()).unwrap();
            assert!(!rec.bounds.lower_vacuous);
            assert!(rec.bounds.lower.is_positive());
            assert!(verify_bounds(&rec).unwrap().lower_checked);
        }
    }

    #[test]
    fn degenerate_regime() {
        let f4 = field_make(2, 2).unwrap();
        let rec = census_constructive(&f4, &"4".parse().unwrap()).unwrap();
        assert_eq!(rec.bounds.regime, BoundRegime::Degenerate);
        assert_eq!(rec.bounds.upper, rat(4u32.pow(4) as i64, 1));
        verify_bounds(&rec).unwrap();
    }

    #[test]
    fn violation_is_reported() {
        let mut rec = census_constructive(&field_make(2, 1).unwrap(), &"2+2".parse().unwrap()).unwrap();
        rec.count = BigUint::from(17u32);
        let err = verify_bounds(&rec).unwrap_err();
        assert!(matches!(err, Error::BoundViolation(ref m) if m.contains("kappa=2+2")));
    }
}
