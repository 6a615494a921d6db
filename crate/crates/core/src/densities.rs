//! Limiting p-rank distributions and their finite-field counterparts.
//!
//! The geometric limit (fixed `p`, `q -> infinity`) of the proportion of covers
//! with p-rank `r(p-1)` is `M_p(r+1, d+2) / M_p(d+2)`. The arithmetic limit
//! (`q = p -> infinity`) is `T(r+1, d+2) / T(d+2)`. Both are kept as unreduced
//! fractions next to their reduced value, since the unreduced form shows the
//! partition counts directly.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::census::{aggregate, AggregateCensus, Mode};
use crate::error::{Error, Result};
use crate::field::{is_prime, FieldSpec};
use crate::partitions::{count_mp, count_mp_total, count_t, count_t_total, enumerate_all, lambda_stats, Family};
use crate::text_serde;

/// A nonnegative fraction that remembers its unreduced numerator and denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fraction {
    pub num: BigUint,
    pub den: BigUint,
}

impl Fraction {
    pub fn new(num: BigUint, den: BigUint) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Fraction { num, den }
    }

    pub fn reduced(&self) -> BigRational {
        BigRational::new(BigInt::from(self.num.clone()), BigInt::from(self.den.clone()))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Fraction", 3)?;
        st.serialize_field("num", &self.num.to_string())?;
        st.serialize_field("den", &self.den.to_string())?;
        st.serialize_field("reduced", &self.reduced().to_string())?;
        st.end()
    }
}

/// Renders `x` in decimal, rounded half away from zero to `digits` places.
pub fn decimal(x: &BigRational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (x.abs() * BigRational::from_integer(scale.clone())).round().to_integer();
    let (int, frac) = (&scaled / &scale, &scaled % &scale);
    let sign = if x.is_negative() && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{:0>digits$}", frac.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DensityMode {
    Geometric,
    Arithmetic,
}

impl fmt::Display for DensityMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DensityMode::Geometric => "geometric",
            DensityMode::Arithmetic => "arithmetic",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityRow {
    pub r: u32,
    /// `r (p - 1)`; absent in arithmetic mode, where `p` varies.
    pub tau: Option<u64>,
    pub density: Fraction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityTable {
    pub mode: DensityMode,
    pub p: Option<u64>,
    pub d: u32,
    pub genus: Option<u64>,
    /// `M_p(d+2)` or `T(d+2)`.
    #[serde(serialize_with = "text_serde::display")]
    pub total: BigUint,
    pub rows: Vec<DensityRow>,
    pub expected_speed: Option<Fraction>,
}

fn check_d(d: u32) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidD(d));
    }
    Ok(())
}

fn check_p(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    Ok(())
}

/// `M_p(r+1, d+2) / M_p(d+2)` with the denominator left unreduced.
pub fn geometric_fraction(p: u64, d: u32, r: u32) -> Result<Fraction> {
    check_p(p)?;
    check_d(d)?;
    let total = count_mp_total(p, d + 2);
    if total.is_zero() {
        return Err(Error::UndefinedDensity { p, d });
    }
    Ok(Fraction::new(count_mp(p, r + 1, d + 2), total))
}

pub fn geometric_density(p: u64, d: u32, r: u32) -> Result<BigRational> {
    geometric_fraction(p, d, r).map(|f| f.reduced())
}

/// `T(r+1, d+2) / T(d+2)`; zero for `r` outside `0..=d/2`.
pub fn arithmetic_fraction(d: u32, r: u32) -> Result<Fraction> {
    check_d(d)?;
    Ok(Fraction::new(count_t(r + 1, d + 2), count_t_total(d + 2)))
}

pub fn arithmetic_density(d: u32, r: u32) -> Result<BigRational> {
    arithmetic_fraction(d, r).map(|f| f.reduced())
}

/// `sum_r r T(r+1, d+2) / T(d+2)`, the mean of `tau / (p - 1)` in the arithmetic limit.
pub fn expected_speed_fraction(d: u32) -> Result<Fraction> {
    check_d(d)?;
    let num = (0..=d / 2).map(|r| BigUint::from(r) * count_t(r + 1, d + 2)).sum();
    Ok(Fraction::new(num, count_t_total(d + 2)))
}

pub fn expected_speed(d: u32) -> Result<BigRational> {
    expected_speed_fraction(d).map(|f| f.reduced())
}

pub fn geometric_table(p: u64, d: u32) -> Result<DensityTable> {
    let rows = (0..=d / 2)
        .map(|r| {
            Ok(DensityRow {
                r,
                tau: Some(u64::from(r) * (p - 1)),
                density: geometric_fraction(p, d, r)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let two_genus = u64::from(d) * (p - 1);
    Ok(DensityTable {
        mode: DensityMode::Geometric,
        p: Some(p),
        d,
        genus: Some(two_genus / 2),
        total: rows[0].density.den.clone(),
        rows,
        expected_speed: None,
    })
}

pub fn arithmetic_table(d: u32) -> Result<DensityTable> {
    let rows = (0..=d / 2)
        .map(|r| {
            Ok(DensityRow {
                r,
                tau: None,
                density: arithmetic_fraction(d, r)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DensityTable {
        mode: DensityMode::Arithmetic,
        p: None,
        d,
        genus: None,
        total: count_t_total(d + 2),
        rows,
        expected_speed: Some(expected_speed_fraction(d)?),
    })
}

/// One `(q, r)` cell: the exact census proportion next to its limit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvergenceRow {
    pub mode: DensityMode,
    pub p: u64,
    pub q: u64,
    pub d: u32,
    pub r: u32,
    /// `d (p - 1) / 2`, absent when that is not an integer.
    pub g: Option<u64>,
    pub tau: u64,
    /// `#S_{g,tau}(F_q) / #S_g(F_q)`
    pub ratio: Fraction,
    pub limit: Fraction,
    #[serde(serialize_with = "text_serde::display")]
    pub gap: BigRational,
}

impl ConvergenceRow {
    pub fn gap_decimal(&self) -> String {
        decimal(&self.gap, 6)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvergenceTable {
    pub mode: DensityMode,
    pub d: u32,
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceTable {
    /// The row for `(q, r)`, if present.
    pub fn row(&self, q: u64, r: u32) -> Option<&ConvergenceRow> {
        self.rows.iter().find(|row| row.q == q && row.r == r)
    }
}

fn rows_for(
    mode: DensityMode,
    census: &AggregateCensus,
    limit: impl Fn(u32) -> Result<Fraction>,
) -> Result<Vec<ConvergenceRow>> {
    let two_genus = u64::from(census.d) * (census.p - 1);
    census
        .strata
        .iter()
        .map(|s| {
            let ratio = Fraction::new(s.count.clone(), census.total.clone());
            let limit = limit(s.r)?;
            Ok(ConvergenceRow {
                mode,
                p: census.p,
                q: census.q,
                d: census.d,
                r: s.r,
                g: (two_genus % 2 == 0).then_some(two_genus / 2),
                tau: s.tau,
                gap: (ratio.reduced() - limit.reduced()).abs(),
                ratio,
                limit,
            })
        })
        .collect()
}

/// Exact census proportions over each `F_q` against the geometric limit.
pub fn empirical_geometric(p: u64, d: u32, q_list: &[u64], cap: u64) -> Result<ConvergenceTable> {
    check_p(p)?;
    check_d(d)?;
    // fail early on an undefined limit rather than after the censuses
    geometric_fraction(p, d, 0)?;
    let fields = q_list
        .iter()
        .map(|&q| {
            let field = FieldSpec::with_order(q)?;
            if field.p() != p {
                return Err(Error::NotAPowerOf { q, p });
            }
            Ok(field)
        })
        .collect::<Result<Vec<_>>>()?;
    let censuses = fields
        .par_iter()
        .map(|f| aggregate(f, d, Mode::Constructive, cap))
        .collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::new();
    for c in &censuses {
        rows.extend(rows_for(DensityMode::Geometric, c, |r| geometric_fraction(p, d, r))?);
    }
    Ok(ConvergenceTable {
        mode: DensityMode::Geometric,
        d,
        rows,
    })
}

/// Exact census proportions over each prime field `F_p` against the arithmetic limit.
pub fn empirical_arithmetic(d: u32, p_list: &[u64], cap: u64) -> Result<ConvergenceTable> {
    check_d(d)?;
    let fields = p_list
        .iter()
        .map(|&p| FieldSpec::prime(p))
        .collect::<Result<Vec<_>>>()?;
    let censuses = fields
        .par_iter()
        .map(|f| aggregate(f, d, Mode::Constructive, cap))
        .collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::new();
    for c in &censuses {
        rows.extend(rows_for(DensityMode::Arithmetic, c, |r| arithmetic_fraction(d, r))?);
    }
    Ok(ConvergenceTable {
        mode: DensityMode::Arithmetic,
        d,
        rows,
    })
}

/// Empirical CI tolerance on the geometric gap at finite `q`:
/// `4 (d+2) (lambda_max + 2) |Omega_p(d+2)| / q`. An engineering gate derived
/// from the sandwich bounds, not a proven rate.
pub fn geometric_gap_tolerance(p: u64, d: u32, q: u64) -> BigRational {
    let omega = enumerate_all(Family::Omega(p), d + 2);
    let lambda_max = omega.iter().map(|k| lambda_stats(k).lambda1).max().unwrap_or(0);
    let c = 4 * u64::from(d + 2) * u64::from(lambda_max + 2) * omega.len() as u64;
    BigRational::new(BigInt::from(c), BigInt::from(q))
}

/// Floating-point view of a reduced fraction, for presentation only.
pub fn approx(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
