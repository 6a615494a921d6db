//! Partition families indexing the p-rank strata.
//!
//! A cover with `r + 1` poles of orders `d_1, .., d_{r+1}` gives the partition
//! `d + 2 = sum (d_i + 1)` into parts `e = d_i + 1 >= 2`. The multiplicity vector
//! `kappa_j` counts parts equal to `j + 1`.
//!
//! * `Omega_p(r+1, d+2)`: parts `e` with `e != 1 (mod p)`, i.e. pole orders prime to `p`.
//! * `M_p(r+1, d+2)`: members of `Omega_p` with every part `<= p`.
//! * `Theta(r+1, d+2)`: no congruence condition.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A partition of `d + 2` into parts `>= 2`, stored with parts descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionKappa {
    parts: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaStats {
    pub lambda1: u32,
    pub lambda2: u32,
}

/// Genus and p-rank of the covers in one stratum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GenusPrank {
    /// `2g = d (p - 1)`, always an integer.
    pub two_genus: u64,
    /// `None` when `d (p - 1)` is odd (only possible for `p = 2`, `d` odd).
    pub genus: Option<u64>,
    pub tau: u64,
    pub ordinary: bool,
}

/// Which constraint the parts of a partition satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Omega(u64),
    Theta,
    Mp(u64),
}

impl Family {
    fn allows(self, e: u32) -> bool {
        match self {
            Family::Theta => e >= 2,
            Family::Omega(p) => e >= 2 && u64::from(e) % p != 1 % p,
            Family::Mp(p) => e >= 2 && u64::from(e) <= p && u64::from(e) % p != 1 % p,
        }
    }

    fn max_part(self, total: u32) -> u32 {
        match self {
            Family::Mp(p) => total.min(p.min(u64::from(u32::MAX)) as u32),
            _ => total,
        }
    }
}

impl PartitionKappa {
    pub fn from_parts(mut parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidKappa("a partition needs at least one part".into()));
        }
        if let Some(&bad) = parts.iter().find(|&&e| e < 2) {
            return Err(Error::InvalidKappa(format!("part {bad} is below 2")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PartitionKappa { parts })
    }

    /// Builds from `kappa_j` (the number of poles of order `j`).
    pub fn from_kappa(kappa: &BTreeMap<u32, u32>) -> Result<Self> {
        if kappa.contains_key(&0) {
            return Err(Error::InvalidKappa("pole orders start at 1".into()));
        }
        let parts = kappa
            .iter()
            .flat_map(|(&j, &k)| std::iter::repeat(j + 1).take(k as usize))
            .collect();
        Self::from_parts(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `j -> kappa_j`, only nonzero entries.
    pub fn kappa(&self) -> BTreeMap<u32, u32> {
        let mut out = BTreeMap::new();
        for &e in &self.parts {
            *out.entry(e - 1).or_insert(0) += 1;
        }
        out
    }

    pub fn kappa_j(&self, j: u32) -> u32 {
        self.parts.iter().filter(|&&e| e == j + 1).count() as u32
    }

    pub fn d_plus_2(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn d(&self) -> u32 {
        self.d_plus_2() - 2
    }

    pub fn r_plus_1(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn r(&self) -> u32 {
        self.r_plus_1() - 1
    }

    /// Degree of the denominator `prod_j g_j^j`, i.e. `d + 1 - r`.
    pub fn pole_degree(&self) -> u32 {
        self.parts.iter().map(|e| e - 1).sum()
    }

    pub fn largest_part(&self) -> u32 {
        self.parts[0]
    }

    pub fn in_family(&self, family: Family) -> bool {
        self.parts.iter().all(|&e| family.allows(e))
    }

    /// Every part `<= p`, i.e. `kappa_j = 0` for all `j >= p`.
    pub fn parts_at_most(&self, p: u64) -> bool {
        u64::from(self.largest_part()) <= p
    }

    pub fn is_ordinary(&self) -> bool {
        self.parts.iter().all(|&e| e == 2)
    }
}

impl fmt::Display for PartitionKappa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        f.write_str(&s.join("+"))
    }
}

impl FromStr for PartitionKappa {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split('+')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_parts(parts)
    }
}

impl Serialize for PartitionKappa {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Partitions of `total` into exactly `count` parts allowed by `family`,
/// parts descending, lists in descending lexicographic order.
pub fn enumerate(family: Family, count: u32, total: u32) -> Vec<PartitionKappa> {
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(count as usize);
    descend(family, count, total, family.max_part(total), &mut stack, &mut out);
    out
}

fn descend(
    family: Family,
    count: u32,
    total: u32,
    max_part: u32,
    stack: &mut Vec<u32>,
    out: &mut Vec<PartitionKappa>,
) {
    if count == 0 {
        if total == 0 {
            out.push(PartitionKappa {
                parts: stack.clone(),
            });
        }
        return;
    }
    // remaining parts are each at least 2 and at most the current part
    if total < 2 * count || u64::from(total) > u64::from(max_part) * u64::from(count) {
        return;
    }
    let hi = max_part.min(total - 2 * (count - 1));
    for e in (2..=hi).rev() {
        if !family.allows(e) {
            continue;
        }
        stack.push(e);
        descend(family, count - 1, total - e, e, stack, out);
        stack.pop();
    }
}

/// Every `r` with `0 <= r <= floor(d/2)`, ascending.
pub fn enumerate_all(family: Family, d_plus_2: u32) -> Vec<PartitionKappa> {
    (1..=d_plus_2 / 2)
        .flat_map(|count| enumerate(family, count, d_plus_2))
        .collect()
}

pub fn enum_omega(p: u64, r_plus_1: u32, d_plus_2: u32) -> Vec<PartitionKappa> {
    enumerate(Family::Omega(p), r_plus_1, d_plus_2)
}

pub fn enum_theta(r_plus_1: u32, d_plus_2: u32) -> Vec<PartitionKappa> {
    enumerate(Family::Theta, r_plus_1, d_plus_2)
}

pub fn enum_theta_all(d_plus_2: u32) -> Vec<PartitionKappa> {
    enumerate_all(Family::Theta, d_plus_2)
}

pub fn enum_mp(p: u64, r_plus_1: u32, d_plus_2: u32) -> Vec<PartitionKappa> {
    enumerate(Family::Mp(p), r_plus_1, d_plus_2)
}

/// `N_p(r+1, d+2)`
pub fn count_np(p: u64, r_plus_1: u32, d_plus_2: u32) -> BigUint {
    BigUint::from(enum_omega(p, r_plus_1, d_plus_2).len())
}

/// `T(r+1, d+2)`
pub fn count_t(r_plus_1: u32, d_plus_2: u32) -> BigUint {
    BigUint::from(enum_theta(r_plus_1, d_plus_2).len())
}

/// `T(d+2)`
pub fn count_t_total(d_plus_2: u32) -> BigUint {
    BigUint::from(enum_theta_all(d_plus_2).len())
}

/// `M_p(r+1, d+2)`
pub fn count_mp(p: u64, r_plus_1: u32, d_plus_2: u32) -> BigUint {
    BigUint::from(enum_mp(p, r_plus_1, d_plus_2).len())
}

/// `M_p(d+2) = sum_r M_p(r+1, d+2)`
pub fn count_mp_total(p: u64, d_plus_2: u32) -> BigUint {
    (1..=d_plus_2 / 2).map(|c| count_mp(p, c, d_plus_2)).sum()
}

/// `lambda_i = #{j : kappa_j >= i}` for `i = 1, 2`.
pub fn lambda_stats(kappa: &PartitionKappa) -> LambdaStats {
    let k = kappa.kappa();
    LambdaStats {
        lambda1: k.values().filter(|&&m| m >= 1).count() as u32,
        lambda2: k.values().filter(|&&m| m >= 2).count() as u32,
    }
}

/// Dimension `d - 1 - sum_e floor((e - 1)/p)` of the stratum component
/// indexed by `kappa` in the moduli of Artin-Schreier curves.
pub fn component_dimension(p: u64, kappa: &PartitionKappa) -> Result<i64> {
    if !kappa.in_family(Family::Omega(p)) {
        return Err(Error::InvalidKappa(format!(
            "{kappa} has a part congruent to 1 mod {p}"
        )));
    }
    let drop: u64 = kappa.parts().iter().map(|&e| u64::from(e - 1) / p).sum();
    Ok(i64::from(kappa.d()) - 1 - drop as i64)
}

pub fn genus_and_prank(p: u64, kappa: &PartitionKappa) -> GenusPrank {
    let d = u64::from(kappa.d());
    let two_genus = d * (p - 1);
    GenusPrank {
        two_genus,
        genus: (two_genus % 2 == 0).then_some(two_genus / 2),
        tau: u64::from(kappa.r()) * (p - 1),
        ordinary: kappa.is_ordinary(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::is_prime;
    use proptest::prelude::*;

    fn parts(list: &[PartitionKappa]) -> Vec<Vec<u32>> {
        list.iter().map(|k| k.parts().to_vec()).collect()
    }

    /// Independent oracle: every multiset of parts in [2, n] via nondecreasing
    /// sequences, filtered after the fact.
    fn brute(total: u32, count: u32, keep: impl Fn(u32) -> bool) -> Vec<Vec<u32>> {
        fn rec(total: u32, count: u32, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if count == 0 {
                if total == 0 {
                    let mut v = cur.clone();
                    v.reverse();
                    out.push(v);
                }
                return;
            }
            for e in min..=total {
                cur.push(e);
                rec(total - e, count - 1, e, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(total, count, 2, &mut Vec::new(), &mut out);
        out.retain(|v| v.iter().all(|&e| keep(e)));
        out.sort();
        out
    }

    #[test]
    fn omega_examples() {
        // oracle: 2-part partitions of 10 are 8+2, 7+3, 6+4, 5+5; 6 = 1 mod 5
        assert_eq!(brute(10, 2, |e| e % 5 != 1).len(), 3);
        let got = parts(&enum_omega(5, 2, 10));
        assert_eq!(got, vec![vec![8, 2], vec![7, 3], vec![5, 5]]);
        assert!(enum_omega(5, 1, 11).is_empty());
        assert!(enum_omega(3, 1, 7).is_empty());
        assert_eq!(parts(&enum_omega(3, 2, 6)), vec![vec![3, 3]]);
        // 2(r+1) > d+2
        assert!(enum_omega(7, 6, 10).is_empty());
    }

    #[test]
    fn theta_examples() {
        assert_eq!(
            parts(&enum_theta(2, 10)),
            vec![vec![8, 2], vec![7, 3], vec![6, 4], vec![5, 5]]
        );
        assert_eq!(parts(&enum_theta(1, 10)), vec![vec![10]]);
        assert_eq!(parts(&enum_theta(4, 10)), vec![vec![4, 2, 2, 2], vec![3, 3, 2, 2]]);
        assert_eq!(count_t(3, 10), BigUint::from(4u32));
        assert_eq!(count_t_total(10), BigUint::from(12u32));
    }

    #[test]
    fn mp_examples() {
        assert_eq!(count_mp(5, 3, 10), BigUint::from(3u32));
        assert_eq!(
            parts(&enum_mp(5, 3, 10)),
            vec![vec![5, 3, 2], vec![4, 4, 2], vec![4, 3, 3]]
        );
        assert_eq!(count_mp(5, 1, 10), BigUint::from(0u32));
        assert_eq!(count_mp_total(5, 10), BigUint::from(7u32));
        let per_r: Vec<_> = (1..=5).map(|c| count_mp(5, c, 10)).collect();
        let want: Vec<BigUint> = [0u32, 1, 3, 2, 1].into_iter().map(BigUint::from).collect();
        assert_eq!(per_r, want);
    }

    #[test]
    fn mp_vanishes_exactly_for_p2_odd_d() {
        for p in (2..=13).filter(|&p| is_prime(p)) {
            for d in 1..=20u32 {
                let zero = count_mp_total(p, d + 2) == BigUint::from(0u32);
                assert_eq!(zero, p == 2 && d % 2 == 1, "p={p} d={d}");
            }
        }
    }

    #[test]
    fn lambda_examples() {
        let k = |m: &[(u32, u32)]| PartitionKappa::from_kappa(&m.iter().copied().collect()).unwrap();
        assert_eq!(lambda_stats(&k(&[(1, 5)])), LambdaStats { lambda1: 1, lambda2: 1 });
        assert_eq!(lambda_stats(&k(&[(1, 1), (2, 1)])), LambdaStats { lambda1: 2, lambda2: 0 });
        assert_eq!(lambda_stats(&k(&[(1, 2), (3, 1)])), LambdaStats { lambda1: 2, lambda2: 1 });
    }

    #[test]
    fn component_dimensions() {
        let k55: PartitionKappa = "5+5".parse().unwrap();
        assert_eq!(component_dimension(5, &k55).unwrap(), 7);
        let k10: PartitionKappa = "10".parse().unwrap();
        assert_eq!(component_dimension(5, &k10).unwrap(), 6);
        for k in enum_mp(5, 3, 10) {
            assert_eq!(component_dimension(5, &k).unwrap(), 7);
        }
        let bad: PartitionKappa = "6+4".parse().unwrap();
        assert!(component_dimension(5, &bad).is_err());
    }

    #[test]
    fn genus_and_prank_examples() {
        let ordinary: PartitionKappa = "2+2+2+2+2".parse().unwrap();
        let gp = genus_and_prank(5, &ordinary);
        assert_eq!((gp.genus, gp.tau, gp.ordinary), (Some(16), 16, true));
        let k: PartitionKappa = "2+2".parse().unwrap();
        let gp = genus_and_prank(2, &k);
        assert_eq!((gp.genus, gp.tau), (Some(1), 1));
        let k: PartitionKappa = "3+3".parse().unwrap();
        let gp = genus_and_prank(3, &k);
        assert_eq!((gp.genus, gp.tau, gp.ordinary), (Some(4), 2, false));
        let odd: PartitionKappa = "3+2".parse().unwrap();
        let gp = genus_and_prank(2, &odd);
        assert_eq!((gp.two_genus, gp.genus), (3, None));
    }

    #[test]
    fn text_form() {
        let k: PartitionKappa = "2+5+3".parse().unwrap();
        assert_eq!(k.to_string(), "5+3+2");
        assert_eq!(k.kappa(), BTreeMap::from([(1, 1), (2, 1), (4, 1)]));
        assert_eq!((k.d(), k.r()), (8, 2));
        assert!("5+1".parse::<PartitionKappa>().is_err());
        assert!("5+x".parse::<PartitionKappa>().is_err());
        assert!(PartitionKappa::from_kappa(&BTreeMap::from([(0, 1)])).is_err());
    }

    proptest! {
        #[test]
        fn families_match_brute_force(p in prop::sample::select(vec![2u64, 3, 5, 7, 11]), d_plus_2 in 2u32..22, count in 1u32..8) {
            let omega = enum_omega(p, count, d_plus_2);
            let theta = enum_theta(count, d_plus_2);
            let mp = enum_mp(p, count, d_plus_2);
            prop_assert_eq!(
                { let mut v = parts(&omega); v.sort(); v },
                brute(d_plus_2, count, |e| u64::from(e) % p != 1)
            );
            prop_assert_eq!(
                { let mut v = parts(&mp); v.sort(); v },
                brute(d_plus_2, count, |e| u64::from(e) % p != 1 && u64::from(e) <= p)
            );
            prop_assert_eq!({ let mut v = parts(&theta); v.sort(); v }, brute(d_plus_2, count, |_| true));
            for k in &omega {
                prop_assert_eq!(k.d_plus_2(), d_plus_2);
                prop_assert_eq!(k.r_plus_1(), count);
                let s: u32 = k.kappa().iter().map(|(j, m)| (j + 1) * m).sum();
                prop_assert_eq!(s, d_plus_2);
                prop_assert!(theta.contains(k));
                prop_assert!(lambda_stats(k).lambda2 <= lambda_stats(k).lambda1);
            }
            for k in &mp {
                prop_assert!(omega.contains(k));
            }
            if u64::from(d_plus_2) < p {
                prop_assert_eq!(omega.len(), theta.len());
                prop_assert_eq!(mp.len(), theta.len());
            }
            let mut sorted = omega.clone();
            sorted.sort_by(|a, b| b.cmp(a));
            prop_assert_eq!(sorted, omega);
        }

        #[test]
        fn theta_total_is_sum_over_r(d_plus_2 in 2u32..30) {
            let sum: BigUint = (1..=d_plus_2 / 2).map(|c| count_t(c, d_plus_2)).sum();
            prop_assert_eq!(sum, count_t_total(d_plus_2));
        }
    }
}
