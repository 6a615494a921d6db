use as_census::densities::{
    arithmetic_density, empirical_arithmetic, empirical_geometric, geometric_density, geometric_table,
};
use as_census::field::DEFAULT_ENUMERATION_CAP;
use as_census::Error;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

#[test]
fn geometric_matches_arithmetic_for_large_p() {
    for d in 1..=12u32 {
        for p in [17u64, 19, 23] {
            assert!(u64::from(d + 2) < p);
            for r in 0..=d / 2 {
                assert_eq!(geometric_density(p, d, r).unwrap(), arithmetic_density(d, r).unwrap());
            }
        }
    }
}

#[test]
fn geometric_rows_sum_to_one_when_defined() {
    for p in [2u64, 3, 5, 7, 11, 13] {
        for d in 1..=16u32 {
            match geometric_table(p, d) {
                Ok(t) => {
                    let s: BigRational = t.rows.iter().map(|r| r.density.reduced()).sum();
                    assert!(s.is_one(), "p={p} d={d}");
                }
                Err(Error::UndefinedDensity { .. }) => assert!(p == 2 && d % 2 == 1),
                Err(e) => panic!("{e}"),
            }
        }
    }
}

#[test]
fn arithmetic_convergence_toward_half() {
    let t = empirical_arithmetic(2, &[3, 5, 7], DEFAULT_ENUMERATION_CAP).unwrap();
    for p in [3u64, 5, 7] {
        let r0 = t.row(p, 0).unwrap();
        let r1 = t.row(p, 1).unwrap();
        assert!((r0.ratio.reduced() + r1.ratio.reduced()).is_one());
        assert_eq!(r1.limit.reduced(), half());
        assert_eq!(r0.limit.reduced(), half());
    }
    // over F_3 the only admissible shape with d = 2 is two simple poles
    assert!(t.row(3, 0).unwrap().ratio.reduced().is_zero());
    let gaps: Vec<BigRational> = [3u64, 5, 7].iter().map(|&p| t.row(p, 1).unwrap().gap.clone()).collect();
    assert!(gaps[0] > gaps[1] && gaps[1] > gaps[2], "{gaps:?}");
}

#[test]
fn geometric_ratios_sum_to_one_at_each_q() {
    let t = empirical_geometric(3, 2, &[3, 9, 27], DEFAULT_ENUMERATION_CAP).unwrap();
    for q in [3u64, 9, 27] {
        let s: BigRational = t.rows.iter().filter(|r| r.q == q).map(|r| r.ratio.reduced()).sum();
        assert!(s.is_one());
        assert!(t.row(q, 1).unwrap().ratio.reduced().is_one());
    }
}
