use num_bigint::BigInt;

use super::*;
use crate::exactmath::{rat, RationalPolynomial};
use crate::fixtures::{k4, sample_polymatroids, spec};
use crate::genfun::build_genfun;
use crate::matroid::RankFunction;
use crate::specialize::ehrhart_polynomial;
use crate::vertices::Family;

fn k4_polynomial() -> RationalPolynomial {
    RationalPolynomial::new(vec![
        rat(1, 1),
        rat(107, 30),
        rat(21, 4),
        rat(49, 12),
        rat(7, 4),
        rat(7, 20),
    ])
}

#[test]
fn small_counts() {
    let k4 = spec(Family::Bases, k4());
    assert_eq!(count_direct(&k4, 0).unwrap(), BigInt::from(1));
    assert_eq!(count_direct(&k4, 1).unwrap(), BigInt::from(16));
    assert_eq!(count_direct(&k4, 2).unwrap(), BigInt::from(101));
    let u24 = spec(Family::Bases, RankFunction::uniform(4, 2).unwrap());
    assert_eq!(count_direct(&u24, 1).unwrap(), BigInt::from(6));
    let tri = spec(Family::Independence, RankFunction::uniform(2, 1).unwrap());
    assert_eq!(count_direct(&tri, 2).unwrap(), BigInt::from(6));
}

#[test]
fn guards() {
    let big = spec(Family::Bases, RankFunction::uniform(13, 2).unwrap());
    assert!(matches!(
        count_direct(&big, 1),
        Err(BruteForceError::TooManyElements { n: 13, .. })
    ));
    let k4 = spec(Family::Bases, k4());
    assert!(matches!(
        count_direct(&k4, -1),
        Err(BruteForceError::BadDilation(-1))
    ));
    let tiny = Budget { max_candidates: 10 };
    assert!(matches!(
        count_direct_with(&k4, 3, &tiny),
        Err(BruteForceError::Budget { limit: 10 })
    ));
}

#[test]
fn interpolation_examples() {
    let k4 = spec(Family::Bases, k4());
    assert_eq!(ehrhart_by_interpolation(&k4).unwrap(), k4_polynomial());
    let point = spec(Family::Bases, RankFunction::uniform(3, 3).unwrap());
    assert_eq!(
        ehrhart_by_interpolation(&point).unwrap(),
        RationalPolynomial::one()
    );
    let u24 = spec(Family::Bases, RankFunction::uniform(4, 2).unwrap());
    assert_eq!(
        ehrhart_by_interpolation(&u24).unwrap(),
        crate::hstar::uniform_ehrhart(4, 2)
    );
}

#[test]
fn extrapolation_matches_direct_count() {
    for (family, f) in [
        (Family::Bases, k4()),
        (Family::Independence, RankFunction::uniform(4, 2).unwrap()),
        (Family::Polymatroid, sample_polymatroids()[2].clone()),
    ] {
        let s = spec(family, f);
        let p = ehrhart_by_interpolation(&s).unwrap();
        let dim = polytope_dimension(&s, &Budget::default()).unwrap() as i64;
        let k = dim + 1;
        assert_eq!(
            p.eval_int(k),
            crate::exactmath::Rat::from_integer(count_direct(&s, k).unwrap())
        );
    }
}

#[test]
fn pipeline_matches_oracle() {
    let mut cases = vec![
        (Family::Bases, k4()),
        (Family::Independence, k4()),
        (
            Family::Bases,
            RankFunction::graphic(vec![(0, 1), (1, 2), (0, 2), (2, 3), (3, 0)]).unwrap(),
        ),
    ];
    for n in 2..=5 {
        for r in 1..n {
            cases.push((Family::Bases, RankFunction::uniform(n, r).unwrap()));
            cases.push((Family::Independence, RankFunction::uniform(n, r).unwrap()));
        }
    }
    for f in sample_polymatroids() {
        cases.push((Family::Polymatroid, f));
    }
    for (family, f) in cases {
        let s = spec(family, f.clone());
        let pipeline = ehrhart_polynomial(&build_genfun(&s).unwrap());
        assert_eq!(
            pipeline,
            ehrhart_by_interpolation(&s).unwrap(),
            "{family:?} {f:?}"
        );
    }
}

#[test]
fn dual_and_direct_sum() {
    let k4 = k4();
    let p = ehrhart_by_interpolation(&spec(Family::Bases, k4.clone())).unwrap();
    let dual = ehrhart_by_interpolation(&spec(Family::Bases, k4.dual().unwrap())).unwrap();
    assert_eq!(p, dual);
    let a = RankFunction::uniform(3, 1).unwrap();
    let b = RankFunction::uniform(4, 2).unwrap();
    let sum = a.direct_sum(&b).unwrap();
    let pa = ehrhart_by_interpolation(&spec(Family::Bases, a)).unwrap();
    let pb = ehrhart_by_interpolation(&spec(Family::Bases, b)).unwrap();
    let ps = ehrhart_by_interpolation(&spec(Family::Bases, sum)).unwrap();
    assert_eq!(ps, &pa * &pb);
}
