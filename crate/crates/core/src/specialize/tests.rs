use super::*;
use crate::exactmath::rat;
use crate::genfun::GenFunTerm;
use proptest::prelude::*;

#[test]
fn first_todd_coefficients() {
    let c = todd_c(4);
    assert_eq!(c[0], BigInt::from(1));
    assert_eq!(c[1], BigInt::from(1));
    assert_eq!(c[2], BigInt::from(1));
    assert_eq!(c[3], BigInt::from(0));
    let b = todd_b(4);
    assert_eq!(b[1], rat(1, 2));
    assert_eq!(b[2], rat(1, 12));
    assert_eq!(b[4], rat(-1, 720));
}

/// Taylor coefficients of `x / (1 - e^{-x})` by inverting the series of
/// `(1 - e^{-x}) / x = Σ (-1)^n x^n / (n+1)!`.
fn todd_b_by_division(m: usize) -> Vec<Rat> {
    let d: Vec<Rat> = (0..=m)
        .map(|n| {
            let f = Rat::from_integer(factorial(n as u64 + 1));
            if n % 2 == 0 {
                Rat::one() / f
            } else {
                -Rat::one() / f
            }
        })
        .collect();
    let mut inv = vec![Rat::zero(); m + 1];
    inv[0] = Rat::one() / &d[0];
    for n in 1..=m {
        let s: Rat = (1..=n).map(|k| &d[k] * &inv[n - k]).sum();
        inv[n] = -s / &d[0];
    }
    inv
}

fn todd_eval_oracle(xi: &[Rat], m: usize) -> Rat {
    let b = todd_b_by_division(m);
    let mut acc = RationalPolynomial::one();
    for x in xi {
        let h = RationalPolynomial::new(
            (0..=m)
                .map(|n| &b[n] * num_traits::pow(x.clone(), n))
                .collect(),
        );
        acc = &acc * &h;
    }
    acc.coeff(m)
}

#[test]
fn todd_values() {
    assert_eq!(todd_eval(&[rat(3, 1), rat(-2, 5)], 0), Rat::one());
    let xi = [rat(1, 1), rat(2, 1), rat(-1, 3)];
    assert_eq!(
        todd_eval(&xi, 1),
        (rat(1, 1) + rat(2, 1) + rat(-1, 3)) / rat(2, 1)
    );
    // (1 + x/2 + x²/12)² has x² coefficient 1/4 + 2/12
    assert_eq!(todd_eval(&[rat(1, 1), rat(1, 1)], 2), rat(5, 12));
}

#[test]
fn todd_coefficient_bound() {
    let c = todd_c(10);
    for (n, cn) in c.iter().enumerate() {
        let bound = num_traits::pow(factorial(n as u64 + 1), 2 * n);
        assert!(num_traits::Signed::abs(cn) <= bound, "c_{n}");
    }
}

proptest! {
    #[test]
    fn todd_eval_matches_series_division(
        xi in proptest::collection::vec((-6i64..7, 1i64..5), 0..=6),
        m in 0usize..=6,
    ) {
        let xi: Vec<Rat> = xi.into_iter().map(|(p, q)| rat(p, q)).collect();
        prop_assert_eq!(todd_eval(&xi, m), todd_eval_oracle(&xi, m));
    }
}

#[test]
fn lambda_examples() {
    let one = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    assert_eq!(find_lambda(&[&[1, 0, 0]], 3), one(&[1, 0, 0]));
    assert_eq!(find_lambda(&[&[1, -1]], 2), one(&[1, 0]));
    assert_eq!(find_lambda(&[&[-1, 1], &[1, -1]], 2), one(&[1, 0]));
    assert_eq!(find_lambda(&[&[0, 1]], 2), one(&[1, 1]));
}

#[test]
fn weight_examples() {
    assert_eq!(weights(&[]), vec![Rat::one()]);
    let beta = BigInt::from(3);
    assert_eq!(weights(&[beta]), vec![rat(1, 2), rat(-1, 3)]);
}

fn segment() -> GenFun {
    GenFun {
        terms: vec![
            GenFunTerm {
                sign: 1,
                a: vec![0],
                v: vec![0],
                b: vec![vec![1]],
            },
            GenFunTerm {
                sign: 1,
                a: vec![1],
                v: vec![1],
                b: vec![vec![-1]],
            },
        ],
        ambient: 1,
        dim: 1,
    }
}

#[test]
fn segment_counts() {
    let g = segment();
    assert_eq!(count(&g), BigInt::from(2));
    assert_eq!(count_dilation(&g, 2), BigInt::from(3));
    assert_eq!(count_dilation(&g, 0), BigInt::from(1));
    assert_eq!(
        ehrhart_polynomial(&g),
        RationalPolynomial::from_ints(&[1, 1])
    );
}

#[test]
fn point_polytope() {
    let g = GenFun {
        terms: vec![GenFunTerm {
            sign: 1,
            a: vec![2, 5],
            v: vec![2, 5],
            b: vec![],
        }],
        ambient: 2,
        dim: 0,
    };
    assert_eq!(ehrhart_polynomial(&g), RationalPolynomial::one());
    assert_eq!(count(&g), BigInt::from(1));
}

proptest! {
    #[test]
    fn fast_weights_match_product_definition(betas in proptest::collection::vec((1i64..40, any::<bool>()), 0..10)) {
        let betas: Vec<BigInt> = betas.into_iter().map(|(b, neg)| BigInt::from(if neg { -b } else { b })).collect();
        let s = betas.len();
        let neg: Vec<Rat> = betas.iter().map(|x| Rat::from_integer(-x)).collect();
        let prod: BigInt = betas.iter().product();
        let sign = if s.is_multiple_of(2) { Rat::one() } else { -Rat::one() };
        let expected: Vec<Rat> = (0..=s)
            .map(|l| &sign * todd_eval(&neg, s - l) / Rat::from_integer(factorial(l as u64) * &prod))
            .collect();
        prop_assert_eq!(weights(&betas), expected);
    }
}

/// Weight-by-weight evaluation, kept as an oracle for the merged series.
fn ehrhart_by_weights(g: &GenFun) -> RationalPolynomial {
    let p = plan(g);
    let smax = p
        .terms
        .iter()
        .map(|t| t.weights.len() - 1)
        .max()
        .unwrap_or(0);
    let mut coeffs = vec![Rat::zero(); smax + 1];
    for t in &p.terms {
        let alpha = Rat::from_integer(&t.a - &t.v);
        let v = Rat::from_integer(t.v.clone());
        let s = t.weights.len() - 1;
        for (m, coeff) in coeffs.iter_mut().enumerate().take(s + 1) {
            let mut inner = Rat::zero();
            for l in m..=s {
                inner += Rat::from_integer(binomial(l as i64, m as i64))
                    * &t.weights[l]
                    * num_traits::pow(alpha.clone(), l - m);
            }
            let c = num_traits::pow(v.clone(), m) * inner;
            if t.sign < 0 {
                *coeff -= c;
            } else {
                *coeff += c;
            }
        }
    }
    RationalPolynomial::new(coeffs)
}

#[test]
fn merged_series_matches_weights() {
    use crate::fixtures::{k4, sample_polymatroids, spec};
    use crate::genfun::build_genfun;
    use crate::vertices::Family;
    let mut specs = vec![spec(Family::Bases, k4()), spec(Family::Independence, k4())];
    for f in sample_polymatroids() {
        specs.push(spec(Family::Polymatroid, f));
    }
    for s in specs {
        let g = build_genfun(&s).unwrap();
        let p = ehrhart_polynomial(&g);
        assert_eq!(p, ehrhart_by_weights(&g));
        let (streamed, terms) = ehrhart_streaming(&s, &Default::default()).unwrap();
        assert_eq!((streamed, terms), (p.clone(), g.terms.len()));
        for k in 1..4 {
            assert_eq!(p.eval_int(k), Rat::from_integer(count_dilation(&g, k)));
        }
    }
}
