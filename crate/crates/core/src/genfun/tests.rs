use std::collections::BTreeMap;

use super::*;
use crate::exactmath::{rat, RationalPolynomial};
use crate::fixtures::{k4, spec};
use crate::matroid::RankFunction;
use crate::specialize::{count, count_dilation, ehrhart_polynomial, find_lambda};
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
fn unimodular_terms() {
    let closed = HalfOpenSimplicialCone {
        apex: vec![0],
        rays: vec![vec![1]],
        open: vec![false],
    };
    assert_eq!(unimodular_term(&closed).a, vec![0]);
    let open = HalfOpenSimplicialCone {
        open: vec![true],
        ..closed
    };
    let t = unimodular_term(&open);
    assert_eq!((t.a, t.v, t.b), (vec![1], vec![0], vec![vec![1]]));
}

#[test]
fn segment_genfun() {
    let g = build_genfun(&spec(Family::Bases, RankFunction::uniform(2, 1).unwrap())).unwrap();
    assert_eq!(g.terms.len(), 2);
    assert_eq!(count(&g), 2.into());
    assert_eq!(count(&dilate(&g, 2).unwrap()), 3.into());
    assert_eq!(dilate(&g, 1).unwrap(), g);
    assert_eq!(dilate(&g, 0), Err(GenFunError::BadDilation(0)));
}

#[test]
fn k4_pipeline() {
    let d = decompose(&spec(Family::Bases, k4()), &PipelineOptions::default()).unwrap();
    let g = d.genfun();
    let counts: Vec<usize> = d.per_vertex.iter().map(|vc| vc.pieces.len()).collect();
    assert_eq!(g.terms.len(), counts.iter().sum::<usize>());
    assert!(counts.iter().all(|&c| c >= 1));
    assert_eq!(g.dim, 5);
    assert!(g
        .terms
        .iter()
        .all(|t| t.b.len() == 5 && t.b.iter().all(|b| b.iter().any(|&x| x != 0))));
    assert_eq!(count(&g), 16.into());
    assert_eq!(count_dilation(&g, 2), 101.into());
    assert_eq!(k4_polynomial().eval_int(2), rat(101, 1));
    assert_eq!(ehrhart_polynomial(&g), k4_polynomial());
}

/// Signed multiplicity of every lattice point reached by the expansions of
/// the polarized terms up to the highest λ-level of the polytope.
pub(crate) fn polarized_multiplicities(g: &GenFun) -> BTreeMap<IntVec, i64> {
    let bs: Vec<&[i64]> = g
        .terms
        .iter()
        .flat_map(|t| t.b.iter().map(Vec::as_slice))
        .collect();
    let lambda = find_lambda(&bs, g.ambient);
    let p = polarize(g, &lambda);
    let top = g
        .terms
        .iter()
        .map(|t| dot_big(&t.v, &lambda))
        .max()
        .unwrap();
    let mut out: BTreeMap<IntVec, i64> = BTreeMap::new();
    fn walk(
        t: &GenFunTerm,
        lambda: &[BigInt],
        top: &BigInt,
        j: usize,
        x: IntVec,
        out: &mut BTreeMap<IntVec, i64>,
    ) {
        if dot_big(&x, lambda) > *top {
            return;
        }
        if j == t.b.len() {
            *out.entry(x).or_insert(0) += i64::from(t.sign);
            return;
        }
        let mut y = x;
        loop {
            if dot_big(&y, lambda) > *top {
                return;
            }
            walk(t, lambda, top, j + 1, y.clone(), out);
            y = add(&y, &t.b[j]);
        }
    }
    for t in &p.terms {
        assert!(t.b.iter().all(|b| dot_big(b, &lambda).is_positive()));
        walk(t, &lambda, &top, 0, t.a.clone(), &mut out);
    }
    out.retain(|_, m| *m != 0);
    out
}

#[test]
fn polarized_expansion_reproduces_bases() {
    let g = build_genfun(&spec(Family::Bases, k4())).unwrap();
    let m = polarized_multiplicities(&g);
    assert_eq!(m.len(), 16);
    assert!(m.values().all(|&v| v == 1));
    let bases =
        crate::vertices::enumerate_bases(&k4(), &crate::vertices::Budget::default()).unwrap();
    for b in bases {
        assert_eq!(m.get(&crate::vertices::indicator(b, 6)), Some(&1));
    }
}
