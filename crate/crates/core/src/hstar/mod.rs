//! h*-vectors, Katzman coefficients, closed forms for uniform matroids and
//! the unimodality / positivity predicates.

mod katzman;
mod uniform;


use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::exactmath::{binomial, factorial, rat_to_bigint, Rat, RationalPolynomial};

pub use katzman::{
    katzman, katzman_at, katzman_multinomial, katzman_rank_recurrence, katzman_rows,
};
pub use uniform::{
    uniform_dimension, uniform_ehrhart, uniform_hstar, uniform_hstar_grid, uniform_hstar_rank2,
    uniform_hstar_rank3, UniformEhrhart,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HStarError {
    #[error("polynomial has degree {degree}, above the dimension {dim}")]
    DegreeTooHigh { degree: usize, dim: usize },
    #[error("h*_{index} = {value} is not an integer")]
    NonIntegral { index: usize, value: String },
    #[error("h*_{index} = {value} is negative")]
    Negative { index: usize, value: BigInt },
}

/// Numerator `h*_0 + h*_1 t + ... + h*_d t^d` of the Ehrhart series.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HStarVector {
    entries: Vec<BigInt>,
}

impl HStarVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        HStarVector { entries }
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Self::new(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sum(&self) -> BigInt {
        self.entries.iter().sum()
    }

    pub fn is_unimodal(&self) -> bool {
        is_unimodal(&self.entries)
    }

    /// Whether `h*_0 <= h*_1 <= ... <= h*_upto` (missing entries count as 0).
    pub fn nondecreasing_upto(&self, upto: usize) -> bool {
        let at = |i: usize| self.entries.get(i).cloned().unwrap_or_else(BigInt::zero);
        (1..=upto).all(|i| at(i - 1) <= at(i))
    }
}

impl fmt::Display for HStarVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `h*_j = sum_{i<=j} (-1)^i C(d+1, i) p(j - i)` for `j = 0..=d`.
pub fn ehrhart_to_hstar(p: &RationalPolynomial, d: usize) -> Result<HStarVector, HStarError> {
    if let Some(degree) = p.degree() {
        if degree > d {
            return Err(HStarError::DegreeTooHigh { degree, dim: d });
        }
    }
    let values: Vec<Rat> = (0..=d as i64).map(|k| p.eval_int(k)).collect();
    let mut entries = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let mut h = Rat::zero();
        for i in 0..=j {
            let term = Rat::from_integer(binomial(d as i64 + 1, i as i64)) * &values[j - i];
            if i % 2 == 0 {
                h += term;
            } else {
                h -= term;
            }
        }
        let value = rat_to_bigint(&h).ok_or_else(|| HStarError::NonIntegral {
            index: j,
            value: h.to_string(),
        })?;
        if value.is_negative() {
            return Err(HStarError::Negative { index: j, value });
        }
        entries.push(value);
    }
    Ok(HStarVector::new(entries))
}

/// `d!` times the leading coefficient, which every h*-vector must sum to.
pub fn normalized_volume(p: &RationalPolynomial, d: usize) -> Rat {
    p.coeff(d) * Rat::from_integer(factorial(d as u64))
}

pub fn is_unimodal<T: PartialOrd>(v: &[T]) -> bool {
    unimodality_violation(v).is_none()
}

/// First index `i` at which `v` rises again (`v[i-1] < v[i]`) after having
/// strictly fallen.
pub fn unimodality_violation<T: PartialOrd>(v: &[T]) -> Option<usize> {
    let mut fallen = false;
    for i in 1..v.len() {
        if v[i] < v[i - 1] {
            fallen = true;
        } else if fallen && v[i] > v[i - 1] {
            return Some(i);
        }
    }
    None
}

/// First coefficient index (up to the degree) that is not strictly positive.
pub fn positivity_violation(p: &RationalPolynomial) -> Option<usize> {
    let deg = p.degree()?;
    (0..=deg).find(|&i| !p.coeff(i).is_positive())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub hstar_unimodal: bool,
    pub ehrhart_coeffs_positive: bool,
    pub unimodality_witness: Option<usize>,
    pub positivity_witness: Option<usize>,
}

pub fn conjecture_report(p: &RationalPolynomial, h: &HStarVector) -> ConjectureReport {
    let unimodality_witness = unimodality_violation(h.entries());
    let positivity_witness = positivity_violation(p);
    ConjectureReport {
        hstar_unimodal: unimodality_witness.is_none(),
        ehrhart_coeffs_positive: positivity_witness.is_none(),
        unimodality_witness,
        positivity_witness,
    }
}

pub fn uniform_conjecture_report(n: usize, r: usize) -> ConjectureReport {
    conjecture_report(&uniform_ehrhart(n, r), &uniform_hstar(n, r))
}

/// For each `I` in `0..=imax`, the smallest `n` in `nrange` from which on
/// (within the range) the h*-vector of `U^{r,n}` is non-decreasing up to
/// index `I`; `None` if it fails at the top of the range.
pub fn partial_unimodality_scan(
    r: usize,
    imax: usize,
    nrange: std::ops::RangeInclusive<usize>,
) -> Vec<(usize, Option<usize>)> {
    let vectors: Vec<(usize, HStarVector)> = nrange
        .clone()
        .filter(|&n| n >= r.max(1))
        .map(|n| (n, uniform_hstar(n, r)))
        .collect();
    (0..=imax)
        .map(|i| {
            let mut threshold = None;
            for (n, h) in vectors.iter().rev() {
                if h.nondecreasing_upto(i) {
                    threshold = Some(*n);
                } else {
                    break;
                }
            }
            (i, threshold)
        })
        .collect()
}
