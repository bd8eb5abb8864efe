//! Independent lattice-point oracle: enumerate the box `0 <= x_i <= k f({i})`
//! and test every subset inequality.

#[cfg(test)]
mod tests;

use num_bigint::BigInt;
use num_traits::One;

use crate::exactmath::{poly_interpolate, MathError, RationalPolynomial};
use crate::vertices::{affine_dimension, vertex_points, Budget, Family, PolytopeSpec, VertexError};

pub const MAX_BRUTEFORCE_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BruteForceError {
    #[error("brute force is limited to {limit} elements, got {n}")]
    TooManyElements { n: usize, limit: usize },
    #[error("negative dilation factor {0}")]
    BadDilation(i64),
    #[error("brute-force enumeration exceeded the budget of {limit} nodes")]
    Budget { limit: u128 },
    #[error(transparent)]
    Vertex(#[from] VertexError),
    #[error(transparent)]
    Math(#[from] MathError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DilationCount {
    pub k: i64,
    pub count: BigInt,
}

/// `#(kP ∩ Z^n)` with the default budget.
pub fn count_direct(spec: &PolytopeSpec, k: i64) -> Result<BigInt, BruteForceError> {
    count_direct_with(spec, k, &Budget::default())
}

pub fn count_direct_with(
    spec: &PolytopeSpec,
    k: i64,
    budget: &Budget,
) -> Result<BigInt, BruteForceError> {
    let n = spec.n;
    if n > MAX_BRUTEFORCE_N {
        return Err(BruteForceError::TooManyElements {
            n,
            limit: MAX_BRUTEFORCE_N,
        });
    }
    if k < 0 {
        return Err(BruteForceError::BadDilation(k));
    }
    let f: Vec<i64> = spec.table()?.into_iter().map(|v| v * k).collect();
    let upper: Vec<i64> = (0..n).map(|i| f[1 << i]).collect();
    let mut suffix_room = vec![0i64; n + 1];
    for i in (0..n).rev() {
        suffix_room[i] = suffix_room[i + 1] + upper[i];
    }
    let mut search = Search {
        n,
        f: &f,
        upper: &upper,
        suffix_room: &suffix_room,
        target: (spec.family == Family::Bases).then(|| f[(1usize << n) - 1]),
        sums: vec![0i64; 1 << n],
        nodes: 0,
        limit: budget.max_candidates,
        count: 0,
    };
    search.descend(0, 0)?;
    Ok(BigInt::from(search.count))
}

struct Search<'a> {
    n: usize,
    f: &'a [i64],
    upper: &'a [i64],
    suffix_room: &'a [i64],
    target: Option<i64>,
    // sums[A] for subsets A of the assigned prefix
    sums: Vec<i64>,
    nodes: u128,
    limit: u128,
    count: u64,
}

impl Search<'_> {
    fn descend(&mut self, i: usize, total: i64) -> Result<(), BruteForceError> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(BruteForceError::Budget { limit: self.limit });
        }
        if i == self.n {
            if self.target.is_none_or(|t| t == total) {
                self.count += 1;
            }
            return Ok(());
        }
        let bit = 1usize << i;
        'values: for x in 0..=self.upper[i] {
            if let Some(t) = self.target {
                if total + x > t {
                    break;
                }
                if total + x + self.suffix_room[i + 1] < t {
                    continue;
                }
            }
            for a in 0..bit {
                let s = self.sums[a] + x;
                if s > self.f[a | bit] {
                    // sums only grow with x, so larger values fail too
                    break 'values;
                }
                self.sums[a | bit] = s;
            }
            self.descend(i + 1, total + x)?;
        }
        Ok(())
    }
}

/// Counts for `k = 0..=kmax`.
pub fn dilation_counts(
    spec: &PolytopeSpec,
    kmax: i64,
    budget: &Budget,
) -> Result<Vec<DilationCount>, BruteForceError> {
    (0..=kmax)
        .map(|k| {
            Ok(DilationCount {
                k,
                count: count_direct_with(spec, k, budget)?,
            })
        })
        .collect()
}

/// Dimension of the polytope, from its vertices.
pub fn polytope_dimension(spec: &PolytopeSpec, budget: &Budget) -> Result<usize, BruteForceError> {
    Ok(affine_dimension(&vertex_points(spec, budget)?))
}

/// Interpolates the Ehrhart polynomial through the counts at `k = 0..=dim P`.
pub fn ehrhart_by_interpolation(
    spec: &PolytopeSpec,
) -> Result<RationalPolynomial, BruteForceError> {
    ehrhart_by_interpolation_with(spec, &Budget::default())
}

pub fn ehrhart_by_interpolation_with(
    spec: &PolytopeSpec,
    budget: &Budget,
) -> Result<RationalPolynomial, BruteForceError> {
    let dim = polytope_dimension(spec, budget)?;
    let points: Vec<(i64, BigInt)> = dilation_counts(spec, dim as i64, budget)?
        .into_iter()
        .map(|c| (c.k, c.count))
        .collect();
    debug_assert!(points[0].1.is_one());
    Ok(poly_interpolate(&points)?)
}
