//! Exact numeric substrate: big rationals, integer matrices with
//! fraction-free elimination, univariate rational polynomials and truncated
//! power series.
//!
//! Nothing in the crate touches floating point. Lattice coordinates are kept
//! in `i64` (they are bounded by the rank of the polytope) and every quantity
//! that can grow, such as determinants, pairings with moment-curve vectors and
//! Todd weights, lives in [`BigInt`] or [`Rat`].

mod combinat;
mod echelon;
mod matrix;
mod poly;
mod rat;
mod ring;

pub use combinat::{binomial, factorial};
pub use echelon::IntEchelon;
pub use matrix::{adjugate_i64, det_i64, rank_i64, scaled_inverse_i128, IntMatrix};
pub use poly::{poly_interpolate, series_mul_trunc, RationalPolynomial};
pub use rat::{parse_rat, rat, rat_to_bigint, Rat};
pub use ring::ExactInt;

pub use num_bigint::BigInt;

/// Dense integer vector used for lattice points and ray directions.
pub type IntVec = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MathError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("duplicate abscissa {0} in interpolation data")]
    DuplicateAbscissa(i64),
    #[error("cannot parse rational {0:?}")]
    BadRational(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_big(a: &[i64], b: &[BigInt]) -> BigInt {
    a.iter()
        .zip(b)
        .fold(BigInt::from(0), |acc, (x, y)| acc + y * BigInt::from(*x))
}

pub fn sub(a: &[i64], b: &[i64]) -> IntVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[i64], b: &[i64]) -> IntVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Divides out the gcd of the entries. The zero vector is returned unchanged.
pub fn primitive(v: &[i64]) -> IntVec {
    let g = v
        .iter()
        .fold(0i64, |g, &x| num_integer::Integer::gcd(&g, &x));
    if g <= 1 {
        return v.to_vec();
    }
    v.iter().map(|x| x / g).collect()
}
