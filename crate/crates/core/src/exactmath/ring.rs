use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Integer scalar for fraction-free elimination.
///
/// `i128` reports overflow through `None`; callers then retry with
/// [`BigInt`], which never fails.
pub trait ExactInt: Clone + std::fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn from_big(v: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn is_zero(&self) -> bool;
    fn signum(&self) -> i32;
    fn neg(&self) -> Self;
    /// `(a*b - c*d) / e`, where the division is known to be exact.
    fn mul_sub_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self>;
    /// Compares `a*b` with `c*d`.
    fn cmp_products(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Ordering>;
    fn add(&self, other: &Self) -> Option<Self>;
}

impl ExactInt for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn signum(&self) -> i32 {
        i128::signum(*self) as i32
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn mul_sub_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        let num = a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)?;
        debug_assert_eq!(num % e, 0, "inexact fraction-free division");
        num.checked_div(*e)
    }
    fn cmp_products(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Ordering> {
        Some(a.checked_mul(*b)?.cmp(&c.checked_mul(*d)?))
    }
    fn add(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
}

impl ExactInt for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn signum(&self) -> i32 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul_sub_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        let num = a * b - c * d;
        debug_assert!(Zero::is_zero(&(&num % e)), "inexact fraction-free division");
        Some(num / e)
    }
    fn cmp_products(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Ordering> {
        Some((a * b).cmp(&(c * d)))
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
}
