use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rat::Rat;
use super::MathError;

/// Univariate polynomial with exact rational coefficients, lowest degree
/// first. Trailing zeros are trimmed; the zero polynomial has no
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<Rat>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rat::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// `a*x + b`
    pub fn linear(a: Rat, b: Rat) -> Self {
        Self::new(vec![b, a])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rat {
        self.eval(&Rat::from_integer(x.into()))
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Coefficients padded with zeros to length `len`.
    pub fn padded(&self, len: usize) -> Vec<Rat> {
        (0..len.max(self.coeffs.len()))
            .map(|i| self.coeff(i))
            .collect()
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})k"),
                _ => format!("({c})k^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

/// Product of two power series, keeping only terms of degree `<= order`.
pub fn series_mul_trunc(
    a: &RationalPolynomial,
    b: &RationalPolynomial,
    order: usize,
) -> RationalPolynomial {
    let mut out = vec![Rat::zero(); order + 1];
    for (i, x) in a.coeffs.iter().enumerate().take(order + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate().take(order + 1 - i) {
            out[i + j] += x * y;
        }
    }
    RationalPolynomial::new(out)
}

/// Lagrange interpolation through `(k, value)` pairs with distinct abscissae.
pub fn poly_interpolate(points: &[(i64, BigInt)]) -> Result<RationalPolynomial, MathError> {
    for (i, (x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(y, _)| y == x) {
            return Err(MathError::DuplicateAbscissa(*x));
        }
    }
    let mut acc = RationalPolynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = RationalPolynomial::one();
        let mut denom = BigInt::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = &basis * &RationalPolynomial::from_ints(&[-xj, 1]);
            denom *= BigInt::from(xi - xj);
        }
        acc = &acc + &basis.scale(&Rat::new(yi.clone(), denom));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use proptest::prelude::*;

    #[test]
    fn trimming_and_zero() {
        let p = RationalPolynomial::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(RationalPolynomial::from_ints(&[0, 0]).is_zero());
        assert_eq!(RationalPolynomial::zero().degree(), None);
    }

    #[test]
    fn interpolate_constant() {
        let p = poly_interpolate(&[(0, 1.into()), (1, 1.into())]).unwrap();
        assert_eq!(p, RationalPolynomial::one());
    }

    #[test]
    fn interpolate_quadratic_reproduces_points() {
        let pts: Vec<(i64, BigInt)> = vec![(0, 1.into()), (1, 6.into()), (2, 19.into())];
        let p = poly_interpolate(&pts).unwrap();
        for (k, v) in &pts {
            assert_eq!(p.eval_int(*k), Rat::from_integer(v.clone()));
        }
        assert_eq!(p, RationalPolynomial::from_ints(&[1, 1, 4]));
    }

    #[test]
    fn interpolate_rejects_duplicates() {
        let err = poly_interpolate(&[(1, 1.into()), (1, 2.into())]).unwrap_err();
        assert_eq!(err, MathError::DuplicateAbscissa(1));
    }

    #[test]
    fn truncated_products() {
        let a = RationalPolynomial::from_ints(&[1, 1]);
        assert_eq!(
            series_mul_trunc(&a, &a, 1),
            RationalPolynomial::from_ints(&[1, 2])
        );
        let h = RationalPolynomial::new(vec![rat(1, 1), rat(1, 2)]);
        assert_eq!(
            series_mul_trunc(&h, &h, 2),
            RationalPolynomial::new(vec![rat(1, 1), rat(1, 1), rat(1, 4)])
        );
        assert_eq!(series_mul_trunc(&h, &h, 0), RationalPolynomial::one());
    }

    proptest! {
        #[test]
        fn interpolation_inverts_evaluation(
            coeffs in proptest::collection::vec((-20i64..20, 1i64..12), 1..=7),
            shift in -5i64..5,
        ) {
            let p = RationalPolynomial::new(coeffs.iter().map(|&(a, b)| rat(a, b)).collect());
            // scale to an integer-valued sample by clearing denominators
            let lcm = coeffs.iter().fold(BigInt::one(), |l, &(_, b)| num_integer::Integer::lcm(&l, &BigInt::from(b)));
            let q = p.scale(&Rat::from_integer(lcm.clone()));
            let pts: Vec<(i64, BigInt)> = (0..coeffs.len() as i64)
                .map(|k| (k + shift, q.eval_int(k + shift).to_integer()))
                .collect();
            let back = poly_interpolate(&pts).unwrap();
            prop_assert_eq!(back.scale(&Rat::new(BigInt::one(), lcm)), p);
        }
    }
}
