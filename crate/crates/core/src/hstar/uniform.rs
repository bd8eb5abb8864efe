use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::katzman::{katzman, katzman_at, katzman_rows};
use super::HStarVector;
use crate::exactmath::{binomial, factorial, Rat, RationalPolynomial};

/// Ehrhart polynomials of `P(U^{r,n})` for a fixed `n` and every rank.
///
/// With `G_s(x) = prod_{i=1}^{n-1} (x + i - s)` the count is
/// `(n-1)! i(k) = sum_s (-1)^s C(n,s) G_s((r-s) k)`; the `G_s` do not depend
/// on `r` and each one follows from the previous by one multiplication and
/// one exact division by a linear factor.
pub struct UniformEhrhart {
    n: usize,
    g: Vec<Vec<BigInt>>,
}

impl UniformEhrhart {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "uniform matroids need n >= 1");
        let mut g0 = vec![BigInt::one()];
        for i in 1..n {
            g0 = mul_linear(&g0, &BigInt::from(i));
        }
        let mut g = vec![g0];
        for s in 0..n.saturating_sub(1) {
            let prev = g.last().expect("nonempty");
            let up = mul_linear(prev, &BigInt::from(-(s as i64)));
            g.push(div_linear(&up, &BigInt::from((n - 1 - s) as i64)));
        }
        UniformEhrhart { n, g }
    }

    /// `(n-1)!` times the Ehrhart polynomial of `P(U^{r,n})`.
    pub fn numerator(&self, r: usize) -> Vec<BigInt> {
        assert!((1..=self.n).contains(&r), "need 1 <= r <= n");
        let mut out = vec![BigInt::zero(); self.n];
        for s in 0..r {
            let c = binomial(self.n as i64, s as i64);
            let c = if s % 2 == 0 { c } else { -c };
            let q = BigInt::from((r - s) as i64);
            let mut qpow = BigInt::one();
            for (m, gm) in self.g[s].iter().enumerate() {
                out[m] += &c * &qpow * gm;
                qpow *= &q;
            }
        }
        out
    }

    pub fn polynomial(&self, r: usize) -> RationalPolynomial {
        let d = factorial((self.n - 1) as u64);
        RationalPolynomial::new(
            self.numerator(r)
                .into_iter()
                .map(|c| Rat::new(c, d.clone()))
                .collect(),
        )
    }
}

fn mul_linear(p: &[BigInt], c: &BigInt) -> Vec<BigInt> {
    // p(x) * (x + c)
    let mut out = vec![BigInt::zero(); p.len() + 1];
    for (i, a) in p.iter().enumerate() {
        out[i] += a * c;
        out[i + 1] += a;
    }
    out
}

fn div_linear(p: &[BigInt], c: &BigInt) -> Vec<BigInt> {
    // exact p(x) / (x + c), highest coefficient first
    let deg = p.len() - 1;
    let mut q = vec![BigInt::zero(); deg];
    let mut carry = BigInt::zero();
    for i in (1..=deg).rev() {
        carry = &p[i] - c * &carry;
        q[i - 1] = carry.clone();
    }
    debug_assert_eq!(
        &p[0] - c * &carry,
        BigInt::zero(),
        "division by x + c must be exact"
    );
    q
}

/// `i(P(U^{r,n}), k) = sum_{s<r} (-1)^s C(n,s) C(k(r-s) - s + n - 1, n - 1)`.
pub fn uniform_ehrhart(n: usize, r: usize) -> RationalPolynomial {
    UniformEhrhart::new(n).polynomial(r)
}

/// Dimension of `P(U^{r,n})`: `n - 1`, except for the single point `r = n`.
pub fn uniform_dimension(n: usize, r: usize) -> usize {
    if r == n {
        0
    } else {
        n - 1
    }
}

/// h*-vector of `P(U^{r,n})` (length `dim + 1`) by the triple sum over
/// Katzman coefficients.
pub fn uniform_hstar(n: usize, r: usize) -> HStarVector {
    assert!(n >= 1 && (1..=n).contains(&r), "need 1 <= r <= n");
    if r == n {
        return HStarVector::from_ints(&[1]);
    }
    let mut h = vec![BigInt::zero(); n];
    for s in 0..r {
        let q = r - s;
        let cs = binomial(n as i64, s as i64);
        for j in 0..=s {
            let row = katzman(n - j, q);
            let csj = &cs * binomial(s as i64, j as i64);
            for k in 0..=j {
                let c = &csj * binomial(j as i64, k as i64);
                let c = if (s + j + k) % 2 == 0 { c } else { -c };
                for (l, hl) in h.iter_mut().enumerate() {
                    if l < k {
                        continue;
                    }
                    let a = katzman_at(&row, ((l - k) * q) as i64);
                    if !a.is_zero() {
                        *hl += &c * a;
                    }
                }
            }
        }
    }
    HStarVector::new(h)
}

/// Closed form for rank 2: `sum_l C(n, 2l) T^l - n T`.
pub fn uniform_hstar_rank2(n: usize) -> HStarVector {
    let n = n as i64;
    let mut h: Vec<BigInt> = (0..n).map(|l| binomial(n, 2 * l)).collect();
    if h.len() > 1 {
        h[1] -= BigInt::from(n);
    }
    HStarVector::new(h)
}

/// Closed form for rank 3: `A_{3l}^{n,3} - n C(n, 2l-1) + [l = 2] C(n, 2)`.
pub fn uniform_hstar_rank3(n: usize) -> HStarVector {
    let row = katzman(n, 3);
    let ni = n as i64;
    let h = (0..n)
        .map(|l| {
            let l = l as i64;
            let mut v = katzman_at(&row, 3 * l) - BigInt::from(ni) * binomial(ni, 2 * l - 1);
            if l == 2 {
                v += binomial(ni, 2);
            }
            v
        })
        .collect();
    HStarVector::new(h)
}

/// h*-vectors of every `U^{r,n}` with `1 <= r <= n <= nmax`, indexed
/// `[n][r]` (entries with `r = 0` or `n = 0` are empty).
///
/// Reorganizes the triple sum as `sum_s (-1)^s C(n,s) sum_j (-1)^j C(s,j) E_{n,r-s,j}`
/// with `E_{n,q,j} = (1-T)^j S_{n-j,q}` and `S_{m,q} = sum_l A_{lq}^{m,q} T^l`,
/// so each `(1-T)^j` factor is applied incrementally.
pub fn uniform_hstar_grid(nmax: usize) -> Vec<Vec<HStarVector>> {
    let mut acc: Vec<Vec<Vec<BigInt>>> = (0..=nmax).map(|n| vec![Vec::new(); n + 1]).collect();
    let pascal: Vec<Vec<BigInt>> = (0..=nmax as i64)
        .map(|n| (0..=n).map(|k| binomial(n, k)).collect())
        .collect();
    for q in 1..=nmax {
        let rows = katzman_rows(nmax, q);
        for (m, row) in rows.iter().enumerate() {
            let mut e: Vec<BigInt> = (0..)
                .map(|l| l * q)
                .take_while(|&i| i < row.len())
                .map(|i| row[i].clone())
                .collect();
            for j in 0..=(nmax - m) {
                let n = m + j;
                // s = r - q ranges over j..=n-q
                for s in j..=n.saturating_sub(q) {
                    let r = s + q;
                    if r > n || r == 0 {
                        continue;
                    }
                    let c = &pascal[n][s] * &pascal[s][j];
                    let c = if (s + j) % 2 == 0 { c } else { -c };
                    let target = &mut acc[n][r];
                    if target.len() < e.len() {
                        target.resize(e.len(), BigInt::zero());
                    }
                    for (t, x) in target.iter_mut().zip(&e) {
                        if !x.is_zero() {
                            *t += &c * x;
                        }
                    }
                }
                e.push(BigInt::zero());
                for l in (1..e.len()).rev() {
                    let prev = e[l - 1].clone();
                    e[l] -= prev;
                }
            }
        }
    }
    acc.into_iter()
        .enumerate()
        .map(|(n, per_r)| {
            per_r
                .into_iter()
                .enumerate()
                .map(|(r, mut h)| {
                    if n == 0 || r == 0 {
                        return HStarVector::new(Vec::new());
                    }
                    if r == n {
                        return HStarVector::from_ints(&[1]);
                    }
                    assert!(
                        h.iter().skip(n).all(Zero::is_zero),
                        "h* of U^{{{r},{n}}} exceeds its dimension"
                    );
                    h.resize(n, BigInt::zero());
                    HStarVector::new(h)
                })
                .collect()
        })
        .collect()
}
