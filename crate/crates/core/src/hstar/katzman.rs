use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactmath::binomial;

/// Coefficients of `(1 + T + ... + T^{r-1})^n`, built one factor at a time
/// with a sliding window sum over the previous row.
pub fn katzman(n: usize, r: usize) -> Vec<BigInt> {
    katzman_rows(n, r).pop().expect("at least the n = 0 row")
}

/// Rows `A^{0,r}, A^{1,r}, ..., A^{nmax,r}`.
pub fn katzman_rows(nmax: usize, r: usize) -> Vec<Vec<BigInt>> {
    assert!(r >= 1, "Katzman coefficients need r >= 1");
    let mut rows = Vec::with_capacity(nmax + 1);
    rows.push(vec![BigInt::one()]);
    for _ in 0..nmax {
        let prev: &Vec<BigInt> = rows.last().expect("nonempty");
        let len = prev.len() + r - 1;
        let mut prefix = Vec::with_capacity(prev.len() + 1);
        prefix.push(BigInt::zero());
        for a in prev {
            let next = prefix.last().expect("nonempty") + a;
            prefix.push(next);
        }
        let row = (0..len)
            .map(|i| {
                let hi = (i + 1).min(prev.len());
                let lo = (i + 1).saturating_sub(r);
                &prefix[hi] - &prefix[lo]
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// `A_i^{n,r}` with the convention that indices outside `0..=n(r-1)` give 0.
pub fn katzman_at(row: &[BigInt], i: i64) -> BigInt {
    usize::try_from(i)
        .ok()
        .and_then(|i| row.get(i).cloned())
        .unwrap_or_else(BigInt::zero)
}

/// Same coefficients from the multinomial expansion, summing over all
/// compositions `a_0 + ... + a_{r-1} = n`.
pub fn katzman_multinomial(n: usize, r: usize) -> Vec<BigInt> {
    assert!(r >= 1, "Katzman coefficients need r >= 1");
    let mut out = vec![BigInt::zero(); n * (r - 1) + 1];
    let mut parts = vec![0usize; r];
    compositions(n, 0, &mut parts, &mut |a| {
        let weight: usize = a.iter().enumerate().map(|(j, &aj)| j * aj).sum();
        let mut coeff = BigInt::one();
        let mut left = n as i64;
        for &aj in a {
            coeff *= binomial(left, aj as i64);
            left -= aj as i64;
        }
        out[weight] += coeff;
    });
    out
}

fn compositions(left: usize, pos: usize, parts: &mut [usize], f: &mut impl FnMut(&[usize])) {
    if pos + 1 == parts.len() {
        parts[pos] = left;
        f(parts);
        return;
    }
    for a in 0..=left {
        parts[pos] = a;
        compositions(left - a, pos + 1, parts, f);
    }
}

/// Same coefficients from the rank recurrence
/// `sum_k C(n,k) T^k (1 + ... + T^{r-2})^k`.
pub fn katzman_rank_recurrence(n: usize, r: usize) -> Vec<BigInt> {
    assert!(r >= 1, "Katzman coefficients need r >= 1");
    if r == 1 {
        return vec![BigInt::one()];
    }
    let mut out = vec![BigInt::zero(); n * (r - 1) + 1];
    for k in 0..=n {
        let inner = katzman_rank_recurrence(k, r - 1);
        let c = binomial(n as i64, k as i64);
        for (l, a) in inner.iter().enumerate() {
            out[k + l] += &c * a;
        }
    }
    out
}
