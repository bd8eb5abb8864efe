//! Specialization of a generating function at `z = 1`: Todd polynomials,
//! lattice-point counts and the Ehrhart polynomial.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cones::{decompose_vertex, ConeOptions};
use crate::exactmath::{
    binomial, dot_big, factorial, rat_to_bigint, series_mul_trunc, Rat, RationalPolynomial,
};
use crate::exactmath::{primitive, sub, IntVec};
use crate::genfun::{dilate, unimodular_term, GenFun, GenFunError, GenFunTerm, PipelineOptions};
use crate::vertices::{enumerate_vertices_with, PolytopeSpec};

/// `c_0 .. c_m` with `b_n = c_n / (n! (n+1)!)` the Taylor coefficients of
/// `x / (1 - e^{-x})`.
pub fn todd_c(m: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::one()];
    for n in 1..=m {
        let mut acc = BigInt::zero();
        for j in 1..=n {
            let term = binomial(n as i64 + 1, j as i64 + 1) * factorial(n as u64)
                / factorial((n - j + 1) as u64)
                * &c[n - j];
            if j % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        c.push(acc);
    }
    c
}

/// Taylor coefficients `b_0 .. b_m` of `h(x) = x / (1 - e^{-x})`.
pub fn todd_b(m: usize) -> Vec<Rat> {
    todd_c(m)
        .into_iter()
        .enumerate()
        .map(|(n, c)| Rat::new(c, factorial(n as u64) * factorial(n as u64 + 1)))
        .collect()
}

/// `∏_j h(x ξ_j)` truncated after `x^m`, one factor at a time.
pub fn todd_series(xi: &[Rat], m: usize) -> RationalPolynomial {
    let b = todd_b(m);
    todd_series_with(&b, xi, m)
}

fn todd_series_with(b: &[Rat], xi: &[Rat], m: usize) -> RationalPolynomial {
    let mut acc = RationalPolynomial::one();
    for x in xi {
        let mut pow = Rat::one();
        let mut h = Vec::with_capacity(m + 1);
        for bn in b.iter().take(m + 1) {
            h.push(bn * &pow);
            pow *= x;
        }
        acc = series_mul_trunc(&acc, &RationalPolynomial::new(h), m);
    }
    acc
}

/// `td_m(ξ)`, the coefficient of `x^m` in `∏_j h(x ξ_j)`.
pub fn todd_eval(xi: &[Rat], m: usize) -> Rat {
    todd_series(xi, m).coeff(m)
}

fn moment(xi: i64, len: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(len);
    let mut p = BigInt::one();
    for _ in 0..len {
        out.push(p.clone());
        p *= xi;
    }
    out
}

/// Smallest `ξ = 0, 1, …` whose moment-curve vector `(1, ξ, …, ξ^{n-1})` pairs
/// nonzero with every exponent.
pub fn find_lambda(bs: &[&[i64]], n: usize) -> Vec<BigInt> {
    (0i64..)
        .map(|xi| moment(xi, n))
        .find(|l| bs.iter().all(|b| !dot_big(b, l).is_zero()))
        .expect("finitely many roots")
}

/// Coefficients of `log h(x)` up to `x^m`, from `n L_n = n b_n - sum_{k<n} k L_k b_{n-k}`.
fn todd_log(b: &[Rat]) -> Vec<Rat> {
    let mut l = vec![Rat::zero(); b.len()];
    for n in 1..b.len() {
        let mut acc = Rat::from_integer(BigInt::from(n)) * &b[n];
        for k in 1..n {
            acc -= Rat::from_integer(BigInt::from(k)) * &l[k] * &b[n - k];
        }
        l[n] = acc / Rat::from_integer(BigInt::from(n));
    }
    l
}

/// `td_0 .. td_m` of `ξ` as `exp(sum_m L_m p_m(ξ) x^m)` with integer power sums `p_m`.
fn todd_series_powersums(log: &[Rat], xi: &[BigInt], m: usize) -> Vec<Rat> {
    let mut p = vec![BigInt::zero(); m + 1];
    for x in xi {
        let mut pow = x.clone();
        for pk in p.iter_mut().skip(1) {
            *pk += &pow;
            pow *= x;
        }
    }
    let ks: Vec<Rat> = (0..=m)
        .map(|k| Rat::from_integer(BigInt::from(k) * &p[k]) * &log[k])
        .collect();
    let mut e = vec![Rat::one()];
    for n in 1..=m {
        let mut acc = Rat::zero();
        for k in 1..=n {
            if !ks[k].is_zero() {
                acc += &ks[k] * &e[n - k];
            }
        }
        e.push(acc / Rat::from_integer(BigInt::from(n)));
    }
    e
}

/// `w_l = (-1)^s td_{s-l}(-β_1, …, -β_s) / (l! β_1 ⋯ β_s)` for `l = 0..=s`.
pub fn weights(betas: &[BigInt]) -> Vec<Rat> {
    weights_with(&todd_log(&todd_b(betas.len())), betas)
}

fn weights_with(log: &[Rat], betas: &[BigInt]) -> Vec<Rat> {
    let s = betas.len();
    assert!(
        betas.iter().all(|x| !x.is_zero()),
        "pairing with a denominator vanished"
    );
    let neg: Vec<BigInt> = betas.iter().map(|x| -x).collect();
    let td = todd_series_powersums(log, &neg, s);
    let prod: BigInt = betas.iter().product();
    let mut denom = if s.is_multiple_of(2) { prod } else { -prod };
    let mut out = Vec::with_capacity(s + 1);
    for l in 0..=s {
        if l > 0 {
            denom *= BigInt::from(l);
        }
        out.push(&td[s - l] / Rat::from_integer(denom.clone()));
    }
    out
}

/// Per-term pairings and weights for a fixed λ.
#[derive(Debug, Clone)]
pub struct SpecializationPlan {
    pub lambda: Vec<BigInt>,
    pub terms: Vec<PlannedTerm>,
}

#[derive(Debug, Clone)]
pub struct PlannedTerm {
    pub sign: i32,
    pub a: BigInt,
    pub v: BigInt,
    pub weights: Vec<Rat>,
}

pub fn plan(g: &GenFun) -> SpecializationPlan {
    let bs: Vec<&[i64]> = g
        .terms
        .iter()
        .flat_map(|t| t.b.iter().map(Vec::as_slice))
        .collect();
    let lambda = find_lambda(&bs, g.ambient);
    let smax = g.terms.iter().map(|t| t.b.len()).max().unwrap_or(0);
    let log = todd_log(&todd_b(smax));
    let terms = g
        .terms
        .iter()
        .map(|t| {
            let betas: Vec<BigInt> = t.b.iter().map(|bj| dot_big(bj, &lambda)).collect();
            PlannedTerm {
                sign: t.sign,
                a: dot_big(&t.a, &lambda),
                v: dot_big(&t.v, &lambda),
                weights: weights_with(&log, &betas),
            }
        })
        .collect();
    SpecializationPlan { lambda, terms }
}

/// Merged specialization of one term. With pairings `β`, apex `v = ⟨λ,v⟩` and
/// `α = ⟨λ, a - v⟩`, the term contributes
/// `(-1)^s v^m / (m! ∏β) · e_{s-m}` to the `k^m` coefficient, where
/// `e(x) = exp(α x + sum_j L_j p_j(-β) x^j)` and `L` is the series of `log h`.
/// This is `sum_l w_l (α + v k)^l` expanded in `k`.
///
/// The exponential is run in integers: with `Q` a common denominator of
/// `j L_j`, the numbers `F_n = n! Q^n e_n` satisfy
/// `F_n = sum_k T_k F_{n-k} (n-1)!/(n-k)! Q^{k-1}` with `T_k = Q k S_k`.
struct Specializer {
    lambda: Vec<BigInt>,
    q: BigInt,
    // Q j L_j
    scaled_log: Vec<BigInt>,
    // (n-1)!/(n-k)! Q^{k-1}
    steps: Vec<Vec<BigInt>>,
}

struct TermSeries {
    /// `(-1)^s sign ∏β`
    denom: BigInt,
    v: BigInt,
    /// `F_0 .. F_s`
    f: Vec<BigInt>,
}

impl Specializer {
    fn new(g: &GenFun) -> Self {
        let bs: Vec<&[i64]> = g
            .terms
            .iter()
            .flat_map(|t| t.b.iter().map(Vec::as_slice))
            .collect();
        let lambda = find_lambda(&bs, g.ambient);
        let smax = g.terms.iter().map(|t| t.b.len()).max().unwrap_or(0);
        Self::with_lambda(lambda, smax)
    }

    fn with_lambda(lambda: Vec<BigInt>, smax: usize) -> Self {
        let log = todd_log(&todd_b(smax));
        let jl: Vec<Rat> = log
            .iter()
            .enumerate()
            .map(|(j, l)| l * Rat::from_integer(BigInt::from(j)))
            .collect();
        let q = jl.iter().fold(BigInt::one(), |acc, x| {
            num_integer::Integer::lcm(&acc, x.denom())
        });
        let scaled_log = jl
            .iter()
            .map(|x| {
                rat_to_bigint(&(x * Rat::from_integer(q.clone()))).expect("common denominator")
            })
            .collect();
        let steps = (0..=smax)
            .map(|n| {
                (0..=n)
                    .map(|k| {
                        if k == 0 {
                            return BigInt::zero();
                        }
                        let falling: BigInt = ((n - k + 1)..n).map(BigInt::from).product();
                        falling * num_traits::pow(q.clone(), k - 1)
                    })
                    .collect()
            })
            .collect();
        Specializer {
            lambda,
            q,
            scaled_log,
            steps,
        }
    }

    fn term(&self, t: &GenFunTerm, with_apex: bool) -> TermSeries {
        let s = t.b.len();
        let mut p = vec![BigInt::zero(); s + 1];
        let mut prod = BigInt::one();
        for bj in &t.b {
            let beta = dot_big(bj, &self.lambda);
            assert!(!beta.is_zero(), "pairing with a denominator vanished");
            prod *= &beta;
            let x = -beta;
            let mut pow = x.clone();
            for pk in p.iter_mut().skip(1) {
                *pk += &pow;
                pow *= &x;
            }
        }
        let a = dot_big(&t.a, &self.lambda);
        let (v, alpha) = if with_apex {
            let v = dot_big(&t.v, &self.lambda);
            let alpha = &a - &v;
            (v, alpha)
        } else {
            (BigInt::zero(), a)
        };
        let tk: Vec<BigInt> = (0..=s)
            .map(|k| {
                let mut c = &self.scaled_log[k] * &p[k];
                if k == 1 {
                    c += &self.q * &alpha;
                }
                c
            })
            .collect();
        let mut f = Vec::with_capacity(s + 1);
        f.push(BigInt::one());
        for n in 1..=s {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                if !tk[k].is_zero() && !f[n - k].is_zero() {
                    acc += &tk[k] * &f[n - k] * &self.steps[n][k];
                }
            }
            f.push(acc);
        }
        let denom = if s.is_multiple_of(2) == (t.sign > 0) {
            prod
        } else {
            -prod
        };
        TermSeries { denom, v, f }
    }

    /// `e_n = F_n / (n! Q^n)`.
    fn e_denominator(&self, n: usize) -> BigInt {
        factorial(n as u64) * num_traits::pow(self.q.clone(), n)
    }
}

/// Number of lattice points of the polytope whose generating function is `g`.
pub fn count(g: &GenFun) -> BigInt {
    let sp = Specializer::new(g);
    let mut by_s: Vec<Rat> = Vec::new();
    for t in &g.terms {
        let s = t.b.len();
        let ts = sp.term(t, false);
        if by_s.len() <= s {
            by_s.resize(s + 1, Rat::zero());
        }
        by_s[s] += Rat::new(ts.f[s].clone(), ts.denom);
    }
    let total: Rat = by_s
        .into_iter()
        .enumerate()
        .map(|(s, x)| x / Rat::from_integer(sp.e_denominator(s)))
        .sum();
    rat_to_bigint(&total).unwrap_or_else(|| panic!("non-integral lattice point count {total}"))
}

/// `i(P, k)` with the convention `i(P, 0) = 1`.
pub fn count_dilation(g: &GenFun, k: i64) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    count(&dilate(g, k).expect("k >= 1"))
}

/// Ehrhart polynomial from the parametric generating function.
pub fn ehrhart_polynomial(g: &GenFun) -> RationalPolynomial {
    if g.terms.is_empty() {
        return RationalPolynomial::zero();
    }
    let smax = g.terms.iter().map(|t| t.b.len()).max().unwrap_or(0);
    let mut acc = EhrhartAccumulator {
        sp: Specializer::new(g),
        acc: vec![Vec::new(); smax + 1],
        dim: g.dim,
        terms: 0,
    };
    for t in &g.terms {
        acc.add(t);
    }
    acc.finish()
}

/// Sums term contributions to the Ehrhart polynomial one at a time, so the
/// generating function never has to be held in memory as a whole.
pub struct EhrhartAccumulator {
    sp: Specializer,
    // acc[s][m] = sum over terms with s rays of v^m F_{s-m} / denom
    acc: Vec<Vec<Rat>>,
    dim: usize,
    terms: usize,
}

impl EhrhartAccumulator {
    /// `lambda` must pair nonzero with every denominator exponent that will be
    /// added; terms may have at most `smax` rays.
    pub fn new(lambda: Vec<BigInt>, smax: usize, dim: usize) -> Self {
        EhrhartAccumulator {
            sp: Specializer::with_lambda(lambda, smax),
            acc: vec![Vec::new(); smax + 1],
            dim,
            terms: 0,
        }
    }

    pub fn add(&mut self, t: &GenFunTerm) {
        let s = t.b.len();
        assert!(s < self.acc.len(), "term has more rays than planned");
        let ts = self.sp.term(t, true);
        let row = &mut self.acc[s];
        if row.is_empty() {
            *row = vec![Rat::zero(); s + 1];
        }
        let mut vpow = BigInt::one();
        for m in 0..=s {
            if m > 0 {
                vpow *= &ts.v;
            }
            if vpow.is_zero() {
                break;
            }
            row[m] += Rat::new(&vpow * &ts.f[s - m], ts.denom.clone());
        }
        self.terms += 1;
    }

    pub fn terms(&self) -> usize {
        self.terms
    }

    pub fn finish(self) -> RationalPolynomial {
        if self.terms == 0 {
            return RationalPolynomial::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.acc.len()];
        for (s, row) in self.acc.iter().enumerate() {
            for (m, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let d = self.sp.e_denominator(s - m) * factorial(m as u64);
                coeffs[m] += x / Rat::from_integer(d);
            }
        }
        for (m, c) in coeffs.iter().enumerate().skip(self.dim + 1) {
            assert!(
                c.is_zero(),
                "coefficient of k^{m} must vanish above the dimension, got {c}"
            );
        }
        RationalPolynomial::new(coeffs)
    }
}

/// Ehrhart polynomial of a polytope, decomposing one vertex at a time and
/// discarding each vertex's cones once their terms are accumulated. Returns
/// the polynomial and the number of generating-function terms.
pub fn ehrhart_streaming(
    spec: &PolytopeSpec,
    opts: &PipelineOptions,
) -> Result<(RationalPolynomial, usize), GenFunError> {
    let vs = enumerate_vertices_with(spec, opts.adjacency, &opts.budget)?;
    let mut rays: Vec<IntVec> = (0..vs.len())
        .flat_map(|i| {
            let vs = &vs;
            vs.adjacency[i]
                .iter()
                .map(move |&j| primitive(&sub(&vs.vertices[j], &vs.vertices[i])))
        })
        .collect();
    rays.sort();
    rays.dedup();
    let refs: Vec<&[i64]> = rays.iter().map(Vec::as_slice).collect();
    let lambda = find_lambda(&refs, vs.ambient_dim());
    let mut acc = EhrhartAccumulator::new(lambda, vs.dim, vs.dim);
    let cone_opts = ConeOptions {
        visibility: opts.visibility,
    };
    for i in 0..vs.len() {
        let vc = decompose_vertex(&vs, i, &cone_opts)?;
        for piece in &vc.half_open {
            acc.add(&unimodular_term(piece));
        }
    }
    let terms = acc.terms();
    Ok((acc.finish(), terms))
}

#[cfg(test)]
mod tests;
