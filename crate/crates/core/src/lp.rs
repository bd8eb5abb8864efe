//! Exact linear programming in standard form
//! `maximize c·x subject to A x = b, x >= 0`.
//!
//! Two-phase primal simplex with Bland's rule on an integer-preserving
//! (fraction-free) tableau: every row shares the denominator `D`, the last
//! pivot, and every pivot divides exactly by the previous one. The tableau is
//! first run in `i128`; if any intermediate overflows, the whole solve is
//! repeated in `BigInt`.

use std::cmp::Ordering;

use num_bigint::BigInt;

use crate::exactmath::{ExactInt, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rat, x: Vec<Rat> },
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }
}

#[derive(Debug, Clone)]
pub struct LinearProgram {
    a: Vec<Vec<BigInt>>,
    b: Vec<BigInt>,
    c: Vec<BigInt>,
}

impl LinearProgram {
    pub fn new(a: Vec<Vec<BigInt>>, b: Vec<BigInt>, c: Vec<BigInt>) -> Self {
        let cols = c.len();
        assert!(
            a.iter().all(|r| r.len() == cols),
            "constraint width must match objective"
        );
        assert_eq!(a.len(), b.len(), "one right-hand side per row");
        LinearProgram { a, b, c }
    }

    pub fn from_i64(a: &[Vec<i64>], b: &[i64], c: &[i64]) -> Self {
        let big = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        Self::new(a.iter().map(|r| big(r)).collect(), big(b), big(c))
    }

    /// Feasibility of `{x >= 0 : A x = b}`.
    pub fn feasibility(a: &[Vec<i64>], b: &[i64]) -> bool {
        let cols = a.first().map_or(0, Vec::len);
        Self::from_i64(a, b, &vec![0; cols]).solve().is_feasible()
    }

    pub fn solve(&self) -> LpOutcome {
        simplex::<i128>(self)
            .unwrap_or_else(|| simplex::<BigInt>(self).expect("BigInt simplex cannot overflow"))
    }
}

struct Tableau<T> {
    rows: Vec<Vec<T>>,
    // phase-one and phase-two objective rows: objective = -rhs/D + Σ d_j x_j
    phase1: Vec<T>,
    phase2: Vec<T>,
    basis: Vec<usize>,
    denom: T,
    width: usize,
}

impl<T: ExactInt> Tableau<T> {
    fn rhs(&self) -> usize {
        self.width - 1
    }

    fn pivot(&mut self, r: usize, c: usize) -> Option<()> {
        let p = self.rows[r][c].clone();
        debug_assert!(p.signum() > 0);
        let pivot_row = self.rows[r].clone();
        let d = self.denom.clone();
        let update = |row: &mut Vec<T>| -> Option<()> {
            let factor = row[c].clone();
            if factor.is_zero() {
                if p.signum() != d.signum() || !is_unit_ratio(&p, &d) {
                    for v in row.iter_mut() {
                        *v = T::mul_sub_div(&p, v, &factor, &factor, &d)?;
                    }
                }
                return Some(());
            }
            for (j, v) in row.iter_mut().enumerate() {
                *v = T::mul_sub_div(&p, v, &factor, &pivot_row[j], &d)?;
            }
            Some(())
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                update(row)?;
            }
        }
        update(&mut self.phase1)?;
        update(&mut self.phase2)?;
        self.denom = p;
        self.basis[r] = c;
        Some(())
    }

    /// Runs Bland's rule on the given objective row over columns `< allowed`.
    fn optimize(&mut self, phase_one: bool, allowed: usize) -> Option<bool> {
        loop {
            let obj = if phase_one {
                &self.phase1
            } else {
                &self.phase2
            };
            let Some(enter) = (0..allowed).find(|&j| obj[j].signum() < 0) else {
                return Some(true);
            };
            let rhs = self.rhs();
            let mut leave: Option<usize> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][enter].signum() <= 0 {
                    continue;
                }
                leave = match leave {
                    None => Some(i),
                    Some(k) => {
                        // ratio_i = rhs_i / a_i ; compare rhs_i * a_k with rhs_k * a_i
                        let ord = T::cmp_products(
                            &self.rows[i][rhs],
                            &self.rows[k][enter],
                            &self.rows[k][rhs],
                            &self.rows[i][enter],
                        )?;
                        match ord {
                            Ordering::Less => Some(i),
                            Ordering::Equal if self.basis[i] < self.basis[k] => Some(i),
                            _ => Some(k),
                        }
                    }
                };
            }
            let Some(r) = leave else {
                return Some(false);
            };
            self.pivot(r, enter)?;
        }
    }
}

fn is_unit_ratio<T: ExactInt>(p: &T, d: &T) -> bool {
    p.to_big() == d.to_big()
}

fn simplex<T: ExactInt>(lp: &LinearProgram) -> Option<LpOutcome> {
    let m = lp.a.len();
    let n = lp.c.len();
    let width = n + m + 1;
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let flip = lp.b[i].sign() == num_bigint::Sign::Minus;
        let mut row = Vec::with_capacity(width);
        for v in &lp.a[i] {
            let t = T::from_big(v)?;
            row.push(if flip { t.neg() } else { t });
        }
        for k in 0..m {
            row.push(T::from_i64(i64::from(k == i)));
        }
        let rhs = T::from_big(&lp.b[i])?;
        row.push(if flip { rhs.neg() } else { rhs });
        rows.push(row);
    }
    let mut phase1 = vec![T::from_i64(0); width];
    for row in &rows {
        for j in 0..n {
            phase1[j] = phase1[j].add(&row[j].neg())?;
        }
        phase1[width - 1] = phase1[width - 1].add(&row[width - 1].neg())?;
    }
    let mut phase2 = vec![T::from_i64(0); width];
    for j in 0..n {
        phase2[j] = T::from_big(&lp.c[j])?.neg();
    }
    let mut t = Tableau {
        rows,
        phase1,
        phase2,
        basis: (n..n + m).collect(),
        denom: T::from_i64(1),
        width,
    };

    t.optimize(true, n)?;
    if !t.phase1[width - 1].is_zero() {
        return Some(LpOutcome::Infeasible);
    }
    // drive zero-valued artificials out of the basis
    for r in 0..m {
        if t.basis[r] < n {
            continue;
        }
        if let Some(j) = (0..n).find(|&j| !t.rows[r][j].is_zero()) {
            if t.rows[r][j].signum() < 0 {
                for v in t.rows[r].iter_mut() {
                    *v = v.neg();
                }
            }
            t.pivot(r, j)?;
        }
    }
    if !t.optimize(false, n)? {
        return Some(LpOutcome::Unbounded);
    }
    let d = t.denom.to_big();
    let mut x = vec![Rat::from_integer(0.into()); n];
    for (r, &bv) in t.basis.iter().enumerate() {
        if bv < n {
            x[bv] = Rat::new(t.rows[r][width - 1].to_big(), d.clone());
        }
    }
    let value = Rat::new(t.phase2[width - 1].to_big(), d);
    Some(LpOutcome::Optimal { value, x })
}
