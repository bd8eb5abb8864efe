use num_bigint::BigInt;
use num_traits::Zero;

use super::ring::ExactInt;
use super::MathError;

/// Rectangular big-integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::from(1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, MathError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(MathError::Dimension("ragged rows".into()));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<i64>]) -> Result<Self, MathError> {
        let m = Self::from_rows(cols)?;
        Ok(m.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, MathError> {
        if self.cols != other.rows {
            return Err(MathError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    fn to_grid(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> Result<BigInt, MathError> {
        if self.rows != self.cols {
            return Err(MathError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(bareiss_det(self.to_grid()).expect("BigInt elimination cannot overflow"))
    }

    pub fn rank(&self) -> usize {
        bareiss_rank(self.to_grid()).expect("BigInt elimination cannot overflow")
    }

    /// Solves `self * X = rhs` for square nonsingular `self`.
    ///
    /// Returns `(d, Y)` with `X = Y / d` and `d = ±det(self)`; `None` when
    /// `self` is singular.
    pub fn solve_scaled(&self, rhs: &IntMatrix) -> Result<Option<(BigInt, IntMatrix)>, MathError> {
        if self.rows != self.cols {
            return Err(MathError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if rhs.rows != self.rows {
            return Err(MathError::Dimension("right-hand side height".into()));
        }
        let n = self.rows;
        let grid: Vec<Vec<BigInt>> = (0..n)
            .map(|i| self.row(i).iter().chain(rhs.row(i)).cloned().collect())
            .collect();
        let solved = bareiss_gauss_jordan(grid, n).expect("BigInt elimination cannot overflow");
        Ok(solved.map(|(d, x)| {
            let mut y = IntMatrix::zeros(n, rhs.cols);
            for (i, row) in x.into_iter().enumerate() {
                for (j, v) in row.into_iter().enumerate() {
                    y.set(i, j, v);
                }
            }
            (d, y)
        }))
    }

    /// `det(self) * self^{-1}`, i.e. the adjugate, together with the determinant.
    pub fn adjugate(&self) -> Result<Option<(BigInt, IntMatrix)>, MathError> {
        let det = self.det()?;
        if num_traits::Zero::is_zero(&det) {
            return Ok(None);
        }
        let (d, y) = self
            .solve_scaled(&IntMatrix::identity(self.rows))?
            .expect("nonsingular");
        // y / d = inverse, so adjugate = det * y / d
        let mut adj = IntMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                adj.set(i, j, &det * y.get(i, j) / &d);
            }
        }
        Ok(Some((det, adj)))
    }
}

fn bareiss_det<T: ExactInt>(mut m: Vec<Vec<T>>) -> Option<BigInt> {
    let n = m.len();
    if n == 0 {
        return Some(BigInt::from(1));
    }
    let mut sign = 1;
    let mut prev = T::from_i64(1);
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Some(BigInt::zero());
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = T::mul_sub_div(&m[k][k], &m[i][j], &m[i][k], &m[k][j], &prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].to_big();
    Some(if sign < 0 { -d } else { d })
}

fn bareiss_rank<T: ExactInt>(mut m: Vec<Vec<T>>) -> Option<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = T::from_i64(1);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        for i in r + 1..rows {
            for j in c + 1..cols {
                m[i][j] = T::mul_sub_div(&m[r][c], &m[i][j], &m[i][c], &m[r][j], &prev)?;
            }
            m[i][c] = T::from_i64(0);
        }
        prev = m[r][c].clone();
        r += 1;
    }
    Some(r)
}

/// Fraction-free Gauss-Jordan on an `n x (n + extra)` grid. Returns the final
/// pivot `d` and the scaled right block `d * A^{-1} B`.
fn bareiss_gauss_jordan<T: ExactInt>(
    mut m: Vec<Vec<T>>,
    n: usize,
) -> Option<Option<(BigInt, Vec<Vec<BigInt>>)>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = T::from_i64(1);
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Some(None);
        };
        m.swap(p, k);
        for i in 0..n {
            if i == k {
                continue;
            }
            for j in 0..cols {
                if j == k {
                    continue;
                }
                m[i][j] = T::mul_sub_div(&m[k][k], &m[i][j], &m[i][k], &m[k][j], &prev)?;
            }
            m[i][k] = T::from_i64(0);
        }
        prev = m[k][k].clone();
    }
    // Row k now reads d_k * e_k | (scaled rhs) where rows above the last pivot
    // still carry their own pivot; bring every row to the common factor `prev`.
    let d = prev.to_big();
    let mut out = Vec::with_capacity(n);
    for (k, row) in m.iter().enumerate() {
        let dk = row[k].to_big();
        let scaled: Vec<BigInt> = row[n..].iter().map(|v| v.to_big() * &d / &dk).collect();
        out.push(scaled);
    }
    Some(Some((d, out)))
}

fn to_i128_grid(rows: &[Vec<i64>]) -> Vec<Vec<i128>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect()
}

fn to_big_grid(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Determinant of a small integer matrix; `i128` first, `BigInt` on overflow.
pub fn det_i64(rows: &[Vec<i64>]) -> Result<BigInt, MathError> {
    if rows.iter().any(|r| r.len() != rows.len()) {
        return Err(MathError::NotSquare {
            rows: rows.len(),
            cols: rows.first().map_or(0, Vec::len),
        });
    }
    Ok(bareiss_det(to_i128_grid(rows))
        .or_else(|| bareiss_det(to_big_grid(rows)))
        .expect("BigInt elimination cannot overflow"))
}

/// Rank of a family of integer vectors (given as rows).
pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    bareiss_rank(to_i128_grid(rows))
        .or_else(|| bareiss_rank(to_big_grid(rows)))
        .expect("BigInt elimination cannot overflow")
}

/// `(d, d * inverse)` for a nonsingular square matrix in machine integers
/// (`i64`, then `i128`); `d` is `± det`. `None` when singular or on overflow.
pub fn scaled_inverse_i128(rows: &[Vec<i64>]) -> Option<(i128, Vec<Vec<i128>>)> {
    if let Some(Some((d, inv))) = scaled_inverse_in::<i64>(rows) {
        let widen = inv
            .into_iter()
            .map(|r| r.into_iter().map(i128::from).collect())
            .collect();
        return Some((i128::from(d), widen));
    }
    scaled_inverse_in::<i128>(rows)?
}

trait MachineInt: Copy + Eq + From<i8> + std::ops::Div<Output = Self> {
    fn from_i64(x: i64) -> Option<Self>;
    fn checked_mul(self, o: Self) -> Option<Self>;
    fn checked_sub(self, o: Self) -> Option<Self>;
}

macro_rules! machine_int {
    ($t:ty) => {
        impl MachineInt for $t {
            fn from_i64(x: i64) -> Option<Self> {
                <$t>::try_from(x).ok()
            }
            fn checked_mul(self, o: Self) -> Option<Self> {
                <$t>::checked_mul(self, o)
            }
            fn checked_sub(self, o: Self) -> Option<Self> {
                <$t>::checked_sub(self, o)
            }
        }
    };
}
machine_int!(i64);
machine_int!(i128);

/// Outer `None` on overflow, inner `None` when singular.
#[allow(clippy::type_complexity)]
fn scaled_inverse_in<T: MachineInt>(rows: &[Vec<i64>]) -> Option<Option<(T, Vec<Vec<T>>)>> {
    let n = rows.len();
    let zero = T::from(0);
    let mut m: Vec<Vec<T>> = Vec::with_capacity(n);
    for (i, r) in rows.iter().enumerate() {
        let mut row = Vec::with_capacity(2 * n);
        for &x in r {
            row.push(T::from_i64(x)?);
        }
        row.extend((0..n).map(|j| T::from(i8::from(i == j))));
        m.push(row);
    }
    let cols = 2 * n;
    let mut prev = T::from(1);
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| m[i][k] != zero) else {
            return Some(None);
        };
        m.swap(p, k);
        let pivot_row = m[k].clone();
        let pkk = pivot_row[k];
        for (i, row) in m.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let f = row[k];
            for j in 0..cols {
                if j == k {
                    continue;
                }
                let a = pkk.checked_mul(row[j])?;
                row[j] = if f == zero {
                    a
                } else {
                    a.checked_sub(f.checked_mul(pivot_row[j])?)?
                } / prev;
            }
            row[k] = zero;
        }
        prev = pkk;
    }
    let d = prev;
    let mut out = Vec::with_capacity(n);
    for (k, row) in m.iter().enumerate() {
        let dk = row[k];
        let mut scaled = Vec::with_capacity(n);
        for &v in &row[n..] {
            scaled.push(v.checked_mul(d)? / dk);
        }
        out.push(scaled);
    }
    Some(Some((d, out)))
}

/// Determinant and adjugate (`det * inverse`) of a square integer matrix;
/// `None` when singular.
pub fn adjugate_i64(rows: &[Vec<i64>]) -> Result<Option<(BigInt, Vec<Vec<BigInt>>)>, MathError> {
    let n = rows.len();
    let det = det_i64(rows)?;
    if Zero::is_zero(&det) {
        return Ok(None);
    }
    let widen = |r: &Vec<i64>, i: usize| -> Vec<i64> {
        r.iter()
            .copied()
            .chain((0..n).map(|j| i64::from(i == j)))
            .collect()
    };
    let grid: Vec<Vec<i64>> = rows.iter().enumerate().map(|(i, r)| widen(r, i)).collect();
    let (d, scaled) = bareiss_gauss_jordan(to_i128_grid(&grid), n)
        .or_else(|| bareiss_gauss_jordan(to_big_grid(&grid), n))
        .expect("BigInt elimination cannot overflow")
        .expect("nonsingular");
    let adj = scaled
        .into_iter()
        .map(|row| row.into_iter().map(|v| v * &det / &d).collect())
        .collect();
    Ok(Some((det, adj)))
}
